#pragma once

#include <iosfwd>

namespace qhsing {

/// Numerical verification suite: circle integrals, the cubic fiber
/// integral, the pointwise norm identity at sampled smooth points, pivot
/// independence, and the ray growth exponents. Deterministic (fixed
/// seed, fixed summation order). Prints one line per check; returns true
/// iff everything passed.
bool run_verification(std::ostream& out);

}  // namespace qhsing
