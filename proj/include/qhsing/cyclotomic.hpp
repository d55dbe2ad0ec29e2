#pragma once

#include <vector>

#include "qhsing/poly.hpp"

namespace qhsing {

long euler_phi(long k);

std::vector<long> divisors(long k);

/// k-th cyclotomic polynomial, computed by exact division of t^k - 1 by
/// the cyclotomics of the proper divisors of k.
IntPoly cyclotomic(long k);

/// Phi_k(1): 0 for k=1, p for prime powers p^r, 1 otherwise.
Int cyclotomic_at_one(long k);

}  // namespace qhsing
