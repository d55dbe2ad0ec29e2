#pragma once

#include <map>
#include <vector>

#include "qhsing/poly.hpp"
#include "qhsing/weights.hpp"

namespace qhsing {

struct SpectrumEntry {
  Rat alpha;
  Int mult;

  bool operator==(const SpectrumEntry&) const = default;
};

/// Multiset of spectral numbers, ascending, multiplicities summing to the
/// Milnor number.
struct Spectrum {
  std::vector<SpectrumEntry> entries;

  Int total_multiplicity() const;
  bool contains(const Rat& alpha) const;
  const Rat& min() const;  // requires a nonempty spectrum

  bool operator==(const Spectrum&) const = default;
};

/// Monodromy characteristic polynomial as cyclotomic multiplicities:
/// Delta(t) = prod_k Phi_k(t)^{factors[k]}, deg Delta = mu.
struct CycloFactorization {
  std::map<long, Int> factors;
  Int mu;

  IntPoly expand() const;

  bool operator==(const CycloFactorization&) const = default;
};

/// Hilbert series of the graded Milnor algebra, computed as the exact
/// quotient prod_i (1 - t^(d-q_i)) / prod_i (1 - t^(q_i)). The two full
/// products are divided once; pairing factors individually can leave
/// remainders (d=18, q=(6,4,9) for example). Throws
/// errc::inexact_division on a nonzero remainder.
IntPoly poincare_polynomial(const WeightSystem& w);

/// prod_i (1/a_i - 1), reduced to an integer; equals the Poincare
/// polynomial at t=1. Throws errc::non_integer_milnor_number.
Int milnor_number(const WeightSystem& w);

/// Top degree of the graded Milnor algebra, sum_i (d - 2 q_i), clamped
/// at 0.
long milnor_top_degree(const WeightSystem& w);

/// Spectral numbers (s+Q)/d - 1 over basis degrees s, with the Poincare
/// coefficients as multiplicities.
Spectrum spectrum(const WeightSystem& w);

/// Eigenvalue exp(2 pi i (s+Q)/d) per basis monomial of degree s,
/// accumulated per residue class mod d and grouped into Galois orbits.
/// Throws errc::galois_orbit_nonuniform if the multiplicity is not
/// constant on an orbit (cannot happen for weights of an actual germ).
CycloFactorization characteristic_polynomial(const WeightSystem& w);

/// Brute-force oracle: for each weighted degree s <= s_limit, the
/// dimension of (monomials of degree s) / (degree-s slice of the
/// Jacobian ideal), by exact rational rank.
std::vector<int> jacobian_quotient_dims(const Poly& p, const WeightSystem& w,
                                        long s_limit);

/// True iff the quotient dimensions vanish on every degree in
/// (s_max, s_max + max q_i]; any higher-degree monomial is a variable
/// times a monomial in that window, so vanishing propagates upward.
bool is_isolated(const Poly& p, const WeightSystem& w);

}  // namespace qhsing
