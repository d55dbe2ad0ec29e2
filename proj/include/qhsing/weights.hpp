#pragma once

#include <optional>
#include <vector>

#include "qhsing/poly.hpp"

namespace qhsing {

/// Rational weights a_i together with the reduced integer grading:
/// d is the lcm of the weight denominators, q_i = d*a_i, Q = sum q_i,
/// kappa = sum a_i = Q/d. `unique` is false when the defining linear
/// system was underdetermined and the minimum-norm solution was taken.
struct WeightSystem {
  std::vector<Rat> a;
  Int d;
  std::vector<Int> q;
  Int Q;
  Rat kappa;
  bool unique = true;

  int nvars() const { return static_cast<int>(a.size()); }
  /// Complex dimension of the hypersurface.
  int n() const { return nvars() - 1; }
};

/// Build the canonical system from weights; validates 0 < a_i < 1.
WeightSystem weight_system_from(std::vector<Rat> a, bool unique = true);

/// Build from an integer grading; the stored grading is gcd-reduced.
WeightSystem weight_system_from_grading(const Int& d,
                                        const std::vector<Int>& q);

/// Solve { sum_i k_i * a_i = 1 } over all monomials of p, exactly.
/// Underdetermined systems yield the minimum-norm solution with
/// unique=false. Throws errc::not_quasihomogeneous (inconsistent),
/// errc::degenerate_weights (some a_i outside (0,1)),
/// errc::unused_variable.
WeightSystem find_weights(const Poly& p);

/// -kappa.
Rat newton_distance(const WeightSystem& w);

Rat weighted_degree(const Monomial& m, const WeightSystem& w);

/// The common weighted degree of all terms, or nullopt if mixed.
std::optional<Rat> uniform_weighted_degree(const Poly& p,
                                           const WeightSystem& w);

/// True iff every monomial of p has weighted degree exactly 1.
bool is_quasihomogeneous(const Poly& p, const WeightSystem& w);

}  // namespace qhsing
