#include "qhsing/weights.hpp"

#include <boost/multiprecision/integer.hpp>

#include "qhsing/exact_linalg.hpp"

namespace qhsing {

WeightSystem weight_system_from(std::vector<Rat> a, bool unique) {
  if (a.empty()) {
    throw Error(errc::degenerate_weights, "empty weight vector");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0 && a[i] < 1)) {
      throw Error(errc::degenerate_weights,
                  "weight a" + std::to_string(i + 1) + " = " + rat_str(a[i]) +
                      " outside (0,1)");
    }
  }
  WeightSystem w;
  w.a = std::move(a);
  w.unique = unique;
  w.d = 1;
  for (const Rat& ai : w.a) w.d = lcm(w.d, denominator(ai));
  w.q.reserve(w.a.size());
  Int g = w.d;
  for (const Rat& ai : w.a) {
    Rat qi = ai * w.d;
    w.q.push_back(numerator(qi));
    g = gcd(g, w.q.back());
  }
  // With d = lcm of the reduced denominators g is already 1; reduce anyway
  // so gradings fed in from elsewhere normalize too.
  if (g > 1) {
    w.d /= g;
    for (Int& qi : w.q) qi /= g;
  }
  w.Q = 0;
  for (const Int& qi : w.q) w.Q += qi;
  w.kappa = 0;
  for (const Rat& ai : w.a) w.kappa += ai;
  return w;
}

WeightSystem weight_system_from_grading(const Int& d,
                                        const std::vector<Int>& q) {
  if (d <= 0) {
    throw Error(errc::degenerate_weights, "grading degree must be positive");
  }
  std::vector<Rat> a;
  a.reserve(q.size());
  for (const Int& qi : q) a.emplace_back(qi, d);
  return weight_system_from(std::move(a));
}

WeightSystem find_weights(const Poly& p) {
  if (p.is_zero()) {
    throw Error(errc::not_quasihomogeneous,
                "the zero polynomial has no weight system");
  }
  const int nv = p.nvars();
  if (nv < 1) {
    throw Error(errc::not_quasihomogeneous, "no variables declared");
  }
  for (int i = 0; i < nv; ++i) {
    bool used = false;
    for (const auto& [m, c] : p.terms()) {
      if (m.k[i] > 0) {
        used = true;
        break;
      }
    }
    if (!used) {
      throw Error(errc::unused_variable,
                  "variable #" + std::to_string(i + 1) +
                      " appears in no monomial");
    }
  }

  const int rows = p.term_count();
  RatMatrix m(rows, nv);
  RatVector ones = RatVector::Constant(rows, Rat(1));
  {
    int r = 0;
    for (const auto& [mono, c] : p.terms()) {
      for (int i = 0; i < nv; ++i) m(r, i) = mono.k[i];
      ++r;
    }
  }

  LinearSolution sol = solve_linear(m, ones);
  if (!sol.consistent) {
    throw Error(errc::not_quasihomogeneous,
                "the weight equations are inconsistent");
  }

  RatVector a;
  if (sol.unique) {
    a = sol.x;
  } else {
    // Minimum-norm solution: a = M^T y with (M M^T) y = 1. The normal
    // system is consistent because 1 lies in the range of M. Products are
    // written out because Eigen's scalar-promotion SFINAE trips over the
    // multiprecision backend's container constructors.
    RatMatrix gram(rows, rows);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < rows; ++j) {
        Rat s = 0;
        for (int c = 0; c < nv; ++c) s += m(i, c) * m(j, c);
        gram(i, j) = s;
      }
    }
    LinearSolution ysol = solve_linear(gram, ones);
    if (!ysol.consistent) {
      throw Error(errc::internal, "normal equations inconsistent");
    }
    a = RatVector(nv);
    for (int c = 0; c < nv; ++c) {
      Rat s = 0;
      for (int r = 0; r < rows; ++r) s += m(r, c) * ysol.x(r);
      a(c) = s;
    }
  }

  for (const auto& [mono, c] : p.terms()) {
    Rat s = 0;
    for (int i = 0; i < nv; ++i) s += a(i) * mono.k[i];
    if (s != 1) {
      throw Error(errc::internal, "weight solution failed verification");
    }
  }
  for (int i = 0; i < nv; ++i) {
    if (!(a(i) > 0 && a(i) < 1)) {
      throw Error(errc::degenerate_weights,
                  "weight a" + std::to_string(i + 1) + " = " + rat_str(a(i)) +
                      " outside (0,1)");
    }
  }
  return weight_system_from(std::vector<Rat>(a.begin(), a.end()), sol.unique);
}

Rat newton_distance(const WeightSystem& w) { return -w.kappa; }

Rat weighted_degree(const Monomial& m, const WeightSystem& w) {
  if (static_cast<int>(m.k.size()) != w.nvars()) {
    throw Error(errc::dimension_mismatch, "monomial arity mismatch");
  }
  Rat s = 0;
  for (std::size_t i = 0; i < m.k.size(); ++i) s += w.a[i] * m.k[i];
  return s;
}

std::optional<Rat> uniform_weighted_degree(const Poly& p,
                                           const WeightSystem& w) {
  std::optional<Rat> deg;
  for (const auto& [m, c] : p.terms()) {
    Rat s = weighted_degree(m, w);
    if (!deg) {
      deg = s;
    } else if (*deg != s) {
      return std::nullopt;
    }
  }
  return deg;
}

bool is_quasihomogeneous(const Poly& p, const WeightSystem& w) {
  if (p.is_zero()) return false;
  auto deg = uniform_weighted_degree(p, w);
  return deg && *deg == 1;
}

}  // namespace qhsing
