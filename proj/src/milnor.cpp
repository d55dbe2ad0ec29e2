#include "qhsing/milnor.hpp"

#include <algorithm>
#include <numeric>

#include "qhsing/cyclotomic.hpp"
#include "qhsing/exact_linalg.hpp"

namespace qhsing {

Int Spectrum::total_multiplicity() const {
  Int total = 0;
  for (const auto& e : entries) total += e.mult;
  return total;
}

bool Spectrum::contains(const Rat& alpha) const {
  for (const auto& e : entries) {
    if (e.alpha == alpha) return true;
  }
  return false;
}

const Rat& Spectrum::min() const {
  if (entries.empty()) {
    throw Error(errc::internal, "empty spectrum has no minimum");
  }
  return entries.front().alpha;
}

IntPoly CycloFactorization::expand() const {
  IntPoly out = IntPoly::one();
  for (const auto& [k, mult] : factors) {
    IntPoly phi = cyclotomic(k);
    for (Int i = 0; i < mult; ++i) out = out * phi;
  }
  return out;
}

namespace {

struct Grading {
  long d;
  std::vector<long> q;
};

Grading small_grading(const WeightSystem& w) {
  constexpr long kMaxDegree = 200000;
  long d = to_long(w.d);
  if (d <= 0 || d > kMaxDegree) {
    throw Error(errc::out_of_range,
                "grading degree too large for dense expansion: " +
                    int_str(w.d));
  }
  Grading g{d, {}};
  g.q.reserve(w.q.size());
  for (const Int& qi : w.q) g.q.push_back(to_long(qi));
  return g;
}

}  // namespace

IntPoly poincare_polynomial(const WeightSystem& w) {
  Grading g = small_grading(w);
  IntPoly num = IntPoly::one();
  IntPoly den = IntPoly::one();
  for (long qi : g.q) {
    if (qi <= 0 || qi >= g.d) {
      throw Error(errc::degenerate_weights,
                  "grading entry outside (0, d): " + std::to_string(qi));
    }
    num = num * IntPoly::one_minus_power(static_cast<int>(g.d - qi));
    den = den * IntPoly::one_minus_power(static_cast<int>(qi));
  }
  return num.divide_exact(den);
}

Int milnor_number(const WeightSystem& w) {
  Rat mu = 1;
  for (const Rat& ai : w.a) mu *= (Rat(1) / ai - 1);
  if (denominator(mu) != 1) {
    throw Error(errc::non_integer_milnor_number,
                "product of (1/a_i - 1) is not an integer: " + rat_str(mu));
  }
  return numerator(mu);
}

long milnor_top_degree(const WeightSystem& w) {
  Int s = w.d * w.nvars() - 2 * w.Q;
  if (s < 0) return 0;
  return to_long(s);
}

Spectrum spectrum(const WeightSystem& w) {
  IntPoly p = poincare_polynomial(w);
  Spectrum sp;
  for (int s = 0; s <= p.degree(); ++s) {
    const Int& c = p.coeff(s);
    if (c == 0) continue;
    Rat alpha = Rat(Int(s) + w.Q, w.d) - 1;
    sp.entries.push_back({alpha, c});
  }
  // Degrees ascend, so the spectral numbers already ascend.
  return sp;
}

CycloFactorization characteristic_polynomial(const WeightSystem& w) {
  IntPoly p = poincare_polynomial(w);
  Grading g = small_grading(w);
  long q_residue = to_long(w.Q % g.d);

  std::vector<Int> counts(g.d, Int(0));
  for (int s = 0; s <= p.degree(); ++s) {
    if (p.coeff(s) == 0) continue;
    long e = (s + q_residue) % g.d;
    counts[e] += p.coeff(s);
  }

  CycloFactorization fact;
  fact.mu = 0;
  for (long div : divisors(g.d)) {
    // Residues e with gcd(e, d) = div form the orbit of the primitive
    // (d/div)-th roots of unity; the multiplicity must be constant there.
    long k = g.d / div;
    Int mult = -1;
    for (long e = 0; e < g.d; ++e) {
      long gg = (e == 0) ? g.d : std::gcd(e, g.d);
      if (gg != div) continue;
      if (mult < 0) {
        mult = counts[e];
      } else if (counts[e] != mult) {
        throw Error(errc::galois_orbit_nonuniform,
                    "eigenvalue multiplicity varies on the orbit of order " +
                        std::to_string(k));
      }
    }
    if (mult > 0) {
      fact.factors[k] = mult;
      fact.mu += mult * euler_phi(k);
    }
  }
  if (fact.mu != p(Int(1))) {
    throw Error(errc::internal, "cyclotomic degree mismatch");
  }
  return fact;
}

namespace {

/// All exponent vectors with sum k_i q_i = s, graded-lex descending to
/// match the Poly term order.
void enumerate_degree(const std::vector<long>& q, long s, std::size_t i,
                      Monomial& scratch, std::vector<Monomial>& out) {
  if (i + 1 == q.size()) {
    if (s % q[i] == 0) {
      scratch.k[i] = static_cast<int>(s / q[i]);
      out.push_back(scratch);
      scratch.k[i] = 0;
    }
    return;
  }
  for (long c = s / q[i]; c >= 0; --c) {
    scratch.k[i] = static_cast<int>(c);
    enumerate_degree(q, s - c * q[i], i + 1, scratch, out);
  }
  scratch.k[i] = 0;
}

std::vector<Monomial> monomials_of_degree(const std::vector<long>& q, long s) {
  std::vector<Monomial> out;
  Monomial scratch{std::vector<int>(q.size(), 0)};
  enumerate_degree(q, s, 0, scratch, out);
  return out;
}

}  // namespace

std::vector<int> jacobian_quotient_dims(const Poly& p, const WeightSystem& w,
                                        long s_limit) {
  if (!is_quasihomogeneous(p, w)) {
    throw Error(errc::not_quasihomogeneous,
                "polynomial is not quasihomogeneous for the given weights");
  }
  Grading g = small_grading(w);
  const int nv = p.nvars();

  std::vector<Poly> partials;
  partials.reserve(nv);
  for (int i = 0; i < nv; ++i) partials.push_back(differentiate(p, i));

  std::vector<int> dims;
  dims.reserve(s_limit + 1);
  for (long s = 0; s <= s_limit; ++s) {
    std::vector<Monomial> basis = monomials_of_degree(g.q, s);
    if (basis.empty()) {
      dims.push_back(0);
      continue;
    }
    std::map<Monomial, int, GrlexGreater> row_of;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      row_of.emplace(basis[r], static_cast<int>(r));
    }

    // Degree-s slice of the Jacobian ideal: monomial multiples of the
    // partials. The i-th partial is quasihomogeneous of degree d - q_i.
    std::vector<std::map<int, Rat>> columns;
    for (int i = 0; i < nv; ++i) {
      if (partials[i].is_zero()) continue;
      long gen_degree = s - (g.d - g.q[i]);
      if (gen_degree < 0) continue;
      for (const Monomial& mult : monomials_of_degree(g.q, gen_degree)) {
        std::map<int, Rat> col;
        for (const auto& [m, c] : partials[i].terms()) {
          Monomial prod{std::vector<int>(nv)};
          for (int j = 0; j < nv; ++j) prod.k[j] = m.k[j] + mult.k[j];
          col[row_of.at(prod)] = c;
        }
        columns.push_back(std::move(col));
      }
    }

    int rk = 0;
    if (!columns.empty()) {
      RatMatrix mat = RatMatrix::Zero(static_cast<Eigen::Index>(basis.size()),
                                      static_cast<Eigen::Index>(columns.size()));
      for (std::size_t c = 0; c < columns.size(); ++c) {
        for (const auto& [r, v] : columns[c]) {
          mat(r, static_cast<Eigen::Index>(c)) = v;
        }
      }
      rk = rank(std::move(mat));
    }
    dims.push_back(static_cast<int>(basis.size()) - rk);
  }
  return dims;
}

bool is_isolated(const Poly& p, const WeightSystem& w) {
  Grading g = small_grading(w);
  long s_max = milnor_top_degree(w);
  long max_q = *std::max_element(g.q.begin(), g.q.end());
  std::vector<int> dims = jacobian_quotient_dims(p, w, s_max + max_q);
  for (long s = s_max + 1; s <= s_max + max_q; ++s) {
    if (dims[s] != 0) return false;
  }
  return true;
}

}  // namespace qhsing
