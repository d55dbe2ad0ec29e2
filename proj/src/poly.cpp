#include "qhsing/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qhsing {

int Monomial::degree() const {
  return std::accumulate(k.begin(), k.end(), 0);
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  // Same degree: lexicographic, first variable most significant.
  return std::lexicographical_compare(a.k.begin(), a.k.end(), b.k.begin(),
                                      b.k.end());
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Monomial{std::vector<int>(nvars, 0)}, c);
  return p;
}

Poly Poly::single(int nvars, const Monomial& m, const Rat& c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(m.k.size()) != nvars_) {
    throw Error(errc::dimension_mismatch, "monomial arity mismatch");
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) {
    throw Error(errc::dimension_mismatch, "polynomial arity mismatch");
  }
  Poly r = *this;
  for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) {
    throw Error(errc::dimension_mismatch, "polynomial arity mismatch");
  }
  Poly r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m{std::vector<int>(nvars_)};
      for (int i = 0; i < nvars_; ++i) m.k[i] = ma.k[i] + mb.k[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

Poly differentiate(const Poly& p, int var) {
  if (var < 0 || var >= p.nvars()) {
    throw Error(errc::dimension_mismatch,
                "variable index out of range: " + std::to_string(var));
  }
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m.k[var] == 0) continue;
    Monomial dm = m;
    dm.k[var] -= 1;
    r.add_term(dm, c * m.k[var]);
  }
  return r;
}

namespace {

std::complex<double> cpow(std::complex<double> base, int e) {
  std::complex<double> acc(1.0, 0.0);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

std::complex<double> evaluate(const Poly& p, const Eigen::VectorXcd& z) {
  if (z.size() != p.nvars()) {
    throw Error(errc::dimension_mismatch, "evaluation point arity mismatch");
  }
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> t(to_double(c), 0.0);
    for (int i = 0; i < p.nvars(); ++i) {
      if (m.k[i] != 0) t *= cpow(z[i], m.k[i]);
    }
    acc += t;
  }
  return acc;
}

double term_magnitude(const Poly& p, const Eigen::VectorXcd& z) {
  if (z.size() != p.nvars()) {
    throw Error(errc::dimension_mismatch, "evaluation point arity mismatch");
  }
  double acc = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double t = std::abs(to_double(c));
    for (int i = 0; i < p.nvars(); ++i) {
      if (m.k[i] != 0) t *= std::pow(std::abs(z[i]), m.k[i]);
    }
    acc += t;
  }
  return acc;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.assign(coeffs.begin(), coeffs.end());
  trim();
}

IntPoly IntPoly::one() { return IntPoly{1}; }

IntPoly IntPoly::one_minus_power(int k) {
  std::vector<Int> c(k + 1);
  c[0] = 1;
  c[k] = -1;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
  static const Int zero = 0;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<Int> c(std::max(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  return *this + (-rhs);
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<Int> c(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] != 0) c[i + j] += c_[i] * rhs.c_[j];
    }
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::divide_exact(const IntPoly& den) const {
  if (den.is_zero()) {
    throw Error(errc::inexact_division, "division by the zero polynomial");
  }
  if (is_zero()) return IntPoly();
  if (degree() < den.degree()) {
    throw Error(errc::inexact_division, "quotient degree underflow");
  }
  std::vector<Int> rem = c_;
  std::vector<Int> quot(degree() - den.degree() + 1);
  const Int& lead = den.c_.back();
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    Int top = rem[i + den.degree()];
    if (top == 0) continue;
    if (top % lead != 0) {
      throw Error(errc::inexact_division, "leading coefficient does not divide");
    }
    Int f = top / lead;
    quot[i] = f;
    for (int j = 0; j <= den.degree(); ++j) rem[i + j] -= f * den.c_[j];
  }
  for (const Int& r : rem) {
    if (r != 0) throw Error(errc::inexact_division, "nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

Int IntPoly::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool IntPoly::is_palindromic() const {
  int d = degree();
  for (int i = 0; i <= d / 2; ++i) {
    if (c_[i] != c_[d - i]) return false;
  }
  return true;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? "-" : "+";
    }
    if (i == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace qhsing
