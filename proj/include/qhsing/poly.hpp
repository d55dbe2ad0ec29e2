#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Core>

#include "qhsing/errors.hpp"
#include "qhsing/numeric.hpp"

namespace qhsing {

/// Exponent vector, one entry per variable.
struct Monomial {
  std::vector<int> k;

  int degree() const;
  bool operator==(const Monomial&) const = default;
};

/// Graded-lexicographic order: total degree first, ties lexicographic with
/// the first variable largest.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in descending graded-lex order and never store zeros,
/// so equality is structural.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexGreater>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly single(int nvars, const Monomial& m, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  void add_term(const Monomial& m, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const Rat& c) const;

  bool operator==(const Poly&) const = default;

 private:
  int nvars_ = 0;
  TermMap terms_;
};

Poly differentiate(const Poly& p, int var);

/// Evaluate at a complex point, summing terms in canonical order.
std::complex<double> evaluate(const Poly& p, const Eigen::VectorXcd& z);

/// Sum of |coefficient * z^k| over all terms; a cancellation-free scale
/// used for relative tolerances.
double term_magnitude(const Poly& p, const Eigen::VectorXcd& z);

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, index = degree.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly one();
  /// 1 - t^k (k >= 1).
  static IntPoly one_minus_power(int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of t^i; zero outside the stored range.
  const Int& coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly operator-() const;

  /// Exact division; throws Error(errc::inexact_division) if a nonzero
  /// remainder appears or the leading coefficient does not divide.
  IntPoly divide_exact(const IntPoly& den) const;

  Int operator()(const Int& x) const;

  bool is_palindromic() const;

  bool operator==(const IntPoly&) const = default;

  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Int> c_;
  void trim();
};

}  // namespace qhsing
