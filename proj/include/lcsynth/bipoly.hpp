#pragma once

#include <map>
#include <string>
#include <utility>

#include "lcsynth/rational.hpp"
#include "lcsynth/unipoly.hpp"

namespace lcs {

/// Exact polynomial in x and y. Terms are keyed by (x-degree, y-degree);
/// zero coefficients are never stored.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, Rational>;

  BiPoly() = default;
  explicit BiPoly(TermMap terms);

  static BiPoly constant(const Rational& c);
  static BiPoly monomial(const Rational& c, int dx, int dy);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  /// Embeds p(x).
  static BiPoly in_x(const UniPoly& p);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  int degree() const;
  int degree_y() const;
  Rational coeff(int dx, int dy) const;

  BiPoly partial_x() const;
  BiPoly partial_y() const;
  /// Coefficient of y^k as a polynomial in x.
  UniPoly y_coefficient(int k) const;
  /// Restriction y = c.
  UniPoly at_y(const Rational& c) const;

  Rational operator()(const Rational& x, const Rational& y) const;
  double operator()(double x, double y) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= Rational(-1); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

/// P f_x + Q f_y - k f; zero iff f is invariant with cofactor k.
BiPoly invariance_residual(const BiPoly& P, const BiPoly& Q, const BiPoly& f, const BiPoly& k);

std::string to_pretty(const BiPoly& p);

/// Floating-point evaluator grouping terms by y-power, Horner in both
/// variables.
class BiPolyEvaluator {
 public:
  explicit BiPolyEvaluator(const BiPoly& p);
  double operator()(double x, double y) const;

 private:
  std::vector<std::vector<double>> rows_;  // rows_[k] = coefficient of y^k
};

}  // namespace lcs
