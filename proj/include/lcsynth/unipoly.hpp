#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcsynth/rational.hpp"

namespace lcs {

/// Exact univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is
/// nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  UniPoly derivative() const;
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(unsigned k) const;
  UniPoly monic() const;
  /// p(-x)
  UniPoly reflect() const;
  bool is_even() const;
  bool is_odd() const;

  std::vector<double> to_double() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Horner evaluation of ascending double coefficients.
inline double horner(std::span<const double> c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Coefficient list in the text format, e.g. ["1", "0", "-1"].
std::vector<std::string> to_strings(const UniPoly& p);
UniPoly parse_unipoly(std::span<const std::string> coeffs);
/// Human-readable form such as "1 - x^2".
std::string to_pretty(const UniPoly& p, char var = 'x');

}  // namespace lcs
