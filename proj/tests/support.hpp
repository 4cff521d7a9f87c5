#pragma once

#include <random>

#include "lcsynth/unipoly.hpp"

namespace testing {

using lcs::Rational;
using lcs::UniPoly;

inline UniPoly X() { return UniPoly::x(); }
inline UniPoly C(const Rational& c) { return UniPoly::constant(c); }
inline Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline UniPoly unit_band() { return C(1) - X() * X(); }  // 1 - x^2
inline UniPoly three_cycle_p() {
  const UniPoly x2 = X() * X();
  return (C(1) - x2) * (C(4) - x2) * (C(9) - x2);
}
inline UniPoly three_cycle_q() { return X() * R(1, 100); }

/// Small random rationals: numerator in [-num, num], denominator in [1, den].
inline Rational random_rational(std::mt19937_64& rng, int num = 9, int den = 5) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return R(n(rng), d(rng));
}

/// Random polynomial of exact degree `deg` (nonzero leading coefficient).
inline UniPoly random_poly(std::mt19937_64& rng, int deg, int num = 9, int den = 5) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng, num, den));
  while (deg >= 0 && c[static_cast<std::size_t>(deg)] == 0) c[static_cast<std::size_t>(deg)] = random_rational(rng, num, den);
  return UniPoly(std::move(c));
}

inline UniPoly random_odd(std::mt19937_64& rng, int max_deg) {
  std::vector<Rational> c(static_cast<std::size_t>(max_deg + 1));
  for (int i = 1; i <= max_deg; i += 2) c[static_cast<std::size_t>(i)] = random_rational(rng);
  return UniPoly(std::move(c));
}

inline UniPoly random_even_nonconstant(std::mt19937_64& rng, int max_deg) {
  std::vector<Rational> c(static_cast<std::size_t>(max_deg + 1));
  for (int i = 0; i <= max_deg; i += 2) c[static_cast<std::size_t>(i)] = random_rational(rng);
  if (c[2] == 0) c[2] = -1;
  return UniPoly(std::move(c));
}

}  // namespace testing
