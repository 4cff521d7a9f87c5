#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcs {

// GMP keeps mpq_class canonical: lowest terms, positive denominator.
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "a", "-a", "a/b" with decimal integers a, b and b != 0.
Rational parse_rational(std::string_view text);

/// Renders as "num" when the denominator is one, else "num/den".
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

/// Exact conversion of a finite double.
Rational from_double(double v);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace lcs
