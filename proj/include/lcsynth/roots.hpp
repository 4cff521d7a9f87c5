#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lcsynth/rational.hpp"
#include "lcsynth/unipoly.hpp"

namespace lcs {

/// Thrown by Sturm counting when an interval endpoint is itself a root.
/// Callers are expected to move the endpoint, not to retry blindly.
class EndpointIsRoot : public std::domain_error {
 public:
  explicit EndpointIsRoot(const Rational& at);
  const Rational& where() const { return where_; }

 private:
  Rational where_;
};

/// Canonical Sturm chain of a nonzero polynomial. Each remainder is scaled
/// by a positive constant so coefficient growth stays tame.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);

  const UniPoly& base() const { return chain_.front(); }
  std::size_t length() const { return chain_.size(); }

  int variations(const Rational& x) const;
  /// Distinct real roots in (lo, hi). Both ends must be non-roots.
  int count(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots on the whole line.
  int count_all() const;

 private:
  std::vector<UniPoly> chain_;
};

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Closed interval holding exactly one real root.
struct RootEnclosure {
  Rational lo;
  Rational hi;
  bool multiplicity_is_one = true;
  /// Set when bisection landed on the root itself.
  std::optional<Rational> exact;

  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

/// 2^-40, the default isolation width.
Rational default_root_width();

/// Sorted, disjoint enclosures, one per distinct real root of p.
std::vector<RootEnclosure> isolate_real_roots(const UniPoly& p, const Rational& width = default_root_width());

/// Only the roots inside (lo, hi); lo and hi must not be roots.
std::vector<RootEnclosure> isolate_real_roots_in(const UniPoly& p, const Rational& lo, const Rational& hi,
                                                 const Rational& width = default_root_width());

/// Shrinks an enclosure of a root of p (which must change sign across it,
/// or be exact) until its width is at most `width`.
RootEnclosure refine_root(const UniPoly& p, RootEnclosure e, const Rational& width);

/// sign(root - x) for the root enclosed by e, decided exactly. p must be a
/// polynomial whose only root in e is the enclosed one and which changes
/// sign across it.
int compare_root(const UniPoly& p, const RootEnclosure& e, const Rational& x);

/// The rational with the smallest denominator (then numerator) in [lo, hi].
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

/// Returns the enclosed root when it is a rational that the enclosure
/// already pins down: the exact field, or the simplest rational in the
/// enclosure if p vanishes there.
std::optional<Rational> exact_root(const UniPoly& p, const RootEnclosure& e);

/// Orders two real algebraic numbers, each the unique root of its polynomial
/// in its enclosure: -1, 0 or 1 for a < b, a = b, a > b.
int compare_roots(const UniPoly& pa, const RootEnclosure& a, const UniPoly& pb, const RootEnclosure& b);

/// Squarefree part p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);

/// Largest root-magnitude bound 1 + max |a_i / a_n|, rounded up to an integer.
Rational cauchy_bound(const UniPoly& p);

}  // namespace lcs
