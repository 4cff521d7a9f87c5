#include "lcsynth/roots.hpp"

#include <algorithm>
#include <functional>

namespace lcs {

EndpointIsRoot::EndpointIsRoot(const Rational& at)
    : std::domain_error("interval endpoint " + to_string(at) + " is a root"), where_(at) {}

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  if (p.is_constant()) return;
  chain_.push_back(p.derivative());
  while (true) {
    UniPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    const Rational scale = abs(r.leading());
    r *= Rational(-1) / scale;
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain_) {
    const int sg = sgn(s(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (base()(lo) == 0) throw EndpointIsRoot(lo);
  if (base()(hi) == 0) throw EndpointIsRoot(hi);
  if (lo >= hi) return 0;
  return variations(lo) - variations(hi);
}

int SturmSequence::count_all() const {
  int at_neg = 0, at_pos = 0, last_neg = 0, last_pos = 0;
  for (const auto& s : chain_) {
    const int lead = sgn(s.leading());
    const int pos = lead;
    const int neg = (s.degree() % 2 == 0) ? lead : -lead;
    if (last_pos != 0 && pos != last_pos) ++at_pos;
    if (last_neg != 0 && neg != last_neg) ++at_neg;
    last_pos = pos;
    last_neg = neg;
  }
  return at_neg - at_pos;
}

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  return SturmSequence(p).count(lo, hi);
}

Rational default_root_width() {
  Rational w(1);
  mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), 40);
  w.canonicalize();
  return w;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_constant()) return p;
  return divmod(p, gcd(p, p.derivative())).first;
}

Rational cauchy_bound(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
  Rational b = m + 1;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  return Rational(c);
}

namespace {

// Halves eps until (m - eps, m + eps) holds only the root m and its ends
// are non-roots.
Rational isolating_radius(const SturmSequence& s, const Rational& m, Rational eps) {
  const UniPoly& p = s.base();
  while (true) {
    const Rational a = m - eps, b = m + eps;
    if (p(a) != 0 && p(b) != 0 && s.count(a, b) == 1) return eps;
    eps /= 2;
  }
}

void isolate_rec(const SturmSequence& s, Rational lo, Rational hi, int count, const Rational& width,
                 std::vector<RootEnclosure>& out) {
  const UniPoly& p = s.base();
  while (true) {
    if (count == 0) return;
    if (count == 1 && hi - lo <= width) {
      out.push_back(RootEnclosure{lo, hi, true, std::nullopt});
      return;
    }
    const Rational m = (lo + hi) / 2;
    if (p(m) == 0) {
      Rational eps = std::min<Rational>({Rational(width / 2), Rational((m - lo) / 2), Rational((hi - m) / 2)});
      eps = isolating_radius(s, m, eps);
      const Rational a = m - eps, b = m + eps;
      const int left = s.count(lo, a);
      isolate_rec(s, lo, a, left, width, out);
      out.push_back(RootEnclosure{a, b, true, m});
      lo = b;
      count = count - left - 1;
      continue;
    }
    const int left = s.count(lo, m);
    if (left > 0) isolate_rec(s, lo, m, left, width, out);
    lo = m;
    count -= left;
  }
}

void mark_multiplicities(const UniPoly& p, std::vector<RootEnclosure>& roots) {
  const UniPoly d = gcd(p, p.derivative());
  if (d.degree() < 1) return;
  const SturmSequence ds(d);
  for (auto& r : roots) {
    r.multiplicity_is_one = r.exact ? d(*r.exact) != 0 : ds.count(r.lo, r.hi) == 0;
  }
}

}  // namespace

std::vector<RootEnclosure> isolate_real_roots_in(const UniPoly& p, const Rational& lo, const Rational& hi,
                                                 const Rational& width) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  if (width <= 0) throw std::invalid_argument("isolation width must be positive");
  std::vector<RootEnclosure> out;
  if (p.is_constant()) return out;
  const UniPoly sq = squarefree_part(p);
  const SturmSequence s(sq);
  isolate_rec(s, lo, hi, s.count(lo, hi), width, out);
  mark_multiplicities(p, out);
  return out;
}

std::vector<RootEnclosure> isolate_real_roots(const UniPoly& p, const Rational& width) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  if (p.is_constant()) return {};
  const Rational b = cauchy_bound(p);
  return isolate_real_roots_in(p, -b, b, width);
}

RootEnclosure refine_root(const UniPoly& p, RootEnclosure e, const Rational& width) {
  if (e.exact) {
    if (e.width() > width) {
      const Rational eps = isolating_radius(SturmSequence(squarefree_part(p)), *e.exact,
                                            std::min(width / 2, e.width() / 2));
      e.lo = *e.exact - eps;
      e.hi = *e.exact + eps;
    }
    return e;
  }
  const UniPoly sq = squarefree_part(p);
  int s_lo = sgn(sq(e.lo));
  while (e.hi - e.lo > width) {
    const Rational m = (e.lo + e.hi) / 2;
    const int sm = sgn(sq(m));
    if (sm == 0) {
      e.exact = m;
      return refine_root(p, e, width);
    }
    if (sm == s_lo) {
      e.lo = m;
    } else {
      e.hi = m;
    }
    s_lo = sgn(sq(e.lo));
  }
  return e;
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational_in(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational_in(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  mpz_class fh;
  mpz_fdiv_q(fh.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  if (fl < fh) return Rational(fl + 1);
  const Rational inner = simplest_rational_in(1 / Rational(hi - fl), 1 / Rational(lo - fl));
  return Rational(fl) + 1 / inner;
}

std::optional<Rational> exact_root(const UniPoly& p, const RootEnclosure& e) {
  if (e.exact) return e.exact;
  Rational c = simplest_rational_in(e.lo, e.hi);
  if (p(c) == 0) return c;
  return std::nullopt;
}

int compare_root(const UniPoly& p, const RootEnclosure& e, const Rational& x) {
  if (e.exact) return sgn(*e.exact - x);
  if (x < e.lo) return 1;
  if (x > e.hi) return -1;
  const UniPoly sq = squarefree_part(p);
  const int sx = sgn(sq(x));
  if (sx == 0) return 0;
  // Root lies in (lo, x) exactly when sq changes sign there.
  return sgn(sq(e.lo)) != sx ? -1 : 1;
}

int compare_roots(const UniPoly& pa, const RootEnclosure& a, const UniPoly& pb, const RootEnclosure& b) {
  if (a.exact && b.exact) return sgn(*a.exact - *b.exact);
  if (a.exact) return -compare_root(pb, b, *a.exact);
  if (b.exact) return compare_root(pa, a, *b.exact);
  const UniPoly g = gcd(pa, pb);
  RootEnclosure ea = a, eb = b;
  while (true) {
    if (ea.hi < eb.lo) return -1;
    if (eb.hi < ea.lo) return 1;
    if (g.degree() >= 1) {
      // A common root inside both enclosures is the enclosed root of each.
      const Rational lo = std::max(ea.lo, eb.lo), hi = std::min(ea.hi, eb.hi);
      if (g(lo) == 0 || g(hi) == 0 || sturm_count(g, lo, hi) > 0) return 0;
    }
    ea = refine_root(pa, ea, ea.width() / 2);
    eb = refine_root(pb, eb, eb.width() / 2);
    if (ea.exact || eb.exact) return compare_roots(pa, ea, pb, eb);
  }
}

}  // namespace lcs
