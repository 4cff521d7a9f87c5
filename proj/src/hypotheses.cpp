#include "lcsynth/hypotheses.hpp"

#include <exception>
#include <stdexcept>

namespace lcs {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Band make_band(const UniPoly& p, RootEnclosure left, RootEnclosure right) {
  Band b;
  b.inner_lo = left.hi;
  b.inner_hi = right.lo;
  b.contains_origin = p(Rational(0)) > 0 && compare_root(p, left, 0) < 0 && compare_root(p, right, 0) > 0;
  b.left = std::move(left);
  b.right = std::move(right);
  return b;
}

BandScan scan_bands(const UniPoly& p, const Rational& width) {
  BandScan scan;
  if (p.is_constant()) return scan;
  const auto roots = isolate_real_roots(p, width);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const auto& l = roots[i];
    const auto& r = roots[i + 1];
    if (p((l.hi + r.lo) / 2) <= 0) continue;
    if (!l.multiplicity_is_one || !r.multiplicity_is_one) {
      scan.rejected.push_back({l, r, "band endpoint is a multiple root of p"});
      continue;
    }
    scan.bands.push_back(make_band(p, l, r));
  }
  return scan;
}

std::vector<Band> find_bands(const UniPoly& p, const Rational& width) { return scan_bands(p, width).bands; }

bool BandCertificate::passed() const {
  return positivity == Status::Pass && simple_endpoints == Status::Pass && pq2_not_one == Status::Pass &&
         qprime_nonzero == Status::Pass && no_singular_points_on_oval == Status::Pass;
}

bool BandCertificate::orbit_conditions_pass() const {
  return positivity == Status::Pass && simple_endpoints == Status::Pass && pq2_not_one == Status::Pass &&
         no_singular_points_on_oval == Status::Pass;
}

namespace {

bool encloses_root_of(const UniPoly& p, const RootEnclosure& e) {
  if (e.exact) return p(*e.exact) == 0;
  return sgn(p(e.lo)) * sgn(p(e.hi)) < 0;
}

// Roots of c in the part of an endpoint enclosure lying inside the band,
// ignoring a root shared with p (which is the band endpoint itself).
// Returns nullopt when the enclosure is too coarse to decide.
std::optional<bool> gap_is_clean(const UniPoly& c, const UniPoly& p, const RootEnclosure& e) {
  if (c(e.lo) == 0 || c(e.hi) == 0) return std::nullopt;
  int total = sturm_count(c, e.lo, e.hi);
  if (e.exact) {
    if (c(*e.exact) == 0) --total;
  } else {
    const UniPoly g = gcd(c, p);
    if (g.degree() >= 1) total -= sturm_count(g, e.lo, e.hi);
  }
  if (total == 0) return true;
  return std::nullopt;
}

struct ConditionOutcome {
  Status status;
  std::vector<Diagnostic> diagnostics;
};

ConditionOutcome check_nonvanishing(const std::string& name, const UniPoly& c, const UniPoly& p, const Band& b) {
  if (c.is_zero()) return {Status::Fail, {{name, name + " is identically zero", std::nullopt, std::nullopt}}};
  const Rational& a = b.inner_lo;
  const Rational& z = b.inner_hi;
  for (const Rational* end : {&a, &z}) {
    if (c(*end) == 0) {
      return {Status::Fail, {{name, name + " vanishes inside the band", *end, std::nullopt}}};
    }
  }
  if (sturm_count(c, a, z) > 0) {
    ConditionOutcome out{Status::Fail, {}};
    for (auto& root : isolate_real_roots_in(c, a, z)) {
      Diagnostic d{name, name + " vanishes inside the band", exact_root(c, root), root};
      out.diagnostics.push_back(std::move(d));
    }
    return out;
  }
  const auto left = gap_is_clean(c, p, b.left);
  const auto right = gap_is_clean(c, p, b.right);
  if (!left || !right) {
    return {Status::Inconclusive,
            {{name, "a root of " + name + " lies in an endpoint enclosure", std::nullopt, std::nullopt}}};
  }
  return {Status::Pass, {}};
}

}  // namespace

BandCertificate certify_band(const UniPoly& p, const UniPoly& q, const Band& band, const CertifyOptions& opts) {
  if (!(band.left.hi < band.right.lo) || !encloses_root_of(p, band.left) || !encloses_root_of(p, band.right) ||
      p(band.inner_midpoint()) <= 0) {
    throw std::invalid_argument("band does not belong to p");
  }
  BandCertificate cert;
  Band b = band;

  cert.simple_endpoints =
      b.left.multiplicity_is_one && b.right.multiplicity_is_one ? Status::Pass : Status::Fail;
  if (cert.simple_endpoints == Status::Fail) {
    cert.diagnostics.push_back({"simple_endpoints", "band endpoint is a multiple root of p", std::nullopt, std::nullopt});
  }

  const UniPoly pq2m1 = p * q * q - UniPoly::constant(1);
  const UniPoly dq = q.derivative();
  ConditionOutcome pq2, qprime;
  for (int attempt = 0;; ++attempt) {
    pq2 = check_nonvanishing("p*q^2 - 1", pq2m1, p, b);
    qprime = check_nonvanishing("q'", dq, p, b);
    const bool settled = pq2.status != Status::Inconclusive && qprime.status != Status::Inconclusive;
    if (settled || attempt >= opts.max_retries) break;
    b = make_band(p, refine_root(p, b.left, b.left.width() / 2), refine_root(p, b.right, b.right.width() / 2));
  }
  // Sign test at the midpoint: p q^2 - 1 equals -1 at the endpoints, so with
  // no root inside it must be negative throughout.
  if (pq2.status == Status::Pass && pq2m1(b.inner_midpoint()) >= 0) {
    pq2.status = Status::Fail;
    pq2.diagnostics.push_back({"p*q^2 - 1", "p*q^2 - 1 is not negative at the band midpoint", b.inner_midpoint(),
                               std::nullopt});
  }

  const bool positive = sturm_count(p, b.inner_lo, b.inner_hi) == 0 && p(b.inner_midpoint()) > 0;
  cert.positivity = positive ? Status::Pass : Status::Fail;
  cert.pq2_not_one = pq2.status;
  cert.qprime_nonzero = qprime.status;
  for (auto* o : {&pq2, &qprime}) {
    for (auto& d : o->diagnostics) cert.diagnostics.push_back(std::move(d));
  }
  // Singular points are (a, 0) with p'(a) (p(a) q(a)^2 - 1) = 0, and
  // f(a, 0) = p(a) (p(a) q(a)^2 - 1); p > 0 inside, p = 0 at the simple
  // endpoints and p q^2 - 1 < 0 on the closed band keep f(a, 0) away from 0.
  cert.no_singular_points_on_oval =
      cert.positivity == Status::Pass && cert.simple_endpoints == Status::Pass && pq2.status == Status::Pass
          ? Status::Pass
          : Status::Fail;
  cert.band = std::move(b);
  return cert;
}

std::vector<BandReport> check_theorem1(const UniPoly& p, const UniPoly& q, const Rational& width) {
  const auto bands = find_bands(p, width);
  std::vector<BandReport> out(bands.size());
  std::exception_ptr failure;
  const auto n = static_cast<long>(bands.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto& b = bands[static_cast<std::size_t>(i)];
    try {
      out[static_cast<std::size_t>(i)] = BandReport{b, certify_band(p, q, b), b.contains_origin};
    } catch (...) {
#pragma omp critical(lcs_check_failure)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace lcs
