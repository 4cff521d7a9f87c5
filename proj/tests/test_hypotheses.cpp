#include <doctest.h>

#include "lcsynth/hypotheses.hpp"
#include "lcsynth/synthesis.hpp"
#include "support.hpp"

using namespace lcs;
using namespace testing;

namespace {

bool contains(const RootEnclosure& e, const UniPoly& p, long value) { return compare_root(p, e, R(value)) == 0; }

void check_samples(const UniPoly& p, const UniPoly& q, const Band& b) {
  const UniPoly pq2m1 = p * q * q - C(1), dq = q.derivative();
  int violations = 0;
  for (int i = 1; i <= 1000; ++i) {
    const Rational t = b.inner_lo + (b.inner_hi - b.inner_lo) * Rational(i, 1001);
    if (p(t) <= 0 || pq2m1(t) >= 0 || dq(t) == 0) ++violations;
  }
  CHECK(violations == 0);
}

}  // namespace

TEST_CASE("band discovery") {
  auto one = find_bands(unit_band());
  REQUIRE(one.size() == 1);
  CHECK(contains(one[0].left, unit_band(), -1));
  CHECK(contains(one[0].right, unit_band(), 1));
  CHECK(one[0].contains_origin);

  auto three = find_bands(three_cycle_p());
  REQUIRE(three.size() == 3);
  const long ends[3][2] = {{-3, -2}, {-1, 1}, {2, 3}};
  for (int i = 0; i < 3; ++i) {
    CHECK(contains(three[static_cast<std::size_t>(i)].left, three_cycle_p(), ends[i][0]));
    CHECK(contains(three[static_cast<std::size_t>(i)].right, three_cycle_p(), ends[i][1]));
    CHECK(three[static_cast<std::size_t>(i)].contains_origin == (i == 1));
  }
  // p is positive at the midpoints -5/2, 0, 5/2
  CHECK(three_cycle_p()(R(-5, 2)) > 0);
  CHECK(three_cycle_p()(R(0)) > 0);
  CHECK(three_cycle_p()(R(5, 2)) > 0);

  CHECK(find_bands(X() * X() + C(1)).empty());
  CHECK(find_bands(X() * X() - C(1)).empty());
}

TEST_CASE("multiple-root endpoints are rejected with a reason") {
  const UniPoly p = X() * X() * unit_band();  // double root at 0
  const BandScan scan = scan_bands(p);
  CHECK(scan.bands.empty());
  REQUIRE(scan.rejected.size() == 2);
  CHECK_FALSE(scan.rejected[0].reason.empty());
}

TEST_CASE("certificates on the worked examples") {
  const Band band = find_bands(unit_band())[0];

  const auto good = certify_band(unit_band(), X(), band);
  CHECK(good.passed());
  CHECK(good.positivity == Status::Pass);
  CHECK(good.simple_endpoints == Status::Pass);
  CHECK(good.pq2_not_one == Status::Pass);
  CHECK(good.qprime_nonzero == Status::Pass);
  CHECK(good.no_singular_points_on_oval == Status::Pass);
  CHECK(good.diagnostics.empty());
  // p q^2 = u (1 - u) with u = x^2 peaks at 1/4 on u = 1/2
  CHECK((X() * (C(1) - X()))(R(1, 2)) == R(1, 4));

  const auto bad = certify_band(unit_band(), X() + C(1), band);
  CHECK_FALSE(bad.passed());
  CHECK(bad.pq2_not_one == Status::Fail);
  bool witness_at_zero = false;
  for (const auto& d : bad.diagnostics) {
    if (d.witness && *d.witness == 0) witness_at_zero = true;
  }
  CHECK(witness_at_zero);

  const auto flat = certify_band(unit_band(), C(5), band);
  CHECK(flat.qprime_nonzero == Status::Fail);
  CHECK_FALSE(flat.passed());
  // 25 (1 - x^2) - 1 also vanishes at x^2 = 24/25
  CHECK(flat.pq2_not_one == Status::Fail);

  const auto zero_q = certify_band(unit_band(), UniPoly{}, band);
  CHECK(zero_q.qprime_nonzero == Status::Fail);
  CHECK(zero_q.orbit_conditions_pass());

  CHECK_THROWS_AS(certify_band(C(4) - X() * X(), X(), band), std::invalid_argument);
}

TEST_CASE("check over all bands") {
  const auto golden = check_theorem1(three_cycle_p(), three_cycle_q());
  REQUIRE(golden.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(golden[i].certificate.passed());
    CHECK(golden[i].literal_hypothesis == (i == 1));
  }
  const auto unit = check_theorem1(unit_band(), X());
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].certificate.passed());
  CHECK(check_theorem1(X() * X() - C(1), X()).empty());
}

TEST_CASE("q' vanishing inside the band is reported with its location") {
  const auto r = check_theorem1(unit_band(), X() * X() + X());
  REQUIRE(r.size() == 1);
  const auto& c = r[0].certificate;
  CHECK(c.qprime_nonzero == Status::Fail);
  CHECK(c.orbit_conditions_pass());
  bool at_minus_half = false;
  for (const auto& d : c.diagnostics) {
    if (d.witness && *d.witness == R(-1, 2)) at_minus_half = true;
  }
  CHECK(at_minus_half);
}

TEST_CASE("certified bands survive dense exact sampling") {
  check_samples(unit_band(), X(), check_theorem1(unit_band(), X())[0].certificate.band);
  for (const auto& br : check_theorem1(three_cycle_p(), three_cycle_q())) {
    check_samples(three_cycle_p(), three_cycle_q(), br.certificate.band);
  }
  std::mt19937_64 rng(17);
  int certified = 0;
  for (int trial = 0; trial < 200 && certified < 20; ++trial) {
    const UniPoly p = random_poly(rng, 2 + trial % 5);
    const UniPoly q = random_poly(rng, 1 + trial % 3, 3, 9);
    for (const auto& br : check_theorem1(p, q)) {
      if (!br.certificate.passed()) continue;
      ++certified;
      check_samples(p, q, br.certificate.band);
    }
  }
  CHECK(certified >= 20);
}

TEST_CASE("bands are sorted, disjoint, and cover every bordering simple root") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const UniPoly p = random_poly(rng, 2 + trial % 7);
    const auto bands = find_bands(p);
    for (std::size_t i = 0; i + 1 < bands.size(); ++i) CHECK(bands[i].right.hi <= bands[i + 1].left.lo);
    for (const auto& b : bands) {
      CHECK(b.left.hi < b.right.lo);
      CHECK(p(b.inner_midpoint()) > 0);
    }
    // a simple root with p > 0 on one side borders some band
    const auto roots = isolate_real_roots(p);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!roots[i].multiplicity_is_one) continue;
      const bool pos_left = i > 0 && roots[i - 1].multiplicity_is_one && p((roots[i - 1].hi + roots[i].lo) / 2) > 0;
      const bool pos_right =
          i + 1 < roots.size() && roots[i + 1].multiplicity_is_one && p((roots[i].hi + roots[i + 1].lo) / 2) > 0;
      if (!pos_left && !pos_right) continue;
      const bool covered = std::any_of(bands.begin(), bands.end(), [&](const Band& b) {
        return compare_roots(p, b.left, p, roots[i]) == 0 || compare_roots(p, b.right, p, roots[i]) == 0;
      });
      CHECK(covered);
    }
  }
}

TEST_CASE("shrinking enclosures never turns a pass into a fail") {
  std::mt19937_64 rng(31);
  int seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const UniPoly p = random_poly(rng, 2 + trial % 5);
    const UniPoly q = random_poly(rng, 1 + trial % 3, 3, 9);
    for (const auto& b : find_bands(p, R(1, 64))) {
      const auto coarse = certify_band(p, q, b);
      const Band fine = make_band(p, refine_root(p, b.left, R(1, 1L << 50)), refine_root(p, b.right, R(1, 1L << 50)));
      const auto tight = certify_band(p, q, fine);
      for (auto [a, z] : {std::pair{coarse.pq2_not_one, tight.pq2_not_one},
                          std::pair{coarse.qprime_nonzero, tight.qprime_nonzero},
                          std::pair{coarse.positivity, tight.positivity}}) {
        if (a == Status::Pass) CHECK(z == Status::Pass);
        if (a == Status::Fail) CHECK(z == Status::Fail);
      }
      ++seen;
    }
  }
  CHECK(seen > 30);
}

TEST_CASE("certified bands carry no singular point of the curve, rechecked from the synthesized system") {
  std::vector<std::pair<UniPoly, UniPoly>> pairs = {{unit_band(), X()}, {three_cycle_p(), three_cycle_q()}};
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) pairs.emplace_back(random_poly(rng, 2 + i % 5), random_poly(rng, 1 + i % 3, 3, 9));
  int checked = 0;
  for (const auto& [p, q] : pairs) {
    const auto sys = synthesize_theorem1({p, q});
    const UniPoly sing = sys.Q.at_y(R(0));  // p' (p q^2 - 1) up to a constant
    const UniPoly f0 = sys.curve_f.at_y(R(0));
    const UniPoly common = gcd(sing, f0);
    for (const auto& br : check_theorem1(p, q)) {
      if (!br.certificate.orbit_conditions_pass()) continue;
      const Band& b = br.certificate.band;
      ++checked;
      if (common.degree() < 1) continue;
      // closed band: the outer ends of the enclosures are not roots of p
      CHECK(sturm_count(common, b.left.lo, b.right.hi) == 0);
      for (const auto& r : isolate_real_roots_in(sing, b.left.lo, b.right.hi)) {
        if (auto ex = exact_root(sing, r)) CHECK(f0(*ex) != 0);
      }
    }
  }
  CHECK(checked >= 10);
}
