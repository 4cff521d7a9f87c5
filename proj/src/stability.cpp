#include "lcsynth/stability.hpp"

#include <algorithm>
#include <cmath>

namespace lcs {

const char* to_string(StabilityClass c) { return c == StabilityClass::Stable ? "stable" : "unstable"; }

namespace {

double endpoint_value(const UniPoly& p, const RootEnclosure& e) {
  if (e.exact) return e.exact->get_d();
  Rational scale = 1;
  if (abs(e.lo) > 1) scale = abs(e.lo);
  Rational width = scale;
  mpz_mul_2exp(width.get_den_mpz_t(), width.get_den_mpz_t(), 64);
  width.canonicalize();
  const RootEnclosure fine = refine_root(p, e, width);
  return fine.exact ? fine.exact->get_d() : fine.midpoint().get_d();
}

BandCertificate certify_for(const UniPoly& p, const UniPoly& q, const Band& band,
                            BandQuadrature::Requirement req) {
  BandCertificate cert = certify_band(p, q, band);
  using R = BandQuadrature::Requirement;
  if (!cert.orbit_conditions_pass()) {
    throw StabilityError(StabilityError::Kind::NotCertified, "band not certified: the oval is not a periodic orbit");
  }
  if (req == R::NonzeroEq6Integrand && q.derivative().is_zero()) {
    throw StabilityError(StabilityError::Kind::NotCertified, "band not certified: q' vanishes identically");
  }
  if (req == R::FullCertificate && !cert.passed()) {
    throw StabilityError(StabilityError::Kind::NotCertified, "band not certified: q' != 0 is not established");
  }
  return cert;
}

BandIntegrand make_integrand(const UniPoly& p, const UniPoly& q, const Band& band) {
  const auto [xe, xd] = band_endpoints(p, band);
  return BandIntegrand(p, q, xe, xd);
}

}  // namespace

std::pair<double, double> band_endpoints(const UniPoly& p, const Band& band) {
  return {endpoint_value(p, band.left), endpoint_value(p, band.right)};
}

BandQuadrature::BandQuadrature(const UniPoly& p, const UniPoly& q, const Band& band, Requirement req)
    : cert_(certify_for(p, q, band, req)), integrand_(make_integrand(p, q, cert_.band)) {}

QuadratureResult BandQuadrature::integrate(Combination c, double tol, Kernel kernel) const {
  if (c.qdp == 0.0 && c.pdq == 0.0) return {0.0, 0.0, 0};
  try {
    return integrate_band(integrand_, c, tol, kernel);
  } catch (const std::runtime_error& e) {
    throw StabilityError(StabilityError::Kind::NoConvergence, e.what());
  }
}

QuadratureResult eq6_integral(const UniPoly& p, const UniPoly& q, const Band& band, double tol) {
  return BandQuadrature(p, q, band, BandQuadrature::Requirement::NonzeroEq6Integrand).integrate(kEq6Integrand, tol);
}

QuadratureResult div_time_integral(const UniPoly& p, const UniPoly& q, const Band& band, double tol) {
  return BandQuadrature(p, q, band, BandQuadrature::Requirement::PeriodicOrbit).integrate(kDivergenceIntegrand, tol);
}

QuadratureResult cofactor_time_integral(const UniPoly& p, const UniPoly& q, const Band& band, double tol) {
  return BandQuadrature(p, q, band, BandQuadrature::Requirement::PeriodicOrbit).integrate(kCofactorIntegrand, tol);
}

WShiftReport w_shift_check(const UniPoly& p, const UniPoly& q, const Band& band, std::span<const double> w_values,
                           double tol) {
  const BandQuadrature bq(p, q, band, BandQuadrature::Requirement::NonzeroEq6Integrand);
  const double i_div = bq.integrate(kDivergenceIntegrand, tol).value;
  const double i_k = bq.integrate(kCofactorIntegrand, tol).value;
  WShiftReport report;
  report.tolerance = 10.0 * tol * std::max(1.0, std::abs(i_div));
  for (double w : w_values) {
    const double combined = bq.integrate(w_shift_integrand(w), tol).value;
    const double expected = i_div + w * (i_div - i_k);
    report.entries.push_back({w, combined, expected});
    if (!(std::abs(combined - expected) <= report.tolerance)) report.agree = false;
  }
  return report;
}

StabilityVerdict classify(const UniPoly& p, const UniPoly& q, const Band& band, double tol) {
  const BandQuadrature bq(p, q, band, BandQuadrature::Requirement::FullCertificate);
  StabilityVerdict v{};
  v.div = bq.integrate(kDivergenceIntegrand, tol);
  v.cofactor = bq.integrate(kCofactorIntegrand, tol);
  v.eq6 = bq.integrate(kEq6Integrand, tol);
  v.eq6_value = v.eq6.value;
  v.hyperbolicity_margin = std::abs(v.eq6_value);
  v.residual_div_k = std::abs(v.div.value - v.cofactor.value);
  v.residual_div_eq6 = std::abs(v.div.value - v.eq6.value);
  v.qprime_sign = sgn(q.derivative()(bq.certificate().band.inner_midpoint()));

  const double noise = std::max({v.residual_div_k, v.residual_div_eq6, v.div.estimated_error,
                                 v.cofactor.estimated_error, v.eq6.estimated_error});
  if (!(v.hyperbolicity_margin > noise)) {
    throw StabilityError(StabilityError::Kind::MarginTooSmall,
                         "margin too small: |eq6| does not exceed the quadrature residuals");
  }
  v.cls = v.eq6_value < 0 ? StabilityClass::Stable : StabilityClass::Unstable;
  // p > 0 and p q^2 - 1 < 0 make the integrand's sign opposite to q'.
  const StabilityClass by_sign = v.qprime_sign > 0 ? StabilityClass::Stable : StabilityClass::Unstable;
  if (v.cls != by_sign) throw std::logic_error("quadrature sign disagrees with the sign of q' on the band");
  return v;
}

}  // namespace lcs
