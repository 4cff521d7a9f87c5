#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "lcsynth/hypotheses.hpp"
#include "lcsynth/quadrature.hpp"

namespace lcs {

class StabilityError : public std::runtime_error {
 public:
  enum class Kind { NotCertified, NoConvergence, MarginTooSmall };
  StabilityError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// div = 3/2 q p' + p q' and k = q p' pulled back to the band through the
/// oval parameterisation; each integral equals a time integral over one
/// period.
inline constexpr Combination kDivergenceIntegrand{-3.0, -2.0};
inline constexpr Combination kCofactorIntegrand{-2.0, 0.0};
/// The w = -3 combination: 4 p q' / ((p q^2 - 1) sqrt p).
inline constexpr Combination kEq6Integrand{0.0, 4.0};
/// div + w (div - k).
constexpr Combination w_shift_integrand(double w) { return {-(w + 3.0), -2.0 * (1.0 + w)}; }

/// Endpoints refined to double precision and the deflated integrand for one
/// band. Construction certifies the band and throws StabilityError when the
/// requested part of the certificate does not pass. The integrals are
/// well defined as soon as the oval is a periodic orbit; the w = -3 form is
/// additionally refused for q' == 0, where it vanishes identically.
class BandQuadrature {
 public:
  enum class Requirement { PeriodicOrbit, NonzeroEq6Integrand, FullCertificate };

  BandQuadrature(const UniPoly& p, const UniPoly& q, const Band& band, Requirement req);

  QuadratureResult integrate(Combination c, double tol, Kernel kernel = Kernel::Parallel) const;
  const BandCertificate& certificate() const { return cert_; }
  double x_e() const { return integrand_.x_e(); }
  double x_d() const { return integrand_.x_d(); }
  const BandIntegrand& integrand() const { return integrand_; }

 private:
  BandCertificate cert_;
  BandIntegrand integrand_;
};

/// Band endpoints as doubles, refined by exact bisection well past double
/// resolution.
std::pair<double, double> band_endpoints(const UniPoly& p, const Band& band);

QuadratureResult eq6_integral(const UniPoly& p, const UniPoly& q, const Band& band, double tol);
QuadratureResult div_time_integral(const UniPoly& p, const UniPoly& q, const Band& band, double tol);
QuadratureResult cofactor_time_integral(const UniPoly& p, const UniPoly& q, const Band& band, double tol);

struct WShiftEntry {
  double w;
  double combined;  // quadrature of the shifted integrand
  double expected;  // I_div + w (I_div - I_k)
};

struct WShiftReport {
  bool agree = true;
  double tolerance = 0.0;
  std::vector<WShiftEntry> entries;
};

inline constexpr double kDefaultWValues[] = {-3.0, -1.0, 0.0, 1.0, 2.0};

/// Agreement is judged at 10 tol max(1, |I_div|).
WShiftReport w_shift_check(const UniPoly& p, const UniPoly& q, const Band& band, std::span<const double> w_values,
                           double tol);

enum class StabilityClass { Stable, Unstable };
const char* to_string(StabilityClass c);

struct StabilityVerdict {
  StabilityClass cls;
  double eq6_value;
  double hyperbolicity_margin;
  double residual_div_k;    // |I_div - I_k|
  double residual_div_eq6;  // |I_div - I_eq6|
  int qprime_sign;          // sign of q' on the band
  QuadratureResult div;
  QuadratureResult cofactor;
  QuadratureResult eq6;
};

/// Requires a fully certified band. Throws StabilityError(MarginTooSmall)
/// when |eq6| does not exceed the consistency residuals and error estimates.
StabilityVerdict classify(const UniPoly& p, const UniPoly& q, const Band& band, double tol);

}  // namespace lcs
