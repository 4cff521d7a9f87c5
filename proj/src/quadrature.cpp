#include "lcsynth/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lcs {

BandIntegrand::BandIntegrand(const UniPoly& p, const UniPoly& q, double x_e, double x_d) : x_e_(x_e), x_d_(x_d) {
  if (!(x_e < x_d)) throw std::invalid_argument("band endpoints out of order");
  const UniPoly dp = p.derivative();
  const UniPoly dq = q.derivative();
  qdp_ = (q * dp).to_double();
  pdq_ = (p * dq).to_double();
  pq2m1_ = (p * q * q - UniPoly::constant(1)).to_double();
  p_ = p.to_double();
  // p = (t - x_e)(t - x_d) s + O(endpoint error), hence r = -s.
  const Rational e = from_double(x_e), d = from_double(x_d);
  const UniPoly quadratic{Rational(e * d), Rational(-(e + d)), Rational(1)};
  r_ = (-divmod(p, quadratic).first).to_double();
}

double BandIntegrand::smooth(double t, Combination c) const {
  double num = 0.0;
  if (c.qdp != 0.0) num += c.qdp * horner(qdp_, t);
  if (c.pdq != 0.0) num += c.pdq * horner(pdq_, t);
  return num / (horner(pq2m1_, t) * std::sqrt(horner(r_, t)));
}

double BandIntegrand::smooth_pointwise(double t, Combination c) const {
  double num = 0.0;
  if (c.qdp != 0.0) num += c.qdp * horner(qdp_, t);
  if (c.pdq != 0.0) num += c.pdq * horner(pdq_, t);
  const double r = horner(p_, t) / ((t - x_e_) * (x_d_ - t));
  return num / (horner(pq2m1_, t) * std::sqrt(r));
}

namespace kernels {

namespace {

inline double node(const BandIntegrand& f, int k, int n) {
  const double centre = 0.5 * (f.x_e() + f.x_d());
  const double half = 0.5 * (f.x_d() - f.x_e());
  return centre + half * std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * n));
}

}  // namespace

double gauss_chebyshev_serial(const BandIntegrand& f, Combination c, int n) {
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += f.smooth_pointwise(node(f, k, n), c);
  return sum * std::numbers::pi / n;
}

double gauss_chebyshev_parallel(const BandIntegrand& f, Combination c, int n) {
  std::vector<double> values(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (int k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = f.smooth(node(f, k, n), c);
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * std::numbers::pi / n;
}

}  // namespace kernels

QuadratureResult integrate_band(const BandIntegrand& f, Combination c, double tol, Kernel kernel, int initial_nodes,
                                int max_nodes) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  auto rule = [&](int n) {
    return kernel == Kernel::Parallel ? kernels::gauss_chebyshev_parallel(f, c, n)
                                      : kernels::gauss_chebyshev_serial(f, c, n);
  };
  int n = initial_nodes;
  double coarse = rule(n);
  while (2 * n <= max_nodes) {
    const double fine = rule(2 * n);
    const double diff = std::abs(fine - coarse);
    if (!std::isfinite(fine)) break;
    if (diff <= tol) return {fine, diff, 2 * n};
    coarse = fine;
    n *= 2;
  }
  throw std::runtime_error("quadrature did not converge within the node budget");
}

}  // namespace lcs
