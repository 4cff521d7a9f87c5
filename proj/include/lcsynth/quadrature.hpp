#pragma once

#include <vector>

#include "lcsynth/unipoly.hpp"

namespace lcs {

struct QuadratureResult {
  double value = 0.0;
  double estimated_error = 0.0;
  int node_count = 0;
};

/// Numerator weights: the integrand numerator is
///   qdp * q(t) p'(t) + pdq * p(t) q'(t).
struct Combination {
  double qdp;
  double pdq;
};

/// Integrands of the form N(t) / ((p q^2 - 1)(t) sqrt(p(t))) over a band
/// (x_e, x_d) of simple roots of p. The inverse square-root endpoint
/// singularity is carried by the Chebyshev weight 1/sqrt((t - x_e)(x_d - t));
/// what remains is N / ((p q^2 - 1) sqrt(r)) with r = p / ((t - x_e)(x_d - t)).
class BandIntegrand {
 public:
  /// x_e, x_d are double approximations of the band endpoints; r is built
  /// by exact deflation of p at those values.
  BandIntegrand(const UniPoly& p, const UniPoly& q, double x_e, double x_d);

  double x_e() const { return x_e_; }
  double x_d() const { return x_d_; }

  /// Smooth factor at t using the deflated r.
  double smooth(double t, Combination c) const;
  /// Smooth factor with r taken pointwise as p(t) / ((t - x_e)(x_d - t)).
  double smooth_pointwise(double t, Combination c) const;

 private:
  double x_e_, x_d_;
  std::vector<double> qdp_, pdq_, pq2m1_, r_, p_;
};

namespace kernels {

/// n-point Gauss-Chebyshev (first kind) rule mapped onto (x_e, x_d).
/// Serial reference using pointwise r.
double gauss_chebyshev_serial(const BandIntegrand& f, Combination c, int n);

/// Same rule, node evaluations spread over OpenMP threads, deflated r, and a
/// fixed-order sum so the result does not depend on the thread count.
double gauss_chebyshev_parallel(const BandIntegrand& f, Combination c, int n);

}  // namespace kernels

enum class Kernel { Parallel, SerialReference };

/// Doubles the node count from `initial_nodes` until two successive rules
/// agree within tol; the finer value is returned and the difference is the
/// error estimate. Throws std::runtime_error when max_nodes is exceeded.
QuadratureResult integrate_band(const BandIntegrand& f, Combination c, double tol, Kernel kernel = Kernel::Parallel,
                                int initial_nodes = 8, int max_nodes = 1 << 22);

}  // namespace lcs
