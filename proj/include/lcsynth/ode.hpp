#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lcs {

struct State {
  double x = 0.0;
  double y = 0.0;
};

using Field = std::function<State(const State&)>;

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t, State last) : std::runtime_error(what), t_(t), last_(last) {}
  double time() const { return t_; }
  const State& last_good() const { return last_; }

 private:
  double t_;
  State last_;
};

/// One accepted Dormand-Prince step with its quartic continuous extension.
struct DenseStep {
  double t0 = 0.0;
  double h = 0.0;
  std::array<State, 5> cont{};

  double t1() const { return t0 + h; }
  State at(double t) const;
};

/// Dormand-Prince 5(4) with embedded error estimate and dense output,
/// driven one step at a time. Local error per component is held below
/// tol (1 + |y|).
class Dopri5 {
 public:
  Dopri5(Field f, State s0, double t0, double tol);

  double time() const { return t_; }
  const State& state() const { return s_; }
  double suggested_step() const { return h_; }

  /// Adaptive step, never past t_limit.
  DenseStep step(double t_limit);
  /// A step of exactly h with no error control.
  DenseStep step_fixed(double h);

 private:
  DenseStep attempt(double h, double& err);
  double initial_step() const;

  Field f_;
  State s_;
  State k1_;  // f(s_), reused (first same as last)
  double t_;
  double tol_;
  double h_;
  bool rejected_last_ = false;
  State pending_end_{};
  State pending_k7_{};
};

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<DenseStep> steps;

  /// Dense interpolation inside [times.front(), times.back()].
  State at(double t) const;
};

/// Integrates from s0 at t = 0 to t_end.
Trajectory integrate(const Field& f, State s0, double t_end, double tol);

}  // namespace lcs
