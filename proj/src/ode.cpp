#include "lcsynth/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lcs {

namespace {

// Dormand-Prince 5(4) tableau; the field is autonomous so the nodes c_i are
// not needed.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200, e6 = 22.0 / 525,
                 e7 = -1.0 / 40;
// Dense output weights.
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

State axpy(const State& s, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = s;
  for (const auto& [a, k] : terms) {
    out.x += h * a * k->x;
    out.y += h * a * k->y;
  }
  return out;
}

bool finite(const State& s) { return std::isfinite(s.x) && std::isfinite(s.y); }

}  // namespace

State DenseStep::at(double t) const {
  const double th = h == 0.0 ? 0.0 : (t - t0) / h;
  const double th1 = 1.0 - th;
  auto comp = [&](double State::*m) {
    return cont[0].*m +
           th * (cont[1].*m + th1 * (cont[2].*m + th * (cont[3].*m + th1 * cont[4].*m)));
  };
  return {comp(&State::x), comp(&State::y)};
}

Dopri5::Dopri5(Field f, State s0, double t0, double tol) : f_(std::move(f)), s_(s0), t_(t0), tol_(tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("ODE tolerance must be positive");
  if (!finite(s0)) throw IntegrationError("non-finite initial state", t0, s0);
  k1_ = f_(s_);
  h_ = initial_step();
}

double Dopri5::initial_step() const {
  const double sx = tol_ + tol_ * std::abs(s_.x), sy = tol_ + tol_ * std::abs(s_.y);
  auto norm = [&](const State& v) { return std::sqrt(0.5 * ((v.x / sx) * (v.x / sx) + (v.y / sy) * (v.y / sy))); };
  const double d0 = norm(s_), d1n = norm(k1_);
  double h0 = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * d0 / d1n;
  const State s1 = axpy(s_, h0, {{1.0, &k1_}});
  const State f1 = f_(s1);
  const double d2 = norm(State{f1.x - k1_.x, f1.y - k1_.y}) / h0;
  const double m = std::max(d1n, d2);
  const double h1 = m <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / m, 0.2);
  return std::min(100.0 * h0, h1);
}

DenseStep Dopri5::attempt(double h, double& err) {
  const State& k1 = k1_;
  const State k2 = f_(axpy(s_, h, {{a21, &k1}}));
  const State k3 = f_(axpy(s_, h, {{a31, &k1}, {a32, &k2}}));
  const State k4 = f_(axpy(s_, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  const State k5 = f_(axpy(s_, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  const State k6 = f_(axpy(s_, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
  const State s1 = axpy(s_, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
  const State k7 = f_(s1);

  const State e = axpy(State{}, h, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});
  const double sx = tol_ + tol_ * std::max(std::abs(s_.x), std::abs(s1.x));
  const double sy = tol_ + tol_ * std::max(std::abs(s_.y), std::abs(s1.y));
  err = std::sqrt(0.5 * ((e.x / sx) * (e.x / sx) + (e.y / sy) * (e.y / sy)));
  if (!finite(s1) || !finite(k7)) err = std::numeric_limits<double>::infinity();

  DenseStep d;
  d.t0 = t_;
  d.h = h;
  d.cont[0] = s_;
  d.cont[1] = {s1.x - s_.x, s1.y - s_.y};
  d.cont[2] = {h * k1.x - d.cont[1].x, h * k1.y - d.cont[1].y};
  d.cont[3] = {d.cont[1].x - h * k7.x - d.cont[2].x, d.cont[1].y - h * k7.y - d.cont[2].y};
  d.cont[4] = axpy(State{}, h, {{d1, &k1}, {d3, &k3}, {d4, &k4}, {d5, &k5}, {d6, &k6}, {d7, &k7}});
  // Stash the end state and FSAL derivative for commit.
  pending_end_ = s1;
  pending_k7_ = k7;
  return d;
}

DenseStep Dopri5::step(double t_limit) {
  const double remaining = t_limit - t_;
  if (!(remaining > 0.0)) throw std::invalid_argument("step limit is not ahead of the current time");
  while (true) {
    double h = std::min(h_, remaining);
    const double h_min = 1e-14 * std::max(1.0, std::abs(t_));
    if (h < h_min) throw IntegrationError("step size underflow", t_, s_);
    double err = 0.0;
    DenseStep d = attempt(h, err);
    if (err <= 1.0) {
      const double grow = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      const double next = h * (rejected_last_ ? std::min(grow, 1.0) : grow);
      rejected_last_ = false;
      // Keep the adaptive proposal when only the limit shortened the step.
      h_ = h < h_ && h == remaining ? std::max(h_, next) : next;
      t_ = (h == remaining) ? t_limit : t_ + h;
      s_ = pending_end_;
      k1_ = pending_k7_;
      return d;
    }
    if (!std::isfinite(err)) {
      h_ = 0.1 * h;
    } else {
      h_ = h * std::max(0.2, 0.9 * std::pow(err, -0.2));
    }
    rejected_last_ = true;
  }
}

DenseStep Dopri5::step_fixed(double h) {
  double err = 0.0;
  DenseStep d = attempt(h, err);
  if (!finite(pending_end_)) throw IntegrationError("non-finite state", t_, s_);
  t_ += h;
  s_ = pending_end_;
  k1_ = pending_k7_;
  return d;
}

State Trajectory::at(double t) const {
  if (steps.empty()) return states.front();
  auto it = std::upper_bound(steps.begin(), steps.end(), t, [](double v, const DenseStep& s) { return v < s.t0; });
  if (it != steps.begin()) --it;
  return it->at(t);
}

Trajectory integrate(const Field& f, State s0, double t_end, double tol) {
  if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be nonnegative");
  Trajectory tr;
  tr.times.push_back(0.0);
  tr.states.push_back(s0);
  Dopri5 solver(f, s0, 0.0, tol);
  while (solver.time() < t_end) {
    tr.steps.push_back(solver.step(t_end));
    tr.times.push_back(solver.time());
    tr.states.push_back(solver.state());
  }
  return tr;
}

}  // namespace lcs
