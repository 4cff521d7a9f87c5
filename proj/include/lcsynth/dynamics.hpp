#pragma once

#include <stdexcept>
#include <vector>

#include "lcsynth/hypotheses.hpp"
#include "lcsynth/ode.hpp"
#include "lcsynth/synthesis.hpp"

namespace lcs {

class DynamicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (P, Q) in floating point.
class FieldEvaluator {
 public:
  explicit FieldEvaluator(const SynthesizedSystem& sys);
  State operator()(const State& s) const;
  Field as_field() const;

 private:
  BiPolyEvaluator p_;
  BiPolyEvaluator q_;
};

State vector_field(const SynthesizedSystem& sys, const State& s);

enum class Branch { Plus, Minus };

/// (tau, p q +/- sqrt p). Throws std::domain_error unless tau lies strictly
/// inside the band.
State sample_oval(const UniPoly& p, const UniPoly& q, const Band& band, double tau, Branch branch);

enum class Orientation { Clockwise, CounterClockwise };
const char* to_string(Orientation o);

/// Sense of rotation on the oval, read off the sign of p' at the band
/// endpoints (the field at (x_d, 0) is (0, p'(x_d)/2)).
Orientation flow_orientation(const SynthesizedSystem& sys, const Band& band);

Trajectory integrate(const SynthesizedSystem& sys, State s0, double t_end, double tol);

struct ReturnMapSample {
  double section_coordinate_in;
  double section_coordinate_out;
  double time_of_flight;
};

/// The section is {x = band midpoint, y > 0}, crossed left to right.
double section_abscissa(const SynthesizedSystem& sys, const Band& band);

/// First return to the section from (x_mid, y0). Throws DynamicsError for
/// y0 <= 0 or when no return happens before t_budget.
ReturnMapSample poincare_return(const SynthesizedSystem& sys, const Band& band, double y0, double tol,
                                double t_budget = 1e4);

struct FloquetMultipliers {
  double from_divergence;
  double from_return_map;
  double section_coordinate;  // y_+ at the section
  double period;
  double fixed_point_defect;  // |P(y_+) - y_+|
  double richardson_gap;      // |D(delta) - D(delta/2)|
};

/// exp of the w = -3 integral next to a two-sided difference quotient of the
/// return map at y_+, delta = 1e-6 y_+, Richardson-combined with delta/2.
/// The perturbed runs replay the step sequence of the unperturbed one so
/// that the numerical return map is smooth in y0.
FloquetMultipliers floquet_multiplier(const SynthesizedSystem& sys, const Band& band, double tol,
                                      double quad_tol = 1e-10);

struct SingularPoint {
  State at;
  RootEnclosure x;
  bool on_curve;
};

/// Real roots a of Q(x, 0), each tagged with whether f(a, 0) = 0 exactly.
std::vector<SingularPoint> find_singular_points(const SynthesizedSystem& sys);

/// Singular points on the curve whose abscissa lies in the closed band.
std::vector<SingularPoint> singular_points_on_oval(const SynthesizedSystem& sys, const Band& band);

}  // namespace lcs
