#include "lcsynth/dynamics.hpp"

#include <cmath>
#include <optional>

#include "lcsynth/stability.hpp"

namespace lcs {

namespace {

const UniPoly& provenance_p(const SynthesizedSystem& sys) {
  if (const auto* t = std::get_if<Theorem1Input>(&sys.provenance)) return t->p;
  return std::get<AbdelkaderInput>(sys.provenance).p;
}

}  // namespace

FieldEvaluator::FieldEvaluator(const SynthesizedSystem& sys) : p_(sys.P), q_(sys.Q) {}

State FieldEvaluator::operator()(const State& s) const { return {p_(s.x, s.y), q_(s.x, s.y)}; }

Field FieldEvaluator::as_field() const {
  return [ev = *this](const State& s) { return ev(s); };
}

State vector_field(const SynthesizedSystem& sys, const State& s) { return FieldEvaluator(sys)(s); }

State sample_oval(const UniPoly& p, const UniPoly& q, const Band& band, double tau, Branch branch) {
  if (!std::isfinite(tau)) throw std::domain_error("tau must be finite");
  const Rational t = from_double(tau);
  if (compare_root(p, band.left, t) >= 0 || compare_root(p, band.right, t) <= 0 || p(t) <= 0) {
    throw std::domain_error("tau is not strictly inside the band");
  }
  const double pv = p(tau);
  const double centre = pv * q(tau);
  const double root = std::sqrt(pv);
  return {tau, branch == Branch::Plus ? centre + root : centre - root};
}

const char* to_string(Orientation o) { return o == Orientation::Clockwise ? "clockwise" : "counterclockwise"; }

Orientation flow_orientation(const SynthesizedSystem& sys, const Band& band) {
  if (!band.left.multiplicity_is_one || !band.right.multiplicity_is_one) {
    throw DynamicsError("band endpoints must be simple roots");
  }
  const UniPoly dp = provenance_p(sys).derivative();
  auto sign_on = [&dp](const RootEnclosure& e) -> int {
    if (e.exact) return sgn(dp(*e.exact));
    if (dp(e.lo) == 0 || dp(e.hi) == 0 || sturm_count(dp, e.lo, e.hi) != 0) return 0;
    return sgn(dp(e.lo));
  };
  const int right = sign_on(band.right);
  const int left = sign_on(band.left);
  if (right >= 0 || left <= 0) {
    throw DynamicsError("certification inconsistency: p' does not have the expected sign at the band endpoints");
  }
  return Orientation::Clockwise;
}

Trajectory integrate(const SynthesizedSystem& sys, State s0, double t_end, double tol) {
  return integrate(FieldEvaluator(sys).as_field(), s0, t_end, tol);
}

double section_abscissa(const SynthesizedSystem& sys, const Band& band) {
  const auto [xe, xd] = band_endpoints(provenance_p(sys), band);
  return 0.5 * (xe + xd);
}

namespace {

struct ReturnRun {
  ReturnMapSample sample;
  std::vector<double> schedule;
};

// Crossing of x = x_mid inside one dense step, by Illinois-modified regula
// falsi on the quartic interpolant.
double locate_crossing(const DenseStep& d, double x_mid) {
  double a = d.t0, b = d.t1();
  double fa = d.at(a).x - x_mid, fb = d.at(b).x - x_mid;
  if (fb == 0.0) return b;
  int side = 0;
  for (int it = 0; it < 200; ++it) {
    const double c = (a * fb - b * fa) / (fb - fa);
    const double fc = d.at(c).x - x_mid;
    if (std::abs(fc) <= 1e-12 || b - a <= 1e-15 * std::max(1.0, std::abs(c))) return c;
    if ((fc < 0.0) == (fa < 0.0)) {
      a = c;
      fa = fc;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = c;
      fb = fc;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
  }
  return 0.5 * (a + b);
}

ReturnRun run_to_return(const Field& f, double x_mid, double y0, double tol, double t_budget,
                        const std::vector<double>* replay, int extra_steps) {
  Dopri5 solver(f, {x_mid, y0}, 0.0, tol);
  ReturnRun run;
  std::optional<ReturnMapSample> found;
  std::size_t i = 0;
  int after = 0;
  try {
    while (true) {
      if (solver.time() >= t_budget) {
        throw DynamicsError("no return to the section within the time budget");
      }
      const DenseStep d =
          (replay && i < replay->size()) ? solver.step_fixed((*replay)[i]) : solver.step(t_budget);
      ++i;
      run.schedule.push_back(d.h);
      if (found) {
        if (++after >= extra_steps) break;
        continue;
      }
      const double g0 = d.cont[0].x - x_mid;
      const double g1 = solver.state().x - x_mid;
      if (g0 < 0.0 && g1 >= 0.0) {
        const double tc = locate_crossing(d, x_mid);
        const State at = d.at(tc);
        if (at.y > 0.0) {
          found = ReturnMapSample{y0, at.y, tc};
          if (extra_steps == 0) break;
        }
      }
    }
  } catch (const IntegrationError& e) {
    throw DynamicsError(std::string("return map integration failed: ") + e.what());
  }
  run.sample = *found;
  return run;
}

}  // namespace

ReturnMapSample poincare_return(const SynthesizedSystem& sys, const Band& band, double y0, double tol,
                                double t_budget) {
  if (!(y0 > 0.0)) throw DynamicsError("section coordinate must be positive");
  const double x_mid = section_abscissa(sys, band);
  return run_to_return(FieldEvaluator(sys).as_field(), x_mid, y0, tol, t_budget, nullptr, 0).sample;
}

FloquetMultipliers floquet_multiplier(const SynthesizedSystem& sys, const Band& band, double tol, double quad_tol) {
  const Theorem1Input pq = theorem1_pair(sys);
  const QuadratureResult eq6 = eq6_integral(pq.p, pq.q, band, quad_tol);

  const double x_mid = section_abscissa(sys, band);
  const double y_plus = sample_oval(pq.p, pq.q, band, x_mid, Branch::Plus).y;
  const Field f = FieldEvaluator(sys).as_field();
  constexpr double budget = 1e4;

  const ReturnRun nominal = run_to_return(f, x_mid, y_plus, tol, budget, nullptr, 3);
  auto map = [&](double y0) {
    return run_to_return(f, x_mid, y0, tol, budget, &nominal.schedule, 0).sample.section_coordinate_out;
  };
  auto quotient = [&](double delta) { return (map(y_plus + delta) - map(y_plus - delta)) / (2.0 * delta); };

  const double delta = 1e-6 * y_plus;
  const double coarse = quotient(delta);
  const double fine = quotient(0.5 * delta);

  FloquetMultipliers m{};
  m.from_divergence = std::exp(eq6.value);
  m.from_return_map = (4.0 * fine - coarse) / 3.0;
  m.section_coordinate = y_plus;
  m.period = nominal.sample.time_of_flight;
  m.fixed_point_defect = std::abs(nominal.sample.section_coordinate_out - y_plus);
  m.richardson_gap = std::abs(fine - coarse);
  return m;
}

std::vector<SingularPoint> find_singular_points(const SynthesizedSystem& sys) {
  const UniPoly on_axis = sys.Q.at_y(0);
  std::vector<SingularPoint> out;
  if (on_axis.is_zero()) return out;
  const UniPoly f_axis = sys.curve_f.at_y(0);
  const UniPoly common = f_axis.is_zero() ? on_axis : gcd(on_axis, f_axis);
  for (auto& e : isolate_real_roots(on_axis)) {
    bool on_curve = false;
    if (auto ex = exact_root(on_axis, e)) {
      on_curve = f_axis(*ex) == 0;
      e.exact = ex;
    } else if (common.degree() >= 1) {
      on_curve = sturm_count(common, e.lo, e.hi) > 0;
    }
    const double x = e.exact ? e.exact->get_d() : e.midpoint().get_d();
    out.push_back({{x, 0.0}, e, on_curve});
  }
  return out;
}

std::vector<SingularPoint> singular_points_on_oval(const SynthesizedSystem& sys, const Band& band) {
  const UniPoly& p = provenance_p(sys);
  const UniPoly on_axis = sys.Q.at_y(0);
  std::vector<SingularPoint> out;
  for (auto& sp : find_singular_points(sys)) {
    if (!sp.on_curve) continue;
    if (compare_roots(on_axis, sp.x, p, band.left) >= 0 && compare_roots(on_axis, sp.x, p, band.right) <= 0) {
      out.push_back(sp);
    }
  }
  return out;
}

}  // namespace lcs
