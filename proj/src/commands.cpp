#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "lcsynth/portrait.hpp"
#include "lcsynth/report.hpp"

namespace lcs {

namespace {

AbdelkaderInput abdelkader_input(const JobSpec& job) {
  return {job.p, job.q, job.h.value_or(UniPoly{}), job.n.value_or(0), job.r.value_or(2)};
}

SynthesizedSystem build_system(const JobSpec& job) {
  if (job.has_abdelkader_inputs()) return synthesize_abdelkader(abdelkader_input(job));
  return synthesize_theorem1({job.p, job.q});
}

CommandResult input_error(const std::string& command, const std::string& what) {
  CommandResult r;
  r.report["command"] = command;
  r.report["error"] = what;
  r.text = command + ": " + what + "\n";
  r.exit_code = 2;
  return r;
}

std::string line(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string line(const char* fmt, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return std::string(buf) + "\n";
}

std::string band_label(const Band& b) {
  const double l = to_double(b.left.exact ? *b.left.exact : b.left.midpoint());
  const double r = to_double(b.right.exact ? *b.right.exact : b.right.midpoint());
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.10g, %.10g)", l, r);
  return buf;
}

void system_text(std::string& t, const SynthesizedSystem& s) {
  t += "x' = " + to_pretty(s.P) + "\n";
  t += "y' = " + to_pretty(s.Q) + "\n";
  t += "f  = " + to_pretty(s.curve_f) + "\n";
  t += "k  = " + to_pretty(s.cofactor_k) + "\n";
  t += "x'' + (" + to_pretty(s.lienard_f) + ") x' + (" + to_pretty(s.lienard_g) + ") = 0\n";
  t += line("degree %d, cofactor degree %d", s.degree(), s.cofactor_degree());
}

// Pair for the band analysis: the job's (p, q), or the reduced pair for an
// n = 0 Abdelkader job.
Theorem1Input analysis_pair(const JobSpec& job) {
  if (job.has_abdelkader_inputs()) return reduce_abdelkader(abdelkader_input(job));
  return {job.p, job.q};
}

Json rejected_json(const RejectedBand& r) {
  Json j;
  j["left"] = to_json(r.left);
  j["right"] = to_json(r.right);
  j["reason"] = r.reason;
  return j;
}

}  // namespace

CommandResult cmd_synthesize(const JobSpec& job) {
  SynthesizedSystem sys;
  try {
    sys = build_system(job);
  } catch (const SynthesisError& e) {
    return input_error("synthesize", e.what());
  }
  const InvarianceCheck inv = verify_invariance(sys);
  CommandResult r;
  r.report["command"] = "synthesize";
  r.report["system"] = to_json(sys);
  r.report["invariance"] = {{"exact", inv.invariant}, {"residual", to_json(inv.residual)}};
  system_text(r.text, sys);
  r.text += inv.invariant ? "invariance: residual is exactly zero\n"
                          : "invariance: FAILED, residual " + to_pretty(inv.residual) + "\n";
  r.exit_code = inv.invariant ? 0 : 1;
  return r;
}

CommandResult cmd_check(const JobSpec& job) {
  Theorem1Input pq;
  try {
    pq = analysis_pair(job);
    synthesize_theorem1(pq);
  } catch (const SynthesisError& e) {
    return input_error("check", e.what());
  }
  const BandScan scan = scan_bands(pq.p, job.tolerances.root_width);
  const auto reports = check_theorem1(pq.p, pq.q, job.tolerances.root_width);

  CommandResult r;
  r.report["command"] = "check";
  r.report["p"] = to_json(pq.p);
  r.report["q"] = to_json(pq.q);
  Json bands = Json::array();
  int certified = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& br = reports[i];
    Json bj;
    bj["index"] = static_cast<int>(i);
    bj["band"] = to_json(br.certificate.band);
    bj["certificate"] = to_json(br.certificate);
    bj["literal_hypothesis"] = br.literal_hypothesis;
    r.text += "band " + std::to_string(i) + " " + band_label(br.band) + ": ";
    if (br.certificate.passed()) {
      ++certified;
      try {
        const StabilityVerdict v = classify(pq.p, pq.q, br.band, job.tolerances.quad_tol);
        bj["verdict"] = to_json(v);
        r.text += line("certified, %s, integral %.12g", to_string(v.cls), v.eq6_value);
      } catch (const StabilityError& e) {
        bj["verdict_error"] = e.what();
        r.text += std::string("certified, no verdict: ") + e.what() + "\n";
      }
    } else {
      r.text += "not certified\n";
    }
    for (const auto& d : br.certificate.diagnostics) {
      r.text += "  " + d.check + ": " + d.message;
      if (d.witness) {
        r.text += " (witness x = " + to_string(*d.witness) + ")";
      } else if (d.enclosure) {
        r.text += line(" (root near x = %.12g)", to_double(d.enclosure->midpoint()));
        r.text.pop_back();
      }
      r.text += "\n";
    }
    bands.push_back(std::move(bj));
  }
  r.report["bands"] = std::move(bands);
  Json rejected = Json::array();
  for (const auto& rb : scan.rejected) {
    rejected.push_back(rejected_json(rb));
    r.text += "rejected stretch: " + rb.reason + "\n";
  }
  r.report["rejected"] = std::move(rejected);
  r.report["certified_bands"] = certified;
  if (reports.empty()) {
    r.report["diagnostic"] = "no bands";
    r.text += "no bands: p has no positive stretch between simple real roots\n";
  }
  r.text += line("%d of %zu bands certified", certified, reports.size());
  r.exit_code = certified > 0 ? 0 : 1;
  return r;
}

CommandResult cmd_stability(const JobSpec& job) {
  Theorem1Input pq;
  SynthesizedSystem sys;
  try {
    pq = analysis_pair(job);
    sys = synthesize_theorem1(pq);
  } catch (const SynthesisError& e) {
    return input_error("stability", e.what());
  }
  const double tol = job.tolerances.quad_tol;
  const auto reports = check_theorem1(pq.p, pq.q, job.tolerances.root_width);
  CommandResult r;
  r.report["command"] = "stability";
  Json bands = Json::array();
  int verdicts = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& br = reports[i];
    const Band& band = br.band;
    Json bj;
    bj["index"] = static_cast<int>(i);
    bj["band"] = to_json(br.certificate.band);
    bj["certified"] = br.certificate.passed();
    r.text += "band " + std::to_string(i) + " " + band_label(band) + "\n";
    if (!br.certificate.orbit_conditions_pass()) {
      bj["skipped"] = "the oval is not a certified periodic orbit";
      r.text += "  skipped: the oval is not a certified periodic orbit\n";
      bands.push_back(std::move(bj));
      continue;
    }
    try {
      const auto div = div_time_integral(pq.p, pq.q, band, tol);
      const auto k = cofactor_time_integral(pq.p, pq.q, band, tol);
      bj["div_integral"] = to_json(div);
      bj["cofactor_integral"] = to_json(k);
      bj["orientation"] = to_string(flow_orientation(sys, band));
      r.text += line("  div integral %.15g, cofactor integral %.15g", div.value, k.value);
      if (br.certificate.passed()) {
        const WShiftReport ws = w_shift_check(pq.p, pq.q, band, kDefaultWValues, tol);
        Json wj = Json::array();
        for (const auto& e : ws.entries) wj.push_back({{"w", e.w}, {"combined", e.combined}, {"expected", e.expected}});
        bj["w_shift"] = {{"agree", ws.agree}, {"tolerance", ws.tolerance}, {"entries", std::move(wj)}};
        const StabilityVerdict v = classify(pq.p, pq.q, band, tol);
        bj["verdict"] = to_json(v);
        ++verdicts;
        r.text += line("  w-shift %s; %s, integral %.15g, multiplier %.15g", ws.agree ? "agrees" : "DISAGREES",
                       to_string(v.cls), v.eq6_value, std::exp(v.eq6_value));
      } else {
        bj["verdict_error"] = "q' vanishes identically: the cycle is not hyperbolic";
        r.text += "  no verdict: q' vanishes identically\n";
      }
    } catch (const std::runtime_error& e) {
      bj["verdict_error"] = e.what();
      r.text += std::string("  no verdict: ") + e.what() + "\n";
    }
    bands.push_back(std::move(bj));
  }
  r.report["bands"] = std::move(bands);
  if (reports.empty()) {
    r.report["diagnostic"] = "no bands";
    r.text += "no bands\n";
  }
  r.exit_code = verdicts > 0 ? 0 : 1;
  return r;
}

CommandResult cmd_simulate(const JobSpec& job) {
  SynthesizedSystem sys;
  try {
    sys = build_system(job);
  } catch (const SynthesisError& e) {
    return input_error("simulate", e.what());
  }
  const SimulateSpec& sim = job.simulate;
  const double tol = job.tolerances.ode_tol;
  CommandResult r;
  r.report["command"] = "simulate";

  State start{};
  std::optional<Band> band;
  std::optional<Theorem1Input> pq;
  if (sim.start) {
    start = *sim.start;
  } else {
    try {
      pq = theorem1_pair(sys);
    } catch (const SynthesisError& e) {
      return input_error("simulate", std::string("an oval start needs a base-family system: ") + e.what());
    }
    const auto reports = check_theorem1(pq->p, pq->q, job.tolerances.root_width);
    if (sim.band < 0 || sim.band >= static_cast<int>(reports.size())) {
      return input_error("simulate", "band index out of range (" + std::to_string(reports.size()) + " bands)");
    }
    const auto& br = reports[static_cast<std::size_t>(sim.band)];
    if (!br.certificate.orbit_conditions_pass()) {
      return input_error("simulate", "band " + std::to_string(sim.band) + " is not certified");
    }
    band = br.certificate.band;
    const auto [xe, xd] = band_endpoints(pq->p, *band);
    const double tau = sim.tau_given ? sim.tau : 0.5 * (xe + xd);
    try {
      start = sample_oval(pq->p, pq->q, *band, tau, sim.branch);
    } catch (const std::domain_error& e) {
      return input_error("simulate", e.what());
    }
  }
  r.report["start"] = {{"x", start.x}, {"y", start.y}};
  r.report["t_end"] = sim.t_end;
  r.report["ode_tol"] = tol;

  const BiPolyEvaluator f(sys.curve_f);
  Trajectory tr;
  try {
    tr = integrate(sys, start, sim.t_end, tol);
  } catch (const IntegrationError& e) {
    r.report["error"] = e.what();
    r.report["last_good"] = {{"t", e.time()}, {"x", e.last_good().x}, {"y", e.last_good().y}};
    r.text = line("integration failed at t = %.17g, last good state (%.17g, %.17g): %s", e.time(), e.last_good().x,
                  e.last_good().y, e.what());
    r.exit_code = 1;
    return r;
  }
  r.files["trajectory.csv"] = trajectory_csv(tr, sys.curve_f);

  const double f0 = std::abs(f(start.x, start.y));
  double fmax = 0.0;
  for (const auto& s : tr.states) fmax = std::max(fmax, std::abs(f(s.x, s.y)));
  const double fend = std::abs(f(tr.states.back().x, tr.states.back().y));
  r.report["steps"] = static_cast<int>(tr.steps.size());
  r.report["initial_abs_f"] = f0;
  r.report["final_abs_f"] = fend;
  r.report["max_abs_f"] = fmax;
  r.text += line("%zu steps to t = %.6g", tr.steps.size(), tr.times.back());
  r.text += line("|f|: initial %.6g, final %.6g, max %.6g", f0, fend, fmax);

  if (sim.return_map) {
    if (!band) {
      r.report["return_map_error"] = "return map needs an oval start";
      r.text += "return map needs an oval start\n";
    } else {
      try {
        const FloquetMultipliers m = floquet_multiplier(sys, *band, tol, job.tolerances.quad_tol);
        r.report["return_map"] = {{"multiplier_from_divergence", m.from_divergence},
                                  {"multiplier_from_return_map", m.from_return_map},
                                  {"section_coordinate", m.section_coordinate},
                                  {"period", m.period},
                                  {"fixed_point_defect", m.fixed_point_defect},
                                  {"richardson_gap", m.richardson_gap}};
        r.text += line("multiplier: %.12g from the integral, %.12g from the return map; period %.12g",
                       m.from_divergence, m.from_return_map, m.period);
      } catch (const std::runtime_error& e) {
        r.report["return_map_error"] = e.what();
        r.text += std::string("return map failed: ") + e.what() + "\n";
      }
    }
  }
  return r;
}

CommandResult cmd_portrait(const JobSpec& job) {
  SynthesizedSystem sys;
  Theorem1Input pq;
  try {
    pq = analysis_pair(job);
    sys = synthesize_theorem1(pq);
  } catch (const SynthesisError& e) {
    return input_error("portrait", e.what());
  }
  const auto reports = check_theorem1(pq.p, pq.q, job.tolerances.root_width);
  PortraitOptions opts;
  opts.ode_tol = job.tolerances.ode_tol;
  opts.t_end = job.simulate.t_end;
  const Portrait pic = render_portrait(sys, pq.p, pq.q, reports, opts);
  CommandResult r;
  r.report["command"] = "portrait";
  r.report["ovals"] = pic.ovals;
  r.report["trajectories"] = pic.spirals;
  r.report["singular_points"] = pic.singular_points;
  r.files["portrait.svg"] = pic.svg;
  if (pic.ovals == 0) {
    r.report["diagnostic"] = "empty portrait: no certified band";
    r.text = "empty portrait: no certified band\n";
    r.exit_code = 1;
  } else {
    r.text = line("%d ovals, %d trajectories, %d singular points", pic.ovals, pic.spirals, pic.singular_points);
  }
  return r;
}

CommandResult cmd_audit_eq7(const JobSpec& job) {
  if (!job.has_abdelkader_inputs()) return input_error("audit-eq7", "job has none of h, n, r");
  const AbdelkaderInput in = abdelkader_input(job);
  SynthesizedSystem sys;
  try {
    sys = synthesize_abdelkader(in);
  } catch (const SynthesisError& e) {
    return input_error("audit-eq7", e.what());
  }
  CommandResult r;
  r.report["command"] = "audit-eq7";
  r.report["system"] = to_json(sys);
  const InvarianceCheck inv = verify_invariance(sys);
  r.report["invariance_exact"] = inv.invariant;
  system_text(r.text, sys);

  if (in.n > 0) {
    const auto bands = find_bands(in.p, job.tolerances.root_width);
    Json bj = Json::array();
    bool defect = false;
    for (std::size_t i = 0; i < bands.size(); ++i) {
      const auto points = singular_points_on_oval(sys, bands[i]);
      Json pts = Json::array();
      r.text += "band " + std::to_string(i) + " " + band_label(bands[i]) + ": ";
      std::string listed;
      for (const auto& sp : points) {
        pts.push_back(to_json(sp));
        listed += " (" + (sp.x.exact ? to_string(*sp.x.exact) : format_double(sp.at.x)) + ", 0)";
      }
      const char* verdict = points.empty() ? "no singular points on the oval" : "not a limit cycle";
      defect = defect || !points.empty();
      bj.push_back({{"index", static_cast<int>(i)},
                    {"band", to_json(bands[i])},
                    {"singular_points_on_oval", std::move(pts)},
                    {"verdict", verdict}});
      r.text += std::string(verdict) + (listed.empty() ? "" : ", singular points" + listed) + "\n";
    }
    r.report["bands"] = std::move(bj);
    r.report["verdict"] = defect ? "not a limit cycle" : "no singular points on the oval";
  } else {
    const Theorem1Input red = reduce_abdelkader(in);
    const SynthesizedSystem direct = synthesize_theorem1(red);
    const bool same = direct.same_system(sys);
    r.report["q_tilde"] = to_json(red.q);
    r.report["identical_to_base"] = same;
    r.report["verdict"] = same ? "reduces to the base system" : "differs from the base system";
    r.text += "q~ = " + to_pretty(red.q) + "\n";
    r.text += same ? "coefficient-identical to the synthesis from (p, q~): not a more general limit cycle\n"
                   : "NOT identical to the synthesis from (p, q~)\n";
  }
  r.exit_code = 0;
  return r;
}

}  // namespace lcs
