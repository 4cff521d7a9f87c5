// lcsynth: synthesize Lienard systems with an algebraic limit cycle and
// certify / classify / simulate them.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lcsynth/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Overrides {
  std::string job_path;
  std::optional<double> quad_tol, ode_tol;
  std::optional<std::string> root_width;
  std::string out_dir = ".";
  std::string format = "text";
  // simulate
  std::optional<double> x0, y0, tau, t_end;
  std::optional<int> band;
  std::optional<std::string> branch;
  bool return_map = false;
};

void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << content;
    if (!os.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

lcs::JobSpec load(const Overrides& o) {
  std::ifstream in(o.job_path, std::ios::binary);
  if (!in) throw lcs::ParseError("cannot open job file " + o.job_path);
  std::stringstream ss;
  ss << in.rdbuf();
  lcs::JobSpec job = lcs::parse_job(ss.str());
  if (o.quad_tol) {
    if (!(*o.quad_tol > 0)) throw lcs::ParseError("--quad-tol must be positive");
    job.tolerances.quad_tol = *o.quad_tol;
  }
  if (o.ode_tol) {
    if (!(*o.ode_tol > 0)) throw lcs::ParseError("--ode-tol must be positive");
    job.tolerances.ode_tol = *o.ode_tol;
  }
  if (o.root_width) {
    lcs::Rational w;
    try {
      w = lcs::parse_rational(*o.root_width);
    } catch (const lcs::ParseError&) {
      w = lcs::from_double(std::stod(*o.root_width));
    }
    if (w <= 0) throw lcs::ParseError("--root-width must be positive");
    job.tolerances.root_width = w;
  }
  auto& sim = job.simulate;
  if (o.x0 || o.y0) {
    if (!o.x0 || !o.y0) throw lcs::ParseError("--x0 and --y0 go together");
    sim.start = lcs::State{*o.x0, *o.y0};
  }
  if (o.tau) {
    sim.tau = *o.tau;
    sim.tau_given = true;
  }
  if (o.band) sim.band = *o.band;
  if (o.branch) sim.branch = *o.branch == "minus" ? lcs::Branch::Minus : lcs::Branch::Plus;
  if (o.t_end) {
    if (!(*o.t_end > 0)) throw lcs::ParseError("--t-end must be positive");
    sim.t_end = *o.t_end;
  }
  if (o.return_map) sim.return_map = true;
  return job;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lienard systems with an algebraic limit cycle"};
  app.require_subcommand(1);
  Overrides o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--job", o.job_path, "job file (JSON)")->required();
    sub->add_option("--quad-tol", o.quad_tol, "quadrature tolerance");
    sub->add_option("--ode-tol", o.ode_tol, "ODE tolerance");
    sub->add_option("--root-width", o.root_width, "root enclosure width, rational or decimal");
    sub->add_option("--out", o.out_dir, "output directory");
    sub->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"json", "text"}));
  };

  using Cmd = lcs::CommandResult (*)(const lcs::JobSpec&);
  struct Verb {
    const char* name;
    const char* help;
    Cmd fn;
  };
  const Verb verbs[] = {
      {"synthesize", "build the system and verify the curve is invariant", lcs::cmd_synthesize},
      {"check", "certify the hypotheses band by band", lcs::cmd_check},
      {"stability", "classify each oval from the time integrals", lcs::cmd_stability},
      {"simulate", "integrate a trajectory, optionally with the return map", lcs::cmd_simulate},
      {"portrait", "draw the ovals and nearby trajectories as SVG", lcs::cmd_portrait},
      {"audit-eq7", "audit the three-parameter generalized family", lcs::cmd_audit_eq7},
  };
  std::map<CLI::App*, Cmd> handlers;
  for (const auto& [name, help, fn] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[sub] = fn;
    if (std::string(name) == "simulate" || std::string(name) == "portrait") {
      sub->add_option("--t-end", o.t_end, "integration horizon");
    }
    if (std::string(name) == "simulate") {
      sub->add_option("--x0", o.x0, "start x");
      sub->add_option("--y0", o.y0, "start y");
      sub->add_option("--tau", o.tau, "start on the oval above/below x = tau");
      sub->add_option("--band", o.band, "band index for an oval start");
      sub->add_option("--branch", o.branch, "oval branch")->check(CLI::IsMember({"plus", "minus"}));
      sub->add_flag("--return-map", o.return_map, "also estimate the multiplier from the return map");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Cmd fn = nullptr;
  for (const auto& [sub, h] : handlers) {
    if (sub->parsed()) fn = h;
  }

  lcs::JobSpec job;
  try {
    job = load(o);
  } catch (const lcs::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    const lcs::CommandResult r = fn(job);
    fs::create_directories(o.out_dir);
    const std::string json = lcs::dump_json(r.report);
    write_atomic(fs::path(o.out_dir) / "report.json", json);
    for (const auto& [name, content] : r.files) write_atomic(fs::path(o.out_dir) / name, content);
    if (o.format == "json") {
      std::fputs(json.c_str(), stdout);
    } else {
      std::fputs(r.text.c_str(), stdout);
    }
    return r.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
