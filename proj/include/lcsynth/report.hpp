#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "lcsynth/dynamics.hpp"
#include "lcsynth/hypotheses.hpp"
#include "lcsynth/job.hpp"
#include "lcsynth/stability.hpp"
#include "lcsynth/synthesis.hpp"

namespace lcs {

using Json = nlohmann::json;

/// Deterministic serialisation: keys sorted, two-space indent, floating
/// point values at 17 significant digits in the C locale.
std::string dump_json(const Json& j);
/// "%.17g" without locale influence.
std::string format_double(double v);

Json to_json(const UniPoly& p);
Json to_json(const BiPoly& p);
Json to_json(const RootEnclosure& e);
Json to_json(const Band& b);
Json to_json(const BandCertificate& c);
Json to_json(const QuadratureResult& r);
Json to_json(const StabilityVerdict& v);
Json to_json(const SynthesizedSystem& s);
Json to_json(const SingularPoint& s);

/// Output of one CLI verb.
struct CommandResult {
  Json report;
  std::string text;
  int exit_code = 0;
  /// Extra artifacts by file name, e.g. trajectory.csv.
  std::map<std::string, std::string> files;
};

CommandResult cmd_synthesize(const JobSpec& job);
CommandResult cmd_check(const JobSpec& job);
CommandResult cmd_stability(const JobSpec& job);
CommandResult cmd_simulate(const JobSpec& job);
CommandResult cmd_portrait(const JobSpec& job);
CommandResult cmd_audit_eq7(const JobSpec& job);

/// Curve residual samples as "t,x,y,f" rows, one per accepted step.
std::string trajectory_csv(const Trajectory& tr, const BiPoly& curve_f);

}  // namespace lcs
