#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcsynth/dynamics.hpp"
#include "lcsynth/rational.hpp"
#include "lcsynth/unipoly.hpp"

namespace lcs {

/// Parse failure with a 1-based source position (0 when unknown).
class JobParseError : public ParseError {
 public:
  JobParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Tolerances {
  Rational root_width = default_root_width();
  double quad_tol = 1e-10;
  double ode_tol = 1e-10;
};

struct SimulateSpec {
  std::optional<State> start;  // explicit phase-plane start
  double tau = 0.0;            // otherwise a point of the oval over band `band`
  bool tau_given = false;
  Branch branch = Branch::Plus;
  int band = 0;
  double t_end = 50.0;
  bool return_map = false;
};

/// A job file: exact coefficient lists (ascending degree) for p and q, and
/// optionally h, n, r for the Abdelkader family.
struct JobSpec {
  UniPoly p;
  UniPoly q;
  std::optional<UniPoly> h;
  std::optional<int> n;
  std::optional<int> r;
  Tolerances tolerances;
  std::vector<std::string> outputs;
  SimulateSpec simulate;

  bool has_abdelkader_inputs() const { return h.has_value() || n.has_value() || r.has_value(); }
};

JobSpec parse_job(std::string_view text);

/// 1-based (line, column) of a byte offset.
std::pair<int, int> line_column(std::string_view text, std::size_t offset);

}  // namespace lcs
