#include "lcsynth/job.hpp"

#include <json.hpp>

namespace lcs {

using nlohmann::json;

JobParseError::JobParseError(const std::string& what, int line, int column)
    : ParseError(line > 0 ? what + " at line " + std::to_string(line) + ", column " + std::to_string(column) : what),
      line_(line),
      column_(column) {}

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

namespace {

std::size_t skip_ws(std::string_view t, std::size_t i) {
  while (i < t.size() && (t[i] == ' ' || t[i] == '\t' || t[i] == '\n' || t[i] == '\r')) ++i;
  return i;
}

std::size_t skip_string(std::string_view t, std::size_t i) {
  // t[i] == '"'
  for (++i; i < t.size(); ++i) {
    if (t[i] == '\\') {
      ++i;
    } else if (t[i] == '"') {
      return i + 1;
    }
  }
  return t.size();
}

std::size_t skip_value(std::string_view t, std::size_t i) {
  i = skip_ws(t, i);
  if (i >= t.size()) return i;
  if (t[i] == '"') return skip_string(t, i);
  if (t[i] == '[' || t[i] == '{') {
    int depth = 0;
    for (; i < t.size(); ++i) {
      if (t[i] == '"') {
        i = skip_string(t, i) - 1;
      } else if (t[i] == '[' || t[i] == '{') {
        ++depth;
      } else if (t[i] == ']' || t[i] == '}') {
        if (--depth == 0) return i + 1;
      }
    }
    return i;
  }
  while (i < t.size() && t[i] != ',' && t[i] != ']' && t[i] != '}') ++i;
  return i;
}

// Offset of element `index` in the array stored under top-level `key`, or
// npos. Good enough for error positions in well-formed JSON.
std::size_t locate_element(std::string_view t, const std::string& key, std::size_t index) {
  const std::string needle = "\"" + key + "\"";
  std::size_t pos = 0;
  while ((pos = t.find(needle, pos)) != std::string_view::npos) {
    std::size_t i = skip_ws(t, pos + needle.size());
    if (i < t.size() && t[i] == ':') {
      i = skip_ws(t, i + 1);
      if (i < t.size() && t[i] == '[') {
        i = skip_ws(t, i + 1);
        for (std::size_t k = 0; k < index; ++k) {
          i = skip_ws(t, skip_value(t, i));
          if (i < t.size() && t[i] == ',') i = skip_ws(t, i + 1);
        }
        return i;
      }
      return i;
    }
    pos += needle.size();
  }
  return std::string_view::npos;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
  if (offset == std::string_view::npos) throw JobParseError(what, 0, 0);
  const auto [line, col] = line_column(text, offset);
  throw JobParseError(what, line, col);
}

UniPoly read_poly(const json& j, std::string_view text, const std::string& key) {
  const std::size_t key_pos = locate_element(text, key, 0);
  if (!j.is_array()) fail_at(text, key_pos, "'" + key + "' must be an array of rational strings");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& c = j[i];
    try {
      if (c.is_string()) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
      } else if (c.is_number_integer()) {
        coeffs.push_back(parse_rational(std::to_string(c.get<long long>())));
      } else {
        throw ParseError("coefficient must be a rational string");
      }
    } catch (const ParseError& e) {
      fail_at(text, locate_element(text, key, i), key + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return UniPoly(std::move(coeffs));
}

double positive_number(const json& j, const std::string& name) {
  double v = 0.0;
  if (j.is_number()) {
    v = j.get<double>();
  } else if (j.is_string()) {
    v = to_double(parse_rational(j.get<std::string>()));
  } else {
    throw JobParseError(name + " must be a number", 0, 0);
  }
  if (!(v > 0.0)) throw JobParseError(name + " must be positive", 0, 0);
  return v;
}

}  // namespace

JobSpec parse_job_tree(std::string_view text);

JobSpec parse_job(std::string_view text) {
  try {
    return parse_job_tree(text);
  } catch (const json::exception& e) {
    throw JobParseError(std::string("invalid job field: ") + e.what(), 0, 0);
  }
}

JobSpec parse_job_tree(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    fail_at(text, at, "malformed JSON");
  }
  if (!root.is_object()) throw JobParseError("job file must hold a JSON object", 1, 1);

  JobSpec job;
  if (!root.contains("p")) throw JobParseError("job file lacks 'p'", 0, 0);
  job.p = read_poly(root["p"], text, "p");
  job.q = root.contains("q") ? read_poly(root["q"], text, "q") : UniPoly{};
  if (root.contains("h")) job.h = read_poly(root["h"], text, "h");
  auto read_int = [&](const char* key) -> std::optional<int> {
    if (!root.contains(key)) return std::nullopt;
    const json& v = root[key];
    if (!v.is_number_integer()) fail_at(text, text.find(std::string("\"") + key + "\""), std::string(key) + " must be an integer");
    return v.get<int>();
  };
  job.n = read_int("n");
  job.r = read_int("r");

  if (root.contains("tolerances")) {
    const json& t = root["tolerances"];
    if (t.contains("root_width")) {
      const json& w = t["root_width"];
      job.tolerances.root_width = w.is_string() ? parse_rational(w.get<std::string>()) : from_double(w.get<double>());
      if (job.tolerances.root_width <= 0) throw JobParseError("root_width must be positive", 0, 0);
    }
    if (t.contains("quad_tol")) job.tolerances.quad_tol = positive_number(t["quad_tol"], "quad_tol");
    if (t.contains("ode_tol")) job.tolerances.ode_tol = positive_number(t["ode_tol"], "ode_tol");
  }
  if (root.contains("outputs")) {
    for (const auto& o : root["outputs"]) job.outputs.push_back(o.get<std::string>());
  }
  if (root.contains("simulate")) {
    const json& s = root["simulate"];
    auto& sim = job.simulate;
    if (s.contains("start")) sim.start = State{s["start"].at("x").get<double>(), s["start"].at("y").get<double>()};
    if (s.contains("tau")) {
      sim.tau = s["tau"].get<double>();
      sim.tau_given = true;
    }
    if (s.contains("branch")) {
      const auto b = s["branch"].get<std::string>();
      if (b != "plus" && b != "minus") throw JobParseError("branch must be 'plus' or 'minus'", 0, 0);
      sim.branch = b == "plus" ? Branch::Plus : Branch::Minus;
    }
    if (s.contains("band")) sim.band = s["band"].get<int>();
    if (s.contains("t_end")) sim.t_end = positive_number(s["t_end"], "t_end");
    if (s.contains("return_map")) sim.return_map = s["return_map"].get<bool>();
  }
  return job;
}

}  // namespace lcs
