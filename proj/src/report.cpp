#include "lcsynth/report.hpp"

#include <cmath>
#include <cstdio>

namespace lcs {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // a comma locale would break both JSON and CSV
  for (char& c : s) {
    if (c == ',') c = '.';
  }
  return s;
}

namespace {

void dump_string(std::string& out, const std::string& s) {
  out += Json(s).dump();
}

void dump_rec(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      // nlohmann's default object_t is a std::map, so iteration is sorted
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_string(out, it.key());
        out += ": ";
        dump_rec(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad_in;
        dump_rec(out, j[i], indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
      } else {
        out += format_double(v);
      }
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  dump_rec(out, j, 0);
  out += "\n";
  return out;
}

Json to_json(const UniPoly& p) { return Json(to_strings(p)); }

Json to_json(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e.first, e.second, to_string(c)}));
  return terms;
}

Json to_json(const RootEnclosure& e) {
  Json j;
  j["lo"] = to_string(e.lo);
  j["hi"] = to_string(e.hi);
  j["approx"] = e.exact ? to_double(*e.exact) : to_double(e.midpoint());
  j["simple"] = e.multiplicity_is_one;
  j["exact"] = e.exact ? Json(to_string(*e.exact)) : Json(nullptr);
  return j;
}

Json to_json(const Band& b) {
  Json j;
  j["left"] = to_json(b.left);
  j["right"] = to_json(b.right);
  j["contains_origin"] = b.contains_origin;
  return j;
}

Json to_json(const BandCertificate& c) {
  Json j;
  j["positivity"] = to_string(c.positivity);
  j["simple_endpoints"] = to_string(c.simple_endpoints);
  j["pq2_not_one"] = to_string(c.pq2_not_one);
  j["qprime_nonzero"] = to_string(c.qprime_nonzero);
  j["no_singular_points_on_oval"] = to_string(c.no_singular_points_on_oval);
  j["certified"] = c.passed();
  j["periodic_orbit"] = c.orbit_conditions_pass();
  Json diags = Json::array();
  for (const auto& d : c.diagnostics) {
    Json dj;
    dj["check"] = d.check;
    dj["message"] = d.message;
    if (d.witness) dj["witness"] = to_string(*d.witness);
    if (d.enclosure) dj["enclosure"] = to_json(*d.enclosure);
    diags.push_back(std::move(dj));
  }
  j["diagnostics"] = std::move(diags);
  return j;
}

Json to_json(const QuadratureResult& r) {
  Json j;
  j["value"] = r.value;
  j["estimated_error"] = r.estimated_error;
  j["nodes"] = r.node_count;
  return j;
}

Json to_json(const StabilityVerdict& v) {
  Json j;
  j["class"] = to_string(v.cls);
  j["eq6_value"] = v.eq6_value;
  j["multiplier"] = std::exp(v.eq6_value);
  j["hyperbolicity_margin"] = v.hyperbolicity_margin;
  j["residual_div_k"] = v.residual_div_k;
  j["residual_div_eq6"] = v.residual_div_eq6;
  j["qprime_sign"] = v.qprime_sign;
  j["div"] = to_json(v.div);
  j["cofactor"] = to_json(v.cofactor);
  j["eq6"] = to_json(v.eq6);
  return j;
}

Json to_json(const SynthesizedSystem& s) {
  Json j;
  j["P"] = to_json(s.P);
  j["Q"] = to_json(s.Q);
  j["curve_f"] = to_json(s.curve_f);
  j["cofactor_k"] = to_json(s.cofactor_k);
  j["lienard_f"] = to_json(s.lienard_f);
  j["lienard_g"] = to_json(s.lienard_g);
  j["degree"] = s.degree();
  j["cofactor_degree"] = s.cofactor_degree();
  j["coprime"] = s.coprime();
  Json pretty;
  pretty["P"] = to_pretty(s.P);
  pretty["Q"] = to_pretty(s.Q);
  pretty["curve_f"] = to_pretty(s.curve_f);
  pretty["cofactor_k"] = to_pretty(s.cofactor_k);
  pretty["lienard_f"] = to_pretty(s.lienard_f);
  pretty["lienard_g"] = to_pretty(s.lienard_g);
  j["pretty"] = std::move(pretty);
  Json in;
  if (const auto* t = std::get_if<Theorem1Input>(&s.provenance)) {
    in["construction"] = "theorem1";
    in["p"] = to_json(t->p);
    in["q"] = to_json(t->q);
  } else {
    const auto& a = std::get<AbdelkaderInput>(s.provenance);
    in["construction"] = "abdelkader";
    in["p"] = to_json(a.p);
    in["q"] = to_json(a.q);
    in["h"] = to_json(a.h);
    in["n"] = a.n;
    in["r"] = a.r;
  }
  j["input"] = std::move(in);
  return j;
}

Json to_json(const SingularPoint& s) {
  Json j;
  j["x"] = to_json(s.x);
  j["y"] = "0";
  j["on_curve"] = s.on_curve;
  return j;
}

std::string trajectory_csv(const Trajectory& tr, const BiPoly& curve_f) {
  const BiPolyEvaluator f(curve_f);
  std::string out = "t,x,y,f\n";
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    const State& s = tr.states[i];
    out += format_double(tr.times[i]);
    out += ',';
    out += format_double(s.x);
    out += ',';
    out += format_double(s.y);
    out += ',';
    out += format_double(f(s.x, s.y));
    out += '\n';
  }
  return out;
}

}  // namespace lcs
