#include "lcsynth/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "lcsynth/dynamics.hpp"
#include "lcsynth/stability.hpp"

namespace lcs {

namespace {

using Polyline = std::vector<State>;

struct Box {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  void add(const State& s) {
    x0 = std::min(x0, s.x);
    x1 = std::max(x1, s.x);
    y0 = std::min(y0, s.y);
    y1 = std::max(y1, s.y);
  }
  bool empty() const { return x0 > x1; }
};

Polyline oval_outline(const UniPoly& p, const UniPoly& q, double xe, double xd, int n) {
  const double c = 0.5 * (xe + xd), h = 0.5 * (xd - xe);
  Polyline upper, lower;
  for (int k = 0; k <= n; ++k) {
    // cosine spacing crowds samples near the vertical tangents
    const double x = c - h * std::cos(std::numbers::pi * k / n);
    const double pv = std::max(0.0, p(x));
    const double mid = pv * q(x), r = std::sqrt(pv);
    upper.push_back({x, mid + r});
    lower.push_back({x, mid - r});
  }
  Polyline out(upper);
  out.insert(out.end(), lower.rbegin(), lower.rend());
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

Portrait render_portrait(const SynthesizedSystem& sys, const UniPoly& p, const UniPoly& q,
                         const std::vector<BandReport>& bands, const PortraitOptions& opts) {
  constexpr double W = 800.0, H = 600.0, margin = 40.0;
  Portrait out;
  std::vector<Polyline> ovals, spirals;
  Box box;

  for (const auto& br : bands) {
    if (!br.certificate.orbit_conditions_pass()) continue;
    const Band& band = br.certificate.band;
    const auto [xe, xd] = band_endpoints(p, band);
    ovals.push_back(oval_outline(p, q, xe, xd, opts.samples_per_branch));
    for (const auto& s : ovals.back()) box.add(s);
    if (!opts.spirals) continue;
    const double xm = 0.5 * (xe + xd);
    const double pv = p(xm);
    const State start{xm, pv * q(xm) + 0.5 * std::sqrt(pv)};
    try {
      const Trajectory tr = integrate(sys, start, opts.t_end, opts.ode_tol);
      spirals.push_back(tr.states);
    } catch (const IntegrationError&) {
      // escaping orbit, nothing to draw
    }
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";

  if (ovals.empty()) {
    svg += "<text x=\"400\" y=\"300\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
           "no certified band: empty portrait</text>\n</svg>\n";
    out.svg = std::move(svg);
    return out;
  }

  const auto singular = find_singular_points(sys);
  for (const auto& sp : singular) box.add(sp.at);

  const double dx = std::max(box.x1 - box.x0, 1e-9), dy = std::max(box.y1 - box.y0, 1e-9);
  const double scale = std::min((W - 2 * margin) / dx, (H - 2 * margin) / dy);
  const double ox = 0.5 * (W - scale * dx), oy = 0.5 * (H - scale * dy);
  auto X = [&](double x) { return ox + (x - box.x0) * scale; };
  auto Y = [&](double y) { return H - (oy + (y - box.y0) * scale); };
  auto inside = [&](const State& s) {
    const double u = X(s.x), v = Y(s.y);
    return u >= 0 && u <= W && v >= 0 && v <= H;
  };
  auto path = [&](const Polyline& pl, bool close) {
    std::string d;
    bool pen = false;
    for (const auto& s : pl) {
      if (!inside(s)) {
        pen = false;
        continue;
      }
      d += pen ? " L" : (d.empty() ? "M" : " M");
      d += fmt(X(s.x)) + "," + fmt(Y(s.y));
      pen = true;
    }
    if (close) d += " Z";
    return d;
  };

  // axes
  if (box.y0 <= 0 && box.y1 >= 0) {
    svg += "<line x1=\"0\" y1=\"" + fmt(Y(0)) + "\" x2=\"800\" y2=\"" + fmt(Y(0)) +
           "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  if (box.x0 <= 0 && box.x1 >= 0) {
    svg += "<line x1=\"" + fmt(X(0)) + "\" y1=\"0\" x2=\"" + fmt(X(0)) +
           "\" y2=\"600\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  for (const auto& pl : spirals) {
    svg += "<path class=\"trajectory\" d=\"" + path(pl, false) +
           "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.8\"/>\n";
    ++out.spirals;
  }
  for (const auto& pl : ovals) {
    svg += "<path class=\"oval\" d=\"" + path(pl, true) + "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n";
    ++out.ovals;
  }
  for (const auto& sp : singular) {
    if (!inside(sp.at)) continue;
    svg += "<circle class=\"singular\" cx=\"" + fmt(X(sp.at.x)) + "\" cy=\"" + fmt(Y(0)) + "\" r=\"4\" fill=\"" +
           (sp.on_curve ? "#d62728" : "#222222") + "\"/>\n";
    ++out.singular_points;
  }
  svg += "</svg>\n";
  out.svg = std::move(svg);
  return out;
}

}  // namespace lcs
