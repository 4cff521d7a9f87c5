#pragma once

#include <string>
#include <vector>

#include "lcsynth/hypotheses.hpp"
#include "lcsynth/synthesis.hpp"

namespace lcs {

struct PortraitOptions {
  double ode_tol = 1e-10;
  double t_end = 50.0;
  bool spirals = true;
  int samples_per_branch = 256;
};

struct Portrait {
  std::string svg;
  int ovals = 0;
  int spirals = 0;
  int singular_points = 0;
};

/// Static SVG of the ovals over the bands whose oval is a periodic orbit,
/// the real singular points on y = 0, and one trajectory started inside each
/// oval. With no such band the SVG only carries a notice.
Portrait render_portrait(const SynthesizedSystem& sys, const UniPoly& p, const UniPoly& q,
                         const std::vector<BandReport>& bands, const PortraitOptions& opts = {});

}  // namespace lcs
