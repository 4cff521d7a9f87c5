#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcsynth/roots.hpp"
#include "lcsynth/unipoly.hpp"

namespace lcs {

/// A maximal interval (x_e, x_d) between consecutive simple roots of p on
/// which p is positive.
struct Band {
  RootEnclosure left;
  RootEnclosure right;
  bool contains_origin = false;
  Rational inner_lo;  // left.hi
  Rational inner_hi;  // right.lo

  Rational inner_midpoint() const { return (inner_lo + inner_hi) / 2; }
};

/// A positive stretch of p rejected because an endpoint is a multiple root.
struct RejectedBand {
  RootEnclosure left;
  RootEnclosure right;
  std::string reason;
};

struct BandScan {
  std::vector<Band> bands;
  std::vector<RejectedBand> rejected;
};

BandScan scan_bands(const UniPoly& p, const Rational& width = default_root_width());
std::vector<Band> find_bands(const UniPoly& p, const Rational& width = default_root_width());

/// Rebuilds inner interval and origin flag after the enclosures change.
Band make_band(const UniPoly& p, RootEnclosure left, RootEnclosure right);

enum class Status { Pass, Fail, Inconclusive };
const char* to_string(Status s);

struct Diagnostic {
  std::string check;
  std::string message;
  std::optional<Rational> witness;           // exact point where the check breaks
  std::optional<RootEnclosure> enclosure;    // a root of the condition polynomial inside the band
};

struct BandCertificate {
  Status positivity = Status::Fail;
  Status simple_endpoints = Status::Fail;
  Status pq2_not_one = Status::Fail;
  Status qprime_nonzero = Status::Fail;
  Status no_singular_points_on_oval = Status::Fail;
  std::vector<Diagnostic> diagnostics;
  /// Enclosures after any shrinking done to settle the checks.
  Band band;

  bool passed() const;
  /// The conditions making the oval a periodic orbit, i.e. all but q' != 0.
  bool orbit_conditions_pass() const;
};

struct CertifyOptions {
  int max_retries = 8;
};

/// Throws std::invalid_argument when the band does not belong to p.
BandCertificate certify_band(const UniPoly& p, const UniPoly& q, const Band& band, const CertifyOptions& opts = {});

struct BandReport {
  Band band;
  BandCertificate certificate;
  /// x_e < 0 < x_d as literally required by the theorem.
  bool literal_hypothesis;
};

std::vector<BandReport> check_theorem1(const UniPoly& p, const UniPoly& q,
                                       const Rational& width = default_root_width());

}  // namespace lcs
