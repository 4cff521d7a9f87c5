#pragma once

#include <stdexcept>
#include <variant>

#include "lcsynth/bipoly.hpp"
#include "lcsynth/unipoly.hpp"

namespace lcs {

class SynthesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Theorem1Input {
  UniPoly p;
  UniPoly q;
};

/// Inputs of the even/odd Abdelkader family. The half-integer exponent
/// m = n + 1/2 is derived where needed and never stored.
struct AbdelkaderInput {
  UniPoly p;  // even
  UniPoly q;  // odd
  UniPoly h;  // odd
  int n = 0;
  int r = 2;
};

enum class Construction { Theorem1, Abdelkader };

/// x' = P = y, y' = Q together with an invariant curve f = 0 and its
/// cofactor k, and the Lienard form x'' + F(x) x' + G(x) = 0.
struct SynthesizedSystem {
  BiPoly P;
  BiPoly Q;
  BiPoly curve_f;
  BiPoly cofactor_k;
  UniPoly lienard_f;
  UniPoly lienard_g;
  std::variant<Theorem1Input, AbdelkaderInput> provenance;

  Construction construction() const {
    return std::holds_alternative<Theorem1Input>(provenance) ? Construction::Theorem1 : Construction::Abdelkader;
  }
  /// max(deg P, deg Q).
  int degree() const;
  int cofactor_degree() const { return cofactor_k.degree(); }
  /// P = y and Q share a factor exactly when y divides Q, i.e. Q(x, 0) = 0.
  bool coprime() const { return !lienard_g.is_zero(); }

  /// Coefficient-exact comparison of the vector field, curve, cofactor and
  /// Lienard data; provenance is ignored.
  bool same_system(const SynthesizedSystem& o) const;
};

SynthesizedSystem synthesize_theorem1(const Theorem1Input& input);

/// Throws SynthesisError on a parity violation, r < 2 or n < 0.
void validate(const AbdelkaderInput& input);
SynthesizedSystem synthesize_abdelkader(const AbdelkaderInput& input);

/// n = 0 only: returns (p, q + h p^(r-1)) and checks that its base
/// synthesis coincides with the direct one.
Theorem1Input reduce_abdelkader(const AbdelkaderInput& input);

struct InvarianceCheck {
  bool invariant;
  BiPoly residual;
};

InvarianceCheck verify_invariance(const SynthesizedSystem& sys);

/// The (p, q) pair of a base-family system, reducing n = 0 Abdelkader inputs.
/// Throws SynthesisError for n > 0.
Theorem1Input theorem1_pair(const SynthesizedSystem& sys);

}  // namespace lcs
