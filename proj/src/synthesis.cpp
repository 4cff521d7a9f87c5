#include "lcsynth/synthesis.hpp"

#include <algorithm>

namespace lcs {

int SynthesizedSystem::degree() const { return std::max(P.degree(), Q.degree()); }

bool SynthesizedSystem::same_system(const SynthesizedSystem& o) const {
  return P == o.P && Q == o.Q && curve_f == o.curve_f && cofactor_k == o.cofactor_k && lienard_f == o.lienard_f &&
         lienard_g == o.lienard_g;
}

namespace {

// Q = -F y - G with F, G the Lienard coefficients.
BiPoly lienard_field(const UniPoly& F, const UniPoly& G) {
  return BiPoly::in_x(-F) * BiPoly::y() - BiPoly::in_x(G);
}

}  // namespace

SynthesizedSystem synthesize_theorem1(const Theorem1Input& in) {
  if (in.p.is_constant()) throw SynthesisError("p must be nonconstant");
  const UniPoly& p = in.p;
  const UniPoly& q = in.q;
  const UniPoly dp = p.derivative();
  const UniPoly dq = q.derivative();
  const Rational half(1, 2), three_halves(3, 2);

  SynthesizedSystem sys;
  sys.lienard_f = -(three_halves * (q * dp) + p * dq);
  sys.lienard_g = half * dp * (p * q * q - UniPoly::constant(1));
  sys.P = BiPoly::y();
  sys.Q = lienard_field(sys.lienard_f, sys.lienard_g);
  const BiPoly shifted = BiPoly::y() - BiPoly::in_x(p * q);
  sys.curve_f = shifted * shifted - BiPoly::in_x(p);
  sys.cofactor_k = BiPoly::in_x(q * dp);
  sys.provenance = in;
  return sys;
}

void validate(const AbdelkaderInput& in) {
  if (!in.p.is_even()) throw SynthesisError("p must be an even polynomial");
  if (!in.q.is_odd()) throw SynthesisError("q must be an odd polynomial");
  if (!in.h.is_odd()) throw SynthesisError("h must be an odd polynomial");
  if (in.n < 0) throw SynthesisError("n must be a nonnegative integer");
  if (in.r < 2) throw SynthesisError("r must be an integer with r >= 2");
  if (in.p.is_constant()) throw SynthesisError("p must be nonconstant");
}

SynthesizedSystem synthesize_abdelkader(const AbdelkaderInput& in) {
  validate(in);
  const UniPoly& p = in.p;
  const UniPoly& q = in.q;
  const UniPoly& h = in.h;
  const auto r = static_cast<unsigned>(in.r);
  const auto n = static_cast<unsigned>(in.n);
  const Rational m = Rational(2 * in.n + 1, 2);
  const UniPoly dp = p.derivative();
  const UniPoly p_rm1 = p.pow(r - 1);
  const UniPoly p_r = p_rm1 * p;
  // s = h p^(r-1) + q; the curve's centre line is y = p s.
  const UniPoly s = h * p_rm1 + q;

  // y-coefficient: p'[(m + r) h p^(r-1) + (m + 1) q] + h' p^r + p q'.
  const UniPoly a = dp * (Rational(m + in.r) * (h * p_rm1) + Rational(m + 1) * q) + h.derivative() * p_r + p * q.derivative();
  // m p p' (s^2 - p^(2m-2)) = m p' (p s^2 - p^(2n)), valid for n = 0 as well.
  const UniPoly g = m * dp * (p * s * s - p.pow(2 * n));

  SynthesizedSystem sys;
  sys.lienard_f = -a;
  sys.lienard_g = g;
  sys.P = BiPoly::y();
  sys.Q = lienard_field(sys.lienard_f, sys.lienard_g);
  const BiPoly shifted = BiPoly::y() - BiPoly::in_x(p * s);
  sys.curve_f = shifted * shifted - BiPoly::in_x(p.pow(2 * n + 1));
  sys.cofactor_k = BiPoly::in_x(Rational(2 * in.n + 1) * dp * s);
  sys.provenance = in;
  return sys;
}

Theorem1Input reduce_abdelkader(const AbdelkaderInput& in) {
  validate(in);
  if (in.n != 0) throw SynthesisError("reduction to the base family needs n = 0");
  Theorem1Input out{in.p, in.q + in.h * in.p.pow(static_cast<unsigned>(in.r - 1))};
  if (!synthesize_theorem1(out).same_system(synthesize_abdelkader(in))) {
    throw std::logic_error("reduced system differs from the direct synthesis");
  }
  return out;
}

InvarianceCheck verify_invariance(const SynthesizedSystem& sys) {
  BiPoly res = invariance_residual(sys.P, sys.Q, sys.curve_f, sys.cofactor_k);
  const bool ok = res.is_zero();
  return {ok, std::move(res)};
}

Theorem1Input theorem1_pair(const SynthesizedSystem& sys) {
  if (const auto* t = std::get_if<Theorem1Input>(&sys.provenance)) return *t;
  const auto& a = std::get<AbdelkaderInput>(sys.provenance);
  if (a.n != 0) throw SynthesisError("Abdelkader system with n > 0 is not of base form");
  return reduce_abdelkader(a);
}

}  // namespace lcs
