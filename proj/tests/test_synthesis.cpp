#include <doctest.h>

#include "lcsynth/synthesis.hpp"
#include "support.hpp"

using namespace lcs;
using namespace testing;

namespace {

BiPoly Bx(const UniPoly& p) { return BiPoly::in_x(p); }
const BiPoly Y = BiPoly::y();

// f(-x, -y) == f, coefficientwise: every term has even total degree.
bool point_symmetric(const BiPoly& f) {
  for (const auto& [e, c] : f.terms()) {
    if ((e.first + e.second) % 2 != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("unit band with q = x expands as expected") {
  const auto sys = synthesize_theorem1({unit_band(), X()});
  const UniPoly x = X();
  // Q = (1 - 4x^2) y + (x^3 - x^5 - x)
  const BiPoly Q = Bx(C(1) - x * x * R(4)) * Y + Bx(x.pow(3) - x.pow(5) - x);
  CHECK(sys.Q == Q);
  CHECK(sys.P == Y);
  const BiPoly shifted = Y - Bx(x - x.pow(3));
  CHECK(sys.curve_f == shifted * shifted - Bx(C(1) - x * x));
  CHECK(sys.cofactor_k == Bx(x * x * R(-2)));
  CHECK(sys.lienard_f == C(-1) + x * x * R(4));
  CHECK(sys.lienard_g == x - x.pow(3) + x.pow(5));
  CHECK(sys.degree() == 5);
  CHECK(sys.cofactor_degree() == 2);
  CHECK(sys.coprime());
  CHECK(sys.construction() == Construction::Theorem1);
  const auto inv = verify_invariance(sys);
  CHECK(inv.invariant);
  CHECK(inv.residual.is_zero());
}

TEST_CASE("three-cycle pair synthesizes an invariant system") {
  const auto sys = synthesize_theorem1({three_cycle_p(), three_cycle_q()});
  CHECK(verify_invariance(sys).invariant);
  CHECK(sys.cofactor_k == Bx(three_cycle_q() * three_cycle_p().derivative()));
}

TEST_CASE("constant q still synthesizes") {
  const auto sys = synthesize_theorem1({unit_band(), C(5)});
  CHECK(sys.lienard_f == X() * R(15));
  CHECK(verify_invariance(sys).invariant);
}

TEST_CASE("constant p is rejected") { CHECK_THROWS_AS(synthesize_theorem1({C(2), X()}), SynthesisError); }

TEST_CASE("coprimality holds whenever p is nonconstant") {
  // Q(x, 0) = -(p'/2)(p q^2 - 1) cannot vanish identically
  CHECK(synthesize_theorem1({unit_band(), UniPoly{}}).coprime());
  CHECK(synthesize_theorem1({X() * X(), C(1)}).coprime());
}

TEST_CASE("tampered cofactor leaves residual -f") {
  auto sys = synthesize_theorem1({unit_band(), X()});
  sys.cofactor_k = sys.cofactor_k + BiPoly::constant(1);
  const auto inv = verify_invariance(sys);
  CHECK_FALSE(inv.invariant);
  CHECK(inv.residual == -sys.curve_f);
}

TEST_CASE("Abdelkader family, n = 0 reduces to the base construction") {
  const AbdelkaderInput in{unit_band(), X(), X(), 0, 2};
  const auto sys = synthesize_abdelkader(in);
  CHECK(verify_invariance(sys).invariant);
  const Theorem1Input red = reduce_abdelkader(in);
  CHECK(red.q == X() * R(2) - X().pow(3));
  CHECK(synthesize_theorem1(red).same_system(sys));
  CHECK(sys.construction() == Construction::Abdelkader);
  CHECK(theorem1_pair(sys).q == red.q);

  const AbdelkaderInput zero_h{unit_band(), X(), UniPoly{}, 0, 3};
  CHECK(reduce_abdelkader(zero_h).q == X());
}

TEST_CASE("Abdelkader family, n = 1 puts singular points on the curve") {
  const AbdelkaderInput in{unit_band(), X(), X(), 1, 2};
  const auto sys = synthesize_abdelkader(in);
  CHECK(verify_invariance(sys).invariant);
  const UniPoly x = X(), p = unit_band();
  const BiPoly shifted = Y - Bx(x * p * p + x * p);
  CHECK(sys.curve_f == shifted * shifted - Bx(p.pow(3)));
  for (const Rational& a : {R(-1), R(1)}) {
    CHECK(sys.Q(a, R(0)) == 0);
    CHECK(sys.P(a, R(0)) == 0);
    CHECK(sys.curve_f(a, R(0)) == 0);
  }
  CHECK_THROWS_AS(reduce_abdelkader(in), SynthesisError);
  CHECK_THROWS_AS(theorem1_pair(sys), SynthesisError);
}

TEST_CASE("Abdelkader input validation") {
  CHECK_THROWS_AS(synthesize_abdelkader({unit_band(), X(), X() * X(), 0, 2}), SynthesisError);
  CHECK_THROWS_AS(synthesize_abdelkader({unit_band() + X(), X(), X(), 0, 2}), SynthesisError);
  CHECK_THROWS_AS(synthesize_abdelkader({unit_band(), C(1) + X(), X(), 0, 2}), SynthesisError);
  CHECK_THROWS_AS(synthesize_abdelkader({unit_band(), X(), X(), 0, 1}), SynthesisError);
  CHECK_THROWS_AS(synthesize_abdelkader({unit_band(), X(), X(), -1, 2}), SynthesisError);
  CHECK_THROWS_AS(synthesize_abdelkader({C(1), X(), X(), 0, 2}), SynthesisError);
  CHECK_NOTHROW(validate({unit_band(), X(), X(), 2, 4}));
}

TEST_CASE("random pairs: exact invariance and Lienard consistency") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dp(1, 8), dq(0, 5);
  for (int i = 0; i < 100; ++i) {
    const UniPoly p = random_poly(rng, dp(rng));
    const UniPoly q = random_poly(rng, dq(rng));
    const auto sys = synthesize_theorem1({p, q});
    const auto inv = verify_invariance(sys);
    CHECK(inv.invariant);
    CHECK(inv.residual.is_zero());
    CHECK(sys.Q == -(Bx(sys.lienard_f) * Y) - Bx(sys.lienard_g));
    CHECK(sys.cofactor_k == Bx(q * p.derivative()));
    CHECK(sys.cofactor_degree() <= std::max(sys.degree() - 1, 0));
  }
}

TEST_CASE("random n = 0 Abdelkader inputs reduce exactly") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> rr(2, 4);
  for (int i = 0; i < 20; ++i) {
    const AbdelkaderInput in{random_even_nonconstant(rng, 4), random_odd(rng, 3), random_odd(rng, 3), 0, rr(rng)};
    const auto direct = synthesize_abdelkader(in);
    const auto reduced = synthesize_theorem1(reduce_abdelkader(in));
    CHECK(reduced.same_system(direct));
    CHECK(reduced.curve_f == direct.curve_f);
    CHECK(reduced.Q == direct.Q);
  }
}

TEST_CASE("random Abdelkader inputs: invariance and point symmetry of the curve") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> nn(0, 2), rr(2, 3);
  for (int i = 0; i < 30; ++i) {
    const AbdelkaderInput in{random_even_nonconstant(rng, 4), random_odd(rng, 3), random_odd(rng, 3), nn(rng),
                             rr(rng)};
    const auto sys = synthesize_abdelkader(in);
    CHECK(verify_invariance(sys).invariant);
    CHECK(point_symmetric(sys.curve_f));
    CHECK(sys.Q == -(Bx(sys.lienard_f) * Y) - Bx(sys.lienard_g));
  }
}
