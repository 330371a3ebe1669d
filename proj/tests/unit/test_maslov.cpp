#include "support.hpp"
#include "torusquant/random_inputs.hpp"
#include "torusquant/reference.hpp"

using namespace tq;
using tq::test::lag;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

const Lagrangian e1 = lag(1, {{1, 0}});
const Lagrangian e2 = lag(1, {{0, 1}});
const Lagrangian e12 = lag(1, {{1, 1}});

}  // namespace

TEST_CASE("tau examples") {
  CHECK(tau(e1, e1, e2) == 0);
  CHECK(tau(e12, e12, e1) == 0);
  // brute-force signature of the 3x3 form as the oracle
  CHECK(reference::tau_numeric(e1, e12, e2) == 1);
  CHECK(tau(e1, e12, e2) == 1);
  CHECK(tau(e2, e12, e1) == -1);
}

TEST_CASE("tau_transverse examples") {
  CHECK(tau_transverse(e1, e12, e2) == 1);
  CHECK(tau_transverse(e1, e1, e2) == 0);
  CHECK(tau_transverse(e1, e2, e2) == 0);
  CHECK(code_of([] { tau_transverse(e1, e2, e1); }) == ErrorCode::NotTransverse);
}

TEST_CASE("tau agrees with floating signatures and with tau_transverse on random triples") {
  random::Rng rng(31);
  for (int i = 0; i < 80; ++i) {
    const int g = 1 + i % 3;
    const SymplecticSpace s = SymplecticSpace::standard(g);
    const Lagrangian a = random::lagrangian(rng, s, 3);
    const Lagrangian b = random::lagrangian_meeting(rng, a, static_cast<int>(random::uniform(rng, 0, g)), 3);
    const Lagrangian c = random::lagrangian(rng, s, 3);
    const int t = tau(a, b, c);
    CHECK(t == reference::tau_numeric(a, b, c));
    CHECK(std::abs(t) <= g);
    if (intersect(a, c).rank() == 0) CHECK(tau_transverse(a, b, c) == t);
  }
}

TEST_CASE("mu examples") {
  const LagLift a = LagLift::make(e1, e12, 1);
  const LagLift b = LagLift::make(e1, e2, 1);
  CHECK(mu(a, a) == 0);
  CHECK(mu(a, b) == 1);
  CHECK(mod(mu(a, b) + mu(b, a), 8) == 0);
  for (int q : {1, 2, 4}) {
    const LagLift x = LagLift::make(e1, e12, 1, q);
    const LagLift y = LagLift::make(e1, e2, 1, q);
    CHECK(mu(x, x, q) == 0);
    CHECK(mod(mu(x, y, q) + mu(y, x, q), 2 * q) == 0);
  }
  CHECK(code_of([] { LagLift::make(e1, e2, 2); }) == ErrorCode::InvalidLift);
  CHECK(code_of([] { LagLift::make(e1, e1, 1); }) == ErrorCode::InvalidLift);
  CHECK(code_of([] { mu(LagLift::make(e1, e2, 1), LagLift::make(e2, e1, 1)); }) == ErrorCode::BaseMismatch);
}

TEST_CASE("Sp elements") {
  const SymplecticSpace s = SymplecticSpace::standard(1);
  CHECK(code_of([&] { SpElement::make(s, IntMatrix{{1, 1}, {1, 1}}); }) == ErrorCode::NotSymplectic);
  const SpElement t = SpElement::make(s, IntMatrix{{1, 1}, {0, 1}});
  CHECK(t * t.inverse() == SpElement::identity(s));
  CHECK(t.apply(e2) == e12);
  CHECK(t.apply(e1) == e1);
}

TEST_CASE("Mp generators and products") {
  const AdaptedBasis f = adapted_basis(e1);
  const MpElement id = MpElement::identity(e1);
  const MpElement eps = mp_generator(f, MpKind::Epsilon);
  const MpElement gamma = mp_generator(f, MpKind::Gamma);
  const MpElement s5 = mp_generator(f, MpKind::GammaEpsilon);
  const MpElement beta1 = mp_generator(f, MpKind::Beta, IntMatrix{{1}});

  CHECK(mp_generator(f, MpKind::Alpha, IntMatrix{{1}}) == id);
  CHECK(mp_generator(f, MpKind::Alpha, IntMatrix{{-1}}).z == 2);
  CHECK(gamma.z == 1);
  CHECK(gamma.b.matrix() == IntMatrix{{0, 1}, {-1, 0}});
  CHECK(s5.z == 5);
  CHECK(s5 == mp_mul(gamma, eps));
  CHECK(eps.z == 4);

  CHECK(mp_mul(gamma, id) == gamma);
  CHECK(mp_mul(eps, eps) == id);
  // (gamma beta_1)^3 = epsilon for odd g
  const MpElement gb = mp_mul(gamma, beta1);
  CHECK(mp_mul(gb, mp_mul(gb, gb)) == eps);
  // with S = (S, 5) and T = (T, 0): (ST)^3 = e, S^4 = epsilon
  const MpElement st = mp_mul(s5, beta1);
  CHECK(mp_mul(st, mp_mul(st, st)) == id);
  CHECK(mp_mul(mp_mul(s5, s5), mp_mul(s5, s5)) == eps);
  CHECK(mp_mul(gb, gb).checked);
  CHECK_FALSE(MpElement::make(e1, gamma.b, 1).checked);
  CHECK(code_of([&] { MpElement::make(e1, gamma.b, 2); }) == ErrorCode::InvalidLift);

  const AdaptedBasis f2 = adapted_basis(lag(2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(mp_generator(f2, MpKind::Gamma).z == 2);
  CHECK(mp_generator(f2, MpKind::GammaEpsilon).z == 6);
  CHECK(code_of([&] { mp_generator(f2, MpKind::Beta, IntMatrix{{0, 1}, {0, 0}}); }) == ErrorCode::NotSymmetric);
}

TEST_CASE("Mp action on lifts") {
  const AdaptedBasis f = adapted_basis(e1);
  const LagLift x = LagLift::make(e1, e12, 3);
  CHECK(mp_act(MpElement::identity(e1), x).lambda == x.lambda);
  CHECK(mp_act(MpElement::identity(e1), x).L == x.L);
  CHECK(mp_act(mp_generator(f, MpKind::Epsilon), x).lambda == mod(x.lambda + 4, 8));

  random::Rng rng(32);
  for (int i = 0; i < 60; ++i) {
    const int g = 1 + i % 2;
    const Lagrangian base = random::lagrangian(rng, SymplecticSpace::standard(g));
    const AdaptedBasis frame = adapted_basis(base);
    const MpElement a = mp_mul(random::mp_generator(rng, frame), random::mp_generator(rng, frame));
    const MpElement b = random::mp_generator(rng, frame);
    const LagLift l = random::lift(rng, base, random::lagrangian(rng, base.space()));
    const LagLift lhs = mp_act(mp_mul(a, b), l);
    const LagLift rhs = mp_act(a, mp_act(b, l));
    CHECK(lhs.L == rhs.L);
    CHECK(lhs.lambda == rhs.lambda);
    // the action preserves mu
    const LagLift m = random::lift(rng, base, random::lagrangian(rng, base.space()));
    CHECK(mu(mp_act(a, l), mp_act(a, m)) == mu(l, m));
  }
}

TEST_CASE("mp_mul is associative on random words") {
  random::Rng rng(33);
  for (int i = 0; i < 60; ++i) {
    const Lagrangian base = random::lagrangian(rng, SymplecticSpace::standard(1 + i % 2));
    const AdaptedBasis frame = adapted_basis(base);
    const MpElement x = random::mp_generator(rng, frame), y = random::mp_generator(rng, frame), z = random::mp_generator(rng, frame);
    CHECK(mp_mul(mp_mul(x, y), z) == mp_mul(x, mp_mul(y, z)));
  }
}
