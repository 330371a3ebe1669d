#include "support.hpp"
#include "torusquant/random_inputs.hpp"

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

}  // namespace

TEST_CASE("omega on the standard space") {
  const SymplecticSpace s = SymplecticSpace::standard(1);
  CHECK(omega(s, IntVector{1, 0}, IntVector{0, 1}) == 1);
  CHECK(omega(s, IntVector{1, 2}, IntVector{1, 0}) == -2);
  CHECK(omega(s, RatVector{Rational(1, 3), Rational(2)}, RatVector{Rational(1, 3), Rational(2)}) == 0);
  random::Rng rng(21);
  const SymplecticSpace s2 = SymplecticSpace::standard(2);
  for (int i = 0; i < 20; ++i) {
    IntVector x(4), y(4);
    for (auto& v : x) v = random::uniform(rng, -5, 5);
    for (auto& v : y) v = random::uniform(rng, -5, 5);
    CHECK(omega(s2, x, x) == 0);
    CHECK(omega(s2, x, y) == -omega(s2, y, x));
  }
}

TEST_CASE("space validation") {
  CHECK(code_of([] { SymplecticSpace::from_gram(IntMatrix{{0, 1}, {1, 0}}); }) == ErrorCode::NotSymplectic);
  CHECK(code_of([] { SymplecticSpace::from_gram(IntMatrix{{0, 2}, {-2, 0}}); }) == ErrorCode::NotUnimodular);
  CHECK(SymplecticSpace::from_gram(IntMatrix{{0, 1}, {-1, 0}}).is_standard());
}

TEST_CASE("Lagrangian validation") {
  const SymplecticSpace s = SymplecticSpace::standard(2);
  CHECK(code_of([&] { Lagrangian::from_rows(s, IntMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}}); }) == ErrorCode::NotIsotropic);
  CHECK(code_of([&] { Lagrangian::from_rows(s, IntMatrix{{2, 0, 0, 0}}); }) == ErrorCode::NotPrimitive);
  CHECK(code_of([&] { Lagrangian::from_rows(s, IntMatrix{{1, 0, 0, 0}, {2, 0, 0, 0}}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { Lagrangian::from_rows(s, IntMatrix{{1, 0, 0}}); }) == ErrorCode::DimensionMismatch);
  const Lagrangian l = Lagrangian::saturated(s, IntMatrix{{2, 0, 0, 0}, {0, 3, 0, 0}});
  CHECK(l.gens() == IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(l.contains({5, -7, 0, 0}));
  CHECK_FALSE(l.contains({0, 0, 1, 0}));
}

TEST_CASE("adapted basis examples") {
  const AdaptedBasis b = adapted_basis(lag(1, {{1, 0}}));
  CHECK(b.W == IntMatrix{{1, 0}});
  CHECK(b.Wperp == IntMatrix{{0, 1}});

  const Lagrangian l = lag(1, {{1, 2}});
  const AdaptedBasis c = adapted_basis(l);
  CHECK(c.W == IntMatrix{{1, 2}});
  CHECK(omega(l.space(), c.W.row(0), c.Wperp.row(0)) == 1);
  CHECK(std::abs(det(c.stack())) == 1);
  CHECK(c.is_valid());
}

TEST_CASE("adapted bases of random isotropic sublattices") {
  random::Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    const int g = 1 + i % 3;
    const Lagrangian full = random::lagrangian(rng, SymplecticSpace::standard(g), 4);
    const int r = static_cast<int>(random::uniform(rng, 0, g));
    const Lagrangian part = Lagrangian::saturated(full.space(), full.gens().row_range(0, std::max(r, 1)));
    for (const Lagrangian& l : {full, part}) {
      const AdaptedBasis b = adapted_basis(l);
      CHECK(b.is_valid());
      CHECK(Lagrangian::saturated(l.space(), b.W.row_range(0, l.rank())) == l);
    }
  }
}

TEST_CASE("normalizing a nonstandard unimodular form") {
  const IntMatrix gram{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  const SymplecticSpace s = SymplecticSpace::from_gram(gram);
  const AdaptedBasis b = adapted_basis(s);
  CHECK(b.is_valid());
  const Normalization n = normalize(s);
  CHECK(n.standard.is_standard());
  CHECK(n.row_map * n.standard.gram * n.row_map.transpose() == gram);

  const IntMatrix skewed{{0, 1, 1, 0}, {-1, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  const SymplecticSpace t = SymplecticSpace::from_gram(skewed);
  const Normalization m = normalize(t);
  CHECK(m.row_map * m.standard.gram * m.row_map.transpose() == skewed);
}

TEST_CASE("intersections") {
  const Lagrangian a = lag(2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(lag(1, {{1, 0}}), lag(1, {{0, 1}})).rank() == 0);
  // span(e1, e2) and span(e1, e4) meet in span(e1)
  const Lagrangian b = lag(2, {{1, 0, 0, 0}, {0, 0, 0, 1}});
  const Lagrangian ab = intersect(a, b);
  REQUIRE(ab.rank() == 1);
  CHECK(ab.gens() == IntMatrix{{1, 0, 0, 0}});
}

TEST_CASE("pair adapted bases") {
  const Lagrangian l = lag(2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const auto [b1, b2] = pair_adapted_bases(l, l);
  CHECK(b1 == b2);

  const auto [t1, t2] = pair_adapted_bases(lag(1, {{1, 0}}), lag(1, {{0, 1}}));
  CHECK(t1.is_valid());
  CHECK(t2.is_valid());
  CHECK(is_pair_adapted(t1, t2, 1));

  const Lagrangian m = lag(2, {{1, 0, 0, 0}, {0, 0, 0, 1}});
  const auto [p1, p2] = pair_adapted_bases(l, m);
  CHECK(is_pair_adapted(p1, p2, 1));
  CHECK(p1.W.row(1) == p2.W.row(1));
  CHECK(p1.Wperp.row(1) == p2.Wperp.row(1));
  CHECK(Lagrangian::saturated(l.space(), p1.W.row_range(1, 1)) == intersect(l, m));
  CHECK(p1.lagrangian() == l);
  CHECK(p2.lagrangian() == m);

  random::Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    const int g = 2 + i % 2;
    const Lagrangian x = random::lagrangian(rng, SymplecticSpace::standard(g), 4);
    const int shared = static_cast<int>(random::uniform(rng, 1, g - 1));
    const Lagrangian y = random::lagrangian_meeting(rng, x, shared, 4);
    const auto [c1, c2] = pair_adapted_bases(x, y);
    CHECK(c1.is_valid());
    CHECK(c2.is_valid());
    CHECK(is_pair_adapted(c1, c2, g - shared));
    CHECK(c1.lagrangian() == x);
    CHECK(c2.lagrangian() == y);
  }
}

TEST_CASE("omega blocks") {
  const AdaptedBasis b = adapted_basis(lag(2, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  const OmegaBlocks same = omega_blocks(b, b);
  CHECK(same.w21.is_zero());
  CHECK(same.w21p == IntMatrix::identity(2));

  const SymplecticSpace s = SymplecticSpace::standard(1);
  const AdaptedBasis b1{s, IntMatrix{{1, 0}}, IntMatrix{{0, 1}}};
  const AdaptedBasis b2{s, IntMatrix{{0, 1}}, IntMatrix{{-1, 0}}};
  CHECK(omega_blocks(b1, b2).w21 == IntMatrix{{-1}});

  // shared last pair: omega(2,1) vanishes off the transverse corner and omega(2,1perp) has an identity corner
  const auto [p1, p2] = pair_adapted_bases(lag(2, {{1, 0, 0, 0}, {0, 1, 0, 0}}), lag(2, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  const OmegaBlocks nt = omega_blocks(p1, p2);
  CHECK(nt.w21(1, 0) == 0);
  CHECK(nt.w21(0, 1) == 0);
  CHECK(nt.w21(1, 1) == 0);
  CHECK(nt.w21(0, 0) != 0);
  CHECK(nt.w21p(1, 1) == 1);
  CHECK(nt.w21p(1, 0) == 0);
}
