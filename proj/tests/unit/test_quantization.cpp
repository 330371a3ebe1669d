#include "support.hpp"
#include "torusquant/random_inputs.hpp"
#include "torusquant/reference.hpp"

using namespace tq;
using tq::test::canonical;
using tq::test::cis_pi;
using tq::test::dist;
using tq::test::eye;
using tq::test::framed;
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

double exact_gap(const Intertwiner& m) {
  double worst = 0;
  for (Eigen::Index r = 0; r < m.matrix.rows(); ++r)
    for (Eigen::Index c = 0; c < m.matrix.cols(); ++c)
      worst = std::max(worst, std::abs(m.exact_entry(r, c).evaluate() - m.matrix(r, c)));
  return worst;
}

}  // namespace

TEST_CASE("K-potential") {
  const Polarization p = Polarization::canonical(e1);
  CHECK(k_potential(p, RatVector{Rational(1, 2), Rational(3)}) == Rational(3, 4));
  CHECK(k_potential(p, RatVector{Rational(0), Rational(5)}) == 0);

  // K(X + nW + mW') - K(X) = (n b + m a + n m) / 2 for X = aW + bW'
  const SymplecticSpace s = SymplecticSpace::standard(1);
  const AdaptedBasis f{s, IntMatrix{{1, 0}}, IntMatrix{{1, 1}}};
  const Polarization q = Polarization::with_frame(e1, f);
  for (int n = -2; n <= 2; ++n)
    for (int m = -2; m <= 2; ++m) {
      const Rational a(1, 3), b(-2, 5);
      const RatVector x{a + b, b};
      const RatVector y{a + b + Rational(n + m), b + Rational(m)};
      CHECK(k_potential(q, y) - k_potential(q, x) == (Rational(n) * b + Rational(m) * a + Rational(n * m)) / 2);
    }
  CHECK(code_of([&] { Polarization::with_frame(e2, f); }) == ErrorCode::BasisMismatch);
}

TEST_CASE("intersection counts") {
  for (std::int64_t k : {2, 4, 6}) {
    const HilbertSpace h1 = canonical(e1, k);
    for (const auto& [l2, count] : std::vector<std::pair<Lagrangian, std::size_t>>{
             {e2, 1}, {lag(1, {{1, 2}}), 2}, {lag(1, {{2, 3}}), 3}}) {
      const HilbertSpace h2 = canonical(l2, k);
      for (std::int64_t q1 = 0; q1 < k; ++q1)
        for (std::int64_t q2 = 0; q2 < k; ++q2) {
          CHECK(intersection_points(h1, h2, {q1}, {q2}).size() == count);
          CHECK(reference::brute_force_intersections(h1, h2, q1, q2) == static_cast<std::int64_t>(count));
        }
    }
  }
}

TEST_CASE("transverse closed form") {
  const Intertwiner f = bks_matrix(canonical(e1, 2), canonical(e2, 2));
  ComplexMatrix expected(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) expected(a, b) = cis_pi(a * b) / std::sqrt(2.0);
  CHECK(dist(f.matrix, expected) < 1e-14);
  REQUIRE(f.exact);
  CHECK(f.exact_entry(1, 1).amp2() == 2);
  CHECK(exact_gap(f) < 1e-14);
}

TEST_CASE("transverse matrices against the point sum") {
  random::Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    const int g = 1 + i % 2;
    const std::int64_t k = 2 * random::uniform(rng, 1, 2);
    const Lagrangian a = random::lagrangian(rng, SymplecticSpace::standard(g), 3);
    const Lagrangian b = random::lagrangian_meeting(rng, a, 0, 3);
    const HilbertSpace h1 = canonical(a, k), h2 = canonical(b, k);
    const Intertwiner f = bks_matrix_transverse(h1, h2);
    CHECK(dist(f.matrix, reference::transverse_matrix(h1, h2)) < 1e-10);
    CHECK(f.unitarity_error() < 1e-12);
    if (f.exact) CHECK(exact_gap(f) < 1e-10);
    // the pairing is hermitian, so the reverse map inverts
    CHECK(dist(compose(bks_matrix(h2, h1), f).matrix, eye(f.matrix.rows())) < 1e-10);
  }
}

TEST_CASE("nontransverse closed form") {
  const Lagrangian l = lag(2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const Lagrangian m = lag(2, {{1, 0, 0, 0}, {0, 0, 0, 1}});
  const auto [p1, p2] = pair_adapted_bases(l, m);
  for (std::int64_t k : {2, 4}) {
    const HilbertSpace h1 = framed(l, p1, k), h2 = framed(m, p2, k);
    const Intertwiner f = bks_matrix_nontransverse(h1, h2);
    CHECK(dist(f.matrix, reference::nontransverse_matrix(h1, h2)) < 1e-12);
    CHECK(f.unitarity_error() < 1e-12);
    // labels with different shared coordinates do not pair
    for (std::int64_t r = 0; r < h2.dim(); ++r)
      for (std::int64_t c = 0; c < h1.dim(); ++c)
        if (h2.label(r)[1] != h1.label(c)[1]) CHECK(std::abs(f.matrix(r, c)) < 1e-15);
  }

  const HilbertSpace h = canonical(l, 4);
  CHECK(dist(bks_matrix(h, h).matrix, eye(16)) < 1e-15);
}

TEST_CASE("nontransverse matrices against the leafwise sum") {
  random::Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    const int g = 2 + i % 2;
    const Lagrangian a = random::lagrangian(rng, SymplecticSpace::standard(g), 3);
    const int shared = static_cast<int>(random::uniform(rng, 1, g - 1));
    const Lagrangian b = random::lagrangian_meeting(rng, a, shared, 3);
    const auto [f1, f2] = pair_adapted_bases(a, b);
    const HilbertSpace h1 = framed(a, f1, 2), h2 = framed(b, f2, 2);
    const Intertwiner f = bks_matrix_nontransverse(h1, h2);
    CHECK(dist(f.matrix, reference::nontransverse_matrix(h1, h2)) < 1e-10);
    CHECK(f.unitarity_error() < 1e-12);
    CHECK(bks_matrix(canonical(a, 2), canonical(b, 2)).unitarity_error() < 1e-12);
  }
}

TEST_CASE("rebasing between frames") {
  const SymplecticSpace s = SymplecticSpace::standard(1);
  const AdaptedBasis plain = adapted_basis(e1);
  const AdaptedBasis shifted{s, IntMatrix{{1, 0}}, IntMatrix{{1, 1}}};
  const AdaptedBasis flipped{s, IntMatrix{{-1, 0}}, IntMatrix{{0, -1}}};
  const std::int64_t k = 6;

  const Monomial same = rebase_monomial(e1, plain, plain, k);
  for (std::int64_t q = 0; q < k; ++q) {
    CHECK(same.source[static_cast<std::size_t>(q)] == q);
    CHECK(same.phase[static_cast<std::size_t>(q)] == UnitPhase());
  }

  const Monomial shift = rebase_monomial(e1, shifted, plain, k);
  for (std::int64_t q = 0; q < k; ++q) {
    CHECK(shift.source[static_cast<std::size_t>(q)] == q);
    CHECK(shift.phase[static_cast<std::size_t>(q)] == UnitPhase(Rational(q * q, k)));
  }
  const Monomial back = rebase_monomial(e1, plain, shifted, k);
  for (std::int64_t q = 0; q < k; ++q) CHECK(back.phase[static_cast<std::size_t>(q)] == UnitPhase(Rational(-q * q, k)));

  const Monomial flip = rebase_monomial(e1, plain, flipped, k);
  for (std::int64_t q = 0; q < k; ++q) CHECK(flip.source[static_cast<std::size_t>(q)] == mod(-q, k));

  const Intertwiner u = rebase_unitary(Polarization::canonical(e1), plain, shifted, k);
  CHECK(u.unitarity_error() < 1e-15);
  CHECK(u.source.frame() == plain);
  CHECK(u.target.frame() == shifted);
}

TEST_CASE("identity and composition") {
  random::Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    const int g = 1 + i % 2;
    const Lagrangian a = random::lagrangian(rng, SymplecticSpace::standard(g), 4);
    const HilbertSpace h = canonical(a, 4);
    CHECK(dist(bks_matrix(h, h).matrix, eye(h.dim())) < 1e-14);
  }
}

TEST_CASE("Maslov-corrected intertwiners") {
  const LagLift x = LagLift::make(e1, e2, 1);
  const Intertwiner same = corrected_intertwiner(x, x, 4);
  CHECK(dist(same.matrix, bks_matrix(canonical(e2, 4), canonical(e2, 4)).matrix) < 1e-15);
  CHECK(dist(same.matrix, eye(4)) < 1e-15);

  const LagLift y = LagLift::make(e1, e2, 3);
  CHECK(dist(corrected_intertwiner(y, x, 4).matrix, cis_pi(0.5) * eye(4)) < 1e-15);
  CHECK(dist(corrected_intertwiner(x, y, 4).matrix, cis_pi(-0.5) * eye(4)) < 1e-15);

  const LagLift z = LagLift::make(e1, lag(1, {{1, 1}}), 1);
  const Intertwiner f = corrected_intertwiner(x, z, 2);
  const ComplexMatrix plain = bks_matrix(canonical(e2, 2), canonical(lag(1, {{1, 1}}), 2)).matrix;
  CHECK(dist(f.matrix, cis_pi(mu(x, z) / 4.0) * plain) < 1e-14);
}

TEST_CASE("level validation") {
  const Polarization p = Polarization::canonical(e1);
  CHECK(code_of([&] { HilbertSpace::make(p, 3); }) == ErrorCode::InvalidModulus);
  CHECK(code_of([&] { HilbertSpace::make(p, 0); }) == ErrorCode::InvalidModulus);
  CHECK(code_of([&] { HilbertSpace::make(p, -2); }) == ErrorCode::InvalidModulus);
  CHECK(HilbertSpace::make(p, 2).dim() == 2);
}

TEST_CASE("exact forms are dropped past the term limit") {
  const Lagrangian l = lag(2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const Intertwiner big = bks_matrix(canonical(l, 4), canonical(lag(2, {{1, 0, 7, 0}, {0, 1, 0, 7}}), 4));
  CHECK(big.exact_omitted);
  CHECK_FALSE(big.exact);
  CHECK(big.unitarity_error() < 1e-12);

  const Intertwiner kept = bks_matrix(canonical(l, 4), canonical(lag(2, {{1, 0, 5, 0}, {0, 1, 0, 5}}), 4));
  CHECK_FALSE(kept.exact_omitted);
  REQUIRE(kept.exact);
  CHECK(exact_gap(kept) < 1e-12);
}
