#include "support.hpp"
#include "torusquant/random_inputs.hpp"

using namespace tq;
using tq::test::canonical;
using tq::test::cis_pi;
using tq::test::dist;
using tq::test::eye;
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
const Lagrangian l2 = lag(2, {{1, 0, 0, 0}, {0, 1, 0, 0}});

HeisenbergElement random_element(random::Rng& rng, std::int64_t k, const AdaptedBasis& f) {
  IntVector n(static_cast<std::size_t>(2 * f.g()));
  for (auto& x : n) x = random::uniform(rng, -2 * k, 2 * k);
  return HeisenbergElement::make(k, f, UnitPhase(Rational(random::uniform(rng, 0, 15), 8)), n);
}

// sigma_q -> phase(q) sigma_{target(q)}
ComplexMatrix monomial(const HilbertSpace& h, const std::function<IntVector(const IntVector&)>& target,
                       const std::function<double(const IntVector&)>& phase) {
  ComplexMatrix m = ComplexMatrix::Zero(h.dim(), h.dim());
  for (std::int64_t i = 0; i < h.dim(); ++i) {
    const IntVector q = h.label(i);
    IntVector t = target(q);
    for (auto& x : t) x = mod(x, h.k());
    m(h.index(t), i) = cis_pi(phase(q));
  }
  return m;
}

}  // namespace

TEST_CASE("Heisenberg group law") {
  const AdaptedBasis f = adapted_basis(e1);
  const std::int64_t k = 6;
  const HeisenbergElement w = HeisenbergElement::w(k, f, 0);
  const HeisenbergElement v = HeisenbergElement::wperp(k, f, 0);

  // central elements commute with everything and multiply phases
  const HeisenbergElement c = HeisenbergElement::central(k, f, UnitPhase(Rational(1, 3)));
  CHECK(heisenberg_mul(c, w) == heisenberg_mul(w, c));
  CHECK(heisenberg_mul(c, c) == HeisenbergElement::central(k, f, UnitPhase(Rational(2, 3))));

  // w v = e^{2 pi i / k} v w
  CHECK(heisenberg_mul(w, v) == heisenberg_mul(heisenberg_mul(v, w), HeisenbergElement::central(k, f, UnitPhase(Rational(2, k)))));

  // k W is a lattice vector, so w^k is central
  HeisenbergElement p = HeisenbergElement::central(k, f, UnitPhase());
  for (int i = 0; i < k; ++i) p = heisenberg_mul(p, w);
  CHECK(p.n == IntVector{0, 0});

  random::Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const AdaptedBasis fr = adapted_basis(random::lagrangian(rng, SymplecticSpace::standard(1 + i % 2), 3));
    const HeisenbergElement x = random_element(rng, 4, fr), y = random_element(rng, 4, fr), z = random_element(rng, 4, fr);
    CHECK(heisenberg_mul(heisenberg_mul(x, y), z) == heisenberg_mul(x, heisenberg_mul(y, z)));
  }
}

TEST_CASE("Heisenberg matrices") {
  const HilbertSpace h = canonical(e1, 2);
  const ComplexMatrix w = heisenberg_matrix(HeisenbergElement::w(2, h.frame(), 0), h);
  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = 1;
  diag(1, 1) = -1;
  CHECK(dist(w, diag) < 1e-15);

  const std::int64_t k = 4;
  const HilbertSpace h4 = canonical(e1, k);
  const ComplexMatrix a = heisenberg_matrix(HeisenbergElement::w(k, h4.frame(), 0), h4);
  const ComplexMatrix b = heisenberg_matrix(HeisenbergElement::wperp(k, h4.frame(), 0), h4);
  CHECK(dist(a * b * a.adjoint() * b.adjoint(), cis_pi(2.0 / k) * eye(k)) < 1e-14);
  const UnitPhase lam(Rational(3, 7));
  CHECK(dist(heisenberg_matrix(HeisenbergElement::central(k, h4.frame(), lam), h4), lam.value() * eye(k)) < 1e-15);

  random::Rng rng(52);
  for (int i = 0; i < 40; ++i) {
    const int g = 1 + i % 2;
    const std::int64_t kk = 2 * random::uniform(rng, 1, 3);
    const HilbertSpace hs = canonical(random::lagrangian(rng, SymplecticSpace::standard(g), 3), kk);
    const HeisenbergElement x = random_element(rng, kk, hs.frame()), y = random_element(rng, kk, hs.frame());
    const ComplexMatrix mx = heisenberg_matrix(x, hs);
    CHECK(dist(heisenberg_matrix(heisenberg_mul(x, y), hs), mx * heisenberg_matrix(y, hs)) < 1e-12);
    CHECK(dist(mx * mx.adjoint(), eye(hs.dim())) < 1e-12);
  }

  const HilbertSpace other = canonical(lag(1, {{0, 1}}), 2);
  CHECK(code_of([&] { heisenberg_matrix(HeisenbergElement::w(2, h.frame(), 0), other); }) == ErrorCode::FrameMismatch);
  CHECK(code_of([&] { heisenberg_mul(HeisenbergElement::w(2, h.frame(), 0), HeisenbergElement::w(2, other.frame(), 0)); }) ==
        ErrorCode::FrameMismatch);
}

TEST_CASE("reframing keeps the operator") {
  random::Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    const Lagrangian l = random::lagrangian(rng, SymplecticSpace::standard(1 + i % 2), 3);
    const HilbertSpace h = canonical(l, 4);
    const AdaptedBasis f = adapted_basis(l.space());
    const HeisenbergElement x = random_element(rng, 4, h.frame());
    CHECK(reframe(reframe(x, f), h.frame()) == x);
  }
}

TEST_CASE("irreducibility") {
  CHECK(heisenberg_commutant_dimension(canonical(e1, 2)) == 1);
  CHECK(heisenberg_commutant_dimension(canonical(e1, 6)) == 1);
  CHECK(heisenberg_commutant_dimension(canonical(l2, 2)) == 1);
  CHECK(heisenberg_commutant_dimension(canonical(lag(1, {{2, 3}}), 4)) == 1);
}

TEST_CASE("pushforward along stabilizing elements") {
  const std::int64_t k = 4;
  const HilbertSpace h = canonical(l2, k);
  const AdaptedBasis& f = h.frame();
  const IntMatrix a{{1, 1}, {0, 1}};
  const IntMatrix ainv = unimodular_inverse(a);
  const IntMatrix s{{1, 2}, {2, 3}};
  const SpElement b = sp_from_frame(f, block_matrix(a, a * s, IntMatrix::zero(2, 2), ainv.transpose()));

  const Intertwiner push = sp_pushforward(SpElement::identity(l2.space()), h);
  CHECK(dist(push.matrix, eye(h.dim())) < 1e-15);

  // sigma_q -> e^{i pi q^T (A^{-1} B) q / k} sigma_{A^{-T} q}
  const ComplexMatrix expected = monomial(
      h, [&](const IntVector& q) { return ainv.transpose() * q; },
      [&](const IntVector& q) {
        const IntVector sq = s * q;
        return static_cast<double>(q[0] * sq[0] + q[1] * sq[1]) / k;
      });
  CHECK(dist(u_sp(b, h), expected) < 1e-13);
  CHECK(dist(u_sp(b, h) * u_sp(b, h).adjoint(), eye(h.dim())) < 1e-13);
}

TEST_CASE("generator matrices for g = 2") {
  const std::int64_t k = 4;
  const HilbertSpace h = canonical(l2, k);
  const AdaptedBasis& f = h.frame();

  const IntMatrix a{{2, 1}, {1, 1}};
  const IntMatrix ait = unimodular_inverse(a).transpose();
  CHECK(dist(u_mp(mp_generator(f, MpKind::Alpha, a), h), monomial(h, [&](const IntVector& q) { return ait * q; },
                                                                    [](const IntVector&) { return 0.0; })) < 1e-13);

  const IntMatrix bb{{1, -1}, {-1, 2}};
  CHECK(dist(u_mp(mp_generator(f, MpKind::Beta, bb), h), monomial(h, [](const IntVector& q) { return q; },
                                                                   [&](const IntVector& q) {
                                                                     const IntVector x = bb * q;
                                                                     return static_cast<double>(q[0] * x[0] + q[1] * x[1]) / k;
                                                                   })) < 1e-13);

  ComplexMatrix fourier(h.dim(), h.dim());
  for (std::int64_t r = 0; r < h.dim(); ++r)
    for (std::int64_t c = 0; c < h.dim(); ++c) {
      const IntVector q = h.label(r), q1 = h.label(c);
      fourier(r, c) = cis_pi(2.0 * static_cast<double>(q[0] * q1[0] + q[1] * q1[1]) / k) / static_cast<double>(k);
    }
  const MpElement gamma = mp_generator(f, MpKind::Gamma);
  CHECK(dist(u_sp(gamma.b, h), fourier) < 1e-13);
  CHECK(dist(u_mp(gamma, h), cis_pi(gamma.z / 4.0) * fourier) < 1e-13);
}

TEST_CASE("metaplectic matrices for g = 1") {
  for (std::int64_t k : {2, 4, 6}) {
    const HilbertSpace h = canonical(e1, k);
    const AdaptedBasis& f = h.frame();
    CHECK(dist(u_mp(mp_generator(f, MpKind::Epsilon), h), -eye(k)) < 1e-15);
    CHECK(dist(u_mp(MpElement::identity(e1), h), eye(k)) < 1e-15);

    ComplexMatrix t = ComplexMatrix::Zero(k, k);
    for (std::int64_t q = 0; q < k; ++q) t(q, q) = cis_pi(static_cast<double>(q * q) / k);
    CHECK(dist(u_mp(mp_generator(f, MpKind::Beta, IntMatrix{{1}}), h), t) < 1e-14);

    ComplexMatrix s(k, k);
    for (std::int64_t q = 0; q < k; ++q)
      for (std::int64_t p = 0; p < k; ++p) s(q, p) = cis_pi(1.25 + 2.0 * static_cast<double>(q * p) / k) / std::sqrt(double(k));
    CHECK(dist(u_mp(mp_generator(f, MpKind::GammaEpsilon), h), s) < 1e-13);
  }
}

TEST_CASE("the Mp representation is a homomorphism on random words") {
  random::Rng rng(54);
  for (int i = 0; i < 30; ++i) {
    const HilbertSpace h = canonical(random::lagrangian(rng, SymplecticSpace::standard(1 + i % 2), 3), 2 * random::uniform(rng, 1, 2));
    const MpElement x = random::mp_generator(rng, h.frame()), y = random::mp_generator(rng, h.frame());
    CHECK(dist(u_mp(mp_mul(x, y), h), u_mp(x, h) * u_mp(y, h)) < 1e-11);
  }
}
