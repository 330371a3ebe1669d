#include "torusquant/verify.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "torusquant/random_inputs.hpp"
#include "torusquant/reference.hpp"
#include "torusquant/representations.hpp"

namespace tq::verify {

namespace {

using random::Rng;
using random::uniform;

class Tally {
 public:
  explicit Tally(std::string suite) { r_.suite = std::move(suite); }

  void check(double err, double tol, const std::string& what) {
    ++r_.cases;
    if (std::isnan(err)) err = INFINITY;
    r_.max_error = std::max(r_.max_error, err);
    if (err > tol) fail(what);
  }
  void check_exact(bool ok, const std::string& what) {
    ++r_.cases;
    if (!ok) {
      r_.max_error = std::max(r_.max_error, 1.0);
      fail(what);
    }
  }
  void detail(std::string line) { r_.details.push_back(std::move(line)); }
  Report done() { return r_; }

 private:
  void fail(const std::string& what) {
    if (r_.failures++ == 0) r_.first_failure = what;
  }
  Report r_;
};

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }
ComplexMatrix eye(std::int64_t n) { return ComplexMatrix::Identity(n, n); }

// Distance of an angle from 0 on the circle.
double angle_error(double a) { return std::abs(std::remainder(a, 2 * std::numbers::pi)); }

std::string describe(const Lagrangian& l) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < l.rank(); ++i) {
    os << (i ? " " : "") << "(";
    for (int j = 0; j < l.gens().cols(); ++j) os << (j ? "," : "") << l.gens()(i, j);
    os << ")";
  }
  os << "]";
  return os.str();
}

SymplecticSpace space(int g) { return SymplecticSpace::standard(g); }
int pick_g(Rng& rng) { return static_cast<int>(uniform(rng, 1, 2)); }
std::int64_t pick_k(Rng& rng) { return uniform(rng, 0, 1) ? 4 : 2; }

// Another adapted frame of the same Lagrangian: alpha and beta words fix L.
AdaptedBasis random_frame(Rng& rng, const Lagrangian& l) {
  const AdaptedBasis canon = adapted_basis(l);
  const int g = l.g();
  IntMatrix shear = IntMatrix::identity(2 * g);
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) shear(i, g + j) = shear(j, g + i) = uniform(rng, -1, 1);
  const IntMatrix a = random::unimodular(rng, g, 2);
  const IntMatrix zero = IntMatrix::zero(g, g);
  const IntMatrix alpha = block_matrix(a, zero, zero, unimodular_inverse(a).transpose());
  return sp_from_frame(canon, alpha * shear).apply(canon);
}

HilbertSpace canonical_space(const Lagrangian& l, std::int64_t k) { return HilbertSpace::make(Polarization::canonical(l), k); }

HilbertSpace framed_space(Rng& rng, const Lagrangian& l, std::int64_t k) {
  return HilbertSpace::make(Polarization::with_frame(l, random_frame(rng, l)), k);
}

Lagrangian random_partner(Rng& rng, const Lagrangian& l) {
  return random::lagrangian_meeting(rng, l, static_cast<int>(uniform(rng, 0, l.g())));
}

// Largest |exact - float| over the entries of an intertwiner that kept its exact form.
double exact_error(const Intertwiner& f) {
  if (!f.exact) return 0;
  double e = 0;
  for (std::int64_t r = 0; r < f.matrix.rows(); ++r)
    for (std::int64_t c = 0; c < f.matrix.cols(); ++c) e = std::max(e, std::abs(f.exact_entry(r, c).evaluate() - f.matrix(r, c)));
  return e;
}

HeisenbergElement random_heisenberg(Rng& rng, std::int64_t k, const AdaptedBasis& frame) {
  IntVector n(static_cast<std::size_t>(2 * frame.g()));
  for (auto& x : n) x = uniform(rng, -2 * k, 2 * k);
  return HeisenbergElement::make(k, frame, UnitPhase(Rational(uniform(rng, 0, 15), 8)), n);
}

std::int64_t frame_omega(const IntVector& x, const IntVector& y) {
  const std::size_t g = x.size() / 2;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g; ++i) s += x[i] * y[g + i] - x[g + i] * y[i];
  return s;
}

}  // namespace

Report unitarity(const Options& opt, int cases) {
  Rng rng(opt.seed);
  Tally t("unitarity");
  for (int i = 0; i < cases; ++i) {
    const std::int64_t k = pick_k(rng);
    const Lagrangian l1 = random::lagrangian(rng, space(pick_g(rng)));
    // alternate transverse and nontransverse partners
    const int shared = i % 2 == 0 ? 0 : static_cast<int>(uniform(rng, 1, l1.g()));
    const Lagrangian l2 = random::lagrangian_meeting(rng, l1, shared);
    const Intertwiner f = bks_matrix(framed_space(rng, l1, k), framed_space(rng, l2, k));
    t.check(f.unitarity_error(), opt.tolerance, "F " + describe(l1) + " -> " + describe(l2));
  }
  return t.done();
}

Report triple(const Options& opt, int cases) {
  Rng rng(opt.seed + 1);
  Tally t("triple");
  for (int i = 0; i < cases; ++i) {
    const std::int64_t k = pick_k(rng);
    const Lagrangian l1 = random::lagrangian(rng, space(pick_g(rng)));
    const Lagrangian l2 = random_partner(rng, l1);
    const Lagrangian l3 = random_partner(rng, uniform(rng, 0, 1) ? l1 : l2);
    const HilbertSpace h1 = framed_space(rng, l1, k), h2 = framed_space(rng, l2, k), h3 = framed_space(rng, l3, k);
    const ComplexMatrix f = compose(bks_matrix(h3, h1), compose(bks_matrix(h2, h3), bks_matrix(h1, h2))).matrix;
    const int tv = tau(l1, l2, l3);
    const Complex c = f(0, 0);
    double err = dist(f, c * eye(f.rows()));
    err = std::max(err, std::abs(std::abs(c) - 1.0));
    err = std::max(err, angle_error(std::arg(c) + std::numbers::pi * tv / 4.0));
    t.check(err, opt.tolerance, "triple " + describe(l1) + " " + describe(l2) + " " + describe(l3));
    if (opt.details) {
      std::ostringstream os;
      os.precision(17);
      os << "case " << i << " g=" << l1.g() << " k=" << k << " tau=" << tv << " phase=" << std::arg(c)
         << " expected=" << std::remainder(-std::numbers::pi * tv / 4.0, 2 * std::numbers::pi) + 0.0 << " error=" << err;
      t.detail(os.str());
    }
    t.check_exact(tv == reference::tau_numeric(l1, l2, l3), "tau vs eigenvalues " + describe(l1) + " " + describe(l2) + " " + describe(l3));
  }
  return t.done();
}

Report corrected(const Options& opt, int cases) {
  Rng rng(opt.seed + 2);
  Tally t("corrected");
  for (int i = 0; i < cases; ++i) {
    const std::int64_t k = pick_k(rng);
    const Lagrangian base = random::lagrangian(rng, space(pick_g(rng)));
    const Lagrangian l1 = random_partner(rng, base);
    const Lagrangian l2 = random_partner(rng, l1);
    const Lagrangian l3 = random_partner(rng, uniform(rng, 0, 1) ? l1 : base);
    const LagLift a = random::lift(rng, base, l1), b = random::lift(rng, base, l2), c = random::lift(rng, base, l3);
    const ComplexMatrix f = compose(corrected_intertwiner(c, a, k), compose(corrected_intertwiner(b, c, k), corrected_intertwiner(a, b, k))).matrix;
    t.check(dist(f, eye(f.rows())), opt.tolerance, "lifted triple " + describe(l1) + " " + describe(l2) + " " + describe(l3));
  }
  return t.done();
}

Report oracle(const Options& opt) {
  Rng rng(opt.seed + 3);
  Tally t("oracle");
  const double tol = opt.oracle_tolerance;
  auto compare = [&](const HilbertSpace& h1, const HilbertSpace& h2, bool transverse) {
    const Intertwiner f = transverse ? bks_matrix_transverse(h1, h2) : bks_matrix_nontransverse(h1, h2);
    const ComplexMatrix ref = transverse ? reference::transverse_matrix(h1, h2) : reference::nontransverse_matrix(h1, h2);
    const std::string what = describe(h1.pol().L) + " -> " + describe(h2.pol().L) + " k=" + std::to_string(h1.k());
    t.check(dist(f.matrix, ref), tol, "closed form vs point sum " + what);
    if (f.exact) t.check(exact_error(f), tol, "exact form vs float " + what);
  };

  // g = 1: every pair of primitive vectors with entries in [-5, 5] (one per sign class), |det| <= 6
  const SymplecticSpace s1 = space(1);
  std::vector<IntVector> prim;
  for (std::int64_t a = 0; a <= 5; ++a)
    for (std::int64_t b = -5; b <= 5; ++b)
      if (std::gcd(a, b) == 1 && (a > 0 || b > 0)) prim.push_back({a, b});
  for (const IntVector& u : prim)
    for (const IntVector& v : prim) {
      const std::int64_t d = omega(s1, v, u);
      if (d == 0 || std::abs(d) > 6) continue;
      const Lagrangian l1 = Lagrangian::from_rows(s1, IntMatrix::from_rows({u}, 2));
      const Lagrangian l2 = Lagrangian::from_rows(s1, IntMatrix::from_rows({v}, 2));
      for (std::int64_t k : {2, 4}) compare(canonical_space(l1, k), canonical_space(l2, k), true);
    }

  // g = 2 transverse pairs with |det omega(2,1)| <= 6, random frames
  for (int found = 0; found < 60;) {
    const Lagrangian l1 = random::lagrangian(rng, space(2));
    const Lagrangian l2 = random::lagrangian_meeting(rng, l1, 0);
    const HilbertSpace h1 = framed_space(rng, l1, pick_k(rng));
    const HilbertSpace h2 = framed_space(rng, l2, h1.k());
    if (std::abs(det(omega_matrix(h1.frame().space, h2.frame().W, h1.frame().W))) > 6) continue;
    compare(h1, h2, true);
    ++found;
  }

  // g = 2 with a line in common, in pair-adapted frames
  for (int i = 0; i < 40; ++i) {
    const Lagrangian l1 = random::lagrangian(rng, space(2));
    const Lagrangian l2 = random::lagrangian_meeting(rng, l1, 1);
    const auto [b1, b2] = pair_adapted_bases(l1, l2);
    const std::int64_t k = pick_k(rng);
    compare(HilbertSpace::make(Polarization::with_frame(l1, b1), k), HilbertSpace::make(Polarization::with_frame(l2, b2), k), false);
  }
  return t.done();
}

Report gauss(const Options& opt, int cases) {
  Rng rng(opt.seed + 4);
  Tally t("gauss");
  for (int i = 0; i < cases; ++i) {
    const int g = 1 + i % 3;
    const IntMatrix q = random::nonsingular_symmetric(rng, g, g == 3 ? 3 : 5);
    const std::int64_t a = 2 * uniform(rng, 1, g == 3 ? 2 : 4);
    RatVector w(static_cast<std::size_t>(g));
    for (auto& x : w) x = Rational(uniform(rng, 0, a - 1), a);
    const GaussSums s = gauss_reciprocity_check(q, a, w);
    t.check(std::abs(s.lhs - s.rhs), opt.tolerance, "gauss g=" + std::to_string(g) + " a=" + std::to_string(a));
  }
  return t.done();
}

Report tau_axioms(const Options& opt, int cases) {
  Rng rng(opt.seed + 5);
  Tally t("tau");
  for (int i = 0; i < cases; ++i) {
    const int g = 1 + i % 3;
    const SymplecticSpace s = space(g);
    const Lagrangian l1 = random::lagrangian(rng, s, g == 3 ? 3 : 5);
    const Lagrangian l2 = random::lagrangian_meeting(rng, l1, static_cast<int>(uniform(rng, 0, g)), g == 3 ? 3 : 5);
    const Lagrangian l3 = random::lagrangian_meeting(rng, uniform(rng, 0, 1) ? l1 : l2, static_cast<int>(uniform(rng, 0, g)), g == 3 ? 3 : 5);
    const Lagrangian l4 = random::lagrangian(rng, s, g == 3 ? 3 : 5);
    const std::string what = describe(l1) + " " + describe(l2) + " " + describe(l3);
    const int t123 = tau(l1, l2, l3);

    const SpElement b = random::sp_word(rng, adapted_basis(s), 3);
    t.check_exact(tau(b.apply(l1), b.apply(l2), b.apply(l3)) == t123, "Sp invariance " + what);
    t.check_exact(tau(l2, l1, l3) == -t123 && tau(l1, l3, l2) == -t123 && tau(l3, l2, l1) == -t123, "transposition " + what);
    t.check_exact(tau(l2, l3, l1) == t123 && tau(l3, l1, l2) == t123, "cyclic " + what);
    t.check_exact(t123 - tau(l1, l2, l4) + tau(l1, l3, l4) - tau(l2, l3, l4) == 0, "cocycle " + what + " " + describe(l4));
    const int dims = intersect(l1, l2).rank() + intersect(l2, l3).rank() + intersect(l3, l1).rank();
    t.check_exact(mod(t123 - g - dims, 2) == 0, "parity " + what);
    t.check_exact(t123 == reference::tau_numeric(l1, l2, l3), "eigenvalue signature " + what);
    if (intersect(l1, l3).rank() == 0) t.check_exact(tau_transverse(l1, l2, l3) == t123, "tau_transverse " + what);
  }
  return t.done();
}

Report mu_coboundary(const Options& opt, int cases) {
  Rng rng(opt.seed + 6);
  Tally t("mu");
  const int qs[3] = {1, 2, 4};
  for (int i = 0; i < cases; ++i) {
    const int q = qs[i % 3];
    const int g = pick_g(rng);
    const Lagrangian base = random::lagrangian(rng, space(g));
    const Lagrangian la = random_partner(rng, base);
    const Lagrangian lb = random_partner(rng, la);
    const Lagrangian lc = random_partner(rng, uniform(rng, 0, 1) ? la : lb);
    const LagLift a = random::lift(rng, base, la, q), b = random::lift(rng, base, lb, q), c = random::lift(rng, base, lc, q);
    const std::string what = "q=" + std::to_string(q) + " " + describe(la) + " " + describe(lb) + " " + describe(lc);
    const int m = 2 * q;
    t.check_exact(mod(mu(a, b, q) - mu(a, c, q) + mu(b, c, q) - tau(la, lb, lc), m) == 0, "coboundary " + what);
    t.check_exact(mod(mu(a, b, q) + mu(b, a, q), m) == 0, "antisymmetry " + what);
    t.check_exact(mod(mu(a, b, q) - g + intersect(la, lb).rank(), 2) == 0, "parity " + what);
    if (q == 4) {
      const AdaptedBasis frame = adapted_basis(base);
      MpElement x = MpElement::identity(base);
      for (int j = 0; j < 3; ++j) x = mp_mul(x, random::mp_generator(rng, frame));
      t.check_exact(mu(mp_act(x, a), mp_act(x, b)) == mu(a, b), "Mp invariance " + what);
    }
  }
  return t.done();
}

Report heisenberg(const Options& opt) {
  Rng rng(opt.seed + 7);
  Tally t("heisenberg");
  const double tol = opt.tolerance;

  for (int i = 0; i < 60; ++i) {
    const std::int64_t k = pick_k(rng);
    const Lagrangian l = random::lagrangian(rng, space(pick_g(rng)));
    const HilbertSpace h = framed_space(rng, l, k);
    const HeisenbergElement x = random_heisenberg(rng, k, h.frame());
    const HeisenbergElement y = random_heisenberg(rng, k, h.frame());
    const HeisenbergElement z = random_heisenberg(rng, k, h.frame());
    const std::string what = describe(l) + " k=" + std::to_string(k);
    t.check_exact(heisenberg_mul(heisenberg_mul(x, y), z) == heisenberg_mul(x, heisenberg_mul(y, z)), "associativity " + what);
    const ComplexMatrix rx = heisenberg_matrix(x, h), ry = heisenberg_matrix(y, h);
    t.check(dist(rx * ry, heisenberg_matrix(heisenberg_mul(x, y), h)), tol, "homomorphism " + what);
    const UnitPhase lambda(Rational(uniform(rng, 0, 7), 4));
    t.check(dist(heisenberg_matrix(HeisenbergElement::central(k, h.frame(), lambda), h), lambda.value() * eye(h.dim())), tol,
            "center " + what);
    const Complex comm = UnitPhase(Rational(2 * frame_omega(x.n, y.n), k)).value();
    t.check(dist(rx * ry, comm * ry * rx), tol, "commutator " + what);
    t.check(dist(rx * rx.adjoint(), eye(h.dim())), tol, "unitary " + what);
  }

  for (int i = 0; i < 60; ++i) {
    const std::int64_t k = pick_k(rng);
    const Lagrangian l1 = random::lagrangian(rng, space(pick_g(rng)));
    const Lagrangian l2 = random_partner(rng, l1);
    const HilbertSpace h1 = framed_space(rng, l1, k), h2 = framed_space(rng, l2, k);
    const ComplexMatrix f = bks_matrix(h1, h2).matrix;
    const HeisenbergElement x = random_heisenberg(rng, k, h1.frame());
    const ComplexMatrix lhs = f * heisenberg_matrix(x, h1);
    const ComplexMatrix rhs = heisenberg_matrix(reframe(x, h2.frame()), h2) * f;
    t.check(dist(lhs, rhs), tol, "intertwining " + describe(l1) + " -> " + describe(l2) + " k=" + std::to_string(k));
  }

  for (int g = 1; g <= 2; ++g)
    for (std::int64_t k : {2, 4}) {
      if (g == 2 && k == 4) continue;
      const HilbertSpace h = canonical_space(random::lagrangian(rng, space(g)), k);
      t.check_exact(heisenberg_commutant_dimension(h) == 1, "commutant g=" + std::to_string(g) + " k=" + std::to_string(k));
    }
  return t.done();
}

Report sp_mp(const Options& opt) {
  Rng rng(opt.seed + 8);
  Tally t("spmp");
  const double tol = opt.tolerance;

  for (int i = 0; i < 40; ++i) {
    const std::int64_t k = pick_k(rng);
    const Lagrangian l = random::lagrangian(rng, space(pick_g(rng)));
    const HilbertSpace h = canonical_space(l, k);
    const AdaptedBasis std_frame = adapted_basis(l.space());
    const SpElement b = random::sp_word(rng, std_frame, static_cast<int>(uniform(rng, 1, 3)));
    const SpElement bp = random::sp_word(rng, std_frame, static_cast<int>(uniform(rng, 1, 3)));
    const int tv = tau(l, b.apply(l), (b * bp).apply(l));
    t.check(dist(u_sp(b, h) * u_sp(bp, h), UnitPhase(Rational(tv, 4)).value() * u_sp(b * bp, h)), tol, "Sp cocycle " + describe(l));
  }

  for (int i = 0; i < 40; ++i) {
    const std::int64_t k = pick_k(rng);
    const Lagrangian l = random::lagrangian(rng, space(pick_g(rng)));
    const HilbertSpace h = canonical_space(l, k);
    const int len = static_cast<int>(uniform(rng, 1, 4));
    MpElement word = MpElement::identity(l);
    ComplexMatrix product = eye(h.dim());
    for (int j = 0; j < len; ++j) {
      const MpElement x = random::mp_generator(rng, h.frame());
      word = mp_mul(word, x);
      product = product * u_mp(x, h);
    }
    t.check(dist(product, u_mp(word, h)), tol, "Mp word " + describe(l) + " length " + std::to_string(len));
  }

  // g = 1 pinned matrices and relations
  const SymplecticSpace s1 = space(1);
  const Lagrangian l0 = Lagrangian::from_rows(s1, IntMatrix{{1, 0}});
  for (std::int64_t k : {2, 4}) {
    const HilbertSpace h = canonical_space(l0, k);
    const MpElement st = mp_generator(h.frame(), MpKind::GammaEpsilon);
    const MpElement tt = mp_generator(h.frame(), MpKind::Beta, IntMatrix{{1}});
    const MpElement eps = mp_generator(h.frame(), MpKind::Epsilon);
    const std::string kk = " k=" + std::to_string(k);
    ComplexMatrix pinned(k, k);
    for (std::int64_t q = 0; q < k; ++q)
      for (std::int64_t qp = 0; qp < k; ++qp)
        pinned(q, qp) = UnitPhase(Rational(5, 4) + Rational(2 * q * qp, k)).value() / std::sqrt(static_cast<double>(k));
    const ComplexMatrix us = u_mp(st, h), ut = u_mp(tt, h), ue = u_mp(eps, h);
    t.check(dist(us, pinned), tol, "U(S) pinned" + kk);
    const ComplexMatrix sti = us * ut;
    t.check(dist(sti * sti * sti, eye(k)), tol, "(ST)^3 = e" + kk);
    t.check(dist(us * us * us * us, ue), tol, "S^4 = eps" + kk);
    t.check(dist(ue, -eye(k)), tol, "U(eps) = -1" + kk);
    const MpElement stg = mp_mul(st, tt);
    t.check_exact(mp_mul(stg, mp_mul(stg, stg)) == MpElement::identity(l0), "(ST)^3 = e in Mp" + kk);
    t.check_exact(mp_mul(mp_mul(st, st), mp_mul(st, st)) == eps, "S^4 = eps in Mp" + kk);
  }
  return t.done();
}

Report counting(const Options& opt) {
  Rng rng(opt.seed + 9);
  Tally t("counting");

  for (int g = 1; g <= 3; ++g)
    for (std::int64_t k : {2, 4}) {
      const HilbertSpace h = canonical_space(random::lagrangian(rng, space(g), 3), k);
      std::set<IntVector> labels;
      bool round_trip = true;
      for (std::int64_t i = 0; i < h.dim(); ++i) {
        labels.insert(h.label(i));
        round_trip = round_trip && h.index(h.label(i)) == i;
      }
      t.check_exact(static_cast<std::int64_t>(labels.size()) == ipow(k, g) && round_trip,
                    "labels g=" + std::to_string(g) + " k=" + std::to_string(k));
    }

  for (int i = 0; i < 100; ++i) {
    const std::int64_t k = pick_k(rng);
    const Lagrangian l1 = random::lagrangian(rng, space(pick_g(rng)));
    const Lagrangian l2 = random::lagrangian_meeting(rng, l1, 0);
    const HilbertSpace h1 = framed_space(rng, l1, k), h2 = framed_space(rng, l2, k);
    const SymplecticSpace& s = l1.space();
    const std::int64_t d = std::abs(det(omega_matrix(s, h2.frame().W, h1.frame().W)));
    IntVector q1(static_cast<std::size_t>(l1.g())), q2(q1.size());
    for (auto& x : q1) x = uniform(rng, 0, k - 1);
    for (auto& x : q2) x = uniform(rng, 0, k - 1);
    const std::vector<RatVector> pts = intersection_points(h1, h2, q1, q2);
    bool ok = static_cast<std::int64_t>(pts.size()) == d;
    std::set<std::vector<Rational>> reduced;
    for (const RatVector& x : pts) {
      RatVector r(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) r[j] = mod(x[j], Rational(1));
      reduced.insert(r);
      for (int j = 0; j < l1.g(); ++j) {
        const Rational a = omega(s, to_rational(h1.frame().W.row(j)), x) * k - q1[static_cast<std::size_t>(j)];
        const Rational b = omega(s, to_rational(h2.frame().W.row(j)), x) * k - q2[static_cast<std::size_t>(j)];
        ok = ok && denominator(a) == 1 && denominator(b) == 1 && mod(Rational(a / k), Rational(1)) == 0 &&
             mod(Rational(b / k), Rational(1)) == 0;
      }
    }
    ok = ok && reduced.size() == pts.size();
    t.check_exact(ok, "intersection points " + describe(l1) + " " + describe(l2));
  }

  const SymplecticSpace s1 = space(1);
  for (std::int64_t a = 0; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t c = 0; c <= 3; ++c)
        for (std::int64_t e = -3; e <= 3; ++e) {
          if (std::gcd(a, b) != 1 || std::gcd(c, e) != 1 || (a == 0 && b < 0) || (c == 0 && e < 0)) continue;
          const std::int64_t d = std::abs(omega(s1, IntVector{c, e}, IntVector{a, b}));
          if (d == 0 || d > 8) continue;
          const Lagrangian l1 = Lagrangian::from_rows(s1, IntMatrix{{a, b}});
          const Lagrangian l2 = Lagrangian::from_rows(s1, IntMatrix{{c, e}});
          for (std::int64_t k : {2, 4}) {
            const HilbertSpace h1 = canonical_space(l1, k), h2 = canonical_space(l2, k);
            bool ok = true;
            for (std::int64_t q1 = 0; q1 < k; ++q1)
              for (std::int64_t q2 = 0; q2 < k; ++q2)
                ok = ok && reference::brute_force_intersections(h1, h2, q1, q2) == d &&
                     static_cast<std::int64_t>(intersection_points(h1, h2, {q1}, {q2}).size()) == d;
            t.check_exact(ok, "brute force " + describe(l1) + " " + describe(l2) + " k=" + std::to_string(k));
          }
        }
  return t.done();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"unitarity", "triple", "corrected", "oracle", "gauss",
                                              "tau", "mu", "heisenberg", "spmp", "counting"};
  return names;
}

Report run(const std::string& name, const Options& opt) {
  if (name == "unitarity") return unitarity(opt);
  if (name == "triple") return triple(opt);
  if (name == "corrected") return corrected(opt);
  if (name == "oracle") return oracle(opt);
  if (name == "gauss") return gauss(opt);
  if (name == "tau") return tau_axioms(opt);
  if (name == "mu") return mu_coboundary(opt);
  if (name == "heisenberg") return heisenberg(opt);
  if (name == "spmp") return sp_mp(opt);
  if (name == "counting") return counting(opt);
  throw Error(ErrorCode::ParseError, "unknown suite '" + name + "'");
}

}  // namespace tq::verify
