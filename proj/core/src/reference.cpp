#include "torusquant/reference.hpp"

#include <cmath>

namespace tq::reference {

namespace {

Complex k_phase(const HilbertSpace& h1, const HilbertSpace& h2, const RatVector& x) {
  Rational t = 2 * Rational(h1.k()) * (k_potential(h2.pol(), x) - k_potential(h1.pol(), x));
  return UnitPhase(t).value();
}

}  // namespace

ComplexMatrix transverse_matrix(const HilbertSpace& h1, const HilbertSpace& h2) {
  const std::int64_t n = h1.dim();
  const std::int64_t d = det(omega_matrix(h1.frame().space, h2.frame().W, h1.frame().W));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n) * std::abs(static_cast<double>(d)));
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::int64_t c = 0; c < n; ++c)
    for (std::int64_t r = 0; r < n; ++r) {
      Complex s = 0;
      for (const RatVector& x : intersection_points(h1, h2, h1.label(c), h2.label(r))) s += k_phase(h1, h2, x);
      m(r, c) = s * scale;
    }
  return m;
}

ComplexMatrix nontransverse_matrix(const HilbertSpace& h1, const HilbertSpace& h2) {
  const AdaptedBasis& f1 = h1.frame();
  const AdaptedBasis& f2 = h2.frame();
  const SymplecticSpace& s = f1.space;
  const int g = h1.g();
  const int h = g - intersect(h1.pol().L, h2.pol().L).rank();
  const std::int64_t k = h1.k();
  const IntMatrix w = omega_matrix(s, f2.W, f1.W).block(0, 0, h, h);
  const std::int64_t d = h > 0 ? det(w) : 1;
  const std::vector<IntVector> reps = h > 0 ? coset_reps(w) : std::vector<IntVector>{IntVector{}};

  // omega(W1_i, X) = q1_i/k for all i, omega(W2_i, X) = q2_i/k + l_i for i < h,
  // omega(W1perp_i, X) = 0 for i >= h (any point of the leaf component will do)
  IntMatrix rows = vstack(f1.W, f2.W.row_range(0, h));
  rows = vstack(rows, f1.Wperp.row_range(h, g - h));
  const RatMatrix inv = inverse(RatMatrix(rows * s.gram));

  const std::int64_t n = h1.dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(ipow(k, h)) * std::abs(static_cast<double>(d)));
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::int64_t c = 0; c < n; ++c) {
    const IntVector q1 = h1.label(c);
    for (std::int64_t r = 0; r < n; ++r) {
      const IntVector q2 = h2.label(r);
      bool same_tail = true;
      for (int i = h; i < g; ++i) same_tail = same_tail && q1[static_cast<std::size_t>(i)] == q2[static_cast<std::size_t>(i)];
      if (!same_tail) continue;
      Complex sum = 0;
      for (const IntVector& l : reps) {
        RatVector rhs(static_cast<std::size_t>(2 * g));
        for (int i = 0; i < g; ++i) rhs[static_cast<std::size_t>(i)] = Rational(q1[static_cast<std::size_t>(i)], k);
        for (int i = 0; i < h; ++i)
          rhs[static_cast<std::size_t>(g + i)] = Rational(q2[static_cast<std::size_t>(i)], k) + l[static_cast<std::size_t>(i)];
        sum += k_phase(h1, h2, inv * rhs);
      }
      m(r, c) = sum * scale;
    }
  }
  return m;
}

std::int64_t brute_force_intersections(const HilbertSpace& h1, const HilbertSpace& h2, std::int64_t q1, std::int64_t q2) {
  if (h1.g() != 1) throw Error(ErrorCode::DimensionMismatch, "brute force counting is for g = 1");
  const SymplecticSpace& s = h1.frame().space;
  const IntVector w1 = h1.frame().W.row(0);
  const IntVector w2 = h2.frame().W.row(0);
  const std::int64_t d = std::abs(omega(s, w2, w1));
  if (d == 0) throw Error(ErrorCode::NotTransverse, "polarizations are not transverse");
  const std::int64_t big_n = h1.k() * d;
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < big_n; ++x)
    for (std::int64_t y = 0; y < big_n; ++y) {
      // k omega(W, X) = omega(W, (x, y)) / d; on the leaf iff that is ≡ q (mod k) as an integer
      const IntVector p{x, y};
      const std::int64_t a = omega(s, w1, p);
      const std::int64_t b = omega(s, w2, p);
      if (a % d != 0 || b % d != 0) continue;
      if (mod(a / d - q1, h1.k()) == 0 && mod(b / d - q2, h1.k()) == 0) ++count;
    }
  return count;
}

int tau_numeric(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  const SymplecticSpace& s = l1.space();
  const int g = s.g;
  const Lagrangian* ls[3] = {&l1, &l2, &l3};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3 * g, 3 * g);
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    IntMatrix o = omega_matrix(s, ls[a]->gens(), ls[b]->gens());
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        m(a * g + i, b * g + j) += 0.5 * static_cast<double>(o(i, j));
        m(b * g + j, a * g + i) += 0.5 * static_cast<double>(o(i, j));
      }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  int sig = 0;
  for (int i = 0; i < 3 * g; ++i) {
    double ev = es.eigenvalues()(i);
    if (ev > 1e-9) ++sig;
    if (ev < -1e-9) --sig;
  }
  return sig;
}

}  // namespace tq::reference
