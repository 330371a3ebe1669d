#include "torusquant/representations.hpp"

#include <string>

namespace tq {

namespace {

// omega in frame coordinates (a | b): the frame is a symplectic basis.
std::int64_t frame_omega(const IntVector& x, const IntVector& y) {
  const std::size_t g = x.size() / 2;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g; ++i) {
    s = checked_add(s, checked_mul(x[i], y[g + i]));
    s = checked_sub(s, checked_mul(x[g + i], y[i]));
  }
  return s;
}

void require_same_frame(const HeisenbergElement& x, const HeisenbergElement& y) {
  if (x.k != y.k || !(x.frame == y.frame)) throw Error(ErrorCode::FrameMismatch, "Heisenberg elements in different frames");
}

HilbertSpace canonical_space(const Lagrangian& l, std::int64_t k) { return HilbertSpace::make(Polarization::canonical(l), k); }

}  // namespace

HeisenbergElement HeisenbergElement::make(std::int64_t k, const AdaptedBasis& frame, const UnitPhase& phase, const IntVector& n) {
  if (k < 2 || k % 2 != 0) throw Error(ErrorCode::InvalidModulus, "k must be even and at least 2");
  if (static_cast<int>(n.size()) != 2 * frame.g()) throw Error(ErrorCode::DimensionMismatch, "Heisenberg coordinates need length 2g");
  // n = r + k m and (mu, (r + k m)/k) = (mu e^{-i pi omega(n, m)}, r/k) once the lattice part m is dropped
  IntVector r(n.size()), m(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    r[i] = mod(n[i], k);
    m[i] = (n[i] - r[i]) / k;
  }
  return {k, frame, phase * UnitPhase(Rational(-frame_omega(n, m))), r};
}

HeisenbergElement HeisenbergElement::w(std::int64_t k, const AdaptedBasis& frame, int i) {
  IntVector n(static_cast<std::size_t>(2 * frame.g()), 0);
  n.at(static_cast<std::size_t>(i)) = 1;
  return make(k, frame, UnitPhase(), n);
}

HeisenbergElement HeisenbergElement::wperp(std::int64_t k, const AdaptedBasis& frame, int i) {
  IntVector n(static_cast<std::size_t>(2 * frame.g()), 0);
  n.at(static_cast<std::size_t>(frame.g() + i)) = 1;
  return make(k, frame, UnitPhase(), n);
}

HeisenbergElement HeisenbergElement::central(std::int64_t k, const AdaptedBasis& frame, const UnitPhase& phase) {
  return make(k, frame, phase, IntVector(static_cast<std::size_t>(2 * frame.g()), 0));
}

HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y) {
  require_same_frame(x, y);
  IntVector sum(x.n.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = x.n[i] + y.n[i];
  UnitPhase c(Rational(frame_omega(x.n, y.n), x.k));
  return HeisenbergElement::make(x.k, x.frame, x.phase * y.phase * c, sum);
}

HeisenbergElement reframe(const HeisenbergElement& h, const AdaptedBasis& frame) {
  if (!(frame.space == h.frame.space)) throw Error(ErrorCode::SpaceMismatch, "reframe across spaces");
  const IntMatrix row = IntMatrix::from_rows({h.n}, static_cast<int>(h.n.size()));
  const IntMatrix moved = row * h.frame.stack() * unimodular_inverse(frame.stack());
  return HeisenbergElement::make(h.k, frame, h.phase, moved.row(0));
}

ComplexMatrix heisenberg_matrix(const HeisenbergElement& h, const HilbertSpace& space) {
  if (h.k != space.k() || !(h.frame == space.frame())) throw Error(ErrorCode::FrameMismatch, "element frame differs from the Hilbert space frame");
  const int g = space.g();
  const std::int64_t k = space.k();
  const IntVector a(h.n.begin(), h.n.begin() + g);
  const IntVector b(h.n.begin() + g, h.n.end());
  std::int64_t ab = 0;
  for (int i = 0; i < g; ++i) ab += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
  // lambda e^{-i pi a.b/k} D^a S^b: sigma_q -> lambda e^{i pi (a.b + 2 a.q)/k} sigma_{q+b}
  ComplexMatrix m = ComplexMatrix::Zero(space.dim(), space.dim());
  for (std::int64_t idx = 0; idx < space.dim(); ++idx) {
    IntVector q = space.label(idx);
    std::int64_t aq = 0;
    IntVector shifted(q.size());
    for (int i = 0; i < g; ++i) {
      aq += a[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(i)];
      shifted[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    }
    m(space.index(shifted), idx) = (h.phase * UnitPhase(Rational(ab + 2 * aq, k))).value();
  }
  return m;
}

int heisenberg_commutant_dimension(const HilbertSpace& space) {
  const std::int64_t n = space.dim();
  const int g = space.g();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix big(2 * g * n * n, n * n);
  for (int j = 0; j < 2 * g; ++j) {
    HeisenbergElement gen = j < g ? HeisenbergElement::w(space.k(), space.frame(), j)
                                  : HeisenbergElement::wperp(space.k(), space.frame(), j - g);
    ComplexMatrix m = heisenberg_matrix(gen, space);
    // vec(C G - G C) = (G^T ⊗ I - I ⊗ G) vec(C)
    for (std::int64_t r = 0; r < n * n; ++r)
      for (std::int64_t c = 0; c < n * n; ++c) {
        Complex v = m(c / n, r / n) * id(r % n, c % n) - id(r / n, c / n) * m(r % n, c % n);
        big(j * n * n + r, c) = v;
      }
  }
  Eigen::FullPivLU<ComplexMatrix> lu(big);
  lu.setThreshold(1e-9);
  return static_cast<int>(n * n - lu.rank());
}

Intertwiner sp_pushforward(const SpElement& b, const HilbertSpace& space) {
  if (!(b.space() == space.pol().space())) throw Error(ErrorCode::SpaceMismatch, "Sp element and Hilbert space over different spaces");
  const Lagrangian image = b.apply(space.pol().L);
  const AdaptedBasis image_frame = b.apply(space.frame());
  const HilbertSpace target = canonical_space(image, space.k());
  return monomial_intertwiner(space, target, rebase_monomial(image, image_frame, target.frame(), space.k()));
}

ComplexMatrix u_sp(const SpElement& b, const HilbertSpace& space) {
  const Intertwiner push = sp_pushforward(b, space);
  return compose(bks_matrix(push.target, space), push).matrix;
}

ComplexMatrix u_mp(const MpElement& x, const HilbertSpace& space) {
  if (!(x.base == space.pol().L)) throw Error(ErrorCode::BaseMismatch, "element is based at a different Lagrangian");
  return UnitPhase(Rational(x.z, 4)).value() * u_sp(x.b, space);
}

}  // namespace tq
