#include "torusquant/quantization.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tq {

namespace {

void require_compatible(const HilbertSpace& a, const HilbertSpace& b) {
  if (a.k() != b.k()) throw Error(ErrorCode::DimensionMismatch, "Hilbert spaces at different levels k");
  if (!(a.pol().space() == b.pol().space())) throw Error(ErrorCode::SpaceMismatch, "Hilbert spaces over different spaces");
}

IntVector head(const IntVector& v, int h) { return IntVector(v.begin(), v.begin() + h); }

std::int64_t bilinear(const IntVector& x, const IntMatrix& m, const IntVector& y) {
  std::int64_t s = 0;
  IntVector my = m * y;
  for (std::size_t i = 0; i < x.size(); ++i) s = checked_add(s, checked_mul(x[i], my[i]));
  return s;
}

// Entries |k^h det w|^{-1/2} delta(tails) sum_[l] e^{(pi i/k) A_l} where w and
// friends are the leading h x h blocks of omega(2,1), omega(2,1perp), omega(2perp,1).
Intertwiner closed_form(const HilbertSpace& h1, const HilbertSpace& h2, int h) {
  const OmegaBlocks ob = omega_blocks(h1.frame(), h2.frame());
  const std::int64_t k = h1.k();
  const int g = h1.g();
  const IntMatrix w = ob.w21.block(0, 0, h, h);
  const IntMatrix y = ob.w21p.block(0, 0, h, h);
  const IntMatrix x = ob.w2p1.block(0, 0, h, h);

  const std::int64_t d = det(w);
  if (d == 0) throw Error(ErrorCode::NotTransverse, "reduced omega(2,1) is singular");
  const IntMatrix adj = adjugate(w);
  const IntMatrix adj_y = adj * y;
  const IntMatrix x_adj = x * adj;
  const std::vector<IntVector> reps = h > 0 ? coset_reps(w) : std::vector<IntVector>{IntVector{}};

  // A_l = N / d with N integral; the phase e^{pi i N / (d k)} depends on N mod 2|d|k
  const std::int64_t den = checked_mul(std::abs(d), k);
  const std::int64_t sign = d > 0 ? 1 : -1;
  std::vector<Complex> roots(static_cast<std::size_t>(2 * den));
  for (std::int64_t j = 0; j < 2 * den; ++j) roots[static_cast<std::size_t>(j)] = UnitPhase(Rational(j, den)).value();

  const Rational amp2(checked_mul(ipow(k, h), std::abs(d)));
  const double scale = 1.0 / std::sqrt(amp2.convert_to<double>());
  const std::int64_t n = h1.dim();
  const bool keep_exact = n * n * static_cast<std::int64_t>(reps.size()) <= kExactTermLimit;

  Intertwiner out{h1, h2, ComplexMatrix::Zero(n, n), std::nullopt, !keep_exact};
  std::vector<PhaseSum> exact;
  if (keep_exact) exact.assign(static_cast<std::size_t>(n * n), PhaseSum(amp2));

  for (std::int64_t c = 0; c < n; ++c) {
    const IntVector q1 = h1.label(c);
    const IntVector q1h = head(q1, h);
    const std::int64_t first = bilinear(q1h, adj_y, q1h);
    for (std::int64_t r = 0; r < n; ++r) {
      const IntVector q2 = h2.label(r);
      bool tails_match = true;
      for (int i = h; i < g; ++i) tails_match = tails_match && q1[static_cast<std::size_t>(i)] == q2[static_cast<std::size_t>(i)];
      if (!tails_match) continue;
      Complex sum = 0;
      PhaseSum* ex = keep_exact ? &exact[static_cast<std::size_t>(r * n + c)] : nullptr;
      for (const IntVector& l : reps) {
        IntVector v = head(q2, h);
        for (int i = 0; i < h; ++i) v[static_cast<std::size_t>(i)] = checked_add(v[static_cast<std::size_t>(i)], checked_mul(k, l[static_cast<std::size_t>(i)]));
        std::int64_t num = checked_sub(checked_sub(first, checked_mul(2, bilinear(q1h, adj, v))), bilinear(v, x_adj, v));
        std::int64_t j = mod(checked_mul(sign, num), 2 * den);
        sum += roots[static_cast<std::size_t>(j)];
        if (ex) ex->add(UnitPhase(Rational(j, den)));
      }
      out.matrix(r, c) = sum * scale;
      if (ex) ex->canonicalize();
    }
  }
  if (keep_exact) out.exact = std::move(exact);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Polarization Polarization::canonical(const Lagrangian& l) {
  if (!l.is_full()) throw Error(ErrorCode::DimensionMismatch, "a polarization needs a rank g Lagrangian");
  return {l, adapted_basis(l)};
}

Polarization Polarization::with_frame(const Lagrangian& l, const AdaptedBasis& frame) {
  if (!l.is_full()) throw Error(ErrorCode::DimensionMismatch, "a polarization needs a rank g Lagrangian");
  if (!(frame.space == l.space()) || !frame.is_valid() || !(frame.lagrangian() == l)) {
    throw Error(ErrorCode::BasisMismatch, "frame is not an adapted basis of the Lagrangian");
  }
  return {l, frame};
}

HilbertSpace HilbertSpace::make(const Polarization& pol, std::int64_t k) {
  if (k < 2 || k % 2 != 0) throw Error(ErrorCode::InvalidModulus, "k must be even and at least 2, got " + std::to_string(k));
  return HilbertSpace(pol, k);
}

double Intertwiner::unitarity_error() const {
  const ComplexMatrix id = ComplexMatrix::Identity(matrix.rows(), matrix.cols());
  return (matrix * matrix.adjoint() - id).cwiseAbs().maxCoeff();
}

Intertwiner compose(const Intertwiner& second, const Intertwiner& first) {
  if (!(second.source == first.target)) throw Error(ErrorCode::FrameMismatch, "composed maps do not meet in the same space");
  return {first.source, second.target, second.matrix * first.matrix, std::nullopt, false};
}

Intertwiner scaled(const Intertwiner& m, const UnitPhase& phase) {
  Intertwiner out = m;
  out.matrix *= phase.value();
  if (out.exact)
    for (PhaseSum& e : *out.exact) e = e.rotated(phase);
  return out;
}

Rational k_potential(const Polarization& p, const RatVector& x) {
  const AdaptedBasis& f = p.frame;
  Rational k = 0;
  for (int i = 0; i < f.g(); ++i) {
    Rational a = omega(f.space, x, to_rational(f.Wperp.row(i)));
    Rational b = omega(f.space, to_rational(f.W.row(i)), x);
    k += a * b;
  }
  return k / 2;
}

std::vector<RatVector> intersection_points(const HilbertSpace& h1, const HilbertSpace& h2, const IntVector& q1,
                                           const IntVector& q2) {
  require_compatible(h1, h2);
  const int g = h1.g();
  if (static_cast<int>(q1.size()) != g || static_cast<int>(q2.size()) != g) throw Error(ErrorCode::DimensionMismatch, "label length");
  const AdaptedBasis& f1 = h1.frame();
  const AdaptedBasis& f2 = h2.frame();
  const IntMatrix w21 = omega_matrix(f1.space, f2.W, f1.W);
  if (det(w21) == 0) throw Error(ErrorCode::NotTransverse, "polarizations are not transverse");

  // rows of the system: omega(W, X) = W gram X
  const RatMatrix sys(vstack(f1.W, f2.W) * f1.space.gram);
  const RatMatrix inv = inverse(sys);
  std::vector<RatVector> points;
  for (const IntVector& l : coset_reps(w21)) {
    RatVector rhs(static_cast<std::size_t>(2 * g));
    for (int i = 0; i < g; ++i) {
      rhs[static_cast<std::size_t>(i)] = Rational(q1[static_cast<std::size_t>(i)], h1.k());
      rhs[static_cast<std::size_t>(g + i)] = Rational(q2[static_cast<std::size_t>(i)], h1.k()) + l[static_cast<std::size_t>(i)];
    }
    points.push_back(inv * rhs);
  }
  return points;
}

Intertwiner bks_matrix_transverse(const HilbertSpace& h1, const HilbertSpace& h2) {
  require_compatible(h1, h2);
  return closed_form(h1, h2, h1.g());
}

Intertwiner bks_matrix_nontransverse(const HilbertSpace& h1, const HilbertSpace& h2) {
  require_compatible(h1, h2);
  const int m = intersect(h1.pol().L, h2.pol().L).rank();
  if (m == 0) throw Error(ErrorCode::TransverseInput, "polarizations are transverse");
  const int h = h1.g() - m;
  if (!is_pair_adapted(h1.frame(), h2.frame(), h)) throw Error(ErrorCode::BasesNotPairAdapted, "frames do not share the intersection pairs");
  return closed_form(h1, h2, h);
}

Intertwiner bks_matrix(const HilbertSpace& h1, const HilbertSpace& h2) {
  require_compatible(h1, h2);
  const Lagrangian& l1 = h1.pol().L;
  const Lagrangian& l2 = h2.pol().L;
  const int m = intersect(l1, l2).rank();
  if (m == 0) return bks_matrix_transverse(h1, h2);

  const std::int64_t k = h1.k();
  auto [b1, b2] = pair_adapted_bases(l1, l2);
  const HilbertSpace p1 = HilbertSpace::make(Polarization::with_frame(l1, b1), k);
  const HilbertSpace p2 = HilbertSpace::make(Polarization::with_frame(l2, b2), k);
  const Intertwiner inner = closed_form(p1, p2, h1.g() - m);

  // M = R2 inner R1 with R1: frame of h1 -> b1 and R2: b2 -> frame of h2
  const Monomial r1 = rebase_monomial(l1, h1.frame(), b1, k);
  const Monomial r2 = rebase_monomial(l2, b2, h2.frame(), k);
  const std::int64_t n = h1.dim();
  std::vector<std::int64_t> inv1(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c) inv1[static_cast<std::size_t>(r1.source[static_cast<std::size_t>(c)])] = c;

  Intertwiner out{h1, h2, ComplexMatrix::Zero(n, n), std::nullopt, inner.exact_omitted};
  std::vector<PhaseSum> exact;
  if (inner.exact) exact.resize(static_cast<std::size_t>(n * n));
  for (std::int64_t p = 0; p < n; ++p) {
    const std::int64_t src = r2.source[static_cast<std::size_t>(p)];
    for (std::int64_t r = 0; r < n; ++r) {
      const std::int64_t c = inv1[static_cast<std::size_t>(r)];
      const UnitPhase ph = r2.phase[static_cast<std::size_t>(p)] * r1.phase[static_cast<std::size_t>(c)];
      out.matrix(p, r) = ph.value() * inner.matrix(src, c);
      if (inner.exact) exact[static_cast<std::size_t>(p * n + r)] = inner.exact_entry(src, c).rotated(ph);
    }
  }
  if (inner.exact) out.exact = std::move(exact);
  return out;
}

Monomial rebase_monomial(const Lagrangian& l, const AdaptedBasis& from, const AdaptedBasis& to, std::int64_t k) {
  if (!(from.lagrangian() == l) || !(to.lagrangian() == l)) throw Error(ErrorCode::BasisMismatch, "frames are not adapted to the same Lagrangian");
  const SymplecticSpace& s = l.space();
  // transition in the `from` frame is [[A, B], [0, A^{-t}]]
  const IntMatrix a = omega_matrix(s, to.W, from.Wperp).transpose();
  const IntMatrix b = omega_matrix(s, to.Wperp, from.Wperp).transpose();
  if (!omega_matrix(s, from.W, to.W).is_zero()) throw Error(ErrorCode::BasisMismatch, "transition does not preserve the Lagrangian");
  const IntMatrix ainv = unimodular_inverse(a);
  const IntMatrix sym = ainv * b;
  const IntMatrix perm = ainv.transpose();

  const int g = l.g();
  const std::int64_t n = ipow(k, g);
  Monomial m{std::vector<std::int64_t>(static_cast<std::size_t>(n)), std::vector<UnitPhase>(static_cast<std::size_t>(n))};
  for (std::int64_t i = 0; i < n; ++i) {
    IntVector q = label_from_index(i, g, k);
    m.source[static_cast<std::size_t>(i)] = label_index(perm * q, k);
    m.phase[static_cast<std::size_t>(i)] = UnitPhase(Rational(-bilinear(q, sym, q), k));
  }
  return m;
}

Intertwiner monomial_intertwiner(const HilbertSpace& source, const HilbertSpace& target, const Monomial& m) {
  const std::int64_t n = source.dim();
  Intertwiner out{source, target, ComplexMatrix::Zero(n, n), std::vector<PhaseSum>(static_cast<std::size_t>(n * n)), false};
  for (std::int64_t q = 0; q < n; ++q) {
    const std::int64_t src = m.source[static_cast<std::size_t>(q)];
    out.matrix(q, src) = m.phase[static_cast<std::size_t>(q)].value();
    (*out.exact)[static_cast<std::size_t>(q * n + src)].add(m.phase[static_cast<std::size_t>(q)]);
  }
  return out;
}

Intertwiner rebase_unitary(const Polarization& p, const AdaptedBasis& from, const AdaptedBasis& to, std::int64_t k) {
  const HilbertSpace source = HilbertSpace::make(Polarization::with_frame(p.L, from), k);
  const HilbertSpace target = HilbertSpace::make(Polarization::with_frame(p.L, to), k);
  return monomial_intertwiner(source, target, rebase_monomial(p.L, from, to, k));
}

Intertwiner corrected_intertwiner(const LagLift& lift1, const LagLift& lift2, std::int64_t k) {
  if (!(lift1.base == lift2.base)) throw Error(ErrorCode::BaseMismatch, "lifts use different base Lagrangians");
  if (lift1.q != 4 || lift2.q != 4) throw Error(ErrorCode::InvalidLift, "corrected operators use lifts mod 8");
  const HilbertSpace h1 = HilbertSpace::make(Polarization::canonical(lift1.L), k);
  const HilbertSpace h2 = HilbertSpace::make(Polarization::canonical(lift2.L), k);
  // e^{-(pi i/4) mu(target, source)}; mu is antisymmetric so this is e^{+(pi i/4) mu(lift1, lift2)}
  return scaled(bks_matrix(h1, h2), UnitPhase(Rational(mu(lift1, lift2, 4), 4)));
}

}  // namespace tq
