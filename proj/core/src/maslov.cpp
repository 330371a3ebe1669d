#include "torusquant/maslov.hpp"

#include <string>

namespace tq {

namespace {

void require_same_space(const Lagrangian& a, const Lagrangian& b) {
  if (!(a.space() == b.space())) throw Error(ErrorCode::SpaceMismatch, "Lagrangians live in different spaces");
}

void require_full(const Lagrangian& l) {
  if (!l.is_full()) throw Error(ErrorCode::DimensionMismatch, "expected a rank g Lagrangian");
}

int mod_int(int a, int m) { return static_cast<int>(mod(static_cast<std::int64_t>(a), static_cast<std::int64_t>(m))); }

}  // namespace

int tau(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  require_same_space(l1, l2);
  require_same_space(l2, l3);
  require_full(l1);
  require_full(l2);
  require_full(l3);
  const SymplecticSpace& s = l1.space();
  const int g = s.g;
  IntMatrix o12 = omega_matrix(s, l1.gens(), l2.gens());
  IntMatrix o23 = omega_matrix(s, l2.gens(), l3.gens());
  IntMatrix o31 = omega_matrix(s, l3.gens(), l1.gens());
  // twice the symmetric matrix of G(X1+X2+X3) = w(X1,X2) + w(X2,X3) + w(X3,X1)
  IntMatrix twice_g(3 * g, 3 * g);
  auto put = [&](int bi, int bj, const IntMatrix& m) {
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        twice_g(bi * g + i, bj * g + j) += m(i, j);
        twice_g(bj * g + j, bi * g + i) += m(i, j);
      }
  };
  put(0, 1, o12);
  put(1, 2, o23);
  put(2, 0, o31);
  return signature(twice_g).value();
}

int tau_transverse(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  require_same_space(l1, l2);
  require_same_space(l2, l3);
  require_full(l1);
  require_full(l2);
  require_full(l3);
  if (intersect(l1, l3).rank() != 0) throw Error(ErrorCode::NotTransverse, "L1 and L3 intersect");
  const SymplecticSpace& s = l1.space();
  const int g = s.g;
  // columns: L1 generators then L3 generators
  const RatMatrix basis(vstack(l1.gens(), l3.gens()).transpose());
  const RatMatrix coords = inverse(basis);
  std::vector<RatVector> proj;
  for (int j = 0; j < g; ++j) {
    RatVector c = coords * to_rational(l2.gens().row(j));
    RatVector p(static_cast<std::size_t>(2 * g));
    for (int i = 0; i < g; ++i)
      for (int t = 0; t < 2 * g; ++t)
        p[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(g + i)] * l3.gens()(i, t);
    proj.push_back(std::move(p));
  }
  RatMatrix h(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) h(i, j) = omega(s, to_rational(l2.gens().row(i)), proj[static_cast<std::size_t>(j)]);
  return signature(h).value();
}

LagLift LagLift::make(const Lagrangian& base, const Lagrangian& l, int lambda, int q) {
  if (q <= 0) throw Error(ErrorCode::InvalidModulus, "q must be positive");
  require_same_space(base, l);
  require_full(base);
  require_full(l);
  const int parity = base.g() - intersect(base, l).rank();
  if (mod_int(lambda - parity, 2) != 0) {
    throw Error(ErrorCode::InvalidLift, "lambda " + std::to_string(lambda) + " has the wrong parity");
  }
  return {base, l, mod_int(lambda, 2 * q), q};
}

int mu(const LagLift& a, const LagLift& b, int q) {
  if (!(a.base == b.base)) throw Error(ErrorCode::BaseMismatch, "lifts use different base Lagrangians");
  if (q <= 0) throw Error(ErrorCode::InvalidModulus, "q must be positive");
  return mod_int(a.lambda - b.lambda + tau(a.base, a.L, b.L), 2 * q);
}

// ---------------------------------------------------------------------------
// Sp(Z)

SpElement SpElement::make(const SymplecticSpace& space, const IntMatrix& b) {
  if (b.rows() != space.dim() || b.cols() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "Sp element size");
  if (!(b.transpose() * space.gram * b == space.gram)) throw Error(ErrorCode::NotSymplectic, "matrix does not preserve omega");
  return SpElement(space, b);
}

SpElement SpElement::identity(const SymplecticSpace& space) { return SpElement(space, IntMatrix::identity(space.dim())); }

SpElement SpElement::inverse() const {
  // b^{-1} = gram^{-1} b^T gram
  return SpElement(space_, unimodular_inverse(space_.gram) * b_.transpose() * space_.gram);
}

SpElement operator*(const SpElement& x, const SpElement& y) {
  if (!(x.space_ == y.space_)) throw Error(ErrorCode::SpaceMismatch, "Sp product across spaces");
  return SpElement(x.space_, x.b_ * y.b_);
}

SpElement sp_from_frame(const AdaptedBasis& frame, const IntMatrix& m) {
  IntMatrix p = frame.to_lattice();
  return SpElement::make(frame.space, p * m * unimodular_inverse(p));
}

IntMatrix sp_in_frame(const AdaptedBasis& frame, const SpElement& b) {
  IntMatrix p = frame.to_lattice();
  return unimodular_inverse(p) * b.matrix() * p;
}

// ---------------------------------------------------------------------------
// Mp(Z)

MpElement MpElement::make(const Lagrangian& base, const SpElement& b, int z) {
  require_full(base);
  if (!(base.space() == b.space())) throw Error(ErrorCode::SpaceMismatch, "Mp element across spaces");
  const int parity = base.g() - intersect(b.apply(base), base).rank();
  if (mod_int(z - parity, 2) != 0) throw Error(ErrorCode::InvalidLift, "z has the wrong parity");
  return {base, b, mod_int(z, 8), false};
}

MpElement MpElement::identity(const Lagrangian& base) {
  require_full(base);
  return {base, SpElement::identity(base.space()), 0, true};
}

MpElement mp_mul(const MpElement& x, const MpElement& y) {
  if (!(x.base == y.base)) throw Error(ErrorCode::BaseMismatch, "Mp elements over different bases");
  const Lagrangian& l = x.base;
  SpElement bb = x.b * y.b;
  int z = x.z + y.z + tau(l, x.b.apply(l), bb.apply(l));
  return {l, bb, mod_int(z, 8), x.checked && y.checked};
}

LagLift mp_act(const MpElement& x, const LagLift& lift) {
  if (!(x.base == lift.base)) throw Error(ErrorCode::BaseMismatch, "element and lift over different bases");
  if (lift.q != 4) throw Error(ErrorCode::InvalidLift, "Mp acts on lifts mod 8");
  const Lagrangian& l = x.base;
  Lagrangian image = x.b.apply(lift.L);
  int lambda = x.z + lift.lambda + tau(l, x.b.apply(l), image);
  return {l, image, mod_int(lambda, 8), 4};
}

MpElement mp_generator(const AdaptedBasis& frame, MpKind kind, const IntMatrix& param) {
  const int g = frame.g();
  const Lagrangian base = frame.lagrangian();
  const IntMatrix id = IntMatrix::identity(g);
  const IntMatrix zero = IntMatrix::zero(g, g);
  auto make = [&](const IntMatrix& m, int z) { return MpElement{base, sp_from_frame(frame, m), mod_int(z, 8), true}; };

  switch (kind) {
    case MpKind::Epsilon:
      return make(IntMatrix::identity(2 * g), 4);
    case MpKind::Alpha: {
      if (param.rows() != g || param.cols() != g) throw Error(ErrorCode::DimensionMismatch, "alpha needs a g x g matrix");
      std::int64_t d = det(param);
      if (d != 1 && d != -1) throw Error(ErrorCode::NotUnimodular, "alpha needs A in GL(g, Z)");
      IntMatrix ainv_t = unimodular_inverse(param).transpose();
      return make(block_matrix(param, zero, zero, ainv_t), d > 0 ? 0 : 2);
    }
    case MpKind::Beta:
      if (param.rows() != g || param.cols() != g) throw Error(ErrorCode::DimensionMismatch, "beta needs a g x g matrix");
      if (!param.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "beta needs symmetric B");
      return make(block_matrix(id, param, zero, id), 0);
    case MpKind::Gamma:
      return make(block_matrix(zero, id, -id, zero), g);
    case MpKind::GammaEpsilon:
      return make(block_matrix(zero, id, -id, zero), g + 4);
  }
  throw Error(ErrorCode::InvalidLift, "unknown generator");
}

}  // namespace tq
