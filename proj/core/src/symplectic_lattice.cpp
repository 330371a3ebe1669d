#include "torusquant/symplectic_lattice.hpp"

#include <string>

namespace tq {

namespace {

IntMatrix nonzero_rows(const IntMatrix& m) {
  std::vector<IntVector> rows;
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row_range(r, 1).is_zero()) rows.push_back(m.row(r));
  return IntMatrix::from_rows(rows, m.cols());
}

IntMatrix hnf_basis(const IntMatrix& m) { return nonzero_rows(hnf(m).H); }

void require_rows(const SymplecticSpace& s, const IntMatrix& rows) {
  if (rows.cols() != s.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected rows of length " + std::to_string(s.dim()) + ", got " + std::to_string(rows.cols()));
  }
}

void require_isotropic(const SymplecticSpace& s, const IntMatrix& rows) {
  if (!omega_matrix(s, rows, rows).is_zero()) throw Error(ErrorCode::NotIsotropic, "rows are not isotropic");
}

IntVector axpy(const IntVector& v, std::int64_t a, const IntVector& x) {
  IntVector r = v;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(r[i], checked_mul(a, x[i]));
  return r;
}

// Removes the components of v along the symplectic pair (w, wp).
IntVector project_off(const SymplecticSpace& s, const IntVector& v, const IntVector& w, const IntVector& wp) {
  IntVector r = axpy(v, -omega(s, v, wp), w);
  return axpy(r, omega(s, v, w), wp);
}

// x with sum x_i r_i = gcd(r) >= 0.
std::pair<std::int64_t, IntVector> vector_gcd(const IntVector& r) {
  IntVector x(r.size(), 0);
  std::int64_t g = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (g == 0) {
      g = r[i];
      x[i] = 1;
      continue;
    }
    ExtGcd e = ext_gcd(g, r[i]);
    for (std::size_t j = 0; j < i; ++j) x[j] = checked_mul(x[j], e.x);
    x[i] = e.y;
    g = e.g;
  }
  if (g < 0) {
    g = -g;
    for (auto& v : x) v = -v;
  }
  return {g, x};
}

IntMatrix rows_of(const std::vector<IntVector>& v, int cols) { return IntMatrix::from_rows(v, cols); }

}  // namespace

SymplecticSpace SymplecticSpace::standard(int g) {
  if (g < 0) throw Error(ErrorCode::DimensionMismatch, "g must be nonnegative");
  IntMatrix j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return {g, j};
}

SymplecticSpace SymplecticSpace::from_gram(const IntMatrix& gram) {
  if (!gram.is_square() || gram.rows() % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "gram must be 2g x 2g");
  if (!(gram.transpose() == -gram)) throw Error(ErrorCode::NotSymplectic, "gram is not skew-symmetric");
  if (det(gram) != 1) throw Error(ErrorCode::NotUnimodular, "gram must have determinant 1");
  return {gram.rows() / 2, gram};
}

Rational omega(const SymplecticSpace& s, const RatVector& x, const RatVector& y) {
  if (static_cast<int>(x.size()) != s.dim() || static_cast<int>(y.size()) != s.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "omega: vector length");
  }
  Rational acc = 0;
  for (int i = 0; i < s.dim(); ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < s.dim(); ++j)
      if (s.gram(i, j) != 0) acc += x[static_cast<std::size_t>(i)] * s.gram(i, j) * y[static_cast<std::size_t>(j)];
  }
  return acc;
}

std::int64_t omega(const SymplecticSpace& s, const IntVector& x, const IntVector& y) {
  if (static_cast<int>(x.size()) != s.dim() || static_cast<int>(y.size()) != s.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "omega: vector length");
  }
  std::int64_t acc = 0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      if (s.gram(i, j) != 0)
        acc = checked_add(acc, checked_mul(checked_mul(x[static_cast<std::size_t>(i)], s.gram(i, j)), y[static_cast<std::size_t>(j)]));
  return acc;
}

IntMatrix omega_matrix(const SymplecticSpace& s, const IntMatrix& a, const IntMatrix& b) {
  require_rows(s, a);
  require_rows(s, b);
  return a * s.gram * b.transpose();
}

// ---------------------------------------------------------------------------
// Lagrangian

Lagrangian Lagrangian::from_rows(const SymplecticSpace& space, const IntMatrix& rows) {
  if (rows.rows() == 0) return Lagrangian(space, IntMatrix(0, space.dim()));
  require_rows(space, rows);
  require_isotropic(space, rows);
  IntMatrix h = hnf_basis(rows);
  if (h.rows() != rows.rows()) throw Error(ErrorCode::DimensionMismatch, "rows are linearly dependent");
  if (h.rows() > space.g) throw Error(ErrorCode::NotIsotropic, "more than g independent rows");
  if (!(saturate(rows) == h)) throw Error(ErrorCode::NotPrimitive, "rows do not span a primitive sublattice");
  return Lagrangian(space, h);
}

Lagrangian Lagrangian::saturated(const SymplecticSpace& space, const IntMatrix& rows) {
  if (rows.rows() == 0) return Lagrangian(space, IntMatrix(0, space.dim()));
  require_rows(space, rows);
  require_isotropic(space, rows);
  IntMatrix h = hnf_basis(rows);
  if (h.rows() == 0) return Lagrangian(space, IntMatrix(0, space.dim()));
  return Lagrangian(space, saturate(h));
}

bool Lagrangian::contains(const IntVector& v) const {
  if (static_cast<int>(v.size()) != space_.dim()) throw Error(ErrorCode::DimensionMismatch, "contains: vector length");
  IntMatrix extended = vstack(gens_, IntMatrix::from_rows({v}, space_.dim()));
  return hnf_basis(extended).rows() == rank();
}

Lagrangian Lagrangian::transformed(const IntMatrix& b) const {
  if (b.rows() != space_.dim() || b.cols() != space_.dim()) throw Error(ErrorCode::DimensionMismatch, "transform size");
  if (rank() == 0) return *this;
  return Lagrangian(space_, hnf_basis(gens_ * b.transpose()));
}

// ---------------------------------------------------------------------------
// Adapted bases

bool AdaptedBasis::is_valid() const {
  const int g = space.g;
  if (W.rows() != g || Wperp.rows() != g || W.cols() != 2 * g || Wperp.cols() != 2 * g) return false;
  if (!omega_matrix(space, W, W).is_zero()) return false;
  if (!omega_matrix(space, Wperp, Wperp).is_zero()) return false;
  if (!(omega_matrix(space, W, Wperp) == IntMatrix::identity(g))) return false;
  std::int64_t d = det(stack());
  return d == 1 || d == -1;
}

AdaptedBasis AdaptedBasis::transformed(const IntMatrix& b) const {
  return {space, W * b.transpose(), Wperp * b.transpose()};
}

AdaptedBasis adapted_basis_seeded(const SymplecticSpace& space, const IntMatrix& rows,
                                  const std::vector<std::pair<IntVector, IntVector>>& seed) {
  const int n = space.dim();
  require_rows(space, rows);
  require_isotropic(space, rows);

  std::vector<IntVector> w, wp;
  for (const auto& [a, b] : seed) {
    w.push_back(a);
    wp.push_back(b);
  }

  // lattice basis of the symplectic complement of the seed pairs
  IntMatrix comp;
  if (seed.empty()) {
    comp = IntMatrix::identity(n);
  } else {
    IntMatrix seeds = vstack(rows_of(w, n), rows_of(wp, n));
    comp = integer_kernel(seeds * space.gram);
  }

  auto reduce = [&](const IntMatrix& m, const IntVector& a, const IntVector& b) {
    std::vector<IntVector> out;
    for (int r = 0; r < m.rows(); ++r) out.push_back(project_off(space, m.row(r), a, b));
    return hnf_basis(rows_of(out, n));
  };

  IntMatrix rem = rows.rows() == 0 ? IntMatrix(0, n) : hnf_basis(rows);
  for (std::size_t i = 0; i < seed.size(); ++i) rem = reduce(rem, w[i], wp[i]);
  if (rem.rows() + static_cast<int>(seed.size()) > space.g) throw Error(ErrorCode::NotIsotropic, "span exceeds a Lagrangian");

  while (static_cast<int>(w.size()) < space.g) {
    IntVector next = rem.rows() > 0 ? rem.row(0) : comp.row(0);
    IntVector pair(static_cast<std::size_t>(comp.rows()));
    for (int c = 0; c < comp.rows(); ++c) pair[static_cast<std::size_t>(c)] = omega(space, next, comp.row(c));
    auto [gcd, coeff] = vector_gcd(pair);
    if (gcd != 1) throw Error(ErrorCode::NotPrimitive, "no dual lattice vector: sublattice is not primitive");
    IntVector dual(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < comp.rows(); ++c) dual = axpy(dual, coeff[static_cast<std::size_t>(c)], comp.row(c));

    w.push_back(next);
    wp.push_back(dual);
    comp = reduce(comp, next, dual);
    if (rem.rows() > 0) rem = reduce(rem, next, dual);
  }
  return {space, rows_of(w, n), rows_of(wp, n)};
}

AdaptedBasis adapted_basis(const Lagrangian& l) { return adapted_basis_seeded(l.space(), l.gens(), {}); }

AdaptedBasis adapted_basis(const SymplecticSpace& space) {
  return adapted_basis_seeded(space, IntMatrix(0, space.dim()), {});
}

Normalization normalize(const SymplecticSpace& space) {
  AdaptedBasis b = adapted_basis(space);
  return {SymplecticSpace::standard(space.g), unimodular_inverse(b.stack())};
}

Lagrangian intersect(const Lagrangian& a, const Lagrangian& b) {
  if (!(a.space() == b.space())) throw Error(ErrorCode::SpaceMismatch, "intersect: different spaces");
  // annihilators under the Euclidean pairing; the intersection is their joint kernel
  IntMatrix ka = integer_kernel(a.gens());
  IntMatrix kb = integer_kernel(b.gens());
  return Lagrangian::saturated(a.space(), integer_kernel(vstack(ka, kb)));
}

std::pair<AdaptedBasis, AdaptedBasis> pair_adapted_bases(const Lagrangian& l1, const Lagrangian& l2) {
  if (!(l1.space() == l2.space())) throw Error(ErrorCode::SpaceMismatch, "pair_adapted_bases: different spaces");
  if (!l1.is_full() || !l2.is_full()) throw Error(ErrorCode::DimensionMismatch, "pair_adapted_bases needs rank g Lagrangians");
  const SymplecticSpace& space = l1.space();
  Lagrangian l12 = intersect(l1, l2);
  const int m = l12.rank();
  if (m == 0) return {adapted_basis(l1), adapted_basis(l2)};

  AdaptedBasis shared = adapted_basis(l12);
  std::vector<std::pair<IntVector, IntVector>> seed;
  for (int i = 0; i < m; ++i) seed.emplace_back(shared.W.row(i), shared.Wperp.row(i));

  // seeded output lists shared pairs first; move them to positions h+1..g
  auto rotate = [&](const AdaptedBasis& b) {
    const int g = space.g;
    IntMatrix w(g, space.dim()), wp(g, space.dim());
    for (int i = 0; i < g; ++i) {
      int src = (i + m) % g;
      w.set_row(i, b.W.row(src));
      wp.set_row(i, b.Wperp.row(src));
    }
    return AdaptedBasis{space, w, wp};
  };
  return {rotate(adapted_basis_seeded(space, l1.gens(), seed)), rotate(adapted_basis_seeded(space, l2.gens(), seed))};
}

bool is_pair_adapted(const AdaptedBasis& b1, const AdaptedBasis& b2, int h) {
  if (!(b1.space == b2.space)) return false;
  for (int i = h; i < b1.g(); ++i)
    if (b1.W.row(i) != b2.W.row(i) || b1.Wperp.row(i) != b2.Wperp.row(i)) return false;
  return true;
}

OmegaBlocks omega_blocks(const AdaptedBasis& b1, const AdaptedBasis& b2) {
  if (!(b1.space == b2.space)) throw Error(ErrorCode::SpaceMismatch, "omega_blocks: different spaces");
  const SymplecticSpace& s = b1.space;
  return {omega_matrix(s, b2.W, b1.W),     omega_matrix(s, b2.W, b1.Wperp), omega_matrix(s, b2.Wperp, b1.W),
          omega_matrix(s, b2.Wperp, b1.Wperp), omega_matrix(s, b1.W, b2.W),     omega_matrix(s, b1.Wperp, b2.W),
          omega_matrix(s, b1.W, b2.Wperp), omega_matrix(s, b1.Wperp, b2.Wperp)};
}

}  // namespace tq
