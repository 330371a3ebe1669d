#include "torusquant/random_inputs.hpp"

#include <numeric>

namespace tq::random {

namespace {

bool isotropic_with(const SymplecticSpace& s, const std::vector<IntVector>& rows, const IntVector& v) {
  for (const IntVector& r : rows)
    if (omega(s, r, v) != 0) return false;
  return true;
}

bool independent_with(const std::vector<IntVector>& rows, const IntVector& v, int dim) {
  std::vector<IntVector> all = rows;
  all.push_back(v);
  return rank(IntMatrix::from_rows(all, dim)) == static_cast<int>(all.size());
}

// Grows isotropic independent rows to g of them; short random vectors first,
// then small combinations of the omega-complement.
std::vector<IntVector> extend_isotropic(Rng& rng, const SymplecticSpace& s, std::vector<IntVector> rows, std::int64_t bound) {
  const int dim = s.dim();
  while (static_cast<int>(rows.size()) < s.g) {
    bool found = false;
    for (int attempt = 0; attempt < 400 && !found; ++attempt) {
      IntVector v(static_cast<std::size_t>(dim));
      for (auto& x : v) x = uniform(rng, -bound, bound);
      if (isotropic_with(s, rows, v) && independent_with(rows, v, dim)) {
        rows.push_back(v);
        found = true;
      }
    }
    if (found) continue;
    const IntMatrix comp = rows.empty() ? IntMatrix::identity(dim)
                                        : integer_kernel(IntMatrix::from_rows(rows, dim) * s.gram);
    while (!found) {
      IntVector v(static_cast<std::size_t>(dim), 0);
      for (int r = 0; r < comp.rows(); ++r) {
        const std::int64_t c = uniform(rng, -1, 1);
        for (int j = 0; j < dim; ++j) v[static_cast<std::size_t>(j)] += c * comp(r, j);
      }
      if (isotropic_with(s, rows, v) && independent_with(rows, v, dim)) {
        rows.push_back(v);
        found = true;
      }
    }
  }
  return rows;
}

}  // namespace

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

IntVector primitive_vector(Rng& rng, int dim, std::int64_t bound) {
  for (;;) {
    IntVector v(static_cast<std::size_t>(dim));
    std::int64_t gcd = 0;
    for (auto& x : v) {
      x = uniform(rng, -bound, bound);
      gcd = std::gcd(gcd, x);
    }
    if (gcd == 1) return v;
  }
}

Lagrangian lagrangian(Rng& rng, const SymplecticSpace& space, std::int64_t bound) {
  std::vector<IntVector> rows{primitive_vector(rng, space.dim(), bound)};
  rows = extend_isotropic(rng, space, rows, bound);
  return Lagrangian::saturated(space, IntMatrix::from_rows(rows, space.dim()));
}

Lagrangian lagrangian_meeting(Rng& rng, const Lagrangian& l, int shared, std::int64_t bound) {
  const SymplecticSpace& s = l.space();
  const int g = s.g;
  if (shared >= g) return l;
  for (;;) {
    const IntMatrix mixed = unimodular(rng, g, 2) * l.gens();
    std::vector<IntVector> rows;
    for (int i = 0; i < shared; ++i) rows.push_back(mixed.row(i));
    rows = extend_isotropic(rng, s, rows, bound);
    Lagrangian m = Lagrangian::saturated(s, IntMatrix::from_rows(rows, s.dim()));
    if (intersect(l, m).rank() == shared) return m;
  }
}

MpElement mp_generator(Rng& rng, const AdaptedBasis& frame) {
  const int g = frame.g();
  switch (uniform(rng, 0, 6)) {
    case 0:
    case 1:
      return tq::mp_generator(frame, MpKind::Alpha, unimodular(rng, g, 2));
    case 2:
    case 3: {
      IntMatrix b(g, g);
      for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) b(i, j) = b(j, i) = uniform(rng, -2, 2);
      return tq::mp_generator(frame, MpKind::Beta, b);
    }
    case 4:
      return tq::mp_generator(frame, MpKind::Gamma);
    case 5:
      return tq::mp_generator(frame, MpKind::GammaEpsilon);
    default:
      return tq::mp_generator(frame, MpKind::Epsilon);
  }
}

SpElement sp_word(Rng& rng, const AdaptedBasis& frame, int length) {
  SpElement b = SpElement::identity(frame.space);
  for (int i = 0; i < length; ++i) b = b * mp_generator(rng, frame).b;
  return b;
}

IntMatrix nonsingular_symmetric(Rng& rng, int n, std::int64_t bound) {
  for (;;) {
    IntMatrix q(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) q(i, j) = q(j, i) = uniform(rng, -bound, bound);
    if (det(q) != 0) return q;
  }
}

IntMatrix unimodular(Rng& rng, int n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 1) return uniform(rng, 0, 1) ? u : -u;
  for (int s = 0; s < steps; ++s) {
    const int i = static_cast<int>(uniform(rng, 0, n - 1));
    int j = static_cast<int>(uniform(rng, 0, n - 2));
    if (j >= i) ++j;
    IntMatrix e = IntMatrix::identity(n);
    switch (uniform(rng, 0, 2)) {
      case 0:
        e(i, j) = uniform(rng, 0, 1) ? 1 : -1;
        break;
      case 1:
        e(i, i) = e(j, j) = 0;
        e(i, j) = e(j, i) = 1;
        break;
      default:
        e(i, i) = -1;
    }
    u = e * u;
  }
  return u;
}

LagLift lift(Rng& rng, const Lagrangian& base, const Lagrangian& l, int q) {
  const int parity = static_cast<int>(mod(base.g() - intersect(base, l).rank(), 2));
  const int lambda = 2 * static_cast<int>(uniform(rng, 0, q - 1)) + parity;
  return LagLift::make(base, l, lambda, q);
}

}  // namespace tq::random
