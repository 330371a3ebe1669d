#pragma once

// The lattice Z = Z^{2g} inside (V, omega), rational Lagrangians and adapted
// integer symplectic bases. Vectors are stored as rows throughout.

#include <utility>
#include <vector>

#include "torusquant/exact_algebra.hpp"

namespace tq {

struct SymplecticSpace {
  int g = 0;
  IntMatrix gram;  // omega(x, y) = x^T gram y on the lattice basis

  /// [[0, I], [-I, 0]], so omega(e_i, e_{g+i}) = 1.
  static SymplecticSpace standard(int g);
  /// Validates skew symmetry and det(gram) == 1.
  static SymplecticSpace from_gram(const IntMatrix& gram);

  int dim() const { return 2 * g; }
  bool is_standard() const { return gram == standard(g).gram; }

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;
};

Rational omega(const SymplecticSpace& s, const RatVector& x, const RatVector& y);
std::int64_t omega(const SymplecticSpace& s, const IntVector& x, const IntVector& y);
/// Matrix of pairings: (i, j) -> omega(a_i, b_j) for the rows of a and b.
IntMatrix omega_matrix(const SymplecticSpace& s, const IntMatrix& a, const IntMatrix& b);

class Lagrangian {
 public:
  Lagrangian() = default;

  /// Validates independence, isotropy and primitivity; stores HNF generators.
  static Lagrangian from_rows(const SymplecticSpace& space, const IntMatrix& rows);
  /// Rational span of isotropic rows, replaced by its lattice Z ∩ span.
  static Lagrangian saturated(const SymplecticSpace& space, const IntMatrix& rows);

  const SymplecticSpace& space() const { return space_; }
  const IntMatrix& gens() const { return gens_; }
  int rank() const { return gens_.rows(); }
  int g() const { return space_.g; }
  bool is_full() const { return rank() == space_.g; }
  bool contains(const IntVector& v) const;

  /// Image under a lattice automorphism b acting on column vectors.
  Lagrangian transformed(const IntMatrix& b) const;

  friend bool operator==(const Lagrangian&, const Lagrangian&) = default;

 private:
  Lagrangian(SymplecticSpace space, IntMatrix gens) : space_(std::move(space)), gens_(std::move(gens)) {}

  SymplecticSpace space_;
  IntMatrix gens_;
};

struct AdaptedBasis {
  SymplecticSpace space;
  IntMatrix W;      // g x 2g
  IntMatrix Wperp;  // g x 2g

  int g() const { return space.g; }
  /// Rows W_1..W_g, W_1perp..W_gperp.
  IntMatrix stack() const { return vstack(W, Wperp); }
  /// Column j is the j-th frame vector: maps frame coordinates to lattice coordinates.
  IntMatrix to_lattice() const { return stack().transpose(); }
  /// Checks every invariant: symplectic pairings and unimodularity of the stack.
  bool is_valid() const;
  Lagrangian lagrangian() const { return Lagrangian::saturated(space, W); }
  /// Applies b to every frame vector.
  AdaptedBasis transformed(const IntMatrix& b) const;

  friend bool operator==(const AdaptedBasis&, const AdaptedBasis&) = default;
};

/// Adapted basis of the lattice whose first rank(L) vectors W span L.
AdaptedBasis adapted_basis(const Lagrangian& l);
/// Any symplectic lattice basis (the l = 0 case).
AdaptedBasis adapted_basis(const SymplecticSpace& space);

/// Completes `seed` symplectic pairs to a full adapted basis, putting the
/// lattice of span(rows) (reduced against the seeds) next. Seeds come first
/// in the output. Rows must be isotropic and ω-orthogonal to the seed W's.
AdaptedBasis adapted_basis_seeded(const SymplecticSpace& space, const IntMatrix& rows,
                                  const std::vector<std::pair<IntVector, IntVector>>& seed);

struct Normalization {
  SymplecticSpace standard;
  IntMatrix row_map;  // lattice rows R in the old coordinates become R * row_map
};

/// Coordinates in which a nonstandard unimodular gram becomes [[0, I], [-I, 0]].
Normalization normalize(const SymplecticSpace& space);

Lagrangian intersect(const Lagrangian& a, const Lagrangian& b);

/// Bases adapted to L1 and L2 sharing their last g - h pairs, which span L1 ∩ L2.
std::pair<AdaptedBasis, AdaptedBasis> pair_adapted_bases(const Lagrangian& l1, const Lagrangian& l2);

/// Whether B1, B2 share their last (g - h) pairs with those W spanning the intersection.
bool is_pair_adapted(const AdaptedBasis& b1, const AdaptedBasis& b2, int h);

struct OmegaBlocks {
  IntMatrix w21, w21p, w2p1, w2p1p;  // omega(2,1), omega(2,1perp), omega(2perp,1), omega(2perp,1perp)
  IntMatrix w12, w1p2, w12p, w1p2p;
};

OmegaBlocks omega_blocks(const AdaptedBasis& b1, const AdaptedBasis& b2);

}  // namespace tq
