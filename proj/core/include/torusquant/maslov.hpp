#pragma once

// Kashiwara triple index, the Z/2q Maslov index on the base-point model of
// the Lagrangian covers, and Mp(Z) as pairs (b, z mod 8) over a base Lagrangian.

#include "torusquant/symplectic_lattice.hpp"

namespace tq {

int tau(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);

/// Same index via the form omega(X, p31 X') on L2, p31 the projection onto
/// L3 along L1. Requires L1 ∩ L3 = 0.
int tau_transverse(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);

/// (L, lambda) with lambda mod 2q and lambda ≡ g - dim(L ∩ base) (mod 2).
struct LagLift {
  Lagrangian base;
  Lagrangian L;
  int lambda = 0;
  int q = 4;

  static LagLift make(const Lagrangian& base, const Lagrangian& l, int lambda, int q = 4);
};

/// lambda_a - lambda_b + tau(base, A, B) mod 2q.
int mu(const LagLift& a, const LagLift& b, int q = 4);

class SpElement {
 public:
  SpElement() = default;
  /// Checks b^T gram b == gram.
  static SpElement make(const SymplecticSpace& space, const IntMatrix& b);
  static SpElement identity(const SymplecticSpace& space);

  const SymplecticSpace& space() const { return space_; }
  const IntMatrix& matrix() const { return b_; }
  Lagrangian apply(const Lagrangian& l) const { return l.transformed(b_); }
  AdaptedBasis apply(const AdaptedBasis& b) const { return b.transformed(b_); }
  SpElement inverse() const;

  friend SpElement operator*(const SpElement& x, const SpElement& y);
  friend bool operator==(const SpElement&, const SpElement&) = default;

 private:
  SpElement(SymplecticSpace s, IntMatrix b) : space_(std::move(s)), b_(std::move(b)) {}

  SymplecticSpace space_;
  IntMatrix b_;
};

/// Symplectic matrix given in the coordinates of an adapted frame, moved to lattice coordinates.
SpElement sp_from_frame(const AdaptedBasis& frame, const IntMatrix& m);
/// Matrix of b in frame coordinates.
IntMatrix sp_in_frame(const AdaptedBasis& frame, const SpElement& b);

struct MpElement {
  Lagrangian base;
  SpElement b;
  int z = 0;             // mod 8
  bool checked = false;  // built from generators and products only

  /// Direct construction; enforces the mod 2 parity only and is flagged unchecked.
  static MpElement make(const Lagrangian& base, const SpElement& b, int z);
  static MpElement identity(const Lagrangian& base);

  friend bool operator==(const MpElement& x, const MpElement& y) {
    return x.base == y.base && x.b == y.b && x.z == y.z;
  }
};

MpElement mp_mul(const MpElement& x, const MpElement& y);
LagLift mp_act(const MpElement& x, const LagLift& lift);

enum class MpKind { Epsilon, Alpha, Beta, Gamma, GammaEpsilon };

/// Generators in the frame of `frame` (whose W span the base Lagrangian).
/// Alpha takes A in GL(g, Z); Beta takes symmetric B; the others ignore `param`.
/// Gamma carries z = g mod 8; GammaEpsilon is the other lift, Gamma * epsilon
/// (for g = 1 this is the element written (S, 5)).
MpElement mp_generator(const AdaptedBasis& frame, MpKind kind, const IntMatrix& param = {});

}  // namespace tq
