#pragma once

// Finite Heisenberg group H_k, the projective Sp(Z) representation and the
// Mp(Z) representation on a polarized Hilbert space.

#include "torusquant/quantization.hpp"

namespace tq {

/// (lambda, v) with lambda = e^{i pi t} and v = sum (n_i/k) W_i + (n_{g+i}/k) W_i^perp
/// in the frame of a reference polarization, 0 <= n < k.
struct HeisenbergElement {
  std::int64_t k = 2;
  AdaptedBasis frame;
  UnitPhase phase;
  IntVector n;

  /// Reduces arbitrary integer coordinates into [0, k), adjusting the phase.
  static HeisenbergElement make(std::int64_t k, const AdaptedBasis& frame, const UnitPhase& phase, const IntVector& n);
  static HeisenbergElement w(std::int64_t k, const AdaptedBasis& frame, int i);
  static HeisenbergElement wperp(std::int64_t k, const AdaptedBasis& frame, int i);
  static HeisenbergElement central(std::int64_t k, const AdaptedBasis& frame, const UnitPhase& phase);

  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

/// (lambda, V)(lambda', V') = (lambda lambda' e^{i pi k omega(V, V')}, V + V') modulo lattice translations.
HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y);

/// The same group element written in another frame.
HeisenbergElement reframe(const HeisenbergElement& h, const AdaptedBasis& frame);

ComplexMatrix heisenberg_matrix(const HeisenbergElement& h, const HilbertSpace& space);

/// Dimension of the space of matrices commuting with every generator; 1 means irreducible.
int heisenberg_commutant_dimension(const HilbertSpace& space);

/// H_P -> H_{bP}: labels carried to the image frame b(frame), then rebased to the canonical frame of bP.
Intertwiner sp_pushforward(const SpElement& b, const HilbertSpace& space);

/// F_{P, bP} composed with the pushforward; a unitary on `space`.
ComplexMatrix u_sp(const SpElement& b, const HilbertSpace& space);

/// e^{i pi z / 4} u_sp(b). The element must be based at the polarization's Lagrangian.
ComplexMatrix u_mp(const MpElement& x, const HilbertSpace& space);

}  // namespace tq
