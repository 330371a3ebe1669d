#pragma once

// Bohr-Sommerfeld Hilbert spaces of rational real polarizations and the BKS
// intertwiners between them.

#include <optional>
#include <vector>

#include "torusquant/maslov.hpp"

namespace tq {

struct Polarization {
  Lagrangian L;
  AdaptedBasis frame;

  static Polarization canonical(const Lagrangian& l);
  /// Throws BasisMismatch unless `frame` is a valid adapted basis of l.
  static Polarization with_frame(const Lagrangian& l, const AdaptedBasis& frame);

  const SymplecticSpace& space() const { return L.space(); }
  int g() const { return L.g(); }

  friend bool operator==(const Polarization&, const Polarization&) = default;
};

class HilbertSpace {
 public:
  /// k must be even and at least 2.
  static HilbertSpace make(const Polarization& pol, std::int64_t k);

  std::int64_t k() const { return k_; }
  int g() const { return pol_.g(); }
  const Polarization& pol() const { return pol_; }
  const AdaptedBasis& frame() const { return pol_.frame; }
  std::int64_t dim() const { return ipow(k_, g()); }
  IntVector label(std::int64_t index) const { return label_from_index(index, g(), k_); }
  std::int64_t index(const IntVector& label) const { return label_index(label, k_); }

  friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

 private:
  HilbertSpace(Polarization pol, std::int64_t k) : pol_(std::move(pol)), k_(k) {}

  Polarization pol_;
  std::int64_t k_ = 2;
};

/// Exact form is stored row-major (target index, source index).
struct Intertwiner {
  HilbertSpace source;
  HilbertSpace target;
  ComplexMatrix matrix;
  std::optional<std::vector<PhaseSum>> exact;
  bool exact_omitted = false;  // exact form was too large to keep

  const PhaseSum& exact_entry(std::int64_t row, std::int64_t col) const {
    return (*exact)[static_cast<std::size_t>(row * matrix.cols() + col)];
  }
  /// max |M M^† - I|
  double unitarity_error() const;
};

/// Second after first; exact data is not carried.
Intertwiner compose(const Intertwiner& second, const Intertwiner& first);
Intertwiner scaled(const Intertwiner& m, const UnitPhase& phase);

/// K_P(X) = 1/2 sum a_i b_i for X = sum a_i W_i + b_i W_i^perp in P's frame.
Rational k_potential(const Polarization& p, const RatVector& x);

/// Representatives of the |det omega(2,1)| points of Lambda_{1,q1} ∩ Lambda_{2,q2}.
std::vector<RatVector> intersection_points(const HilbertSpace& h1, const HilbertSpace& h2, const IntVector& q1,
                                           const IntVector& q2);

/// Closed form in the frames of h1, h2. Requires L1 ∩ L2 = 0.
Intertwiner bks_matrix_transverse(const HilbertSpace& h1, const HilbertSpace& h2);

/// Closed form for 0 < dim(L1 ∩ L2); the frames of h1, h2 must be pair adapted.
Intertwiner bks_matrix_nontransverse(const HilbertSpace& h1, const HilbertSpace& h2);

/// Any pair, expressed in the frames of h1 and h2.
Intertwiner bks_matrix(const HilbertSpace& h1, const HilbertSpace& h2);

/// Unitary monomial map: (R c)_q = phase_q * c_{source_q}.
struct Monomial {
  std::vector<std::int64_t> source;
  std::vector<UnitPhase> phase;
};

/// Coordinates in frame `from` to coordinates in frame `to`, both adapted to p.L.
Monomial rebase_monomial(const Lagrangian& l, const AdaptedBasis& from, const AdaptedBasis& to, std::int64_t k);
Intertwiner rebase_unitary(const Polarization& p, const AdaptedBasis& from, const AdaptedBasis& to, std::int64_t k);
Intertwiner monomial_intertwiner(const HilbertSpace& source, const HilbertSpace& target, const Monomial& m);

/// Maslov-corrected operator from the lift of lift1.L to that of lift2.L,
/// between the canonical Hilbert spaces at level k.
Intertwiner corrected_intertwiner(const LagLift& lift1, const LagLift& lift2, std::int64_t k);

/// Exact forms are dropped once a matrix would hold more phase terms than this.
inline constexpr std::int64_t kExactTermLimit = 10000;

}  // namespace tq
