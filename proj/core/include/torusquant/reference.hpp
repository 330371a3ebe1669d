#pragma once

// Slow reference computations used to check the closed forms: point sums of
// the K-potential phases, brute-force counting, floating-point signatures.

#include "torusquant/quantization.hpp"

namespace tq::reference {

/// |k^g det w|^{-1/2} sum over intersection points of e^{2 pi i k (K_2 - K_1)(X)}.
ComplexMatrix transverse_matrix(const HilbertSpace& h1, const HilbertSpace& h2);

/// Leafwise version for pair-adapted frames sharing their last g - h pairs:
/// one solution X per coset [l] of the reduced omega(2,1).
ComplexMatrix nontransverse_matrix(const HilbertSpace& h1, const HilbertSpace& h2);

/// g = 1 only: number of X in ((1/N) Z / Z)^2 on both leaves, N = k |det omega(2,1)|.
std::int64_t brute_force_intersections(const HilbertSpace& h1, const HilbertSpace& h2, std::int64_t q1, std::int64_t q2);

/// tau from floating eigenvalues of the same 3g x 3g form.
int tau_numeric(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);

}  // namespace tq::reference
