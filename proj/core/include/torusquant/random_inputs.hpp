#pragma once

// Seeded generators for property tests: small Lagrangians, pairs with a
// prescribed intersection, Sp words and Gauss sum data.

#include <random>

#include "torusquant/maslov.hpp"

namespace tq::random {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Primitive nonzero vector with entries in [-bound, bound].
IntVector primitive_vector(Rng& rng, int dim, std::int64_t bound);

/// Lagrangian of the standard space with generators of entries at most `bound`
/// where the rejection sampler finds them quickly.
Lagrangian lagrangian(Rng& rng, const SymplecticSpace& space, std::int64_t bound = 5);

/// A second Lagrangian meeting l in exactly `shared` dimensions.
Lagrangian lagrangian_meeting(Rng& rng, const Lagrangian& l, int shared, std::int64_t bound = 5);

/// Word in the alpha, beta, gamma generators of Sp(2g, Z) in the given frame.
SpElement sp_word(Rng& rng, const AdaptedBasis& frame, int length);

/// Generators for Mp words: the kind and the matrix parameter.
MpElement mp_generator(Rng& rng, const AdaptedBasis& frame);

/// Symmetric integer matrix with entries in [-bound, bound] and det != 0.
IntMatrix nonsingular_symmetric(Rng& rng, int n, std::int64_t bound);

/// Element of GL(n, Z) as a short product of elementary matrices.
IntMatrix unimodular(Rng& rng, int n, int steps);

/// Lift of l over base with lambda of the right parity.
LagLift lift(Rng& rng, const Lagrangian& base, const Lagrangian& l, int q = 4);

}  // namespace tq::random
