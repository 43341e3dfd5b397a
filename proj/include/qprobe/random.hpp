#pragma once

// Seeded random draws. Every stochastic routine takes an explicit Rng; streams
// for parallel trials/restarts come from derive_seed(seed, index).

#include "qprobe/density.hpp"

#include <cstdint>
#include <random>

namespace qprobe {

using Rng = std::mt19937_64;

/// Deterministic, well-mixed seed for sub-stream `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Matrix of i.i.d. standard complex Gaussians (real and imaginary parts N(0,1)).
ComplexMatrix complex_gaussian(int rows, int cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix haar_unitary(int d, Rng& rng);

/// Haar-distributed unit vector.
ComplexVector haar_pure_state(int d, Rng& rng);

/// Full-rank Wishart-type state G G† / Tr(G G†).
DensityMatrix random_density(Dims dims, Rng& rng);

/// rho_A ⊗ rho_B with both factors random full-rank states.
DensityMatrix random_product_state(Dims dims, Rng& rng);

/// Convex mixture of `terms` random pure product states.
DensityMatrix random_separable_state(Dims dims, int terms, Rng& rng);

}  // namespace qprobe
