#include "qprobe/random.hpp"

#include "qprobe/error.hpp"

#include <cmath>

namespace qprobe {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x9e3779b9u};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

ComplexMatrix complex_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix haar_unitary(int d, Rng& rng) {
  if (d < 1) throw DimensionError("haar_unitary: d must be >= 1");
  const ComplexMatrix g = complex_gaussian(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexVector haar_pure_state(int d, Rng& rng) {
  ComplexVector v = complex_gaussian(d, 1, rng).col(0);
  return v / v.norm();
}

DensityMatrix random_density(Dims dims, Rng& rng) {
  const ComplexMatrix g = complex_gaussian(dims.total(), dims.total(), rng);
  return DensityMatrix::normalized(g * g.adjoint(), dims);
}

DensityMatrix random_product_state(Dims dims, Rng& rng) {
  const DensityMatrix a = random_density({dims.a, 1}, rng);
  const DensityMatrix b = random_density({dims.b, 1}, rng);
  return DensityMatrix::normalized(tensor(a.matrix(), b.matrix()), dims);
}

DensityMatrix random_separable_state(Dims dims, int terms, Rng& rng) {
  if (terms < 1) throw DomainError("random_separable_state: terms must be >= 1");
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  ComplexMatrix acc = ComplexMatrix::Zero(dims.total(), dims.total());
  for (int t = 0; t < terms; ++t) {
    const ComplexVector psi = tensor(haar_pure_state(dims.a, rng), haar_pure_state(dims.b, rng));
    acc += uniform(rng) * projector(psi);
  }
  return DensityMatrix::normalized(acc, dims);
}

}  // namespace qprobe
