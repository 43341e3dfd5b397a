#pragma once

#include "qprobe/bipartite.hpp"

namespace qprobe {

/// Acceptance thresholds for DensityMatrix validation.
struct StateTolerance {
  double hermiticity = 1e-12;  ///< max |rho_ij - conj(rho_ji)|
  double negativity = 1e-10;   ///< smallest admissible eigenvalue is -negativity
  double trace = 1e-12;        ///< |Tr rho - 1|
};

/// Hermitian, positive semidefinite, unit-trace bipartite operator.
class DensityMatrix {
 public:
  /// Validates `op`; throws InvalidOperator on failure.
  explicit DensityMatrix(BipartiteOperator op, const StateTolerance& tol = {});

  /// Symmetrizes and rescales to unit trace before validating. Used for the
  /// outputs of internal computations whose rounding is well below tolerance.
  static DensityMatrix normalized(const ComplexMatrix& m, Dims dims, const StateTolerance& tol = {});

  const BipartiteOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  Dims dims() const { return op_.dims(); }
  int dim_a() const { return op_.dim_a(); }
  int dim_b() const { return op_.dim_b(); }
  int size() const { return op_.size(); }

  operator const BipartiteOperator&() const { return op_; }

 private:
  BipartiteOperator op_;
};

/// Reasons a candidate fails validation, empty when valid.
std::string density_violation(const BipartiteOperator& op, const StateTolerance& tol = {});

}  // namespace qprobe
