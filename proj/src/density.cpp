#include "qprobe/density.hpp"

#include "qprobe/error.hpp"

#include <cmath>
#include <sstream>

namespace qprobe {

std::string density_violation(const BipartiteOperator& op, const StateTolerance& tol) {
  const ComplexMatrix& m = op.matrix();
  if (!m.allFinite()) return "non-finite entries";
  std::ostringstream why;
  const double herm = hermiticity_defect(m);
  if (herm > tol.hermiticity) why << "not Hermitian (defect " << herm << "); ";
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) why << "trace " << tr << " != 1; ";
  const double lo = min_eigenvalue(m);
  if (lo < -tol.negativity) why << "negative eigenvalue " << lo << "; ";
  return why.str();
}

DensityMatrix::DensityMatrix(BipartiteOperator op, const StateTolerance& tol) : op_(std::move(op)) {
  if (const std::string why = density_violation(op_, tol); !why.empty()) {
    throw InvalidOperator("invalid density matrix: " + why);
  }
}

DensityMatrix DensityMatrix::normalized(const ComplexMatrix& m, Dims dims, const StateTolerance& tol) {
  ComplexMatrix h = hermitian_part(m);
  const double tr = h.trace().real();
  if (!(std::abs(tr) > 0.0)) throw InvalidOperator("invalid density matrix: zero trace");
  h /= tr;
  return DensityMatrix(BipartiteOperator(std::move(h), dims), tol);
}

}  // namespace qprobe
