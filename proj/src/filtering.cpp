#include "qprobe/filtering.hpp"

#include "qprobe/error.hpp"

namespace qprobe {

namespace {

void require_contraction(const ComplexMatrix& m, const char* name) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DimensionError(std::string("FilterPair: ") + name + " must be square");
  require_finite(m, "FilterPair");
  const double top = hermitian_eigenvalues(m.adjoint() * m).maxCoeff();
  if (top > 1.0 + 1e-10) {
    throw InvalidOperator(std::string("FilterPair: ") + name + " is not a contraction (largest eigenvalue of " +
                          name + "†" + name + " = " + std::to_string(top) + ")");
  }
}

}  // namespace

FilterPair::FilterPair(ComplexMatrix a, ComplexMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  require_contraction(a_, "A");
  require_contraction(b_, "B");
}

DensityMatrix local_filter(const DensityMatrix& rho, const FilterPair& f) {
  if (f.a().rows() != rho.dim_a() || f.b().rows() != rho.dim_b()) {
    throw DimensionError("local_filter: filter dimensions do not match the state");
  }
  const ComplexMatrix ab = tensor(f.a(), f.b());
  const ComplexMatrix out = ab * rho.matrix() * ab.adjoint();
  const double weight = out.trace().real();
  if (!(weight > kAnnihilationThreshold)) throw AnnihilatedState(weight);
  return DensityMatrix::normalized(out, rho.dims());
}

FilterPair werner_filters(int d) {
  if (d < 3) throw DomainError("werner_filters: d must be >= 3");
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  ComplexMatrix b = ComplexMatrix::Zero(d, d);
  a(0, 0) = 1.0;
  a(1, 1) = -1.0;
  b(0, 1) = 1.0;
  b(1, 0) = 1.0;
  return {std::move(a), std::move(b)};
}

FilterPair identity_filters(Dims dims) {
  return {ComplexMatrix::Identity(dims.a, dims.a), ComplexMatrix::Identity(dims.b, dims.b)};
}

FilterAnalysis filter_analysis(const DensityMatrix& rho, const FilterPair& f) {
  FilterAnalysis out;
  out.before = full_report(rho);
  out.after = full_report(local_filter(rho, f));
  out.ccnr_increased = out.after.ccnr_value > out.before.ccnr_value + kCcnrMargin;
  out.faithfulness_lost = out.before.faithful && !out.after.faithful;
  return out;
}

}  // namespace qprobe
