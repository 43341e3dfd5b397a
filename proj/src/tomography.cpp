#include "qprobe/tomography.hpp"

#include "qprobe/error.hpp"
#include "qprobe/random.hpp"
#include "qprobe/seesaw.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qprobe {

DensityMatrix simulate_output(const KrausChannel& ch, const DensityMatrix& probe) {
  if (probe.dim_a() != ch.d_in()) throw DimensionError("simulate_output: probe subsystem A does not match channel");
  const BipartiteOperator out = apply_extended(ch, probe);
  // A CP map on A cannot create more negative weight than the probe carries
  // (nonzero only for probes validated with a relaxed tolerance).
  const double negative_weight = -hermitian_eigenvalues(probe.matrix()).cwiseMin(0.0).sum();
  StateTolerance tol;
  tol.negativity += negative_weight;
  return DensityMatrix::normalized(out.matrix(), out.dims(), tol);
}

ComplexMatrix reconstruct_superop(const DensityMatrix& rho_out, const DensityMatrix& probe) {
  if (rho_out.dims() != probe.dims()) throw DimensionError("reconstruct_superop: output and probe dims differ");
  const FaithfulCheck gate = is_faithful(probe);
  if (!gate.faithful) throw UnfaithfulProbe(gate.sigma_min, gate.sigma_max);

  const ComplexMatrix r_probe = realign(probe);
  Eigen::JacobiSVD<ComplexMatrix> svd(r_probe, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw NumericFailure("reconstruct_superop: SVD failed");
  const RealVector& s = svd.singularValues();
  RealVector inv = RealVector::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > kPseudoInverseCutoff * s(0)) inv(i) = 1.0 / s(i);
  }
  const ComplexMatrix pinv = svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
  return realign(rho_out) * pinv;
}

ChoiMatrix superop_to_choi(const ComplexMatrix& e_hat, int d, double noise) {
  if (d < 1 || e_hat.rows() != d * d || e_hat.cols() != d * d) {
    throw DimensionError("superop_to_choi: expected a d^2 x d^2 superoperator");
  }
  if (noise < 0.0) throw DomainError("superop_to_choi: noise must be >= 0");
  ComplexMatrix s = hermitian_part(realign_inverse(e_hat, d, d).matrix()) / static_cast<double>(d);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
  if (es.info() != Eigen::Success) throw NumericFailure("superop_to_choi: eigendecomposition failed");
  const RealVector& lambda = es.eigenvalues();
  const double clipped = -lambda.cwiseMin(0.0).sum();
  const double allowance = std::max(1e-8, 10.0 * noise);
  if (clipped > allowance) {
    throw InvalidOperator("superop_to_choi: negative weight " + std::to_string(clipped) + " exceeds " +
                          std::to_string(allowance));
  }
  if (clipped > 0.0) {
    const ComplexMatrix& v = es.eigenvectors();
    s = hermitian_part(v * lambda.cwiseMax(0.0).cast<Complex>().asDiagonal() * v.adjoint());
    s /= s.trace().real();
  }
  // Noise also perturbs trace preservation; widen the marginal check with it.
  ChoiTolerance tol;
  tol.negativity = 1e-10;
  tol.trace = std::max(1e-10, 10.0 * noise);
  tol.marginal = std::max(1e-8, 10.0 * noise);
  return ChoiMatrix(std::move(s), d, tol);
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) { return 0.5 * trace_norm(a - b); }

DensityMatrix perturb_state(const DensityMatrix& rho, double noise, std::uint64_t seed) {
  if (noise < 0.0 || !std::isfinite(noise)) throw DomainError("perturb_state: noise must be >= 0");
  if (noise == 0.0) return rho;
  Rng rng(seed);
  ComplexMatrix g = hermitian_part(complex_gaussian(rho.size(), rho.size(), rng));
  g *= noise / g.norm();
  return DensityMatrix::normalized(project_psd_trace_one(rho.matrix() + g), rho.dims());
}

ReconstructionResult run_aaqpt(const KrausChannel& ch, const DensityMatrix& probe, double noise,
                               std::uint64_t seed) {
  if (noise < 0.0) throw DomainError("run_aaqpt: noise must be >= 0");
  const DiagnosticsReport report = full_report(probe);
  const DensityMatrix exact = simulate_output(ch, probe);
  const DensityMatrix observed = perturb_state(exact, noise, seed);
  ComplexMatrix e_hat = reconstruct_superop(observed, probe);
  ChoiMatrix choi = superop_to_choi(e_hat, ch.d_in(), noise);
  ChoiMatrix truth = choi_of(ch);
  const double distance = trace_distance(truth.matrix(), choi.matrix());
  return ReconstructionResult{report,        std::move(e_hat),         std::move(choi), std::move(truth), distance,
                              report.condition_number, noise};
}

}  // namespace qprobe
