#include "qprobe/diagnostics.hpp"

#include "qprobe/error.hpp"
#include "qprobe/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace qprobe {

double ccnr_value(const DensityMatrix& rho) { return trace_norm(realign(rho)); }

bool ccnr_entangled(double ccnr) { return ccnr > 1.0 + kCcnrMargin; }

PptCheck is_ppt(const DensityMatrix& rho, double tol) {
  if (tol < 0.0) throw DomainError("is_ppt: tol must be >= 0");
  const double lo = min_eigenvalue(partial_transpose(rho, Subsystem::B).matrix());
  return {lo >= -tol, lo};
}

double faithfulness(const DensityMatrix& rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

FaithfulCheck is_faithful(const DensityMatrix& rho, double rel_tol) {
  if (rho.dim_a() != rho.dim_b()) throw DimensionError("is_faithful requires dA == dB");
  const RealVector s = singular_values(realign(rho));
  FaithfulCheck out;
  out.sigma_max = s(0);
  out.sigma_min = s(s.size() - 1);
  out.condition_number =
      out.sigma_min > 0.0 ? out.sigma_max / out.sigma_min : std::numeric_limits<double>::infinity();
  out.faithful = out.sigma_min > rel_tol * out.sigma_max;
  return out;
}

double analytic_ccnr(Family family, int d, double param) {
  if (d < 2) throw DomainError("analytic_ccnr: d must be >= 2");
  const double dd = d;
  if (family == Family::Isotropic) {
    if (!(param >= -1.0 / (dd * dd - 1.0) && param <= 1.0)) throw DomainError("analytic_ccnr: alpha out of range");
    // R(rho_iso) has eigenvalue 1/d on |u> and alpha/d on its complement.
    return (1.0 + (dd * dd - 1.0) * std::abs(param)) / dd;
  }
  if (!(param >= -1.0 && param <= 1.0)) throw DomainError("analytic_ccnr: f out of range");
  return param <= 1.0 / dd ? 2.0 / dd - param : param;
}

DensityMatrix local_unitary(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v) {
  const ComplexMatrix uv = tensor(u, v);
  return DensityMatrix::normalized(uv * rho.matrix() * uv.adjoint(), rho.dims());
}

DensityMatrix attach_ancilla(const DensityMatrix& rho, const ComplexMatrix& ancilla_a,
                             const ComplexMatrix& ancilla_b) {
  const int ea = static_cast<int>(ancilla_a.rows());
  const int eb = static_cast<int>(ancilla_b.rows());
  const ComplexMatrix joint = tensor(rho.matrix(), tensor(ancilla_a, ancilla_b));
  const std::array<int, 4> local{rho.dim_a(), rho.dim_b(), ea, eb};
  const std::array<int, 4> perm{0, 2, 1, 3};
  return DensityMatrix::normalized(permute_subsystems(joint, local, perm), {rho.dim_a() * ea, rho.dim_b() * eb});
}

DensityMatrix luders_measurement(const DensityMatrix& rho, const ComplexMatrix& basis_a,
                                 const ComplexMatrix& basis_b) {
  if (basis_a.rows() != rho.dim_a() || basis_b.rows() != rho.dim_b()) {
    throw DimensionError("luders_measurement: basis size mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.size(), rho.size());
  for (Eigen::Index k = 0; k < basis_a.cols(); ++k) {
    for (Eigen::Index l = 0; l < basis_b.cols(); ++l) {
      const ComplexMatrix p = tensor(projector(basis_a.col(k)), projector(basis_b.col(l)));
      out += p * rho.matrix() * p;
    }
  }
  return DensityMatrix::normalized(out, rho.dims());
}

RudolphReport rudolph_checks(const DensityMatrix& rho, int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("rudolph_checks: trials must be >= 1");
  const double base = ccnr_value(rho);
  RudolphReport report;
  auto record = [](PropertyOutcome& out, double value) {
    out.worst = out.trials == 0 ? value : std::max(out.worst, value);
    out.passed = out.worst <= kRudolphTol;
    ++out.trials;
  };

  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const ComplexMatrix u = haar_unitary(rho.dim_a(), rng);
    const ComplexMatrix v = haar_unitary(rho.dim_b(), rng);
    record(report.local_unitary, std::abs(ccnr_value(local_unitary(rho, u, v)) - base));

    const ComplexMatrix anc_a = projector(haar_pure_state(2, rng));
    const ComplexMatrix anc_b = projector(haar_pure_state(2, rng));
    record(report.product_ancilla, ccnr_value(attach_ancilla(rho, anc_a, anc_b)) - base);

    const ComplexMatrix basis_a = haar_unitary(rho.dim_a(), rng);
    const ComplexMatrix basis_b = haar_unitary(rho.dim_b(), rng);
    record(report.luders_measurement, ccnr_value(luders_measurement(rho, basis_a, basis_b)) - base);
  }
  return report;
}

DiagnosticsReport full_report(const DensityMatrix& rho) {
  DiagnosticsReport r;
  r.dims = rho.dims();
  r.realigned_spectrum = singular_values(realign(rho));
  r.ccnr_value = r.realigned_spectrum.sum();
  r.ccnr_entangled = ccnr_entangled(r.ccnr_value);
  const PptCheck ppt = is_ppt(rho);
  r.ppt = ppt.ppt;
  r.min_eig_pt = ppt.min_eig;
  r.purity = faithfulness(rho);

  const RealVector& s = r.realigned_spectrum;
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  r.schmidt_rank = smax == 0.0 ? 0 : static_cast<int>((s.array() > kFaithfulRelTol * smax).count());
  r.condition_number = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  r.faithful = rho.dim_a() == rho.dim_b() && smin > kFaithfulRelTol * smax;
  return r;
}

}  // namespace qprobe
