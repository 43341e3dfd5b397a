#pragma once

// Ancilla-assisted process tomography: a channel acts on subsystem A of a
// faithful probe, and the channel is recovered from the joint output.
//
// For any operator expansion rho = Σ_m A_m ⊗ B_m, row-stacking gives
// R(rho) = Σ_m vec(A_m) vec(B_m)^T, hence R((E ⊗ id)(rho)) = Ê R(rho) and
// Ê = R(rho_out) R(rho)⁻¹ whenever R(rho) is invertible.

#include "qprobe/channels.hpp"
#include "qprobe/diagnostics.hpp"

#include <cstdint>
#include <optional>

namespace qprobe {

/// Singular values below this fraction of σ_max are discarded by the
/// pseudo-inverse (after the looser faithfulness gate has passed).
inline constexpr double kPseudoInverseCutoff = 1e-12;

DensityMatrix simulate_output(const KrausChannel& ch, const DensityMatrix& probe);

/// Throws UnfaithfulProbe when the probe fails is_faithful (rel_tol 1e-9).
ComplexMatrix reconstruct_superop(const DensityMatrix& rho_out, const DensityMatrix& probe);

/// S = R⁻¹(Ê)/d. Negative eigenvalues are clipped (and the trace restored)
/// when their total weight is at most max(1e-8, 10·noise); larger violations
/// throw InvalidOperator.
ChoiMatrix superop_to_choi(const ComplexMatrix& e_hat, int d, double noise = 0.0);

/// ½ ‖a − b‖_tr
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

struct ReconstructionResult {
  DiagnosticsReport probe_report;
  ComplexMatrix superop_reconstructed;
  ChoiMatrix choi_reconstructed;
  std::optional<ChoiMatrix> choi_true;
  std::optional<double> trace_distance;
  double probe_condition_number = 0.0;
  double noise_level = 0.0;
};

/// Hermitian Gaussian perturbation of Frobenius norm `noise`, followed by
/// projection back onto the density matrices.
DensityMatrix perturb_state(const DensityMatrix& rho, double noise, std::uint64_t seed);

ReconstructionResult run_aaqpt(const KrausChannel& ch, const DensityMatrix& probe, double noise,
                               std::uint64_t seed);

}  // namespace qprobe
