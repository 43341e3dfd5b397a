#pragma once

// See-saw maximization of ‖R(rho)‖_tr over PPT states.
//
// The trace norm is written as max_{Y Y† <= I} Re Tr(R(rho)† Y). With rho
// fixed the optimal Y is the polar factor U V† of R(rho); with Y fixed the
// objective is linear in rho with gradient Herm(R⁻¹(Y)). The rho step is a
// projected gradient step onto {rho >= 0, Tr rho = 1} ∩ {rho^Γ >= 0}, the
// projection computed with Dykstra's algorithm.

#include "qprobe/density.hpp"

#include <cstdint>
#include <vector>

namespace qprobe {

struct SeesawConfig {
  int d = 3;
  int max_outer = 500;
  double step = 0.0;  ///< η; 0 selects the default 0.1/d
  int projection_iters = 200;
  double projection_tol = 1e-9;
  double objective_tol = 1e-9;
  int restarts = 20;
  std::uint64_t seed = 0;

  double effective_step() const { return step > 0.0 ? step : 0.1 / d; }
  /// Throws DomainError unless every field is positive.
  void validate() const;
};

struct RestartSummary {
  double final_value = 0.0;
  int outer_iterations = 0;
  bool converged = false;
};

struct SeesawResult {
  ComplexMatrix best_state;  ///< PPT state attaining best_value
  int d = 0;
  double best_value = 0.0;
  int best_restart = 0;
  std::vector<double> history;  ///< objective per outer iteration of the best restart
  double ppt_residual = 0.0;    ///< min eigenvalue of best_state^Γ
  double psd_residual = 0.0;    ///< min eigenvalue of best_state
  std::vector<RestartSummary> restarts;
};

/// Hermitian matrix with the Frobenius-nearest PSD unit-trace matrix
/// (eigenvalues projected onto the probability simplex).
ComplexMatrix project_psd_trace_one(const ComplexMatrix& x);

/// Clips the negative part of X^Γ: ((X^Γ)_+)^Γ.
ComplexMatrix project_ppt(const ComplexMatrix& x, Dims dims);

struct ProjectionOutcome {
  ComplexMatrix state;
  int iterations = 0;
  bool converged = false;
};

/// Dykstra's alternating projections onto the PPT states.
ProjectionOutcome project_ppt_states(const ComplexMatrix& x, Dims dims, int max_iters, double tol);

/// Polar factor U V† of R(rho).
ComplexMatrix dual_y_step(const ComplexMatrix& rho, Dims dims);

/// rho + η Herm(R⁻¹(Y)) projected onto the PPT states.
ProjectionOutcome primal_rho_step(const ComplexMatrix& rho, const ComplexMatrix& y, Dims dims,
                                  const SeesawConfig& cfg);

ComplexMatrix dual_y_step(const DensityMatrix& rho);

/// As above, returning the PSD unit-trace iterate validated with negativity
/// tolerance cfg.projection_tol.
DensityMatrix primal_rho_step(const DensityMatrix& rho, const ComplexMatrix& y, const SeesawConfig& cfg);

/// Mixes rho with I/d²by the least weight that makes both rho and rho^Γ
/// positive semidefinite (exact feasibility restoration).
ComplexMatrix restore_feasibility(const ComplexMatrix& rho, Dims dims);

SeesawResult optimize(const SeesawConfig& cfg);

}  // namespace qprobe
