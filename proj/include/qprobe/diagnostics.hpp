#pragma once

// Entanglement and faithfulness verdicts for bipartite states.

#include "qprobe/density.hpp"

#include <cstdint>

namespace qprobe {

/// CCNR violation threshold: entangled iff ‖R(rho)‖_tr > 1 + kCcnrMargin.
inline constexpr double kCcnrMargin = 1e-9;

/// Default relative cutoff σ_min > rel_tol · σ_max for faithfulness.
inline constexpr double kFaithfulRelTol = 1e-9;

double ccnr_value(const DensityMatrix& rho);
bool ccnr_entangled(double ccnr);

struct PptCheck {
  bool ppt = false;
  double min_eig = 0.0;  ///< smallest eigenvalue of rho^{T_B}
};

PptCheck is_ppt(const DensityMatrix& rho, double tol = 1e-10);

/// Tr(rho²).
double faithfulness(const DensityMatrix& rho);

struct FaithfulCheck {
  bool faithful = false;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double condition_number = 0.0;  ///< σ_max/σ_min, +inf when σ_min == 0
};

/// Requires dA == dB.
FaithfulCheck is_faithful(const DensityMatrix& rho, double rel_tol = kFaithfulRelTol);

enum class Family { Isotropic, Werner };

/// Closed-form ‖R(rho)‖_tr for the isotropic (param = alpha) and Werner
/// (param = f) families.
double analytic_ccnr(Family family, int d, double param);

struct PropertyOutcome {
  bool passed = true;
  /// Worst observed value of the checked quantity (deviation for invariance,
  /// increase for monotonicity); pass requires it to stay <= 1e-9.
  double worst = 0.0;
  int trials = 0;
};

/// Seeded checks of the local-operation properties of ‖R(rho)‖_tr.
struct RudolphReport {
  PropertyOutcome local_unitary;       ///< invariance under U ⊗ V
  PropertyOutcome product_ancilla;     ///< no increase when attaching a pure product ancilla
  PropertyOutcome luders_measurement;  ///< no increase under local projective measurements

  bool all_passed() const {
    return local_unitary.passed && product_ancilla.passed && luders_measurement.passed;
  }
};

inline constexpr double kRudolphTol = 1e-9;

RudolphReport rudolph_checks(const DensityMatrix& rho, int trials, std::uint64_t seed);

/// ρ ⊗ (σ_A' ⊗ τ_B') regrouped into the (AA')|(BB') cut.
DensityMatrix attach_ancilla(const DensityMatrix& rho, const ComplexMatrix& ancilla_a, const ComplexMatrix& ancilla_b);

/// Σ_{k,l} (P_k ⊗ Q_l) rho (P_k ⊗ Q_l) for rank-1 projectors onto the columns
/// of the unitaries `basis_a` and `basis_b`.
DensityMatrix luders_measurement(const DensityMatrix& rho, const ComplexMatrix& basis_a, const ComplexMatrix& basis_b);

/// (U ⊗ V) rho (U ⊗ V)†
DensityMatrix local_unitary(const DensityMatrix& rho, const ComplexMatrix& u, const ComplexMatrix& v);

struct DiagnosticsReport {
  Dims dims;
  double ccnr_value = 0.0;
  bool ccnr_entangled = false;
  bool ppt = false;
  double min_eig_pt = 0.0;
  double purity = 0.0;
  RealVector realigned_spectrum;
  bool faithful = false;
  int schmidt_rank = 0;
  double condition_number = 0.0;
};

DiagnosticsReport full_report(const DensityMatrix& rho);

}  // namespace qprobe
