#pragma once

// Constructors for the state families used as probes and benchmarks.

#include "qprobe/density.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qprobe {

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

ComplexVector bell_vector(Bell which);
DensityMatrix bell_state(Bell which);

/// |Φ+><Φ+| on C^d ⊗ C^d.
DensityMatrix max_entangled_state(int d);

/// I / (dA dB).
DensityMatrix maximally_mixed(Dims dims);

/// Werner state 2v/(d(d+1)) P_sym + 2(1-v)/(d(d-1)) P_anti, v in [0,1].
DensityMatrix werner_v(int d, double v);

/// Werner state [(d - f) I + (d f - 1) F] / (d³ - d), f = Tr(F rho) in [-1,1].
DensityMatrix werner_f(int d, double f);

/// (1 - alpha)/d² I + alpha |Φ+><Φ+|, alpha in [-1/(d²-1), 1].
DensityMatrix isotropic(int d, double alpha);

/// Parameters of γ = I + F + ε |v><v| with |v> = Σ_i a_i ⊗ b_i.
struct GammaParams {
  int k = 4;
  int n = 2;
  double eps = 0.1;
  /// Left and right factors; when empty, a_i = |2i>, b_i = |2i+1> (0-indexed i).
  std::vector<ComplexVector> a;
  std::vector<ComplexVector> b;
};

/// The raw (unnormalized) operator γ.
BipartiteOperator cariello_gamma_operator(const GammaParams& p);

/// γ / Tr γ.
DensityMatrix cariello_gamma(const GammaParams& p);

/// Bell-state labels assigned to the AB factor, weights (1/6,1/6,1/6,1/2).
using CcnrAssignment = std::array<Bell, 4>;

inline constexpr CcnrAssignment kCcnrAssignment{Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus};

/// Σ_i p_i |Ψ_i><Ψ_i|_AB ⊗ ϱ^(i)_A'B' regrouped into the (AA')|(BB') cut.
/// Performs no spectrum validation.
DensityMatrix rho_ccnr_candidate(const CcnrAssignment& assignment);

/// 4⊗4 PPT state with realigned spectrum {1/12 ×15, 1/4}. Throws
/// InvalidOperator if the construction fails to reproduce that spectrum.
DensityMatrix rho_ccnr();

/// True when the realigned spectrum of `rho` equals {1/12 ×15, 1/4} within tol.
bool has_ccnr_spectrum(const DensityMatrix& rho, double tol = 1e-10);

/// 3⊗3 PPT entangled state tabulated to five decimals, symmetrized and
/// renormalized.
DensityMatrix appendix_3x3();

/// Tolerance used to validate appendix_3x3 (loose because of the rounding).
inline constexpr StateTolerance kAppendixTolerance{1e-12, 1e-4, 1e-12};

/// The nine realigned singular values tabulated alongside appendix_3x3.
inline constexpr std::array<double, 9> kAppendixSingularValues{0.3401, 0.1712, 0.1447, 0.1418, 0.1202,
                                                               0.1197, 0.0568, 0.0490, 0.0455};
inline constexpr double kAppendixTraceNorm = 1.1891;

/// Werner state after the σz ⊕ 0, σx ⊕ 0 subspace filters, in closed form.
DensityMatrix filtered_werner_closed_form(int d, double v);

}  // namespace qprobe
