#pragma once

// Quantum channels in Kraus, superoperator and Choi form.

#include "qprobe/density.hpp"

#include <cstdint>
#include <vector>

namespace qprobe {

inline constexpr double kCompletenessTol = 1e-10;

/// CPTP map E(X) = Σ_n K_n X K_n†.
class KrausChannel {
 public:
  /// Throws DimensionError on inconsistent shapes and InvalidOperator when
  /// ‖Σ K†K − I‖_F exceeds `tol`.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus, double tol = kCompletenessTol);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// ‖Σ K_n†K_n − I‖_F
  double completeness_residual() const;

 private:
  std::vector<ComplexMatrix> kraus_;
  int d_in_ = 0;
  int d_out_ = 0;
};

struct ChoiTolerance {
  double negativity = 1e-10;
  double trace = 1e-10;
  double marginal = 1e-9;  ///< max-entry deviation of Tr_out S from I/d
};

/// Normalized Choi state S = (E ⊗ id)(|Φ+><Φ+|); first factor is the channel
/// output, second the reference.
class ChoiMatrix {
 public:
  ChoiMatrix(ComplexMatrix mat, int d, const ChoiTolerance& tol = {});

  int d() const { return d_; }
  const ComplexMatrix& matrix() const { return mat_; }
  BipartiteOperator op() const { return {mat_, d_, d_}; }

 private:
  ComplexMatrix mat_;
  int d_;
};

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho);

/// (E ⊗ id)(rho) with E acting on subsystem A.
BipartiteOperator apply_extended(const KrausChannel& ch, const BipartiteOperator& rho);

ChoiMatrix choi_of(const KrausChannel& ch);

/// Kraus operators √(d λ_m) unvec(s_m) from the eigendecomposition of S, so
/// that E(X) = d · Tr_2[(I ⊗ X^T) S]. Eigenvalues below 1e-12 are dropped.
KrausChannel channel_from_choi(const ChoiMatrix& s);

/// Ê with Ê vec(X) = vec(E(X)) under row-stacking; Ê = Σ_n K_n ⊗ conj(K_n).
ComplexMatrix superoperator_matrix(const KrausChannel& ch);

/// d · Tr_2[(I ⊗ X^T) S], evaluated directly from the Choi matrix.
ComplexMatrix apply_choi(const ChoiMatrix& s, const ComplexMatrix& x);

// --- standard channels ------------------------------------------------------

KrausChannel identity_channel(int d);

/// (1 − p) X + p Tr(X) I/d, realized with the Weyl–Heisenberg basis.
KrausChannel depolarizing(int d, double p);

/// (1 − p) X + p diag(X).
KrausChannel dephasing(int d, double p);

KrausChannel unitary_channel(const ComplexMatrix& u);

/// n_kraus blocks of a Haar-random isometry C^d → C^d ⊗ C^n_kraus.
KrausChannel random_cptp(int d, int n_kraus, std::uint64_t seed);

/// Haar-random unitary channel.
KrausChannel random_unitary_channel(int d, std::uint64_t seed);

}  // namespace qprobe
