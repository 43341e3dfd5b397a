#pragma once

// Dense complex linear algebra on bipartite operators.
//
// Conventions used throughout the library:
//  * computational basis, 0-indexed;
//  * composite index (i, k) of H_A ⊗ H_B maps to i * dB + k;
//  * vectorization is row-stacking, vec(|i><j|) = |ij>, so that
//    realign(A ⊗ B) = vec(A) vec(B)^T.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace qprobe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class Subsystem { A, B };

struct Dims {
  int a = 1;
  int b = 1;

  int total() const { return a * b; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Square operator on H_A ⊗ H_B with the factorization stored explicitly.
class BipartiteOperator {
 public:
  BipartiteOperator(ComplexMatrix mat, Dims dims);
  BipartiteOperator(ComplexMatrix mat, int dim_a, int dim_b)
      : BipartiteOperator(std::move(mat), Dims{dim_a, dim_b}) {}

  const ComplexMatrix& matrix() const { return mat_; }
  Dims dims() const { return dims_; }
  int dim_a() const { return dims_.a; }
  int dim_b() const { return dims_.b; }
  int size() const { return dims_.total(); }

  /// Element rho_{ij,kl} = <i k| rho |j l> (i, j on A; k, l on B).
  Complex element(int i, int j, int k, int l) const {
    return mat_(i * dims_.b + k, j * dims_.b + l);
  }

 private:
  ComplexMatrix mat_;
  Dims dims_;
};

/// Throws DimensionError/NumericFailure unless every entry is finite.
void require_finite(const ComplexMatrix& m, const char* what);

// --- construction -----------------------------------------------------------

/// Kronecker product: (a ⊗ b)_{(i,k),(j,l)} = a_ij b_kl.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

/// Flip operator F = Σ_ij |i><j| ⊗ |j><i| on C^k ⊗ C^k.
BipartiteOperator swap_operator(int k);

/// |u> = Σ_i |ii>, or |Φ+> = |u>/√k when normalized.
ComplexVector max_entangled(int k, bool normalized);

ComplexMatrix projector(const ComplexVector& v);

// --- index rearrangements ---------------------------------------------------

/// R(rho): entry rho_{ij,kl} moves to row i*dA + j, column k*dB + l.
ComplexMatrix realign(const BipartiteOperator& rho);

/// Inverse of realign for a dA² × dB² matrix.
BipartiteOperator realign_inverse(const ComplexMatrix& m, int dim_a, int dim_b);

/// Ř(rho) = (rho^{T_B} F)^{T_A}; requires dA == dB.
ComplexMatrix check_realign(const BipartiteOperator& rho);

BipartiteOperator partial_transpose(const BipartiteOperator& rho, Subsystem which);

/// Traces out `which`, returning the operator on the other factor.
ComplexMatrix partial_trace(const BipartiteOperator& rho, Subsystem which);

/// Reorders tensor factors: output factor p is input factor perm[p].
ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const int> local_dims,
                                 std::span<const int> perm);

/// Regroups a four-qubit operator; the result is cut as (q0 q1)|(q2 q3) of the
/// permuted order.
BipartiteOperator permute_qubit_subsystems(const ComplexMatrix& m, const std::array<int, 4>& perm);

// --- spectra and norms ------------------------------------------------------

/// Singular values, descending, length min(rows, cols).
RealVector singular_values(const ComplexMatrix& m);

/// Schatten 1-norm.
double trace_norm(const ComplexMatrix& m);

/// Eigenvalues of the Hermitian part of m, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);

ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Number of singular values of R(rho) above rel_tol * sigma_max; 0 for the
/// zero operator.
int operator_schmidt_rank(const BipartiteOperator& rho, double rel_tol = 1e-9);

/// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

}  // namespace qprobe
