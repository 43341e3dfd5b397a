#include "qprobe/bipartite.hpp"

#include "qprobe/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qprobe {

BipartiteOperator::BipartiteOperator(ComplexMatrix mat, Dims dims) : mat_(std::move(mat)), dims_(dims) {
  if (dims_.a < 1 || dims_.b < 1) {
    throw DimensionError("local dimensions must be positive");
  }
  if (mat_.rows() != dims_.total() || mat_.cols() != dims_.total()) {
    throw DimensionError("operator is " + std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()) +
                         ", expected " + std::to_string(dims_.total()) + " square for dims (" +
                         std::to_string(dims_.a) + "," + std::to_string(dims_.b) + ")");
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw NumericFailure(std::string(what) + ": non-finite entries");
  }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

BipartiteOperator swap_operator(int k) {
  if (k < 1) throw DimensionError("swap_operator: k must be >= 1");
  ComplexMatrix f = ComplexMatrix::Zero(k * k, k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      f(i * k + j, j * k + i) = 1.0;
    }
  }
  return {std::move(f), k, k};
}

ComplexVector max_entangled(int k, bool normalized) {
  if (k < 1) throw DimensionError("max_entangled: k must be >= 1");
  ComplexVector u = ComplexVector::Zero(k * k);
  const double amp = normalized ? 1.0 / std::sqrt(static_cast<double>(k)) : 1.0;
  for (int i = 0; i < k; ++i) u(i * k + i) = amp;
  return u;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix realign(const BipartiteOperator& rho) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(da * da, db * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      for (int k = 0; k < db; ++k) {
        for (int l = 0; l < db; ++l) {
          out(i * da + j, k * db + l) = m(i * db + k, j * db + l);
        }
      }
    }
  }
  return out;
}

BipartiteOperator realign_inverse(const ComplexMatrix& m, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_a || m.cols() != dim_b * dim_b) {
    throw DimensionError("realign_inverse: expected " + std::to_string(dim_a * dim_a) + "x" +
                         std::to_string(dim_b * dim_b) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  ComplexMatrix out(dim_a * dim_b, dim_a * dim_b);
  for (int i = 0; i < dim_a; ++i) {
    for (int j = 0; j < dim_a; ++j) {
      for (int k = 0; k < dim_b; ++k) {
        for (int l = 0; l < dim_b; ++l) {
          out(i * dim_b + k, j * dim_b + l) = m(i * dim_a + j, k * dim_b + l);
        }
      }
    }
  }
  return {std::move(out), dim_a, dim_b};
}

BipartiteOperator partial_transpose(const BipartiteOperator& rho, Subsystem which) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      for (int k = 0; k < db; ++k) {
        for (int l = 0; l < db; ++l) {
          out(i * db + k, j * db + l) =
              which == Subsystem::B ? m(i * db + l, j * db + k) : m(j * db + k, i * db + l);
        }
      }
    }
  }
  return {std::move(out), rho.dims()};
}

ComplexMatrix check_realign(const BipartiteOperator& rho) {
  if (rho.dim_a() != rho.dim_b()) {
    throw DimensionError("check_realign requires dA == dB");
  }
  const BipartiteOperator pt_b = partial_transpose(rho, Subsystem::B);
  const BipartiteOperator product(pt_b.matrix() * swap_operator(rho.dim_a()).matrix(), rho.dims());
  return partial_transpose(product, Subsystem::A).matrix();
}

ComplexMatrix partial_trace(const BipartiteOperator& rho, Subsystem which) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const ComplexMatrix& m = rho.matrix();
  if (which == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int k = 0; k < db; ++k)
    for (int l = 0; l < db; ++l)
      for (int i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const int> local_dims,
                                 std::span<const int> perm) {
  const std::size_t n = local_dims.size();
  if (perm.size() != n) throw DimensionError("permute_subsystems: permutation length mismatch");
  std::vector<int> seen(perm.begin(), perm.end());
  std::sort(seen.begin(), seen.end());
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p] != static_cast<int>(p)) throw DimensionError("permute_subsystems: not a permutation");
  }
  const int total = std::accumulate(local_dims.begin(), local_dims.end(), 1, std::multiplies<>());
  if (m.rows() != total || m.cols() != total) {
    throw DimensionError("permute_subsystems: operator size does not match local dimensions");
  }

  // Row-major strides of the input factors.
  std::vector<int> in_stride(n, 1);
  for (std::size_t q = n - 1; q > 0; --q) in_stride[q - 1] = in_stride[q] * local_dims[q];

  std::vector<int> source(static_cast<std::size_t>(total));
  std::vector<int> digit(n, 0);
  for (int out_index = 0; out_index < total; ++out_index) {
    int rem = out_index;
    for (std::size_t p = n; p-- > 0;) {
      const int dim = local_dims[static_cast<std::size_t>(perm[p])];
      digit[p] = rem % dim;
      rem /= dim;
    }
    int in_index = 0;
    for (std::size_t p = 0; p < n; ++p) in_index += digit[p] * in_stride[static_cast<std::size_t>(perm[p])];
    source[static_cast<std::size_t>(out_index)] = in_index;
  }

  ComplexMatrix out(total, total);
  for (int r = 0; r < total; ++r)
    for (int c = 0; c < total; ++c) out(r, c) = m(source[r], source[c]);
  return out;
}

BipartiteOperator permute_qubit_subsystems(const ComplexMatrix& m, const std::array<int, 4>& perm) {
  if (m.rows() != 16 || m.cols() != 16) {
    throw DimensionError("permute_qubit_subsystems: expected a 16x16 operator");
  }
  constexpr std::array<int, 4> qubits{2, 2, 2, 2};
  return {permute_subsystems(m, qubits, perm), 4, 4};
}

RealVector singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  if (m.size() == 0) return RealVector();
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  if (svd.info() != Eigen::Success) throw NumericFailure("singular_values: SVD did not converge");
  return svd.singularValues();
}

double trace_norm(const ComplexMatrix& m) { return singular_values(m).sum(); }

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  require_finite(m, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericFailure("hermitian_eigenvalues: no convergence");
  return es.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigenvalues(m)(0); }

int operator_schmidt_rank(const BipartiteOperator& rho, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("operator_schmidt_rank: rel_tol must be in (0,1)");
  const RealVector s = singular_values(realign(rho));
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = rel_tol * s(0);
  return static_cast<int>((s.array() > cut).count());
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace qprobe
