#include "qprobe/channels.hpp"

#include "qprobe/error.hpp"
#include "qprobe/random.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qprobe {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, double tol) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw DimensionError("KrausChannel: empty Kraus list");
  d_out_ = static_cast<int>(kraus_.front().rows());
  d_in_ = static_cast<int>(kraus_.front().cols());
  if (d_in_ < 1 || d_out_ < 1) throw DimensionError("KrausChannel: empty Kraus operator");
  for (const ComplexMatrix& k : kraus_) {
    if (k.rows() != d_out_ || k.cols() != d_in_) throw DimensionError("KrausChannel: Kraus shapes differ");
    require_finite(k, "KrausChannel");
  }
  const double residual = completeness_residual();
  if (residual > tol) {
    throw InvalidOperator("KrausChannel: completeness residual " + std::to_string(residual));
  }
}

double KrausChannel::completeness_residual() const {
  ComplexMatrix acc = -ComplexMatrix::Identity(d_in_, d_in_);
  for (const ComplexMatrix& k : kraus_) acc += k.adjoint() * k;
  return acc.norm();
}

ChoiMatrix::ChoiMatrix(ComplexMatrix mat, int d, const ChoiTolerance& tol) : mat_(std::move(mat)), d_(d) {
  if (d_ < 1 || mat_.rows() != d_ * d_ || mat_.cols() != d_ * d_) {
    throw DimensionError("ChoiMatrix: expected a d^2 x d^2 matrix");
  }
  require_finite(mat_, "ChoiMatrix");
  if (hermiticity_defect(mat_) > tol.negativity) throw InvalidOperator("ChoiMatrix: not Hermitian");
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) throw InvalidOperator("ChoiMatrix: trace " + std::to_string(tr));
  const double lo = min_eigenvalue(mat_);
  if (lo < -tol.negativity) throw InvalidOperator("ChoiMatrix: negative eigenvalue " + std::to_string(lo));
  const ComplexMatrix marginal = partial_trace(BipartiteOperator(mat_, d_, d_), Subsystem::A);
  const double dev = (marginal - ComplexMatrix::Identity(d_, d_) / static_cast<double>(d_)).cwiseAbs().maxCoeff();
  if (dev > tol.marginal) {
    throw InvalidOperator("ChoiMatrix: not trace preserving (marginal deviation " + std::to_string(dev) + ")");
  }
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho) {
  if (rho.rows() != ch.d_in() || rho.cols() != ch.d_in()) throw DimensionError("apply: input size mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(ch.d_out(), ch.d_out());
  for (const ComplexMatrix& k : ch.kraus()) out += k * rho * k.adjoint();
  return out;
}

BipartiteOperator apply_extended(const KrausChannel& ch, const BipartiteOperator& rho) {
  if (rho.dim_a() != ch.d_in()) throw DimensionError("apply_extended: channel input does not match subsystem A");
  const ComplexMatrix id_b = ComplexMatrix::Identity(rho.dim_b(), rho.dim_b());
  const int n = ch.d_out() * rho.dim_b();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix& k : ch.kraus()) {
    const ComplexMatrix kk = tensor(k, id_b);
    out += kk * rho.matrix() * kk.adjoint();
  }
  return {std::move(out), ch.d_out(), rho.dim_b()};
}

ChoiMatrix choi_of(const KrausChannel& ch) {
  if (ch.d_in() != ch.d_out()) throw DimensionError("choi_of: channel must have d_in == d_out");
  const int d = ch.d_in();
  const BipartiteOperator phi(projector(max_entangled(d, true)), d, d);
  return ChoiMatrix(hermitian_part(apply_extended(ch, phi).matrix()), d);
}

KrausChannel channel_from_choi(const ChoiMatrix& s) {
  const int d = s.d();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(s.matrix()));
  if (es.info() != Eigen::Success) throw NumericFailure("channel_from_choi: eigendecomposition failed");
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index m = es.eigenvalues().size(); m-- > 0;) {
    const double lambda = es.eigenvalues()(m);
    if (lambda < 1e-12) continue;
    const ComplexVector vec = es.eigenvectors().col(m);
    ComplexMatrix k(d, d);
    for (int a = 0; a < d; ++a)
      for (int i = 0; i < d; ++i) k(a, i) = vec(a * d + i);
    kraus.push_back(std::sqrt(d * lambda) * k);
  }
  // Dropped eigenvalues shift completeness by at most d * d^2 * 1e-12.
  return KrausChannel(std::move(kraus), 1e-9);
}

ComplexMatrix superoperator_matrix(const KrausChannel& ch) {
  ComplexMatrix out = ComplexMatrix::Zero(ch.d_out() * ch.d_out(), ch.d_in() * ch.d_in());
  for (const ComplexMatrix& k : ch.kraus()) out += tensor(k, ComplexMatrix(k.conjugate()));
  return out;
}

ComplexMatrix apply_choi(const ChoiMatrix& s, const ComplexMatrix& x) {
  const int d = s.d();
  if (x.rows() != d || x.cols() != d) throw DimensionError("apply_choi: input size mismatch");
  const ComplexMatrix weighted = tensor(ComplexMatrix::Identity(d, d), ComplexMatrix(x.transpose())) * s.matrix();
  return static_cast<double>(d) * partial_trace(BipartiteOperator(weighted, d, d), Subsystem::B);
}

KrausChannel identity_channel(int d) {
  if (d < 1) throw DomainError("identity_channel: d must be >= 1");
  return KrausChannel({ComplexMatrix::Identity(d, d)});
}

KrausChannel depolarizing(int d, double p) {
  if (d < 1) throw DomainError("depolarizing: d must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("depolarizing: p must lie in [0,1]");
  const double dd = d;
  // Weyl operators W_ab = X^a Z^b satisfy (1/d²) Σ_ab W X W† = Tr(X) I/d.
  ComplexMatrix shift = ComplexMatrix::Zero(d, d);
  ComplexMatrix clock = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    shift((j + 1) % d, j) = 1.0;
    clock(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / dd);
  }
  std::vector<ComplexMatrix> kraus;
  ComplexMatrix xa = ComplexMatrix::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    ComplexMatrix w = xa;
    for (int b = 0; b < d; ++b) {
      const double weight = (a == 0 && b == 0) ? 1.0 - p + p / (dd * dd) : p / (dd * dd);
      if (weight > 0.0) kraus.push_back(std::sqrt(weight) * w);
      w = w * clock;
    }
    xa = shift * xa;
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel dephasing(int d, double p) {
  if (d < 1) throw DomainError("dephasing: d must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("dephasing: p must lie in [0,1]");
  std::vector<ComplexMatrix> kraus;
  if (p < 1.0) kraus.push_back(std::sqrt(1.0 - p) * ComplexMatrix::Identity(d, d));
  if (p > 0.0) {
    for (int i = 0; i < d; ++i) {
      ComplexMatrix k = ComplexMatrix::Zero(d, d);
      k(i, i) = std::sqrt(p);
      kraus.push_back(std::move(k));
    }
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("unitary_channel: U must be square");
  const double defect = (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (defect > 1e-10) throw DomainError("unitary_channel: U is not unitary");
  return KrausChannel({u});
}

KrausChannel random_cptp(int d, int n_kraus, std::uint64_t seed) {
  if (d < 1 || n_kraus < 1) throw DomainError("random_cptp: d and n_kraus must be >= 1");
  Rng rng(seed);
  // The first d columns of a Haar unitary on C^{d n} form a Haar isometry.
  const ComplexMatrix isometry = haar_unitary(d * n_kraus, rng).leftCols(d);
  std::vector<ComplexMatrix> kraus;
  for (int m = 0; m < n_kraus; ++m) kraus.push_back(isometry.middleRows(m * d, d));
  return KrausChannel(std::move(kraus));
}

KrausChannel random_unitary_channel(int d, std::uint64_t seed) {
  Rng rng(seed);
  return unitary_channel(haar_unitary(d, rng));
}

}  // namespace qprobe
