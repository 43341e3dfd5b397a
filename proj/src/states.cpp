#include "qprobe/states.hpp"

#include "qprobe/error.hpp"

#include <cmath>
#include <string>

namespace qprobe {

namespace {

void require_dimension(int d, int min, const char* who) {
  if (d < min) throw DomainError(std::string(who) + ": d must be >= " + std::to_string(min));
}

void require_range(double x, double lo, double hi, const char* who) {
  if (!(x >= lo && x <= hi)) {
    throw DomainError(std::string(who) + ": parameter " + std::to_string(x) + " outside [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  }
}

ComplexVector basis(int k, int i) {
  ComplexVector e = ComplexVector::Zero(k);
  e(i) = 1.0;
  return e;
}

// clang-format off
constexpr double kAppendixData[9][9] = {
    { 0.19474,  0.03386, -0.00588,  0.03389, -0.05209, -0.03997,  0.04765, -0.02083,  0.03734},
    { 0.03386,  0.07216,  0.02896,  0.04847, -0.00093, -0.02711, -0.03363, -0.01904, -0.05696},
    {-0.00588,  0.02896,  0.07508,  0.00102,  0.06799, -0.00988, -0.05149, -0.01154,  0.00288},
    { 0.03389,  0.04847,  0.00102,  0.05986,  0.01951, -0.05253,  0.01890, -0.02943, -0.04161},
    {-0.05209, -0.00093,  0.06799,  0.01951,  0.17277, -0.02847,  0.02028, -0.07422,  0.02861},
    {-0.03997, -0.02711, -0.00988, -0.05253, -0.02847,  0.11131, -0.01357, -0.03116,  0.02362},
    { 0.04765, -0.03363, -0.05149,  0.01890,  0.02028, -0.01357,  0.10703, -0.05361,  0.04412},
    {-0.02083, -0.01904, -0.01154, -0.02943, -0.07422, -0.03116, -0.05361,  0.11615, -0.01626},
    { 0.03734, -0.05696,  0.00288, -0.04161,  0.02861,  0.02362,  0.04412, -0.01626,  0.09090},
};
// clang-format on

}  // namespace

ComplexVector bell_vector(Bell which) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (which) {
    case Bell::PhiPlus: v(0) = s; v(3) = s; break;
    case Bell::PhiMinus: v(0) = s; v(3) = -s; break;
    case Bell::PsiPlus: v(1) = s; v(2) = s; break;
    case Bell::PsiMinus: v(1) = s; v(2) = -s; break;
  }
  return v;
}

DensityMatrix bell_state(Bell which) { return DensityMatrix(BipartiteOperator(projector(bell_vector(which)), 2, 2)); }

DensityMatrix max_entangled_state(int d) {
  require_dimension(d, 1, "max_entangled_state");
  return DensityMatrix::normalized(projector(max_entangled(d, true)), {d, d});
}

DensityMatrix maximally_mixed(Dims dims) {
  const int n = dims.total();
  return DensityMatrix(BipartiteOperator(ComplexMatrix::Identity(n, n) / static_cast<double>(n), dims));
}

DensityMatrix werner_v(int d, double v) {
  require_dimension(d, 2, "werner_v");
  require_range(v, 0.0, 1.0, "werner_v");
  const ComplexMatrix id = ComplexMatrix::Identity(d * d, d * d);
  const ComplexMatrix f = swap_operator(d).matrix();
  // Symmetric projector carries weight v; see werner_f for the cross-check.
  const ComplexMatrix sym = 0.5 * (id + f);
  const ComplexMatrix anti = 0.5 * (id - f);
  const double dd = d;
  const ComplexMatrix rho = (2.0 * v / (dd * (dd + 1.0))) * sym + (2.0 * (1.0 - v) / (dd * (dd - 1.0))) * anti;
  return DensityMatrix(BipartiteOperator(rho, d, d));
}

DensityMatrix werner_f(int d, double f) {
  require_dimension(d, 2, "werner_f");
  require_range(f, -1.0, 1.0, "werner_f");
  const double dd = d;
  const ComplexMatrix rho =
      ((dd - f) * ComplexMatrix::Identity(d * d, d * d) + (dd * f - 1.0) * swap_operator(d).matrix()) /
      (dd * dd * dd - dd);
  return DensityMatrix(BipartiteOperator(rho, d, d));
}

DensityMatrix isotropic(int d, double alpha) {
  require_dimension(d, 2, "isotropic");
  const double dd = d;
  require_range(alpha, -1.0 / (dd * dd - 1.0), 1.0, "isotropic");
  const ComplexMatrix rho = ((1.0 - alpha) / (dd * dd)) * ComplexMatrix::Identity(d * d, d * d) +
                            alpha * projector(max_entangled(d, true));
  return DensityMatrix(BipartiteOperator(rho, d, d));
}

BipartiteOperator cariello_gamma_operator(const GammaParams& p) {
  if (p.n < 1) throw DomainError("cariello_gamma: n must be >= 1");
  if (2 * p.n > p.k) throw DomainError("cariello_gamma: requires 2n <= k");
  if (!(p.eps > 0.0)) throw DomainError("cariello_gamma: eps must be positive");

  std::vector<ComplexVector> a = p.a;
  std::vector<ComplexVector> b = p.b;
  if (a.empty() && b.empty()) {
    for (int i = 0; i < p.n; ++i) {
      a.push_back(basis(p.k, 2 * i));
      b.push_back(basis(p.k, 2 * i + 1));
    }
  }
  if (static_cast<int>(a.size()) != p.n || static_cast<int>(b.size()) != p.n) {
    throw DimensionError("cariello_gamma: expected n vectors a_i and n vectors b_i");
  }

  ComplexMatrix stacked(p.k, 2 * p.n);
  for (int i = 0; i < p.n; ++i) {
    if (a[i].size() != p.k || b[i].size() != p.k) throw DimensionError("cariello_gamma: vectors must lie in C^k");
    stacked.col(i) = a[i];
    stacked.col(p.n + i) = b[i];
  }
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(stacked);
  qr.setThreshold(1e-10);
  if (qr.rank() != 2 * p.n) throw DomainError("cariello_gamma: vectors a_i, b_i are linearly dependent");

  ComplexVector v = ComplexVector::Zero(p.k * p.k);
  for (int i = 0; i < p.n; ++i) v += tensor(a[i], b[i]);

  const ComplexMatrix gamma =
      ComplexMatrix::Identity(p.k * p.k, p.k * p.k) + swap_operator(p.k).matrix() + p.eps * projector(v);
  return {gamma, p.k, p.k};
}

DensityMatrix cariello_gamma(const GammaParams& p) {
  const BipartiteOperator raw = cariello_gamma_operator(p);
  return DensityMatrix::normalized(raw.matrix(), raw.dims());
}

DensityMatrix rho_ccnr_candidate(const CcnrAssignment& assignment) {
  const std::array<double, 4> weights{1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 0.5};
  const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
  const std::array<ComplexMatrix, 4> ancilla{
      projector(bell_vector(Bell::PsiPlus)),
      projector(bell_vector(Bell::PsiMinus)),
      projector(bell_vector(Bell::PhiPlus)),
      (id4 - projector(bell_vector(Bell::PhiMinus))) / 3.0,
  };
  // Qubit order A, B, A', B'.
  ComplexMatrix joint = ComplexMatrix::Zero(16, 16);
  for (std::size_t i = 0; i < 4; ++i) {
    joint += weights[i] * tensor(projector(bell_vector(assignment[i])), ancilla[i]);
  }
  const BipartiteOperator regrouped = permute_qubit_subsystems(joint, {0, 2, 1, 3});
  return DensityMatrix::normalized(regrouped.matrix(), regrouped.dims());
}

bool has_ccnr_spectrum(const DensityMatrix& rho, double tol) {
  if (rho.dims() != Dims{4, 4}) return false;
  const RealVector s = singular_values(realign(rho));
  if (std::abs(s(0) - 0.25) > tol) return false;
  for (int i = 1; i < s.size(); ++i) {
    if (std::abs(s(i) - 1.0 / 12.0) > tol) return false;
  }
  return true;
}

DensityMatrix rho_ccnr() {
  DensityMatrix rho = rho_ccnr_candidate(kCcnrAssignment);
  if (!has_ccnr_spectrum(rho)) {
    throw InvalidOperator("rho_ccnr: realigned spectrum does not match {1/12 x15, 1/4}");
  }
  return rho;
}

DensityMatrix appendix_3x3() {
  ComplexMatrix m(9, 9);
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) m(r, c) = kAppendixData[r][c];
  const ComplexMatrix sym = 0.5 * (m + m.transpose());
  return DensityMatrix(BipartiteOperator(sym / sym.trace().real(), 3, 3), kAppendixTolerance);
}

DensityMatrix filtered_werner_closed_form(int d, double v) {
  require_dimension(d, 3, "filtered_werner_closed_form");
  require_range(v, 0.0, 1.0, "filtered_werner_closed_form");
  const double dd = d;
  const double norm = (dd + 1.0) * (1.0 - v) + 3.0 * v * (dd - 1.0);
  if (!(norm > 0.0)) throw DomainError("filtered_werner_closed_form: vanishing normalization");

  const ComplexMatrix bell = projector(bell_vector(Bell::PhiPlus));
  const ComplexMatrix block =
      ((dd + 1.0) * (1.0 - v) * bell + v * (dd - 1.0) * (ComplexMatrix::Identity(4, 4) - bell)) / norm;

  // Embed the qubit block on span{|0>,|1>} ⊗ span{|0>,|1>}.
  const std::array<int, 4> index{0, 1, d, d + 1};
  ComplexMatrix rho = ComplexMatrix::Zero(d * d, d * d);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) rho(index[r], index[c]) = block(r, c);
  return DensityMatrix(BipartiteOperator(rho, d, d));
}

}  // namespace qprobe
