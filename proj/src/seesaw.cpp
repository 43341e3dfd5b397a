#include "qprobe/seesaw.hpp"

#include "qprobe/error.hpp"
#include "qprobe/random.hpp"

#include <algorithm>
#include <cmath>

namespace qprobe {

namespace {

// Euclidean projection of a vector onto {x >= 0, Σx = 1}.
RealVector project_simplex(const RealVector& v) {
  std::vector<double> sorted(v.data(), v.data() + v.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).cwiseMax(0.0);
}

Eigen::SelfAdjointEigenSolver<ComplexMatrix> hermitian_eigensystem(const ComplexMatrix& x) {
  require_finite(x, "seesaw projection");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(x));
  if (es.info() != Eigen::Success) throw NumericFailure("seesaw projection: eigendecomposition failed");
  return es;
}

ComplexMatrix reassemble(const Eigen::SelfAdjointEigenSolver<ComplexMatrix>& es, const RealVector& values) {
  const ComplexMatrix& v = es.eigenvectors();
  return v * values.cast<Complex>().asDiagonal() * v.adjoint();
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& x, Dims dims) {
  return partial_transpose(BipartiteOperator(x, dims), Subsystem::B).matrix();
}

}  // namespace

void SeesawConfig::validate() const {
  if (d < 2) throw DomainError("seesaw: d must be >= 2");
  if (max_outer < 1 || projection_iters < 1 || restarts < 1) {
    throw DomainError("seesaw: iteration counts and restarts must be positive");
  }
  if (step < 0.0 || !std::isfinite(step)) throw DomainError("seesaw: step must be positive");
  if (!(projection_tol > 0.0) || !(objective_tol > 0.0)) throw DomainError("seesaw: tolerances must be positive");
}

ComplexMatrix project_psd_trace_one(const ComplexMatrix& x) {
  const auto es = hermitian_eigensystem(x);
  return hermitian_part(reassemble(es, project_simplex(es.eigenvalues())));
}

ComplexMatrix project_ppt(const ComplexMatrix& x, Dims dims) {
  const auto es = hermitian_eigensystem(partial_transpose_b(x, dims));
  const ComplexMatrix clipped = reassemble(es, es.eigenvalues().cwiseMax(0.0));
  return hermitian_part(partial_transpose_b(clipped, dims));
}

ProjectionOutcome project_ppt_states(const ComplexMatrix& x, Dims dims, int max_iters, double tol) {
  ComplexMatrix current = hermitian_part(x);
  ComplexMatrix p = ComplexMatrix::Zero(x.rows(), x.cols());
  ComplexMatrix q = ComplexMatrix::Zero(x.rows(), x.cols());
  ProjectionOutcome out;
  for (int it = 1; it <= max_iters; ++it) {
    ComplexMatrix y = project_psd_trace_one(current + p);
    p += current - y;
    ComplexMatrix next = project_ppt(y + q, dims);
    q += y - next;
    const double moved = (next - current).norm();
    const double gap = (y - next).norm();
    current = std::move(next);
    out.state = std::move(y);
    out.iterations = it;
    if (moved < tol && gap < tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

ComplexMatrix dual_y_step(const ComplexMatrix& rho, Dims dims) {
  const ComplexMatrix r = realign(BipartiteOperator(rho, dims));
  require_finite(r, "dual_y_step");
  Eigen::JacobiSVD<ComplexMatrix> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw NumericFailure("dual_y_step: SVD failed");
  return svd.matrixU() * svd.matrixV().adjoint();
}

ComplexMatrix dual_y_step(const DensityMatrix& rho) { return dual_y_step(rho.matrix(), rho.dims()); }

ProjectionOutcome primal_rho_step(const ComplexMatrix& rho, const ComplexMatrix& y, Dims dims,
                                  const SeesawConfig& cfg) {
  const ComplexMatrix gradient = hermitian_part(realign_inverse(y, dims.a, dims.b).matrix());
  return project_ppt_states(rho + cfg.effective_step() * gradient, dims, cfg.projection_iters, cfg.projection_tol);
}

DensityMatrix primal_rho_step(const DensityMatrix& rho, const ComplexMatrix& y, const SeesawConfig& cfg) {
  const ProjectionOutcome step = primal_rho_step(rho.matrix(), y, rho.dims(), cfg);
  return DensityMatrix::normalized(step.state, rho.dims(), {1e-12, cfg.projection_tol, 1e-12});
}

ComplexMatrix restore_feasibility(const ComplexMatrix& rho, Dims dims) {
  ComplexMatrix h = hermitian_part(rho);
  h /= h.trace().real();
  const double lowest = std::min(min_eigenvalue(h), min_eigenvalue(partial_transpose_b(h, dims)));
  if (lowest >= 0.0) return h;
  const double n = dims.total();
  // Overshoot by a few ulps so the mixed eigenvalues land on the >= 0 side.
  const double t = std::min(1.0, -lowest / (1.0 / n - lowest) * (1.0 + 1e-12));
  return (1.0 - t) * h + (t / n) * ComplexMatrix::Identity(h.rows(), h.cols());
}

SeesawResult optimize(const SeesawConfig& cfg) {
  cfg.validate();
  const Dims dims{cfg.d, cfg.d};
  const int n = cfg.d * cfg.d;

  SeesawResult result;
  result.d = cfg.d;
  result.best_value = -1.0;
  ComplexMatrix best;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
    const ComplexMatrix g = complex_gaussian(n, n, rng);
    ComplexMatrix wishart = g * g.adjoint();
    wishart /= wishart.trace().real();
    ComplexMatrix rho = project_ppt_states(wishart, dims, cfg.projection_iters, cfg.projection_tol).state;

    std::vector<double> history;
    RestartSummary summary;
    ComplexMatrix measured = rho;
    for (int outer = 0; outer < cfg.max_outer; ++outer) {
      const ComplexMatrix y = dual_y_step(rho, dims);
      const double value = (realign(BipartiteOperator(rho, dims)).adjoint() * y).trace().real();
      history.push_back(value);
      measured = rho;
      summary.outer_iterations = outer + 1;
      if (history.size() >= 2 && value - history[history.size() - 2] < cfg.objective_tol) {
        summary.converged = true;
        break;
      }
      rho = primal_rho_step(rho, y, dims, cfg).state;
    }
    summary.final_value = history.back();
    result.restarts.push_back(summary);

    if (summary.final_value > result.best_value) {
      result.best_value = summary.final_value;
      result.best_restart = restart;
      result.history = std::move(history);
      best = std::move(measured);
    }
  }

  result.best_state = restore_feasibility(best, dims);
  result.best_value = trace_norm(realign(BipartiteOperator(result.best_state, dims)));
  result.psd_residual = min_eigenvalue(result.best_state);
  result.ppt_residual = min_eigenvalue(partial_transpose_b(result.best_state, dims));
  return result;
}

}  // namespace qprobe
