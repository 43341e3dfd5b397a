#include "oracles.hpp"

#include "qprobe/diagnostics.hpp"
#include "qprobe/error.hpp"
#include "qprobe/random.hpp"
#include "qprobe/states.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qprobe;

namespace {

ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix flip(int d) {
  ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1;
  return f;
}

double purity(const ComplexMatrix& m) { return (m * m).trace().real(); }

}  // namespace

TEST_CASE("Bell states") {
  const auto phi = bell_state(Bell::PhiPlus).matrix();
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
  CHECK(oracle::max_abs(phi - expected) < 1e-15);

  const std::array all{Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus};
  for (auto x : all) {
    const auto m = bell_state(x).matrix();
    CHECK(std::abs(m.trace().real() - 1.0) < 1e-15);
    CHECK(purity(m) == doctest::Approx(1.0));
    for (auto y : all) {
      if (x == y) continue;
      CHECK(std::abs(bell_vector(x).dot(bell_vector(y))) < 1e-15);
    }
  }
}

TEST_CASE("Werner family") {
  for (int d = 2; d <= 5; ++d) {
    for (double v = 0.0; v <= 1.0 + 1e-12; v += 0.125) {
      CAPTURE(d);
      CAPTURE(v);
      const auto w = werner_v(d, v).matrix();
      CHECK(std::abs(w.trace().real() - 1.0) < 1e-12);
      const double f = (flip(d) * w).trace().real();
      CHECK(std::abs(f - (2 * v - 1)) < 1e-12);
      CHECK(oracle::max_abs(werner_f(d, 2 * v - 1).matrix() - w) < 1e-12);
    }
    for (int t = 0; t <= 20; ++t) {
      const double f = -1.0 + 0.1 * t;
      const ComplexMatrix oracle_w = ((d - f) * identity(d * d) + (d * f - 1) * flip(d)) / double(d * d * d - d);
      const auto w = werner_f(d, f).matrix();
      CHECK(oracle::max_abs(w - oracle_w) < 1e-14);
      CHECK(std::abs((flip(d) * w).trace().real() - f) < 1e-12);
    }
  }
  CHECK(ccnr_value(werner_v(4, 0.0)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(purity(werner_f(4, -1).matrix()) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  // Both branches of the closed form meet at f = 1/d.
  for (int d = 2; d <= 6; ++d) {
    const double f = 1.0 / d;
    CHECK(2.0 / d - f == doctest::Approx(f));
    CHECK(ccnr_value(werner_f(d, f)) == doctest::Approx(1.0 / d).epsilon(1e-10));
  }

  CHECK_THROWS_AS(werner_v(3, 1.5), DomainError);
  CHECK_THROWS_AS(werner_v(3, -0.1), DomainError);
  CHECK_THROWS_AS(werner_f(3, -1.1), DomainError);
  CHECK_THROWS_AS(werner_f(1, 0.0), DomainError);
}

TEST_CASE("Werner formula with the printed projector labels is not a state") {
  // P+ = (I - F)/2, P- = (I + F)/2 as printed; the trace is off for generic v.
  for (int d = 3; d <= 5; ++d) {
    for (double v : {0.0, 0.25, 0.5, 1.0}) {
      const ComplexMatrix pp = (identity(d * d) - flip(d)) / 2.0;
      const ComplexMatrix pm = (identity(d * d) + flip(d)) / 2.0;
      const ComplexMatrix m = 2 * v / (d * (d + 1.0)) * pp + 2 * (1 - v) / (d * (d - 1.0)) * pm;
      CHECK(!density_violation({m, d, d}).empty());
      CHECK(oracle::max_abs(m - werner_v(d, v).matrix()) > 1e-3);
    }
  }
}

TEST_CASE("isotropic family") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(oracle::max_abs(isotropic(d, 1.0).matrix() - max_entangled_state(d).matrix()) < 1e-15);
    const auto b = isotropic(d, 1.0 / (d + 1));
    CHECK(ccnr_value(b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(purity(b.matrix()) == doctest::Approx(2.0 / (d * (d + 1.0))).epsilon(1e-12));
  }
  CHECK(purity(isotropic(4, 0.2).matrix()) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(purity(isotropic(3, 1.0).matrix()) == doctest::Approx(1.0));
  CHECK_NOTHROW(isotropic(3, -1.0 / 8.0));
  CHECK_THROWS_AS(isotropic(3, -0.2), DomainError);
  CHECK_THROWS_AS(isotropic(3, 1.01), DomainError);
}

TEST_CASE("twirl symmetries") {
  Rng rng(17);
  for (int t = 0; t < 5; ++t) {
    const int d = 2 + t % 3;
    const ComplexMatrix u = haar_unitary(d, rng);
    const ComplexMatrix uu = oracle::kron(u, u);
    const ComplexMatrix uuc = oracle::kron(u, u.conjugate());
    const auto w = werner_f(d, -0.3).matrix();
    const auto iso = isotropic(d, 0.4).matrix();
    CHECK(oracle::max_abs(uu * w * uu.adjoint() - w) < 1e-10);
    CHECK(oracle::max_abs(uuc * iso * uuc.adjoint() - iso) < 1e-10);
  }
}

TEST_CASE("gamma construction") {
  for (int k : {4, 5, 6}) {
    for (double eps : {0.01, 0.1, 1.0}) {
      const auto g = cariello_gamma({k, 2, eps, {}, {}});
      CHECK(is_ppt(g).ppt);
      CHECK(is_ppt(g).min_eig >= -1e-10);
      CHECK(is_faithful(g).faithful);
      CHECK(is_faithful(g).sigma_min > 1e-8 * is_faithful(g).sigma_max);
    }
  }

  const GammaParams p{4, 2, 0.1, {}, {}};
  const auto raw = cariello_gamma_operator(p).matrix();
  ComplexVector v = ComplexVector::Zero(16);
  v(0 * 4 + 1) = 1;  // |0>|1>
  v(2 * 4 + 3) = 1;  // |2>|3>
  const ComplexMatrix expected = identity(16) + flip(4) + 0.1 * v * v.adjoint();
  CHECK(oracle::max_abs(raw - expected) < 1e-15);
  CHECK(std::abs(cariello_gamma(p).matrix().trace().real() - 1.0) < 1e-14);
  CHECK(oracle::max_abs(cariello_gamma(p).matrix() - expected / (16.0 + 4.0 + 0.2)) < 1e-15);
}

TEST_CASE("gamma small-eps limit") {
  // eps -> 0 leaves (I + F)/(k^2 + k); its realignment |u><u| + F acts as k+1
  // on u, +1 on the rest of the symmetric subspace and -1 on the antisymmetric one.
  for (int k : {4, 5, 6}) {
    const double sym = k * (k + 1) / 2.0, anti = k * (k - 1) / 2.0;
    const double limit = ((k + 1) + (sym - 1) + anti) / (k * k + k);
    CHECK(limit == doctest::Approx(1.0));
    const auto g = cariello_gamma({k, 2, 1e-8, {}, {}});
    CHECK(std::abs(ccnr_value(g) - limit) < 1e-6);
  }
}

TEST_CASE("gamma input validation") {
  CHECK_THROWS_AS(cariello_gamma({3, 2, 0.1, {}, {}}), DomainError);
  CHECK_THROWS_AS(cariello_gamma({4, 2, 0.0, {}, {}}), DomainError);
  ComplexVector e0 = ComplexVector::Zero(4), e1 = ComplexVector::Zero(4);
  e0(0) = 1;
  e1(1) = 1;
  CHECK_THROWS_AS(cariello_gamma({4, 2, 0.1, {e0, e1}, {e0, e1}}), DomainError);
  CHECK_THROWS_AS(cariello_gamma({4, 2, 0.1, {e0}, {e1}}), DimensionError);
}

TEST_CASE("rho_ccnr") {
  const auto rho = rho_ccnr();
  CHECK(rho.dims() == Dims{4, 4});
  const RealVector s = singular_values(realign(rho));
  CHECK(std::abs(s(0) - 0.25) < 1e-10);
  for (int i = 1; i < 16; ++i) CHECK(std::abs(s(i) - 1.0 / 12.0) < 1e-10);
  CHECK(std::abs(ccnr_value(rho) - 1.5) < 1e-10);
  CHECK(std::abs(purity(rho.matrix()) - 1.0 / 6.0) < 1e-10);
  CHECK(is_ppt(rho).min_eig >= -1e-10);
}

TEST_CASE("rho_ccnr assignment regression") {
  std::array<Bell, 4> perm{Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus};
  CHECK(perm == kCcnrAssignment);
  int matches = 0;
  bool first = true;
  do {
    const auto candidate = rho_ccnr_candidate(perm);
    if (has_ccnr_spectrum(candidate)) {
      ++matches;
      if (first) CHECK(perm == kCcnrAssignment);
      first = false;
      CHECK(is_ppt(candidate).ppt);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(matches == 24);
  CHECK(oracle::max_abs(rho_ccnr().matrix() - rho_ccnr_candidate(kCcnrAssignment).matrix()) == 0.0);
}

TEST_CASE("appendix 3x3 state") {
  const auto rho = appendix_3x3();
  CHECK(rho.dims() == Dims{3, 3});
  CHECK(oracle::max_abs(rho.matrix() - rho.matrix().adjoint()) == 0.0);
  CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
  CHECK(std::abs(ccnr_value(rho) - kAppendixTraceNorm) < 5e-4);
  const RealVector s = singular_values(realign(rho));
  for (int i = 0; i < 9; ++i) CHECK(std::abs(s(i) - kAppendixSingularValues[i]) < 5e-4);
  CHECK(is_ppt(rho).min_eig >= -1e-4);
  CHECK(is_faithful(rho).faithful);
}

TEST_CASE("filtered Werner closed form") {
  for (int d = 3; d <= 5; ++d) {
    const auto r0 = filtered_werner_closed_form(d, 0.0).matrix();
    ComplexMatrix bell = ComplexMatrix::Zero(d * d, d * d);
    for (int a : {0, d + 1})
      for (int b : {0, d + 1}) bell(a, b) = 0.5;
    CHECK(oracle::max_abs(r0 - bell) < 1e-15);
    CHECK(ccnr_value(filtered_werner_closed_form(d, 0.0)) == doctest::Approx(2.0).epsilon(1e-12));
    for (double v : {0.25, 0.5, 1.0}) {
      const auto r = filtered_werner_closed_form(d, v);
      CHECK(operator_schmidt_rank(r) <= 4);
      CHECK_FALSE(is_faithful(r).faithful);
    }
  }
  CHECK_THROWS_AS(filtered_werner_closed_form(2, 0.5), DomainError);
  CHECK_THROWS_AS(filtered_werner_closed_form(4, 1.5), DomainError);
}

TEST_CASE("every constructor yields a valid state") {
  std::vector<DensityMatrix> zoo{rho_ccnr(),          bell_state(Bell::PsiMinus), max_entangled_state(3),
                                 maximally_mixed({2, 3}), werner_v(3, 0.3),        werner_f(5, 0.7),
                                 isotropic(4, 0.5),   cariello_gamma({5, 2, 0.3, {}, {}}),
                                 filtered_werner_closed_form(4, 0.3)};
  for (const auto& rho : zoo) CHECK(density_violation(rho.op()).empty());
  CHECK(density_violation(appendix_3x3().op(), kAppendixTolerance).empty());
}
