#include "oracles.hpp"

#include "qprobe/bipartite.hpp"
#include "qprobe/error.hpp"
#include "qprobe/random.hpp"
#include "qprobe/states.hpp"

#include <doctest.h>

using namespace qprobe;

namespace {

ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

}  // namespace

TEST_CASE("tensor matches the index formula") {
  CHECK(tensor(identity(2), identity(2)).isApprox(identity(4)));

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1;
  CHECK(oracle::max_abs(tensor(p0, p1) - expected) == 0.0);

  Rng rng(11);
  ComplexMatrix a = complex_gaussian(3, 3, rng), b = complex_gaussian(3, 3, rng);
  CHECK(oracle::max_abs(tensor(a, b) - oracle::kron(a, b)) < 1e-15);

  ComplexMatrix r = complex_gaussian(2, 3, rng), s = complex_gaussian(4, 2, rng);
  CHECK(oracle::max_abs(tensor(r, s) - oracle::kron(r, s)) < 1e-15);
}

TEST_CASE("swap operator") {
  const auto f2 = swap_operator(2).matrix();
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = expected(1, 2) = expected(2, 1) = 1;
  CHECK(oracle::max_abs(f2 - expected) == 0.0);

  Rng rng(3);
  for (int k = 1; k <= 6; ++k) {
    const auto f = swap_operator(k).matrix();
    CHECK(std::abs(f.trace() - Complex(k, 0)) < 1e-14);
    CHECK(oracle::max_abs(f * f - identity(k * k)) < 1e-14);
    CHECK(oracle::max_abs(f - f.adjoint()) == 0.0);
    ComplexVector a = complex_gaussian(k, 1, rng), b = complex_gaussian(k, 1, rng);
    CHECK(oracle::max_abs(f * tensor(a, b) - tensor(b, a)) < 1e-14);
  }
}

TEST_CASE("maximally entangled vector") {
  ComplexVector u = max_entangled(2, false);
  CHECK(u.size() == 4);
  CHECK(u(0) == Complex(1, 0));
  CHECK(u(1) == Complex(0, 0));
  CHECK(u(2) == Complex(0, 0));
  CHECK(u(3) == Complex(1, 0));
  for (int k = 2; k <= 6; ++k) {
    CHECK(max_entangled(k, false).squaredNorm() == doctest::Approx(k).epsilon(1e-14));
    CHECK(max_entangled(k, true).squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("realignment identities and inverse") {
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    const ComplexVector u = max_entangled(k, false);
    const ComplexMatrix uu = u * u.adjoint();
    const ComplexMatrix f = swap_operator(k).matrix();
    CHECK(oracle::max_abs(realign({identity(k * k), k, k}) - uu) < 1e-12);
    CHECK(oracle::max_abs(realign({f, k, k}) - f) < 1e-12);
    CHECK(oracle::max_abs(realign({uu, k, k}) - identity(k * k)) < 1e-12);
    CHECK(oracle::max_abs(realign_inverse(uu, k, k).matrix() - identity(k * k)) < 1e-12);
    CHECK(oracle::max_abs(realign_inverse(f, k, k).matrix() - f) < 1e-12);
  }

  Rng rng(5);
  for (auto [da, db] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}, std::pair{2, 4}}) {
    const ComplexMatrix m = complex_gaussian(da * db, da * db, rng);
    const ComplexMatrix r = realign({m, da, db});
    CHECK(r.rows() == da * da);
    CHECK(r.cols() == db * db);
    CHECK(oracle::max_abs(r - oracle::realign(m, da, db)) == 0.0);
    CHECK(oracle::max_abs(realign_inverse(r, da, db).matrix() - m) == 0.0);
    CHECK(std::abs(r.norm() - m.norm()) < 1e-12);
  }
  CHECK_THROWS_AS(realign_inverse(ComplexMatrix::Zero(4, 5), 2, 2), DimensionError);
}

TEST_CASE("realignment of product operators is vec vec^T") {
  Rng rng(8);
  const ComplexMatrix a = complex_gaussian(2, 2, rng), b = complex_gaussian(3, 3, rng);
  const ComplexMatrix r = realign({tensor(a, b), 2, 3});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) CHECK(std::abs(r(i * 2 + j, k * 3 + l) - a(i, j) * b(k, l)) < 1e-14);
}

TEST_CASE("check_realign shares the realigned spectrum") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + t % 3;
    const auto rho = random_density({d, d}, rng);
    const RealVector s1 = singular_values(realign(rho));
    const RealVector s2 = singular_values(check_realign(rho));
    REQUIRE(s1.size() == s2.size());
    CHECK((s1 - s2).cwiseAbs().maxCoeff() < 1e-10);
  }
  for (int d = 2; d <= 4; ++d) {
    const RealVector s = singular_values(check_realign(max_entangled_state(d)));
    CHECK((s.array() - 1.0 / d).abs().maxCoeff() < 1e-12);
  }
  const auto prod = random_product_state({3, 3}, rng);
  const RealVector s = singular_values(check_realign(prod));
  CHECK(s(1) < 1e-12 * s(0));
  CHECK_THROWS_AS(check_realign(BipartiteOperator(identity(6), 2, 3)), DimensionError);
}

TEST_CASE("partial transpose") {
  Rng rng(2);
  RealVector diag = RealVector::Random(6);
  const ComplexMatrix dm = diag.cast<Complex>().asDiagonal();
  CHECK(oracle::max_abs(partial_transpose({dm, 2, 3}, Subsystem::B).matrix() - dm) == 0.0);
  CHECK(oracle::max_abs(partial_transpose({dm, 2, 3}, Subsystem::A).matrix() - dm) == 0.0);

  for (int d = 2; d <= 5; ++d) {
    const auto pt = partial_transpose(max_entangled_state(d), Subsystem::B);
    CHECK(oracle::max_abs(pt.matrix() - swap_operator(d).matrix() / d) < 1e-15);
  }

  const ComplexMatrix m = complex_gaussian(6, 6, rng);
  const BipartiteOperator op(m, 2, 3);
  for (auto which : {Subsystem::A, Subsystem::B}) {
    CHECK(oracle::max_abs(partial_transpose(partial_transpose(op, which), which).matrix() - m) == 0.0);
  }
  const auto tb = partial_transpose(op, Subsystem::B);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) CHECK(tb.element(i, j, k, l) == op.element(i, j, l, k));
  // Full transpose = T_A then T_B.
  const auto full = partial_transpose(tb, Subsystem::A);
  CHECK(oracle::max_abs(full.matrix() - m.transpose()) == 0.0);
}

TEST_CASE("partial trace") {
  Rng rng(4);
  const auto ra = random_density({3, 1}, rng).matrix();
  const auto rb = random_density({2, 1}, rng).matrix();
  const ComplexMatrix prod = tensor(ra, rb);
  CHECK(oracle::max_abs(partial_trace({prod, 3, 2}, Subsystem::B) - ra) < 1e-15);
  CHECK(oracle::max_abs(partial_trace({prod, 3, 2}, Subsystem::A) - rb) < 1e-15);

  for (int d = 2; d <= 4; ++d) {
    CHECK(oracle::max_abs(partial_trace(max_entangled_state(d), Subsystem::B) - identity(d) / d) < 1e-15);
  }

  const ComplexMatrix m = complex_gaussian(12, 12, rng);
  CHECK(oracle::max_abs(partial_trace({m, 3, 4}, Subsystem::B) - oracle::trace_b(m, 3, 4)) < 1e-13);
  CHECK(oracle::max_abs(partial_trace({m, 3, 4}, Subsystem::A) - oracle::trace_a(m, 3, 4)) < 1e-13);
  CHECK(std::abs(partial_trace({m, 3, 4}, Subsystem::A).trace() - m.trace()) < 1e-12);
}

TEST_CASE("singular values and trace norm") {
  CHECK((singular_values(identity(5)).array() - 1.0).abs().maxCoeff() < 1e-15);

  Rng rng(9);
  const ComplexMatrix m = complex_gaussian(5, 7, rng);
  const RealVector s = singular_values(m);
  CHECK(s.size() == 5);
  for (int i = 1; i < s.size(); ++i) CHECK(s(i - 1) >= s(i));
  double frob = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) frob += std::norm(m(i, j));
  CHECK(s.squaredNorm() == doctest::Approx(frob).epsilon(1e-12));

  // Tr sqrt(m m†) through a Hermitian eigendecomposition.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m * m.adjoint());
  const double via_eig = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  CHECK(std::abs(trace_norm(m) - via_eig) < 1e-10);

  for (int d = 2; d <= 5; ++d) CHECK(trace_norm(realign(max_entangled_state(d))) == doctest::Approx(d));
  // R(ρA⊗ρB) = vec(ρA)vec(ρB)^T has one singular value ‖ρA‖_F‖ρB‖_F; pure factors give 1.
  for (int t = 0; t < 5; ++t) {
    const auto ra = random_density({3, 1}, rng).matrix();
    const auto rb = random_density({4, 1}, rng).matrix();
    CHECK(std::abs(trace_norm(realign({tensor(ra, rb), 3, 4})) - ra.norm() * rb.norm()) < 1e-12);
    const ComplexVector a = haar_pure_state(3, rng), b = haar_pure_state(4, rng);
    CHECK(std::abs(trace_norm(realign({tensor(projector(a), projector(b)), 3, 4})) - 1.0) < 1e-12);
  }
}

TEST_CASE("operator Schmidt rank") {
  Rng rng(6);
  CHECK(operator_schmidt_rank(random_product_state({3, 3}, rng)) == 1);
  for (int d = 2; d <= 4; ++d) CHECK(operator_schmidt_rank(max_entangled_state(d)) == d * d);
  CHECK(operator_schmidt_rank(filtered_werner_closed_form(4, 0.5)) <= 16);
  CHECK(operator_schmidt_rank({ComplexMatrix::Zero(4, 4), 2, 2}) == 0);
  CHECK_THROWS_AS(operator_schmidt_rank(max_entangled_state(2), 0.0), DomainError);
  CHECK_THROWS_AS(operator_schmidt_rank(max_entangled_state(2), 1.0), DomainError);
}

TEST_CASE("qubit permutations") {
  Rng rng(10);
  const ComplexMatrix m = random_density({4, 4}, rng).matrix();
  CHECK(oracle::max_abs(permute_qubit_subsystems(m, {0, 1, 2, 3}).matrix() - m) == 0.0);
  const auto once = permute_qubit_subsystems(m, {1, 0, 2, 3});
  CHECK(oracle::max_abs(permute_qubit_subsystems(once.matrix(), {1, 0, 2, 3}).matrix() - m) == 0.0);

  const RealVector ev = hermitian_eigenvalues(m);
  for (std::array<int, 4> p : {std::array{0, 2, 1, 3}, std::array{3, 2, 1, 0}, std::array{1, 3, 0, 2}}) {
    const RealVector ep = hermitian_eigenvalues(permute_qubit_subsystems(m, p).matrix());
    CHECK((ev - ep).cwiseAbs().maxCoeff() < 1e-12);
  }

  // Qubits ordered (q0 q1 q2 q3): a product of single-qubit projectors moves
  // with the permutation.
  std::array<ComplexMatrix, 4> q;
  for (auto& x : q) x = random_density({2, 1}, rng).matrix();
  const ComplexMatrix in = oracle::kron(oracle::kron(q[0], q[1]), oracle::kron(q[2], q[3]));
  const ComplexMatrix out = oracle::kron(oracle::kron(q[0], q[2]), oracle::kron(q[1], q[3]));
  CHECK(oracle::max_abs(permute_qubit_subsystems(in, {0, 2, 1, 3}).matrix() - out) < 1e-15);

  CHECK_THROWS_AS(permute_qubit_subsystems(identity(8), {0, 1, 2, 3}), DimensionError);
  CHECK_THROWS(permute_qubit_subsystems(m, {0, 0, 1, 2}));
}

TEST_CASE("operator validation") {
  CHECK_THROWS_AS(BipartiteOperator(identity(5), 2, 2), DimensionError);
  CHECK_THROWS_AS(BipartiteOperator(ComplexMatrix::Zero(4, 3), 2, 2), DimensionError);
  ComplexMatrix bad = identity(4);
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(singular_values(bad), NumericFailure);
  CHECK_THROWS(DensityMatrix(BipartiteOperator(bad, 2, 2)));
}
