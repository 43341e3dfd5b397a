#include "oracles.hpp"

#include "qprobe/diagnostics.hpp"
#include "qprobe/error.hpp"
#include "qprobe/random.hpp"
#include "qprobe/states.hpp"

#include <doctest.h>

using namespace qprobe;

TEST_CASE("ccnr value") {
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    const ComplexVector a = haar_pure_state(3, rng), b = haar_pure_state(2, rng);
    const DensityMatrix prod(BipartiteOperator(projector(tensor(a, b)), 3, 2));
    CHECK(std::abs(ccnr_value(prod) - 1.0) < 1e-10);
    CHECK_FALSE(ccnr_entangled(ccnr_value(prod)));
  }
  CHECK(ccnr_value(rho_ccnr()) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(ccnr_entangled(ccnr_value(rho_ccnr())));
  CHECK(std::abs(ccnr_value(appendix_3x3()) - 1.1891) < 5e-4);
  CHECK_FALSE(ccnr_entangled(1.0 + 5e-10));
  CHECK(ccnr_entangled(1.0 + 2e-9));
}

TEST_CASE("separable mixtures never violate CCNR") {
  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const int da = 2 + t % 3, db = 2 + (t / 3) % 3;
    const auto rho = random_separable_state({da, db}, 1 + t % 6, rng);
    CHECK(ccnr_value(rho) <= 1.0 + 1e-9);
    CHECK(is_ppt(rho).ppt);
  }
}

TEST_CASE("PPT check") {
  const auto p = is_ppt(bell_state(Bell::PhiPlus));
  CHECK_FALSE(p.ppt);
  CHECK(p.min_eig == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(is_ppt(rho_ccnr()).ppt);
  CHECK(is_ppt(maximally_mixed({3, 3})).ppt);
  CHECK_THROWS_AS(is_ppt(rho_ccnr(), -1.0), DomainError);
}

TEST_CASE("purity equals squared realigned spectrum") {
  CHECK(faithfulness(max_entangled_state(3)) == doctest::Approx(1.0));
  CHECK(faithfulness(werner_f(4, -1)) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(faithfulness(isotropic(4, 0.2)) == doctest::Approx(0.1).epsilon(1e-12));
  Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    const int d = 2 + t % 4;
    const auto rho = random_density({d, d}, rng);
    const double direct = (rho.matrix() * rho.matrix()).trace().real();
    CHECK(std::abs(singular_values(realign(rho)).squaredNorm() - direct) < 1e-10);
    CHECK(std::abs(faithfulness(rho) - direct) < 1e-10);
  }
}

TEST_CASE("faithfulness gate") {
  const auto f = is_faithful(rho_ccnr());
  CHECK(f.faithful);
  CHECK(f.sigma_min == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  CHECK(f.condition_number == doctest::Approx(3.0).epsilon(1e-10));
  CHECK_FALSE(is_faithful(filtered_werner_closed_form(4, 0.5)).faithful);

  const auto mm = maximally_mixed({3, 3});
  CHECK_FALSE(is_faithful(mm).faithful);
  CHECK(operator_schmidt_rank(mm) == 1);
  CHECK(std::isinf(is_faithful(mm).condition_number));

  CHECK_THROWS_AS(is_faithful(maximally_mixed({2, 3})), DimensionError);

  // faithful implies full operator Schmidt rank
  Rng rng(44);
  for (int t = 0; t < 20; ++t) {
    const auto rho = t % 2 ? random_density({3, 3}, rng) : random_separable_state({3, 3}, 1 + t % 4, rng);
    if (operator_schmidt_rank(rho) < 9) CHECK_FALSE(is_faithful(rho).faithful);
  }
}

TEST_CASE("analytic ccnr closed forms") {
  CHECK(analytic_ccnr(Family::Isotropic, 4, 1.0) == doctest::Approx(4.0));
  CHECK(analytic_ccnr(Family::Werner, 4, -1.0) == doctest::Approx(1.5));
  CHECK(analytic_ccnr(Family::Werner, 10, -1.0) == doctest::Approx(1.2));
  CHECK(std::abs(ccnr_value(werner_f(10, -1)) - 1.2) < 1e-9);
  for (int d = 2; d <= 6; ++d) {
    const double lo = -1.0 / (d * d - 1.0);
    for (int i = 0; i < 50; ++i) {
      const double alpha = lo + (1.0 - lo) * i / 49.0;
      const double f = -1.0 + 2.0 * i / 49.0;
      CHECK(std::abs(analytic_ccnr(Family::Isotropic, d, alpha) - ccnr_value(isotropic(d, alpha))) < 1e-9);
      CHECK(std::abs(analytic_ccnr(Family::Werner, d, f) - ccnr_value(werner_f(d, f))) < 1e-9);
    }
    CHECK(analytic_ccnr(Family::Isotropic, d, 1.0 / (d + 1)) == doctest::Approx(1.0));
    CHECK(analytic_ccnr(Family::Werner, d, -1.0) == doctest::Approx(1.0 + 2.0 / d));
  }
  // Printed negative branch (1 - alpha)/d disagrees with the realigned spectrum.
  for (int d = 2; d <= 6; ++d) {
    const double alpha = -1.0 / (d * d - 1.0);
    CHECK(std::abs((1.0 - alpha) / d - ccnr_value(isotropic(d, alpha))) > 1e-3);
    CHECK(analytic_ccnr(Family::Isotropic, d, alpha) == doctest::Approx(2.0 / d));
    CHECK(analytic_ccnr(Family::Isotropic, d, 0.5) == doctest::Approx(d * 0.5 + 0.5 / d));
  }
  CHECK_THROWS_AS(analytic_ccnr(Family::Werner, 3, 1.5), DomainError);
  CHECK_THROWS_AS(analytic_ccnr(Family::Isotropic, 3, -0.5), DomainError);
}

TEST_CASE("local operation properties") {
  const auto r1 = rudolph_checks(rho_ccnr(), 20, 1);
  CHECK(r1.all_passed());
  CHECK(r1.local_unitary.worst < 1e-9);
  CHECK(r1.local_unitary.trials == 20);

  const auto r2 = rudolph_checks(werner_f(3, -1), 20, 2);
  CHECK(r2.luders_measurement.passed);
  CHECK(r2.all_passed());

  Rng rng(3);
  const auto rho = random_density({3, 3}, rng);
  CHECK(rudolph_checks(rho, 20, 3).all_passed());

  ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  zero(0, 0) = 1;
  const auto with_ancilla = attach_ancilla(rho_ccnr(), zero, zero);
  CHECK(with_ancilla.dims() == Dims{8, 8});
  CHECK(std::abs(ccnr_value(with_ancilla) - 1.5) < 1e-9);

  // Lüders in the computational basis kills all coherences.
  const ComplexMatrix id3 = ComplexMatrix::Identity(3, 3);
  const auto measured = luders_measurement(rho, id3, id3);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      if (i == j) CHECK(std::abs(measured.matrix()(i, i) - rho.matrix()(i, i)) < 1e-14);
      else CHECK(std::abs(measured.matrix()(i, j)) < 1e-14);
    }

  const ComplexMatrix u = haar_unitary(3, rng), v = haar_unitary(3, rng);
  const auto rotated = local_unitary(rho, u, v);
  CHECK(oracle::max_abs(rotated.matrix() - oracle::kron(u, v) * rho.matrix() * oracle::kron(u, v).adjoint()) < 1e-13);

  // Same seed, same report.
  const auto again = rudolph_checks(rho_ccnr(), 20, 1);
  CHECK(again.product_ancilla.worst == r1.product_ancilla.worst);
  CHECK(again.luders_measurement.worst == r1.luders_measurement.worst);
  CHECK_THROWS_AS(rudolph_checks(rho, 0, 1), DomainError);
}

TEST_CASE("full report") {
  const auto a = full_report(rho_ccnr());
  CHECK(a.ccnr_value == doctest::Approx(1.5));
  CHECK(a.ppt);
  CHECK(a.faithful);
  CHECK(a.purity == doctest::Approx(1.0 / 6.0));
  CHECK(a.ccnr_entangled);
  CHECK(a.schmidt_rank == 16);

  const auto b = full_report(max_entangled_state(4));
  CHECK(b.ccnr_value == doctest::Approx(4.0));
  CHECK_FALSE(b.ppt);
  CHECK(b.faithful);
  CHECK(b.purity == doctest::Approx(1.0));

  const auto c = full_report(isotropic(4, 0.2));
  CHECK(c.ccnr_value == doctest::Approx(1.0));
  CHECK(c.ppt);
  CHECK(c.faithful);
  CHECK(c.purity == doctest::Approx(0.1));
  CHECK_FALSE(c.ccnr_entangled);
  CHECK(c.realigned_spectrum.squaredNorm() == doctest::Approx(c.purity));

  const auto rect = full_report(maximally_mixed({2, 3}));
  CHECK_FALSE(rect.faithful);
  CHECK(rect.dims == Dims{2, 3});
}
