#include <doctest.h>

#include <cmath>

#include "eccwheel/closedform.hpp"
#include "eccwheel/errors.hpp"
#include "eccwheel/oracle.hpp"
#include "support/test_support.hpp"

using namespace eccwheel;
using namespace eccwheel::oracle;
using testsupport::cofactor_det;

TEST_CASE("fraction-free determinant") {
  CHECK(bareiss_det(identity(5)) == Rational(1));
  CHECK(bareiss_det(closedform::ecc_matrix_wheel(6)) == Rational(-80));
  CHECK(bareiss_det(closedform::bordered_B(4)) == Rational(4));
  CHECK(bareiss_det(MatrixQ::from_rows({{0, 1}, {1, 0}})) == Rational(-1));
  CHECK(bareiss_det(MatrixQ::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}})) ==
        Rational(1, 60));
  CHECK(bareiss_det(MatrixQ::from_rows({{1, 2}, {2, 4}})).is_zero());
  CHECK_THROWS_AS(bareiss_det(MatrixQ::zeros(2, 3)), DimensionError);
  for (int i = 0; i < 150; ++i) {
    const auto n = static_cast<std::size_t>(testsupport::random_int(1, 5));
    const MatrixQ m = i % 2 ? testsupport::random_int_matrix(n, n, -3, 3) : testsupport::random_matrix(n, n);
    CHECK(bareiss_det(m) == cofactor_det(m));
  }
}

TEST_CASE("exact rank") {
  CHECK(rank_exact(MatrixQ::zeros(4, 4)) == 0);
  CHECK(rank_exact(closedform::ecc_matrix_wheel(7)) == 5);
  CHECK(rank_exact(closedform::laplacian_hat(7)) == 4);
  CHECK(rank_exact(MatrixQ::from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(rank_exact(MatrixQ::from_rows({{0, 1}, {0, 0}, {0, 2}})) == 1);
  for (int i = 0; i < 40; ++i) {
    const auto n = static_cast<std::size_t>(testsupport::random_int(1, 5));
    const MatrixQ m = testsupport::random_int_matrix(n, n, -2, 2);
    CHECK((rank_exact(m) == n) == !cofactor_det(m).is_zero());
  }
}

TEST_CASE("exact inverse") {
  CHECK(inverse_exact(identity(4)) == identity(4));
  CHECK_THROWS_AS(inverse_exact(closedform::ecc_matrix_wheel(7)), SingularMatrixError);
  CHECK_THROWS_AS(inverse_exact(MatrixQ::zeros(2, 3)), DimensionError);
  const MatrixQ printed = Rational(1, 5) * MatrixQ::from_rows({{-4, 1, 1, 1, 1, 1},
                                                               {1, 1, Rational(-3, 2), 1, 1, Rational(-3, 2)},
                                                               {1, Rational(-3, 2), 1, Rational(-3, 2), 1, 1},
                                                               {1, 1, Rational(-3, 2), 1, Rational(-3, 2), 1},
                                                               {1, 1, 1, Rational(-3, 2), 1, Rational(-3, 2)},
                                                               {1, Rational(-3, 2), 1, 1, Rational(-3, 2), 1}});
  CHECK(inverse_exact(closedform::ecc_matrix_wheel(6)) == printed);
  int inverted = 0;
  for (int i = 0; i < 60; ++i) {
    const auto n = static_cast<std::size_t>(testsupport::random_int(1, 6));
    const MatrixQ m = testsupport::random_matrix(n, n);
    try {
      const MatrixQ inv = inverse_exact(m);
      CHECK(mat_mul(inv, m) == identity(n));
      CHECK(mat_mul(m, inv) == identity(n));
      ++inverted;
    } catch (const SingularMatrixError&) {
      CHECK(bareiss_det(m).is_zero());
    }
  }
  CHECK(inverted > 0);
}

TEST_CASE("congruence inertia") {
  CHECK(inertia_exact(MatrixQ::diagonal(VectorQ{3, -2, 0})).inertia == InertiaTriple{1, 1, 1});
  const auto hyper = inertia_exact(MatrixQ::from_rows({{0, 1}, {1, 0}}));
  CHECK(hyper.inertia == InertiaTriple{1, 1, 0});
  CHECK(hyper.pivot_log == std::vector<PivotKind>{PivotKind::hyperbolic});
  CHECK(inertia_exact(closedform::ecc_matrix_wheel(7)).inertia == InertiaTriple{2, 3, 2});
  CHECK(inertia_exact(MatrixQ::zeros(3, 3)).inertia == InertiaTriple{0, 0, 3});
  CHECK_THROWS_AS(inertia_exact(MatrixQ::from_rows({{1, 2}, {3, 4}})), NotSymmetricError);

  for (int n = 5; n <= 16; ++n) {
    const auto report = inertia_exact(closedform::ecc_matrix_wheel(n));
    long plus = 0;
    long minus = 0;
    long zero = 0;
    for (auto k : report.pivot_log) {
      if (k == PivotKind::positive) ++plus;
      if (k == PivotKind::negative) ++minus;
      if (k == PivotKind::hyperbolic) ++plus, ++minus;
      if (k == PivotKind::zero) ++zero;
    }
    CHECK(report.inertia == InertiaTriple{plus, minus, zero});
    CHECK(report.inertia == closedform::inertia_E_closed(n));
  }
}

TEST_CASE("congruence inertia is invariant under congruence") {
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(testsupport::random_int(1, 6));
    const MatrixQ a = testsupport::random_symmetric(n, -3, 3);
    MatrixQ g = testsupport::random_matrix(n, n);
    while (bareiss_det(g).is_zero()) g = testsupport::random_matrix(n, n);
    CHECK(inertia_exact(mat_mul(mat_mul(g.transpose(), a), g)).inertia == inertia_exact(a).inertia);
  }
}

TEST_CASE("Penrose conditions") {
  const auto r = penrose_check(identity(3), identity(3));
  CHECK(r.all());
  const MatrixQ e7 = closedform::ecc_matrix_wheel(7);
  CHECK(penrose_check(e7, closedform::pinv_E_closed(7)).all());
  const auto bad = penrose_check(e7, closedform::laplacian_hat(7));
  CHECK_FALSE(bad.axa);
  CHECK_FALSE(bad.all());
  CHECK_THROWS_AS(penrose_check(MatrixQ::zeros(2, 3), MatrixQ::zeros(2, 3)), DimensionError);
  // A rank-one example worked by hand: pinv of [[1,1],[1,1]] is J/4.
  CHECK(penrose_check(MatrixQ::ones(2, 2), Rational(1, 4) * MatrixQ::ones(2, 2)).all());
}

TEST_CASE("irreducibility") {
  for (int n = 5; n <= 20; ++n) CHECK(is_irreducible(closedform::ecc_matrix_wheel(n)));
  CHECK_FALSE(is_irreducible(identity(3)));
  const MatrixQ pair = MatrixQ::ones(2, 2) - identity(2);
  CHECK_FALSE(is_irreducible(block_diag(pair, pair)));
  CHECK(is_irreducible(MatrixQ::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})));
  CHECK_FALSE(is_irreducible(MatrixQ::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})));
  CHECK_THROWS_AS(is_irreducible(MatrixQ::from_rows({{0, -1}, {1, 0}})), DomainError);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(testsupport::random_int(1, 7));
    const MatrixQ m = MatrixQ::generate(n, n, [](std::size_t, std::size_t) {
      return Rational(testsupport::random_int(0, 3) == 0 ? 1 : 0);
    });
    CHECK(is_irreducible(m) == is_irreducible_literal(m));
  }
}

TEST_CASE("power iteration") {
  CHECK(power_iteration_rho(closedform::ecc_matrix_wheel(5)) == doctest::Approx(1 + std::sqrt(5.0)).epsilon(1e-10));
  CHECK(power_iteration_rho(MatrixQ::ones(3, 3)) == doctest::Approx(3.0));
  CHECK(std::abs(power_iteration_rho(closedform::ecc_matrix_wheel(20)) - (16 + std::sqrt(275.0))) < 1e-8);
  CHECK(power_iteration_rho(MatrixQ::from_rows({{0, 1}, {1, 0}})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(power_iteration_rho(closedform::ecc_matrix_wheel(30), 1e-300, 2), NonConvergenceError);
  try {
    power_iteration_rho(closedform::ecc_matrix_wheel(9), 0.0, 3);
  } catch (const NonConvergenceError& e) {
    CHECK(e.last_iterate().size() == 9);
  }
}

TEST_CASE("rank certificate") {
  for (int n : {10, 13}) {
    const auto cert = rank_certificate_check(n);
    CHECK(cert.product_matches);
    CHECK(cert.rank_c == static_cast<std::size_t>(n - 3));
    CHECK(cert.holds(static_cast<std::size_t>(n)));
  }
  const auto cert = rank_certificate_check(13);
  const auto cols = cert.c.cols();
  const VectorQ p = cert.c.row_vector(10);
  CHECK(p == VectorQ::generate(cols, [](std::size_t j) {
          if (j == 0) return Rational(-1);
          return (j - 1) % 3 == 0 ? Rational(-3) : Rational(0);
        }));
  CHECK_THROWS_AS(rank_certificate_check(7), DomainError);
  CHECK_THROWS_AS(rank_certificate_check(11), DomainError);
}
