#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colligate/evaluate.hpp"
#include "colligate/numerics.hpp"
#include "colligate/realizations.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace colligate;

namespace {

Vector pt(Complex z, Complex w) {
  Vector v(2);
  v << z, w;
  return v;
}

}  // namespace

TEST_CASE("famous example blocks match the published realization") {
  const Colligation v = build_famous_example();
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(v.A == Complex(0.0));
  CHECK(std::abs(v.B(0, 0) - Complex(-s)) <= 1e-15);
  CHECK(std::abs(v.B(0, 1) - Complex(-s)) <= 1e-15);
  CHECK(std::abs(v.C(0, 0) - Complex(s)) <= 1e-15);
  CHECK(std::abs(v.D(0, 0) - Complex(0.5)) <= 1e-15);
  CHECK(std::abs(v.D(0, 1) - Complex(-0.5)) <= 1e-15);
  CHECK(validate(v).isometry_defect <= 1e-14);
  CHECK(std::abs(eval_point(v, pt(0.0, 0.0)).scalar()) == doctest::Approx(0.0));
}

TEST_CASE("f_alpha_beta(1/2,1/2) reproduces the closed-form matrix") {
  const Colligation v = build_f_alpha_beta(0.5, 0.5);
  const double s = 1.0 / std::sqrt(2.0);
  Matrix expected(3, 3);
  expected << Complex(0.0), s, s, -s, 0.5, -0.5, -s, -0.5, 0.5;
  CHECK((v.full_matrix() - expected).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("f_alpha_beta is unitary across admissible parameters") {
  const std::vector<std::pair<Complex, Complex>> params = {
      {0.5, 0.5},
      {0.3, 0.7},
      {Complex(0.0, 0.4), 0.6},
      {0.25 * std::exp(Complex(0.0, 2.1)), 0.75 * std::exp(Complex(0.0, -0.8))},
      {-0.35, 0.65},
  };
  for (const auto& [a, b] : params) {
    const ValidationReport rep = validate(build_f_alpha_beta(a, b));
    CHECK(rep.is_unitary);
    CHECK(rep.isometry_defect <= 1e-12);
  }
}

TEST_CASE("f_alpha_beta rejects parameters off the constraint") {
  CHECK_THROWS_AS(build_f_alpha_beta(0.3, 0.8), DomainError);
  CHECK_THROWS_AS(build_f_alpha_beta(0.0, 1.0), DomainError);
}

TEST_CASE("f_alpha_beta matches its rational formula on random points") {
  Rng rng(31);
  const std::vector<std::pair<Complex, Complex>> params = {
      {0.5, 0.5}, {0.3, 0.7}, {0.4 * std::exp(Complex(0.0, 1.3)), 0.6 * std::exp(Complex(0.0, -0.5))}};
  for (const auto& [a, b] : params) {
    const Colligation v = build_f_alpha_beta(a, b);
    for (int k = 0; k < 1000; ++k) {
      const Complex z = rng.unit_disk(0.98), w = rng.unit_disk(0.98);
      const Complex got = eval_point(v, pt(z, w)).scalar();
      CHECK(std::abs(got - oracles::f_alpha_beta(a, b, z, w)) <= 1e-10);
    }
  }
}

TEST_CASE("famous example matches its rational formula on random points") {
  Rng rng(32);
  const Colligation v = build_famous_example();
  for (int k = 0; k < 1000; ++k) {
    const Complex z = rng.unit_disk(0.98), w = rng.unit_disk(0.98);
    CHECK(std::abs(eval_point(v, pt(z, w)).scalar() - oracles::famous(z, w)) <= 1e-10);
  }
}

TEST_CASE("ball coordinate evaluates to the coordinate") {
  Rng rng(33);
  const Colligation v = build_ball_coordinate(1, 2);
  CHECK(validate(v).is_isometry);
  for (int k = 0; k < 100; ++k) {
    Vector z(2);
    z << rng.unit_disk(0.6), rng.unit_disk(0.6);
    if (z.norm() >= 1.0) continue;
    CHECK(std::abs(eval_point(v, z).scalar() - z(0)) <= 1e-13);
  }
  CHECK_THROWS_AS(build_ball_coordinate(3, 2), ShapeError);
}

TEST_CASE("build_random: partition structures give unitaries, deterministic per seed") {
  const Colligation v = build_random(PartitionStructure{{2, 3}}, 7);
  CHECK(validate(v).is_unitary);
  CHECK(validate(v).isometry_defect <= 1e-12);
  const Colligation w = build_random(PartitionStructure{{2, 3}}, 7);
  CHECK((v.full_matrix() - w.full_matrix()).norm() == 0.0);
}

TEST_CASE("build_random: tall row-pencil structures give isometries") {
  const Colligation v = build_random(MatrixBallStructure{QPencil::row(2), 2}, 1);
  const Matrix full = v.full_matrix();
  CHECK(full.rows() == 5);
  CHECK(full.cols() == 3);
  CHECK((full.adjoint() * full - Matrix::Identity(3, 3)).norm() <= 1e-12);
}

TEST_CASE("build_random rejects shapes admitting no isometry") {
  QPencil wide;  // s = 2, r = 1 makes the colligation wider than tall
  wide.s = 2;
  wide.r = 1;
  wide.coeffs = {Matrix::Constant(2, 1, Complex(1.0)),
                 (Matrix(2, 1) << Complex(0.0), Complex(1.0)).finished()};
  CHECK_THROWS_AS(build_random(MatrixBallStructure{wide, 1}, 5), ShapeError);
}

TEST_CASE("every bundled builder validates at its declared class") {
  CHECK(validate(build_famous_example()).is_unitary);
  CHECK(validate(build_f_alpha_beta(0.3, 0.7)).is_unitary);
  CHECK(validate(build_ball_coordinate(2, 3)).is_isometry);
  CHECK(validate(build_random(PartitionStructure{{1, 1, 1}}, 4)).is_unitary);
}
