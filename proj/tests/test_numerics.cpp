#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colligate/numerics.hpp"

#include <cmath>

using namespace colligate;

namespace {

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("kron with identity factor gives a block diagonal") {
  Rng rng(7);
  const Matrix m = rng.complex_gaussian_matrix(2, 3);
  const Matrix k = kron(Matrix::Identity(2, 2), m);
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 6);
  CHECK((k.block(0, 0, 2, 3) - m).norm() == doctest::Approx(0.0));
  CHECK((k.block(2, 3, 2, 3) - m).norm() == doctest::Approx(0.0));
  CHECK(k.block(0, 3, 2, 3).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron with a scalar factor rescales") {
  Rng rng(8);
  const Matrix m = rng.complex_gaussian_matrix(3, 2);
  const Matrix two = Matrix::Constant(1, 1, Complex(2.0));
  CHECK((kron(two, m) - 2.0 * m).norm() <= 1e-15);
}

TEST_CASE("kron satisfies the mixed-product property") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = rng.complex_gaussian_matrix(2, 2);
    const Matrix b = rng.complex_gaussian_matrix(2, 2);
    const Matrix c = rng.complex_gaussian_matrix(2, 2);
    const Matrix d = rng.complex_gaussian_matrix(2, 2);
    CHECK((kron(a, b) * kron(c, d) - kron(a * c, b * d)).norm() <= 1e-12);
  }
}

TEST_CASE("lift is multiplicative and commutes with the adjoint") {
  Rng rng(10);
  const Matrix a = rng.complex_gaussian_matrix(3, 2);
  const Matrix b = rng.complex_gaussian_matrix(2, 4);
  CHECK((lift(a * b, 3) - lift(a, 3) * lift(b, 3)).norm() <= 1e-12);
  CHECK((lift(a, 3).adjoint() - lift(a.adjoint(), 3)).norm() == doctest::Approx(0.0));
}

TEST_CASE("nullspace of the zero matrix is everything") {
  const NullspaceResult r = nullspace(Matrix::Zero(2, 2), {});
  CHECK(r.sigma_min == doctest::Approx(0.0));
  CHECK(r.dim() == 2);
}

TEST_CASE("nullspace of the identity is trivial") {
  const NullspaceResult r = nullspace(Matrix::Identity(3, 3), {});
  CHECK(r.sigma_min == doctest::Approx(1.0));
  CHECK(r.dim() == 0);
}

TEST_CASE("nullspace of the rank-one projector complement") {
  // Hand eigendecomposition: [[1/2,-1/2],[-1/2,1/2]] annihilates (1,1)/sqrt(2).
  const Matrix a = mat2(0.5, -0.5, -0.5, 0.5);
  const NullspaceResult r = nullspace(a, {});
  REQUIRE(r.dim() == 1);
  CHECK(r.sigma_min <= 1e-15);
  Vector expected(2);
  expected << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Complex overlap = (expected.adjoint() * r.basis.col(0))(0);
  CHECK(std::abs(std::abs(overlap) - 1.0) <= 1e-12);
}

TEST_CASE("tolerance configuration enforces its ordering invariant") {
  CHECK_NOTHROW(ToleranceConfig{}.validate());
  ToleranceConfig bad;
  bad.rank_tol = 1e-6;
  bad.residual_tol = 1e-8;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  ToleranceConfig margin;
  margin.domain_margin = 1.5;
  CHECK_THROWS_AS(margin.validate(), DomainError);
}

TEST_CASE("sigma_min matches a brute-force search over unit vectors") {
  Rng rng(11);
  for (Index n : {2, 3}) {
    Matrix a = rng.complex_gaussian_matrix(n, n);
    a += 2.0 * Matrix::Identity(n, n);  // keep it well conditioned
    const double smin = sigma_min(a);
    CHECK(nullspace(a, {}).sigma_min == doctest::Approx(smin));

    double best = std::numeric_limits<double>::infinity();
    Vector best_v;
    for (int k = 0; k < 20000; ++k) {
      Vector v = rng.complex_gaussian_matrix(n, 1);
      v.normalize();
      const double r = (a * v).norm();
      if (r < best) {
        best = r;
        best_v = v;
      }
    }
    // Local refinement around the best sample.
    double step = 0.3;
    for (int round = 0; round < 60; ++round) {
      bool improved = false;
      for (int k = 0; k < 40; ++k) {
        Vector v = best_v + step * rng.complex_gaussian_matrix(n, 1);
        v.normalize();
        const double r = (a * v).norm();
        if (r < best) {
          best = r;
          best_v = v;
          improved = true;
        }
      }
      if (!improved) step *= 0.5;
    }
    CHECK(best >= smin - 1e-12);
    CHECK(best <= smin * 1.05);
  }
}

TEST_CASE("random_unitary is unitary and deterministic per seed") {
  const Matrix u = random_unitary(4, 42);
  CHECK((u.adjoint() * u - Matrix::Identity(4, 4)).norm() <= 1e-13);
  const Matrix v = random_unitary(4, 42);
  CHECK((u - v).norm() == doctest::Approx(0.0));
  const Matrix w = random_unitary(4, 43);
  CHECK((u - w).norm() > 1e-3);
}

TEST_CASE("random_unitary at n = 1 is a unimodular scalar") {
  const Matrix u = random_unitary(1, 5);
  CHECK(std::abs(std::abs(u(0, 0)) - 1.0) <= 1e-14);
}

TEST_CASE("adjoint is an involution and reverses products") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = rng.complex_gaussian_matrix(3, 2);
    const Matrix b = rng.complex_gaussian_matrix(2, 3);
    CHECK((Matrix(a.adjoint().adjoint()) - a).norm() == doctest::Approx(0.0));
    CHECK((Matrix((a * b).adjoint()) - Matrix(b.adjoint() * a.adjoint())).norm() <= 1e-13);
  }
}

TEST_CASE("polynomial roots via the companion matrix") {
  // (t - 2)(t + 1) = t^2 - t - 2
  const std::vector<Complex> coeffs = {Complex(-2.0), Complex(-1.0), Complex(1.0)};
  const auto roots = polynomial_roots(coeffs);
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - Complex(-1.0)) <= 1e-12);
  CHECK(std::abs(roots[1] - Complex(2.0)) <= 1e-12);
}

TEST_CASE("unit-circle interpolation recovers polynomial coefficients") {
  const std::vector<Complex> coeffs = {Complex(1.0, -0.5), Complex(0.0), Complex(2.0, 1.0)};
  std::vector<Complex> values(3);
  for (int k = 0; k < 3; ++k) {
    const double ang = 2.0 * M_PI * k / 3.0;
    const Complex t(std::cos(ang), std::sin(ang));
    values[static_cast<std::size_t>(k)] = coeffs[0] + coeffs[1] * t + coeffs[2] * t * t;
  }
  const auto rec = interpolate_on_unit_circle(values);
  REQUIRE(rec.size() == 3);
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(rec[static_cast<std::size_t>(k)] - coeffs[static_cast<std::size_t>(k)]) <=
          1e-14);
}
