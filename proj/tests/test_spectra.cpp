#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colligate/numerics.hpp"
#include "colligate/realizations.hpp"
#include "colligate/spectra.hpp"

#include "oracles.hpp"

#include <Eigen/LU>

#include <cmath>

using namespace colligate;

namespace {

Vector pt(Complex z, Complex w) {
  Vector v(2);
  v << z, w;
  return v;
}

Matrix diag2(Complex a, Complex b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("diag_residual at the origin: rank-one D* leaves a kernel line") {
  const Colligation v = build_famous_example();
  const SpectralResidual r = diag_residual(v, pt(0.0, 0.0));
  CHECK(r.sigma_min <= 1e-15);
  CHECK(r.kernel_dim == 1);
  Vector expected(2);
  expected << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs((expected.adjoint() * r.kernel.col(0))(0)) - 1.0) <= 1e-12);
}

TEST_CASE("diag_residual away from the variety is bounded below") {
  const Colligation v = build_famous_example();
  const SpectralResidual r = diag_residual(v, pt(0.5, 0.5));
  CHECK(r.sigma_min > 0.1);  // det = -1/4 on a 2x2 contraction difference
  CHECK(r.kernel_dim == 0);
}

TEST_CASE("sigma_min vanishes exactly when the kernel is nontrivial") {
  const Colligation v = build_famous_example();
  for (double x : {-0.4, -0.2, 0.0, 0.1, 0.3}) {
    const Complex lambda(x, 0.0);
    const Complex mu = lambda / (2.0 * lambda - 1.0);  // pencil root
    const SpectralResidual zero = diag_residual(v, pt(lambda, mu));
    CHECK(zero.sigma_min <= 1e-12);
    CHECK(zero.kernel_dim >= 1);
    const SpectralResidual off = diag_residual(v, pt(lambda, mu + 0.3));
    CHECK(off.sigma_min > 1e-3);
    CHECK(off.kernel_dim == 0);
  }
}

TEST_CASE("row_residual for d = 1 reduces to the eigenvalue residual") {
  // D: H -> H with H = C^2; the pencil is the single coordinate.
  const Matrix u = random_unitary(2, 3);
  const Colligation v = assemble(MatrixBallStructure{QPencil::row(1), 2}, Complex(0.0),
                                 Matrix::Zero(1, 2), Matrix::Zero(2, 1), 0.8 * u);
  Eigen::ComplexEigenSolver<Matrix> es(v.D.adjoint());
  const Complex lambda = es.eigenvalues()(0);
  Vector point(1);
  point << lambda;
  const SpectralResidual r = row_residual(v, point);
  CHECK_FALSE(r.degenerate_shape);
  CHECK(r.sigma_min <= 1e-12);
  CHECK(row_residual(v, point, Vector(es.eigenvectors().col(0))) <= 1e-12);
}

TEST_CASE("row_residual flags the finite-dimensional degeneracy") {
  const Colligation v = build_ball_coordinate(1, 2);
  const SpectralResidual r = row_residual(v, pt(0.3, 0.4));
  CHECK(r.degenerate_shape);
  CHECK(r.sigma_min <= 1e-15);  // wide test matrix always has a kernel
  CHECK(r.kernel_dim == 1);
  // Explicit kernel direction (l2, -l1).
  Vector k(2);
  k << Complex(0.4), Complex(-0.3);
  k.normalize();
  CHECK(std::abs(std::abs((k.adjoint() * r.kernel.col(0))(0)) - 1.0) <= 1e-12);
}

TEST_CASE("row witness residual for the coordinate multiplier equals |l_j|") {
  const Colligation v = build_ball_coordinate(1, 2);
  const Vector c = v.C.col(0);
  CHECK(row_residual(v, pt(0.0, 0.5), c) <= 1e-15);
  CHECK(row_residual(v, pt(0.3, 0.5), c) == doctest::Approx(0.3));
}

TEST_CASE("ncq_residual at level 1 agrees with diag_residual for Q_diag") {
  const Colligation part = build_famous_example();
  const Colligation ball = to_matrix_ball(part);
  const Vector z = pt(0.2, -0.3);
  const SpectralResidual a = diag_residual(part, z);
  const SpectralResidual b = ncq_residual(ball, NCPoint::from_scalar(z));
  CHECK(a.sigma_min == doctest::Approx(b.sigma_min).epsilon(1e-12));
  CHECK(a.kernel_dim == b.kernel_dim);
}

TEST_CASE("ncq_residual certifies the direct sum of two scalar zeros") {
  const Colligation ball = to_matrix_ball(build_famous_example());
  NCPoint x;
  x.blocks = {diag2(0.0, 0.25), diag2(0.0, -0.5)};
  const SpectralResidual r = ncq_residual(ball, x);
  CHECK(r.sigma_min <= 1e-12);
  CHECK(r.kernel_dim >= 1);
}

TEST_CASE("nonzero ncq residual forces det f != 0 (contrapositive)") {
  const Colligation ball = to_matrix_ball(build_famous_example());
  Rng rng(51);
  for (int k = 0; k < 20; ++k) {
    NCPoint x;
    x.blocks = {rng.complex_gaussian_matrix(2, 2), rng.complex_gaussian_matrix(2, 2)};
    const double q = domain_norm(ball, PointVariant(x));
    for (Matrix& b : x.blocks) b *= 0.85 / q;
    const SpectralResidual r = ncq_residual(ball, x);
    if (r.sigma_min > 1e-6) {
      const Matrix f = eval_nc(ball, x).value;
      CHECK(std::abs(Eigen::PartialPivLU<Matrix>(f).determinant()) > 1e-12);
    }
  }
}

TEST_CASE("det_pencil_roots recovers the golden lines of the famous example") {
  const Colligation v = build_famous_example();

  PencilLine a = det_pencil_roots(v, pt(0.25, 0.0), 1);
  REQUIRE(a.roots.size() == 1);
  CHECK(std::abs(a.roots[0] - Complex(-0.5)) <= 1e-12);

  PencilLine b = det_pencil_roots(v, pt(0.0, 0.0), 1);
  REQUIRE(b.roots.size() == 1);
  CHECK(std::abs(b.roots[0]) <= 1e-12);

  // At l = 1/2 the determinant is the constant -1/4: no roots, not degenerate.
  PencilLine c = det_pencil_roots(v, pt(0.5, 0.0), 1);
  CHECK_FALSE(c.degenerate);
  CHECK(c.roots.empty());
  CHECK(std::abs(c.coeffs[0] - Complex(-0.25)) <= 1e-14);
}

TEST_CASE("det_pencil_roots interpolates the determinant polynomial exactly") {
  const Colligation v = build_famous_example();
  const Complex lambda(0.3, 0.1);
  const PencilLine line = det_pencil_roots(v, pt(lambda, 0.0), 1);
  // det = m (l - 1/2) - l/2 as a polynomial in m.
  REQUIRE(line.coeffs.size() == 2);
  CHECK(std::abs(line.coeffs[0] - (-lambda / 2.0)) <= 1e-14);
  CHECK(std::abs(line.coeffs[1] - (lambda - 0.5)) <= 1e-14);
}

TEST_CASE("det_pencil_roots reports an identically-zero determinant line") {
  // D = 0 on Partition([1,1]): det(D* - Delta) = l m, identically 0 at l = 0.
  const Colligation v = assemble(PartitionStructure{{1, 1}}, Complex(0.0), Matrix::Zero(1, 2),
                                 Matrix::Zero(2, 1), Matrix::Zero(2, 2));
  const PencilLine line = det_pencil_roots(v, pt(0.0, 0.0), 1);
  CHECK(line.degenerate);
  CHECK(line.roots.empty());
}

TEST_CASE("two_sided_verdict handles agreement, dead-band, and mismatch") {
  const CertifyOptions opts;
  CHECK(two_sided_verdict(1e-12, 1e-12, opts) == Verdict::zero_and_eigenvalue);
  CHECK(two_sided_verdict(0.5, 0.3, opts) == Verdict::neither);
  // Decisively zero function with a decisively nonzero spectrum: mismatch.
  CHECK(two_sided_verdict(1e-12, 1e-3, opts) == Verdict::mismatch);
  CHECK(two_sided_verdict(1e-3, 1e-12, opts) == Verdict::mismatch);
  // Gray-zone disagreements fall back to the decisive side.
  CHECK(two_sided_verdict(1e-9, 2e-6, opts) == Verdict::neither);
  CHECK(two_sided_verdict(1e-11, 2e-6, opts) == Verdict::zero_and_eigenvalue);
}

TEST_CASE("certify the golden zero (1/4, -1/2)") {
  const Colligation v = build_famous_example();
  const ZeroCertificate cert = certify(v, PointVariant(pt(0.25, -0.5)));
  CHECK(cert.verdict == Verdict::zero_and_eigenvalue);
  CHECK(cert.f_residual <= 1e-10);
  CHECK(cert.spectral_residual <= 1e-10);
  CHECK(cert.spectral.kernel_dim == 1);
  CHECK_FALSE(cert.forward_only);
  // The kernel line is the witness eigenvector direction.
  const Vector k = cert.spectral.kernel.col(0);
  const Vector w = cert.wit.v.normalized();
  CHECK(std::abs(std::abs((k.adjoint() * w)(0)) - 1.0) <= 1e-10);
}

TEST_CASE("certify a non-zero point as 'neither'") {
  const Colligation v = build_famous_example();
  const ZeroCertificate cert = certify(v, PointVariant(pt(0.5, 0.5)));
  CHECK(cert.verdict == Verdict::neither);
  CHECK(cert.f_residual == doctest::Approx(0.5));
}

TEST_CASE("certify level-2 similarity-conjugated direct-sum zero") {
  const Colligation ball = to_matrix_ball(build_famous_example());
  NCPoint x;
  x.blocks = {diag2(0.0, 0.25), diag2(0.0, -0.5)};
  Rng rng(52);
  Matrix g = rng.complex_gaussian_matrix(2, 2);
  g /= operator_norm(g);
  const NCPoint conj = x.conjugated(Matrix::Identity(2, 2) + 0.2 * g);
  REQUIRE(domain_norm(ball, PointVariant(conj)) < 0.999);
  const ZeroCertificate cert = certify(ball, PointVariant(conj));
  CHECK(cert.verdict == Verdict::zero_and_eigenvalue);
  CHECK(cert.f_residual <= 1e-8);
  CHECK(cert.spectral_residual <= 1e-8);
}

TEST_CASE("certify on an isometric ball model asserts the forward direction only") {
  const Colligation v = build_ball_coordinate(1, 2);
  const ZeroCertificate zero = certify(v, PointVariant(pt(0.0, 0.5)));
  CHECK(zero.forward_only);
  CHECK(zero.verdict == Verdict::zero_and_eigenvalue);
  CHECK(zero.spectral_residual <= 1e-12);  // witness residual, not sigma_min

  const ZeroCertificate nonzero = certify(v, PointVariant(pt(0.3, 0.2)));
  CHECK(nonzero.verdict == Verdict::neither);
}

TEST_CASE("joint eigenvalues embed into row eigenvalues (stacked witness)") {
  Rng rng(53);
  const Index h = 3;
  Matrix t1 = Matrix::Zero(h, h), t2 = Matrix::Zero(h, h);
  for (Index i = 0; i < h; ++i) {
    t1(i, i) = rng.unit_disk(0.6);
    t2(i, i) = rng.unit_disk(0.6);
  }
  Matrix dstack(2 * h, h);
  dstack << t1.adjoint(), t2.adjoint();
  const Colligation v = assemble(MatrixBallStructure{QPencil::row(2), h}, Complex(0.0),
                                 Matrix::Zero(1, h), Matrix::Zero(2 * h, 1), dstack);
  for (Index i = 0; i < h; ++i) {
    Vector w = Matrix::Identity(h, h).col(i);
    Vector stacked(2 * h);
    stacked << w, w;
    CHECK(row_residual(v, pt(t1(i, i), t2(i, i)), stacked) <= 1e-14);
  }
}

TEST_CASE("row eigenvalues are invariant under joint similarity") {
  Rng rng(54);
  const Index h = 3;
  Matrix t1 = Matrix::Zero(h, h), t2 = Matrix::Zero(h, h);
  for (Index i = 0; i < h; ++i) {
    t1(i, i) = rng.unit_disk(0.6);
    t2(i, i) = rng.unit_disk(0.6);
  }
  Matrix g = rng.complex_gaussian_matrix(h, h);
  const Matrix p = Matrix::Identity(h, h) + 0.2 * g / operator_norm(g);
  const Matrix pinv = p.inverse();
  Matrix dstack(2 * h, h);
  dstack << Matrix((p * t1 * pinv).adjoint()), Matrix((p * t2 * pinv).adjoint());
  const Colligation v = assemble(MatrixBallStructure{QPencil::row(2), h}, Complex(0.0),
                                 Matrix::Zero(1, h), Matrix::Zero(2 * h, 1), dstack);
  for (Index i = 0; i < h; ++i) {
    Vector w = p * Matrix::Identity(h, h).col(i);
    Vector stacked(2 * h);
    stacked << w, w;
    CHECK(row_residual(v, pt(t1(i, i), t2(i, i)), stacked) <= 1e-9);
  }
}

TEST_CASE("block upper-triangular diagonal eigenvalue embedding") {
  Rng rng(55);
  const Index n1 = 2, n2 = 2;
  Matrix t = Matrix::Zero(n1 + n2, n1 + n2);
  t.topLeftCorner(n1, n1) = rng.complex_gaussian_matrix(n1, n1);
  t.topRightCorner(n1, n2) = rng.complex_gaussian_matrix(n1, n2);
  t.bottomRightCorner(n2, n2) = rng.complex_gaussian_matrix(n2, n2);
  const Colligation v = assemble(PartitionStructure{{n1, n2}}, Complex(0.0),
                                 Matrix::Zero(1, 4), Matrix::Zero(4, 1), t.adjoint());
  Eigen::ComplexEigenSolver<Matrix> es(t.topLeftCorner(n1, n1));
  for (Index i = 0; i < n1; ++i) {
    Vector padded = Vector::Zero(4);
    padded.head(n1) = es.eigenvectors().col(i);
    // Arbitrary second coordinate: the padded vector still certifies.
    for (const Complex arbitrary : {Complex(1.7, -2.0), Complex(0.0), Complex(-5.0, 3.0)}) {
      const Matrix test =
          v.D.adjoint() - delta_matrix(v.partition(), pt(es.eigenvalues()(i), arbitrary));
      CHECK((test * padded).norm() / padded.norm() <= 1e-12);
    }
  }
}
