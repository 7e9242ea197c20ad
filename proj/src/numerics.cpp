#include "colligate/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace colligate {

Matrix kron(const Matrix& a, const Matrix& b) {
  const Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  if (ar > 0 && br > std::numeric_limits<Index>::max() / ar)
    throw ShapeError("kron: dimension product overflows");
  if (ac > 0 && bc > std::numeric_limits<Index>::max() / ac)
    throw ShapeError("kron: dimension product overflows");
  Matrix out(ar * br, ac * bc);
  for (Index i = 0; i < ar; ++i)
    for (Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

Matrix lift(const Matrix& t, Index n) {
  if (n < 1) throw ShapeError("lift: level must be >= 1");
  Matrix out = Matrix::Zero(n * t.rows(), n * t.cols());
  for (Index k = 0; k < n; ++k)
    out.block(k * t.rows(), k * t.cols(), t.rows(), t.cols()) = t;
  return out;
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

double sigma_min(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.cols() > a.rows()) return 0.0;
  const auto sv = Eigen::JacobiSVD<Matrix>(a).singularValues();
  return sv(sv.size() - 1);
}

NullspaceResult nullspace(const Matrix& a, const ToleranceConfig& tol) {
  if (a.size() == 0) throw ShapeError("nullspace: empty matrix");
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success)
    throw NumericalError("nullspace: SVD did not converge");
  const auto& sv = svd.singularValues();
  const Index nsv = sv.size();  // = min(rows, cols)

  NullspaceResult res;
  res.sigma_max = sv(0);
  res.sigma_min = (a.cols() > nsv) ? 0.0 : sv(nsv - 1);

  const double cutoff =
      tol.rank_tol * res.sigma_max * static_cast<double>(std::max(a.rows(), a.cols()));
  Index rank = 0;
  while (rank < nsv && sv(rank) > cutoff) ++rank;

  res.basis = svd.matrixV().rightCols(a.cols() - rank);
  return res;
}

double Rng::uniform() {
  // 53 random bits; fully determined by the mt19937_64 stream.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Complex Rng::complex_gaussian() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double rho = std::sqrt(-std::log(u1));  // Var(re) = Var(im) = 1/2
  return Complex(rho * std::cos(2.0 * M_PI * u2), rho * std::sin(2.0 * M_PI * u2));
}

Complex Rng::unit_disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  const double th = 2.0 * M_PI * uniform();
  return Complex(r * std::cos(th), r * std::sin(th));
}

Matrix Rng::complex_gaussian_matrix(Index rows, Index cols) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = complex_gaussian();
  return g;
}

Matrix random_unitary(Index n, std::uint64_t seed) {
  if (n < 1) throw ShapeError("random_unitary: n must be >= 1");
  Rng rng(seed);
  const Matrix g = rng.complex_gaussian_matrix(n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix u = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double m = std::abs(d);
    u.col(j) *= (m > 0.0) ? d / m : Complex(1.0, 0.0);
  }
  return u;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, double trim_tol) {
  double maxabs = 0.0;
  for (const Complex& c : coeffs) maxabs = std::max(maxabs, std::abs(c));
  if (maxabs == 0.0) return {};

  Index deg = static_cast<Index>(coeffs.size()) - 1;
  while (deg > 0 && std::abs(coeffs[static_cast<std::size_t>(deg)]) <= trim_tol * maxabs) --deg;
  if (deg <= 0) return {};

  Matrix companion = Matrix::Zero(deg, deg);
  companion.diagonal(-1).setOnes();
  const Complex lead = coeffs[static_cast<std::size_t>(deg)];
  for (Index i = 0; i < deg; ++i)
    companion(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;

  Eigen::ComplexEigenSolver<Matrix> es(companion, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericalError("polynomial_roots: eigensolver did not converge");
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::vector<Complex> interpolate_on_unit_circle(const std::vector<Complex>& values) {
  const std::size_t m = values.size();
  if (m == 0) return {};
  std::vector<Complex> coeffs(m, Complex(0, 0));
  for (std::size_t l = 0; l < m; ++l) {
    Complex acc(0, 0);
    for (std::size_t k = 0; k < m; ++k) {
      const double ang = -2.0 * M_PI * static_cast<double>(k * l % m) / static_cast<double>(m);
      acc += values[k] * Complex(std::cos(ang), std::sin(ang));
    }
    coeffs[l] = acc / static_cast<double>(m);
  }
  return coeffs;
}

}  // namespace colligate
