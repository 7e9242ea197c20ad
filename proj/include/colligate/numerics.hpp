#ifndef COLLIGATE_NUMERICS_HPP
#define COLLIGATE_NUMERICS_HPP

#include "colligate/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace colligate {

// Kronecker product, (A.rows*B.rows) x (A.cols*B.cols), A-index slow.
Matrix kron(const Matrix& a, const Matrix& b);

// Level-n lift of an operator block in the canonical layout (level index
// slow): lift(T, n) = I_n (x) T.
Matrix lift(const Matrix& t, Index n);

// Largest singular value.
double operator_norm(const Matrix& a);

// Smallest residual min over unit v of ||A v||: the smallest singular value
// for square or tall matrices, identically 0 for wide ones.
double sigma_min(const Matrix& a);

struct NullspaceResult {
  double sigma_min = 0.0;  // min over unit vectors v of ||A v||
  double sigma_max = 0.0;
  Matrix basis;            // orthonormal columns spanning the numerical kernel
  Index dim() const { return basis.cols(); }
};

// Numerical kernel of a dense matrix. A vector counts as kernel when its
// singular value is at most rank_tol * sigma_max * max(rows, cols). For wide
// matrices the trailing right-singular vectors are exact kernel directions,
// so sigma_min is 0 whenever cols exceed rows.
NullspaceResult nullspace(const Matrix& a, const ToleranceConfig& tol);

// Haar-distributed n x n unitary, deterministic per seed. Column phases are
// fixed by the sign of the QR diagonal so the factorization is unique.
Matrix random_unitary(Index n, std::uint64_t seed);

// Deterministic scalar stream backing all randomized tests and generators.
// Gaussians come from Box-Muller on raw mt19937_64 output, so the sequence
// does not depend on libstdc++'s distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double gaussian();
  Complex complex_gaussian();
  Complex unit_disk(double radius = 1.0);  // uniform on a disk
  Matrix complex_gaussian_matrix(Index rows, Index cols);

 private:
  std::mt19937_64 engine_;
};

// Roots of sum_k coeffs[k] t^k via the companion matrix of the monic
// normalization. Leading coefficients below trim_tol (relative to the
// largest coefficient) are dropped first. Empty result for degree <= 0.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs,
                                      double trim_tol = 1e-12);

// Coefficients of the degree < m polynomial interpolating values taken at
// the m-th roots of unity (inverse DFT).
std::vector<Complex> interpolate_on_unit_circle(const std::vector<Complex>& values);

}  // namespace colligate

#endif  // COLLIGATE_NUMERICS_HPP
