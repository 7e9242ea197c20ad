#ifndef COLLIGATE_EVALUATE_HPP
#define COLLIGATE_EVALUATE_HPP

#include "colligate/colligation.hpp"

#include <string>
#include <variant>
#include <vector>

namespace colligate {

// Level-n point: d square blocks of equal size n.
struct NCPoint {
  std::vector<Matrix> blocks;

  Index arity() const { return static_cast<Index>(blocks.size()); }
  Index level() const { return blocks.empty() ? 0 : blocks.front().rows(); }
  void validate() const;

  // diag(x, y) blockwise; NC sets are closed under this operation.
  static NCPoint direct_sum(const NCPoint& x, const NCPoint& y);
  // Scalar point embedded at level 1.
  static NCPoint from_scalar(const Vector& z);
  NCPoint conjugated(const Matrix& s) const;  // S^{-1} Lambda S per block
  NCPoint scaled(double r) const;
};

using PointVariant = std::variant<Vector, NCPoint>;

Index point_level(const PointVariant& at);  // 1 for scalar points
Index point_arity(const PointVariant& at);

// Block-diagonal N x N matrix with z_j I_{N_j} blocks.
Matrix delta_matrix(const PartitionStructure& p, const Vector& z);

// Scalar point: sum_j z_j Q_j (s x r). Level-n point: sum_j Lambda_j (x) Q_j
// in the canonical layout (level index slow), shape (n s) x (n r).
Matrix q_matrix(const QPencil& q, const Vector& z);
Matrix q_matrix(const QPencil& q, const NCPoint& x);

// The multiplier M appearing in f = A + B (I - M D^{(n)})^{-1} M C^{(n)}:
// Delta(z) for partitions, Q(.) (x) I_H for matrix balls, lifted at level n.
Matrix structure_matrix(const Colligation& v, const PointVariant& at);

// ||Delta(z)|| or ||Q(.)||; equals 1 on the topological boundary.
double domain_norm(const Colligation& v, const PointVariant& at);
double domain_norm(const StateStructure& s, const PointVariant& at);

struct EvalResult {
  Matrix value;  // n x n; 1 x 1 at scalar points
  double condition = 1.0;
  std::vector<std::string> warnings;

  Complex scalar() const { return value(0, 0); }
};

// Realization-formula evaluation. Points must satisfy the strict-interior
// check ||M|| <= 1 - margin; everything closer to the sphere is the radial
// engine's business (see boundary.hpp).
EvalResult eval_point(const Colligation& v, const Vector& z, const ToleranceConfig& tol = {});
EvalResult eval_nc(const Colligation& v, const NCPoint& x, const ToleranceConfig& tol = {});

// Ungated core shared with the radial engine: requires only ||M|| < 1.
EvalResult eval_interior(const Colligation& v, const PointVariant& at,
                         const ToleranceConfig& tol = {});

struct Witness {
  Vector y;         // annihilated direction (length n; [1] at scalar level)
  Vector L;         // resolvent image (I - M D^(n))^{-1} M C^(n) y
  Vector v;         // eigenvector candidate C^(n) y + D^(n) L
  Vector c_star_v;  // C^(n)* v, equals y at a zero
  double residual = 0.0;  // ||D^(n)* v - M v|| / ||v||
};

// Witness vectors behind the spectral certificates. y defaults to the
// all-ones-free scalar 1 at level 1; it must be nonzero.
Witness witness(const Colligation& v, const PointVariant& at, const Vector& y,
                const ToleranceConfig& tol = {});
Witness witness(const Colligation& v, const PointVariant& at, const ToleranceConfig& tol = {});

}  // namespace colligate

#endif  // COLLIGATE_EVALUATE_HPP
