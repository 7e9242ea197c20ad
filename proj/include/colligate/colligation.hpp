#ifndef COLLIGATE_COLLIGATION_HPP
#define COLLIGATE_COLLIGATION_HPP

#include "colligate/types.hpp"

#include <string>
#include <variant>
#include <vector>

namespace colligate {

// Dimensions N_1..N_d of the direct sum underlying the polydisk form
// Delta(z) = z_1 P_1 + ... + z_d P_d.
struct PartitionStructure {
  std::vector<Index> dims;

  Index arity() const { return static_cast<Index>(dims.size()); }
  Index total() const;
  void validate() const;  // every N_j >= 1
};

// d coefficient matrices Q_1..Q_d, each s x r, defining the linear pencil
// Q(z) = sum_j z_j Q_j and the matrix unit ball { z : ||Q(z)|| < 1 }.
struct QPencil {
  Index s = 0;  // output dimension of Q(z)
  Index r = 0;  // input  dimension of Q(z)
  std::vector<Matrix> coeffs;

  Index arity() const { return static_cast<Index>(coeffs.size()); }
  // Shape checks plus linear independence of the vectorized coefficients.
  void validate(const ToleranceConfig& tol = {}) const;

  static QPencil diag(Index d);  // Q(z) = diag(z_1, ..., z_d); polydisk
  static QPencil row(Index d);   // Q(z) = [z_1 ... z_d]; Euclidean ball
};

// Pencil plus the auxiliary-space dimension. The input state space C^s (x) H
// is stored with the C^s index slow and the H index fast, so Q(z) (x) I_H
// acts block-scalar-wise and level-n lifts are plain Kronecker products.
struct MatrixBallStructure {
  QPencil pencil;
  Index dim_h = 1;
};

using StateStructure = std::variant<PartitionStructure, MatrixBallStructure>;

Index input_dim(const StateStructure& s);   // N, or s * dim_h
Index output_dim(const StateStructure& s);  // N, or r * dim_h
Index arity(const StateStructure& s);

// Block operator V = [[A, B], [C, D]] : C (+) input -> C (+) output, the
// realization of one Schur-Agler function.
struct Colligation {
  StateStructure structure;
  Complex A{0.0, 0.0};
  Matrix B;  // 1 x input_dim
  Matrix C;  // output_dim x 1
  Matrix D;  // output_dim x input_dim
  std::string name;

  Index input_dim() const { return colligate::input_dim(structure); }
  Index output_dim() const { return colligate::output_dim(structure); }
  Index arity() const { return colligate::arity(structure); }
  bool is_partition() const { return std::holds_alternative<PartitionStructure>(structure); }
  const PartitionStructure& partition() const;
  const MatrixBallStructure& matrix_ball() const;

  // Assembled (1 + output) x (1 + input) block matrix.
  Matrix full_matrix() const;
};

struct ValidationReport {
  double isometry_defect = 0.0;    // ||V*V - I||
  double coisometry_defect = 0.0;  // ||VV* - I||
  double d_norm = 0.0;             // ||D||
  bool is_isometry = false;
  bool is_coisometry = false;
  bool is_unitary = false;
};

// Shape-checks the blocks against the declared structure.
Colligation assemble(StateStructure structure, Complex a, Matrix b, Matrix c, Matrix d,
                     std::string name = {});

ValidationReport validate(const Colligation& v, const ToleranceConfig& tol = {});

// Rewrites a polydisk colligation with equal block sizes N_j = h as a
// Q_diag matrix-ball colligation with dim_h = h; the evaluation formulas
// agree by the push-through identity. Unequal blocks are not expressible
// as Q (x) I_H and are rejected.
Colligation to_matrix_ball(const Colligation& v);

}  // namespace colligate

#endif  // COLLIGATE_COLLIGATION_HPP
