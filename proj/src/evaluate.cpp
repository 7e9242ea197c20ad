#include "colligate/evaluate.hpp"

#include "colligate/numerics.hpp"

#include <Eigen/LU>

#include <cmath>
#include <limits>
#include <sstream>

namespace colligate {

void NCPoint::validate() const {
  if (blocks.empty()) throw ShapeError("nc point: needs at least one block");
  const Index n = blocks.front().rows();
  if (n < 1) throw ShapeError("nc point: level must be >= 1");
  for (const Matrix& b : blocks) {
    if (b.rows() != n || b.cols() != n)
      throw ShapeError("nc point: blocks must be square and of equal size");
    if (!b.allFinite()) throw ShapeError("nc point: non-finite entries");
  }
}

NCPoint NCPoint::direct_sum(const NCPoint& x, const NCPoint& y) {
  if (x.arity() != y.arity()) throw ShapeError("nc direct sum: arity mismatch");
  NCPoint out;
  const Index n = x.level(), m = y.level();
  for (Index j = 0; j < x.arity(); ++j) {
    Matrix b = Matrix::Zero(n + m, n + m);
    b.topLeftCorner(n, n) = x.blocks[static_cast<std::size_t>(j)];
    b.bottomRightCorner(m, m) = y.blocks[static_cast<std::size_t>(j)];
    out.blocks.push_back(std::move(b));
  }
  return out;
}

NCPoint NCPoint::from_scalar(const Vector& z) {
  NCPoint out;
  for (Index j = 0; j < z.size(); ++j)
    out.blocks.push_back(Matrix::Constant(1, 1, z(j)));
  return out;
}

NCPoint NCPoint::conjugated(const Matrix& s) const {
  if (s.rows() != level() || s.cols() != level())
    throw ShapeError("nc conjugation: similarity must match the level");
  const Matrix s_inv = s.inverse();
  NCPoint out;
  for (const Matrix& b : blocks) out.blocks.push_back(s_inv * b * s);
  return out;
}

NCPoint NCPoint::scaled(double r) const {
  NCPoint out;
  for (const Matrix& b : blocks) out.blocks.push_back(r * b);
  return out;
}

Index point_level(const PointVariant& at) {
  if (std::holds_alternative<Vector>(at)) return 1;
  return std::get<NCPoint>(at).level();
}

Index point_arity(const PointVariant& at) {
  if (const auto* z = std::get_if<Vector>(&at)) return z->size();
  return std::get<NCPoint>(at).arity();
}

Matrix delta_matrix(const PartitionStructure& p, const Vector& z) {
  if (z.size() != p.arity())
    throw ShapeError("delta_matrix: point arity does not match the partition");
  Matrix delta = Matrix::Zero(p.total(), p.total());
  Index offset = 0;
  for (Index j = 0; j < p.arity(); ++j) {
    const Index nj = p.dims[static_cast<std::size_t>(j)];
    delta.block(offset, offset, nj, nj) = z(j) * Matrix::Identity(nj, nj);
    offset += nj;
  }
  return delta;
}

Matrix q_matrix(const QPencil& q, const Vector& z) {
  if (z.size() != q.arity()) throw ShapeError("q_matrix: point arity does not match the pencil");
  Matrix out = Matrix::Zero(q.s, q.r);
  for (Index j = 0; j < q.arity(); ++j) out += z(j) * q.coeffs[static_cast<std::size_t>(j)];
  return out;
}

Matrix q_matrix(const QPencil& q, const NCPoint& x) {
  x.validate();
  if (x.arity() != q.arity()) throw ShapeError("q_matrix: point arity does not match the pencil");
  const Index n = x.level();
  Matrix out = Matrix::Zero(n * q.s, n * q.r);
  for (Index j = 0; j < q.arity(); ++j)
    out += kron(x.blocks[static_cast<std::size_t>(j)], q.coeffs[static_cast<std::size_t>(j)]);
  return out;
}

Matrix structure_matrix(const Colligation& v, const PointVariant& at) {
  if (const auto* z = std::get_if<Vector>(&at)) {
    if (v.is_partition()) return delta_matrix(v.partition(), *z);
    const MatrixBallStructure& mb = v.matrix_ball();
    return kron(q_matrix(mb.pencil, *z), Matrix::Identity(mb.dim_h, mb.dim_h));
  }
  const NCPoint& x = std::get<NCPoint>(at);
  const MatrixBallStructure& mb = v.matrix_ball();  // partitions stay at level 1
  return kron(q_matrix(mb.pencil, x), Matrix::Identity(mb.dim_h, mb.dim_h));
}

double domain_norm(const StateStructure& s, const PointVariant& at) {
  if (const auto* p = std::get_if<PartitionStructure>(&s)) {
    const auto* z = std::get_if<Vector>(&at);
    if (!z) throw ShapeError("domain_norm: partition structures live at scalar level");
    if (z->size() != p->arity()) throw ShapeError("domain_norm: arity mismatch");
    return z->cwiseAbs().maxCoeff();
  }
  const QPencil& q = std::get<MatrixBallStructure>(s).pencil;
  if (const auto* z = std::get_if<Vector>(&at)) return operator_norm(q_matrix(q, *z));
  return operator_norm(q_matrix(q, std::get<NCPoint>(at)));
}

double domain_norm(const Colligation& v, const PointVariant& at) {
  return domain_norm(v.structure, at);
}

namespace {

// Solves (I - M D^(n)) X = M C^(n) and returns f = A I_n + B^(n) X together
// with a condition estimate of the resolvent system.
struct ResolventSolve {
  Matrix x;          // (n * state) x n
  Matrix value;      // n x n
  double condition;  // 1 / rcond of I - M D^(n)
};

ResolventSolve resolve(const Colligation& v, const Matrix& m, Index n) {
  const Matrix dn = lift(v.D, n);
  const Matrix cn = lift(v.C, n);
  const Matrix bn = lift(v.B, n);
  const Matrix sys = Matrix::Identity(m.rows(), m.rows()) - m * dn;
  Eigen::PartialPivLU<Matrix> lu(sys);
  ResolventSolve out;
  out.x = lu.solve(m * cn);
  out.value = v.A * Matrix::Identity(n, n) + bn * out.x;
  const double rc = lu.rcond();
  out.condition = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace

EvalResult eval_interior(const Colligation& v, const PointVariant& at,
                         const ToleranceConfig& tol) {
  const double norm = domain_norm(v, at);
  if (!(norm < 1.0))
    throw DomainError("eval: point lies on or outside the closed domain (||Q|| = " +
                      std::to_string(norm) + ")");
  const Index n = point_level(at);
  const Matrix m = structure_matrix(v, at);
  ResolventSolve rs = resolve(v, m, n);
  EvalResult res;
  res.value = std::move(rs.value);
  res.condition = rs.condition;
  if (res.condition > 1.0 / tol.rank_tol)
    res.warnings.push_back("ill-conditioned resolvent (condition estimate " +
                           std::to_string(res.condition) + ")");
  return res;
}

EvalResult eval_point(const Colligation& v, const Vector& z, const ToleranceConfig& tol) {
  const double norm = domain_norm(v, PointVariant(z));
  if (norm > 1.0 - tol.domain_margin)
    throw DomainError(
        norm <= 1.0
            ? "eval_point: point within the boundary margin; use the radial engine"
            : "eval_point: point outside the closed domain");
  return eval_interior(v, PointVariant(z), tol);
}

EvalResult eval_nc(const Colligation& v, const NCPoint& x, const ToleranceConfig& tol) {
  if (v.is_partition())
    throw ShapeError("eval_nc: partition colligations evaluate at matrix points via "
                     "to_matrix_ball");
  const double norm = domain_norm(v, PointVariant(x));
  if (norm > 1.0 - tol.domain_margin)
    throw DomainError(
        norm <= 1.0 ? "eval_nc: point within the boundary margin; use the radial engine"
                    : "eval_nc: point outside the closed domain");
  return eval_interior(v, PointVariant(x), tol);
}

Witness witness(const Colligation& v, const PointVariant& at, const Vector& y,
                const ToleranceConfig& tol) {
  const Index n = point_level(at);
  if (y.size() != n) throw ShapeError("witness: direction length must equal the level");
  if (y.norm() == 0.0) throw ShapeError("witness: direction must be nonzero");
  const double norm = domain_norm(v, at);
  if (!(norm < 1.0)) throw DomainError("witness: point must lie strictly inside the domain");

  const Matrix m = structure_matrix(v, at);
  const Matrix dn = lift(v.D, n);
  const Matrix cn = lift(v.C, n);
  const Matrix sys = Matrix::Identity(m.rows(), m.rows()) - m * dn;

  Witness w;
  w.y = y;
  w.L = Eigen::PartialPivLU<Matrix>(sys).solve(m * (cn * y));
  w.v = cn * y + dn * w.L;
  w.c_star_v = cn.adjoint() * w.v;
  const double vnorm = w.v.norm();
  w.residual = vnorm > 0.0 ? (dn.adjoint() * w.v - m * w.v).norm() / vnorm
                           : std::numeric_limits<double>::infinity();
  (void)tol;
  return w;
}

Witness witness(const Colligation& v, const PointVariant& at, const ToleranceConfig& tol) {
  return witness(v, at, Vector::Ones(point_level(at)), tol);
}

}  // namespace colligate
