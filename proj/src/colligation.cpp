#include "colligate/colligation.hpp"

#include "colligate/numerics.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <sstream>
#include <utility>

namespace colligate {

Index PartitionStructure::total() const {
  Index n = 0;
  for (Index nj : dims) n += nj;
  return n;
}

void PartitionStructure::validate() const {
  if (dims.empty()) throw ShapeError("partition: needs at least one block");
  for (Index nj : dims)
    if (nj < 1) throw ShapeError("partition: every block dimension must be >= 1");
}

void QPencil::validate(const ToleranceConfig& tol) const {
  if (arity() < 1 || s < 1 || r < 1)
    throw ShapeError("pencil: requires d >= 1, s >= 1, r >= 1");
  for (Index j = 0; j < arity(); ++j) {
    const Matrix& q = coeffs[static_cast<std::size_t>(j)];
    if (q.rows() != s || q.cols() != r) {
      std::ostringstream msg;
      msg << "pencil: coefficient " << j + 1 << " is " << q.rows() << "x" << q.cols()
          << ", expected " << s << "x" << r;
      throw ShapeError(msg.str());
    }
  }
  // Stack vectorized coefficients; rank must equal d.
  Matrix stacked(s * r, arity());
  for (Index j = 0; j < arity(); ++j)
    stacked.col(j) = coeffs[static_cast<std::size_t>(j)].reshaped();
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const double cutoff = tol.rank_tol * svd.singularValues()(0) *
                        static_cast<double>(std::max(stacked.rows(), stacked.cols()));
  Index rank = 0;
  while (rank < svd.singularValues().size() && svd.singularValues()(rank) > cutoff) ++rank;
  if (rank < arity())
    throw ShapeError("pencil: coefficient matrices are linearly dependent");
}

QPencil QPencil::diag(Index d) {
  QPencil q;
  q.s = d;
  q.r = d;
  for (Index j = 0; j < d; ++j) {
    Matrix m = Matrix::Zero(d, d);
    m(j, j) = 1.0;
    q.coeffs.push_back(std::move(m));
  }
  return q;
}

QPencil QPencil::row(Index d) {
  QPencil q;
  q.s = 1;
  q.r = d;
  for (Index j = 0; j < d; ++j) {
    Matrix m = Matrix::Zero(1, d);
    m(0, j) = 1.0;
    q.coeffs.push_back(std::move(m));
  }
  return q;
}

Index input_dim(const StateStructure& s) {
  if (const auto* p = std::get_if<PartitionStructure>(&s)) return p->total();
  const auto& mb = std::get<MatrixBallStructure>(s);
  return mb.pencil.s * mb.dim_h;
}

Index output_dim(const StateStructure& s) {
  if (const auto* p = std::get_if<PartitionStructure>(&s)) return p->total();
  const auto& mb = std::get<MatrixBallStructure>(s);
  return mb.pencil.r * mb.dim_h;
}

Index arity(const StateStructure& s) {
  if (const auto* p = std::get_if<PartitionStructure>(&s)) return p->arity();
  return std::get<MatrixBallStructure>(s).pencil.arity();
}

const PartitionStructure& Colligation::partition() const {
  if (const auto* p = std::get_if<PartitionStructure>(&structure)) return *p;
  throw ShapeError("colligation '" + name + "' does not carry a partition structure");
}

const MatrixBallStructure& Colligation::matrix_ball() const {
  if (const auto* mb = std::get_if<MatrixBallStructure>(&structure)) return *mb;
  throw ShapeError("colligation '" + name + "' does not carry a matrix-ball structure");
}

Matrix Colligation::full_matrix() const {
  const Index in = input_dim(), out = output_dim();
  Matrix v(1 + out, 1 + in);
  v(0, 0) = A;
  v.block(0, 1, 1, in) = B;
  v.block(1, 0, out, 1) = C;
  v.block(1, 1, out, in) = D;
  return v;
}

namespace {

void check_block(const Matrix& m, Index rows, Index cols, const char* which) {
  if (m.rows() != rows || m.cols() != cols) {
    std::ostringstream msg;
    msg << "assemble: block " << which << " is " << m.rows() << "x" << m.cols() << ", expected "
        << rows << "x" << cols;
    throw ShapeError(msg.str());
  }
  if (!m.allFinite()) {
    std::ostringstream msg;
    msg << "assemble: block " << which << " has non-finite entries";
    throw ShapeError(msg.str());
  }
}

}  // namespace

Colligation assemble(StateStructure structure, Complex a, Matrix b, Matrix c, Matrix d,
                     std::string name) {
  if (const auto* p = std::get_if<PartitionStructure>(&structure)) {
    p->validate();
  } else {
    const auto& mb = std::get<MatrixBallStructure>(structure);
    mb.pencil.validate();
    if (mb.dim_h < 1) throw ShapeError("assemble: dim_h must be >= 1");
  }
  const Index in = input_dim(structure), out = output_dim(structure);
  check_block(b, 1, in, "B");
  check_block(c, out, 1, "C");
  check_block(d, out, in, "D");
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
    throw ShapeError("assemble: block A has non-finite entries");

  Colligation v;
  v.structure = std::move(structure);
  v.A = a;
  v.B = std::move(b);
  v.C = std::move(c);
  v.D = std::move(d);
  v.name = std::move(name);
  return v;
}

ValidationReport validate(const Colligation& v, const ToleranceConfig& tol) {
  const Matrix full = v.full_matrix();
  ValidationReport rep;
  rep.isometry_defect =
      operator_norm(full.adjoint() * full - Matrix::Identity(full.cols(), full.cols()));
  rep.coisometry_defect =
      operator_norm(full * full.adjoint() - Matrix::Identity(full.rows(), full.rows()));
  rep.d_norm = operator_norm(v.D);
  rep.is_isometry = rep.isometry_defect <= tol.residual_tol;
  rep.is_coisometry = rep.coisometry_defect <= tol.residual_tol;
  rep.is_unitary = rep.is_isometry && rep.is_coisometry;
  return rep;
}

Colligation to_matrix_ball(const Colligation& v) {
  const PartitionStructure& p = v.partition();
  const Index h = p.dims.front();
  for (Index nj : p.dims)
    if (nj != h)
      throw ShapeError("to_matrix_ball: partition blocks must all have equal dimension");
  MatrixBallStructure mb{QPencil::diag(p.arity()), h};
  return assemble(mb, v.A, v.B, v.C, v.D, v.name);
}

}  // namespace colligate
