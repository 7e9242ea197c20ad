#include "colligate/boundary.hpp"

#include "colligate/numerics.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <utility>

namespace colligate {

RadialSchedule RadialSchedule::dyadic(int k_max, double tol) {
  RadialSchedule s;
  s.convergence_tol = tol;
  for (int k = 1; k <= k_max; ++k) s.radii.push_back(1.0 - std::ldexp(1.0, -k));
  return s;
}

void RadialSchedule::validate() const {
  if (radii.size() < 4) throw DomainError("radial schedule: needs at least four radii");
  double prev = 0.0;
  for (double r : radii) {
    if (!(r > prev && r < 1.0))
      throw DomainError("radial schedule: radii must increase strictly within (0,1)");
    prev = r;
  }
  if (!(convergence_tol > 0.0)) throw DomainError("radial schedule: tolerance must be positive");
}

std::string to_string(BPClass c) {
  switch (c) {
    case BPClass::not_converged: return "not_converged";
    case BPClass::isometric_value: return "isometric_value";
    case BPClass::non_isometric_value: return "non_isometric_value";
    case BPClass::non_coisometric_value: return "non_coisometric_value";
  }
  return "unknown";
}

std::string to_string(BoundaryPortion p) {
  switch (p) {
    case BoundaryPortion::iso: return "iso";
    case BoundaryPortion::coiso: return "coiso";
    case BoundaryPortion::uni: return "uni";
    case BoundaryPortion::none: return "none";
  }
  return "unknown";
}

namespace {

constexpr double kBoundaryTol = 1e-9;    // permitted | ||Q|| - 1 | after renormalization
constexpr double kRenormalizeBand = 1e-6;
constexpr double kStationaryTol = 1e-13;
constexpr double kMaxRatio = 0.97;
constexpr double kValueClassTol = 1e-6;  // isometric/zero classification band

PointVariant scale_point(const PointVariant& at, double r) {
  if (const auto* z = std::get_if<Vector>(&at)) return PointVariant(Vector(r * (*z)));
  return PointVariant(std::get<NCPoint>(at).scaled(r));
}

// Geometric-tail analysis of the value sequence. Aitken extrapolation with
// the empirical ratio; convergence requires stable ratios below kMaxRatio
// and agreement between the last two extrapolants.
void analyze_convergence(RadialReport& rep, double conv_tol) {
  const std::size_t n = rep.values.size();
  rep.diffs.clear();
  for (std::size_t k = 1; k < n; ++k)
    rep.diffs.push_back((rep.values[k] - rep.values[k - 1]).norm());
  if (n < 4) return;

  const double scale = std::max(1.0, rep.values.back().norm());
  const double dK = rep.diffs[n - 2], dK1 = rep.diffs[n - 3], dK2 = rep.diffs[n - 4];

  if (dK <= kStationaryTol * scale && dK1 <= kStationaryTol * scale &&
      dK2 <= kStationaryTol * scale) {
    rep.converged = true;
    rep.limit = rep.values.back();
    rep.tail_estimate = dK;
    rep.extrapolation_error = 0.0;
    return;
  }
  if (dK1 <= 0.0 || dK2 <= 0.0) return;

  const double rho = dK / dK1, rho_prev = dK1 / dK2;
  if (!(rho > 0.0 && rho < kMaxRatio && rho_prev > 0.0 && rho_prev < kMaxRatio)) return;

  const Matrix w =
      rep.values[n - 1] + (rep.values[n - 1] - rep.values[n - 2]) * (rho / (1.0 - rho));
  const Matrix w_prev =
      rep.values[n - 2] + (rep.values[n - 2] - rep.values[n - 3]) * (rho_prev / (1.0 - rho_prev));

  rep.tail_estimate = dK * rho / (1.0 - rho);
  rep.extrapolation_error = (w - w_prev).norm();
  if (rep.extrapolation_error <= conv_tol) {
    rep.converged = true;
    rep.limit = w;
  }
}

void classify_limit(RadialReport& rep) {
  if (!rep.converged) {
    rep.bp_class = BPClass::not_converged;
    return;
  }
  const Index n = rep.limit.rows();
  rep.iso_defect =
      operator_norm(rep.limit.adjoint() * rep.limit - Matrix::Identity(n, n));
  rep.coiso_defect =
      operator_norm(rep.limit * rep.limit.adjoint() - Matrix::Identity(n, n));
  if (rep.iso_defect > kValueClassTol)
    rep.bp_class = BPClass::non_isometric_value;
  else if (rep.coiso_defect > kValueClassTol)
    rep.bp_class = BPClass::non_coisometric_value;
  else
    rep.bp_class = BPClass::isometric_value;
}

}  // namespace

RadialReport radial_values(const Colligation& v, const PointVariant& at,
                           const RadialSchedule& sched, const ToleranceConfig& tol) {
  sched.validate();
  double norm = domain_norm(v, at);
  PointVariant point = at;
  if (std::abs(norm - 1.0) > kBoundaryTol) {
    if (std::abs(norm - 1.0) <= kRenormalizeBand && norm > 0.0) {
      point = scale_point(at, 1.0 / norm);
      norm = domain_norm(v, point);
    }
  }
  if (std::abs(norm - 1.0) > kBoundaryTol)
    throw DomainError("radial_values: point must lie on the boundary (||Q|| = " +
                      std::to_string(norm) + ")");

  RadialReport rep;
  rep.point = point;
  for (double r : sched.radii)
    rep.values.push_back(eval_interior(v, scale_point(point, r), tol).value);
  analyze_convergence(rep, sched.convergence_tol);
  classify_limit(rep);

  if (rep.converged) {
    Eigen::JacobiSVD<Matrix> svd(rep.limit, Eigen::ComputeFullV);
    const Index n = rep.limit.rows();
    const double smin = svd.singularValues()(n - 1);
    if (smin <= kValueClassTol) {
      rep.boundary_zero = true;
      rep.zero_direction = svd.matrixV().col(n - 1);
    }
  }
  return rep;
}

RadialReport is_boundary_zero(const Colligation& v, const PointVariant& at,
                              const std::optional<Vector>& y, const RadialSchedule& sched,
                              const ToleranceConfig& tol) {
  RadialReport rep = radial_values(v, at, sched, tol);
  if (!rep.converged) {
    rep.boundary_zero = false;  // never a false positive
    return rep;
  }
  if (y.has_value()) {
    if (y->norm() == 0.0) throw ShapeError("is_boundary_zero: direction must be nonzero");
    const Vector yn = y->normalized();
    rep.boundary_zero = (rep.limit * yn).norm() <= kValueClassTol;
    rep.zero_direction = rep.boundary_zero ? yn : Vector();
  }
  return rep;
}

BoundaryPortion classify_boundary_point(const QPencil& q, const PointVariant& at, double tol) {
  Matrix qm;
  if (const auto* z = std::get_if<Vector>(&at))
    qm = q_matrix(q, *z);
  else
    qm = q_matrix(q, std::get<NCPoint>(at));
  const double iso_defect =
      operator_norm(qm.adjoint() * qm - Matrix::Identity(qm.cols(), qm.cols()));
  const double coiso_defect =
      operator_norm(qm * qm.adjoint() - Matrix::Identity(qm.rows(), qm.rows()));
  const bool iso = iso_defect <= tol, coiso = coiso_defect <= tol;
  if (iso && coiso) return BoundaryPortion::uni;
  if (iso) return BoundaryPortion::iso;
  if (coiso) return BoundaryPortion::coiso;
  return BoundaryPortion::none;
}

BoundaryPortion classify_boundary_point(const Colligation& v, const PointVariant& at,
                                        double tol) {
  if (v.is_partition()) {
    const auto* z = std::get_if<Vector>(&at);
    if (!z) throw ShapeError("classify_boundary_point: partition points are scalar");
    const Matrix delta = delta_matrix(v.partition(), *z);
    const double defect =
        operator_norm(delta.adjoint() * delta - Matrix::Identity(delta.rows(), delta.rows()));
    return defect <= tol ? BoundaryPortion::uni : BoundaryPortion::none;
  }
  return classify_boundary_point(v.matrix_ball().pencil, at, tol);
}

ContainmentReport check_containments(const Colligation& v,
                                     const std::vector<PointVariant>& samples,
                                     const RadialSchedule& sched, const ToleranceConfig& tol,
                                     double spectral_tol) {
  ContainmentReport report;
  for (const PointVariant& sample : samples) {
    ++report.samples;
    RadialReport rad = radial_values(v, sample, sched, tol);
    if (!rad.converged) {
      ++report.not_converged;
      continue;
    }
    const BoundaryPortion portion = classify_boundary_point(v, rad.point);

    std::vector<std::string> obligations;
    if (rad.boundary_zero) {
      ++report.boundary_zeros;
      obligations.push_back("boundary_zero");
    }
    const bool iso_side = portion == BoundaryPortion::iso || portion == BoundaryPortion::uni;
    const bool coiso_side = portion == BoundaryPortion::coiso || portion == BoundaryPortion::uni;
    if (iso_side && rad.iso_defect > kValueClassTol) obligations.push_back("bp_iso");
    if (coiso_side && rad.coiso_defect > kValueClassTol) obligations.push_back("bp_coiso");
    if (obligations.empty()) continue;

    const SpectralResidual res = spectral_residual(v, rad.point, tol);
    for (std::string& o : obligations) {
      if (o != "boundary_zero") ++report.bp_obligations;
      ContainmentRecord rec;
      rec.point = rad.point;
      rec.obligation = std::move(o);
      rec.sigma_min = res.sigma_min;
      rec.satisfied = res.sigma_min <= spectral_tol;
      if (!rec.satisfied) report.counterexamples.push_back(rec);
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace colligate
