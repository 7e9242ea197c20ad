#ifndef COLLIGATE_BOUNDARY_HPP
#define COLLIGATE_BOUNDARY_HPP

#include "colligate/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace colligate {

struct RadialSchedule {
  std::vector<double> radii;     // strictly increasing, sup < 1
  double convergence_tol = 1e-6; // bound on the extrapolated limit's error

  static RadialSchedule dyadic(int k_max = 20, double tol = 1e-6);
  void validate() const;
};

enum class BPClass {
  not_converged,
  isometric_value,
  non_isometric_value,
  non_coisometric_value,
};

std::string to_string(BPClass c);

enum class BoundaryPortion { iso, coiso, uni, none };

std::string to_string(BoundaryPortion p);

struct RadialReport {
  PointVariant point;                // renormalized onto the sphere
  std::vector<Matrix> values;        // f(r_k Lambda)
  std::vector<double> diffs;         // ||v_k - v_{k-1}||_F
  bool converged = false;
  Matrix limit;                      // geometric extrapolation; valid iff converged
  double tail_estimate = 0.0;        // estimated distance from v_K to the limit
  double extrapolation_error = 0.0;  // consistency of successive extrapolants
  double iso_defect = 0.0;           // ||limit* limit - I||
  double coiso_defect = 0.0;         // ||limit limit* - I||
  BPClass bp_class = BPClass::not_converged;
  bool boundary_zero = false;
  Vector zero_direction;             // annihilated direction when boundary_zero
};

// Radial limit f(r_k Lambda) -> f^dagger(Lambda) along the schedule.
// Requires ||Q(Lambda)|| = 1 within 1e-9; points within 1e-6 of the sphere
// are radially renormalized first. Convergence is declared only when the
// successive differences decay geometrically and the extrapolated limit is
// stable; otherwise the verdict is not_converged, never a guess.
RadialReport radial_values(const Colligation& v, const PointVariant& at,
                           const RadialSchedule& sched = RadialSchedule::dyadic(),
                           const ToleranceConfig& tol = {});

// True iff some unit direction y (the given one, or directions from the
// kernel of the limit) has ||f(r_k Lambda) y|| -> 0. A non-convergent
// radial sequence reports false with bp_class = not_converged.
RadialReport is_boundary_zero(const Colligation& v, const PointVariant& at,
                              const std::optional<Vector>& y = std::nullopt,
                              const RadialSchedule& sched = RadialSchedule::dyadic(),
                              const ToleranceConfig& tol = {});

// Membership in the isometric / coisometric / unitary portions of the
// boundary: Q(L)*Q(L) = I, Q(L)Q(L)* = I, or both. For s != r one of the
// first two is always empty.
BoundaryPortion classify_boundary_point(const QPencil& q, const PointVariant& at,
                                        double tol = 1e-9);
BoundaryPortion classify_boundary_point(const Colligation& v, const PointVariant& at,
                                        double tol = 1e-9);

struct ContainmentRecord {
  PointVariant point;
  std::string obligation;  // "boundary_zero", "bp_iso", "bp_coiso"
  double sigma_min = 0.0;
  bool satisfied = false;
};

// Containment checks: every detected boundary zero, every non-isometric
// boundary value on the isometric portion, and every non-coisometric value
// on the coisometric portion must sit in the approximate point spectrum. In
// finite dimensions that membership coincides with the exact kernel test,
// so it is scored as sigma_min(D^(n)* - Q(Lambda) (x) I_H) <= spectral_tol.
struct ContainmentReport {
  Index samples = 0;
  Index not_converged = 0;
  Index boundary_zeros = 0;
  Index bp_obligations = 0;
  std::vector<ContainmentRecord> records;          // every obligation checked
  std::vector<ContainmentRecord> counterexamples;  // violated obligations
};

ContainmentReport check_containments(const Colligation& v,
                                     const std::vector<PointVariant>& samples,
                                     const RadialSchedule& sched = RadialSchedule::dyadic(),
                                     const ToleranceConfig& tol = {},
                                     double spectral_tol = 1e-6);

}  // namespace colligate

#endif  // COLLIGATE_BOUNDARY_HPP
