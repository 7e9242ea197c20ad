#ifndef COLLIGATE_SPECTRA_HPP
#define COLLIGATE_SPECTRA_HPP

#include "colligate/evaluate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace colligate {

// Kernel data of an eigenvalue test matrix D^(n)* - M. sigma_min is the
// smallest residual over unit vectors, so it is 0 whenever the matrix is
// wide; degenerate_shape flags that case (row pencils with d >= 2 always
// have kernel_dim >= (d-1) * dim_h).
struct SpectralResidual {
  PointVariant point;
  double sigma_min = 0.0;
  Index kernel_dim = 0;
  Matrix kernel;  // orthonormal columns
  bool degenerate_shape = false;
};

// sigma_min and kernel of D* - Delta(lambda); defined for every lambda in
// C^d, the diagonal point spectrum need not be bounded.
SpectralResidual diag_residual(const Colligation& v, const Vector& lambda,
                               const ToleranceConfig& tol = {});

// Row-eigenvalue test for Q_row colligations. Without a witness this is the
// kernel of the wide matrix [D_1* - l_1 I, ..., D_d* - l_d I]; with one it
// is the scalar residual ||D* v - sum l_j v_j|| / ||v||.
SpectralResidual row_residual(const Colligation& v, const Vector& lambda,
                              const ToleranceConfig& tol = {});
double row_residual(const Colligation& v, const Vector& lambda, const Vector& witness_v);

// sigma_min and kernel of D^(n)* - Q(Lambda) (x) I_H in the canonical
// level-slow layout.
SpectralResidual ncq_residual(const Colligation& v, const NCPoint& x,
                              const ToleranceConfig& tol = {});

// Dispatches on structure and point level.
SpectralResidual spectral_residual(const Colligation& v, const PointVariant& at,
                                   const ToleranceConfig& tol = {});

struct PencilLine {
  Vector fixed;          // all coordinates; the varied one is ignored
  Index varied = 0;
  bool degenerate = false;  // det identically zero along the line
  std::vector<Complex> roots;
  std::vector<Complex> coeffs;  // interpolated polynomial in the varied coordinate
};

// Roots of t -> det(D* - Delta(lambda with coordinate `varied` = t)),
// computed by interpolation at unit-modulus nodes and companion-matrix
// eigenvalues. Degree is at most N_varied.
PencilLine det_pencil_roots(const Colligation& v, const Vector& fixed, Index varied,
                            const ToleranceConfig& tol = {});

enum class Verdict { zero_and_eigenvalue, neither, mismatch };

std::string to_string(Verdict v);

// Two-sided zero certificate: the function residual ||f(at) y|| against the
// spectral residual of the matching eigenvalue test, with the witness
// vectors. Unitary colligations must agree in both directions; isometric
// ball models only support zero => witness-residual-zero, so the spectral
// side there is the witness residual and only that implication is checked.
struct ZeroCertificate {
  PointVariant point;
  Vector y;
  double f_residual = 0.0;
  double spectral_residual = 0.0;
  SpectralResidual spectral;
  Witness wit;
  Verdict verdict = Verdict::neither;
  bool forward_only = false;  // isometric model: converse not asserted
};

struct CertifyOptions {
  double f_tol = 1e-8;        // function-side zero threshold
  double s_tol = 1e-6;        // spectral-side zero threshold
  double dead_band = 100.0;   // retry factor before declaring a mismatch
};

// Dead-band verdict: a disagreement between the function side and the
// spectral side is retried at tightened thresholds (factor dead_band) and
// only a decisive double disagreement is reported as a mismatch.
Verdict two_sided_verdict(double f_res, double s_res, const CertifyOptions& opts = {});

ZeroCertificate certify(const Colligation& v, const PointVariant& at,
                        const std::optional<Vector>& y = std::nullopt,
                        const ToleranceConfig& tol = {}, const CertifyOptions& opts = {});

}  // namespace colligate

#endif  // COLLIGATE_SPECTRA_HPP
