#include "colligate/acceptance.hpp"

#include "colligate/boundary.hpp"
#include "colligate/colligation.hpp"
#include "colligate/evaluate.hpp"
#include "colligate/numerics.hpp"
#include "colligate/realizations.hpp"
#include "colligate/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace colligate::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Vector random_polydisk_point(Rng& rng, Index d, double rmax) {
  Vector z(d);
  for (Index j = 0; j < d; ++j) z(j) = rng.unit_disk(rmax);
  return z;
}

Vector random_ball_point(Rng& rng, Index d, double rmax) {
  Vector z(d);
  for (Index j = 0; j < d; ++j) z(j) = rng.complex_gaussian();
  const double n = z.norm();
  if (n == 0.0) return Vector::Zero(d);
  const double radius = rmax * std::pow(rng.uniform(), 1.0 / (2.0 * static_cast<double>(d)));
  return (radius / n) * z;
}

Vector interior_point(Rng& rng, const Colligation& v, double rmax) {
  if (v.is_partition()) return random_polydisk_point(rng, v.arity(), rmax);
  // Scale a polydisk draw onto the pencil ball.
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector z = random_polydisk_point(rng, v.arity(), 1.0);
    const double q = domain_norm(v, PointVariant(z));
    if (q > 0.0) return (rmax / q) * z * rng.uniform(0.05, 1.0);
  }
  return Vector::Zero(v.arity());
}

// Scalar zeros of a 2-variable partition colligation: grid the first
// coordinate, take pencil roots in the second, keep strictly interior pairs.
std::vector<Vector> scan_zeros(const Colligation& v, Index grid_points, double lo, double hi,
                               double interior_cap, const ToleranceConfig& tol) {
  std::vector<Vector> zeros;
  for (Index k = 0; k < grid_points; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) /
                              static_cast<double>(grid_points - 1);
    Vector fixed = Vector::Zero(2);
    fixed(0) = Complex(x, 0.0);
    const PencilLine line = det_pencil_roots(v, fixed, 1, tol);
    if (line.degenerate) continue;
    for (const Complex& root : line.roots) {
      if (std::abs(x) <= interior_cap && std::abs(root) <= interior_cap) {
        Vector z = fixed;
        z(1) = root;
        zeros.push_back(std::move(z));
      }
    }
  }
  return zeros;
}

std::vector<std::vector<Index>> random_partition_dims() {
  return {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2},
          {3, 3}, {1, 1, 1}, {2, 2, 1}, {3, 2, 2}, {3, 3, 3}};
}

struct BallShape {
  Index d;
  Index h;
};

std::vector<BallShape> random_ball_shapes() {
  return {{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}};
}

// ---------------------------------------------------------------------------
// Criterion 1: determinant identity of the famous example.

CriterionResult criterion_det_identity() {
  CriterionResult res{1, "famous-example determinant identity", false, "", 0.0};
  const auto t0 = Clock::now();
  const Colligation v = build_famous_example();
  const PartitionStructure& p = v.partition();

  // Bidegree (1,1): interpolate on the 2x2 tensor grid of square roots of
  // unity; coefficients come out of the inverse DFT in each variable.
  Complex c[2][2] = {};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Complex acc(0.0);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          Vector z(2);
          z(0) = (i == 0) ? 1.0 : -1.0;
          z(1) = (j == 0) ? 1.0 : -1.0;
          const Matrix test = v.D.adjoint() - delta_matrix(p, z);
          const Complex det = Eigen::PartialPivLU<Matrix>(test).determinant();
          acc += det * std::pow(z(0), -a) * std::pow(z(1), -b);
        }
      }
      c[a][b] = acc / 4.0;
    }
  }
  const double err = std::max({std::abs(c[0][0] - Complex(0.0)),
                               std::abs(c[1][0] - Complex(-0.5)),
                               std::abs(c[0][1] - Complex(-0.5)),
                               std::abs(c[1][1] - Complex(1.0))});
  res.seconds = seconds_since(t0);
  res.passed = err <= 1e-12 && res.seconds < 1.0;
  std::ostringstream d;
  d << "det(D* - Delta) = lm - (l+m)/2, coefficient error " << err << " (tol 1e-12)";
  res.detail = d.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 2: two-sided equivalence sweep for diagonal eigenvalues.

CriterionResult criterion_equivalence_sweep(std::uint64_t seed) {
  CriterionResult res{2, "diagonal-eigenvalue equivalence sweep", false, "", 0.0};
  const auto t0 = Clock::now();
  const ToleranceConfig tol;
  const CertifyOptions opts;

  std::vector<Colligation> colls = {build_famous_example(), build_f_alpha_beta(0.5, 0.5),
                                    build_f_alpha_beta(0.3, 0.7)};
  {
    std::uint64_t s = seed + 100;
    for (const auto& dims : random_partition_dims())
      colls.push_back(build_random(PartitionStructure{dims}, ++s));
  }

  const Index points_per = 10000;
  Index mismatches = 0, zeros_seen = 0;
  std::uint64_t point_seed = seed + 500;
  for (const Colligation& v : colls) {
    Rng rng(++point_seed);
    const PartitionStructure& p = v.partition();
    const Matrix dstar = v.D.adjoint();
    for (Index i = 0; i < points_per; ++i) {
      const Vector z = random_polydisk_point(rng, p.arity(), 1.0 - 2.0 * tol.domain_margin);
      const double f_res = std::abs(eval_interior(v, PointVariant(z), tol).scalar());
      const double s_res = sigma_min(dstar - delta_matrix(p, z));
      const Verdict verdict = two_sided_verdict(f_res, s_res, opts);
      if (verdict == Verdict::mismatch) ++mismatches;
      if (verdict == Verdict::zero_and_eigenvalue) ++zeros_seen;
    }
  }
  res.seconds = seconds_since(t0);
  res.passed = mismatches == 0 && res.seconds < 60.0;
  std::ostringstream d;
  d << colls.size() << " colligations x " << points_per << " points, " << mismatches
    << " mismatches after dead-band retry";
  res.detail = d.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criteria 3 and 4: pencil-root scan cross-check and eigenvector witnesses.

CriterionResult criterion_zero_scan(std::vector<Vector>* famous_zeros_out) {
  CriterionResult res{3, "pencil zero scan cross-check", false, "", 0.0};
  const auto t0 = Clock::now();
  const ToleranceConfig tol;
  const double cap = 1.0 - 2.0 * tol.domain_margin;

  double worst_f = 0.0;
  Index total = 0;
  bool golden_origin = false, golden_quarter = false;
  for (const Colligation& v : {build_famous_example(), build_f_alpha_beta(0.5, 0.5)}) {
    const std::vector<Vector> zeros = scan_zeros(v, 101, -0.5, 0.5, cap, tol);
    total += static_cast<Index>(zeros.size());
    for (const Vector& z : zeros) {
      worst_f = std::max(worst_f, std::abs(eval_interior(v, PointVariant(z), tol).scalar()));
      if ((z - (Vector(2) << Complex(0.0), Complex(0.0)).finished()).norm() <= 1e-9)
        golden_origin = true;
      if ((z - (Vector(2) << Complex(0.25), Complex(-0.5)).finished()).norm() <= 1e-9)
        golden_quarter = true;
      if (famous_zeros_out && famous_zeros_out->size() < 256 && v.name == "famous-example")
        famous_zeros_out->push_back(z);
    }
  }
  res.seconds = seconds_since(t0);
  res.passed = worst_f <= 1e-9 && golden_origin && golden_quarter && total > 0;
  std::ostringstream d;
  d << total << " interior pencil roots, max |f| = " << worst_f
    << (golden_origin && golden_quarter ? ", golden zeros (0,0) and (1/4,-1/2) found"
                                        : ", golden zeros missing");
  res.detail = d.str();
  return res;
}

CriterionResult criterion_eigenvector_witness() {
  CriterionResult res{4, "kernel matches the witness eigenvector", false, "", 0.0};
  const auto t0 = Clock::now();
  const ToleranceConfig tol;
  const double cap = 1.0 - 2.0 * tol.domain_margin;

  Index checked = 0;
  double worst_angle = 0.0;
  bool kernel_ok = true;
  for (const Colligation& v : {build_famous_example(), build_f_alpha_beta(0.5, 0.5),
                               build_f_alpha_beta(0.3, 0.7)}) {
    for (const Vector& z : scan_zeros(v, 101, -0.5, 0.5, cap, tol)) {
      const SpectralResidual sr = diag_residual(v, z, tol);
      if (sr.kernel_dim != 1) {
        kernel_ok = false;
        continue;
      }
      const Matrix delta = delta_matrix(v.partition(), z);
      const Matrix sys = Matrix::Identity(2, 2) - v.D * delta;
      const Vector vl = Eigen::PartialPivLU<Matrix>(sys).solve(v.C.col(0));
      const Vector k = sr.kernel.col(0);
      const double sine = (vl - k * (k.adjoint() * vl)).norm() / vl.norm();
      worst_angle = std::max(worst_angle, std::asin(std::min(1.0, sine)));
      ++checked;
    }
  }
  res.seconds = seconds_since(t0);
  res.passed = kernel_ok && checked >= 100 && worst_angle <= 1e-8;
  std::ostringstream d;
  d << checked << " zeros, kernel dimension 1 everywhere: " << (kernel_ok ? "yes" : "no")
    << ", max angle(kernel, v^l) = " << worst_angle;
  res.detail = d.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 5: level-2 certificates from conjugated direct sums.

CriterionResult criterion_level2_certificates(std::uint64_t seed,
                                              const std::vector<Vector>& famous_zeros) {
  CriterionResult res{5, "level-2 zero certificates", false, "", 0.0};
  const auto t0 = Clock::now();
  const ToleranceConfig tol;
  const Colligation ball = to_matrix_ball(build_famous_example());

  if (famous_zeros.size() < 2) {
    res.detail = "no scalar zeros available from the scan";
    return res;
  }

  Rng rng(seed + 900);
  Index good = 0, bad = 0;
  double worst_f = 0.0, worst_s = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Vector& z1 = famous_zeros[static_cast<std::size_t>(rng.uniform() *
                                                             famous_zeros.size())];
    const Vector& z2 = famous_zeros[static_cast<std::size_t>(rng.uniform() *
                                                             famous_zeros.size())];
    const NCPoint diag =
        NCPoint::direct_sum(NCPoint::from_scalar(z1), NCPoint::from_scalar(z2));

    NCPoint conj = diag;
    double eps = 0.25;
    for (int attempt = 0; attempt < 12; ++attempt) {
      Matrix g = rng.complex_gaussian_matrix(2, 2);
      g /= operator_norm(g);
      const Matrix s = Matrix::Identity(2, 2) + eps * g;
      NCPoint candidate = diag.conjugated(s);
      if (domain_norm(ball, PointVariant(candidate)) <= 1.0 - 2.0 * tol.domain_margin) {
        conj = std::move(candidate);
        break;
      }
      eps *= 0.5;
    }

    const ZeroCertificate cert = certify(ball, PointVariant(conj), std::nullopt, tol);
    worst_f = std::max(worst_f, cert.f_residual);
    worst_s = std::max(worst_s, cert.spectral_residual);
    if (cert.verdict == Verdict::zero_and_eigenvalue && cert.f_residual <= 1e-8 &&
        cert.spectral_residual <= 1e-8)
      ++good;
  }

  Index neither = 0;
  for (int i = 0; i < 100; ++i) {
    NCPoint x;
    for (int j = 0; j < 2; ++j) x.blocks.push_back(rng.complex_gaussian_matrix(2, 2));
    const double q = domain_norm(ball, PointVariant(x));
    for (Matrix& b : x.blocks) b *= 0.9 / q;
    const ZeroCertificate cert = certify(ball, PointVariant(x), std::nullopt, tol);
    if (cert.verdict == Verdict::neither) ++neither;
    if (cert.verdict == Verdict::mismatch) ++bad;
  }

  res.seconds = seconds_since(t0);
  res.passed = good == 100 && neither == 100 && bad == 0;
  std::ostringstream d;
  d << good << "/100 conjugated direct-sum zeros certified (max residuals f " << worst_f
    << ", spectral " << worst_s << "), " << neither << "/100 random points 'neither'";
  res.detail = d.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 6: zeros imply row-eigenvalue witnesses on ball models.

struct LineZeroScan {
  Index zeros = 0;
  double worst_witness = 0.0;
  double worst_cstar = 0.0;
};

void scan_ball_lines(const Colligation& v, Rng& rng, Index lines, LineZeroScan& acc,
                     const ToleranceConfig& tol) {
  const Index d = v.arity();
  const Index h = v.matrix_ball().dim_h;
  const std::size_t nodes = static_cast<std::size_t>(h) + 1;

  for (Index line = 0; line < lines; ++line) {
    Vector u(d);
    for (Index j = 0; j < d; ++j) u(j) = rng.complex_gaussian();
    u *= 0.95 / u.norm();

    // f(t u) det(I - t W) is a polynomial of degree <= dim_h; sample it on
    // the unit circle where ||t u|| = 0.95 keeps the resolvent tame.
    std::vector<Complex> values(nodes);
    bool ok = true;
    for (std::size_t k = 0; k < nodes && ok; ++k) {
      const double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(nodes);
      const Complex t(std::cos(ang), std::sin(ang));
      const Vector z = t * u;
      const Matrix m = structure_matrix(v, PointVariant(z));
      const Matrix sys = Matrix::Identity(h, h) - m * v.D;
      Eigen::PartialPivLU<Matrix> lu(sys);
      const Complex det = lu.determinant();
      if (std::abs(det) < 1e-14) {
        ok = false;
        break;
      }
      const Complex f = v.A + (v.B * lu.solve(m * v.C.col(0)))(0);
      values[k] = f * det;
    }
    if (!ok) continue;

    for (const Complex& root : polynomial_roots(interpolate_on_unit_circle(values))) {
      Complex t = root;
      if (std::abs(t) * 0.95 > 0.9) continue;
      // Newton polish on g(t) = f(t u).
      auto g = [&](Complex tt) {
        return eval_interior(v, PointVariant(Vector(tt * u)), tol).scalar();
      };
      for (int it = 0; it < 3; ++it) {
        const double step = 1e-6 * std::max(1.0, std::abs(t));
        const Complex dg = (g(t + step) - g(t - step)) / (2.0 * step);
        if (std::abs(dg) < 1e-14) break;
        t -= g(t) / dg;
      }
      if (std::abs(t) * 0.95 > 0.9) continue;
      const Vector z = t * u;
      if (std::abs(g(t)) > 1e-10) continue;  // not a confirmed zero

      const Witness w = witness(v, PointVariant(z), tol);
      acc.zeros += 1;
      acc.worst_witness = std::max(acc.worst_witness, w.residual);
      acc.worst_cstar = std::max(acc.worst_cstar, std::abs(w.c_star_v(0) - Complex(1.0)));
    }
  }
}

CriterionResult criterion_row_forward(std::uint64_t seed) {
  CriterionResult res{6, "row-eigenvalue forward direction (ball)", false, "", 0.0};
  const auto t0 = Clock::now();
  const ToleranceConfig tol;

  std::vector<Colligation> colls;
  for (auto [j, d] : std::vector<std::pair<Index, Index>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 3}})
    colls.push_back(build_ball_coordinate(j, d));
  std::uint64_t s = seed + 1200;
  for (const BallShape& shape : random_ball_shapes())
    colls.push_back(build_random(MatrixBallStructure{QPencil::row(shape.d), shape.h}, ++s));

  LineZeroScan acc;
  Rng rng(seed + 1300);
  for (const Colligation& v : colls) scan_ball_lines(v, rng, 8, acc, tol);

  res.seconds = seconds_since(t0);
  res.passed = acc.zeros >= 40 && acc.worst_witness <= 1e-9 && acc.worst_cstar <= 1e-9;
  std::ostringstream d;
  d << acc.zeros << " detected zeros; max witness residual " << acc.worst_witness
    << ", max |C*v - 1| = " << acc.worst_cstar
    << " (converse not asserted: finite ball models are isometric, not unitary)";
  res.detail = d.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 7: boundary golden values at (1,1).

CriterionResult criterion_boundary_golden() {
  CriterionResult res{7, "radial limit and spectrum at (1,1)", false, "", 0.0};
  const auto t0 = Clock::now();
  const ToleranceConfig tol;
  const RadialSchedule sched = RadialSchedule::dyadic(20);

  double worst_limit = 0.0, worst_sigma = 0.0;
  bool all_converged = true;
  for (const Colligation& v : {build_famous_example(), build_f_alpha_beta(0.5, 0.5)}) {
    Vector corner(2);
    corner << Complex(1.0), Complex(1.0);
    const RadialReport rep = radial_values(v, PointVariant(corner), sched, tol);
    all_converged = all_converged && rep.converged;
    if (rep.converged)
      worst_limit = std::max(worst_limit, std::abs(rep.limit(0, 0) - Complex(-1.0)));
    worst_sigma =
        std::max(worst_sigma, sigma_min(v.D.adjoint() - delta_matrix(v.partition(), corner)));
  }
  res.seconds = seconds_since(t0);
  res.passed = all_converged && worst_limit <= 1e-6 && worst_sigma <= 1e-12;
  std::ostringstream d;
  d << "radial limit error " << worst_limit << " (tol 1e-6), sigma_min(D* - Delta(1,1)) = "
    << worst_sigma << " (tol 1e-12)";
  res.detail = d.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 8: unimodular boundary values on the torus grid, empty BP(f,1).

CriterionResult criterion_inner_boundary_modulus() {
  CriterionResult res{8, "inner boundary modulus and BP(f,1)", false, "", 0.0};
  const auto t0 = Clock::now();
  const ToleranceConfig tol;
  const RadialSchedule sched = RadialSchedule::dyadic(40);
  const Index n = 100;  // 100 x 100 torus grid

  struct Case {
    Colligation v;
    Vector singular;
  };
  std::vector<Case> cases;
  {
    Vector corner(2);
    corner << Complex(1.0), Complex(1.0);
    cases.push_back({build_famous_example(), corner});
    cases.push_back({build_f_alpha_beta(0.5, 0.5), corner});
    const Complex alpha = 0.3 * std::exp(Complex(0.0, 0.9));
    const Complex beta = 0.7 * std::exp(Complex(0.0, -0.4));
    Vector sing(2);
    sing << std::abs(beta) / std::conj(beta), std::abs(alpha) / std::conj(alpha);
    cases.push_back({build_f_alpha_beta(alpha, beta), sing});
  }

  double worst_modulus = 0.0;
  Index bp_members = 0, unconverged_outside = 0, checked = 0;
  for (const Case& c : cases) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Vector z(2);
        const double ta = 2.0 * M_PI * static_cast<double>(a) / static_cast<double>(n);
        const double tb = 2.0 * M_PI * static_cast<double>(b) / static_cast<double>(n);
        z << Complex(std::cos(ta), std::sin(ta)), Complex(std::cos(tb), std::sin(tb));
        const bool excluded = (z - c.singular).norm() < 1e-3;

        const RadialReport rep = radial_values(c.v, PointVariant(z), sched, tol);
        if (!rep.converged) {
          if (!excluded) ++unconverged_outside;
          continue;
        }
        const double mod = std::abs(rep.limit(0, 0));
        if (!excluded) {
          worst_modulus = std::max(worst_modulus, std::abs(mod - 1.0));
          ++checked;
        }
        if (mod < 1.0 - 1e-6) ++bp_members;  // BP(f,1) detector
      }
    }
  }
  res.seconds = seconds_since(t0);
  res.passed = worst_modulus <= 1e-6 && bp_members == 0 && unconverged_outside == 0 &&
               checked > 0;
  std::ostringstream d;
  d << checked << " torus points checked, max | |f^dagger| - 1 | = " << worst_modulus
    << ", BP(f,1) members: " << bp_members << ", unconverged outside exclusion: "
    << unconverged_outside;
  res.detail = d.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 9: boundary-zero containment in the approximate point spectrum.

CriterionResult criterion_containment(std::uint64_t seed) {
  CriterionResult res{9, "boundary containment (approximate spectrum)", false, "", 0.0};
  const auto t0 = Clock::now();
  const ToleranceConfig tol;
  const RadialSchedule sched = RadialSchedule::dyadic(40);
  const Index samples_per = 1000;

  std::vector<Colligation> colls = {build_famous_example(), build_f_alpha_beta(0.5, 0.5),
                                    build_f_alpha_beta(0.3 * std::exp(Complex(0.0, 0.9)),
                                                       0.7 * std::exp(Complex(0.0, -0.4))),
                                    build_ball_coordinate(1, 2), build_ball_coordinate(2, 3),
                                    build_random(PartitionStructure{{2, 2}}, seed + 40),
                                    build_random(MatrixBallStructure{QPencil::row(2), 2},
                                                 seed + 41)};

  Index counterexamples = 0, zeros = 0, obligations = 0, skipped = 0;
  std::uint64_t s = seed + 1500;
  for (const Colligation& v : colls) {
    Rng rng(++s);
    std::vector<PointVariant> samples;
    const bool partition = v.is_partition();
    for (Index i = 0; i < samples_per; ++i) {
      Vector z = partition ? random_polydisk_point(rng, v.arity(), 1.0)
                           : random_ball_point(rng, v.arity(), 1.0);
      const double q = domain_norm(v, PointVariant(z));
      if (q <= 0.0) continue;
      samples.emplace_back(Vector(z / q));
    }
    if (partition && v.partition().dims == std::vector<Index>{1, 1}) {
      // Constructed boundary zeros: first coordinate on the circle, second a
      // pencil root inside the closed bidisk.
      for (Index k = 0; k < 50; ++k) {
        const double ang = 2.0 * M_PI * (static_cast<double>(k) + 0.37) / 50.0;
        Vector fixed = Vector::Zero(2);
        fixed(0) = Complex(std::cos(ang), std::sin(ang));
        for (const Complex& root : det_pencil_roots(v, fixed, 1, tol).roots) {
          if (std::abs(root) <= 1.0 - 1e-9) {
            Vector z = fixed;
            z(1) = root;
            samples.emplace_back(std::move(z));
          }
        }
      }
    }
    if (!partition) {
      // f = <coordinates>: unit vectors annihilating the distinguished slot.
      for (Index k = 0; k < v.arity(); ++k) {
        Vector z = Vector::Zero(v.arity());
        z(k) = 1.0;
        samples.emplace_back(std::move(z));
      }
    }

    const ContainmentReport rep = check_containments(v, samples, sched, tol, 1e-6);
    counterexamples += static_cast<Index>(rep.counterexamples.size());
    zeros += rep.boundary_zeros;
    obligations += rep.bp_obligations;
    skipped += rep.not_converged;
  }

  res.seconds = seconds_since(t0);
  res.passed = counterexamples == 0 && zeros > 0;
  std::ostringstream d;
  d << colls.size() << " colligations x " << samples_per << "+ boundary samples: " << zeros
    << " boundary zeros, " << obligations << " boundary-value obligations, " << skipped
    << " refused (no radial limit), " << counterexamples << " counterexamples";
  res.detail = d.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 10: structural property suites.

bool von_neumann_suite(std::uint64_t seed, std::ostringstream& log) {
  const ToleranceConfig tol;
  std::vector<Colligation> colls = {build_famous_example(), build_f_alpha_beta(0.5, 0.5),
                                    build_f_alpha_beta(0.3 * std::exp(Complex(0.0, 0.9)),
                                                       0.7 * std::exp(Complex(0.0, -0.4))),
                                    build_random(PartitionStructure{{2, 3}}, seed + 61),
                                    build_random(PartitionStructure{{3, 3, 3}}, seed + 62),
                                    build_ball_coordinate(1, 2),
                                    build_random(MatrixBallStructure{QPencil::row(3), 2},
                                                 seed + 63)};
  double worst = 0.0;
  std::uint64_t s = seed + 1700;
  for (const Colligation& v : colls) {
    Rng rng(++s);
    for (Index i = 0; i < 1000; ++i) {
      const Vector z = interior_point(rng, v, 1.0 - 2.0 * tol.domain_margin);
      worst = std::max(worst,
                       std::abs(eval_interior(v, PointVariant(z), tol).scalar()) - 1.0);
    }
  }
  log << "von Neumann excess " << worst << "; ";
  return worst <= 1e-10;
}

bool nc_axiom_suite(std::uint64_t seed, std::ostringstream& log) {
  const ToleranceConfig tol;
  const Colligation famous = to_matrix_ball(build_famous_example());
  const Colligation ball = build_random(MatrixBallStructure{QPencil::row(2), 2}, seed + 71);

  Rng rng(seed + 1800);
  double worst_sum = 0.0, worst_sim = 0.0;
  for (const Colligation& v : {famous, ball}) {
    for (int rep = 0; rep < 20; ++rep) {
      NCPoint x, y;
      for (Index j = 0; j < v.arity(); ++j) {
        x.blocks.push_back(rng.complex_gaussian_matrix(2, 2));
        y.blocks.push_back(rng.complex_gaussian_matrix(3, 3));
      }
      const double qx = domain_norm(v, PointVariant(x));
      const double qy = domain_norm(v, PointVariant(y));
      for (Matrix& b : x.blocks) b *= 0.8 / qx;
      for (Matrix& b : y.blocks) b *= 0.8 / qy;

      const Matrix fx = eval_interior(v, PointVariant(x), tol).value;
      const Matrix fy = eval_interior(v, PointVariant(y), tol).value;
      const Matrix fsum =
          eval_interior(v, PointVariant(NCPoint::direct_sum(x, y)), tol).value;
      Matrix expected = Matrix::Zero(5, 5);
      expected.topLeftCorner(2, 2) = fx;
      expected.bottomRightCorner(3, 3) = fy;
      worst_sum = std::max(worst_sum, (fsum - expected).norm());

      // Similarity with a mild conjugation kept inside the ball.
      Matrix g = rng.complex_gaussian_matrix(2, 2);
      g /= operator_norm(g);
      Matrix smat = Matrix::Identity(2, 2) + 0.15 * g;
      NCPoint conj = x.conjugated(smat);
      if (domain_norm(v, PointVariant(conj)) >= 1.0) continue;
      const Matrix fconj = eval_interior(v, PointVariant(conj), tol).value;
      const Matrix expected_conj = smat.inverse() * fx * smat;
      worst_sim = std::max(worst_sim, (fconj - expected_conj).norm());
    }
  }
  log << "direct-sum defect " << worst_sum << ", similarity defect " << worst_sim << "; ";
  return worst_sum <= 1e-9 && worst_sim <= 1e-9;
}

bool push_through_suite(std::uint64_t seed, std::ostringstream& log) {
  const ToleranceConfig tol;
  std::vector<Colligation> colls = {build_famous_example(),
                                    build_random(PartitionStructure{{2, 2, 2}}, seed + 81)};
  Rng rng(seed + 1900);
  double worst = 0.0;
  for (const Colligation& v : colls) {
    const Index n = v.partition().total();
    for (Index i = 0; i < 200; ++i) {
      const Vector z = random_polydisk_point(rng, v.arity(), 0.999);
      const Matrix delta = delta_matrix(v.partition(), z);
      // Two orderings of the realization formula.
      const Complex lhs =
          v.A + (v.B * delta *
                 Eigen::PartialPivLU<Matrix>(Matrix::Identity(n, n) - v.D * delta)
                     .solve(v.C.col(0)))(0);
      const Complex rhs =
          v.A + (v.B * Eigen::PartialPivLU<Matrix>(Matrix::Identity(n, n) - delta * v.D)
                           .solve(delta * v.C.col(0)))(0);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  log << "push-through defect " << worst << "; ";
  return worst <= 1e-12;
}

bool lemma_suite(std::uint64_t seed, std::ostringstream& log) {
  const ToleranceConfig tol;
  Rng rng(seed + 2000);
  double worst = 0.0;

  // Joint eigenvalues embed into row eigenvalues: commuting diagonal blocks.
  {
    const Index h = 3, d = 2;
    Matrix t1 = Matrix::Zero(h, h), t2 = Matrix::Zero(h, h);
    Vector l1(h), l2(h);
    for (Index i = 0; i < h; ++i) {
      l1(i) = rng.unit_disk(0.6);
      l2(i) = rng.unit_disk(0.6);
      t1(i, i) = l1(i);
      t2(i, i) = l2(i);
    }
    Matrix dstack(d * h, h);
    dstack << t1.adjoint(), t2.adjoint();  // D* = [t1 t2]
    const Colligation v = assemble(MatrixBallStructure{QPencil::row(d), h}, Complex(0.0),
                                   Matrix::Zero(1, h), Matrix::Zero(d * h, 1), dstack, "lemma");
    for (Index i = 0; i < h; ++i) {
      Vector w = Matrix::Identity(h, h).col(i);
      Vector stacked(d * h);
      stacked << w, w;
      Vector lambda(d);
      lambda << l1(i), l2(i);
      worst = std::max(worst, row_residual(v, lambda, stacked));
    }

    // Row similarity transport: S_j = P T_j P^{-1} certifies the same point
    // with the witness pushed through P.
    Matrix p = Matrix::Identity(h, h) + 0.4 * rng.complex_gaussian_matrix(h, h) / 2.0;
    const Matrix pinv = p.inverse();
    Matrix s1 = p * t1 * pinv, s2 = p * t2 * pinv;
    Matrix dstack_s(d * h, h);
    dstack_s << s1.adjoint(), s2.adjoint();
    const Colligation vs = assemble(MatrixBallStructure{QPencil::row(d), h}, Complex(0.0),
                                    Matrix::Zero(1, h), Matrix::Zero(d * h, 1), dstack_s,
                                    "lemma-sim");
    for (Index i = 0; i < h; ++i) {
      // T-witness for (l1_i, l2_i) is e_i stacked twice; transport by P.
      Vector w = Matrix::Identity(h, h).col(i);
      Vector transported(d * h);
      transported << p * w, p * w;
      Vector lambda(d);
      lambda << l1(i), l2(i);
      worst = std::max(worst, row_residual(vs, lambda, transported));
    }
  }

  // Block upper-triangular embedding for diagonal eigenvalues.
  double worst_block = 0.0;
  {
    const Index n1 = 2, n2 = 2;
    Matrix t = Matrix::Zero(n1 + n2, n1 + n2);
    t.topLeftCorner(n1, n1) = rng.complex_gaussian_matrix(n1, n1);
    t.topRightCorner(n1, n2) = rng.complex_gaussian_matrix(n1, n2);
    t.bottomRightCorner(n2, n2) = rng.complex_gaussian_matrix(n2, n2);

    Eigen::ComplexEigenSolver<Matrix> es(t.topLeftCorner(n1, n1));
    const Colligation v =
        assemble(PartitionStructure{{n1, n2}}, Complex(0.0), Matrix::Zero(1, n1 + n2),
                 Matrix::Zero(n1 + n2, 1), t.adjoint(), "lemma-block");
    for (Index i = 0; i < n1; ++i) {
      Vector padded = Vector::Zero(n1 + n2);
      padded.head(n1) = es.eigenvectors().col(i);
      Vector lambda(2);
      lambda << es.eigenvalues()(i), rng.complex_gaussian();  // second slot arbitrary
      const Matrix test = v.D.adjoint() - delta_matrix(v.partition(), lambda);
      worst_block = std::max(worst_block, (test * padded).norm() / padded.norm());
    }
  }

  // NC-set closure: direct sums of level-1 eigen-witnesses certify level 2.
  double worst_closure = 0.0;
  {
    const Colligation famous = to_matrix_ball(build_famous_example());
    const std::vector<Vector> zeros =
        scan_zeros(build_famous_example(), 21, -0.45, 0.25, 0.999, tol);
    if (zeros.size() >= 2) {
      for (std::size_t i = 0; i + 1 < std::min<std::size_t>(zeros.size(), 12); ++i) {
        const NCPoint sum = NCPoint::direct_sum(NCPoint::from_scalar(zeros[i]),
                                                NCPoint::from_scalar(zeros[i + 1]));
        const Witness w1 = witness(famous, PointVariant(NCPoint::from_scalar(zeros[i])), tol);
        const Witness w2 =
            witness(famous, PointVariant(NCPoint::from_scalar(zeros[i + 1])), tol);
        Vector stacked(w1.v.size() + w2.v.size());
        stacked << w1.v, w2.v;
        const Matrix test =
            lift(famous.D, 2).adjoint() - structure_matrix(famous, PointVariant(sum));
        worst_closure = std::max(worst_closure, (test * stacked).norm() / stacked.norm());
        worst_closure = std::max(worst_closure, ncq_residual(famous, sum, tol).sigma_min);
      }
    } else {
      worst_closure = 1.0;
    }
  }

  log << "lemma residuals: row " << worst << ", block " << worst_block << ", closure "
      << worst_closure;
  return worst <= 1e-9 && worst_block <= 1e-12 && worst_closure <= 1e-9;
}

CriterionResult criterion_property_suites(std::uint64_t seed) {
  CriterionResult res{10, "structural property suites", false, "", 0.0};
  const auto t0 = Clock::now();
  std::ostringstream log;
  const bool vn = von_neumann_suite(seed, log);
  const bool nc = nc_axiom_suite(seed, log);
  const bool pt = push_through_suite(seed, log);
  const bool lm = lemma_suite(seed, log);
  res.seconds = seconds_since(t0);
  res.passed = vn && nc && pt && lm;
  res.detail = log.str();
  return res;
}

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_det_identity());
  out.push_back(criterion_equivalence_sweep(seed));
  std::vector<Vector> famous_zeros;
  out.push_back(criterion_zero_scan(&famous_zeros));
  out.push_back(criterion_eigenvector_witness());
  out.push_back(criterion_level2_certificates(seed, famous_zeros));
  out.push_back(criterion_row_forward(seed));
  out.push_back(criterion_boundary_golden());
  out.push_back(criterion_inner_boundary_modulus());
  out.push_back(criterion_containment(seed));
  out.push_back(criterion_property_suites(seed));
  return out;
}

std::string format_table(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  double total = 0.0;
  for (const CriterionResult& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail
        << " (" << r.seconds << "s)\n";
    total += r.seconds;
  }
  out << (all_passed(results) ? "suite: all criteria passed" : "suite: FAILURES present")
      << " in " << total << "s\n";
  return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace colligate::acceptance
