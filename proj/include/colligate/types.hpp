#ifndef COLLIGATE_TYPES_HPP
#define COLLIGATE_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace colligate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Thrown when block shapes or pencil arities do not line up.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a point lies outside the domain an operation accepts.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown on malformed input files; message carries the offending path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a dense decomposition cannot deliver a usable result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ToleranceConfig {
  double rank_tol = 1e-10;      // relative singular-value cutoff
  double residual_tol = 1e-8;   // certificate threshold
  double domain_margin = 1e-6;  // strict-interior band: require ||Q(z)|| <= 1 - margin

  void validate() const {
    if (!(0.0 < rank_tol && rank_tol < residual_tol && residual_tol < 1.0))
      throw DomainError("ToleranceConfig: requires 0 < rank_tol < residual_tol < 1");
    if (!(0.0 < domain_margin && domain_margin < 1.0))
      throw DomainError("ToleranceConfig: domain_margin must lie in (0,1)");
  }
};

}  // namespace colligate

#endif  // COLLIGATE_TYPES_HPP
