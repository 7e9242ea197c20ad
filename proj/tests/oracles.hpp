// Closed-form rational oracles used to cross-check realization evaluation.
// These live test-side only and never touch the library's resolvent path.

#ifndef COLLIGATE_TESTS_ORACLES_HPP
#define COLLIGATE_TESTS_ORACLES_HPP

#include "colligate/types.hpp"

namespace colligate::oracles {

inline Complex famous(const Complex& z, const Complex& w) {
  return (2.0 * z * w - z - w) / (2.0 - z - w);
}

inline Complex f_alpha_beta(const Complex& alpha, const Complex& beta, const Complex& z,
                            const Complex& w) {
  return (z * w - alpha * z - beta * w) /
         (1.0 - std::conj(beta) * z - std::conj(alpha) * w);
}

}  // namespace colligate::oracles

#endif  // COLLIGATE_TESTS_ORACLES_HPP
