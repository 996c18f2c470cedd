#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "nblab/errors.hpp"

namespace nblab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace constants {
inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double sqrt_pi = 1.7724538509055160272981674833411452;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double log_2pi = 1.8378770664093454835606594728112353;
// ordinate of the first nontrivial zeta zero
inline constexpr double zeta_zero_1 = 14.134725141734693790457251983562470;
}  // namespace constants

inline bool in_strip(Complex s) { return s.real() > 0.0 && s.real() < 1.0; }

inline void require_strip(Complex s, const char* where) {
  if (!in_strip(s))
    throw DomainError(std::string(where) + ": argument outside the strip 0 < Re(s) < 1");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError(std::string(where) + ": non-finite argument");
}

/// Compensated (Kahan) accumulator. Used where Gram systems lose digits.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

inline double kahan_dot(const Vector& a, const Vector& b) {
  KahanSum acc;
  for (Eigen::Index i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
  return acc.value();
}

}  // namespace nblab
