#pragma once

#include <vector>

#include "nblab/types.hpp"

namespace nblab {

/// Law of the positive random factor Y in Z_k = Y / X_k.
/// DiracOne is the point mass at 1; Exponential carries its rate lambda.
struct RhoSpec {
  enum class Kind { DiracOne, Exponential };
  Kind kind = Kind::DiracOne;
  double lambda = 1.0;

  static RhoSpec dirac() { return {Kind::DiracOne, 1.0}; }
  static RhoSpec exponential(double lambda);
  bool is_dirac() const { return kind == Kind::DiracOne; }
};

/// P_k(s) = (k-s)(k-1-s)...(1-s), the polynomial with Gamma(k-s) = P_{k-1}(s) Gamma(1-s).
struct PochhammerPoly {
  int degree = 0;                // k
  std::vector<double> roots;     // 1, 2, ..., k

  explicit PochhammerPoly(int k);
  Complex eval(Complex s) const;
  /// Coefficients of P_k(1/2 + x) in x, ascending degree (real, exact small integers over 2^k).
  std::vector<double> centered_coefficients() const;
};

namespace specfun {

/// Complex Gamma via the 15-term Lanczos approximation, reflection for Re(s) < 1/2.
Complex gamma(Complex s);

/// Riemann zeta on the critical strip 0 < Re(s) < 1 via Euler-Maclaurin.
Complex zeta_strip(Complex s);

/// Riemann Xi(t) = xi(1/2 + it); real and even in t.
double xi(double t);

/// Same evaluation, returning the (tiny) imaginary residue for diagnostics.
struct XiDetail {
  double value;
  double imag_residue;
};
XiDetail xi_detail(double t);

/// Mellin transform of the fractional part: -zeta(s)/s on the strip.
Complex mellin_frac(Complex s);

Complex pochhammer(int k, Complex s);

/// rho(t) = E{Y/t}. DiracOne: {1/t}. Exponential(lambda): 1/(lambda t) - 1/(e^{lambda t}-1),
/// with a Bernoulli-series branch below lambda*t = 1e-3 to dodge cancellation.
double rho(const RhoSpec& spec, double t);

/// Gamma(s)Gamma(k-s)/Gamma(k), the Mellin transform of x -> (1+x)^{-k}.
Complex alouin_mellin(int k, Complex s);

/// Regularized lower incomplete gamma P(k, x) for integer k >= 1.
double gamma_p(int k, double x);

/// E[Y^s] for the supported Y laws (DiracOne -> 1, Exponential -> Gamma(1+s) lambda^{-s}).
Complex moment_y(const RhoSpec& spec, Complex s);

}  // namespace specfun
}  // namespace nblab
