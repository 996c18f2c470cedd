#pragma once

#include "nblab/quad.hpp"
#include "nblab/types.hpp"

namespace nblab::fracint {

// Integrals of fractional-part kernels. Between consecutive kinks the
// integrands are low-degree rationals with elementary antiderivatives, so
// panels are integrated exactly; the infinite tails are handled by the
// periodized-Bernoulli (Euler-Maclaurin) expansion plus Richardson
// extrapolation of the period-averaged remainder.

double frac(double x);
double bernoulli2_periodic(double x);  // {x}^2 - {x} + 1/6
double bernoulli3_periodic(double x);  // {x}^3 - 3/2 {x}^2 + 1/2 {x}

/// T_p(U) = int_U^infty {u} u^{-p} du, p >= 2.
double frac_tail_power(double U, int p);

/// int_0^1 {theta/t} dt = theta * T_2(theta), any theta > 0.
double chi_inner(double theta);

/// I(theta) = int_0^infty {u}{theta u} u^{-2} du for 0 < theta <= 1.
quad::QuadResult pair_unit_ratio(double theta, double tol);

/// V(a,b) = int_0^infty {a/t}{b/t} dt = max(a,b) * I(min/max).
quad::QuadResult frac_pair_integral(double a, double b, double tol);

/// int_0^infty {1/(k t)}{1/(l t)} dt, integer dilations, exact kink walk.
quad::QuadResult classical_gram_entry(int k, int l, double tol);

/// int_0^infty (chi(t) - sum_k c_k {1/(k t)})^2 dt for the classical basis.
quad::QuadResult classical_residual(const Vector& c, double tol);

}  // namespace nblab::fracint
