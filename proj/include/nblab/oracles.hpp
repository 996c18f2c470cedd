#pragma once

#include "nblab/types.hpp"

namespace nblab::oracles {

/// zeta(s) on Re(s) > 0 through the globally convergent alternating (eta) series,
/// accelerated with Borwein's Chebyshev weights. Independent of the
/// Euler-Maclaurin path in specfun; this is the cross-validation reference.
Complex zeta_eta(Complex s);

/// 1 - gamma = int_0^1 {1/t} dt, from the partial sums of
/// sum_m (1/m - log(1+1/m)) with an asymptotic tail.
double one_minus_euler_gamma();

/// log(2 pi) - gamma = int_0^infty {1/t}^2 dt, same style.
double log2pi_minus_gamma();

/// Regularized lower incomplete gamma for integer shape via the
/// complementary Poisson sum (reference for specfun::gamma_p).
double gamma_p_reference(int k, double x);

}  // namespace nblab::oracles
