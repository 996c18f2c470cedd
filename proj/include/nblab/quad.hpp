#pragma once

#include <functional>
#include <vector>

#include "nblab/types.hpp"

namespace nblab::quad {

enum class Decay {
  None,
  Algebraic,    // |f| ~ t^{-p}, param = p > 1
  Gaussian,     // |f| ~ e^{-t^2}
  Exponential,  // |f| ~ e^{-lambda t}, param = lambda
};

template <class Scalar>
struct Integrand {
  std::function<Scalar(double)> f;
  std::vector<double> breakpoints;  // strictly increasing, interior kinks
  Decay decay = Decay::None;
  double decay_param = 0.0;
};

using RealIntegrand = Integrand<double>;
using ComplexIntegrand = Integrand<Complex>;

template <class Scalar>
struct QuadResultT {
  Scalar value{};
  double error_estimate = 0.0;
  long evaluations = 0;
  double truncation_bound = 0.0;
};

using QuadResult = QuadResultT<double>;
using ComplexQuadResult = QuadResultT<Complex>;

struct Options {
  int max_panels = 8000;
  int endpoint_levels = 0;  // geometric 2^{-j} pre-refinement at both ends
};

/// Adaptive Gauss-Kronrod 7/15 over a finite interval, split at breakpoints.
QuadResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                              const std::vector<double>& breakpoints, double tol,
                              const Options& opt = {});
ComplexQuadResult integrate_interval(const std::function<Complex(double)>& f, double a,
                                     double b, const std::vector<double>& breakpoints,
                                     double tol, const Options& opt = {});

/// Integral over (0,1) with endpoint refinement levels 2^{-j}.
QuadResult integrate_unit(const RealIntegrand& f, double tol);
ComplexQuadResult integrate_unit(const ComplexIntegrand& f, double tol);

/// Integral over (0,infty): splits at 1, maps or truncates the tail per decay hint.
QuadResult integrate_semiinf(const RealIntegrand& f, double tol);
ComplexQuadResult integrate_semiinf(const ComplexIntegrand& f, double tol);

/// Integral over the whole line. When `even` is declared, integrates [0,infty)
/// and doubles. The 1/(2 pi) Plancherel factor is applied only on request.
QuadResult integrate_line(const RealIntegrand& f, double tol, bool even,
                          bool plancherel = false);

}  // namespace nblab::quad
