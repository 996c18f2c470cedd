#pragma once

#include <memory>

#include "nblab/mellin.hpp"
#include "nblab/solver.hpp"
#include "nblab/specfun.hpp"
#include "nblab/types.hpp"

namespace nblab::invgamma {

/// Basis g_k^x(t) = E{Z_k/t}, Z_k = Y/X_k, X_k ~ Gamma(k,1), k = 1..n.
struct InvGammaBasis {
  RhoSpec y;
  int n = 1;
};

/// g_k^x(t) through the smoothed representation
///   (1/((k-1)! t^k)) int_0^inf rho(x) x^{k-1} e^{-x/t} dx.
double gx(int k, double t, const RhoSpec& y);

/// A(u) = int_0^inf rho(u t) rho((1-u) t) dt; diverges like log(1/(u(1-u))) at the ends.
double a_value(double u, const RhoSpec& y, double tol = 1e-9);

/// Cached A on a fixed panel grid of (0,1), with fitted log-model slivers at the ends.
class AFunction {
 public:
  AFunction(const RhoSpec& y, double tol);
  /// int_0^1 B_n^{m+n}(u) A(u) du  (the Gram entry <g_{n+1}, g_{m+1}>).
  double bernstein_integral(int n, int m) const;
  const RhoSpec& y() const { return y_; }

 private:
  RhoSpec y_;
  std::vector<double> u_, w_, a_;  // nodes, dt-weights, A values
  double delta_ = 0.0;             // sliver width at each end
  double alpha0_ = 0.0, beta0_ = 0.0;  // A ~ alpha + beta log(1/u) near 0
  double alpha1_ = 0.0, beta1_ = 0.0;  // mirrored model near 1
};

/// Gram entry <g_{n+1}^x, g_{m+1}^x> = int_0^1 B_n^{m+n}(u) A(u) du (paper indexing).
double gram_entry(int n, int m, const AFunction& a);
double gram_entry(int n, int m, const RhoSpec& y, double tol = 1e-9);

/// |phi(1/2+it)|^2 with phi(s) = zeta(s)/s * E[Y^s] * Gamma(1-s).
double mellin_weight(double t, const RhoSpec& y);
Complex phi(Complex s, const RhoSpec& y);

/// b_k = <chi, g_k^x> = int_0^1 g_k^x(t) dt.
double rhs_entry(int k, const RhoSpec& y, double tol = 1e-9);

/// Time-domain system: Bernstein-formula Gram plus quadrature right-hand side.
GramSystem build_system(int n, const RhoSpec& y, double tol = 1e-9);

/// Mellin-route machinery shared with the diagnostics.
struct MellinSide {
  mellin::LineGrid grid;
  GramSystem pochhammer_system(int n) const;  // basis P_{k-1}(s), k = 1..n
  DistanceReport distance(int n, bool orthogonalized) const;
};
MellinSide build_mellin_side(const RhoSpec& y, int n_max);

/// E[Z_k^alpha] = E[Y^alpha] Gamma(k-alpha)/Gamma(k); +inf when k <= alpha.
double moment_z(int k, int alpha, const RhoSpec& y);

/// Dual-route distance: time-domain solve, Mellin least squares as cross-check.
DistanceReport distance(int n, const RhoSpec& y, double tol = 1e-9,
                        double tail_threshold = 10.0);

}  // namespace nblab::invgamma
