#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nblab/types.hpp"

namespace nblab::mellin {

// Machinery for least squares on the critical line s = 1/2 + it.
//
// Both basis families have Mellin symbols of the form  (polynomial in it) * phi(s),
// so the squared distance to chi reduces to a weighted polynomial least-squares
// problem under nu(dt) = |phi(1/2+it)|^2 dt / (2 pi), with the cross data carried
// by chi_w(t) = conj(phi(s)) / s  (smooth across zeta zeros; 1/(s phi) never forms).

/// Discretization of the line measure: paired +/- t Gauss-Kronrod nodes.
struct LineGrid {
  std::vector<double> t;    // nodes over [-T, T]
  std::vector<double> dw;   // plain dt quadrature weights
  std::vector<double> wv;   // weight values w(t_i)
  std::vector<Complex> xv;  // chi_w(t_i); empty when not requested
  double T = 0.0;
  long weight_evals = 0;

  /// m_j = (1/2pi) int t^j w(t) dt  (no evenness assumed; odd j comes out ~0).
  double moment(int j) const;
  /// mu_j = (1/2pi) int t^j * (Re chi_w if j even, Im chi_w if j odd) dt.
  double cross_moment(int j) const;
};

LineGrid build_line_grid(const std::function<double(double)>& weight,
                         const std::function<Complex(double)>& chi_w, double T, int jmax,
                         double rel_tol);

/// b_j for the symbol basis (it)^j: b_j = -(-1)^{floor(j/2)} mu_j.
double symbol_rhs(const LineGrid& grid, int j);

/// Three-term recurrence of the orthonormal polynomials of the discrete measure.
struct Recurrence {
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[0] = total mass
  int usable = 0;            // entries before a nonpositive beta truncated the run
};

Recurrence stieltjes(const LineGrid& grid, int n);

struct OrthoDistance {
  double d2 = 1.0;
  std::vector<double> coeffs;  // projections onto the orthonormal polynomials
  int usable = 0;
};

/// D_n^2 = 1 - sum_{j<n} <target, p_j>^2 via the orthonormal polynomials.
OrthoDistance ortho_distance(const LineGrid& grid, const Recurrence& rec, int n);

}  // namespace nblab::mellin
