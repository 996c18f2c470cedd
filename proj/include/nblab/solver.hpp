#pragma once

#include <optional>
#include <string>

#include "nblab/specfun.hpp"
#include "nblab/types.hpp"

namespace nblab {

/// Symmetric system G c = b for a basis family, with per-entry error metadata.
struct GramSystem {
  Matrix G;
  Vector b;
  std::string family;
  Matrix entry_err;  // entrywise quadrature error estimates (may be empty)

  int n() const { return int(G.rows()); }
};

struct TailDiagnostic {
  double sum_k_ck2 = 0.0;   // sum_k k c_k^2
  double threshold = 0.0;   // M
  double weighted_sum = 0;  // sum_k k c_k^2 P(Z_k >= M)
};

struct DistanceReport {
  int n = 0;
  Vector coefficients;
  double d2 = 0.0;
  std::optional<double> d2_crosscheck;
  double condition_estimate = 0.0;
  std::optional<TailDiagnostic> tail;
  bool clamped = false;   // d2 was slightly negative and clamped to 0
  bool degraded = false;  // factorization needed a diagonal shift
  std::string family;
  std::string route;
  std::string crosscheck_route;
};

namespace solver {

struct SpdSolution {
  Vector c;
  double condition_estimate = 0.0;
  bool degraded = false;
  double residual_norm = 0.0;  // ||G c - b|| after refinement
};

/// Cholesky with one step of iterative refinement; diagonal shift retry on
/// failure (degraded flag). Throws NotPositiveDefiniteError with the leading
/// minor index when the shift does not rescue the factorization.
SpdSolution solve_spd(const GramSystem& sys);

/// D^2 = phi_norm2 - b.c with clamping of tiny negatives.
DistanceReport distance_from_system(const GramSystem& sys, double phi_norm2);

/// Number of times distance_from_system clamped a negative distance (global).
long clamp_count();

/// P(Z_k >= M) for Z_k = Y / X_k, X_k ~ Gamma(k,1).
double tail_probability(int k, const RhoSpec& y, double M);

/// sum_k k c_k^2 P(Z_k >= M).
TailDiagnostic tail_diagnostic(const Vector& c, const RhoSpec& y, double M);

}  // namespace solver
}  // namespace nblab
