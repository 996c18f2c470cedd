#pragma once

#include "nblab/solver.hpp"
#include "nblab/types.hpp"

namespace nblab::classical {

/// Basis e_k(t) = {1/(k t)}, k = 1..n.
struct ClassicalBasis {
  int n = 1;
};

/// G_{k,l} = int_0^inf {1/(kt)}{1/(lt)} dt (exact kink walk + extrapolated tail).
double gram_entry(int k, int l, double tol = 1e-10, double* err_out = nullptr);

/// b_k = int_0^1 {1/(kt)} dt.
double rhs_entry(int k);

GramSystem build_system(int n, double tol = 1e-10);

/// Solve, then re-evaluate the squared residual by direct quadrature as the
/// cross-check route (n <= 12 keeps the period-aligned tail).
DistanceReport distance(int n, double tol = 1e-10);

}  // namespace nblab::classical
