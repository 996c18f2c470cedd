#include "nblab/family_classical.hpp"

#include "nblab/fracint.hpp"

namespace nblab::classical {

double gram_entry(int k, int l, double tol, double* err_out) {
  auto r = fracint::classical_gram_entry(k, l, tol);
  if (err_out) *err_out = r.error_estimate;
  return r.value;
}

double rhs_entry(int k) {
  if (k < 1) throw DomainError("rhs_entry: k must be >= 1");
  return fracint::chi_inner(1.0 / double(k));
}

GramSystem build_system(int n, double tol) {
  if (n < 1) throw DomainError("classical system: n must be >= 1");
  GramSystem sys;
  sys.family = "classical";
  sys.G.resize(n, n);
  sys.entry_err.resize(n, n);
  sys.b.resize(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = k; l <= n; ++l) {
      double err = 0.0;
      double v = gram_entry(k, l, tol, &err);
      sys.G(k - 1, l - 1) = v;
      sys.G(l - 1, k - 1) = v;  // symmetric by construction
      sys.entry_err(k - 1, l - 1) = err;
      sys.entry_err(l - 1, k - 1) = err;
    }
    sys.b[k - 1] = rhs_entry(k);
  }
  return sys;
}

DistanceReport distance(int n, double tol) {
  GramSystem sys = build_system(n, tol);
  DistanceReport rep = solver::distance_from_system(sys, 1.0);
  rep.route = "gram-quadrature";
  rep.crosscheck_route = "residual-quadrature";
  auto resid = fracint::classical_residual(rep.coefficients, tol);
  rep.d2_crosscheck = resid.value;
  return rep;
}

}  // namespace nblab::classical
