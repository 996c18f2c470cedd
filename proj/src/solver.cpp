#include "nblab/solver.hpp"

#include <atomic>
#include <cmath>

#include <Eigen/Cholesky>

namespace nblab::solver {
namespace {

std::atomic<long> g_clamp_count{0};

// 1-norm estimate of ||A^{-1}|| by the Hager power method on the factorization.
double inv_norm1_estimate(const Eigen::LLT<Matrix>& llt, int n) {
  Vector x = Vector::Constant(n, 1.0 / n);
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    Vector y = llt.solve(x);
    double ynorm = y.lpNorm<1>();
    Vector xi(n);
    for (int i = 0; i < n; ++i) xi[i] = (y[i] >= 0.0) ? 1.0 : -1.0;
    Vector z = llt.solve(xi);  // symmetric: A^{-T} = A^{-1}
    int jmax = 0;
    double zmax = 0.0;
    for (int i = 0; i < n; ++i)
      if (std::abs(z[i]) > zmax) {
        zmax = std::abs(z[i]);
        jmax = i;
      }
    est = std::max(est, ynorm);
    if (zmax <= z.dot(x)) break;
    x.setZero();
    x[jmax] = 1.0;
  }
  return est;
}

// leading minor index (1-based) of the first non-positive pivot
int first_bad_minor(const Matrix& A) {
  const int n = int(A.rows());
  for (int k = 1; k <= n; ++k) {
    Eigen::LLT<Matrix> llt(A.topLeftCorner(k, k));
    if (llt.info() != Eigen::Success) return k;
  }
  return n;
}

}  // namespace

SpdSolution solve_spd(const GramSystem& sys) {
  const int n = sys.n();
  if (n < 1) throw DomainError("solve_spd: empty system");

  // enforce symmetry; asymmetry beyond entry tolerances is a structure bug
  double max_asym = (sys.G - sys.G.transpose()).cwiseAbs().maxCoeff();
  double scale = sys.G.cwiseAbs().maxCoeff();
  double asym_tol = 1e-12 * std::max(scale, 1.0);
  if (sys.entry_err.size() > 0) asym_tol += 2.0 * sys.entry_err.maxCoeff();
  if (max_asym > asym_tol)
    throw StructureViolationError("solve_spd: Gram matrix asymmetry " +
                                  std::to_string(max_asym) + " beyond entry tolerance");
  Matrix A = 0.5 * (sys.G + sys.G.transpose());

  SpdSolution sol;
  Eigen::LLT<Matrix> llt(A);
  if (llt.info() != Eigen::Success) {
    double shift = 1e-14 * A.trace() / n;
    Matrix As = A + shift * Matrix::Identity(n, n);
    llt.compute(As);
    sol.degraded = true;
    if (llt.info() != Eigen::Success)
      throw NotPositiveDefiniteError("solve_spd: not positive definite beyond shift",
                                     first_bad_minor(A));
  }

  Vector c = llt.solve(sys.b);
  // one step of iterative refinement with compensated residual
  Vector r(n);
  for (int i = 0; i < n; ++i) {
    KahanSum acc;
    acc.add(-sys.b[i]);
    for (int j = 0; j < n; ++j) acc.add(A(i, j) * c[j]);
    r[i] = -acc.value();  // b - A c
  }
  c += llt.solve(r);
  for (int i = 0; i < n; ++i) {
    KahanSum acc;
    acc.add(-sys.b[i]);
    for (int j = 0; j < n; ++j) acc.add(A(i, j) * c[j]);
    r[i] = acc.value();
  }
  sol.residual_norm = r.norm();
  sol.c = c;

  double norm1 = 0.0;
  for (int j = 0; j < n; ++j) norm1 = std::max(norm1, A.col(j).lpNorm<1>());
  sol.condition_estimate = norm1 * inv_norm1_estimate(llt, n);
  return sol;
}

long clamp_count() { return g_clamp_count.load(); }

DistanceReport distance_from_system(const GramSystem& sys, double phi_norm2) {
  SpdSolution sol = solve_spd(sys);
  DistanceReport rep;
  rep.n = sys.n();
  rep.family = sys.family;
  rep.coefficients = sol.c;
  rep.condition_estimate = sol.condition_estimate;
  rep.degraded = sol.degraded;
  double d2 = phi_norm2 - kahan_dot(sys.b, sol.c);
  if (d2 < 0.0) {
    if (d2 < -1e-8 * std::max(1.0, phi_norm2))
      throw NumericalError("distance_from_system: negative distance beyond tolerance");
    d2 = 0.0;
    rep.clamped = true;
    ++g_clamp_count;
  }
  rep.d2 = d2;
  return rep;
}

double tail_probability(int k, const RhoSpec& y, double M) {
  if (k < 1) throw DomainError("tail_probability: k must be >= 1");
  if (!(M > 0.0)) throw DomainError("tail_probability: M must be positive");
  if (y.is_dirac()) {
    // P(1/X_k >= M) = P(X_k <= 1/M)
    return specfun::gamma_p(k, 1.0 / M);
  }
  // P(Y >= M X_k) = E[e^{-lambda M X_k}] = (1 + lambda M)^{-k}
  return std::pow(1.0 + y.lambda * M, -double(k));
}

TailDiagnostic tail_diagnostic(const Vector& c, const RhoSpec& y, double M) {
  TailDiagnostic d;
  d.threshold = M;
  for (int k = 1; k <= int(c.size()); ++k) {
    double kc2 = double(k) * c[k - 1] * c[k - 1];
    d.sum_k_ck2 += kc2;
    d.weighted_sum += kc2 * tail_probability(k, y, M);
  }
  return d;
}

}  // namespace nblab::solver
