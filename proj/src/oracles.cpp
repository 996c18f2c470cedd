#include "nblab/oracles.hpp"

#include <cmath>
#include <vector>

namespace nblab::oracles {

Complex zeta_eta(Complex s) {
  if (s.real() <= 0.0) throw DomainError("zeta_eta: need Re(s) > 0");
  const double t = std::abs(s.imag());
  // Borwein's error bound ~ 3 (1+2|t|) e^{pi|t|/2} / ((3+sqrt 8)^n |1-2^{1-s}|)
  const double log_denom = std::log(3.0 + std::sqrt(8.0));
  int n = int((0.5 * constants::pi * t + std::log(3.0 * (1.0 + 2.0 * t)) + 40.0) / log_denom) + 6;
  n = std::max(n, 24);

  std::vector<double> d(n + 1);
  double term = 1.0 / double(n);  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i=0
  double acc = term;
  d[0] = double(n) * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * double(n + i - 1) * double(n - i + 1) /
            (double(2 * i - 1) * double(2 * i));
    acc += term;
    d[i] = double(n) * acc;
  }

  Complex sum(0.0, 0.0);
  double sign = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += sign * (d[k] - d[n]) * std::exp(-s * std::log(double(k + 1)));
    sign = -sign;
  }
  const Complex pref = Complex(1.0, 0.0) -
                       std::exp((Complex(1.0, 0.0) - s) * std::log(2.0));
  return -sum / (d[n] * pref);
}

namespace {

// sum_{m > M} m^{-p} by Euler-Maclaurin (M large, p >= 2)
double zeta_tail(double p, double M) {
  return std::pow(M, 1.0 - p) / (p - 1.0) - 0.5 * std::pow(M, -p) +
         p / 12.0 * std::pow(M, -p - 1.0) -
         p * (p + 1.0) * (p + 2.0) / 720.0 * std::pow(M, -p - 3.0);
}

}  // namespace

double one_minus_euler_gamma() {
  // gamma = sum_m [1/m - log(1+1/m)]; the target is 1 - gamma.
  // Long-double accumulation: each term is a near-cancellation of two O(1/m) values.
  const int M = 20000;
  long double sum = 0.0L;
  for (int m = M; m >= 1; --m) sum += 1.0L / m - std::log1p(1.0L / m);
  sum += 0.5L * zeta_tail(2, M) - zeta_tail(3, M) / 3.0L + 0.25L * zeta_tail(4, M) -
         0.2L * zeta_tail(5, M) + zeta_tail(6, M) / 6.0L;
  return 1.0 - double(sum);
}

double log2pi_minus_gamma() {
  // int_0^1 {1/t}^2 dt = sum_m [(2m+1)/(m+1) - 2m log(1+1/m)]
  //                    = sum_m [1/(3m^2) - 1/(2m^3) + 3/(5m^4) - 2/(3m^5) + ...]
  const int M = 20000;
  long double sum = 0.0L;
  for (int m = M; m >= 1; --m) {
    long double dm = m;
    sum += (2.0L * dm + 1.0L) / (dm + 1.0L) - 2.0L * dm * std::log1p(1.0L / dm);
  }
  sum += zeta_tail(2, M) / 3.0L - 0.5L * zeta_tail(3, M) + 0.6L * zeta_tail(4, M) -
         2.0L / 3.0L * zeta_tail(5, M) + 5.0L / 7.0L * zeta_tail(6, M);
  return double(sum) + 1.0;  // + int_1^infty t^{-2} dt
}

double gamma_p_reference(int k, double x) {
  if (x <= 0.0) return 0.0;
  double term = 1.0, q = 1.0;
  for (int j = 1; j < k; ++j) {
    term *= x / double(j);
    q += term;
  }
  return -std::expm1(-x + std::log(q));
}

}  // namespace nblab::oracles
