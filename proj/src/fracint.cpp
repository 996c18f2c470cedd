#include "nblab/fracint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nblab/oracles.hpp"

namespace nblab::fracint {

double frac(double x) { return x - std::floor(x); }

double bernoulli2_periodic(double x) {
  double f = frac(x);
  return f * f - f + 1.0 / 6.0;
}

double bernoulli3_periodic(double x) {
  double f = frac(x);
  return ((f - 1.5) * f + 0.5) * f;
}

namespace {

// int_{u0}^{u1} (u - A) u^{-p} du, evaluated as a stable difference
double seg_single(double u0, double u1, double A, int p) {
  const double du = u1 - u0;
  if (p == 2) return std::log1p(du / u0) - A * du / (u0 * u1);
  double p1 = double(p - 1), p2 = double(p - 2);
  return (std::pow(u0, -p2) - std::pow(u1, -p2)) / p2 +
         A * (std::pow(u1, -p1) - std::pow(u0, -p1)) / p1;
}

}  // namespace

double frac_tail_power(double U, int p) {
  if (U <= 0.0 || p < 2) throw DomainError("frac_tail_power: need U > 0, p >= 2");
  double U1 = std::ceil(U) + 256.0;
  double total = 0.0;
  // exact unit segments [U, U1]
  double u0 = U;
  while (u0 < U1 - 0.5) {
    double u1 = std::floor(u0) + 1.0;
    if (u1 <= u0) u1 = u0 + 1.0;
    u1 = std::min(u1, U1);
    double A = std::floor(0.5 * (u0 + u1));
    total += seg_single(u0, u1, A, p);
    u0 = u1;
  }
  // closed tail at integer U1: U1^{1-p}/(2(p-1)) - U1^{-p}/12 + p(p+1) U1^{-p-2}/720
  double ip = double(p);
  total += std::pow(U1, 1.0 - ip) / (2.0 * (ip - 1.0)) - std::pow(U1, -ip) / 12.0 +
           ip * (ip + 1.0) * std::pow(U1, -ip - 2.0) / 720.0;
  return total;
}

double chi_inner(double theta) {
  if (!(theta > 0.0)) throw DomainError("chi_inner: theta must be positive");
  return theta * frac_tail_power(theta, 2);
}

namespace {

// ---- pair kernels {u}{theta u} u^{-2} ---------------------------------------

// int_{u0}^{u1} (u-A)(theta u - B) u^{-2} du
//   integrand = theta - (A theta + B)/u + A B / u^2, stable segment difference
inline double seg_pair(double u0, double u1, double A, double B, double theta) {
  const double du = u1 - u0;
  return theta * du - (A * theta + B) * std::log1p(du / u0) + A * B * du / (u0 * u1);
}

// exact integral of {u}{theta u} u^{-2} over [lo, hi], kinks at integers and n/theta
double pair_segments(double theta, double lo, double hi, long* segs) {
  KahanSum total;
  double u0 = lo;
  long m = long(std::floor(lo)) + 1;
  long n = long(std::floor(theta * lo)) + 1;
  while (u0 < hi) {
    double cand_int = double(m);
    double cand_th = double(n) / theta;
    double u1 = std::min(hi, std::min(cand_int, cand_th));
    if (u1 > u0) {
      double mid = 0.5 * (u0 + u1);
      double A = std::floor(mid);
      double B = std::floor(theta * mid);
      total.add(seg_pair(u0, u1, A, B, theta));
      if (segs) ++*segs;
    }
    double eps = 1e-12 * std::max(1.0, u1);
    if (cand_int <= u1 + eps) ++m;
    if (cand_th <= u1 + eps) ++n;
    u0 = u1;
  }
  return total.value();
}

// continued-fraction approximation of theta in (0,1]: best convergent with
// q <= qmax and |theta - p/q| <= tol/q
bool rational_approx(double theta, long qmax, double tol, long* p_out, long* q_out) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long bp = 0, bq = 0;
  double x = theta;
  for (int it = 0; it < 64; ++it) {
    double fa = std::floor(x);
    long a = long(fa);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > qmax || q2 <= 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (p1 > 0 && q1 > 0 && std::abs(theta - double(p1) / double(q1)) <= tol / double(q1)) {
      bp = p1;
      bq = q1;
      break;  // convergents only improve; the first acceptable is the smallest q
    }
    double r = x - fa;
    if (r < 1e-15) break;
    x = 1.0 / r;
  }
  if (bq <= 0) return false;
  *p_out = bp;
  *q_out = bq;
  return true;
}

}  // namespace

quad::QuadResult pair_unit_ratio(double theta, double tol) {
  if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("pair_unit_ratio: need 0 < theta <= 1");

  long p = 0, q = 0;
  bool exact_cf = rational_approx(theta, 512, 1e-9, &p, &q);

  long segs = 0;
  quad::QuadResult r;
  if (exact_cf) {
    // near-rational ratio: period-aligned Richardson on the remainder
    double mean = 0.25 + 1.0 / (12.0 * double(p) * double(q));
    double base = std::max(600.0, std::pow(1.0 / std::max(tol, 1e-14), 0.25));
    double U1 = double(q) * std::ceil(base / double(q));
    double body = pair_segments(theta, 1.0, U1, &segs);
    double S1 = pair_segments(theta, U1, 2.0 * U1, &segs);
    double S2 = pair_segments(theta, 2.0 * U1, 4.0 * U1, &segs);
    double s1p = S1 - mean / (2.0 * U1);
    double s2p = S2 - mean / (4.0 * U1);
    double y = 16.0 / 7.0 * (s1p - 4.0 * s2p);
    double x = 4.0 / 3.0 * (s1p - 7.0 / 8.0 * y);
    double rem = mean / (4.0 * U1) + x / 16.0 + y / 64.0;
    r.value = theta + body + S1 + S2 + rem;
    r.error_estimate = std::abs(y) / 32.0 + 4e-16 * double(segs);
  } else {
    // Exact split of the remainder past an integer cutoff U1:
    //   int_U1^inf {u}{tu}/u^2 = (t/2) T_2(t U1)            [{u} -> 1/2 part, exact]
    //                          - {t U1}/(12 U1^2)            [boundary, B2~ at integer U1]
    //                          + (t^2/2) sum_{n > t U1} B2~(n/t)/n^2   [kink jumps]
    //                          + O(1/U1^3)
    const double U1 = 4000.0;
    const int N = 60000;
    double body = pair_segments(theta, 1.0, U1, &segs);
    double tail_half = 0.5 * theta * frac_tail_power(theta * U1, 2);
    double boundary = -frac(theta * U1) / (12.0 * U1 * U1);
    int n0 = int(std::floor(theta * U1)) + 1;
    double jump_sum = 0.0;
    for (int n = N; n >= n0; --n)
      jump_sum += bernoulli2_periodic(double(n) / theta) / (double(n) * double(n));
    // beyond N: a surviving near-resonance p/q gives B2~(n/theta) periodic mean 1/(6 p^2)
    double mean_tail = 0.0;
    if (rational_approx(theta, 4096, 0.1 / double(N), &p, &q))
      mean_tail = 1.0 / (6.0 * double(p) * double(p)) / double(N);
    r.value = theta + body + tail_half + boundary +
              0.5 * theta * theta * (jump_sum + mean_tail);
    r.error_estimate = 0.1 / (U1 * U1 * U1) + theta * theta / (6.0 * N) +
                       4e-16 * double(segs + N);
  }
  r.evaluations = segs;
  (void)tol;
  return r;
}

quad::QuadResult frac_pair_integral(double a, double b, double tol) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("frac_pair_integral: dilations must be positive");
  double hi = std::max(a, b), lo = std::min(a, b);
  quad::QuadResult r = pair_unit_ratio(lo / hi, tol / hi);
  r.value *= hi;
  r.error_estimate *= hi;
  return r;
}

namespace {

// int_{u0}^{u1} (u/k - A)(u/l - B) u^{-2} du as a stable difference
inline double seg_kl(double u0, double u1, double A, double B, double k, double l) {
  const double du = u1 - u0;
  return du / (k * l) - (B / k + A / l) * std::log1p(du / u0) + A * B * du / (u0 * u1);
}

double kl_segments(int k, int l, double lo, double hi, long* segs) {
  KahanSum total;
  double u0 = lo;
  long m = long(std::floor(lo / k)) + 1;
  long n = long(std::floor(lo / l)) + 1;
  while (u0 < hi) {
    double cand_k = double(m) * k;
    double cand_l = double(n) * l;
    double u1 = std::min(hi, std::min(cand_k, cand_l));
    if (u1 > u0) {
      double mid = 0.5 * (u0 + u1);
      double A = std::floor(mid / k);
      double B = std::floor(mid / l);
      total.add(seg_kl(u0, u1, A, B, k, l));
      if (segs) ++*segs;
    }
    if (cand_k <= u1) ++m;
    if (cand_l <= u1) ++n;
    u0 = u1;
  }
  return total.value();
}

}  // namespace

quad::QuadResult classical_gram_entry(int k, int l, double tol) {
  if (k < 1 || l < 1) throw DomainError("classical_gram_entry: indices must be >= 1");
  const double g = double(std::gcd(k, l));
  const double mean = 0.25 + g * g / (12.0 * double(k) * double(l));
  const long L = std::lcm(k, l);
  const double base = std::max(2400.0, 0.8 / std::pow(std::max(tol, 1e-13), 0.25));
  const double U1 = double(L) * std::ceil(base / double(L));

  long segs = 0;
  const double lo = double(std::min(k, l));
  double total = lo / (double(k) * double(l));  // (0, min(k,l)) region, integrand = 1/(kl)
  total += kl_segments(k, l, lo, U1, &segs);
  double S1 = kl_segments(k, l, U1, 2.0 * U1, &segs);
  double S2 = kl_segments(k, l, 2.0 * U1, 4.0 * U1, &segs);
  double s1p = S1 - mean / (2.0 * U1);
  double s2p = S2 - mean / (4.0 * U1);
  double y = 16.0 / 7.0 * (s1p - 4.0 * s2p);
  double x = 4.0 / 3.0 * (s1p - 7.0 / 8.0 * y);
  quad::QuadResult r;
  r.value = total + S1 + S2 + mean / (4.0 * U1) + x / 16.0 + y / 64.0;
  r.error_estimate = std::abs(y) / 32.0 + 4e-16 * double(segs);
  r.evaluations = segs;
  return r;
}

quad::QuadResult classical_residual(const Vector& c, double tol) {
  const int n = int(c.size());
  if (n < 1) throw DomainError("classical_residual: empty coefficient vector");

  // residual in u = 1/t coordinates: ([u>1] - sum_k c_k {u/k})^2 / u^2
  double beta_all = 0.0;
  for (int k = 1; k <= n; ++k) beta_all += c[k - 1] / double(k);

  // mean of (1 - sum c_k {u/k})^2 over a full period
  double mean = 1.0;
  for (int k = 1; k <= n; ++k) mean -= c[k - 1];
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      double g = double(std::gcd(k, l));
      mean += c[k - 1] * c[l - 1] * (0.25 + g * g / (12.0 * double(k) * double(l)));
    }

  long period = 1;
  bool aligned = true;
  for (int k = 2; k <= n; ++k) {
    period = std::lcm(period, long(k));
    if (period > 100000) {
      aligned = false;
      break;
    }
  }

  auto segment_sum = [&](double lo, double hi, long* segs) {
    // kinks at every integer (k=1 is always present)
    KahanSum total;
    for (double u0 = lo; u0 < hi; u0 += 1.0) {
      double u1 = std::min(hi, u0 + 1.0);
      double mid = 0.5 * (u0 + u1);
      double alpha = 1.0;
      for (int k = 1; k <= n; ++k) alpha += c[k - 1] * std::floor(mid / k);
      double beta = beta_all;
      // integral of (alpha - beta u)^2 / u^2, stable segment difference
      double du = u1 - u0;
      total.add(alpha * alpha * du / (u0 * u1) - 2.0 * alpha * beta * std::log1p(du / u0) +
                beta * beta * du);
      if (segs) ++*segs;
    }
    return total.value();
  };

  long segs = 0;
  double total = beta_all * beta_all;  // (0,1): (sum c_k u/k)^2/u^2 = beta^2
  quad::QuadResult r;
  if (aligned) {
    double U1 = double(period) * std::ceil(std::max(2400.0, 2.0 * period) / double(period));
    total += segment_sum(1.0, U1, &segs);
    double S1 = segment_sum(U1, 2.0 * U1, &segs);
    double S2 = segment_sum(2.0 * U1, 4.0 * U1, &segs);
    double s1p = S1 - mean / (2.0 * U1);
    double s2p = S2 - mean / (4.0 * U1);
    double y = 16.0 / 7.0 * (s1p - 4.0 * s2p);
    double x = 4.0 / 3.0 * (s1p - 7.0 / 8.0 * y);
    r.value = total + S1 + S2 + mean / (4.0 * U1) + x / 16.0 + y / 64.0;
    r.error_estimate = std::abs(y) / 32.0 + 4e-16 * double(segs);
  } else {
    double U1 = 40000.0;
    total += segment_sum(1.0, U1, &segs);
    r.value = total + mean / U1;
    r.error_estimate = 5.0 / (U1 * U1) + 4e-16 * double(segs);
  }
  r.evaluations = segs;
  (void)tol;
  return r;
}

}  // namespace nblab::fracint
