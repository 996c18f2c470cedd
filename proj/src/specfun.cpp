#include "nblab/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace nblab {

RhoSpec RhoSpec::exponential(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("RhoSpec: lambda must be positive");
  return {Kind::Exponential, lambda};
}

PochhammerPoly::PochhammerPoly(int k) : degree(k) {
  if (k < 0) throw DomainError("PochhammerPoly: k must be >= 0");
  roots.reserve(k);
  for (int j = 1; j <= k; ++j) roots.push_back(double(j));
}

Complex PochhammerPoly::eval(Complex s) const {
  Complex p(1.0, 0.0);
  for (double r : roots) p *= (r - s);
  return p;
}

std::vector<double> PochhammerPoly::centered_coefficients() const {
  // P_k(1/2 + x) = prod_j (j - 1/2 - x); expand by repeated multiplication.
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    double a = r - 0.5;
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] += a * c[i];
      next[i + 1] -= c[i];
    }
    c.swap(next);
  }
  return c;
}

namespace specfun {
namespace {

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficient set).
constexpr double kLanczosG = 4.7421875;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex gamma_lanczos(Complex s) {
  // valid for Re(s) >= 1/2
  Complex a(kLanczos[0], 0.0);
  for (int i = 1; i < 15; ++i) a += kLanczos[i] / (s + Complex(i - 1, 0.0));
  Complex t = s + Complex(kLanczosG - 0.5, 0.0);
  using std::exp;
  using std::log;
  return std::sqrt(2.0 * constants::pi) * exp((s - 0.5) * log(t) - t) * a;
}

// Bernoulli numbers B_2 .. B_24.
constexpr std::array<double, 12> kBernoulli2k = {
    1.0 / 6.0,       -1.0 / 30.0,      1.0 / 42.0,     -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0,  7.0 / 6.0,      -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
};

}  // namespace

Complex gamma(Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError("gamma: non-finite argument");
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()))
    throw PoleError("gamma: pole at nonpositive integer");
  if (s.real() >= 0.5) return gamma_lanczos(s);
  // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
  Complex sinpis = std::sin(constants::pi * s);
  if (sinpis == Complex(0.0, 0.0))
    throw PoleError("gamma: pole at nonpositive integer");
  return constants::pi / (sinpis * gamma_lanczos(Complex(1.0, 0.0) - s));
}

Complex zeta_strip(Complex s) {
  require_strip(s, "zeta_strip");
  const double t = std::abs(s.imag());
  const int N = std::max(24, int(std::ceil(1.2 * t)) + 8);
  const int K = 12;

  Complex sum(0.0, 0.0);
  for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(double(n)));
  const Complex Ns = std::exp(-s * std::log(double(N)));  // N^{-s}
  sum += Ns * double(N) / (s - 1.0);                      // N^{1-s}/(s-1)
  sum += 0.5 * Ns;

  // Euler-Maclaurin tail: sum_k B_{2k}/(2k)! * (s)_{2k-1} * N^{-s-2k+1}
  Complex rising = s;                 // (s)_1
  double fact = 1.0;                  // (2k)!
  Complex npow = Ns * double(N);      // N^{1-s}
  const double invN2 = 1.0 / (double(N) * double(N));
  double n2 = invN2;                  // N^{-2k} accumulator
  for (int k = 1; k <= K; ++k) {
    fact *= double(2 * k - 1) * double(2 * k);
    sum += kBernoulli2k[k - 1] / fact * rising * npow * n2;
    rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
    n2 *= invN2;
  }
  return sum;
}

XiDetail xi_detail(double t) {
  const Complex s(0.5, t);
  const Complex z = zeta_strip(s);
  const Complex xi = 0.5 * s * (s - 1.0) *
                     std::exp(-0.5 * s * std::log(constants::pi)) *
                     gamma(0.5 * s) * z;
  return {xi.real(), xi.imag()};
}

double xi(double t) { return xi_detail(t).value; }

Complex mellin_frac(Complex s) {
  require_strip(s, "mellin_frac");
  return -zeta_strip(s) / s;
}

Complex pochhammer(int k, Complex s) {
  if (k < 0) throw DomainError("pochhammer: k must be >= 0");
  Complex p(1.0, 0.0);
  for (int j = 1; j <= k; ++j) p *= (double(j) - s);
  return p;
}

double rho(const RhoSpec& spec, double t) {
  if (!(t > 0.0)) throw DomainError("rho: t must be positive");
  if (spec.is_dirac()) {
    double x = 1.0 / t;
    return x - std::floor(x);
  }
  const double x = spec.lambda * t;
  if (x < 1e-3) {
    // 1/x - 1/(e^x - 1) = 1/2 - x/12 + x^3/720 - x^5/30240 + O(x^7)
    const double x2 = x * x;
    return 0.5 - x / 12.0 + x * x2 / 720.0 - x * x2 * x2 / 30240.0;
  }
  if (x > 700.0) return 1.0 / x;  // e^x overflows; second term is 0 anyway
  return 1.0 / x - 1.0 / std::expm1(x);
}

Complex alouin_mellin(int k, Complex s) {
  if (k < 1) throw DomainError("alouin_mellin: k must be >= 1");
  if (!(s.real() > 0.0 && s.real() < std::min(double(k), 1.0)))
    throw DomainError("alouin_mellin: need 0 < Re(s) < min(k, 1)");
  // Gamma(s)Gamma(k-s)/Gamma(k) with Gamma(k-s) = P_{k-1}(s) Gamma(1-s)
  Complex num = gamma(s) * pochhammer(k - 1, s) * gamma(Complex(1.0, 0.0) - s);
  double gk = 1.0;
  for (int j = 2; j < k; ++j) gk *= double(j);
  return num / gk;
}

double gamma_p(int k, double x) {
  if (k < 1) throw DomainError("gamma_p: k must be >= 1");
  if (x <= 0.0) return 0.0;
  if (x < double(k) + 1.0) {
    // series: P(k,x) = x^k e^-x / Gamma(k) * sum_j x^j / (k (k+1) ... (k+j))
    double term = 1.0 / double(k);
    double sum = term;
    for (int j = 1; j < 500; ++j) {
      term *= x / double(k + j);
      sum += term;
      if (term < sum * 1e-17) break;
    }
    double lgk = std::lgamma(double(k));
    return std::exp(double(k) * std::log(x) - x - lgk) * sum;
  }
  // complement: Q(k,x) = e^-x sum_{j<k} x^j/j!  (integer shape)
  double term = 1.0, q = 1.0;
  for (int j = 1; j < k; ++j) {
    term *= x / double(j);
    q += term;
  }
  return 1.0 - std::exp(-x) * q;
}

Complex moment_y(const RhoSpec& spec, Complex s) {
  if (spec.is_dirac()) return Complex(1.0, 0.0);
  return gamma(Complex(1.0, 0.0) + s) * std::exp(-s * std::log(spec.lambda));
}

}  // namespace specfun
}  // namespace nblab
