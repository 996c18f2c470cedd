#include "nblab/family_invgamma.hpp"

#include <cmath>

#include "nblab/algebra.hpp"
#include "nblab/fracint.hpp"
#include "nblab/quad.hpp"

namespace nblab::invgamma {
namespace {

double factorial(int k) {
  double f = 1.0;
  for (int j = 2; j <= k; ++j) f *= double(j);
  return f;
}

// Dirac case of the smoothed representation after x -> 1/u:
//   int_0^inf {u} u^{-k-1} e^{-1/(u t)} du / ((k-1)! t^k)
double gx_dirac(int k, double t) {
  // below this the value is 1/2 beyond double precision (checked in the tests)
  if (t < 0.02) return 0.5;

  // head u in (0,1): {u} = u; substitute v = 1/(u t)
  double head = 0.0;
  {
    auto f = [&](double v) { return std::pow(v * t, double(k)) * std::exp(-v) / (v * v * t); };
    double lo = 1.0 / t;
    if (lo < 700.0) {
      double hi = lo + 45.0 + 10.0 * std::sqrt(lo);
      head = quad::integrate_interval(std::function<double(double)>(f), lo, hi, {}, 1e-13).value;
    }
  }

  // unit segments of {u} u^{-k-1} e^{-1/(ut)} up to U, then an expansion of the
  // exponential against the closed power tails T_p
  const double U = std::max(64.0, std::ceil(8.0 / t));
  double body = 0.0;
  {
    auto f = [&](double u) {
      return (u - std::floor(u)) * std::pow(u, -double(k) - 1.0) * std::exp(-1.0 / (u * t));
    };
    std::vector<double> bps;
    for (double m = 2.0; m < U; m += 1.0) bps.push_back(m);
    body = quad::integrate_interval(std::function<double(double)>(f), 1.0, U, bps, 1e-13).value;
  }
  double tail = 0.0;
  {
    double term = 1.0;  // (-1)^j / (j! t^j)
    for (int j = 0; j <= 12; ++j) {
      tail += term * fracint::frac_tail_power(U, k + 1 + j);
      term *= -1.0 / (double(j + 1) * t);
    }
  }
  return (head + body + tail) / (factorial(k - 1) * std::pow(t, double(k)));
}

// Exponential case: Gamma-weighted average of rho, scale-free form
//   int_0^inf rho(t v) v^{k-1} e^{-v} dv / (k-1)!
double gx_exponential(int k, double t, double lambda) {
  RhoSpec y = RhoSpec::exponential(lambda);
  auto f = [&](double v) {
    return specfun::rho(y, t * v) * std::pow(v, double(k) - 1.0) * std::exp(-v);
  };
  quad::RealIntegrand g{f, {}, quad::Decay::Exponential, 1.0};
  return quad::integrate_semiinf(g, 1e-12).value / factorial(k - 1);
}

}  // namespace

double gx(int k, double t, const RhoSpec& y) {
  if (k < 1) throw DomainError("gx: k must be >= 1");
  if (!(t > 0.0)) throw DomainError("gx: t must be positive");
  return y.is_dirac() ? gx_dirac(k, t) : gx_exponential(k, t, y.lambda);
}

double a_value(double u, const RhoSpec& y, double tol) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("a_value: u must lie in (0,1)");
  if (y.is_dirac()) {
    auto r = fracint::frac_pair_integral(1.0 / u, 1.0 / (1.0 - u), tol);
    return r.value;
  }
  auto f = [&](double t) { return specfun::rho(y, u * t) * specfun::rho(y, (1.0 - u) * t); };
  quad::RealIntegrand g{f, {}, quad::Decay::Algebraic, 2.0};
  auto r = quad::integrate_semiinf(g, tol);
  return r.value;
}

AFunction::AFunction(const RhoSpec& y, double tol) : y_(y) {
  constexpr double kXgk[8] = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.0};
  constexpr double kWgk[8] = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

  const int levels = 20;
  delta_ = std::ldexp(1.0, -levels);
  std::vector<std::pair<double, double>> panels;
  for (int j = levels; j >= 2; --j) {
    double lo = std::ldexp(1.0, -j), hi = std::ldexp(1.0, -j + 1);
    panels.emplace_back(lo, hi);                  // left dyadic run
    panels.emplace_back(1.0 - hi, 1.0 - lo);      // mirrored
  }
  // split dyadic panels once more for the polynomial factors
  std::vector<std::pair<double, double>> split;
  for (auto& p : panels) {
    double mid = 0.5 * (p.first + p.second);
    split.emplace_back(p.first, mid);
    split.emplace_back(mid, p.second);
  }
  for (auto& p : split) {
    double c = 0.5 * (p.first + p.second), h = 0.5 * (p.second - p.first);
    for (int i = 0; i < 8; ++i) {
      for (int sgn : {1, -1}) {
        if (i == 7 && sgn == -1) continue;
        double x = c + sgn * h * kXgk[i];
        u_.push_back(x);
        w_.push_back(h * kWgk[i]);
        a_.push_back(a_value(x, y_, tol));
      }
    }
  }
  // log models A ~ alpha + beta ln(1/u) fitted just above the slivers
  double a1 = a_value(delta_, y_, tol), a2 = a_value(0.5 * delta_, y_, tol);
  beta0_ = (a2 - a1) / std::log(2.0);
  alpha0_ = a1 - beta0_ * std::log(1.0 / delta_);
  double b1 = a_value(1.0 - delta_, y_, tol), b2 = a_value(1.0 - 0.5 * delta_, y_, tol);
  beta1_ = (b2 - b1) / std::log(2.0);
  alpha1_ = b1 - beta1_ * std::log(1.0 / delta_);
}

double AFunction::bernstein_integral(int n, int m) const {
  KahanSum s;
  for (size_t i = 0; i < u_.size(); ++i)
    s.add(w_[i] * algebra::bernstein_eval(n, m, u_[i]) * a_[i]);
  // slivers: B ~ u^n near 0 and (1-u)^m near 1; only exponent-0 ends contribute
  double total = s.value();
  if (n == 0) {
    // int_0^d (alpha + beta ln(1/u)) du = d (alpha + beta (1 + ln(1/d)))
    total += delta_ * (alpha0_ + beta0_ * (1.0 + std::log(1.0 / delta_)));
  }
  if (m == 0) {
    total += delta_ * (alpha1_ + beta1_ * (1.0 + std::log(1.0 / delta_)));
  }
  return total;
}

double gram_entry(int n, int m, const AFunction& a) {
  if (n < 0 || m < 0) throw DomainError("gram_entry: indices must be >= 0");
  int lo = std::min(n, m), hi = std::max(n, m);
  return a.bernstein_integral(lo, hi);  // symmetric: fixed orientation
}

double gram_entry(int n, int m, const RhoSpec& y, double tol) {
  AFunction a(y, tol);
  return gram_entry(n, m, a);
}

Complex phi(Complex s, const RhoSpec& y) {
  return specfun::zeta_strip(s) / s * specfun::moment_y(y, s) *
         specfun::gamma(Complex(1.0, 0.0) - s);
}

double mellin_weight(double t, const RhoSpec& y) { return std::norm(phi(Complex(0.5, t), y)); }

double rhs_entry(int k, const RhoSpec& y, double tol) {
  auto f = [&](double t) { return gx(k, t, y); };
  std::vector<double> bps;
  if (y.is_dirac()) bps.push_back(0.02);  // constant 1/2 below
  quad::RealIntegrand g{f, bps, quad::Decay::None, 0.0};
  return quad::integrate_unit(g, tol).value;
}

GramSystem build_system(int n, const RhoSpec& y, double tol) {
  if (n < 1) throw DomainError("invgamma system: n must be >= 1");
  AFunction a(y, tol);
  GramSystem sys;
  sys.family = y.is_dirac() ? "invgamma-dirac" : "invgamma-exp";
  sys.G.resize(n, n);
  sys.entry_err = Matrix::Zero(n, n);
  sys.b.resize(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = k; l <= n; ++l) {
      double v = gram_entry(k - 1, l - 1, a);
      sys.G(k - 1, l - 1) = v;
      sys.G(l - 1, k - 1) = v;
      double err = 1e-7 * std::max(1.0, std::abs(v));
      sys.entry_err(k - 1, l - 1) = err;
      sys.entry_err(l - 1, k - 1) = err;
    }
    sys.b[k - 1] = rhs_entry(k, y, std::min(tol, 1e-9));
  }
  // the (1,1) entry is the delicate one (E Z_1 = inf); tolerance widened
  sys.entry_err(0, 0) = std::max(sys.entry_err(0, 0), 1e-4 * std::abs(sys.G(0, 0)));
  return sys;
}

MellinSide build_mellin_side(const RhoSpec& y, int n_max) {
  double T = y.is_dirac() ? 50.0 : std::max(30.0, 30.0 / y.lambda * 0.0 + 30.0);
  auto w = [y](double t) { return mellin_weight(t, y); };
  auto xw = [y](double t) {
    Complex s(0.5, t);
    return std::conj(phi(s, y)) / s;
  };
  MellinSide side{mellin::build_line_grid(w, xw, T, 2 * n_max, 1e-12)};
  return side;
}

GramSystem MellinSide::pochhammer_system(int n) const {
  // moments m_0 .. m_{2n-2} and the centered Pochhammer coefficients
  std::vector<double> mom(2 * n - 1);
  for (int j = 0; j < 2 * n - 1; ++j) mom[j] = grid.moment(j);
  std::vector<std::vector<double>> pc;  // p_{k,j}: P_{k-1}(1/2 + x) coefficients
  for (int k = 1; k <= n; ++k) pc.push_back(PochhammerPoly(k - 1).centered_coefficients());

  auto sigma = [](int j) { return (j / 2) % 2 == 0 ? 1.0 : -1.0; };
  GramSystem sys;
  sys.family = "invgamma-mellin";
  sys.G.resize(n, n);
  sys.b.resize(n);
  std::vector<double> brow(2 * n - 1);
  for (int j = 0; j < 2 * n - 1; ++j) brow[j] = mellin::symbol_rhs(grid, j);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      KahanSum acc;
      for (size_t j = 0; j < pc[k].size(); ++j)
        for (size_t jp = 0; jp < pc[l].size(); ++jp) {
          if ((j + jp) % 2 != 0) continue;  // odd moments of the even weight
          acc.add(pc[k][j] * pc[l][jp] * sigma(int(j)) * sigma(int(jp)) * mom[j + jp]);
        }
      sys.G(k, l) = acc.value();
    }
    KahanSum acc;
    for (size_t j = 0; j < pc[k].size(); ++j) acc.add(pc[k][j] * brow[j]);
    sys.b[k] = acc.value();
  }
  return sys;
}

DistanceReport MellinSide::distance(int n, bool orthogonalized) const {
  if (orthogonalized) {
    auto rec = mellin::stieltjes(grid, n);
    auto od = mellin::ortho_distance(grid, rec, n);
    DistanceReport rep;
    rep.n = n;
    rep.d2 = od.d2;
    rep.route = "mellin-orthogonal";
    rep.family = "invgamma-mellin";
    rep.condition_estimate = 1.0;
    return rep;
  }
  GramSystem sys = pochhammer_system(n);
  DistanceReport rep = solver::distance_from_system(sys, 1.0);
  rep.route = "mellin-pochhammer";
  return rep;
}

double moment_z(int k, int alpha, const RhoSpec& y) {
  if (k < 1 || alpha < 1) throw DomainError("moment_z: need k, alpha >= 1");
  if (k <= alpha) return std::numeric_limits<double>::infinity();
  double ex = 1.0;  // E[Y^alpha]
  if (!y.is_dirac()) {
    ex = factorial(alpha) / std::pow(y.lambda, double(alpha));
  }
  double ratio = 1.0;  // Gamma(k-alpha)/Gamma(k)
  for (int j = k - alpha; j < k; ++j) ratio /= double(j);
  return ex * ratio;
}

DistanceReport distance(int n, const RhoSpec& y, double tol, double tail_threshold) {
  GramSystem sys = build_system(n, y, tol);
  DistanceReport rep = solver::distance_from_system(sys, 1.0);
  rep.route = "time-domain";
  rep.crosscheck_route = "mellin-pochhammer";
  MellinSide side = build_mellin_side(y, n);
  rep.d2_crosscheck = side.distance(n, false).d2;
  rep.tail = solver::tail_diagnostic(rep.coefficients, y, tail_threshold);
  return rep;
}

}  // namespace nblab::invgamma
