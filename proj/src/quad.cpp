#include "nblab/quad.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace nblab::quad {
namespace {

// 15-point Kronrod nodes with embedded 7-point Gauss (QUADPACK g7k15).
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
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class Scalar>
struct PanelEval {
  Scalar value{};
  double err = 0.0;
  double resabs = 0.0;
};

template <class Scalar>
PanelEval<Scalar> gk15(const std::function<Scalar(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  Scalar fv[15];
  fv[7] = f(c);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    fv[i] = f(c + dx);
    fv[14 - i] = f(c - dx);
  }

  Scalar resk = kWgk[7] * fv[7];
  Scalar resg = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::abs(fv[7]);
  for (int i = 0; i < 7; ++i) {
    const Scalar pair = fv[i] + fv[14 - i];
    resk += kWgk[i] * pair;
    resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    if (i % 2 == 1) resg += kWg[i / 2] * pair;
  }

  const Scalar mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));

  resk *= h;
  resg *= h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);

  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, 50.0 * 2.22e-16 * resabs);
  return {resk, err, resabs};
}

struct HeapPanel {
  double a, b, err;
  int id;
  bool operator<(const HeapPanel& o) const { return err < o.err; }
};

template <class Scalar>
QuadResultT<Scalar> adaptive(const std::function<Scalar(double)>& f, double a, double b,
                             const std::vector<double>& breakpoints, double tol,
                             const Options& opt) {
  std::vector<double> edges;
  edges.push_back(a);
  for (double x : breakpoints)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double x, double y) { return y - x < 1e-15 * (std::abs(x) + 1.0); }),
              edges.end());

  // geometric endpoint refinement of the first and last cell
  std::vector<std::pair<double, double>> cells;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    double lo = edges[i], hi = edges[i + 1];
    bool left_end = (i == 0), right_end = (i + 2 == edges.size());
    double w = hi - lo;
    if (left_end && opt.endpoint_levels > 0) {
      double prev = lo;
      for (int j = opt.endpoint_levels; j >= 1; --j) {
        double cut = lo + w * std::ldexp(1.0, -j);
        cells.emplace_back(prev, cut);
        prev = cut;
      }
      lo = prev;
    }
    if (right_end && opt.endpoint_levels > 0) {
      std::vector<std::pair<double, double>> tailcells;
      double next = hi;
      for (int j = opt.endpoint_levels; j >= 1; --j) {
        double cut = hi - w * std::ldexp(1.0, -j);
        if (cut <= lo) break;
        tailcells.emplace_back(cut, next);
        next = cut;
      }
      cells.emplace_back(lo, next);
      for (auto it = tailcells.rbegin(); it != tailcells.rend(); ++it) cells.push_back(*it);
    } else {
      cells.emplace_back(lo, hi);
    }
  }

  std::vector<PanelEval<Scalar>> evals;
  std::priority_queue<HeapPanel> heap;
  long nevals = 0;
  double total_err = 0.0;
  Scalar total{};

  auto push_cell = [&](double lo, double hi) {
    PanelEval<Scalar> e = gk15(f, lo, hi);
    nevals += 15;
    evals.push_back(e);
    heap.push({lo, hi, e.err, int(evals.size()) - 1});
    total += e.value;
    total_err += e.err;
  };

  for (auto& c : cells) push_cell(c.first, c.second);

  while (total_err > tol && int(evals.size()) < opt.max_panels) {
    HeapPanel worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at rounding resolution; nothing left to split
      heap.push(worst);
      break;
    }
    total -= evals[worst.id].value;
    total_err -= evals[worst.id].err;
    evals[worst.id] = {};  // retired
    push_cell(worst.a, mid);
    push_cell(mid, worst.b);
  }

  if (total_err > 1.5 * tol)
    throw QuadConvergenceError("adaptive quadrature did not reach tolerance",
                               double(std::abs(total)), total_err);

  QuadResultT<Scalar> r;
  r.value = total;
  r.error_estimate = total_err;
  r.evaluations = nevals;
  return r;
}

template <class Scalar>
QuadResultT<Scalar> unit_impl(const Integrand<Scalar>& g, double tol) {
  if (!(tol > 0.0)) throw DomainError("integrate_unit: tol must be positive");
  Options opt;
  opt.endpoint_levels = 24;
  return adaptive<Scalar>(g.f, 0.0, 1.0, g.breakpoints, tol, opt);
}

// Truncation point and modeled tail bound for a decaying integrand on [1, inf).
template <class Scalar>
std::pair<double, double> choose_truncation(const Integrand<Scalar>& g, double tol) {
  double T = 8.0;
  double bound = 0.0;
  for (int iter = 0; iter < 60; ++iter) {
    double fT = std::abs(g.f(T));
    if (g.decay == Decay::Gaussian)
      bound = fT / (2.0 * T);  // int_T^inf e^{-(t^2-T^2)} <= 1/(2T)
    else
      bound = fT / std::max(g.decay_param, 1e-3);  // exponential envelope
    if (bound <= 0.25 * tol) break;
    T += (g.decay == Decay::Gaussian) ? 2.0 : std::max(2.0, 4.0 / g.decay_param);
  }
  return {T, bound};
}

template <class Scalar>
QuadResultT<Scalar> semiinf_impl(const Integrand<Scalar>& g, double tol) {
  if (!(tol > 0.0)) throw DomainError("integrate_semiinf: tol must be positive");

  // head (0, 1]
  std::vector<double> head_bp, tail_bp;
  for (double x : g.breakpoints) (x < 1.0 ? head_bp : tail_bp).push_back(x);
  Options hopt;
  hopt.endpoint_levels = 24;
  QuadResultT<Scalar> head = adaptive<Scalar>(g.f, 0.0, 1.0, head_bp, 0.5 * tol, hopt);

  QuadResultT<Scalar> tail;
  double trunc = 0.0;
  if (g.decay == Decay::Algebraic || g.decay == Decay::None) {
    if (g.decay == Decay::None && g.breakpoints.empty()) {
      // probe for growth; an integrand that does not decay is rejected
      double f2 = std::abs(g.f(2.0)), f64 = std::abs(g.f(64.0));
      if (f64 > f2 && f64 > 1e3 * tol)
        throw DomainError("integrate_semiinf: no decay hint and integrand does not fall off");
    }
    // exact map t -> 1/u
    std::vector<double> mapped_bp;
    for (double x : tail_bp) mapped_bp.push_back(1.0 / x);
    std::sort(mapped_bp.begin(), mapped_bp.end());
    auto mf = [&](double u) { return Scalar(g.f(1.0 / u) / (u * u)); };
    Options topt;
    topt.endpoint_levels = 24;
    tail = adaptive<Scalar>(mf, 0.0, 1.0, mapped_bp, 0.5 * tol, topt);
  } else {
    auto [T, bound] = choose_truncation(g, tol);
    trunc = bound;
    tail = adaptive<Scalar>(g.f, 1.0, T, tail_bp, 0.5 * tol, Options{});
  }

  QuadResultT<Scalar> r;
  r.value = head.value + tail.value;
  r.error_estimate = head.error_estimate + tail.error_estimate;
  r.evaluations = head.evaluations + tail.evaluations;
  r.truncation_bound = trunc;
  return r;
}

}  // namespace

QuadResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                              const std::vector<double>& breakpoints, double tol,
                              const Options& opt) {
  return adaptive<double>(f, a, b, breakpoints, tol, opt);
}
ComplexQuadResult integrate_interval(const std::function<Complex(double)>& f, double a,
                                     double b, const std::vector<double>& breakpoints,
                                     double tol, const Options& opt) {
  return adaptive<Complex>(f, a, b, breakpoints, tol, opt);
}

QuadResult integrate_unit(const RealIntegrand& f, double tol) { return unit_impl(f, tol); }
ComplexQuadResult integrate_unit(const ComplexIntegrand& f, double tol) {
  return unit_impl(f, tol);
}

QuadResult integrate_semiinf(const RealIntegrand& f, double tol) {
  return semiinf_impl(f, tol);
}
ComplexQuadResult integrate_semiinf(const ComplexIntegrand& f, double tol) {
  return semiinf_impl(f, tol);
}

QuadResult integrate_line(const RealIntegrand& f, double tol, bool even, bool plancherel) {
  QuadResult r;
  if (even) {
    RealIntegrand half = f;
    r = integrate_semiinf(half, 0.5 * tol);
    r.value *= 2.0;
    r.error_estimate *= 2.0;
    r.truncation_bound *= 2.0;
  } else {
    RealIntegrand pos = f;
    RealIntegrand neg = f;
    neg.f = [g = f.f](double t) { return g(-t); };
    QuadResult rp = integrate_semiinf(pos, 0.5 * tol);
    QuadResult rn = integrate_semiinf(neg, 0.5 * tol);
    r.value = rp.value + rn.value;
    r.error_estimate = rp.error_estimate + rn.error_estimate;
    r.evaluations = rp.evaluations + rn.evaluations;
    r.truncation_bound = rp.truncation_bound + rn.truncation_bound;
  }
  if (plancherel) {
    r.value /= 2.0 * constants::pi;
    r.error_estimate /= 2.0 * constants::pi;
    r.truncation_bound /= 2.0 * constants::pi;
  }
  return r;
}

}  // namespace nblab::quad
