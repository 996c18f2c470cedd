#include "nblab/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace nblab::mellin {
namespace {

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

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace

double LineGrid::moment(int j) const {
  KahanSum s;
  for (size_t i = 0; i < t.size(); ++i) s.add(dw[i] * std::pow(t[i], j) * wv[i]);
  return s.value() / (2.0 * constants::pi);
}

double LineGrid::cross_moment(int j) const {
  KahanSum s;
  for (size_t i = 0; i < t.size(); ++i) {
    double part = (j % 2 == 0) ? xv[i].real() : xv[i].imag();
    s.add(dw[i] * std::pow(t[i], j) * part);
  }
  return s.value() / (2.0 * constants::pi);
}

double symbol_rhs(const LineGrid& grid, int j) {
  double sign = (j / 2) % 2 == 0 ? 1.0 : -1.0;
  return -sign * grid.cross_moment(j);
}

LineGrid build_line_grid(const std::function<double(double)>& weight,
                         const std::function<Complex(double)>& chi_w, double T, int jmax,
                         double rel_tol) {
  // refine panels of [0, T] against the hardest integrand t^jmax w(t)
  auto probe = [&](double a, double b, double* value) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < 8; ++i) {
      double x1 = c + h * kXgk[i], x2 = c - h * kXgk[i];
      double f1 = std::pow(x1, jmax) * weight(x1);
      double f2 = std::pow(x2, jmax) * weight(x2);
      double pair = (i == 7) ? f1 : f1 + f2;
      k15 += kWgk[i] * pair;
      if (i % 2 == 1) g7 += kWg[i / 2] * pair;
      if (i == 7) g7 += kWg[3] * f1;
    }
    *value = k15 * h;
    return std::abs(k15 - g7) * h;
  };

  std::priority_queue<Panel> heap;
  double total = 0.0, total_err = 0.0;
  int npanels = 0;
  double edge = 0.0, step = 0.5;
  while (edge < T) {
    double next = std::min(T, edge + step);
    Panel p{edge, next, 0.0, 0.0};
    p.err = probe(edge, next, &p.value);
    total += p.value;
    total_err += p.err;
    heap.push(p);
    ++npanels;
    edge = next;
    if (next >= 4.0) step = 2.0;
  }
  while (total_err > rel_tol * std::max(std::abs(total), 1e-300) && npanels < 700) {
    Panel worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap.push(worst);
      break;
    }
    total -= worst.value;
    total_err -= worst.err;
    for (double x0 : {worst.a, mid}) {
      double x1 = (x0 == worst.a) ? mid : worst.b;
      Panel p{x0, x1, 0.0, 0.0};
      p.err = probe(x0, x1, &p.value);
      total += p.value;
      total_err += p.err;
      heap.push(p);
      ++npanels;
    }
  }

  LineGrid grid;
  grid.T = T;
  const bool want_cross = bool(chi_w);
  while (!heap.empty()) {
    Panel p = heap.top();
    heap.pop();
    const double c = 0.5 * (p.a + p.b), h = 0.5 * (p.b - p.a);
    for (int i = 0; i < 8; ++i) {
      for (int sgn : {1, -1}) {
        if (i == 7 && sgn == -1) continue;
        double x = c + sgn * h * kXgk[i];
        double wq = h * kWgk[i];
        for (int side : {1, -1}) {  // independent evaluations at +x and -x
          grid.t.push_back(side * x);
          grid.dw.push_back(wq);
          grid.wv.push_back(weight(side * x));
          if (want_cross) grid.xv.push_back(chi_w(side * x));
          ++grid.weight_evals;
        }
      }
    }
  }
  return grid;
}

Recurrence stieltjes(const LineGrid& grid, int n) {
  const size_t m = grid.t.size();
  std::vector<double> mu(m);
  for (size_t i = 0; i < m; ++i) mu[i] = grid.dw[i] * grid.wv[i] / (2.0 * constants::pi);

  Recurrence rec;
  std::vector<double> pm1(m, 0.0), p0(m, 1.0), tmp(m);
  double norm_prev = 0.0;
  for (int j = 0; j < n; ++j) {
    KahanSum nrm, tavg;
    for (size_t i = 0; i < m; ++i) {
      double w = mu[i] * p0[i] * p0[i];
      nrm.add(w);
      tavg.add(w * grid.t[i]);
    }
    double norm = nrm.value();
    if (!(norm > 0.0)) break;
    double alpha = tavg.value() / norm;
    double beta = (j == 0) ? norm : norm / norm_prev;
    if (j > 0 && !(beta > 0.0)) break;
    rec.alpha.push_back(alpha);
    rec.beta.push_back(beta);
    rec.usable = j + 1;
    // pi_{j+1} = (t - alpha_j) pi_j - beta_j pi_{j-1}
    for (size_t i = 0; i < m; ++i)
      tmp[i] = (grid.t[i] - alpha) * p0[i] - (j == 0 ? 0.0 : beta * pm1[i]);
    pm1.swap(p0);
    p0.swap(tmp);
    norm_prev = norm;
  }
  return rec;
}

OrthoDistance ortho_distance(const LineGrid& grid, const Recurrence& rec, int n) {
  const size_t m = grid.t.size();
  OrthoDistance out;
  int usable = std::min<int>(n, rec.usable);
  std::vector<double> pm1(m, 0.0), p0(m, 1.0), tmp(m);
  double scale2 = 1.0;  // ||pi_j||^2 accumulated from betas
  KahanSum d2acc;
  for (int j = 0; j < usable; ++j) {
    scale2 *= rec.beta[j];
    if (!(scale2 > 0.0)) break;
    // c_j = -(1/2pi) int p_j(t) * parity_j(chi_w) dt, p_j orthonormal
    KahanSum proj;
    for (size_t i = 0; i < m; ++i) {
      double part = (j % 2 == 0) ? grid.xv[i].real() : grid.xv[i].imag();
      proj.add(grid.dw[i] * p0[i] * part);
    }
    double cj = -proj.value() / (2.0 * constants::pi) / std::sqrt(scale2);
    out.coeffs.push_back(cj);
    d2acc.add(cj * cj);
    out.usable = j + 1;
    for (size_t i = 0; i < m; ++i)
      tmp[i] = (grid.t[i] - rec.alpha[j]) * p0[i] - (j == 0 ? 0.0 : rec.beta[j] * pm1[i]);
    pm1.swap(p0);
    p0.swap(tmp);
  }
  out.d2 = 1.0 - d2acc.value();
  return out;
}

}  // namespace nblab::mellin
