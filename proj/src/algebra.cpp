#include "nblab/algebra.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "nblab/specfun.hpp"

namespace nblab::algebra {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::from_int_coeffs(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPoly::coeff(int j) const {
  static const Rational zero(0);
  if (j < 0 || j >= int(coeffs_.size())) return zero;
  return coeffs_[j];
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return RationalPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = coeffs_[j] * int(j);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::shift_mul(int power) const {
  if (is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + power);
  for (size_t j = 0; j < coeffs_.size(); ++j) c[j + power] = coeffs_[j];
  return RationalPoly(std::move(c));
}

double RationalPoly::eval(double t) const {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    v = v * t + it->convert_to<double>();
  return v;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t j = 0; j < c.size(); ++j) c[j] = coeff(int(j)) + o.coeff(int(j));
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t j = 0; j < c.size(); ++j) c[j] = coeff(int(j)) - o.coeff(int(j));
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::scale(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (auto& v : out) v *= c;
  return RationalPoly(std::move(out));
}

SeedFunction SeedFunction::xi_seed() {
  SeedFunction s;
  s.poly = RationalPoly::from_int_coeffs({0, 0, 12, 0, -28, 0, 8});
  s.normalization = std::pow(constants::pi, -0.25);
  return s;
}

SeedFunction SeedFunction::gaussian() {
  SeedFunction s;
  s.poly = RationalPoly::constant(Rational(1));
  s.normalization = 1.0;
  return s;
}

std::string SeedFunction::to_json() const {
  nlohmann::json j;
  std::vector<std::string> coeffs;
  for (const auto& c : poly.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;  // index = degree
  j["normalization"] = normalization;
  return j.dump();
}

SeedFunction SeedFunction::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SeedFunction s;
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(Rational(c.get<std::string>()));
  s.poly = RationalPoly(std::move(coeffs));
  s.normalization = j.at("normalization").get<double>();
  return s;
}

SeedFunction seed_recursion_step(const SeedFunction& g, const Rational& r) {
  // Q_{k+1} = -t Q' + 2 t^2 Q - r Q
  RationalPoly q = g.poly;
  RationalPoly next = q.derivative().shift_mul(1).scale(Rational(-1)) +
                      q.shift_mul(2).scale(Rational(2)) - q.scale(r);
  return {next, g.normalization};
}

CoefficientTriangle coefficient_triangle(int k_max, const std::vector<Rational>& r) {
  if (k_max < 0) throw DomainError("coefficient_triangle: k_max must be >= 0");
  CoefficientTriangle tri;
  tri.a.resize(k_max + 1);
  tri.a[0] = {Rational(1)};
  for (int k = 0; k < k_max; ++k) {
    const Rational& rk = size_t(k) < r.size() ? r[k] : r.back();
    auto& cur = tri.a[k];
    std::vector<Rational> next(k + 2);
    // a_{l,k+1} = -(l + r_k) a_{l,k} - a_{l-1,k}
    for (int l = 0; l <= k + 1; ++l) {
      Rational v(0);
      if (l <= k) v -= (Rational(l) + rk) * cur[l];
      if (l >= 1) v -= cur[l - 1];
      next[l] = v;
    }
    tri.a[k + 1] = std::move(next);
  }
  return tri;
}

RationalPoly reconstruct_from_triangle(const CoefficientTriangle& tri, int k,
                                       const RationalPoly& q0) {
  if (k < 0 || k > tri.k_max()) throw DomainError("reconstruct_from_triangle: bad k");
  // g_0^{(l)}(x) = R_l(x) e^{-x^2} with R_0 = Q_0, R_{l+1} = R_l' - 2 x R_l
  std::vector<RationalPoly> R{q0};
  for (int l = 1; l <= k; ++l)
    R.push_back(R.back().derivative() - R.back().shift_mul(1).scale(Rational(2)));
  RationalPoly out;
  for (int l = 0; l <= k; ++l)
    out = out + R[l].shift_mul(l).scale(tri.a[k][l]);
  return out;
}

double bernstein_eval(int n, int m, double u) {
  if (n < 0 || m < 0) throw DomainError("bernstein_eval: indices must be >= 0");
  if (u < 0.0 || u > 1.0) throw DomainError("bernstein_eval: u must lie in [0,1]");
  double binom = 1.0;
  for (int j = 1; j <= n; ++j) binom *= double(m + j) / double(j);
  return binom * std::pow(u, n) * std::pow(1.0 - u, m);
}

Complex seed_mellin(const SeedFunction& g, Complex s) {
  Complex sum(0.0, 0.0);
  const auto& c = g.poly.coeffs();
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    sum += c[j].convert_to<double>() * specfun::gamma(0.5 * (s + double(j)));
  }
  return 0.5 * g.normalization * sum;
}

}  // namespace nblab::algebra
