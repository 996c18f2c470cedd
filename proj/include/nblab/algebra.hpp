#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nblab/types.hpp"

namespace nblab::algebra {

using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial with exact rational coefficients, index = degree.
/// Trailing zeros are trimmed; arithmetic never rounds.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);
  static RationalPoly from_int_coeffs(const std::vector<long>& coeffs);

  int degree() const { return coeffs_.empty() ? -1 : int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& coeff(int j) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  RationalPoly derivative() const;
  RationalPoly shift_mul(int power) const;  // multiply by t^power
  double eval(double t) const;

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly scale(const Rational& c) const;
  bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// g(t) = normalization * Q(t) * exp(-t^2); closed under the seed recursion.
struct SeedFunction {
  RationalPoly poly;
  double normalization = 1.0;

  double eval(double t) const { return normalization * poly.eval(t) * std::exp(-t * t); }
  /// Seed for the Xi-function weight: (8t^6 - 28t^4 + 12t^2) e^{-t^2}, scaled pi^{-1/4}.
  static SeedFunction xi_seed();
  static SeedFunction gaussian();  // Q = 1

  std::string to_json() const;
  static SeedFunction from_json(const std::string& text);
};

/// Triangle a[l][k] with g_k(x) = sum_l a_{l,k} x^l g_0^{(l)}(x); a_{k,k} = (-1)^k.
struct CoefficientTriangle {
  std::vector<std::vector<Rational>> a;  // a[k][l], 0 <= l <= k
  int k_max() const { return int(a.size()) - 1; }
};

/// One step of g_{k+1} = -x g_k' - r g_k on the polynomial factor:
/// Q_{k+1} = -t Q' + 2 t^2 Q - r Q.
SeedFunction seed_recursion_step(const SeedFunction& g, const Rational& r);

/// Triangle for the recursion with per-step constants r[k] (constant 1/2 by default).
CoefficientTriangle coefficient_triangle(int k_max, const std::vector<Rational>& r);

/// Rebuild Q_k from the triangle and the derivatives of the seed (exact).
RationalPoly reconstruct_from_triangle(const CoefficientTriangle& tri, int k,
                                       const RationalPoly& q0);

/// B_n^{m+n}(u) = C(n+m, n) u^n (1-u)^m.
double bernstein_eval(int n, int m, double u);

/// Mellin transform of Q(t) e^{-t^2}: sum_j q_j Gamma((s+j)/2) / 2 (normalization included).
Complex seed_mellin(const SeedFunction& g, Complex s);

}  // namespace nblab::algebra
