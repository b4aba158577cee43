#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "sdym/jet.hpp"
#include "sdym/poly.hpp"
#include "sdym/seeds.hpp"

namespace sdym::testing {

inline cplx random_cplx(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng)};
}

inline RealSlicePoint random_point(std::mt19937_64& rng, double radius = 1.0) {
  return {random_cplx(rng, radius / 1.5), random_cplx(rng, radius / 1.5)};
}

inline Base random_slice_base(std::mt19937_64& rng, double radius = 1.0) {
  return Base::on_slice(random_point(rng, radius));
}

inline Base random_enlarged_base(std::mt19937_64& rng) {
  return Base::enlarged(random_cplx(rng), random_cplx(rng), random_cplx(rng), random_cplx(rng));
}

inline Jet random_jet(std::mt19937_64& rng, const Base& base, int degree, double scale = 1.0) {
  Jet j = Jet::constant(0.0, base, degree);
  for (auto& c : j.coeffs()) c = random_cplx(rng, scale);
  return j;
}

inline BivariatePoly random_poly(std::mt19937_64& rng, int max_degree, double scale = 0.5) {
  std::vector<Monomial> terms;
  for (int m = 0; m <= max_degree; ++m)
    for (int n = 0; m + n <= max_degree; ++n) terms.push_back({m, n, random_cplx(rng, scale)});
  return BivariatePoly(std::move(terms));
}

/// Full-gauge seeds with modest polynomial data and a sizeable constant in
/// chi_-, so that f- stays away from zero and |f-|^2 > e^-2tau near the origin.
inline std::vector<SeedSpec> full_gauge_catalogue() {
  std::vector<SeedSpec> seeds;
  const auto u = BivariatePoly::u();
  const auto v = BivariatePoly::v();
  const auto c = [](cplx x) { return BivariatePoly::constant(x); };

  {  // upper * lower, chi = a X-
    SeedSpec s;
    s.factors = {{FactorShape::Upper, u, 1.0}, {FactorShape::Lower, v, 1.0}};
    s.chi.minus = c({3.0, 0.5});
    seeds.push_back(s);
  }
  {  // three factors with a diagonal scaling
    SeedSpec s;
    s.factors = {{FactorShape::Lower, 0.3 * u * v + c({0.2, 0.1}) * v, 1.0},
                 {FactorShape::Diag, {}, {1.2, 0.3}},
                 {FactorShape::Upper, 0.5 * v + c({0.0, 0.4}) * u * u, 1.0}};
    s.chi.minus = c({4.0, -1.0});
    s.chi.zero = c({0.3, 0.2}) * u;
    s.chi.plus = c({0.1, -0.2}) * v;
    seeds.push_back(s);
  }
  {  // lower first, quadratic data
    SeedSpec s;
    s.factors = {{FactorShape::Lower, c({0.4, -0.3}) * u * u + c(0.2) * v, 1.0},
                 {FactorShape::Upper, c({0.1, 0.2}) * u + c(0.3) * v * v, 1.0}};
    s.chi.minus = c(5.0) + c({0.2, 0.1}) * u * v;
    seeds.push_back(s);
  }
  {  // four alternating factors
    SeedSpec s;
    s.factors = {{FactorShape::Upper, c(0.5) * v, 1.0},
                 {FactorShape::Lower, c({0.3, 0.3}) * u, 1.0},
                 {FactorShape::Upper, c({-0.2, 0.1}) * u * v, 1.0},
                 {FactorShape::Lower, c(0.25) * v + c({0.0, -0.3}), 1.0}};
    s.chi.minus = c({3.5, 1.5});
    s.chi.zero = c(0.2) * v;
    seeds.push_back(s);
  }
  {  // single lower factor: PsiBar second row (u, 1)
    SeedSpec s;
    s.factors = {{FactorShape::Diag, {}, {0.9, -0.2}}, {FactorShape::Lower, c(0.6) * u + c({0.1, 0.2}) * v * v, 1.0}};
    s.chi.minus = c(4.5) + c({0.3, -0.1}) * v;
    s.chi.plus = c({0.2, 0.2}) * u * u;
    seeds.push_back(s);
  }
  return seeds;
}

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Taylor coefficient of c * y^e0 ybar^e1 z^e2 zbar^e3 at `base`, computed from
// the binomial expansion (x0 + d)^e = sum binom(e, k) x0^(e-k) d^k.
inline cplx monomial_coeff(cplx c, const MultiIndex& e, const Base& base, const MultiIndex& k) {
  cplx r = c;
  for (int i = 0; i < 4; ++i) {
    if (k[i] > e[i]) return 0.0;
    r *= binom(e[i], k[i]) * std::pow(base.coords()[i], e[i] - k[i]);
  }
  return r;
}

inline Jet monomial(cplx c, const MultiIndex& e, const Base& base, int degree) {
  Jet r = Jet::constant(c, base, degree);
  for (Variable v : kAllVariables) {
    const Jet x = Jet::variable(v, base, degree);
    for (int p = 0; p < e[static_cast<int>(v)]; ++p) r = r * x;
  }
  return r;
}

// 5-point central first and second derivatives
template <class F>
inline double d1(const F& f, double r, double h) {
  return (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) - f(r + 2 * h)) / (12 * h);
}
template <class F>
inline double d2(const F& f, double r, double h) {
  return (-f(r - 2 * h) + 16 * f(r - h) - 30 * f(r) + 16 * f(r + h) - f(r + 2 * h)) / (12 * h * h);
}

// (1/4 Laplacian in four dimensions)^2 of ln(r^2 + l) on radial functions,
// by nested finite differences with one Richardson step.
inline double radial_box_box_ln(double r, double l) {
  const auto at_step = [&](double h) {
    const auto g = [&](double s) { return std::log(s * s + l); };
    const auto box = [&](double s) { return 0.25 * (d2(g, s, h) + 3.0 * d1(g, s, h) / s); };
    return 0.25 * (d2(box, r, h) + 3.0 * d1(box, r, h) / r);
  };
  const double h = 5e-2 * std::min(r, 1.0);
  return (16.0 * at_step(h / 2) - at_step(h)) / 15.0;
}

inline double closed_form(double r, double lambda2) { return -6.0 * lambda2 * lambda2 / std::pow(r * r + lambda2, 4); }


// y ybar + z zbar + l
inline Jet radial_argument(const Base& b, double l, int degree) {
  const auto v = [&](Variable x) { return Jet::variable(x, b, degree); };
  return v(Variable::Y) * v(Variable::YBAR) + v(Variable::Z) * v(Variable::ZBAR) + l;
}

}  // namespace sdym::testing
