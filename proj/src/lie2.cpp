#include "sdym/lie2.hpp"

#include <algorithm>
#include <cmath>

namespace sdym {

Matrix2Jet Matrix2Jet::identity(const Base& base, int degree) {
  return constant({1.0, 0.0, 0.0, 1.0}, base, degree);
}

Matrix2Jet Matrix2Jet::constant(const std::array<cplx, 4>& m, const Base& base, int degree) {
  return {Jet::constant(m[0], base, degree), Jet::constant(m[1], base, degree),
          Jet::constant(m[2], base, degree), Jet::constant(m[3], base, degree)};
}

std::array<cplx, 4> Matrix2Jet::values() const {
  return {e_[0].value(), e_[1].value(), e_[2].value(), e_[3].value()};
}

Matrix2Jet& Matrix2Jet::operator+=(const Matrix2Jet& o) {
  for (int i = 0; i < 4; ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix2Jet& Matrix2Jet::operator-=(const Matrix2Jet& o) {
  for (int i = 0; i < 4; ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix2Jet operator+(Matrix2Jet a, const Matrix2Jet& b) { return a += b; }
Matrix2Jet operator-(Matrix2Jet a, const Matrix2Jet& b) { return a -= b; }

Matrix2Jet operator*(const Matrix2Jet& a, const Matrix2Jet& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Matrix2Jet operator*(const Jet& s, const Matrix2Jet& m) {
  return {s * m(0, 0), s * m(0, 1), s * m(1, 0), s * m(1, 1)};
}

Matrix2Jet operator*(cplx s, const Matrix2Jet& m) {
  return {s * m(0, 0), s * m(0, 1), s * m(1, 0), s * m(1, 1)};
}

Jet det(const Matrix2Jet& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Jet trace(const Matrix2Jet& m) { return m(0, 0) + m(1, 1); }

Matrix2Jet adjugate(const Matrix2Jet& m) { return {m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)}; }

Matrix2Jet inverse(const Matrix2Jet& m) { return reciprocal(det(m)) * adjugate(m); }

Matrix2Jet differentiate(const Matrix2Jet& m, Variable v) {
  return {differentiate(m(0, 0), v), differentiate(m(0, 1), v), differentiate(m(1, 0), v),
          differentiate(m(1, 1), v)};
}

Matrix2Jet truncate(const Matrix2Jet& m, int degree) {
  return {truncate(m(0, 0), degree), truncate(m(0, 1), degree), truncate(m(1, 0), degree),
          truncate(m(1, 1), degree)};
}

double max_abs_diff(const Matrix2Jet& a, const Matrix2Jet& b) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r = std::max(r, max_abs_diff(a(i, j), b(i, j)));
  return r;
}

double max_value_diff(const Matrix2Jet& a, const Matrix2Jet& b) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(a(i, j).value() - b(i, j).value()));
  return r;
}

AlgebraElement AlgebraElement::zeros(const Base& base, int degree) {
  const Jet z = Jet::constant(0.0, base, degree);
  return {z, z, z};
}

AlgebraElement AlgebraElement::from_matrix(const Matrix2Jet& m) {
  return {m(0, 1), (m(0, 0) - m(1, 1)) * 0.5, m(1, 0)};
}

Matrix2Jet AlgebraElement::to_matrix() const { return {zero, plus, minus, -zero}; }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  plus += o.plus;
  zero += o.zero;
  minus += o.minus;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  plus -= o.plus;
  zero -= o.zero;
  minus -= o.minus;
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

AlgebraElement operator*(const Jet& s, const AlgebraElement& a) {
  return {s * a.plus, s * a.zero, s * a.minus};
}

AlgebraElement operator*(cplx s, const AlgebraElement& a) {
  return {s * a.plus, s * a.zero, s * a.minus};
}

// [h, X+-] = +-2 X+-, [X+, X-] = h
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return {2.0 * (a.zero * b.plus - a.plus * b.zero), a.plus * b.minus - a.minus * b.plus,
          2.0 * (a.minus * b.zero - a.zero * b.minus)};
}

Jet trace_product(const AlgebraElement& a, const AlgebraElement& b) {
  return 2.0 * (a.zero * b.zero) + a.plus * b.minus + a.minus * b.plus;
}

AlgebraElement differentiate(const AlgebraElement& a, Variable v) {
  return {differentiate(a.plus, v), differentiate(a.zero, v), differentiate(a.minus, v)};
}

AlgebraElement truncate(const AlgebraElement& a, int degree) {
  return {truncate(a.plus, degree), truncate(a.zero, degree), truncate(a.minus, degree)};
}

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) {
  return std::max({max_abs_diff(a.plus, b.plus), max_abs_diff(a.zero, b.zero),
                   max_abs_diff(a.minus, b.minus)});
}

double max_value_diff(const AlgebraElement& a, const AlgebraElement& b) {
  return std::max({std::abs(a.plus.value() - b.plus.value()),
                   std::abs(a.zero.value() - b.zero.value()),
                   std::abs(a.minus.value() - b.minus.value())});
}

Generators generators(const Base& base, int degree) {
  return {Matrix2Jet::constant({0.0, 1.0, 0.0, 0.0}, base, degree),
          Matrix2Jet::constant({0.0, 0.0, 1.0, 0.0}, base, degree),
          Matrix2Jet::constant({1.0, 0.0, 0.0, -1.0}, base, degree)};
}

Matrix2Jet compose_gauss(const GaussParams& p) {
  const Jet e_minus = exp(-p.tau);
  const Jet e_plus = exp(p.tau);
  return {e_plus + p.alpha * p.beta * e_minus, p.alpha * e_minus, p.beta * e_minus, e_minus};
}

GaussParams decompose_gauss(const Matrix2Jet& g, double det_tolerance, double threshold) {
  const cplx g22 = g(1, 1).value();
  if (std::abs(g22) < threshold) {
    throw Error(ErrorCode::SingularDecomposition, "G22 vanishes; no Gauss factorization");
  }
  const Jet d = det(g);
  const double det_err = max_abs_coeff(d - 1.0);
  if (det_err > det_tolerance) {
    throw Error(ErrorCode::NotUnimodular,
                "det G deviates from 1 by " + std::to_string(det_err));
  }
  const Jet inv22 = reciprocal(g(1, 1), threshold);
  return {g(0, 1) * inv22, -log(g(1, 1), threshold), g(1, 0) * inv22};
}

AlgebraElement left_log_derivative(const GaussParams& p, Variable v) {
  const int d = p.alpha.degree() - 1;
  const Jet da = differentiate(p.alpha, v);
  const Jet dt = differentiate(p.tau, v);
  const Jet db = differentiate(p.beta, v);
  const Jet a = truncate(p.alpha, d);
  const Jet e2 = exp(-2.0 * truncate(p.tau, d));
  return {da - 2.0 * (dt * a) - a * a * db * e2, dt + db * a * e2, db * e2};
}

AlgebraElement right_log_derivative(const GaussParams& p, Variable v) {
  const int d = p.alpha.degree() - 1;
  const Jet da = differentiate(p.alpha, v);
  const Jet dt = differentiate(p.tau, v);
  const Jet db = differentiate(p.beta, v);
  const Jet b = truncate(p.beta, d);
  const Jet e2 = exp(-2.0 * truncate(p.tau, d));
  return {da * e2, dt + da * b * e2, db - 2.0 * (dt * b) - b * b * da * e2};
}

Matrix2Jet hermitian_conjugate(const Matrix2Jet& m) {
  return {conj_swap(m(0, 0)), conj_swap(m(1, 0)), conj_swap(m(0, 1)), conj_swap(m(1, 1))};
}

AlgebraElement algebra_hconj(const AlgebraElement& a) {
  return {conj_swap(a.minus), conj_swap(a.zero), conj_swap(a.plus)};
}

}  // namespace sdym
