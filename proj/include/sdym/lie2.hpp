#pragma once

// 2x2 jet-valued matrices for the A1 case: the sl2 basis, Gauss factorization
// G = exp(alpha X+) exp(tau h) exp(beta X-), logarithmic derivatives and
// hermitian conjugation on the real slice.

#include <array>

#include "sdym/jet.hpp"

namespace sdym {

class Matrix2Jet {
 public:
  Matrix2Jet() = default;
  Matrix2Jet(Jet a11, Jet a12, Jet a21, Jet a22)
      : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

  static Matrix2Jet identity(const Base& base, int degree);
  static Matrix2Jet constant(const std::array<cplx, 4>& row_major, const Base& base, int degree);

  /// 0-based row/column.
  Jet& operator()(int r, int c) { return e_[2 * r + c]; }
  const Jet& operator()(int r, int c) const { return e_[2 * r + c]; }

  const Base& base() const { return e_[0].base(); }
  int degree() const { return e_[0].degree(); }

  std::array<cplx, 4> values() const;

  Matrix2Jet& operator+=(const Matrix2Jet& o);
  Matrix2Jet& operator-=(const Matrix2Jet& o);

 private:
  std::array<Jet, 4> e_;
};

Matrix2Jet operator+(Matrix2Jet a, const Matrix2Jet& b);
Matrix2Jet operator-(Matrix2Jet a, const Matrix2Jet& b);
Matrix2Jet operator*(const Matrix2Jet& a, const Matrix2Jet& b);
Matrix2Jet operator*(const Jet& s, const Matrix2Jet& m);
Matrix2Jet operator*(cplx s, const Matrix2Jet& m);

Jet det(const Matrix2Jet& m);
Jet trace(const Matrix2Jet& m);
Matrix2Jet adjugate(const Matrix2Jet& m);
Matrix2Jet inverse(const Matrix2Jet& m);
Matrix2Jet differentiate(const Matrix2Jet& m, Variable v);
Matrix2Jet truncate(const Matrix2Jet& m, int degree);
/// Largest coefficient difference over all four entries.
double max_abs_diff(const Matrix2Jet& a, const Matrix2Jet& b);
/// Largest |value| difference over all four entries.
double max_value_diff(const Matrix2Jet& a, const Matrix2Jet& b);

/// f = plus * X+ + zero * h + minus * X-.
struct AlgebraElement {
  Jet plus;
  Jet zero;
  Jet minus;

  static AlgebraElement zeros(const Base& base, int degree);
  /// Traceless part of m in the (X+, h, X-) basis.
  static AlgebraElement from_matrix(const Matrix2Jet& m);
  Matrix2Jet to_matrix() const;

  const Base& base() const { return plus.base(); }
  int degree() const { return plus.degree(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(const Jet& s, const AlgebraElement& a);
AlgebraElement operator*(cplx s, const AlgebraElement& a);

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
/// Trace of the 2x2 matrix product a*b.
Jet trace_product(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement differentiate(const AlgebraElement& a, Variable v);
AlgebraElement truncate(const AlgebraElement& a, int degree);
double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b);
double max_value_diff(const AlgebraElement& a, const AlgebraElement& b);

struct Generators {
  Matrix2Jet x_plus;
  Matrix2Jet x_minus;
  Matrix2Jet h;
};

Generators generators(const Base& base, int degree);

struct GaussParams {
  Jet alpha;
  Jet tau;
  Jet beta;
};

/// [[e^tau + alpha beta e^-tau, alpha e^-tau], [beta e^-tau, e^-tau]]; det = 1.
Matrix2Jet compose_gauss(const GaussParams& p);

/// Inverse of compose_gauss. Requires |G22| above threshold and det G = 1.
GaussParams decompose_gauss(const Matrix2Jet& g, double det_tolerance = 1e-10,
                            double threshold = kSingularThreshold);

/// (d_v G) G^-1 in terms of the Gauss parameters; the result has degree one
/// less than the inputs.
AlgebraElement left_log_derivative(const GaussParams& p, Variable v);
/// G^-1 (d_v G) in terms of the Gauss parameters.
AlgebraElement right_log_derivative(const GaussParams& p, Variable v);

/// Transpose plus conj_swap of every entry. Real-slice bases only.
Matrix2Jet hermitian_conjugate(const Matrix2Jet& m);
/// Uses X+^H = X-, h^H = h.
AlgebraElement algebra_hconj(const AlgebraElement& a);

}  // namespace sdym
