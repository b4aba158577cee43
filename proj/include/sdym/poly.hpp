#pragma once

// Polynomials c * u^m v^n in two abstract variables, bound at the use site to
// either (ybar, zbar) or (y, z). Seeds are built from these so that every jet
// derived from them is exact at any truncation order.

#include <array>
#include <vector>

#include "sdym/jet.hpp"
#include "sdym/lie2.hpp"

namespace sdym {

/// Which coordinate pair a polynomial lives on.
enum class Side { Barred, Unbarred };

constexpr Variable first_variable(Side s) noexcept {
  return s == Side::Barred ? Variable::YBAR : Variable::Y;
}
constexpr Variable second_variable(Side s) noexcept {
  return s == Side::Barred ? Variable::ZBAR : Variable::Z;
}
constexpr Side opposite(Side s) noexcept {
  return s == Side::Barred ? Side::Unbarred : Side::Barred;
}

struct Monomial {
  int m = 0;
  int n = 0;
  cplx c;
};

class BivariatePoly {
 public:
  BivariatePoly() = default;
  /// Terms are merged and zero coefficients dropped.
  explicit BivariatePoly(std::vector<Monomial> terms);

  static BivariatePoly constant(cplx c) { return BivariatePoly({{0, 0, c}}); }
  static BivariatePoly u() { return BivariatePoly({{1, 0, 1.0}}); }
  static BivariatePoly v() { return BivariatePoly({{0, 1, 1.0}}); }

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const noexcept;

  cplx evaluate(cplx u, cplx v) const;
  /// Exact jet of the polynomial with (u, v) bound to the coordinates of `side`.
  Jet to_jet(Side side, const Base& base, int degree) const;

  BivariatePoly du() const;
  BivariatePoly dv() const;
  /// Conjugated coefficients: the conj-partner polynomial on the other side.
  BivariatePoly conjugated() const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);

 private:
  std::vector<Monomial> terms_;
};

BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b);
BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b);
BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly operator*(cplx s, const BivariatePoly& a);
bool operator==(const BivariatePoly& a, const BivariatePoly& b);

/// 2x2 matrix of polynomials, row-major.
struct PolyMatrix {
  std::array<BivariatePoly, 4> e;

  static PolyMatrix identity();
  BivariatePoly& operator()(int r, int c) { return e[2 * r + c]; }
  const BivariatePoly& operator()(int r, int c) const { return e[2 * r + c]; }

  Matrix2Jet to_jets(Side side, const Base& base, int degree) const;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix adjugate(const PolyMatrix& m);
BivariatePoly det(const PolyMatrix& m);
PolyMatrix du(const PolyMatrix& m);
PolyMatrix dv(const PolyMatrix& m);
/// Transpose with conjugated coefficients: the hermitian partner on the other side.
PolyMatrix hermitian_partner(const PolyMatrix& m);

}  // namespace sdym
