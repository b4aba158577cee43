#pragma once

// Truncated multivariate Taylor arithmetic in the four independent variables
// (y, ybar, z, zbar). Coefficients are stored with the factorial normalization
// c[k] = d^k f / k!, so multiplication is a plain truncated convolution.

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "sdym/errors.hpp"

namespace sdym {

using cplx = std::complex<double>;

enum class Variable : int { Y = 0, YBAR = 1, Z = 2, ZBAR = 3 };

inline constexpr std::array<Variable, 4> kAllVariables{Variable::Y, Variable::YBAR, Variable::Z,
                                                       Variable::ZBAR};

/// Y <-> YBAR, Z <-> ZBAR.
constexpr Variable partner(Variable v) noexcept {
  switch (v) {
    case Variable::Y: return Variable::YBAR;
    case Variable::YBAR: return Variable::Y;
    case Variable::Z: return Variable::ZBAR;
    case Variable::ZBAR: return Variable::Z;
  }
  return v;
}

using MultiIndex = std::array<int, 4>;

constexpr MultiIndex unit_index(Variable v) noexcept {
  MultiIndex k{0, 0, 0, 0};
  k[static_cast<int>(v)] = 1;
  return k;
}

inline constexpr int kMaxJetDegree = 10;
inline constexpr double kSingularThreshold = 1e-12;

struct RealSlicePoint {
  cplx y;
  cplx z;
};

/// Expansion point. On the real slice ybar = conj(y) and zbar = conj(z); the
/// enlarged setting allows the four coordinates to be unrelated.
class Base {
 public:
  Base() = default;

  static Base on_slice(RealSlicePoint p) {
    return Base({p.y, std::conj(p.y), p.z, std::conj(p.z)}, true);
  }
  static Base enlarged(cplx y, cplx ybar, cplx z, cplx zbar) {
    return Base({y, ybar, z, zbar}, false);
  }

  cplx operator[](Variable v) const noexcept { return coords_[static_cast<int>(v)]; }
  const std::array<cplx, 4>& coords() const noexcept { return coords_; }
  bool on_real_slice() const noexcept { return real_slice_; }
  RealSlicePoint slice_point() const { return {coords_[0], coords_[2]}; }

  friend bool operator==(const Base&, const Base&) = default;

 private:
  Base(std::array<cplx, 4> c, bool slice) : coords_(c), real_slice_(slice) {}

  std::array<cplx, 4> coords_{};
  bool real_slice_ = true;
};

/// Dense enumeration of the multi-indices of total degree <= degree together
/// with the precomputed tables the arithmetic needs.
struct JetLayout {
  int degree = 0;
  std::vector<MultiIndex> indices;
  std::vector<int> total;  // total degree per slot
  // slot lookup on the (degree+1)^4 cube; -1 where the total exceeds degree
  std::vector<int> cube;
  // product table: (i, j, k) with indices[i] + indices[j] == indices[k]
  struct Triple {
    int i, j, k;
  };
  std::vector<Triple> products;
  std::vector<int> swapped;  // slot of the Y<->YBAR, Z<->ZBAR image

  int slot(const MultiIndex& k) const;
  std::size_t size() const noexcept { return indices.size(); }

  static const JetLayout& get(int degree);
};

class Jet {
 public:
  Jet() = default;

  static Jet constant(cplx c, const Base& base, int degree);
  static Jet variable(Variable v, const Base& base, int degree);
  /// Coefficients in layout order; size must match the layout.
  static Jet from_coeffs(const Base& base, int degree, std::vector<cplx> coeffs);

  int degree() const noexcept { return layout_->degree; }
  const Base& base() const noexcept { return base_; }
  const JetLayout& layout() const noexcept { return *layout_; }

  cplx value() const noexcept { return c_[0]; }
  cplx coeff(const MultiIndex& k) const;
  void set_coeff(const MultiIndex& k, cplx v);
  const std::vector<cplx>& coeffs() const noexcept { return c_; }
  std::vector<cplx>& coeffs() noexcept { return c_; }

  /// Plain partial derivative k! * c[k].
  cplx derivative(const MultiIndex& k) const;

  bool compatible(const Jet& other) const noexcept {
    return layout_ == other.layout_ && base_ == other.base_;
  }

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(cplx s);
  Jet& operator+=(cplx s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator-=(cplx s) {
    c_[0] -= s;
    return *this;
  }

  Jet operator-() const;

 private:
  Jet(const JetLayout* layout, const Base& base)
      : layout_(layout), base_(base), c_(layout->size()) {}

  friend Jet zeros_like(const Jet& j);

  const JetLayout* layout_ = nullptr;
  Base base_;
  std::vector<cplx> c_;
};

Jet zeros_like(const Jet& j);
inline Jet constant_like(const Jet& j, cplx c) {
  return Jet::constant(c, j.base(), j.degree());
}

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(Jet a, cplx s);
Jet operator*(cplx s, Jet a);
Jet operator+(Jet a, cplx s);
Jet operator+(cplx s, Jet a);
Jet operator-(Jet a, cplx s);
Jet operator-(cplx s, const Jet& a);
Jet operator/(Jet a, cplx s);

Jet reciprocal(const Jet& b, double threshold = kSingularThreshold);
Jet divide(const Jet& a, const Jet& b, double threshold = kSingularThreshold);
inline Jet operator/(const Jet& a, const Jet& b) { return divide(a, b); }
inline Jet operator/(cplx s, const Jet& b) { return s * reciprocal(b); }

Jet exp(const Jet& a);
/// Principal branch at the base value.
Jet log(const Jet& a, double threshold = kSingularThreshold);
Jet square(const Jet& a);

/// Complex conjugation on the real slice: conjugate every coefficient and swap
/// the barred/unbarred exponents. Involutive.
Jet conj_swap(const Jet& a);

/// d/dv as a jet one degree lower.
Jet differentiate(const Jet& a, Variable v);
/// Drop all coefficients above `degree`.
Jet truncate(const Jet& a, int degree);

double max_abs_coeff(const Jet& a);
double max_abs_diff(const Jet& a, const Jet& b);

std::ostream& operator<<(std::ostream& os, const Jet& j);

}  // namespace sdym
