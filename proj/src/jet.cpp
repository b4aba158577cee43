#include "sdym/jet.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <ostream>

namespace sdym {

namespace {

int cube_offset(const MultiIndex& k, int degree) {
  const int n = degree + 1;
  return ((k[0] * n + k[1]) * n + k[2]) * n + k[3];
}

std::unique_ptr<JetLayout> build_layout(int degree) {
  auto layout = std::make_unique<JetLayout>();
  layout->degree = degree;
  // graded order: all indices of total 0, then total 1, ...
  for (int t = 0; t <= degree; ++t) {
    for (int a = t; a >= 0; --a) {
      for (int b = t - a; b >= 0; --b) {
        for (int c = t - a - b; c >= 0; --c) {
          layout->indices.push_back({a, b, c, t - a - b - c});
          layout->total.push_back(t);
        }
      }
    }
  }
  const int n = degree + 1;
  layout->cube.assign(static_cast<std::size_t>(n) * n * n * n, -1);
  for (std::size_t s = 0; s < layout->indices.size(); ++s) {
    layout->cube[cube_offset(layout->indices[s], degree)] = static_cast<int>(s);
  }
  const int size = static_cast<int>(layout->indices.size());
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (layout->total[i] + layout->total[j] > degree) continue;
      const auto& a = layout->indices[i];
      const auto& b = layout->indices[j];
      const MultiIndex sum{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
      layout->products.push_back({i, j, layout->slot(sum)});
    }
  }
  layout->swapped.resize(layout->indices.size());
  for (std::size_t s = 0; s < layout->indices.size(); ++s) {
    const auto& k = layout->indices[s];
    layout->swapped[s] = layout->slot({k[1], k[0], k[3], k[2]});
  }
  return layout;
}

void require_compatible(const Jet& a, const Jet& b) {
  if (!a.compatible(b)) {
    throw Error(ErrorCode::IncompatibleJets, "jets differ in base point or degree");
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

int JetLayout::slot(const MultiIndex& k) const {
  for (int e : k) {
    if (e < 0 || e > degree) return -1;
  }
  return cube[cube_offset(k, degree)];
}

const JetLayout& JetLayout::get(int degree) {
  if (degree < 0 || degree > kMaxJetDegree) {
    throw Error(ErrorCode::DegreeBudgetExceeded,
                "jet degree " + std::to_string(degree) + " outside [0, " +
                    std::to_string(kMaxJetDegree) + "]");
  }
  static std::array<std::once_flag, kMaxJetDegree + 1> flags;
  static std::array<std::unique_ptr<JetLayout>, kMaxJetDegree + 1> layouts;
  std::call_once(flags[degree], [degree] { layouts[degree] = build_layout(degree); });
  return *layouts[degree];
}

Jet Jet::constant(cplx c, const Base& base, int degree) {
  Jet j(&JetLayout::get(degree), base);
  j.c_[0] = c;
  return j;
}

Jet Jet::variable(Variable v, const Base& base, int degree) {
  Jet j(&JetLayout::get(degree), base);
  j.c_[0] = base[v];
  if (degree >= 1) j.c_[j.layout_->slot(unit_index(v))] = 1.0;
  return j;
}

Jet Jet::from_coeffs(const Base& base, int degree, std::vector<cplx> coeffs) {
  Jet j(&JetLayout::get(degree), base);
  if (coeffs.size() != j.c_.size()) {
    throw Error(ErrorCode::IncompatibleJets, "coefficient count does not match the jet layout");
  }
  j.c_ = std::move(coeffs);
  return j;
}

cplx Jet::coeff(const MultiIndex& k) const {
  const int s = layout_->slot(k);
  return s < 0 ? cplx{} : c_[s];
}

void Jet::set_coeff(const MultiIndex& k, cplx v) {
  const int s = layout_->slot(k);
  if (s < 0) throw Error(ErrorCode::OrderTooHigh, "multi-index exceeds jet degree");
  c_[s] = v;
}

cplx Jet::derivative(const MultiIndex& k) const {
  const int s = layout_->slot(k);
  if (s < 0) throw Error(ErrorCode::OrderTooHigh, "derivative order exceeds jet degree");
  return c_[s] * (factorial(k[0]) * factorial(k[1]) * factorial(k[2]) * factorial(k[3]));
}

Jet& Jet::operator+=(const Jet& o) {
  require_compatible(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  require_compatible(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Jet zeros_like(const Jet& j) { return Jet(j.layout_, j.base_); }

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, cplx s) { return a *= s; }
Jet operator*(cplx s, Jet a) { return a *= s; }
Jet operator+(Jet a, cplx s) { return a += s; }
Jet operator+(cplx s, Jet a) { return a += s; }
Jet operator-(Jet a, cplx s) { return a -= s; }
Jet operator-(cplx s, const Jet& a) { return (-a) += s; }
Jet operator/(Jet a, cplx s) { return a *= (1.0 / s); }

Jet operator*(const Jet& a, const Jet& b) {
  require_compatible(a, b);
  Jet r = zeros_like(a);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  auto& rc = r.coeffs();
  for (const auto& t : a.layout().products) rc[t.k] += ac[t.i] * bc[t.j];
  return r;
}

Jet square(const Jet& a) { return a * a; }

namespace {

// Sum_{n=0}^{degree} w[n] g^n for a jet g with zero constant term; the series
// terminates because g^(degree+1) vanishes at this truncation.
Jet nilpotent_series(const Jet& g, const std::vector<cplx>& w) {
  Jet result = constant_like(g, w[0]);
  Jet power = constant_like(g, 1.0);
  for (int n = 1; n <= g.degree(); ++n) {
    power = power * g;
    result += power * w[n];
  }
  return result;
}

Jet nilpotent_part(const Jet& a) {
  Jet g = a;
  g.coeffs()[0] = 0.0;
  return g;
}

}  // namespace

Jet reciprocal(const Jet& b, double threshold) {
  const cplx b0 = b.value();
  if (std::abs(b0) < threshold) {
    throw Error(ErrorCode::DivisionBySingularValue, "divisor value below singularity threshold");
  }
  // 1/(b0 (1 + h)) = (1/b0) sum (-h)^n
  const Jet h = nilpotent_part(b) * (1.0 / b0);
  std::vector<cplx> w(b.degree() + 1);
  for (int n = 0; n <= b.degree(); ++n) w[n] = (n % 2 == 0 ? 1.0 : -1.0) / b0;
  return nilpotent_series(h, w);
}

Jet divide(const Jet& a, const Jet& b, double threshold) {
  require_compatible(a, b);
  return a * reciprocal(b, threshold);
}

Jet exp(const Jet& a) {
  const cplx e0 = std::exp(a.value());
  std::vector<cplx> w(a.degree() + 1);
  double fact = 1.0;
  for (int n = 0; n <= a.degree(); ++n) {
    if (n > 0) fact *= n;
    w[n] = e0 / fact;
  }
  return nilpotent_series(nilpotent_part(a), w);
}

Jet log(const Jet& a, double threshold) {
  const cplx a0 = a.value();
  if (std::abs(a0) < threshold) {
    throw Error(ErrorCode::LogOfZero, "logarithm argument below singularity threshold");
  }
  // ln(a0 (1 + h)) = ln a0 + sum_{n>=1} (-1)^(n+1) h^n / n
  const Jet h = nilpotent_part(a) * (1.0 / a0);
  std::vector<cplx> w(a.degree() + 1);
  w[0] = std::log(a0);
  for (int n = 1; n <= a.degree(); ++n) w[n] = (n % 2 == 1 ? 1.0 : -1.0) / n;
  return nilpotent_series(h, w);
}

Jet conj_swap(const Jet& a) {
  if (!a.base().on_real_slice()) {
    throw Error(ErrorCode::BaseOffRealSlice, "conj_swap requires a real-slice base");
  }
  Jet r = zeros_like(a);
  const auto& swapped = a.layout().swapped;
  for (std::size_t s = 0; s < swapped.size(); ++s) {
    r.coeffs()[swapped[s]] = std::conj(a.coeffs()[s]);
  }
  return r;
}

Jet differentiate(const Jet& a, Variable v) {
  if (a.degree() < 1) throw Error(ErrorCode::OrderTooHigh, "cannot differentiate a degree-0 jet");
  Jet r = Jet::constant(0.0, a.base(), a.degree() - 1);
  const auto& lay = r.layout();
  const int vi = static_cast<int>(v);
  for (std::size_t s = 0; s < lay.size(); ++s) {
    MultiIndex up = lay.indices[s];
    up[vi] += 1;
    r.coeffs()[s] = static_cast<double>(up[vi]) * a.coeff(up);
  }
  return r;
}

Jet truncate(const Jet& a, int degree) {
  if (degree > a.degree()) {
    throw Error(ErrorCode::DegreeBudgetExceeded, "truncate cannot raise the degree");
  }
  Jet r = Jet::constant(0.0, a.base(), degree);
  for (std::size_t s = 0; s < r.layout().size(); ++s) {
    r.coeffs()[s] = a.coeffs()[s];  // graded order: lower layouts are prefixes
  }
  return r;
}

double max_abs_coeff(const Jet& a) {
  double m = 0.0;
  for (const auto& c : a.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double max_abs_diff(const Jet& a, const Jet& b) {
  require_compatible(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Jet& j) {
  os << "Jet(degree=" << j.degree() << ", value=" << j.value() << ")";
  return os;
}

}  // namespace sdym
