#include "sdym/poly.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace sdym {

BivariatePoly::BivariatePoly(std::vector<Monomial> terms) {
  std::map<std::pair<int, int>, cplx> merged;
  for (const auto& t : terms) merged[{t.m, t.n}] += t.c;
  for (const auto& [mn, c] : merged) {
    if (c != cplx{}) terms_.push_back({mn.first, mn.second, c});
  }
}

int BivariatePoly::total_degree() const noexcept {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m + t.n);
  return d;
}

cplx BivariatePoly::evaluate(cplx u, cplx v) const {
  cplx s{};
  for (const auto& t : terms_) s += t.c * std::pow(u, t.m) * std::pow(v, t.n);
  return s;
}

Jet BivariatePoly::to_jet(Side side, const Base& base, int degree) const {
  Jet result = Jet::constant(0.0, base, degree);
  if (terms_.empty()) return result;
  int max_m = 0;
  int max_n = 0;
  for (const auto& t : terms_) {
    max_m = std::max(max_m, t.m);
    max_n = std::max(max_n, t.n);
  }
  const Jet u = Jet::variable(first_variable(side), base, degree);
  const Jet v = Jet::variable(second_variable(side), base, degree);
  std::vector<Jet> upow{Jet::constant(1.0, base, degree)};
  std::vector<Jet> vpow{Jet::constant(1.0, base, degree)};
  for (int i = 1; i <= max_m; ++i) upow.push_back(upow.back() * u);
  for (int i = 1; i <= max_n; ++i) vpow.push_back(vpow.back() * v);
  for (const auto& t : terms_) result += t.c * (upow[t.m] * vpow[t.n]);
  return result;
}

BivariatePoly BivariatePoly::du() const {
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    if (t.m > 0) out.push_back({t.m - 1, t.n, t.c * static_cast<double>(t.m)});
  }
  return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::dv() const {
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    if (t.n > 0) out.push_back({t.m, t.n - 1, t.c * static_cast<double>(t.n)});
  }
  return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::conjugated() const {
  std::vector<Monomial> out = terms_;
  for (auto& t : out) t.c = std::conj(t.c);
  return BivariatePoly(std::move(out));
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  std::vector<Monomial> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  *this = BivariatePoly(std::move(all));
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) { return *this += (-1.0) * o; }

BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  std::vector<Monomial> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) out.push_back({s.m + t.m, s.n + t.n, s.c * t.c});
  return BivariatePoly(std::move(out));
}

BivariatePoly operator*(cplx s, const BivariatePoly& a) {
  std::vector<Monomial> out = a.terms();
  for (auto& t : out) t.c *= s;
  return BivariatePoly(std::move(out));
}

bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.terms().size() != b.terms().size()) return false;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    const auto& s = a.terms()[i];
    const auto& t = b.terms()[i];
    if (s.m != t.m || s.n != t.n || s.c != t.c) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::identity() {
  return {{BivariatePoly::constant(1.0), BivariatePoly(), BivariatePoly(),
           BivariatePoly::constant(1.0)}};
}

Matrix2Jet PolyMatrix::to_jets(Side side, const Base& base, int degree) const {
  return {e[0].to_jet(side, base, degree), e[1].to_jet(side, base, degree),
          e[2].to_jet(side, base, degree), e[3].to_jet(side, base, degree)};
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  return {{a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
           a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)}};
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  return {{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
}

PolyMatrix adjugate(const PolyMatrix& m) {
  return {{m(1, 1), (-1.0) * m(0, 1), (-1.0) * m(1, 0), m(0, 0)}};
}

BivariatePoly det(const PolyMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

PolyMatrix du(const PolyMatrix& m) {
  return {{m.e[0].du(), m.e[1].du(), m.e[2].du(), m.e[3].du()}};
}

PolyMatrix dv(const PolyMatrix& m) {
  return {{m.e[0].dv(), m.e[1].dv(), m.e[2].dv(), m.e[3].dv()}};
}

PolyMatrix hermitian_partner(const PolyMatrix& m) {
  return {{m(0, 0).conjugated(), m(1, 0).conjugated(), m(0, 1).conjugated(),
           m(1, 1).conjugated()}};
}

}  // namespace sdym
