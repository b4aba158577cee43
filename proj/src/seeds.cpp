#include "sdym/seeds.hpp"

#include <cmath>

namespace sdym {

PolyMatrix GaugeFactor::matrix() const {
  const BivariatePoly one = BivariatePoly::constant(1.0);
  switch (shape) {
    case FactorShape::Upper: return {{one, poly, BivariatePoly(), one}};
    case FactorShape::Lower: return {{one, BivariatePoly(), poly, one}};
    case FactorShape::Diag:
      return {{BivariatePoly::constant(d), BivariatePoly(), BivariatePoly(),
               BivariatePoly::constant(1.0 / d)}};
  }
  return PolyMatrix::identity();
}

PolyMatrix PolyAlgebra::to_matrix() const { return {{zero, plus, minus, (-1.0) * zero}}; }

SDYMSolution::SDYMSolution(PolyMatrix psi_bar, PolyMatrix psi, PolyMatrix chi, PolyMatrix chi_bar)
    : psi_bar_(psi_bar),
      psi_(psi),
      f_psi_bar_(std::move(psi_bar)),
      chi_(std::move(chi)),
      fbar_psi_(std::move(psi)),
      chi_bar_(std::move(chi_bar)) {
  rebuild_f();
  rebuild_fbar();
}

SDYMSolution SDYMSolution::vacuum() {
  const PolyMatrix zero{};
  return SDYMSolution(PolyMatrix::identity(), PolyMatrix::identity(), zero, zero);
}

void SDYMSolution::rebuild_f() {
  const PolyMatrix inv = adjugate(f_psi_bar_);
  l_ybar_ = du(f_psi_bar_) * inv;
  l_zbar_ = dv(f_psi_bar_) * inv;
}

void SDYMSolution::rebuild_fbar() {
  const PolyMatrix inv = adjugate(fbar_psi_);
  r_y_ = inv * du(fbar_psi_);
  r_z_ = inv * dv(fbar_psi_);
}

Matrix2Jet SDYMSolution::group(const Base& base, int degree) const {
  return psi_bar_.to_jets(Side::Barred, base, degree) * psi_.to_jets(Side::Unbarred, base, degree);
}

AlgebraElement SDYMSolution::f(const Base& base, int degree) const {
  const Jet y = Jet::variable(Variable::Y, base, degree);
  const Jet z = Jet::variable(Variable::Z, base, degree);
  const Matrix2Jet m = z * l_ybar_.to_jets(Side::Barred, base, degree) -
                       y * l_zbar_.to_jets(Side::Barred, base, degree) +
                       chi_.to_jets(Side::Barred, base, degree);
  return AlgebraElement::from_matrix(m);
}

AlgebraElement SDYMSolution::fbar(const Base& base, int degree) const {
  const Jet ybar = Jet::variable(Variable::YBAR, base, degree);
  const Jet zbar = Jet::variable(Variable::ZBAR, base, degree);
  const Matrix2Jet m = zbar * r_y_.to_jets(Side::Unbarred, base, degree) -
                       ybar * r_z_.to_jets(Side::Unbarred, base, degree) +
                       chi_bar_.to_jets(Side::Unbarred, base, degree);
  return AlgebraElement::from_matrix(m);
}

GaussParams SDYMSolution::gauss(const Base& base, int degree) const {
  return decompose_gauss(group(base, degree));
}

PointJets SDYMSolution::evaluate(const Base& base, int degree) const {
  Matrix2Jet g = group(base, degree);
  GaussParams p = decompose_gauss(g);
  return {std::move(g), std::move(p), f(base, degree), fbar(base, degree)};
}

SDYMSolution SDYMSolution::gauged(const PolyMatrix& a_bar, const PolyMatrix& a) const {
  SDYMSolution r = *this;
  r.psi_bar_ = a_bar * psi_bar_;
  r.psi_ = psi_ * a;
  r.f_psi_bar_ = a_bar * f_psi_bar_;
  r.chi_ = a_bar * chi_ * adjugate(a_bar);
  r.fbar_psi_ = fbar_psi_ * a;
  r.chi_bar_ = adjugate(a) * chi_bar_ * a;
  r.rebuild_f();
  r.rebuild_fbar();
  return r;
}

SDYMSolution SDYMSolution::with_group_of(const SDYMSolution& other) const {
  SDYMSolution r = *this;
  r.psi_bar_ = other.psi_bar_;
  r.psi_ = other.psi_;
  return r;
}

SDYMSolution SDYMSolution::with_psi_bar_of(const SDYMSolution& other) const {
  SDYMSolution r = *this;
  r.psi_bar_ = other.psi_bar_;
  return r;
}

SDYMSolution SDYMSolution::with_psi_of(const SDYMSolution& other) const {
  SDYMSolution r = *this;
  r.psi_ = other.psi_;
  return r;
}

SDYMSolution SDYMSolution::with_f_of(const SDYMSolution& other) const {
  SDYMSolution r = *this;
  r.f_psi_bar_ = other.f_psi_bar_;
  r.chi_ = other.chi_;
  r.rebuild_f();
  return r;
}

SDYMSolution SDYMSolution::with_fbar_of(const SDYMSolution& other) const {
  SDYMSolution r = *this;
  r.fbar_psi_ = other.fbar_psi_;
  r.chi_bar_ = other.chi_bar_;
  r.rebuild_fbar();
  return r;
}

ChargeOnlySolution::ChargeOnlySolution(BivariatePoly theta_bar, BivariatePoly phi_bar,
                                       BivariatePoly psi_bar)
    : theta_bar_(std::move(theta_bar)), phi_bar_(std::move(phi_bar)), psi_bar_(std::move(psi_bar)) {
  a_ = phi_bar_ * theta_bar_.du() - theta_bar_ * phi_bar_.du();
  b_ = phi_bar_ * theta_bar_.dv() - theta_bar_ * phi_bar_.dv();
}

Jet ChargeOnlySolution::f_minus(const Base& base, int degree) const {
  const Jet y = Jet::variable(Variable::Y, base, degree);
  const Jet z = Jet::variable(Variable::Z, base, degree);
  return z * a_.to_jet(Side::Barred, base, degree) - y * b_.to_jet(Side::Barred, base, degree) +
         psi_bar_.to_jet(Side::Barred, base, degree);
}

Jet ChargeOnlySolution::fbar_plus(const Base& base, int degree) const {
  const Jet ybar = Jet::variable(Variable::YBAR, base, degree);
  const Jet zbar = Jet::variable(Variable::ZBAR, base, degree);
  return zbar * a_.conjugated().to_jet(Side::Unbarred, base, degree) -
         ybar * b_.conjugated().to_jet(Side::Unbarred, base, degree) +
         psi_bar_.conjugated().to_jet(Side::Unbarred, base, degree);
}

Jet ChargeOnlySolution::exp_minus_tau(const Base& base, int degree) const {
  return theta_bar_.to_jet(Side::Barred, base, degree) *
             theta_bar_.conjugated().to_jet(Side::Unbarred, base, degree) +
         phi_bar_.to_jet(Side::Barred, base, degree) *
             phi_bar_.conjugated().to_jet(Side::Unbarred, base, degree);
}

Jet ChargeOnlySolution::tau(const Base& base, int degree) const {
  const Jet e = exp_minus_tau(base, degree);
  if (std::abs(e.value()) < kSingularThreshold) {
    throw Error(ErrorCode::TauSingular, "e^-tau vanishes at the evaluation point");
  }
  return -log(e);
}

SDYMSolution build_solution(const SeedSpec& seed) {
  if (seed.kind != SeedKind::FullGauge) {
    throw Error(ErrorCode::UnsupportedSeed, "build_solution needs a full_gauge seed");
  }
  PolyMatrix psi_bar = PolyMatrix::identity();
  for (const auto& factor : seed.factors) psi_bar = psi_bar * factor.matrix();
  const PolyMatrix chi = seed.chi.to_matrix();
  return SDYMSolution(psi_bar, hermitian_partner(psi_bar), chi, hermitian_partner(chi));
}

ChargeOnlySolution charge_only_solution(const SeedSpec& seed) {
  if (seed.kind != SeedKind::ChargeOnly) {
    throw Error(ErrorCode::UnsupportedSeed, "charge_only_solution needs a charge_only seed");
  }
  return ChargeOnlySolution(seed.theta_bar, seed.phi_bar, seed.psi_bar);
}

SeedSolution build_any(const SeedSpec& seed) {
  if (seed.kind == SeedKind::FullGauge) return build_solution(seed);
  return charge_only_solution(seed);
}

SeedSpec one_instanton_seed(cplx a) {
  if (!(a.real() > 0.0)) {
    throw Error(ErrorCode::NonPositiveScale, "one-instanton scale needs Re(a) > 0");
  }
  SeedSpec s;
  s.kind = SeedKind::ChargeOnly;
  s.theta_bar = BivariatePoly::u();
  s.phi_bar = BivariatePoly::v();
  s.psi_bar = BivariatePoly::constant(a);
  return s;
}

}  // namespace sdym
