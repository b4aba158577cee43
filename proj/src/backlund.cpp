#include "sdym/backlund.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sdym/errors.hpp"
#include "sdym/quadrature.hpp"

namespace sdym {

namespace {

const Jet& need(const std::optional<Jet>& j, const char* name) {
  if (!j) throw std::logic_error(std::string("field not available after transformation: ") + name);
  return *j;
}

Jet d(const Jet& a, Variable v) { return differentiate(a, v); }

// Runs `fn`, turning a vanishing denominator into `code`.
template <class Fn>
auto guarded(ErrorCode code, const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DivisionBySingularValue || e.code() == ErrorCode::LogOfZero)
      throw Error(code, where + " (" + e.what() + ")");
    throw;
  }
}

struct PairVariables {
  Variable first, second;
};

PairVariables pair_variables(Side pair) {
  if (pair == Side::Unbarred) return {Variable::Y, Variable::Z};
  return {Variable::YBAR, Variable::ZBAR};
}

}  // namespace

FieldJets field_jets(const SDYMSolution& sol, const Base& base, int degree) {
  const PointJets pj = sol.evaluate(base, degree);
  FieldJets out;
  out.alpha = pj.gauss.alpha;
  out.tau = pj.gauss.tau;
  out.beta = pj.gauss.beta;
  out.f_minus = pj.f.minus;
  out.f_zero = pj.f.zero;
  out.fbar_plus = pj.fbar.plus;
  out.fbar_zero = pj.fbar.zero;
  return out;
}

FieldJets after_left(const FieldJets& in) {
  const Jet& tau = need(in.tau, "tau");
  const Jet& fm = need(in.f_minus, "f-");
  const Jet e2 = exp(-2.0 * tau);
  const Jet g = reciprocal(fm);
  FieldJets out;
  out.tau = tau + log(fm);
  out.beta = in.beta;
  if (in.fbar_plus) out.fbar_plus = *in.fbar_plus - e2 * g;
  if (in.fbar_zero && in.beta) out.fbar_zero = *in.fbar_zero - e2 * *in.beta * g;
  return out;
}

FieldJets after_right(const FieldJets& in) {
  const Jet& tau = need(in.tau, "tau");
  const Jet& fb = need(in.fbar_plus, "fbar+");
  const Jet e2 = exp(-2.0 * tau);
  const Jet g = reciprocal(fb);
  FieldJets out;
  out.tau = tau + log(fb);
  out.alpha = in.alpha;
  if (in.f_minus) out.f_minus = *in.f_minus - e2 * g;
  if (in.f_zero && in.alpha) out.f_zero = *in.f_zero - e2 * *in.alpha * g;
  return out;
}

FieldSource solution_source(const SDYMSolution& sol) {
  return [sol](const Base& b, int degree) { return field_jets(sol, b, degree); };
}

FieldSource left_source(FieldSource inner) {
  return [inner = std::move(inner)](const Base& b, int degree) { return after_left(inner(b, degree)); };
}

FieldSource right_source(FieldSource inner) {
  return [inner = std::move(inner)](const Base& b, int degree) { return after_right(inner(b, degree)); };
}

OneForm med_one_form(FieldSource src) {
  return OneForm(Side::Unbarred, [src = std::move(src)](const Base& b, int degree) {
    const FieldJets fj = src(b, degree + 1);
    const Jet& fm = need(fj.f_minus, "f-");
    const Jet& f0 = need(fj.f_zero, "f0");
    const Jet u = truncate(fm, degree);
    return OneFormJets{-2.0 * d(f0, Variable::Y) * u + d(fm, Variable::ZBAR),
                       -2.0 * d(f0, Variable::Z) * u - d(fm, Variable::YBAR), fm.value()};
  });
}

OneForm mid_one_form(FieldSource src) {
  return OneForm(Side::Unbarred, [src = std::move(src)](const Base& b, int degree) {
    const FieldJets fj = src(b, degree + 1);
    const Jet& fm = need(fj.f_minus, "f-");
    const Jet& alpha = need(fj.alpha, "alpha");
    const Jet& tau = need(fj.tau, "tau");
    const Jet u = truncate(fm, degree);
    const Jet u2 = square(u);
    return OneFormJets{d(alpha, Variable::Y) * u2 + 2.0 * d(tau, Variable::ZBAR) * u + d(fm, Variable::ZBAR),
                       d(alpha, Variable::Z) * u2 - 2.0 * d(tau, Variable::YBAR) * u - d(fm, Variable::YBAR),
                       fm.value()};
  });
}

OneForm medi_one_form(FieldSource src) {
  return OneForm(Side::Barred, [src = std::move(src)](const Base& b, int degree) {
    const FieldJets fj = src(b, degree + 1);
    const Jet& fb = need(fj.fbar_plus, "fbar+");
    const Jet& g0 = need(fj.fbar_zero, "fbar0");
    const Jet v = truncate(fb, degree);
    return OneFormJets{-2.0 * d(g0, Variable::YBAR) * v + d(fb, Variable::Z),
                       -2.0 * d(g0, Variable::ZBAR) * v - d(fb, Variable::Y), fb.value()};
  });
}

OneForm midi_one_form(FieldSource src) {
  return OneForm(Side::Barred, [src = std::move(src)](const Base& b, int degree) {
    const FieldJets fj = src(b, degree + 1);
    const Jet& fb = need(fj.fbar_plus, "fbar+");
    const Jet& beta = need(fj.beta, "beta");
    const Jet& tau = need(fj.tau, "tau");
    const Jet v = truncate(fb, degree);
    const Jet v2 = square(v);
    return OneFormJets{d(beta, Variable::YBAR) * v2 + 2.0 * d(tau, Variable::Z) * v + d(fb, Variable::Z),
                       d(beta, Variable::ZBAR) * v2 - 2.0 * d(tau, Variable::Y) * v - d(fb, Variable::Y),
                       fb.value()};
  });
}

cplx closure_defect(const OneForm& form, const Base& base) {
  const auto [first, second] = pair_variables(form.pair());
  const OneFormJets w = form(base, 1);
  return (d(w.first, second) - d(w.second, first)).value();
}

IntegrationPath IntegrationPath::straight(RealSlicePoint base, RealSlicePoint target, int order) {
  return {base, target, {}, order};
}

IntegrationPath IntegrationPath::two_leg(RealSlicePoint base, RealSlicePoint target, int order) {
  return {base, target, {{target.y, base.z}}, order};
}

Jet potential_jet(const OneForm& form, const IntegrationPath& path, int degree, double tolerance) {
  const Base target = Base::on_slice(path.target);
  const bool barred = form.pair() == Side::Barred;
  const auto [first, second] = pair_variables(form.pair());
  const int i1 = static_cast<int>(first);
  const int i2 = static_cast<int>(second);

  Jet p = Jet::constant(0.0, target, degree);
  const JetLayout& lay = p.layout();
  // slots that only involve the frozen pair
  std::vector<int> frozen;
  for (std::size_t s = 0; s < lay.size(); ++s) {
    const auto& k = lay.indices[s];
    if (k[i1] == 0 && k[i2] == 0) frozen.push_back(static_cast<int>(s));
  }

  std::vector<RealSlicePoint> pts{path.base};
  pts.insert(pts.end(), path.corners.begin(), path.corners.end());
  pts.push_back(path.target);
  const GaussLegendreRule& rule = gauss_legendre(path.quadrature_order);
  const auto cj = [&](cplx c) { return barred ? std::conj(c) : c; };

  for (std::size_t seg = 0; seg + 1 < pts.size(); ++seg) {
    const RealSlicePoint a = pts[seg], b = pts[seg + 1];
    const cplx dy = cj(b.y - a.y), dz = cj(b.z - a.z);
    if (dy == 0.0 && dz == 0.0) continue;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double s = rule.nodes[q];
      const cplx y = cj(a.y + s * (b.y - a.y));
      const cplx z = cj(a.z + s * (b.z - a.z));
      const Base node = barred ? Base::enlarged(target[Variable::Y], y, target[Variable::Z], z)
                               : Base::enlarged(y, target[Variable::YBAR], z, target[Variable::ZBAR]);
      const OneFormJets w = guarded(ErrorCode::SingularOnPath, "one-form evaluation on the path",
                                    [&] { return form(node, degree); });
      if (std::abs(w.guard) < tolerance)
        throw Error(ErrorCode::SingularOnPath, "transformation denominator vanishes on the integration path");
      for (int slot : frozen)
        p.coeffs()[slot] += rule.weights[q] * (w.first.coeffs()[slot] * dy + w.second.coeffs()[slot] * dz);
    }
  }
  if (degree == 0) return p;

  const OneFormJets w = guarded(ErrorCode::SingularTransform, "one-form evaluation at the target",
                                [&] { return form(target, degree - 1); });
  for (std::size_t s = 0; s < lay.size(); ++s) {
    MultiIndex k = lay.indices[s];
    if (k[i1] > 0) {
      const int n = k[i1]--;
      p.coeffs()[s] = w.first.coeff(k) / static_cast<double>(n);
    } else if (k[i2] > 0) {
      const int n = k[i2]--;
      p.coeffs()[s] = w.second.coeff(k) / static_cast<double>(n);
    }
  }
  return p;
}

cplx integrate_potential(const OneForm& form, const IntegrationPath& path, double tolerance) {
  return potential_jet(form, path, 0, tolerance).value();
}

TransformedSolution::TransformedSolution(SDYMSolution sol, TransformKind kind, TransformConfig config)
    : sol_(std::move(sol)), kind_(kind), config_(config) {}

IntegrationPath TransformedSolution::path_to(RealSlicePoint target) const {
  return config_.two_leg_path ? IntegrationPath::two_leg(config_.base, target, config_.quadrature_order)
                              : IntegrationPath::straight(config_.base, target, config_.quadrature_order);
}

GaussArguments TransformedSolution::arguments(RealSlicePoint target) const {
  const Base t = Base::on_slice(target);
  const PointJets pj = sol_.evaluate(t, 0);
  const cplx alpha = pj.gauss.alpha.value();
  const cplx beta = pj.gauss.beta.value();
  const cplx g22 = pj.group(1, 1).value();
  const cplx fm = pj.f.minus.value();
  const cplx fb = pj.fbar.plus.value();
  const double tol = config_.singular_tolerance;
  const IntegrationPath path = path_to(target);
  const FieldSource src = solution_source(sol_);

  const auto nonsingular = [&](cplx c, const char* what) {
    if (std::abs(c) < tol) throw Error(ErrorCode::SingularTransform, std::string(what) + " vanishes at the target");
  };
  // tau + ln(f- fbar+ - e^-2tau), with e^-tau = G22
  const auto composed_middle = [&] {
    const cplx q = fm * fb - g22 * g22;
    if (std::abs(q) < tol) throw Error(ErrorCode::SingularTransform, "f- fbar+ - e^-2tau vanishes at the target");
    if (std::abs(q.imag()) <= 1e-12 * std::abs(q) && q.real() <= 0.0)
      throw Error(ErrorCode::NegativeArgument, "f- fbar+ - e^-2tau is real and negative at the target");
    return std::log(q) - std::log(g22);
  };

  switch (kind_) {
    case TransformKind::Left:
      nonsingular(fm, "f-");
      return {integrate_potential(mid_one_form(src), path, tol), std::log(fm) - std::log(g22), beta};
    case TransformKind::Right:
      nonsingular(fb, "fbar+");
      return {alpha, std::log(fb) - std::log(g22), integrate_potential(midi_one_form(src), path, tol)};
    case TransformKind::Backlund:
      return {integrate_potential(mid_one_form(src), path, tol), composed_middle(),
              integrate_potential(midi_one_form(left_source(src)), path, tol)};
    case TransformKind::BacklundReversed:
      return {integrate_potential(mid_one_form(right_source(src)), path, tol), composed_middle(),
              integrate_potential(midi_one_form(src), path, tol)};
  }
  throw std::logic_error("unknown transformation kind");
}

std::array<cplx, 4> TransformedSolution::group(RealSlicePoint target) const {
  const GaussArguments g = arguments(target);
  const cplx em = std::exp(-g.middle);
  return {std::exp(g.middle) + g.x_plus * g.x_minus * em, g.x_plus * em, g.x_minus * em, em};
}

double TransformedSolution::hermiticity_residual(RealSlicePoint target) const {
  const GaussArguments g = arguments(target);
  return std::max(std::abs(g.x_minus - std::conj(g.x_plus)), std::abs(g.middle.imag()));
}

TransformedSolution transform_left(const SDYMSolution& sol, const TransformConfig& config) {
  return TransformedSolution(sol, TransformKind::Left, config);
}

TransformedSolution transform_right(const SDYMSolution& sol, const TransformConfig& config) {
  return TransformedSolution(sol, TransformKind::Right, config);
}

TransformedSolution transform_right(const TransformedSolution& left) {
  if (left.kind() != TransformKind::Left)
    throw std::invalid_argument("transform_right composes only with a left transformation");
  return TransformedSolution(left.input(), TransformKind::Backlund, left.config());
}

TransformedSolution transform_left(const TransformedSolution& right) {
  if (right.kind() != TransformKind::Right)
    throw std::invalid_argument("transform_left composes only with a right transformation");
  return TransformedSolution(right.input(), TransformKind::BacklundReversed, right.config());
}

double prs_residual(const SDYMSolution& sol, RealSlicePoint point) {
  const PointJets pj = sol.evaluate(Base::on_slice(point), 0);
  return std::max(max_value_diff(pj.group, hermitian_conjugate(pj.group)),
                  max_value_diff(pj.fbar, algebra_hconj(pj.f)));
}

TransformedSolution backlund(const SDYMSolution& sol, const TransformConfig& config) {
  if (prs_residual(sol, config.base) > config.prs_tolerance)
    throw Error(ErrorCode::NotPRSInput, "input is not physically restricted at the base point");
  return TransformedSolution(sol, TransformKind::Backlund, config);
}

double commutativity_residual(const SDYMSolution& sol, RealSlicePoint target, const TransformConfig& config) {
  const GaussArguments a = TransformedSolution(sol, TransformKind::Backlund, config).arguments(target);
  const GaussArguments b = TransformedSolution(sol, TransformKind::BacklundReversed, config).arguments(target);
  return std::max({std::abs(a.x_plus - b.x_plus), std::abs(a.middle - b.middle), std::abs(a.x_minus - b.x_minus)});
}

Matrix2Jet left_factor_jets(const SDYMSolution& sol, RealSlicePoint target, int degree,
                            const TransformConfig& config) {
  const IntegrationPath path = config.two_leg_path
                                   ? IntegrationPath::two_leg(config.base, target, config.quadrature_order)
                                   : IntegrationPath::straight(config.base, target, config.quadrature_order);
  const Base t = Base::on_slice(target);
  const PointJets pj = sol.evaluate(t, degree);
  const Jet p = potential_jet(mid_one_form(solution_source(sol)), path, degree, config.singular_tolerance);
  const Jet& u = pj.f.minus;
  const Jet g = guarded(ErrorCode::SingularTransform, "f- at the target", [&] { return reciprocal(u); });
  return {u, p * g - pj.gauss.alpha * u, zeros_like(u), g};
}

AlgebraElement left_transformed_fbar(const SDYMSolution& sol, const Base& base, int degree) {
  const PointJets pj = sol.evaluate(base, degree);
  const Jet g = guarded(ErrorCode::SingularTransform, "f- at the base", [&] { return reciprocal(pj.f.minus); });
  const Matrix2Jet conj_xp = inverse(pj.group) * generators(base, degree).x_plus * pj.group;
  AlgebraElement shift = AlgebraElement::from_matrix(conj_xp);
  shift.plus = shift.plus * g;
  shift.zero = shift.zero * g;
  shift.minus = shift.minus * g;
  return pj.fbar - shift;
}

}  // namespace sdym
