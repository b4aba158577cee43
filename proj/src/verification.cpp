#include "sdym/verification.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "sdym/errors.hpp"

namespace sdym {

namespace {

using V = Variable;

Matrix2Jet d(const Matrix2Jet& a, V v) { return differentiate(a, v); }
AlgebraElement d(const AlgebraElement& a, V v) { return differentiate(a, v); }
AlgebraElement d(const AlgebraElement& a, V v, V w) { return differentiate(differentiate(a, v), w); }
Jet d(const Jet& a, V v) { return differentiate(a, v); }

Matrix2Jet val(const Matrix2Jet& m) { return truncate(m, 0); }
AlgebraElement val(const AlgebraElement& a) { return truncate(a, 0); }

// Running maximum for one identity; NaN residuals count as failures.
class Tracker {
 public:
  Tracker(std::string name, double tol) {
    e_.identity = std::move(name);
    e_.tol = tol;
  }
  void add(double r, RealSlicePoint p) {
    if (std::isnan(r)) nan_ = true;
    if (first_ || r > e_.max_residual) {
      e_.max_residual = r;
      e_.at = p;
      first_ = false;
    }
  }
  void fail(const std::string& note) {
    failed_ = true;
    e_.note = note;
  }
  ResidualEntry done() const {
    ResidualEntry out = e_;
    out.pass = !nan_ && !failed_ && out.max_residual <= out.tol;
    return out;
  }

 private:
  ResidualEntry e_;
  bool first_ = true;
  bool nan_ = false;
  bool failed_ = false;
};

ResidualEntry skipped(const std::string& name, double tol, const std::string& note) {
  ResidualEntry e;
  e.identity = name;
  e.tol = tol;
  e.skipped = true;
  e.note = note;
  return e;
}

std::vector<ResidualEntry> finish(std::vector<Tracker>& ts) {
  std::vector<ResidualEntry> out;
  for (const auto& t : ts) out.push_back(t.done());
  return out;
}

}  // namespace

bool ResidualReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const ResidualEntry& e) { return e.pass || e.skipped; });
}

const ResidualEntry& ResidualReport::find(const std::string& identity) const {
  for (const auto& e : entries)
    if (e.identity == identity) return e;
  throw std::out_of_range("identity not in report: " + identity);
}

const std::vector<std::string>& identity_catalogue() {
  static const std::vector<std::string> names{
      "GFL_ybar",     "GFL_zbar",     "GFR_y",         "GFR_z",         "R",           "L",
      "cross_zy",     "cross_zz",     "cross_yy",      "PRS_G",         "PRS_f",       "P_fminus_z",
      "P_fminus_y",   "P_tau_ybar",   "P_tau_zbar",    "MED_MID",       "closure_MED", "closure_MEDI",
      "hermiticity_GLR", "commutativity"};
  return names;
}

std::vector<RealSlicePoint> sample_points(int n, std::uint64_t rng_seed, double radius) {
  std::mt19937_64 rng(rng_seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  std::vector<RealSlicePoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::array<double, 4> x;
    double norm = 0.0;
    for (auto& c : x) {
      c = normal(rng);
      norm += c * c;
    }
    const double r = radius * std::pow(uniform(rng), 0.25) / std::sqrt(norm);
    out.push_back({{x[0] * r, x[1] * r}, {x[2] * r, x[3] * r}});
  }
  return out;
}

std::vector<RealSlicePoint> sample_points(const SDYMSolution& sol, const VerificationConfig& config) {
  // draw in blocks from one stream; if the solution is singular almost everywhere
  // (vacuum: f = 0) fall back to the unfiltered points
  const int n = config.samples;
  const auto candidates = sample_points(10 * n, config.rng_seed, config.radius);
  std::vector<RealSlicePoint> out;
  for (const auto& p : candidates) {
    if (static_cast<int>(out.size()) == n) break;
    const Base b = Base::on_slice(p);
    if (std::abs(sol.f(b, 0).minus.value()) < config.singular_exclusion) continue;
    if (std::abs(sol.fbar(b, 0).plus.value()) < config.singular_exclusion) continue;
    out.push_back(p);
  }
  if (static_cast<int>(out.size()) < n) return {candidates.begin(), candidates.begin() + n};
  return out;
}

std::vector<ResidualEntry> check_first_order(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                             double tol) {
  std::vector<Tracker> ts{{"GFL_ybar", tol}, {"GFL_zbar", tol}, {"GFR_y", tol}, {"GFR_z", tol}};
  for (const auto& p : points) {
    const PointJets pj = sol.evaluate(Base::on_slice(p), 1);
    const Matrix2Jet g = val(pj.group), g_inv = inverse(g);
    ts[0].add(max_value_diff(val(d(pj.group, V::YBAR)) * g_inv, d(pj.f, V::Z).to_matrix()), p);
    ts[1].add(max_value_diff(val(d(pj.group, V::ZBAR)) * g_inv, -1.0 * d(pj.f, V::Y).to_matrix()), p);
    ts[2].add(max_value_diff(g_inv * val(d(pj.group, V::Y)), d(pj.fbar, V::ZBAR).to_matrix()), p);
    ts[3].add(max_value_diff(g_inv * val(d(pj.group, V::Z)), -1.0 * d(pj.fbar, V::YBAR).to_matrix()), p);
  }
  return finish(ts);
}

std::vector<ResidualEntry> check_second_order(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                              double tol) {
  std::vector<Tracker> ts{{"R", tol}, {"L", tol}};
  for (const auto& p : points) {
    const Base b = Base::on_slice(p);
    const AlgebraElement f = sol.f(b, 2), fb = sol.fbar(b, 2);
    const auto r = d(f, V::Y, V::YBAR) + d(f, V::Z, V::ZBAR) - commutator(val(d(f, V::Z)), val(d(f, V::Y)));
    const auto l = d(fb, V::Y, V::YBAR) + d(fb, V::Z, V::ZBAR) -
                   commutator(val(d(fb, V::YBAR)), val(d(fb, V::ZBAR)));
    const auto zero = AlgebraElement::zeros(b, 0);
    ts[0].add(max_value_diff(r, zero), p);
    ts[1].add(max_value_diff(l, zero), p);
  }
  return finish(ts);
}

std::vector<ResidualEntry> check_cross_relations(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                                 double tol) {
  std::vector<Tracker> ts{{"cross_zy", tol}, {"cross_zz", tol}, {"cross_yy", tol}};
  for (const auto& p : points) {
    const PointJets pj = sol.evaluate(Base::on_slice(p), 2);
    const Matrix2Jet g = val(pj.group);
    const auto m = [](const AlgebraElement& a) { return a.to_matrix(); };
    ts[0].add(max_value_diff(m(d(pj.f, V::Z, V::Y)) * g, g * m(d(pj.fbar, V::ZBAR, V::YBAR))), p);
    ts[1].add(max_value_diff(m(d(pj.f, V::Z, V::Z)) * g, -1.0 * g * m(d(pj.fbar, V::YBAR, V::YBAR))), p);
    ts[2].add(max_value_diff(m(d(pj.f, V::Y, V::Y)) * g, -1.0 * g * m(d(pj.fbar, V::ZBAR, V::ZBAR))), p);
  }
  return finish(ts);
}

std::vector<ResidualEntry> check_prs(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                     double tol) {
  std::vector<Tracker> ts{{"PRS_G", tol}, {"PRS_f", tol}};
  for (const auto& p : points) {
    const PointJets pj = sol.evaluate(Base::on_slice(p), 0);
    ts[0].add(max_value_diff(pj.group, hermitian_conjugate(pj.group)), p);
    ts[1].add(max_value_diff(pj.fbar, algebra_hconj(pj.f)), p);
  }
  return finish(ts);
}

std::vector<ResidualEntry> check_prs(const TransformedSolution& sol, const std::vector<RealSlicePoint>& points,
                                     double tol) {
  Tracker t("PRS_G", tol);
  for (const auto& p : points) {
    try {
      const auto g = sol.group(p);
      t.add(std::max({std::abs(g[1] - std::conj(g[2])), std::abs(g[0].imag()), std::abs(g[3].imag())}), p);
    } catch (const Error& e) {
      t.fail(e.what());
      break;
    }
  }
  return {t.done(), skipped("PRS_f", tol, "transformed f is not reconstructed")};
}

std::vector<ResidualEntry> check_components(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                            double tol) {
  std::vector<Tracker> ts{{"P_fminus_z", tol}, {"P_fminus_y", tol}, {"P_tau_ybar", tol}, {"P_tau_zbar", tol}};
  for (const auto& p : points) {
    const PointJets pj = sol.evaluate(Base::on_slice(p), 1);
    const auto& g = pj.gauss;
    const cplx e2 = std::exp(-2.0 * g.tau.value());
    const cplx alpha = g.alpha.value();
    const cplx fm_z = d(pj.f.minus, V::Z).value(), fm_y = d(pj.f.minus, V::Y).value();
    ts[0].add(std::abs(fm_z - d(g.beta, V::YBAR).value() * e2), p);
    ts[1].add(std::abs(fm_y + d(g.beta, V::ZBAR).value() * e2), p);
    ts[2].add(std::abs(d(g.tau, V::YBAR).value() - (d(pj.f.zero, V::Z).value() - alpha * fm_z)), p);
    ts[3].add(std::abs(-d(g.tau, V::ZBAR).value() - (d(pj.f.zero, V::Y).value() - alpha * fm_y)), p);
  }
  return finish(ts);
}

std::vector<ResidualEntry> check_one_forms(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                           double tol) {
  std::vector<Tracker> ts{{"MED_MID", tol}, {"closure_MED", tol}, {"closure_MEDI", tol}};
  const FieldSource src = solution_source(sol);
  const OneForm med = med_one_form(src), mid = mid_one_form(src), medi = medi_one_form(src);
  for (const auto& p : points) {
    const Base b = Base::on_slice(p);
    const PointJets pj = sol.evaluate(b, 1);
    const Jet q = pj.gauss.alpha * square(pj.f.minus);
    const auto w_mid = mid(b, 0), w_med = med(b, 0);
    ts[0].add(std::max(std::abs(w_mid.first.value() - w_med.first.value() - d(q, V::Y).value()),
                       std::abs(w_mid.second.value() - w_med.second.value() - d(q, V::Z).value())),
              p);
    ts[1].add(std::abs(closure_defect(med, b)), p);
    ts[2].add(std::abs(closure_defect(medi, b)), p);
  }
  return finish(ts);
}

std::vector<ResidualEntry> check_backlund(const SDYMSolution& sol, const std::vector<RealSlicePoint>& points,
                                          const TransformConfig& transform, double tol) {
  std::vector<Tracker> ts{{"hermiticity_GLR", tol}, {"commutativity", tol}};
  try {
    const TransformedSolution lr = backlund(sol, transform);
    for (const auto& p : points) {
      ts[0].add(lr.hermiticity_residual(p), p);
      ts[1].add(commutativity_residual(sol, p, transform), p);
    }
  } catch (const Error& e) {
    ts[0].fail(e.what());
    ts[1].fail(e.what());
  }
  return finish(ts);
}

std::vector<ResidualEntry> check_gauge_covariance(const SDYMSolution& sol, const PolyMatrix& a_bar,
                                                  const PolyMatrix& a, const std::vector<RealSlicePoint>& points,
                                                  double tol) {
  const SDYMSolution gauged = sol.gauged(a_bar, a);
  auto out = check_first_order(gauged, points, tol);
  for (auto&& e : check_second_order(gauged, points, tol)) out.push_back(std::move(e));
  for (auto&& e : check_prs(gauged, points, tol)) out.push_back(std::move(e));
  return out;
}

ResidualReport verify(const SeedSolution& any, const VerificationConfig& config) {
  ResidualReport report;
  const auto* sol = std::get_if<SDYMSolution>(&any);
  if (!sol) {
    for (const auto& name : identity_catalogue()) {
      const bool quad = name == "hermiticity_GLR" || name == "commutativity";
      report.entries.push_back(
          skipped(name, quad ? config.quadrature_tol : config.exact_tol, "charge-only seed carries no G or f"));
    }
    return report;
  }
  const auto points = sample_points(*sol, config);
  const double tol = config.exact_tol;
  const auto add = [&](std::vector<ResidualEntry> es) {
    for (auto& e : es) report.entries.push_back(std::move(e));
  };
  add(check_first_order(*sol, points, tol));
  add(check_second_order(*sol, points, tol));
  add(check_cross_relations(*sol, points, tol));
  add(check_prs(*sol, points, tol));
  add(check_components(*sol, points, tol));
  add(check_one_forms(*sol, points, std::max(tol, 1e-11)));

  // D^R D^L is defined where f- fbar+ - e^-2tau > 0; beyond its zero set the
  // middle exponent leaves the real line
  std::vector<RealSlicePoint> tpoints;
  for (const auto& p : points) {
    if (static_cast<int>(tpoints.size()) == config.transform_samples) break;
    const PointJets pj = sol->evaluate(Base::on_slice(p), 0);
    const cplx g22 = pj.group(1, 1).value();
    if ((pj.f.minus.value() * pj.fbar.plus.value() - g22 * g22).real() > config.singular_exclusion)
      tpoints.push_back(p);
  }
  const Base base = Base::on_slice(config.transform.base);
  std::string why;
  if (std::abs(sol->f(base, 0).minus.value()) < config.singular_exclusion) why = "f- vanishes at the base point";
  else if (tpoints.empty()) why = "no sample point where f- fbar+ - e^-2tau > 0";
  if (!why.empty()) {
    report.entries.push_back(skipped("hermiticity_GLR", config.quadrature_tol, why));
    report.entries.push_back(skipped("commutativity", config.quadrature_tol, why));
  } else {
    add(check_backlund(*sol, tpoints, config.transform, config.quadrature_tol));
  }
  return report;
}

void write_report_json(std::ostream& os, const ResidualReport& report) {
  nlohmann::ordered_json j;
  j["pass"] = report.pass();
  auto& list = j["identities"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json x;
    x["identity"] = e.identity;
    x["max_residual"] = e.max_residual;
    x["at"] = {e.at.y.real(), e.at.y.imag(), e.at.z.real(), e.at.z.imag()};
    x["tol"] = e.tol;
    x["pass"] = e.pass;
    if (e.skipped) x["skipped"] = true;
    if (!e.note.empty()) x["note"] = e.note;
    list.push_back(std::move(x));
  }
  os << j.dump(2) << '\n';
}

std::vector<Corruption> single_datum_corruptions(const SeedSpec& seed, double size) {
  using C = CorruptionChannel;
  std::vector<Corruption> out;
  const auto shift_terms = [&](const BivariatePoly& poly, const std::string& name, auto assign,
                               std::vector<C> channels) {
    const auto& terms = poly.terms();
    for (std::size_t t = 0; t < terms.size(); ++t) {
      std::vector<Monomial> changed = terms;
      changed[t].c += size;
      Corruption c{name + "[" + std::to_string(terms[t].m) + "," + std::to_string(terms[t].n) + "]", seed, channels};
      assign(c.perturbed, BivariatePoly(std::move(changed)));
      out.push_back(std::move(c));
    }
  };
  for (std::size_t i = 0; i < seed.factors.size(); ++i) {
    const std::string name = "factors[" + std::to_string(i) + "]";
    if (seed.factors[i].shape == FactorShape::Diag) {
      Corruption c{name + ".d", seed, {C::PsiBar, C::Psi, C::F, C::FBar}};
      c.perturbed.factors[i].d += size;
      out.push_back(std::move(c));
      continue;
    }
    shift_terms(seed.factors[i].poly, name + ".poly",
                [i](SeedSpec& s, BivariatePoly p) { s.factors[i].poly = std::move(p); }, {C::PsiBar, C::Psi, C::F, C::FBar});
  }
  shift_terms(seed.chi.plus, "chi.plus", [](SeedSpec& s, BivariatePoly p) { s.chi.plus = std::move(p); },
              {C::F, C::FBar});
  shift_terms(seed.chi.zero, "chi.zero", [](SeedSpec& s, BivariatePoly p) { s.chi.zero = std::move(p); },
              {C::F, C::FBar});
  shift_terms(seed.chi.minus, "chi.minus", [](SeedSpec& s, BivariatePoly p) { s.chi.minus = std::move(p); },
              {C::F, C::FBar});
  return out;
}

SDYMSolution corrupted_solution(const SeedSpec& seed, const Corruption& c, CorruptionChannel channel) {
  const SDYMSolution sol = build_solution(seed);
  const SDYMSolution other = build_solution(c.perturbed);
  switch (channel) {
    case CorruptionChannel::PsiBar:
      return sol.with_psi_bar_of(other);
    case CorruptionChannel::Psi:
      return sol.with_psi_of(other);
    case CorruptionChannel::F:
      return sol.with_f_of(other);
    case CorruptionChannel::FBar:
      return sol.with_fbar_of(other);
  }
  throw std::logic_error("unknown corruption channel");
}

double data_difference(const SDYMSolution& a, const SDYMSolution& b, const std::vector<RealSlicePoint>& points) {
  double r = 0.0;
  for (const auto& p : points) {
    const PointJets x = a.evaluate(Base::on_slice(p), 0), y = b.evaluate(Base::on_slice(p), 0);
    r = std::max({r, max_value_diff(x.group, y.group), max_value_diff(x.f, y.f), max_value_diff(x.fbar, y.fbar)});
  }
  return r;
}

std::string to_string(CorruptionChannel c) {
  switch (c) {
    case CorruptionChannel::PsiBar:
      return "psi_bar";
    case CorruptionChannel::Psi:
      return "psi";
    case CorruptionChannel::F:
      return "f";
    case CorruptionChannel::FBar:
      return "fbar";
  }
  return "?";
}

}  // namespace sdym
