#pragma once

// Left, right and Baecklund transformations for A1.
//
// The left factor is S = exp(ln f- h) exp(A X+). A enters the new group element
// only through the X+ argument P = (alpha + A) f-^2, which is the potential of
// the closed one-form
//   dP/dy = alpha_y f-^2 + 2 tau_zbar f- + d_zbar f-
//   dP/dz = alpha_z f-^2 - 2 tau_ybar f- - d_ybar f-
// in (y, z) at fixed (ybar, zbar). The right transformation is its hermitian
// image in (ybar, zbar). Potentials vanish at the configured base point for all
// values of the frozen pair.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "sdym/lie2.hpp"
#include "sdym/poly.hpp"
#include "sdym/seeds.hpp"

namespace sdym {

/// Jets of what the transformations read at one expansion point. Entries a
/// transformation cannot supply in closed form are left empty.
struct FieldJets {
  std::optional<Jet> alpha, tau, beta;
  std::optional<Jet> f_minus, f_zero;
  std::optional<Jet> fbar_plus, fbar_zero;
};

FieldJets field_jets(const SDYMSolution& sol, const Base& base, int degree);
/// tau + ln f-, fbar+ - e^-2tau / f-, fbar0 - e^-2tau beta / f-; alpha and f dropped.
FieldJets after_left(const FieldJets& in);
/// tau + ln fbar+, f- - e^-2tau / fbar+, f0 - e^-2tau alpha / fbar+; beta and fbar dropped.
FieldJets after_right(const FieldJets& in);

using FieldSource = std::function<FieldJets(const Base&, int)>;
FieldSource solution_source(const SDYMSolution& sol);
FieldSource left_source(FieldSource inner);
FieldSource right_source(FieldSource inner);

struct OneFormJets {
  Jet first;   // along y (or ybar)
  Jet second;  // along z (or zbar)
  cplx guard;  // f- (or fbar+); its zeros are singular points of the transformation
};

class OneForm {
 public:
  using Evaluator = std::function<OneFormJets(const Base&, int)>;

  OneForm(Side pair, Evaluator eval) : pair_(pair), eval_(std::move(eval)) {}

  /// Side::Unbarred integrates over (y, z), Side::Barred over (ybar, zbar).
  Side pair() const noexcept { return pair_; }
  OneFormJets operator()(const Base& base, int degree) const { return eval_(base, degree); }

 private:
  Side pair_;
  Evaluator eval_;
};

/// (A f-^2)_y = -2 f0_y f- + d_zbar f-,  (A f-^2)_z = -2 f0_z f- - d_ybar f-
OneForm med_one_form(FieldSource src);
/// ((A + alpha) f-^2) form; differs from MED by d(alpha f-^2).
OneForm mid_one_form(FieldSource src);
/// Hermitian image of MED on (ybar, zbar).
OneForm medi_one_form(FieldSource src);
/// Hermitian image of MID: the ((B + beta) fbar+^2) form.
OneForm midi_one_form(FieldSource src);

/// d_second(first) - d_first(second) at `base`.
cplx closure_defect(const OneForm& form, const Base& base);

struct IntegrationPath {
  RealSlicePoint base;
  RealSlicePoint target;
  std::vector<RealSlicePoint> corners;  // visited in order between base and target
  int quadrature_order = 32;

  static IntegrationPath straight(RealSlicePoint base, RealSlicePoint target, int order = 32);
  /// base -> (target.y, base.z) -> target
  static IntegrationPath two_leg(RealSlicePoint base, RealSlicePoint target, int order = 32);
};

inline constexpr double kPathSingularTolerance = 1e-8;

/// Potential of `form` at the path target, normalized to zero at the path base.
/// The frozen pair is held at the target's values; for a barred form the path
/// runs through the conjugate points. Throws SingularOnPath when the guard gets
/// within `tolerance` of zero at a node.
cplx integrate_potential(const OneForm& form, const IntegrationPath& path,
                         double tolerance = kPathSingularTolerance);

/// Full jet of the same potential at the (real-slice) target: derivatives along
/// the integration pair come from the form itself, derivatives along the frozen
/// pair from integrating the form's jets.
Jet potential_jet(const OneForm& form, const IntegrationPath& path, int degree,
                  double tolerance = kPathSingularTolerance);

enum class TransformKind { Left, Right, Backlund, BacklundReversed };

struct TransformConfig {
  RealSlicePoint base{0.0, 0.0};
  int quadrature_order = 32;
  bool two_leg_path = false;
  double singular_tolerance = kPathSingularTolerance;
  double prs_tolerance = 1e-10;
};

/// Values of the three Gauss arguments (X+ argument, h exponent, X- argument).
struct GaussArguments {
  cplx x_plus;
  cplx middle;
  cplx x_minus;
};

class TransformedSolution {
 public:
  TransformedSolution(SDYMSolution sol, TransformKind kind, TransformConfig config);

  TransformKind kind() const noexcept { return kind_; }
  const SDYMSolution& input() const noexcept { return sol_; }
  const TransformConfig& config() const noexcept { return config_; }

  GaussArguments arguments(RealSlicePoint target) const;
  /// Row-major values of the transformed group element.
  std::array<cplx, 4> group(RealSlicePoint target) const;
  /// max(|X- arg - conj(X+ arg)|, |Im middle|).
  double hermiticity_residual(RealSlicePoint target) const;

 private:
  IntegrationPath path_to(RealSlicePoint target) const;

  SDYMSolution sol_;
  TransformKind kind_;
  TransformConfig config_;
};

TransformedSolution transform_left(const SDYMSolution& sol, const TransformConfig& config = {});
TransformedSolution transform_right(const SDYMSolution& sol, const TransformConfig& config = {});
/// D^R applied to a D^L output (and vice versa) gives the composed transformations.
TransformedSolution transform_right(const TransformedSolution& left);
TransformedSolution transform_left(const TransformedSolution& right);
/// D^R D^L on a physically restricted input; throws NotPRSInput otherwise.
TransformedSolution backlund(const SDYMSolution& sol, const TransformConfig& config = {});

/// Largest difference of the three Gauss arguments between D^R D^L and D^L D^R.
double commutativity_residual(const SDYMSolution& sol, RealSlicePoint target,
                              const TransformConfig& config = {});

/// max(|G - G^H|, |fbar - f^H|) over values at a real-slice point.
double prs_residual(const SDYMSolution& sol, RealSlicePoint point);

/// Jets of the left factor S = [[f-, P/f- - alpha f-], [0, 1/f-]] at `target`.
Matrix2Jet left_factor_jets(const SDYMSolution& sol, RealSlicePoint target, int degree,
                            const TransformConfig& config = {});
/// fbar after the left transformation, all components: fbar - G^-1 X+ G / f-.
AlgebraElement left_transformed_fbar(const SDYMSolution& sol, const Base& base, int degree);

}  // namespace sdym
