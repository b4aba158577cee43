// sdym: verify seeds, apply the Backlund transformation at a point, and
// compute charge profiles and totals.
//
// Exit status: 0 success, 1 failed identities or a numerical diagnostic,
// 2 malformed seed file.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdym/backlund.hpp"
#include "sdym/charge.hpp"
#include "sdym/errors.hpp"
#include "sdym/seed_io.hpp"
#include "sdym/verification.hpp"

using namespace sdym;
using ojson = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string seed_path;
  int jet_degree = 4;
  int quad_order = 32;
  std::string base = "0,0,0,0";
  int samples = 100;
  std::uint64_t rng_seed = 0;
  double tol = 1e-12;
  double quad_tol = 1e-8;
  std::string out;
};

void add_common(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--seed", rc.seed_path, "seed JSON file")->required();
  cmd->add_option("--jet-degree", rc.jet_degree, "jet truncation degree (>= 4 for the charge operator)")
      ->check(CLI::Range(4, kMaxJetDegree));
  cmd->add_option("--quad-order", rc.quad_order, "Gauss-Legendre nodes per panel")->check(CLI::PositiveNumber);
  cmd->add_option("--base", rc.base, "potential base point y_re,y_im,z_re,z_im");
  cmd->add_option("--samples", rc.samples, "random real-slice points")->check(CLI::PositiveNumber);
  cmd->add_option("--rng-seed", rc.rng_seed, "sampling seed");
  cmd->add_option("--tol", rc.tol, "tolerance of the exact identities")->check(CLI::PositiveNumber);
  cmd->add_option("--quad-tol", rc.quad_tol, "tolerance of quadrature-limited quantities")->check(CLI::PositiveNumber);
  cmd->add_option("--out", rc.out, "output file (default stdout)");
}

RealSlicePoint parse_point(const std::string& s, const char* what) {
  std::istringstream in(s);
  double v[4];
  char sep;
  for (int i = 0; i < 4; ++i) {
    if (!(in >> v[i])) throw CLI::ValidationError(what, "expected y_re,y_im,z_re,z_im");
    if (i < 3 && !(in >> sep && sep == ',')) throw CLI::ValidationError(what, "expected y_re,y_im,z_re,z_im");
  }
  if (in >> sep) throw CLI::ValidationError(what, "trailing characters");
  return {{v[0], v[1]}, {v[2], v[3]}};
}

TransformConfig transform_config(const RunConfig& rc) {
  TransformConfig t;
  t.base = parse_point(rc.base, "--base");
  t.quadrature_order = rc.quad_order;
  return t;
}

// Writes to --out, or stdout.
template <class F>
void emit(const RunConfig& rc, F&& write) {
  if (rc.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream os(rc.out);
  if (!os) throw std::runtime_error("cannot write " + rc.out);
  write(os);
}

ojson cplx_json(cplx c) { return ojson::array({c.real(), c.imag()}); }

ojson args_json(const GaussArguments& g) {
  return {{"x_plus", cplx_json(g.x_plus)}, {"middle", cplx_json(g.middle)}, {"x_minus", cplx_json(g.x_minus)}};
}

int cmd_verify(const RunConfig& rc) {
  const SeedSolution sol = build_from_file(load_seed(rc.seed_path));
  VerificationConfig vc;
  vc.samples = rc.samples;
  vc.rng_seed = rc.rng_seed;
  vc.exact_tol = rc.tol;
  vc.quadrature_tol = rc.quad_tol;
  vc.transform = transform_config(rc);
  const ResidualReport report = verify(sol, vc);
  emit(rc, [&](std::ostream& os) { write_report_json(os, report); });
  return report.pass() ? 0 : 1;
}

int cmd_transform(const RunConfig& rc, const std::string& point_text) {
  const RealSlicePoint point = parse_point(point_text, "--point");
  const SeedSolution any = build_from_file(load_seed(rc.seed_path));
  const auto* sol = std::get_if<SDYMSolution>(&any);
  if (!sol) throw Error(ErrorCode::UnsupportedSeed, "transform needs a full_gauge seed");
  const TransformConfig cfg = transform_config(rc);

  const TransformedSolution lr = backlund(*sol, cfg);
  const TransformedSolution rl = transform_left(transform_right(*sol, cfg));
  const GaussArguments a = lr.arguments(point);
  const double herm = lr.hermiticity_residual(point);
  const double comm = commutativity_residual(*sol, point, cfg);

  ojson j;
  j["point"] = {point.y.real(), point.y.imag(), point.z.real(), point.z.imag()};
  j["lr"] = args_json(a);
  j["rl"] = args_json(rl.arguments(point));
  j["hermiticity_residual"] = herm;
  j["commutativity_residual"] = comm;
  j["tol"] = rc.quad_tol;
  emit(rc, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return herm < rc.quad_tol && comm < rc.quad_tol ? 0 : 1;
}

int cmd_charge_profile(const RunConfig& rc, double r_max, int n) {
  const SeedSolution sol = build_from_file(load_seed(rc.seed_path));
  const RadialProfile profile = radial_profile(sol, r_max, n, rc.seed_path);
  emit(rc, [&](std::ostream& os) { write_profile_csv(os, profile); });
  return 0;
}

int cmd_total_charge(const RunConfig& rc, const std::string& method) {
  const SeedSolution sol = build_from_file(load_seed(rc.seed_path));
  TotalChargeOptions opts;
  opts.panel_order = rc.quad_order;
  const TotalCharge t = total_charge(sol, method == "grid" ? ChargeMethod::Grid : ChargeMethod::Radial, opts);
  ojson j;
  j["value"] = t.value;
  j["method"] = to_string(t.method);
  j["error_estimate"] = t.error_estimate;
  emit(rc, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return 0;
}

// Numerical diagnostics go to stdout as JSON so scripted callers can read them.
int report_error(const Error& e) {
  ojson j;
  j["error"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  std::cout << j.dump(2) << '\n';
  return e.code() == ErrorCode::MalformedSeed ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-dual Yang-Mills seeds, Backlund transformations and instanton charge"};
  app.require_subcommand(1);
  RunConfig rc;

  auto* verify_cmd = app.add_subcommand("verify", "check every field-equation identity on a seed");
  add_common(verify_cmd, rc);

  std::string point;
  auto* transform_cmd = app.add_subcommand("transform", "Gauss arguments of the Backlund transform at a point");
  add_common(transform_cmd, rc);
  transform_cmd->add_option("--point", point, "target y_re,y_im,z_re,z_im")->required();

  double r_max = 5.0;
  int n = 50;
  auto* profile_cmd = app.add_subcommand("charge-profile", "radial charge density before and after the transform");
  add_common(profile_cmd, rc);
  profile_cmd->add_option("--r-max", r_max, "largest radius")->check(CLI::PositiveNumber);
  profile_cmd->add_option("--n", n, "number of radii")->check(CLI::PositiveNumber);

  std::string method = "radial";
  auto* total_cmd = app.add_subcommand("total-charge", "integrated charge of the transformed seed");
  add_common(total_cmd, rc);
  total_cmd->add_option("--method", method, "radial or grid")->check(CLI::IsMember({"radial", "grid"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) return cmd_verify(rc);
    if (*transform_cmd) return cmd_transform(rc, point);
    if (*profile_cmd) return cmd_charge_profile(rc, r_max, n);
    if (*total_cmd) return cmd_total_charge(rc, method);
  } catch (const Error& e) {
    return report_error(e);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
