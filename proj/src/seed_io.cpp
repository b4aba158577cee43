#include "sdym/seed_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sdym/errors.hpp"

namespace sdym {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedSeed, what); }

double number(const json& j, const std::string& where) {
  if (!j.is_number()) malformed(where + ": expected a number");
  return j.get<double>();
}

cplx complex_value(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2) malformed(where + ": expected a number or [re, im]");
  return {number(j[0], where), number(j[1], where)};
}

BivariatePoly poly(const json& j, const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected a list of [m, n, re, im]");
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& t = j[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() != 4) malformed(at + ": expected [m, n, re, im]");
    if (!t[0].is_number_integer() || !t[1].is_number_integer() || t[0].get<int>() < 0 || t[1].get<int>() < 0)
      malformed(at + ": exponents must be non-negative integers");
    terms.push_back({t[0].get<int>(), t[1].get<int>(), {number(t[2], at), number(t[3], at)}});
  }
  return BivariatePoly(std::move(terms));
}

BivariatePoly optional_poly(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) return {};
  return poly(*it, where + "." + key);
}

json poly_json(const BivariatePoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back({t.m, t.n, t.c.real(), t.c.imag()});
  return out;
}

CorruptionChannel channel_from(const std::string& s) {
  for (auto c : {CorruptionChannel::PsiBar, CorruptionChannel::Psi, CorruptionChannel::F, CorruptionChannel::FBar})
    if (to_string(c) == s) return c;
  malformed("corruption.channel: expected psi_bar, psi, f or fbar");
}

}  // namespace

SeedFile parse_seed(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("top level must be an object");

  SeedFile file;
  SeedSpec& s = file.seed;
  const std::string kind = j.value("kind", "full_gauge");
  if (kind == "full_gauge") {
    s.kind = SeedKind::FullGauge;
  } else if (kind == "charge_only") {
    s.kind = SeedKind::ChargeOnly;
  } else {
    malformed("kind: expected full_gauge or charge_only");
  }

  if (s.kind == SeedKind::FullGauge) {
    if (const auto it = j.find("factors"); it != j.end()) {
      if (!it->is_array()) malformed("factors: expected a list");
      for (std::size_t i = 0; i < it->size(); ++i) {
        const json& f = (*it)[i];
        const std::string at = "factors[" + std::to_string(i) + "]";
        if (!f.is_object() || !f.contains("shape") || !f["shape"].is_string()) malformed(at + ": missing shape");
        const std::string shape = f["shape"];
        GaugeFactor g;
        if (shape == "upper" || shape == "lower") {
          g.shape = shape == "upper" ? FactorShape::Upper : FactorShape::Lower;
          if (!f.contains("poly")) malformed(at + ": missing poly");
          g.poly = poly(f["poly"], at + ".poly");
        } else if (shape == "diag") {
          g.shape = FactorShape::Diag;
          if (!f.contains("d")) malformed(at + ": missing d");
          g.d = complex_value(f["d"], at + ".d");
          if (std::abs(g.d) < 1e-300) malformed(at + ".d: must be nonzero");
        } else {
          malformed(at + ".shape: expected upper, lower or diag");
        }
        s.factors.push_back(std::move(g));
      }
    }
    if (const auto it = j.find("chi"); it != j.end()) {
      if (!it->is_object()) malformed("chi: expected an object");
      s.chi.plus = optional_poly(*it, "plus", "chi");
      s.chi.zero = optional_poly(*it, "zero", "chi");
      s.chi.minus = optional_poly(*it, "minus", "chi");
    }
  } else {
    for (const char* key : {"theta_bar", "phi_bar", "psi_bar"})
      if (!j.contains(key)) malformed(std::string("charge_only seed needs ") + key);
    s.theta_bar = poly(j["theta_bar"], "theta_bar");
    s.phi_bar = poly(j["phi_bar"], "phi_bar");
    s.psi_bar = poly(j["psi_bar"], "psi_bar");
  }

  if (const auto it = j.find("corruption"); it != j.end()) {
    if (s.kind != SeedKind::FullGauge) malformed("corruption: only full_gauge seeds can be corrupted");
    if (!it->is_object() || !it->contains("datum") || !(*it)["datum"].is_string())
      malformed("corruption: needs a datum name");
    CorruptionRequest c;
    c.datum = (*it)["datum"];
    c.channel = channel_from(it->value("channel", "f"));
    if (it->contains("size")) c.size = number((*it)["size"], "corruption.size");
    file.corruption = c;
  }
  return file;
}

SeedFile load_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_seed(ss.str());
}

std::string seed_to_json(const SeedFile& file) {
  const SeedSpec& s = file.seed;
  nlohmann::ordered_json j;
  if (s.kind == SeedKind::FullGauge) {
    j["kind"] = "full_gauge";
    j["factors"] = nlohmann::ordered_json::array();
    for (const auto& f : s.factors) {
      nlohmann::ordered_json x;
      if (f.shape == FactorShape::Diag) {
        x["shape"] = "diag";
        x["d"] = {f.d.real(), f.d.imag()};
      } else {
        x["shape"] = f.shape == FactorShape::Upper ? "upper" : "lower";
        x["poly"] = poly_json(f.poly);
      }
      j["factors"].push_back(x);
    }
    j["chi"] = {{"plus", poly_json(s.chi.plus)}, {"zero", poly_json(s.chi.zero)}, {"minus", poly_json(s.chi.minus)}};
  } else {
    j["kind"] = "charge_only";
    j["theta_bar"] = poly_json(s.theta_bar);
    j["phi_bar"] = poly_json(s.phi_bar);
    j["psi_bar"] = poly_json(s.psi_bar);
  }
  if (file.corruption) {
    j["corruption"] = {{"datum", file.corruption->datum},
                       {"channel", to_string(file.corruption->channel)},
                       {"size", file.corruption->size}};
  }
  return j.dump(2);
}

SeedSolution build_from_file(const SeedFile& file) {
  if (!file.corruption) return build_any(file.seed);
  const auto& req = *file.corruption;
  for (const auto& c : single_datum_corruptions(file.seed, req.size)) {
    if (c.datum != req.datum) continue;
    if (std::find(c.channels.begin(), c.channels.end(), req.channel) == c.channels.end())
      malformed("corruption: datum " + req.datum + " does not enter channel " + to_string(req.channel));
    return corrupted_solution(file.seed, c, req.channel);
  }
  malformed("corruption: no datum named " + req.datum);
}

}  // namespace sdym
