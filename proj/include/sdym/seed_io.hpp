#pragma once

// Seed files.
//
//   {"kind": "full_gauge" | "charge_only",
//    "factors": [{"shape": "upper" | "lower", "poly": POLY}, {"shape": "diag", "d": [re, im]}],
//    "chi": {"plus": POLY, "zero": POLY, "minus": POLY},
//    "theta_bar": POLY, "phi_bar": POLY, "psi_bar": POLY,
//    "corruption": {"datum": "chi.minus[0,0]", "channel": "f", "size": 1e-3}}
//
// POLY = [[m, n, re, im], ...] for sum (re + i im) u^m v^n with (u, v) = (ybar, zbar).
// "corruption" is optional and turns the seed into a negative control.

#include <optional>
#include <string>

#include "sdym/seeds.hpp"
#include "sdym/verification.hpp"

namespace sdym {

struct CorruptionRequest {
  std::string datum;
  CorruptionChannel channel = CorruptionChannel::F;
  double size = 1e-3;
};

struct SeedFile {
  SeedSpec seed;
  std::optional<CorruptionRequest> corruption;
};

/// Throws MalformedSeed with a description of the first problem found.
SeedFile parse_seed(const std::string& json_text);
SeedFile load_seed(const std::string& path);
std::string seed_to_json(const SeedFile& file);

/// The solution a seed file describes, with its corruption applied.
SeedSolution build_from_file(const SeedFile& file);

}  // namespace sdym
