#pragma once

#include <vector>

namespace sdym {

/// Gauss-Legendre nodes and weights mapped to [0, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached per order; order >= 1.
const GaussLegendreRule& gauss_legendre(int order);

}  // namespace sdym
