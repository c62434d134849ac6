#pragma once

#include <vector>

#include "toricgb/toric.hpp"

namespace toric::oracle {

/// Brute-force Graver basis: all nonzero integer kernel vectors of the
/// vertex-edge incidence matrix with coordinates in {-2..2} that are minimal
/// in the conformal order (sign-compatible componentwise domination).
/// Independent of the walk-enumeration route; m <= 10 enforced.
std::vector<Binomial> graver_by_conformal_minimality(const Graph& g);

/// u conformal-below v: u_i * v_i >= 0 and |u_i| <= |v_i| for all i.
bool conformal_below(const std::vector<int>& u, const std::vector<int>& v);

}  // namespace toric::oracle
