#pragma once

#include <span>

#include "posalg/linalg.hpp"

namespace posalg {

struct LpResult {
  Rat value;
  Vec point;               // a maximizer
  std::size_t pivots = 0;
};

/// Exact maximum of objective.x over the capped homogeneous cone
///   { x : c.x >= 0 for every c in constraints, objective.x <= cap }.
/// The origin is always feasible and the objective is bounded by `cap`, so by
/// homogeneity the answer is 0 or cap. Primal simplex with Bland's rule from
/// the slack basis; a constraint that is a positive multiple of a unit vector
/// becomes a sign bound on that variable, every other variable is split.
LpResult lp_max_capped(std::span<const Vec> constraints, std::span<const Rat> objective, const Rat& cap);

}  // namespace posalg
