#pragma once

#include "toricnash/int_matrix.hpp"

#include <vector>

namespace toricnash {

/// Minimal generator description of {x in R^dim : a . x >= 0 for all a}:
/// the cone equals span(lineality) + cone(rays). Rays are primitive and
/// each is extreme modulo the lineality space.
struct ConeGenerators {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

/// Exact double description method. Constraints are inserted sorted by
/// support size; adjacency uses the combinatorial test.
ConeGenerators double_description(const std::vector<IntVector>& constraints, std::size_t dim);

}  // namespace toricnash
