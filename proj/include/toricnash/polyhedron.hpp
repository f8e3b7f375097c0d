#pragma once

#include "toricnash/cone.hpp"

#include <optional>
#include <vector>

namespace toricnash {

/// Conv(points) + recession. An absent recession cone means a bounded polytope.
struct LatticePolyhedron {
  std::vector<IntVector> points;
  std::optional<Cone> recession;
};

/// Vertices plus the irredundant data needed for tangent cones.
struct PolyhedronSkeleton {
  std::size_t rank = 0;
  std::vector<IntVector> candidates;  // points surviving the domination filter
  std::vector<IntVector> vertices;    // sorted
  std::vector<IntVector> recession_rays;
};

/// Drops every p = q + s with q another point and s a nonzero element of the
/// recession cone. The cone must be pointed and full-dimensional.
std::vector<IntVector> prune_dominated(const std::vector<IntVector>& points, const Cone& recession);

PolyhedronSkeleton polyhedron_skeleton(const LatticePolyhedron& p);
std::vector<IntVector> polyhedron_vertices(const LatticePolyhedron& p);

/// Cone(P - v) for a vertex v; throws if v is not a vertex.
Cone feasible_cone(const IntVector& v, const LatticePolyhedron& p);
Cone feasible_cone(const IntVector& v, const PolyhedronSkeleton& skeleton);

}  // namespace toricnash
