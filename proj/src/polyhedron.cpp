#include "toricnash/polyhedron.hpp"

#include "toricnash/double_description.hpp"
#include "toricnash/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toricnash {

namespace {

std::vector<IntVector> deduplicated(std::vector<IntVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

IntVector lifted(const IntVector& v, long long last) {
  IntVector r = v;
  r.emplace_back(last);
  return r;
}

}  // namespace

std::vector<IntVector> prune_dominated(const std::vector<IntVector>& points, const Cone& recession) {
  if (!recession.is_pointed() || !recession.is_full_dimensional())
    throw std::invalid_argument("domination filter needs a pointed full-dimensional recession cone");
  const auto& facets = recession.facets();
  std::vector<IntVector> pts = deduplicated(points);

  struct Entry {
    Integer grade;
    std::vector<Integer> eval;
    std::size_t index;
  };
  std::vector<Entry> entries;
  entries.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Entry e{Integer(0), {}, i};
    e.eval.reserve(facets.size());
    for (const auto& f : facets) {
      e.eval.push_back(dot(f, pts[i]));
      e.grade += e.eval.back();
    }
    entries.push_back(std::move(e));
  }
  // Strictly positive grading: a dominating point always has smaller grade.
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (a.grade != b.grade) return a.grade < b.grade;
    return pts[a.index] < pts[b.index];
  });

  std::vector<const Entry*> kept;
  for (const auto& e : entries) {
    bool dominated = false;
    for (const Entry* q : kept) {
      bool ge = true;
      for (std::size_t k = 0; k < e.eval.size() && ge; ++k) ge = e.eval[k] >= q->eval[k];
      if (ge) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(&e);
  }
  std::vector<IntVector> out;
  out.reserve(kept.size());
  for (const Entry* e : kept) out.push_back(pts[e->index]);
  std::sort(out.begin(), out.end());
  return out;
}

PolyhedronSkeleton polyhedron_skeleton(const LatticePolyhedron& p) {
  if (p.points.empty()) throw std::invalid_argument("polyhedron needs at least one point");
  PolyhedronSkeleton s;
  s.rank = p.points.front().size();
  for (const auto& q : p.points)
    if (q.size() != s.rank) throw std::invalid_argument("point length mismatch");

  if (p.recession) {
    const Cone& rec = *p.recession;
    if (rec.ambient_rank() != s.rank) throw std::invalid_argument("recession cone rank mismatch");
    if (!rec.is_pointed()) throw std::invalid_argument("recession cone must be pointed");
    s.recession_rays = rec.rays();
    s.candidates = rec.is_full_dimensional() ? prune_dominated(p.points, rec) : deduplicated(p.points);
  } else {
    s.candidates = deduplicated(p.points);
  }

  std::vector<IntVector> constraints;
  constraints.reserve(s.candidates.size() + s.recession_rays.size());
  for (const auto& q : s.candidates) constraints.push_back(lifted(q, 1));
  for (const auto& r : s.recession_rays) constraints.push_back(lifted(r, 0));
  ConeGenerators lifted_facets = double_description(constraints, s.rank + 1);

  for (const auto& q : s.candidates) {
    IntVector lq = lifted(q, 1);
    std::vector<IntVector> tight = lifted_facets.lineality;
    for (const auto& f : lifted_facets.rays)
      if (dot(f, lq).is_zero()) tight.push_back(f);
    if (rank(tight) == s.rank) s.vertices.push_back(q);
  }
  return s;
}

std::vector<IntVector> polyhedron_vertices(const LatticePolyhedron& p) { return polyhedron_skeleton(p).vertices; }

Cone feasible_cone(const IntVector& v, const PolyhedronSkeleton& s) {
  if (!std::binary_search(s.vertices.begin(), s.vertices.end(), v))
    throw std::invalid_argument("feasible_cone: " + vector_to_string(v) + " is not a vertex");
  std::vector<IntVector> gens = s.recession_rays;
  for (const auto& c : s.candidates)
    if (c != v) gens.push_back(c - v);
  if (gens.empty()) throw std::invalid_argument("feasible_cone: polyhedron is a single point");
  return Cone::from_generators(gens, s.rank);
}

Cone feasible_cone(const IntVector& v, const LatticePolyhedron& p) { return feasible_cone(v, polyhedron_skeleton(p)); }

}  // namespace toricnash
