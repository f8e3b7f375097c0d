#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "toricnash/cone.hpp"
#include "toricnash/linalg.hpp"
#include "toricnash/polyhedron.hpp"

#include <random>
#include <set>

using namespace toricnash;

namespace {

std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

// Strict-minimum vertex test over integer functionals in [-bound, bound]^2.
std::set<IntVector> vertices_by_functionals_2d(const std::vector<IntVector>& pts, const std::vector<IntVector>& rays,
                                               int bound) {
  std::set<IntVector> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b) {
      IntVector w = vector_of({a, b});
      bool ok = true;
      for (const auto& r : rays) ok = ok && dot(w, r).sign() > 0;
      if (!ok) continue;
      for (const auto& v : pts) {
        bool strict = true;
        for (const auto& p : pts)
          if (p != v && dot(w, p) <= dot(w, v)) strict = false;
        if (strict) out.insert(v);
      }
    }
  return out;
}

// 2D tangent-cone oracle: extreme directions found by cross-product sidedness.
std::set<IntVector> extreme_directions_2d(const std::vector<IntVector>& dirs) {
  std::set<IntVector> out;
  for (const auto& d : dirs) {
    bool left_empty = true, right_empty = true;
    for (const auto& e : dirs) {
      Integer cross = d[0] * e[1] - d[1] * e[0];
      if (cross.sign() > 0) left_empty = false;
      if (cross.sign() < 0) right_empty = false;
    }
    if (left_empty || right_empty) out.insert(make_primitive(d));
  }
  return out;
}

Cone random_pointed_cone(std::size_t n, int bound, std::mt19937_64& rng) {
  for (;;) {
    std::size_t k = n + rng() % 3;
    IntMatrix g = oracle::random_matrix(n, k, bound, rng);
    bool zero = false;
    for (std::size_t c = 0; c < k; ++c) zero = zero || is_zero_vector(g.column(c));
    if (zero) continue;
    Cone c = Cone::from_generators(g);
    if (c.is_pointed() && c.is_full_dimensional()) return c;
  }
}

}  // namespace

TEST_SUITE("cone_from_generators") {
  TEST_CASE("redundant middle ray and primitivization") {
    Cone c = Cone::from_generators(IntMatrix::from_columns({{1, 0}, {1, 1}, {0, 1}}));
    CHECK(as_set(c.rays()) == as_set({vector_of({1, 0}), vector_of({0, 1})}));
    Cone d = Cone::from_generators(IntMatrix::from_columns({{2, 4}}));
    CHECK(d.rays() == std::vector<IntVector>{vector_of({1, 2})});
    CHECK_THROWS_AS(Cone::from_generators(IntMatrix::from_columns({{0, 0}, {1, 0}})), std::invalid_argument);
  }

  TEST_CASE("six-ray cone keeps all six generators and has eight facets") {
    Cone c = Cone::from_generators(fixtures::six_ray_cone());
    CHECK(c.rays().size() == 6);
    CHECK(c.is_pointed());
    CHECK(as_set(c.facets()) == as_set(fixtures::six_ray_cone_inequalities().row_vectors()));
    CHECK_FALSE(c.is_simplicial());
  }
}

TEST_SUITE("dual_cone") {
  TEST_CASE("examples") {
    CHECK(Cone::orthant(2).dual() == Cone::orthant(2));
    Cone sigma = Cone::from_generators(IntMatrix::from_columns({{-1, 2}, {3, -1}}));
    CHECK(sigma.dual() == Cone::from_generators(IntMatrix::from_columns({{2, 1}, {1, 3}})));
    Cone six = Cone::from_generators(fixtures::six_ray_cone());
    CHECK(as_set(six.dual().rays()) == as_set(fixtures::six_ray_cone_inequalities().row_vectors()));
  }

  TEST_CASE("involution and Weyl-Minkowski consistency on random cones") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 150; ++t) {
      std::size_t n = 2 + rng() % 3;
      Cone c = random_pointed_cone(n, 5, rng);
      CHECK(c.dual().dual() == c);
      for (const auto& r : c.rays())
        for (const auto& f : c.facets()) CHECK(dot(f, r).sign() >= 0);
      for (const auto& f : c.facets()) {
        std::vector<IntVector> tight;
        for (const auto& r : c.rays())
          if (dot(f, r).is_zero()) tight.push_back(r);
        CHECK(rank(tight) == n - 1);
      }
      CHECK(c.facets().size() >= n);
      CHECK(c.rays().size() >= n);
      Cone from_h = Cone::from_inequalities(c.facets(), n);
      CHECK(from_h == c);
    }
  }
}

TEST_SUITE("cone predicates") {
  TEST_CASE("pointedness") {
    CHECK(Cone::orthant(2).is_pointed());
    CHECK_FALSE(Cone::from_generators(IntMatrix::from_columns({{1, 1}, {1, 0}, {0, 2}, {0, -1}, {1, -2}})).is_pointed());
    CHECK_FALSE(Cone::from_generators(IntMatrix::from_columns({{1, 0}, {-1, 0}})).is_pointed());
    CHECK_THROWS_AS(Cone::from_generators(IntMatrix::from_columns({{1, 0}, {-1, 0}})).rays(), std::logic_error);
  }

  TEST_CASE("full dimension") {
    CHECK(Cone::orthant(2).is_full_dimensional());
    Cone ray = Cone::from_generators(IntMatrix::from_columns({{1, 1}}));
    CHECK_FALSE(ray.is_full_dimensional());
    CHECK(ray.is_pointed());
    CHECK(ray.dimension() == 1);
    CHECK(Cone::from_generators(fixtures::loop_cone_b()).is_full_dimensional());
  }

  TEST_CASE("unimodular and simplicial") {
    CHECK(Cone::orthant(3).is_unimodular());
    Cone c = Cone::from_generators(IntMatrix::from_columns({{1, 0}, {1, 3}}));
    CHECK(c.is_simplicial());
    CHECK_FALSE(c.is_unimodular());
    CHECK(Cone::from_generators(IntMatrix::from_columns({{0, 1}, {1, -1}})).is_unimodular());
    Cone reeves = Cone::from_generators(fixtures::reeves_matrix(4, 5));
    CHECK(reeves.is_simplicial());
    CHECK(rank(reeves.rays()) == 4);
  }

  TEST_CASE("containment") {
    CHECK(Cone::orthant(2).contains(vector_of({1, 1})));
    Cone h = Cone::from_inequalities(IntMatrix::from_rows({{0, 1}, {5, -3}}));
    CHECK_FALSE(h.contains(vector_of({0, 1})));
    CHECK(h.contains(vector_of({3, 5})));
    Cone six = Cone::from_generators(fixtures::six_ray_cone());
    for (const auto& r : six.rays()) CHECK(six.contains(r));
  }
}

TEST_SUITE("polyhedron") {
  const std::vector<IntVector> basis_sum_points = {vector_of({3, 4}), vector_of({3, 3}), vector_of({3, 2}),
                                                  vector_of({2, 5}), vector_of({2, 4}), vector_of({2, 3})};

  TEST_CASE("single point and absorbed translate") {
    Cone rec = Cone::from_generators(IntMatrix::from_columns({{2, 1}, {1, 3}}));
    CHECK(polyhedron_vertices({{vector_of({1, 1})}, rec}) == std::vector<IntVector>{vector_of({1, 1})});
    CHECK(polyhedron_vertices({{vector_of({1, 1}), vector_of({3, 2})}, rec}) == std::vector<IntVector>{vector_of({1, 1})});
  }

  TEST_CASE("polyhedron vertices of the six basis sums agree with the functional oracle") {
    Cone rec = Cone::from_generators(IntMatrix::from_columns({{2, 1}, {1, 3}}));
    auto expected = vertices_by_functionals_2d(basis_sum_points, rec.rays(), 8);
    CHECK(expected == as_set({vector_of({3, 2}), vector_of({2, 3}), vector_of({2, 5})}));
    CHECK(as_set(polyhedron_vertices({basis_sum_points, rec})) == expected);
  }

  TEST_CASE("feasible cones of the basis-sum polyhedron") {
    Cone rec = Cone::from_generators(IntMatrix::from_columns({{2, 1}, {1, 3}}));
    LatticePolyhedron p{basis_sum_points, rec};
    for (const auto& v : polyhedron_vertices(p)) {
      std::vector<IntVector> dirs = rec.rays();
      for (const auto& q : basis_sum_points)
        if (q != v) dirs.push_back(q - v);
      CHECK(as_set(feasible_cone(v, p).rays()) == extreme_directions_2d(dirs));
    }
    CHECK(as_set(feasible_cone(vector_of({2, 3}), p).rays()) == as_set({vector_of({1, -1}), vector_of({0, 1})}));
    CHECK(as_set(feasible_cone(vector_of({2, 5}), p).rays()) == as_set({vector_of({0, -1}), vector_of({1, 3})}));
    CHECK_THROWS_AS(feasible_cone(vector_of({3, 3}), p), std::invalid_argument);
  }

  TEST_CASE("bounded square") {
    LatticePolyhedron sq{{vector_of({0, 0}), vector_of({1, 0}), vector_of({0, 1}), vector_of({1, 1})}, std::nullopt};
    CHECK(polyhedron_vertices(sq).size() == 4);
    CHECK(feasible_cone(vector_of({0, 0}), sq) == Cone::orthant(2));
  }

  TEST_CASE("random polyhedra: vertices are input points and generate everything") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
      std::size_t n = 2 + rng() % 2;
      Cone rec = random_pointed_cone(n, 3, rng);
      std::vector<IntVector> pts = oracle::random_matrix(n, 3 + rng() % 10, 4, rng).column_vectors();
      LatticePolyhedron p{pts, rec};
      auto verts = polyhedron_vertices(p);
      REQUIRE_FALSE(verts.empty());
      std::set<IntVector> input(pts.begin(), pts.end());
      for (const auto& v : verts) CHECK(input.count(v) == 1);
      // every input point lies in Conv(vertices) + rec: check via the lifted cone
      std::vector<IntVector> lifted;
      for (auto v : verts) {
        v.emplace_back(1);
        lifted.push_back(v);
      }
      for (auto r : rec.rays()) {
        r.emplace_back(0);
        lifted.push_back(r);
      }
      Cone hull = Cone::from_generators(lifted, n + 1);
      for (auto q : pts) {
        q.emplace_back(1);
        CHECK(hull.contains(q));
      }
      for (const auto& v : verts) CHECK(feasible_cone(v, p).contains(rec));
      if (n == 2) CHECK(as_set(verts) == vertices_by_functionals_2d(pts, rec.rays(), 24));
    }
  }
}
