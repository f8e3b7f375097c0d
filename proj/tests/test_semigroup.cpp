#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "toricnash/linalg.hpp"
#include "toricnash/semigroup.hpp"

#include <random>
#include <set>

using namespace toricnash;

namespace {

std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

std::vector<IntVector> cols(std::initializer_list<std::initializer_list<long long>> c) {
  return IntMatrix::from_columns(c).column_vectors();
}

Cone random_full_cone(std::size_t n, int bound, std::mt19937_64& rng) {
  for (;;) {
    std::size_t k = n + rng() % 2;
    IntMatrix g = oracle::random_matrix(n, k, bound, rng);
    bool zero = false;
    for (std::size_t c = 0; c < k; ++c) zero = zero || is_zero_vector(g.column(c));
    if (zero) continue;
    Cone c = Cone::from_generators(g);
    if (c.is_pointed() && c.is_full_dimensional()) return c;
  }
}

}  // namespace

TEST_SUITE("hilbert_basis") {
  TEST_CASE("unimodular cone gives its rays") {
    Cone c = Cone::from_generators(IntMatrix::from_columns({{1, 0, 0}, {1, 1, 0}, {2, 3, 1}}));
    CHECK(as_set(hilbert_basis(c)) == as_set(c.rays()));
  }

  TEST_CASE("two-dimensional example agrees with box enumeration") {
    Cone c = Cone::from_generators(IntMatrix::from_columns({{1, 0}, {3, 5}}));
    std::set<IntVector> expected = {vector_of({1, 0}), vector_of({1, 1}), vector_of({2, 3}), vector_of({3, 5})};
    CHECK(as_set(hilbert_basis(c)) == expected);
    CHECK(as_set(oracle::hilbert_basis_by_enumeration(c.rays())) == expected);
  }

  TEST_CASE("six-ray cone has 74 elements") {
    Cone c = Cone::from_generators(fixtures::six_ray_cone());
    auto hb = hilbert_basis(c);
    CHECK(hb.size() == 74);
    for (const auto& r : c.rays()) CHECK(std::binary_search(hb.begin(), hb.end(), r));
    for (const auto& h : hb) CHECK(c.contains(h));
  }

  TEST_CASE("placing triangulation covers the cone with matching volume") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
      std::size_t n = 3 + rng() % 2;
      IntMatrix g = oracle::random_matrix(n, n + 3, 4, rng);
      bool zero = false;
      for (const auto& v : g.column_vectors()) zero = zero || is_zero_vector(v);
      if (zero) continue;
      Cone c = Cone::from_generators(g);
      if (!c.is_pointed() || !c.is_full_dimensional()) continue;
      auto tri = placing_triangulation(c);
      // every ray of the cone appears, and simplices are full-rank
      std::set<std::size_t> used;
      for (const auto& s : tri) {
        std::vector<IntVector> v;
        for (std::size_t k : s) {
          used.insert(k);
          v.push_back(c.rays()[k]);
        }
        CHECK(rank(v) == n);
      }
      CHECK(used.size() == c.rays().size());
      // interior points of distinct simplices never coincide: barycenters
      // lie in exactly one simplex
      for (std::size_t a = 0; a < tri.size(); ++a) {
        IntVector bary(n);
        for (std::size_t k : tri[a]) bary = bary + c.rays()[k];
        int inside = 0;
        for (const auto& s : tri) {
          std::vector<IntVector> v;
          for (std::size_t k : s) v.push_back(c.rays()[k]);
          if (Cone::from_generators(v, n).contains_in_interior(bary)) ++inside;
        }
        CHECK(inside == 1);
      }
    }
  }

  TEST_CASE("parallelepiped point count equals the determinant") {
    IntMatrix v = IntMatrix::from_columns({{1, 0, 0}, {0, 1, 0}, {1, 1, 6}});
    auto pts = parallelepiped_points(v);
    CHECK(pts.size() == 6);
    CHECK(as_set(pts).size() == 6);
  }

  TEST_CASE("agreement with the box-enumeration oracle on random cones") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 2 + t % 2;
      Cone c = random_full_cone(n, 5, rng);
      auto hb = hilbert_basis(c);
      CAPTURE(c.ray_matrix());
      CHECK(as_set(hb) == as_set(oracle::hilbert_basis_by_enumeration(c.rays())));
    }
  }

  TEST_CASE("indecomposability of the output") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
      Cone c = random_full_cone(3, 4, rng);
      auto hb = hilbert_basis(c);
      std::set<IntVector> s = as_set(hb);
      for (const auto& a : hb)
        for (const auto& b : hb) CHECK(s.count(a + b) == 0);
      for (const auto& h : hb)
        for (const auto& g : hb)
          if (g != h) CHECK_FALSE(c.contains(h - g));
    }
  }

  TEST_CASE("rejects non-pointed input") {
    Cone c = Cone::from_generators(IntMatrix::from_columns({{1, 0}, {-1, 0}, {0, 1}}));
    CHECK_THROWS_AS(hilbert_basis(c), std::invalid_argument);
  }
}

TEST_SUITE("minimal_generators") {
  TEST_CASE("Whitney umbrella charts") {
    CHECK(as_set(minimal_generators(cols({{1, 1}, {1, 0}, {0, 2}, {-1, 2}, {-1, 1}}), 2)) ==
          as_set(cols({{1, 0}, {-1, 1}})));
    CHECK(as_set(minimal_generators(cols({{1, 1}, {1, 0}, {0, 2}, {0, 1}, {1, -1}}), 2)) ==
          as_set(cols({{0, 1}, {1, -1}})));
  }

  TEST_CASE("already minimal, zeros and duplicates") {
    auto g = cols({{2, 1}, {1, 3}});
    CHECK(as_set(minimal_generators(g, 2)) == as_set(g));
    CHECK(as_set(minimal_generators(cols({{2, 1}, {0, 0}, {1, 3}, {2, 1}}), 2)) == as_set(g));
    CHECK(minimal_generators({vector_of({2}), vector_of({3}), vector_of({4}), vector_of({5})}, 1) ==
          std::vector<IntVector>{vector_of({2}), vector_of({3})});
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(minimal_generators(cols({{1, 0}, {-1, 0}, {0, 1}}), 2), std::invalid_argument);
    CHECK_THROWS_AS(minimal_generators(cols({{1, 1}, {2, 2}}), 2), std::invalid_argument);
  }

  TEST_CASE("fixpoint on random generator sets") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
      std::size_t n = 2 + rng() % 2;
      IntMatrix g = oracle::random_matrix(n, n + 3, 4, rng);
      bool zero = false;
      for (const auto& v : g.column_vectors()) zero = zero || is_zero_vector(v);
      if (zero) continue;
      Cone hull = Cone::from_generators(g.column_vectors(), n);
      if (!hull.is_pointed() || !hull.is_full_dimensional()) continue;
      auto m = minimal_generators(g.column_vectors(), n);
      CHECK(minimal_generators(m, n) == m);
      for (const auto& v : g.column_vectors()) CHECK(semigroup_member(m, v));
    }
  }
}

TEST_SUITE("semigroup_member") {
  TEST_CASE("examples") {
    std::vector<IntVector> g = {vector_of({2}), vector_of({3})};
    CHECK(semigroup_member(g, vector_of({7})));
    CHECK_FALSE(semigroup_member(g, vector_of({1})));
    CHECK(semigroup_member(g, vector_of({0})));
    CHECK_FALSE(semigroup_member(cols({{1, 0}, {0, 2}}), vector_of({1, 1})));
  }

  TEST_CASE("random combinations round trip") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 80; ++t) {
      std::size_t n = 2 + rng() % 2;
      Cone c = random_full_cone(n, 4, rng);
      std::vector<IntVector> g = c.rays();
      g.push_back(g[0] + g[1] + g[1]);
      IntVector v(n);
      std::size_t terms = 1 + rng() % 4;
      for (std::size_t k = 0; k < terms; ++k) v = v + g[rng() % g.size()];
      CHECK(semigroup_member(g, v));
    }
  }
}

TEST_SUITE("affine_semigroup") {
  TEST_CASE("unimodular and saturated flags") {
    CHECK(AffineSemigroup::from_generators(IntMatrix::from_columns({{1, 0}, {-1, 1}})).is_unimodular());
    AffineSemigroup cusp = AffineSemigroup::from_generators({vector_of({2}), vector_of({3})}, 1);
    CHECK_FALSE(cusp.is_unimodular());
    CHECK_FALSE(cusp.is_saturated());
    CHECK(AffineSemigroup::from_generators(IntMatrix::identity(3)).is_unimodular());
    AffineSemigroup whitney = AffineSemigroup::from_generators(IntMatrix::from_columns({{1, 1}, {1, 0}, {0, 2}}));
    CHECK_FALSE(whitney.is_saturated());
    CHECK_FALSE(whitney.contains(vector_of({0, 1})));
    CHECK(whitney.hull().contains(vector_of({0, 1})));
    CHECK(AffineSemigroup::from_cone(Cone::from_generators(IntMatrix::from_columns({{1, 0}, {3, 5}}))).is_saturated());
  }

  TEST_CASE("full-rank normalization") {
    auto id = full_rank_normalize(IntMatrix::identity(2).column_vectors(), 2);
    CHECK(id.basis == IntMatrix::identity(2));
    auto cusp = full_rank_normalize({vector_of({2}), vector_of({3})}, 1);
    CHECK(cusp.semigroup.hilbert_basis() == std::vector<IntVector>{vector_of({2}), vector_of({3})});
    auto diag = full_rank_normalize(cols({{2, 0}, {0, 3}}), 2);
    CHECK(as_set(diag.semigroup.hilbert_basis()) == as_set(cols({{1, 0}, {0, 1}})));
    CHECK(abs(determinant(diag.basis)) == Integer(6));
    for (const auto& h : diag.semigroup.hilbert_basis()) {
      IntVector back = diag.basis * h;
      CHECK((back == vector_of({2, 0}) || back == vector_of({0, 3})));
    }
    CHECK_THROWS_AS(full_rank_normalize(cols({{1, 1}, {2, 2}}), 2), std::invalid_argument);
  }
}
