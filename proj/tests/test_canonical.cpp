#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "toricnash/canonical.hpp"
#include "toricnash/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace toricnash;

namespace {

Cone random_cone(std::size_t n, std::size_t max_extra, int bound, std::mt19937_64& rng) {
  for (;;) {
    std::size_t k = n + rng() % (max_extra + 1);
    IntMatrix g = oracle::random_matrix(n, k, bound, rng);
    bool zero = false;
    for (std::size_t c = 0; c < k; ++c) zero = zero || is_zero_vector(g.column(c));
    if (zero) continue;
    Cone c = Cone::from_generators(g);
    if (c.is_pointed() && c.is_full_dimensional()) return c;
  }
}

// Greatest Hermite form over every column order.
IntMatrix key_by_all_permutations(const Cone& c) {
  std::vector<IntVector> rays = c.rays();
  std::vector<std::size_t> perm(rays.size());
  std::iota(perm.begin(), perm.end(), 0);
  IntMatrix best;
  do {
    std::vector<IntVector> cols;
    for (std::size_t i : perm) cols.push_back(rays[i]);
    IntMatrix h = hnf(IntMatrix::from_columns(cols, c.ambient_rank()));
    if (best.empty() || std::lexicographical_compare(best.entries().begin(), best.entries().end(),
                                                     h.entries().begin(), h.entries().end()))
      best = h;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_SUITE("canonical_key") {
  TEST_CASE("serialization round trip") {
    CanonicalKey k{IntMatrix::from_rows({{1, 0, 3}, {0, 1, -5}})};
    CHECK(k.serialize() == "2 x 3: 1,0,3,0,1,-5");
    CHECK(CanonicalKey::parse(k.serialize()) == k);
    CanonicalKey big{IntMatrix::from_rows({{1}})};
    big.matrix(0, 0) = Integer("123456789012345678901234567890");
    CHECK(CanonicalKey::parse(big.serialize()) == big);
    CHECK_THROWS_AS(CanonicalKey::parse("2 x 2: 1,0,0"), std::invalid_argument);
    CHECK_THROWS_AS(CanonicalKey::parse("2 2: 1,0,0,1"), std::invalid_argument);
    CHECK_THROWS_AS(CanonicalKey::parse("1 x 1: a"), std::invalid_argument);
  }
}

TEST_SUITE("canonical_cone") {
  TEST_CASE("unimodular cone has the identity key") {
    CHECK(canonical_cone(Cone::orthant(4)).key == unimodular_key(4));
    CHECK(canonical_cone(Cone::from_generators(IntMatrix::from_columns({{0, 1}, {1, -1}}))).key == unimodular_key(2));
  }

  TEST_CASE("column order is irrelevant") {
    Cone a = Cone::from_generators(IntMatrix::from_columns({{3, 5}, {1, 0}}));
    Cone b = Cone::from_generators(IntMatrix::from_columns({{1, 0}, {3, 5}}));
    CHECK(canonical_cone(a).key == canonical_cone(b).key);
    CHECK(canonical_cone(a).key.matrix == IntMatrix::from_rows({{1, 3}, {0, 5}}));
  }

  TEST_CASE("the two sides of the displayed equivalence share a key") {
    Cone left = Cone::from_generators(fixtures::six_ray_cone());
    Cone right = Cone::from_generators(fixtures::six_ray_cone_hnf());
    auto k = canonical_cone(left);
    CHECK(k.key == canonical_cone(right).key);
    CHECK(k.key.matrix == key_by_all_permutations(left));
  }

  TEST_CASE("transforms realize the key") {
    Cone c = Cone::from_generators(fixtures::loop_cone_b());
    auto k = canonical_cone(c);
    for (const auto& u : k.all_transforms) {
      CHECK(abs(determinant(u)).is_one());
      Cone image = c.transformed(u);
      Cone key_cone = Cone::from_generators(k.key.matrix);
      CHECK(image == key_cone);
    }
  }

  TEST_CASE("pruned search matches exhaustive permutations") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 150; ++t) {
      std::size_t n = 2 + rng() % 3;
      Cone c = random_cone(n, 3, 4, rng);
      if (c.rays().size() > 7) continue;
      CAPTURE(c.ray_matrix());
      CHECK(canonical_cone(c).key.matrix == key_by_all_permutations(c));
    }
  }

  TEST_CASE("invariance under random unimodular transforms") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 1000; ++t) {
      std::size_t n = 2 + t % 3;
      Cone c = random_cone(n, 3, 5, rng);
      IntMatrix v = oracle::random_unimodular(n, rng);
      CHECK(canonical_cone(c.transformed(v)).key == canonical_cone(c).key);
    }
  }

  TEST_CASE("distinct invariants give distinct keys") {
    std::mt19937_64 rng(17);
    std::vector<Cone> cones;
    for (int t = 0; t < 60; ++t) cones.push_back(random_cone(3, 3, 3, rng));
    for (const auto& a : cones)
      for (const auto& b : cones) {
        bool same = canonical_cone(a).key == canonical_cone(b).key;
        if (a.rays().size() != b.rays().size() || a.facets().size() != b.facets().size()) CHECK_FALSE(same);
        if (same && a.is_simplicial())
          CHECK(abs(determinant(a.ray_matrix())) == abs(determinant(b.ray_matrix())));
      }
  }

  TEST_CASE("are_equivalent") {
    CHECK_FALSE(are_equivalent(Cone::orthant(2), Cone::from_generators(IntMatrix::from_columns({{1, 0}, {1, 2}}))));
    Cone c = Cone::from_generators(fixtures::loop_cone_b());
    CHECK(are_equivalent(c, c));
    std::mt19937_64 rng(1);
    CHECK(are_equivalent(c, c.transformed(oracle::random_unimodular(4, rng))));
  }

  TEST_CASE("rejects non-pointed input") {
    CHECK_THROWS_AS(canonical_cone(Cone::from_generators(IntMatrix::from_columns({{1, 0}, {-1, 0}, {0, 1}}))),
                    std::invalid_argument);
  }
}

TEST_SUITE("canonical_semigroup") {
  TEST_CASE("examples") {
    auto a = AffineSemigroup::from_generators(IntMatrix::from_rows({{0, 1, 1}, {2, 0, 1}}));
    auto b = AffineSemigroup::from_generators(IntMatrix::from_rows({{0, 1, 2}, {1, 1, 0}}));
    CHECK(canonical_semigroup(a) == canonical_semigroup(b));
    CHECK(are_equivalent(a, b));
    CHECK(canonical_semigroup(AffineSemigroup::from_generators(IntMatrix::identity(3))) == unimodular_key(3));
    auto cusp = AffineSemigroup::from_generators({vector_of({2}), vector_of({3})}, 1);
    CHECK(canonical_semigroup(cusp).serialize() == "1 x 2: 2,3");
  }

  TEST_CASE("saturated and non-saturated semigroups with the same hull differ") {
    auto whitney = AffineSemigroup::from_generators(IntMatrix::from_columns({{1, 1}, {1, 0}, {0, 2}}));
    auto saturated = AffineSemigroup::from_cone(whitney.hull());
    CHECK_FALSE(canonical_semigroup(whitney) == canonical_semigroup(saturated));
  }

  TEST_CASE("invariance under random unimodular transforms") {
    std::mt19937_64 rng(202);
    int done = 0;
    while (done < 1000) {
      std::size_t n = 2 + done % 2;
      IntMatrix g = oracle::random_matrix(n, n + 1 + rng() % 3, 3, rng);
      std::vector<IntVector> gens;
      for (const auto& v : g.column_vectors())
        if (!is_zero_vector(v)) gens.push_back(v);
      if (gens.size() < n) continue;
      Cone hull = Cone::from_generators(gens, n);
      if (!hull.is_pointed() || !hull.is_full_dimensional()) continue;
      auto s = AffineSemigroup::from_generators(gens, n);
      IntMatrix v = oracle::random_unimodular(n, rng);
      std::vector<IntVector> moved;
      for (const auto& h : s.hilbert_basis()) moved.push_back(v * h);
      auto t = AffineSemigroup::from_generators(moved, n);
      CHECK(canonical_semigroup(s) == canonical_semigroup(t));
      ++done;
    }
  }
}
