#include "toricnash/semigroup.hpp"

#include "toricnash/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace toricnash {

namespace {

std::vector<IntVector> cleaned(const std::vector<IntVector>& gens, std::size_t rank) {
  std::vector<IntVector> out;
  for (const auto& g : gens) {
    if (g.size() != rank) throw std::invalid_argument("generator length does not match ambient rank");
    if (!is_zero_vector(g)) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Membership in a semigroup generated inside a fixed pointed cone. Points are
// handled through their facet values, which are injective on the linear
// span and nonnegative exactly on the cone.
class Membership {
 public:
  explicit Membership(const Cone& hull) : hull_(hull) {}

  void add_generator(const IntVector& g) {
    gens_.push_back(evaluate(g));
    failed_.erase(gens_.back());
  }

  bool contains(const IntVector& v) {
    if (!hull_.contains(v)) return false;
    return search(evaluate(v));
  }

 private:
  IntVector evaluate(const IntVector& v) const {
    IntVector e;
    e.reserve(hull_.facets().size());
    for (const auto& f : hull_.facets()) e.push_back(dot(f, v));
    return e;
  }

  bool search(const IntVector& e) {
    if (is_zero_vector(e)) return true;
    if (failed_.count(e)) return false;
    for (const auto& g : gens_) {
      IntVector rest(e.size());
      bool inside = true;
      for (std::size_t k = 0; k < e.size() && inside; ++k) {
        rest[k] = e[k] - g[k];
        inside = rest[k].sign() >= 0;
      }
      if (inside && search(rest)) return true;
    }
    failed_.insert(e);
    return false;
  }

  const Cone& hull_;
  std::vector<IntVector> gens_;
  std::unordered_set<IntVector, IntVectorHash> failed_;
};

Cone checked_hull(const std::vector<IntVector>& gens, std::size_t rank) {
  if (gens.empty()) throw std::invalid_argument("semigroup needs a nonzero generator");
  Cone hull = Cone::from_generators(gens, rank);
  if (!hull.is_pointed()) throw std::invalid_argument("generators span a non-pointed cone");
  if (!hull.is_full_dimensional()) throw std::invalid_argument("generators do not have full rank");
  return hull;
}

}  // namespace

std::vector<IntVector> minimal_generators(const std::vector<IntVector>& generators, std::size_t rank) {
  std::vector<IntVector> gens = cleaned(generators, rank);
  Cone hull = checked_hull(gens, rank);
  IntVector w = hull.positive_grading();
  std::vector<std::pair<Integer, IntVector>> graded;
  for (auto& g : gens) graded.emplace_back(dot(w, g), std::move(g));
  std::sort(graded.begin(), graded.end());

  // Grades are strictly positive, so only elements of smaller grade can
  // decompose g; the failure memo stays valid as generators are added.
  Membership member(hull);
  std::vector<IntVector> kept;
  for (auto& [grade, g] : graded) {
    if (member.contains(g)) continue;
    member.add_generator(g);
    kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool semigroup_member(const std::vector<IntVector>& generators, const IntVector& v) {
  if (is_zero_vector(v)) return true;
  std::vector<IntVector> gens = cleaned(generators, v.size());
  if (gens.empty()) return false;
  Cone hull = Cone::from_generators(gens, v.size());
  if (!hull.is_pointed()) throw std::invalid_argument("generators span a non-pointed cone");
  Membership member(hull);
  for (const auto& g : gens) member.add_generator(g);
  return member.contains(v);
}

AffineSemigroup AffineSemigroup::from_generators(const std::vector<IntVector>& generators, std::size_t rank) {
  std::vector<IntVector> basis = minimal_generators(generators, rank);
  Cone hull = Cone::from_generators(basis, rank);
  return AffineSemigroup(rank, std::move(basis), std::move(hull));
}

AffineSemigroup AffineSemigroup::from_generators(const IntMatrix& columns) {
  return from_generators(columns.column_vectors(), columns.rows());
}

AffineSemigroup AffineSemigroup::from_cone(const Cone& c) {
  return AffineSemigroup(c.ambient_rank(), toricnash::hilbert_basis(c), c);
}

AffineSemigroup AffineSemigroup::from_hilbert_basis(const IntMatrix& columns) {
  std::vector<IntVector> basis = cleaned(columns.column_vectors(), columns.rows());
  Cone hull = checked_hull(basis, columns.rows());
  return AffineSemigroup(columns.rows(), std::move(basis), std::move(hull));
}

bool AffineSemigroup::contains(const IntVector& v) const {
  if (v.size() != rank_) throw std::invalid_argument("vector length does not match ambient rank");
  if (is_zero_vector(v)) return true;
  Membership member(hull_);
  for (const auto& g : basis_) member.add_generator(g);
  return member.contains(v);
}

bool AffineSemigroup::is_unimodular() const {
  return basis_.size() == rank_ && abs(determinant(IntMatrix::from_columns(basis_, rank_))).is_one();
}

bool AffineSemigroup::is_saturated() const { return toricnash::hilbert_basis(hull_) == basis_; }

FullRankNormalization full_rank_normalize(const std::vector<IntVector>& generators, std::size_t rank) {
  std::vector<IntVector> gens = cleaned(generators, rank);
  if (gens.empty() || toricnash::rank(gens) != rank) throw std::invalid_argument("generators do not have full rank");
  IntMatrix h = hnf(IntMatrix::from_rows(gens));
  std::vector<IntVector> basis_rows;
  for (std::size_t r = 0; r < rank; ++r) basis_rows.push_back(h.row(r));
  IntMatrix basis = IntMatrix::from_rows(basis_rows).transpose();
  std::vector<IntVector> coords;
  for (const auto& g : gens) {
    auto x = solve_integer_system(basis, g);
    if (!x) throw std::logic_error("generator outside its own lattice");
    coords.push_back(*x);
  }
  return {AffineSemigroup::from_generators(coords, rank), basis};
}

}  // namespace toricnash
