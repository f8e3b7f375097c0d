#include "toricnash/cone.hpp"

#include "toricnash/double_description.hpp"
#include "toricnash/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricnash {

namespace {

std::vector<IntVector> normalized_generators(const std::vector<IntVector>& gens, std::size_t rank) {
  std::vector<IntVector> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.size() != rank) throw std::invalid_argument("generator length does not match ambient rank");
    if (is_zero_vector(g)) throw std::invalid_argument("zero generator");
    out.push_back(make_primitive(g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Cone Cone::from_generators(const std::vector<IntVector>& generators, std::size_t rank) {
  if (rank == 0) throw std::invalid_argument("ambient rank must be positive");
  Cone c;
  c.rank_ = rank;
  c.generators_ = normalized_generators(generators, rank);

  ConeGenerators dual = double_description(c.generators_, rank);
  c.equations_ = std::move(dual.lineality);
  std::sort(c.equations_.begin(), c.equations_.end());
  c.facets_ = std::move(dual.rays);

  std::vector<IntVector> all = c.equations_;
  all.insert(all.end(), c.facets_.begin(), c.facets_.end());
  c.pointed_ = toricnash::rank(all) == rank;

  if (c.pointed_ && !c.generators_.empty()) {
    std::vector<IntVector> extreme;
    for (const auto& g : c.generators_) {
      std::vector<IntVector> tight = c.equations_;
      for (const auto& f : c.facets_)
        if (dot(f, g).is_zero()) tight.push_back(f);
      if (toricnash::rank(tight) == rank - 1) extreme.push_back(g);
    }
    c.generators_ = std::move(extreme);
  }
  return c;
}

Cone Cone::from_generators(const IntMatrix& columns) {
  return from_generators(columns.column_vectors(), columns.rows());
}

Cone Cone::from_inequalities(const std::vector<IntVector>& rows, std::size_t rank) {
  ConeGenerators g = double_description(rows, rank);
  std::vector<IntVector> gens = std::move(g.rays);
  for (const auto& l : g.lineality) {
    gens.push_back(l);
    gens.push_back(scaled(l, Integer(-1)));
  }
  return from_generators(gens, rank);
}

Cone Cone::from_inequalities(const IntMatrix& rows) { return from_inequalities(rows.row_vectors(), rows.cols()); }

Cone Cone::orthant(std::size_t rank) { return from_generators(IntMatrix::identity(rank)); }

bool Cone::is_unimodular() const {
  if (!pointed_ || !is_full_dimensional() || generators_.size() != rank_) return false;
  return abs(determinant(IntMatrix::from_columns(generators_, rank_))).is_one();
}

const std::vector<IntVector>& Cone::rays() const {
  if (!pointed_) throw std::logic_error("extreme rays requested for a non-pointed cone");
  return generators_;
}

IntMatrix Cone::ray_matrix() const { return IntMatrix::from_columns(rays(), rank_); }

IntMatrix Cone::facet_matrix() const { return IntMatrix::from_rows(facets_); }

bool Cone::contains(const IntVector& v) const {
  if (v.size() != rank_) throw std::invalid_argument("vector length does not match ambient rank");
  for (const auto& e : equations_)
    if (!dot(e, v).is_zero()) return false;
  for (const auto& f : facets_)
    if (dot(f, v).sign() < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.rank_ != rank_) return false;
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

bool Cone::contains_in_interior(const IntVector& v) const {
  if (!contains(v)) return false;
  for (const auto& f : facets_)
    if (dot(f, v).is_zero()) return false;
  return true;
}

Cone Cone::dual() const {
  std::vector<IntVector> gens = facets_;
  for (const auto& e : equations_) {
    gens.push_back(e);
    gens.push_back(scaled(e, Integer(-1)));
  }
  return from_generators(gens, rank_);
}

Cone Cone::transformed(const IntMatrix& u) const {
  std::vector<IntVector> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(u * g);
  return from_generators(gens, u.rows());
}

IntVector Cone::positive_grading() const {
  if (!pointed_ || !is_full_dimensional())
    throw std::logic_error("positive grading needs a pointed full-dimensional cone");
  IntVector w(rank_);
  for (const auto& f : facets_) w = w + f;
  return w;
}

}  // namespace toricnash
