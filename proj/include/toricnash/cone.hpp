#pragma once

#include "toricnash/int_matrix.hpp"

#include <vector>

namespace toricnash {

/// Rational polyhedral cone in Z^n carrying both descriptions.
///
/// Generators are stored primitive, deduplicated and sorted. When the cone
/// is pointed they are reduced to the extreme rays. The inequality side
/// consists of irredundant facet normals (a . x >= 0) plus equations
/// spanning the orthogonal complement of the linear span.
class Cone {
 public:
  static Cone from_generators(const std::vector<IntVector>& generators, std::size_t rank);
  /// Columns are generators.
  static Cone from_generators(const IntMatrix& columns);
  /// {x : rows . x >= 0}
  static Cone from_inequalities(const std::vector<IntVector>& rows, std::size_t rank);
  static Cone from_inequalities(const IntMatrix& rows);
  /// The cone spanned by the standard basis.
  static Cone orthant(std::size_t rank);

  std::size_t ambient_rank() const noexcept { return rank_; }
  std::size_t dimension() const noexcept { return rank_ - equations_.size(); }
  bool is_pointed() const noexcept { return pointed_; }
  bool is_full_dimensional() const noexcept { return equations_.empty(); }
  bool is_simplicial() const noexcept { return pointed_ && generators_.size() == dimension(); }
  /// Full-dimensional and generated by a lattice basis.
  bool is_unimodular() const;
  bool is_zero() const noexcept { return generators_.empty(); }

  /// Extreme rays (pointed cones only; throws otherwise).
  const std::vector<IntVector>& rays() const;
  /// Primitive generators; equal to rays() for pointed cones.
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  const std::vector<IntVector>& facets() const noexcept { return facets_; }
  const std::vector<IntVector>& equations() const noexcept { return equations_; }

  IntMatrix ray_matrix() const;     // rays as columns
  IntMatrix facet_matrix() const;   // facets as rows

  bool contains(const IntVector& v) const;
  bool contains(const Cone& other) const;
  /// v lies in the relative interior.
  bool contains_in_interior(const IntVector& v) const;

  Cone dual() const;
  /// The image U * C.
  Cone transformed(const IntMatrix& u) const;

  /// Sum of facet normals: strictly positive on every nonzero point of a
  /// pointed full-dimensional cone.
  IntVector positive_grading() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.generators_ == b.generators_ && a.pointed_ == b.pointed_;
  }

 private:
  Cone() = default;

  std::size_t rank_ = 0;
  bool pointed_ = false;
  std::vector<IntVector> generators_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

}  // namespace toricnash
