#pragma once

// Affine semigroups in Z^n: Hilbert bases of cones, minimal generating sets
// and membership.

#include "toricnash/cone.hpp"

#include <vector>

namespace toricnash {

/// Pointed full-rank affine semigroup, stored by its minimal generators.
class AffineSemigroup {
 public:
  /// Minimizes the given generators. Throws if they span a non-pointed cone
  /// or do not have rank n.
  static AffineSemigroup from_generators(const std::vector<IntVector>& generators, std::size_t rank);
  static AffineSemigroup from_generators(const IntMatrix& columns);
  /// The saturated semigroup C ∩ Z^n.
  static AffineSemigroup from_cone(const Cone& c);
  /// Trusts that the columns are already a minimal generating set.
  static AffineSemigroup from_hilbert_basis(const IntMatrix& columns);

  std::size_t ambient_rank() const noexcept { return rank_; }
  /// Minimal generators, sorted.
  const std::vector<IntVector>& hilbert_basis() const noexcept { return basis_; }
  IntMatrix basis_matrix() const { return IntMatrix::from_columns(basis_, rank_); }
  const Cone& hull() const noexcept { return hull_; }

  bool contains(const IntVector& v) const;
  /// Generated by a lattice basis.
  bool is_unimodular() const;
  bool is_saturated() const;

  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
    return a.rank_ == b.rank_ && a.basis_ == b.basis_;
  }

 private:
  AffineSemigroup(std::size_t rank, std::vector<IntVector> basis, Cone hull)
      : rank_(rank), basis_(std::move(basis)), hull_(std::move(hull)) {}

  std::size_t rank_;
  std::vector<IntVector> basis_;
  Cone hull_;
};

/// Hilbert basis of C ∩ Z^n for a pointed full-dimensional cone, sorted.
std::vector<IntVector> hilbert_basis(const Cone& c);

/// Simplicial cones (as ray index sets into c.rays()) of a placing
/// triangulation of a pointed full-dimensional cone.
std::vector<std::vector<std::size_t>> placing_triangulation(const Cone& c);

/// Lattice points of the half-open parallelepiped spanned by n independent
/// columns, including 0.
std::vector<IntVector> parallelepiped_points(const IntMatrix& columns);

/// Minimal generating set of the semigroup generated by the input (zeros and
/// duplicates dropped), sorted. Requires a pointed span of full rank.
std::vector<IntVector> minimal_generators(const std::vector<IntVector>& generators, std::size_t rank);

/// True iff v is a nonnegative integer combination of the generators, which
/// must span a pointed cone.
bool semigroup_member(const std::vector<IntVector>& generators, const IntVector& v);

struct FullRankNormalization {
  AffineSemigroup semigroup;  // the generators written in the basis below
  IntMatrix basis;            // columns: a basis of the lattice spanned by the input
};

/// Rewrites generators spanning a full-rank sublattice L of Z^n in a basis
/// of L, so that the result generates Z^n as a group. Input = basis * output.
FullRankNormalization full_rank_normalize(const std::vector<IntVector>& generators, std::size_t rank);

}  // namespace toricnash
