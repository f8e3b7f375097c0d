#pragma once

// Canonical representatives modulo unimodular equivalence.
//
// The key of a pointed full-dimensional cone is the lexicographically
// greatest (row-major) Hermite normal form of its ray matrix over all column
// orders. The key of a semigroup maps its Hilbert basis with every transform
// realizing the hull's key, orders the columns colexicographically (last
// coordinate most significant) and keeps the least matrix.

#include "toricnash/cone.hpp"
#include "toricnash/semigroup.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace toricnash {

struct CanonicalKey {
  IntMatrix matrix;

  /// "n x m: a,b,c,..." with entries in row-major order.
  std::string serialize() const;
  static CanonicalKey parse(std::string_view text);  // throws std::invalid_argument

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.matrix <=> b.matrix;
  }
};

struct CanonicalCone {
  CanonicalKey key;
  IntMatrix transform;                  // U with U * rays (reordered) = key
  std::vector<IntMatrix> all_transforms;  // every U realizing the key, sorted
};

CanonicalCone canonical_cone(const Cone& c);
CanonicalKey canonical_semigroup(const AffineSemigroup& s);

bool are_equivalent(const Cone& a, const Cone& b);
bool are_equivalent(const AffineSemigroup& a, const AffineSemigroup& b);

/// Key of the unimodular class in rank n: the identity matrix.
CanonicalKey unimodular_key(std::size_t n);

/// Column order used for semigroup keys.
bool colex_less(const IntVector& a, const IntVector& b);

}  // namespace toricnash
