#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, Bareiss
// determinants, ranks, lattice indices and integer system solving.

#include "toricnash/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace toricnash {

/// Characteristic of the base field: 0 or a prime.
class Characteristic {
 public:
  constexpr Characteristic() = default;
  explicit Characteristic(std::int64_t p);  // throws std::invalid_argument unless p == 0 or prime
  std::int64_t value() const noexcept { return p_; }
  bool is_zero() const noexcept { return p_ == 0; }
  friend bool operator==(Characteristic, Characteristic) = default;

 private:
  std::int64_t p_ = 0;
};

bool is_prime(std::int64_t p);

struct HermiteForm {
  IntMatrix hnf;        // H = U * A
  IntMatrix transform;  // U, unimodular
};

/// Row-style Hermite normal form: pivots move strictly right going down,
/// pivots are positive and entries above a pivot lie in [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix& a);
IntMatrix hnf(const IntMatrix& a);

Integer determinant(const IntMatrix& a);

struct SmithForm {
  std::vector<Integer> invariant_factors;  // positive, each divides the next
  IntMatrix left;                          // left * A * right = diag(factors, 0...)
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
std::size_t rank(const std::vector<IntVector>& vectors);

/// Divides by the gcd of the entries; throws on the zero vector.
IntVector make_primitive(IntVector v);
/// Like make_primitive but leaves the zero vector alone.
void make_primitive_in_place(IntVector& v);

/// Index of the lattice spanned by the columns inside Z^rows.
/// Throws if the columns do not span a full-rank sublattice.
Integer lattice_index(const IntMatrix& a);

/// True iff the n given vectors in Z^n form a basis of k^n for char(k) = p.
bool is_basis_modulo(const std::vector<IntVector>& columns, Characteristic p);

/// Some integer x with A x = b, if one exists.
std::optional<IntVector> solve_integer_system(const IntMatrix& a, const IntVector& b);

/// Integer inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Basis of the integer kernel {x : A x = 0} as columns (may be empty).
std::vector<IntVector> integer_kernel(const IntMatrix& a);

}  // namespace toricnash
