#pragma once

// Nash blowups of affine semigroups, normalized Nash blowups of cones and
// the dual subdivision of the cone in N.

#include "toricnash/canonical.hpp"
#include "toricnash/linalg.hpp"
#include "toricnash/semigroup.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toricnash {

/// Every n-subset of `elements` (indices in the given order, lexicographic)
/// forming a basis of k^n for char(k) = p.
std::vector<std::vector<std::size_t>> enumerate_bases(const std::vector<IntVector>& elements, Characteristic p);

/// Calls visit for every basis subset in lexicographic order; stops early if
/// visit returns false.
void for_each_basis(const std::vector<IntVector>& elements, Characteristic p,
                    const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// Sums of the basis subsets, deduplicated and sorted.
std::vector<IntVector> basis_sums(const std::vector<IntVector>& elements, Characteristic p);

struct NashOptions {
  std::uint64_t max_bases = 1000000;  // cap on the number of bases (non-normalized mode)
};

/// Raised when a blowup exceeds its configured cap.
class BlowupLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
struct Child {
  CanonicalKey key;
  T object;
};

/// The pointed charts of the blowup as minimally generated semigroups, one per
/// distinct generating set (equivalent charts are kept apart), sorted.
/// Throws std::invalid_argument unless s generates all of Z^n.
std::vector<AffineSemigroup> nash_charts(const AffineSemigroup& s, Characteristic p, const NashOptions& options = {});

/// Children of a semigroup, one per equivalence class, sorted by key.
std::vector<Child<AffineSemigroup>> nash_children(const AffineSemigroup& s, Characteristic p,
                                                  const NashOptions& options = {});

/// Feasible cones at every vertex of Conv(basis sums) + C, in vertex order.
std::vector<Cone> feasible_cones_of_basis_sums(const Cone& c, Characteristic p);

/// Children of a cone, one per equivalence class, sorted by key.
std::vector<Child<Cone>> normalized_nash_children(const Cone& c, Characteristic p);

struct Fan {
  std::size_t rank = 0;
  std::vector<Cone> cones;  // maximal cones
};

/// The normal fan of Conv(basis sums of the dual) + dual, as a subdivision of sigma.
Fan nash_subdivision(const Cone& sigma, Characteristic p);

/// Empty if the fan is a subdivision of sigma, otherwise the first violation.
std::string fan_subdivision_defect(const Cone& sigma, const Fan& fan);

/// True iff the intersection of a and b is a face of both.
bool meet_in_common_face(const Cone& a, const Cone& b);

/// Cone over e_1, ..., e_{n-1} and (1, ..., 1, j).
Cone reeves_cone(std::size_t n, std::int64_t j);
IntMatrix reeves_matrix(std::size_t n, std::int64_t j);

}  // namespace toricnash
