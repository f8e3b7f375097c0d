#pragma once

// Singularity invariants of a cone and reproducible random sampling runs.

#include "toricnash/cone.hpp"
#include "toricnash/digraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricnash {

/// Invariants of the affine toric variety of a cone C in M (C is sigma dual).
struct AnalysisReport {
  std::size_t rank = 0;
  bool simplicial = false;               // equivalently Q-factorial
  std::optional<Integer> index;          // lattice index of the rays, simplicial only
  bool gorenstein = false;
  std::optional<IntVector> gorenstein_witness;  // m with <m, rho> = 1 on the rays of sigma
  bool cyclic_quotient = false;
  std::vector<Integer> invariant_factors;       // of the ray matrix of sigma
  bool hypersurface = false;             // |Hilbert basis| = rank + 1
  std::size_t hilbert_basis_size = 0;
  bool saturated = true;
  bool unimodular = false;
};

/// Throws std::invalid_argument unless C is pointed and full-dimensional.
AnalysisReport analyze(const Cone& c);

struct SampleOptions {
  std::size_t rank = 2;
  BlowupMode mode = BlowupMode::normalized;
  Characteristic characteristic;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::int64_t entry_bound = 10;
};

struct SampleSummary {
  SampleOptions options;
  std::string distribution;
  std::size_t resolved = 0;   // complete, acyclic and free of anomalies
  std::size_t exhausted = 0;  // a budget ran out
  std::size_t with_cycles = 0;
  std::size_t anomalies = 0;  // complete but reaching an empty blowup
  std::size_t cycles = 0;     // distinct cycles reported in the store
  std::size_t vertex_count = 0;
  std::vector<std::string> unresolved;  // start keys not counted as resolved
};

/// The generator matrices of a sample: uniform entries in [-bound, bound],
/// rank to rank + 2 nonzero columns, redrawn until pointed and full rank.
std::vector<IntMatrix> sample_generators(const SampleOptions& options);

/// Resolves every sampled input into one shared store. Throws
/// std::invalid_argument for a rank outside 2..5 or a bound below 1.
SampleSummary sample_random(const SampleOptions& options, const Budgets& budgets, DigraphStore* store = nullptr);

}  // namespace toricnash
