#include "toricnash/analysis.hpp"

#include "toricnash/linalg.hpp"
#include "toricnash/semigroup.hpp"

#include <random>
#include <stdexcept>

namespace toricnash {

AnalysisReport analyze(const Cone& c) {
  if (!c.is_pointed() || !c.is_full_dimensional())
    throw std::invalid_argument("analyze needs a pointed full-dimensional cone");
  AnalysisReport r;
  r.rank = c.ambient_rank();
  r.simplicial = c.is_simplicial();
  if (r.simplicial) r.index = lattice_index(c.ray_matrix());
  r.unimodular = c.is_unimodular();

  IntMatrix sigma = c.dual().ray_matrix();
  auto m = solve_integer_system(sigma.transpose(), IntVector(sigma.cols(), Integer(1)));
  r.gorenstein = m.has_value();
  r.gorenstein_witness = m;

  r.invariant_factors = smith_normal_form(sigma).invariant_factors;
  std::size_t nontrivial = 0;
  for (const auto& f : r.invariant_factors) nontrivial += f != Integer(1);
  r.cyclic_quotient = r.simplicial && nontrivial <= 1;

  r.hilbert_basis_size = hilbert_basis(c).size();
  r.hypersurface = r.hilbert_basis_size == r.rank + 1;
  return r;
}

namespace {

void check_sample_options(const SampleOptions& o) {
  if (o.rank < 2 || o.rank > 5) throw std::invalid_argument("sample rank must be in 2..5");
  if (o.entry_bound < 1) throw std::invalid_argument("entry bound must be at least 1");
}

}  // namespace

std::vector<IntMatrix> sample_generators(const SampleOptions& o) {
  check_sample_options(o);
  std::mt19937_64 rng(o.seed);
  // Plain modular reduction keeps the stream identical across standard libraries.
  auto draw = [&](std::uint64_t span) { return static_cast<std::int64_t>(rng() % span); };
  const auto span = static_cast<std::uint64_t>(2 * o.entry_bound + 1);

  std::vector<IntMatrix> out;
  while (out.size() < o.count) {
    const std::size_t k = o.rank + static_cast<std::size_t>(draw(3));
    std::vector<IntVector> cols(k, IntVector(o.rank));
    for (auto& col : cols)
      for (auto& x : col) x = Integer(draw(span) - o.entry_bound);
    bool zero = false;
    for (const auto& col : cols) zero = zero || is_zero_vector(col);
    if (zero || rank(cols) != o.rank) continue;
    if (!Cone::from_generators(cols, o.rank).is_pointed()) continue;
    out.push_back(IntMatrix::from_columns(cols, o.rank));
  }
  return out;
}

SampleSummary sample_random(const SampleOptions& options, const Budgets& budgets, DigraphStore* store) {
  check_sample_options(options);
  StoreMeta meta{options.mode, options.characteristic, options.rank, 1};
  DigraphStore local(meta);
  DigraphStore& s = store ? *store : local;
  if (!(s.meta() == meta)) throw std::invalid_argument("store meta does not match the sample");

  SampleSummary summary;
  summary.options = options;
  summary.distribution = "uniform entries in [-" + std::to_string(options.entry_bound) + ", " +
                         std::to_string(options.entry_bound) + "], " + std::to_string(options.rank) + " to " +
                         std::to_string(options.rank + 2) + " columns, rejection of non-pointed or rank-deficient";

  std::vector<std::pair<std::string, bool>> starts;
  for (const auto& g : sample_generators(options)) {
    auto status = resolution_subgraph(s, g, budgets);
    starts.emplace_back(status.start, status.complete);
  }

  std::set<std::string> cyclic;
  auto cycles = find_cycles(s, SIZE_MAX);
  summary.cycles = cycles.size();
  for (const auto& c : cycles) cyclic.insert(c.begin(), c.end());

  for (const auto& [key, complete] : starts) {
    if (!complete) {
      ++summary.exhausted;
      summary.unresolved.push_back(key);
      continue;
    }
    bool cycle = false, anomaly = false;
    for (const auto& [v, depth] : reachable(s, key)) {
      cycle = cycle || cyclic.count(v);
      anomaly = anomaly || s.anomalies().count(v) || (!s.is_expanded(v));
    }
    if (cycle) ++summary.with_cycles;
    if (anomaly) ++summary.anomalies;
    if (cycle || anomaly) {
      summary.unresolved.push_back(key);
    } else {
      ++summary.resolved;
    }
  }
  summary.vertex_count = s.vertex_count();
  return summary;
}

}  // namespace toricnash
