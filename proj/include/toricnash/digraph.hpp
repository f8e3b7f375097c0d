#pragma once

// Partial knowledge of the Nash and normalized Nash digraphs: a store of
// canonical vertices and edges, breadth-first resolution, cycle search and
// persistence.

#include "toricnash/canonical.hpp"
#include "toricnash/linalg.hpp"
#include "toricnash/nash.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace toricnash {

enum class BlowupMode { nash, normalized };

std::string to_string(BlowupMode m);
BlowupMode parse_mode(const std::string& s);  // throws std::invalid_argument

struct StoreMeta {
  BlowupMode mode = BlowupMode::normalized;
  Characteristic characteristic;
  std::size_t rank = 0;
  int version = 1;

  friend bool operator==(const StoreMeta&, const StoreMeta&) = default;
};

class DigraphStore {
 public:
  /// With seed_epsilon the unimodular vertex and its loop are present.
  explicit DigraphStore(StoreMeta meta, bool seed_epsilon = true);

  const StoreMeta& meta() const noexcept { return meta_; }
  const std::map<std::string, IntMatrix>& vertices() const noexcept { return vertices_; }
  const std::set<std::pair<std::string, std::string>>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(const std::string& key) const { return vertices_.count(key) != 0; }
  /// Expanded vertices are exactly those with outgoing edges.
  bool is_expanded(const std::string& key) const;
  std::vector<std::string> children(const std::string& key) const;
  const std::string& epsilon_key() const noexcept { return epsilon_; }

  void add_vertex(const std::string& key, const IntMatrix& payload);
  /// Both endpoints must already be vertices.
  void add_edge(const std::string& from, const std::string& to);
  /// Set union; metas must agree.
  void merge(const DigraphStore& other);

  /// Vertices whose blowup came back empty during this session.
  const std::set<std::string>& anomalies() const noexcept { return anomalies_; }
  void mark_anomaly(const std::string& key) { anomalies_.insert(key); }

  void write(std::ostream& out) const;
  void save(const std::string& path) const;
  /// Reads JSON lines; repeated records are merged. Throws std::runtime_error
  /// with the offending line number on malformed input.
  static DigraphStore read(std::istream& in);
  static DigraphStore load(const std::string& path);

  friend bool operator==(const DigraphStore& a, const DigraphStore& b) {
    return a.meta_ == b.meta_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  StoreMeta meta_;
  std::string epsilon_;
  std::map<std::string, IntMatrix> vertices_;
  std::set<std::pair<std::string, std::string>> edges_;
  std::map<std::string, std::vector<std::string>> out_;
  std::set<std::string> anomalies_;
};

/// Canonical key and payload of an input given in the store's mode: the
/// columns are cone generators (normalized) or semigroup generators (nash).
/// Semigroups are first rewritten in a basis of the lattice they generate.
struct Vertex {
  std::string key;
  IntMatrix payload;
};
Vertex canonical_vertex(const StoreMeta& meta, const IntMatrix& generators);

/// Children of a payload in the store's mode. Pure; safe to run concurrently.
std::vector<Vertex> compute_children(const StoreMeta& meta, const IntMatrix& payload, const NashOptions& options = {});

/// Expands one stored vertex (or returns its known children).
std::vector<std::string> expand(DigraphStore& store, const std::string& key, const NashOptions& options = {});

struct Budgets {
  std::size_t max_vertices = 100000;
  double max_seconds = 3600;
  unsigned threads = 1;
  NashOptions nash;
};

struct ResolutionStatus {
  bool complete = false;
  std::string start;
  std::size_t vertex_count = 0;  // reachable from start, or seen so far when a budget ran out
  std::size_t edge_count = 0;
  std::vector<std::string> frontier;  // unexpanded keys when a budget ran out
  std::size_t levels = 0;
};

/// Breadth-first closure of the descendants of start. Throws
/// std::invalid_argument on non-positive budgets or a rank mismatch.
ResolutionStatus resolution_subgraph(DigraphStore& store, const IntMatrix& start, const Budgets& budgets);

/// Vertices reachable from key following stored edges, with their depth.
std::map<std::string, std::size_t> reachable(const DigraphStore& store, const std::string& key);

/// Strongly connected components with a cycle (ignoring the unimodular loop),
/// each with one shortest directed cycle through its least key other than ε.
std::vector<std::vector<std::string>> find_cycles(const DigraphStore& store, std::size_t max_report);

/// Shortest directed cycle through key, if any.
std::optional<std::vector<std::string>> shortest_cycle_through(const DigraphStore& store, const std::string& key);

/// Graphviz text with sorted nodes; the unimodular vertex is highlighted.
std::string export_dot(const DigraphStore& store);

}  // namespace toricnash
