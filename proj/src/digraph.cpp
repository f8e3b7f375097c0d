#include "toricnash/digraph.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace toricnash {

using json = nlohmann::json;

namespace {

json integer_to_json(const Integer& x) {
  if (x.is_small()) return x.small();
  return x.to_string();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::runtime_error("matrix entry is neither an integer nor a decimal string");
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) throw std::runtime_error("malformed matrix");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw std::runtime_error("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = integer_from_json(j[r][c]);
  }
  return m;
}

bool payload_is_unimodular(const IntMatrix& payload) {
  return payload.rows() == payload.cols() && abs(determinant(payload)).is_one();
}

}  // namespace

std::string to_string(BlowupMode m) { return m == BlowupMode::nash ? "nash" : "normalized"; }

BlowupMode parse_mode(const std::string& s) {
  if (s == "nash") return BlowupMode::nash;
  if (s == "normalized") return BlowupMode::normalized;
  throw std::invalid_argument("unknown mode '" + s + "' (expected nash or normalized)");
}

DigraphStore::DigraphStore(StoreMeta meta, bool seed_epsilon) : meta_(meta) {
  if (meta_.rank == 0) throw std::invalid_argument("store rank must be positive");
  CanonicalKey eps = unimodular_key(meta_.rank);
  epsilon_ = eps.serialize();
  if (seed_epsilon) {
    add_vertex(epsilon_, eps.matrix);
    add_edge(epsilon_, epsilon_);
  }
}

bool DigraphStore::is_expanded(const std::string& key) const {
  return out_.count(key) != 0 || anomalies_.count(key) != 0;
}

std::vector<std::string> DigraphStore::children(const std::string& key) const {
  auto it = out_.find(key);
  if (it == out_.end()) return {};
  return it->second;
}

void DigraphStore::add_vertex(const std::string& key, const IntMatrix& payload) {
  if (payload.rows() != meta_.rank) throw std::invalid_argument("vertex rank does not match the store");
  vertices_.try_emplace(key, payload);
}

void DigraphStore::add_edge(const std::string& from, const std::string& to) {
  if (!has_vertex(from) || !has_vertex(to)) throw std::invalid_argument("edge endpoint is not a stored vertex");
  if (edges_.emplace(from, to).second) {
    auto& kids = out_[from];
    kids.insert(std::upper_bound(kids.begin(), kids.end(), to), to);
  }
}

void DigraphStore::merge(const DigraphStore& other) {
  if (!(other.meta_ == meta_)) throw std::invalid_argument("cannot merge stores with different meta data");
  for (const auto& [k, m] : other.vertices_) add_vertex(k, m);
  for (const auto& [a, b] : other.edges_) add_edge(a, b);
}

void DigraphStore::write(std::ostream& out) const {
  json meta = {{"kind", "meta"},
               {"version", meta_.version},
               {"mode", to_string(meta_.mode)},
               {"characteristic", meta_.characteristic.value()},
               {"rank", meta_.rank}};
  out << meta.dump() << '\n';
  for (const auto& [k, m] : vertices_) {
    json v = {{"kind", "vertex"}, {"key", k}, {"matrix", matrix_to_json(m)}};
    out << v.dump() << '\n';
  }
  for (const auto& [a, b] : edges_) {
    json e = {{"kind", "edge"}, {"from", a}, {"to", b}};
    out << e.dump() << '\n';
  }
}

void DigraphStore::save(const std::string& path) const {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write store " + path);
  write(f);
  if (!f) throw std::runtime_error("write failed for store " + path);
}

DigraphStore DigraphStore::read(std::istream& in) {
  std::optional<DigraphStore> store;
  std::vector<std::tuple<std::size_t, std::string, std::string>> pending_edges;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "meta") {
        StoreMeta meta;
        meta.version = j.at("version").get<int>();
        if (meta.version != 1) throw std::runtime_error("unsupported store version");
        meta.mode = parse_mode(j.at("mode").get<std::string>());
        meta.characteristic = Characteristic(j.at("characteristic").get<std::int64_t>());
        meta.rank = j.at("rank").get<std::size_t>();
        if (!store) {
          store.emplace(meta, false);
        } else if (!(store->meta() == meta)) {
          throw std::runtime_error("meta record disagrees with an earlier one");
        }
      } else if (kind == "vertex") {
        if (!store) throw std::runtime_error("vertex before meta record");
        IntMatrix m = matrix_from_json(j.at("matrix"));
        std::string key = j.at("key").get<std::string>();
        if (CanonicalKey::parse(key).matrix != m) throw std::runtime_error("vertex key does not match its matrix");
        store->add_vertex(key, m);
      } else if (kind == "edge") {
        if (!store) throw std::runtime_error("edge before meta record");
        pending_edges.emplace_back(number, j.at("from").get<std::string>(), j.at("to").get<std::string>());
      } else {
        throw std::runtime_error("unknown record kind '" + kind + "'");
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("store line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (!store) throw std::runtime_error("store has no meta record");
  for (const auto& [at, a, b] : pending_edges) {
    if (!store->has_vertex(a) || !store->has_vertex(b))
      throw std::runtime_error("store line " + std::to_string(at) + ": edge references an unknown vertex");
    store->add_edge(a, b);
  }
  return std::move(*store);
}

DigraphStore DigraphStore::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open store " + path);
  return read(f);
}

Vertex canonical_vertex(const StoreMeta& meta, const IntMatrix& generators) {
  if (generators.rows() != meta.rank) throw std::invalid_argument("input rank does not match the store");
  if (meta.mode == BlowupMode::normalized) {
    CanonicalKey k = canonical_cone(Cone::from_generators(generators)).key;
    return {k.serialize(), k.matrix};
  }
  CanonicalKey k = canonical_semigroup(full_rank_normalize(generators.column_vectors(), meta.rank).semigroup);
  return {k.serialize(), k.matrix};
}

std::vector<Vertex> compute_children(const StoreMeta& meta, const IntMatrix& payload, const NashOptions& options) {
  std::vector<Vertex> out;
  if (meta.mode == BlowupMode::normalized) {
    for (auto& c : normalized_nash_children(Cone::from_generators(payload), meta.characteristic))
      out.push_back({c.key.serialize(), c.key.matrix});
  } else {
    for (auto& c : nash_children(AffineSemigroup::from_hilbert_basis(payload), meta.characteristic, options))
      out.push_back({c.key.serialize(), c.key.matrix});
  }
  return out;
}

namespace {

void record_children(DigraphStore& store, const std::string& key, const std::vector<Vertex>& kids) {
  if (kids.empty()) store.mark_anomaly(key);
  for (const auto& c : kids) {
    store.add_vertex(c.key, c.payload);
    store.add_edge(key, c.key);
  }
}

std::vector<Vertex> children_of(const StoreMeta& meta, const std::string& key, const IntMatrix& payload,
                                const NashOptions& options) {
  if (payload_is_unimodular(payload)) return {{key, payload}};
  return compute_children(meta, payload, options);
}

}  // namespace

std::vector<std::string> expand(DigraphStore& store, const std::string& key, const NashOptions& options) {
  if (store.is_expanded(key)) return store.children(key);
  auto it = store.vertices().find(key);
  if (it == store.vertices().end()) throw std::invalid_argument("unknown vertex " + key);
  record_children(store, key, children_of(store.meta(), key, it->second, options));
  return store.children(key);
}

std::map<std::string, std::size_t> reachable(const DigraphStore& store, const std::string& key) {
  std::map<std::string, std::size_t> depth;
  if (!store.has_vertex(key)) return depth;
  std::deque<std::string> queue{key};
  depth[key] = 0;
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    for (const auto& c : store.children(v))
      if (depth.try_emplace(c, depth[v] + 1).second) queue.push_back(c);
  }
  return depth;
}

ResolutionStatus resolution_subgraph(DigraphStore& store, const IntMatrix& start, const Budgets& budgets) {
  if (budgets.max_vertices == 0 || !(budgets.max_seconds > 0) || budgets.threads == 0)
    throw std::invalid_argument("budgets must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&]() { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

  Vertex root = canonical_vertex(store.meta(), start);
  ResolutionStatus status;
  status.start = root.key;
  store.add_vertex(root.key, root.payload);

  std::set<std::string> seen{root.key};
  std::vector<std::string> level;
  if (!store.is_expanded(root.key)) level.push_back(root.key);

  // Already expanded vertices contribute their stored descendants.
  auto absorb_known = [&](const std::string& key, std::vector<std::string>& next) {
    std::deque<std::string> queue{key};
    while (!queue.empty()) {
      std::string v = queue.front();
      queue.pop_front();
      if (!store.is_expanded(v)) {
        next.push_back(v);
        continue;
      }
      for (const auto& c : store.children(v))
        if (seen.insert(c).second) queue.push_back(c);
    }
  };
  if (level.empty()) absorb_known(root.key, level);

  // Levels are processed in fixed-size chunks so that budgets are checked at
  // points that do not depend on the thread count.
  constexpr std::size_t chunk = 64;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    ++status.levels;
    std::vector<std::string> next;
    for (std::size_t begin = 0; begin < level.size(); begin += chunk) {
      const std::size_t end = std::min(level.size(), begin + chunk);
      if (seen.size() > budgets.max_vertices || elapsed() > budgets.max_seconds) {
        std::vector<std::string> frontier(level.begin() + static_cast<long>(begin), level.end());
        frontier.insert(frontier.end(), next.begin(), next.end());
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        status.frontier = std::move(frontier);
        status.vertex_count = seen.size();
        return status;
      }

      std::vector<IntMatrix> payloads;
      for (std::size_t i = begin; i < end; ++i) payloads.push_back(store.vertices().at(level[i]));
      std::vector<std::optional<std::vector<Vertex>>> results(end - begin);
      std::atomic<std::size_t> cursor{0};
      std::mutex error_mutex;
      std::exception_ptr error;
      auto worker = [&]() {
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= results.size()) return;
          if (elapsed() > budgets.max_seconds) continue;
          try {
            results[i] = children_of(store.meta(), level[begin + i], payloads[i], budgets.nash);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      };
      unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(budgets.threads, results.size()));
      if (nthreads <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      if (error) std::rethrow_exception(error);

      // Single writer, in key order.
      std::vector<std::string> unfinished;
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) {
          unfinished.push_back(level[begin + i]);
          continue;
        }
        record_children(store, level[begin + i], *results[i]);
        for (const auto& c : *results[i])
          if (seen.insert(c.key).second) absorb_known(c.key, next);
      }
      if (!unfinished.empty()) {
        unfinished.insert(unfinished.end(), level.begin() + static_cast<long>(end), level.end());
        unfinished.insert(unfinished.end(), next.begin(), next.end());
        std::sort(unfinished.begin(), unfinished.end());
        unfinished.erase(std::unique(unfinished.begin(), unfinished.end()), unfinished.end());
        status.frontier = std::move(unfinished);
        status.vertex_count = seen.size();
        return status;
      }
    }
    level = std::move(next);
  }

  status.complete = true;
  auto reach = reachable(store, root.key);
  status.vertex_count = reach.size();
  for (const auto& [v, d] : reach) status.edge_count += store.children(v).size();
  return status;
}

namespace {

// Iterative Tarjan over the stored graph; components in discovery order.
std::vector<std::vector<std::string>> strongly_connected(const DigraphStore& store) {
  std::map<std::string, std::size_t> index, low;
  std::set<std::string> on_stack;
  std::vector<std::string> stack;
  std::vector<std::vector<std::string>> components;
  std::size_t counter = 0;

  for (const auto& [root, payload] : store.vertices()) {
    if (index.count(root)) continue;
    std::vector<std::pair<std::string, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack.insert(root);
    while (!call.empty()) {
      auto& [v, next_child] = call.back();
      std::vector<std::string> kids = store.children(v);
      if (next_child < kids.size()) {
        std::string w = kids[next_child++];
        if (!index.count(w)) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack.insert(w);
          call.emplace_back(w, 0);
        } else if (on_stack.count(w)) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::string done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::string> comp;
        for (;;) {
          std::string w = stack.back();
          stack.pop_back();
          on_stack.erase(w);
          comp.push_back(w);
          if (w == done) break;
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

}  // namespace

std::optional<std::vector<std::string>> shortest_cycle_through(const DigraphStore& store, const std::string& key) {
  std::map<std::string, std::string> parent;
  std::deque<std::string> queue;
  for (const auto& c : store.children(key)) {
    if (c == key) return std::vector<std::string>{key};
    if (parent.try_emplace(c, key).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    for (const auto& c : store.children(v)) {
      if (c == key) {
        std::vector<std::string> cycle{v};
        while (cycle.back() != key) cycle.push_back(parent.at(cycle.back()));
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (parent.try_emplace(c, v).second) queue.push_back(c);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::string>> find_cycles(const DigraphStore& store, std::size_t max_report) {
  std::vector<std::vector<std::string>> comps = strongly_connected(store);
  std::sort(comps.begin(), comps.end());
  std::vector<std::vector<std::string>> out;
  for (const auto& comp : comps) {
    if (out.size() >= max_report) break;
    const std::string& v = comp.front() == store.epsilon_key() && comp.size() > 1 ? comp[1] : comp.front();
    if (comp.size() == 1) {
      if (v == store.epsilon_key() || !store.edges().count({v, v})) continue;
      out.push_back({v});
      continue;
    }
    if (auto cycle = shortest_cycle_through(store, v)) out.push_back(*cycle);
  }
  return out;
}

std::string export_dot(const DigraphStore& store) {
  std::ostringstream os;
  std::map<std::string, std::size_t> id;
  for (const auto& [k, m] : store.vertices()) id.emplace(k, id.size());
  os << "digraph nash {\n";
  for (const auto& [k, m] : store.vertices()) {
    std::string label;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r) label += "\\n";
      label += vector_to_string(m.row(r));
    }
    os << "  v" << id[k] << " [label=\"" << label << "\"";
    if (k == store.epsilon_key()) os << ", shape=doublecircle, style=filled, fillcolor=lightgray";
    os << "];\n";
  }
  for (const auto& [a, b] : store.edges()) os << "  v" << id[a] << " -> v" << id[b] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace toricnash
