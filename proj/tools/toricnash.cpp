// Command-line front end: single blowup steps, exploration, cycle search,
// singularity analysis, Reeves cones, sampling and exports.

#include "toricnash/analysis.hpp"
#include "toricnash/canonical.hpp"
#include "toricnash/digraph.hpp"
#include "toricnash/nash.hpp"
#include "toricnash/semigroup.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace toricnash;
using json = nlohmann::json;

namespace {

struct Globals {
  std::int64_t characteristic = 0;
  std::string mode = "normalized";
  std::string store;
  std::size_t max_vertices = 100000;
  double max_seconds = 3600;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::string side = "M";
  bool json = false;
};

json integer_json(const Integer& x) { return x.fits_int64() ? json(x.to_int64()) : json(x.to_string()); }

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

json vectors_json(const std::vector<IntVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

IntMatrix read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_matrix(ss.str());
  }
  return read_matrix_file(path);
}

IntMatrix columns_of(const std::vector<IntVector>& vs, std::size_t rank) { return IntMatrix::from_columns(vs, rank); }

// The cone in M described by the input.
Cone cone_in_m(const Globals& g, const IntMatrix& m) {
  Cone c = Cone::from_generators(m);
  return g.side == "N" ? c.dual() : c;
}

// The cone in N described by the input.
Cone cone_in_n(const Globals& g, const IntMatrix& m) {
  Cone c = Cone::from_generators(m);
  return g.side == "N" ? c : c.dual();
}

StoreMeta meta_for(const Globals& g, std::size_t rank) {
  return {parse_mode(g.mode), Characteristic(g.characteristic), rank, 1};
}

Budgets budgets_for(const Globals& g) {
  Budgets b;
  b.max_vertices = g.max_vertices;
  b.max_seconds = g.max_seconds;
  b.threads = g.threads;
  return b;
}

DigraphStore open_store(const Globals& g, const StoreMeta& meta) {
  if (!g.store.empty() && std::filesystem::exists(g.store)) {
    DigraphStore s = DigraphStore::load(g.store);
    if (!(s.meta() == meta)) throw std::invalid_argument("store " + g.store + " has a different mode, characteristic or rank");
    return s;
  }
  return DigraphStore(meta);
}

DigraphStore load_store(const Globals& g) {
  if (g.store.empty()) throw std::invalid_argument("--store is required");
  return DigraphStore::load(g.store);
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text;
  }
}

std::string key_block(const std::string& key, const IntMatrix& m) { return key + "\n" + format_matrix(m) + "\n"; }

void cmd_hilbert(const Globals& g, const std::string& input) {
  Cone c = cone_in_m(g, read_input(input));
  auto hb = hilbert_basis(c);
  IntMatrix m = columns_of(hb, c.ambient_rank());
  emit(g, {{"hilbert_basis", vectors_json(hb)}, {"size", hb.size()}}, format_matrix(m));
}

void cmd_dual(const Globals& g, const std::string& input) {
  Cone d = Cone::from_generators(read_input(input)).dual();
  emit(g, {{"rays", vectors_json(d.rays())}}, format_matrix(d.ray_matrix()));
}

void cmd_canon(const Globals& g, const std::string& input) {
  IntMatrix m = read_input(input);
  if (parse_mode(g.mode) == BlowupMode::normalized) m = cone_in_m(g, m).ray_matrix();
  Vertex v = canonical_vertex(meta_for(g, m.rows()), m);
  emit(g, {{"key", v.key}, {"matrix", matrix_json(v.payload)}}, key_block(v.key, v.payload));
}

void cmd_children(const Globals& g, const std::string& input) {
  IntMatrix m = read_input(input);
  if (parse_mode(g.mode) == BlowupMode::normalized) m = cone_in_m(g, m).ray_matrix();
  StoreMeta meta = meta_for(g, m.rows());
  Vertex v = canonical_vertex(meta, m);
  auto kids = compute_children(meta, v.payload);
  json arr = json::array();
  std::string text;
  for (const auto& k : kids) {
    arr.push_back({{"key", k.key}, {"matrix", matrix_json(k.payload)}});
    text += key_block(k.key, k.payload);
  }
  emit(g, {{"parent", v.key}, {"children", arr}}, text);
}

void cmd_subdivide(const Globals& g, const std::string& input) {
  Cone sigma = cone_in_n(g, read_input(input));
  Fan fan = nash_subdivision(sigma, Characteristic(g.characteristic));
  std::string defect = fan_subdivision_defect(sigma, fan);
  json arr = json::array();
  std::string text;
  for (const auto& c : fan.cones) {
    arr.push_back(vectors_json(c.rays()));
    text += format_matrix(c.ray_matrix()) + "\n";
  }
  text += defect.empty() ? "valid subdivision\n" : "invalid subdivision: " + defect + "\n";
  emit(g, {{"cones", arr}, {"valid", defect.empty()}, {"defect", defect}}, text);
}

json status_json(const ResolutionStatus& st) {
  return {{"complete", st.complete}, {"start", st.start},      {"vertex_count", st.vertex_count},
          {"edge_count", st.edge_count}, {"levels", st.levels}, {"frontier", st.frontier}};
}

void cmd_explore(const Globals& g, const std::string& input) {
  IntMatrix m = read_input(input);
  if (parse_mode(g.mode) == BlowupMode::normalized) m = cone_in_m(g, m).ray_matrix();
  StoreMeta meta = meta_for(g, m.rows());
  DigraphStore store = open_store(g, meta);
  auto st = resolution_subgraph(store, m, budgets_for(g));
  if (!g.store.empty()) store.save(g.store);
  auto through = shortest_cycle_through(store, st.start);
  std::ostringstream text;
  text << (st.complete ? "complete" : "budget exhausted") << "\nstart " << st.start << "\nlevels " << st.levels << "\n";
  if (st.complete) {
    text << "vertices " << st.vertex_count << "\nedges " << st.edge_count << "\n";
  } else {
    text << "frontier " << st.frontier.size() << "\n";
  }
  bool loop = through && !(through->size() == 1 && through->front() == store.epsilon_key());
  if (loop) text << "cycle through start of length " << through->size() << "\n";
  json j = status_json(st);
  j["cycle_through_start"] = loop ? json(*through) : json(nullptr);
  emit(g, j, text.str());
}

void cmd_cycles(const Globals& g, std::size_t max_report) {
  DigraphStore store = load_store(g);
  auto cycles = find_cycles(store, max_report);
  std::ostringstream text;
  for (const auto& c : cycles) {
    text << "length " << c.size() << ":";
    for (const auto& k : c) text << " [" << k << "]";
    text << "\n";
  }
  if (cycles.empty()) text << "no cycles\n";
  emit(g, {{"cycles", cycles}}, text.str());
}

void cmd_analyze(const Globals& g, const std::string& input) {
  AnalysisReport r = analyze(cone_in_m(g, read_input(input)));
  json j = {{"rank", r.rank},
            {"simplicial", r.simplicial},
            {"index", r.index ? integer_json(*r.index) : json(nullptr)},
            {"gorenstein", r.gorenstein},
            {"gorenstein_witness", r.gorenstein_witness ? vector_json(*r.gorenstein_witness) : json(nullptr)},
            {"cyclic_quotient", r.cyclic_quotient},
            {"invariant_factors", vector_json(r.invariant_factors)},
            {"hypersurface", r.hypersurface},
            {"hilbert_basis_size", r.hilbert_basis_size},
            {"saturated", r.saturated},
            {"unimodular", r.unimodular}};
  std::ostringstream text;
  text << "rank " << r.rank << "\nsimplicial " << r.simplicial << "\n";
  if (r.index) text << "index " << *r.index << "\n";
  text << "gorenstein " << r.gorenstein;
  if (r.gorenstein_witness) text << " witness " << vector_to_string(*r.gorenstein_witness);
  text << "\ncyclic_quotient " << r.cyclic_quotient << " factors " << vector_to_string(r.invariant_factors)
       << "\nhypersurface " << r.hypersurface << " (hilbert basis size " << r.hilbert_basis_size << ")\nunimodular "
       << r.unimodular << "\n";
  emit(g, j, text.str());
}

void cmd_reeves(const Globals& g, std::size_t n, std::int64_t j) {
  IntMatrix m = reeves_matrix(n, j);
  emit(g, {{"matrix", matrix_json(m)}}, format_matrix(m));
}

void cmd_sample(const Globals& g, std::size_t rank, std::size_t count, std::int64_t bound) {
  SampleOptions o;
  o.rank = rank;
  o.mode = parse_mode(g.mode);
  o.characteristic = Characteristic(g.characteristic);
  o.count = count;
  o.seed = g.seed;
  o.entry_bound = bound;
  StoreMeta meta{o.mode, o.characteristic, rank, 1};
  DigraphStore store = open_store(g, meta);
  SampleSummary s = sample_random(o, budgets_for(g), &store);
  if (!g.store.empty()) store.save(g.store);
  json j = {{"rank", rank},
            {"mode", g.mode},
            {"characteristic", g.characteristic},
            {"count", count},
            {"seed", g.seed},
            {"entry_bound", bound},
            {"distribution", s.distribution},
            {"resolved", s.resolved},
            {"exhausted", s.exhausted},
            {"with_cycles", s.with_cycles},
            {"anomalies", s.anomalies},
            {"cycles", s.cycles},
            {"vertex_count", s.vertex_count},
            {"unresolved", s.unresolved}};
  std::ostringstream text;
  text << "sample of " << count << " (rank " << rank << ", " << g.mode << ", p=" << g.characteristic << ", seed "
       << g.seed << ")\ndistribution: " << s.distribution << "\nresolved " << s.resolved << "\nexhausted "
       << s.exhausted << "\nwith cycles " << s.with_cycles << "\nanomalies " << s.anomalies << "\ncycles "
       << s.cycles << "\nvertices " << s.vertex_count << "\n";
  emit(g, j, text.str());
}

void cmd_export_dot(const Globals& g, const std::string& output) {
  std::string dot = export_dot(load_store(g));
  if (output.empty() || output == "-") {
    std::cout << dot;
  } else {
    std::ofstream f(output);
    f << dot;
    if (!f) throw std::runtime_error("cannot write " + output);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash blowups of toric varieties: blowup steps, resolution digraphs and cycles"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--char", g.characteristic, "Characteristic of the base field (0 or a prime)");
  app.add_option("--mode", g.mode, "Blowup mode")->check(CLI::IsMember({"nash", "normalized"}));
  app.add_option("--store", g.store, "Digraph store (JSON lines)");
  app.add_option("--max-vertices", g.max_vertices, "Vertex budget")->check(CLI::PositiveNumber);
  app.add_option("--max-seconds", g.max_seconds, "Time budget")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--side", g.side, "Input cone lies in M (dual cone) or N")->check(CLI::IsMember({"M", "N"}));
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string input = "-";
  auto with_input = [&](CLI::App* sub) { sub->add_option("input", input, "Matrix file, columns are generators ('-' for stdin)"); };

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of a cone");
  with_input(hilbert);
  auto* dual = app.add_subcommand("dual", "Rays of the dual cone");
  with_input(dual);
  auto* canon = app.add_subcommand("canon", "Canonical key of a cone (normalized) or semigroup (nash)");
  with_input(canon);
  auto* children = app.add_subcommand("children", "One blowup step");
  with_input(children);
  auto* subdivide = app.add_subcommand("subdivide", "Nash subdivision of a cone in N");
  with_input(subdivide);
  auto* explore = app.add_subcommand("explore", "Resolution subgraph from an input");
  with_input(explore);
  std::size_t max_report = 100;
  auto* cycles = app.add_subcommand("cycles", "Cycles in a stored digraph");
  cycles->add_option("--max-report", max_report, "Maximum number of cycles reported");
  auto* analyze_cmd = app.add_subcommand("analyze", "Singularity invariants of a cone");
  with_input(analyze_cmd);
  std::size_t reeves_n = 3;
  std::int64_t reeves_j = 1;
  auto* reeves = app.add_subcommand("reeves", "Generators of the Reeves cone");
  reeves->add_option("n", reeves_n, "Rank")->required();
  reeves->add_option("j", reeves_j, "Last entry")->required();
  std::size_t sample_rank = 2, sample_count = 10;
  std::int64_t sample_bound = 10;
  auto* sample = app.add_subcommand("sample", "Resolve random cones or semigroups");
  sample->add_option("--rank", sample_rank, "Rank (2 to 5)");
  sample->add_option("--count", sample_count, "Number of inputs");
  sample->add_option("--bound", sample_bound, "Entry bound");
  std::string dot_output;
  auto* dot = app.add_subcommand("export-dot", "Graphviz export of a stored digraph");
  dot->add_option("-o,--output", dot_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Characteristic(g.characteristic);
    if (*hilbert) cmd_hilbert(g, input);
    if (*dual) cmd_dual(g, input);
    if (*canon) cmd_canon(g, input);
    if (*children) cmd_children(g, input);
    if (*subdivide) cmd_subdivide(g, input);
    if (*explore) cmd_explore(g, input);
    if (*cycles) cmd_cycles(g, max_report);
    if (*analyze_cmd) cmd_analyze(g, input);
    if (*reeves) cmd_reeves(g, reeves_n, reeves_j);
    if (*sample) cmd_sample(g, sample_rank, sample_count, sample_bound);
    if (*dot) cmd_export_dot(g, dot_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
