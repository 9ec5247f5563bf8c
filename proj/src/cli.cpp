#include "chordless/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordless/audit.hpp"
#include "chordless/edge_list.hpp"
#include "chordless/generators.hpp"
#include "chordless/strong_coloring.hpp"
#include "chordless/structure.hpp"

namespace chordless::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string output;
  std::string coloring;
  std::string format = "text";
  std::string family;
  std::string base_family = "random-graph";
  int n = -1;
  int delta = -1;
  int ears = -1;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::size_t oracle_cap = kDefaultOracleEdgeCap;
  AuditConfig audit;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::uint64_t budget_of(const RunConfig& cfg) {
  if (cfg.budget) {
    if (*cfg.budget == 0) throw UsageError("--budget-nodes must be positive");
    return *cfg.budget;
  }
  if (const char* env = std::getenv(kBudgetEnv); env != nullptr && *env != '\0') {
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      throw UsageError(std::string(kBudgetEnv) + " must be a positive integer");
    }
    return value;
  }
  return kDefaultSearchNodes;
}

Family family_or_throw(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family: " + name);
  return *f;
}

GeneratorSpec spec_for(Family family, const RunConfig& cfg) {
  GeneratorSpec spec;
  spec.family = family;
  spec.seed = cfg.seed;
  spec.p = cfg.p;
  if (family == Family::kTightness) {
    if (cfg.delta < 0) throw UsageError("family tightness needs --delta");
    spec.delta = cfg.delta;
    return spec;
  }
  if (family == Family::kFullSubdivision) {
    const Family base = family_or_throw(cfg.base_family);
    if (base == Family::kFullSubdivision) throw UsageError("--base cannot be full-subdivision");
    spec.base = std::make_shared<const Graph>(generate(spec_for(base, cfg)));
    return spec;
  }
  if (cfg.n < 0) throw UsageError("family " + std::string(family_name(family)) + " needs --n");
  spec.n = cfg.n;
  spec.ears = cfg.ears >= 0 ? cfg.ears : cfg.n / 3;
  return spec;
}

Graph load_graph(const RunConfig& cfg) {
  if (!cfg.input.empty() && !cfg.family.empty()) throw UsageError("give either --input or --family, not both");
  if (!cfg.input.empty()) return load_edge_list(read_file(cfg.input)).graph;
  if (!cfg.family.empty()) return generate(spec_for(family_or_throw(cfg.family), cfg));
  throw UsageError("no input: give --input FILE or --family NAME");
}

std::string edge_text(const Graph& g, Edge e) { return g.label(e.u) + " " + g.label(e.v); }

std::string cycle_text(const Graph& g, const std::vector<Vertex>& cycle) {
  std::string s;
  for (Vertex v : cycle) s += (s.empty() ? "" : " ") + g.label(v);
  return s;
}

json witness_json(const ChordWitness& w) {
  json cycle = json::array();
  for (Vertex v : w.cycle) cycle.push_back(v);
  return {{"chord", {w.chord.u, w.chord.v}}, {"cycle", std::move(cycle)}};
}

// Writes the JSON report to --output when given and the selected rendering to out.
void emit(const RunConfig& cfg, std::ostream& out, const json& report, const std::string& text) {
  if (!cfg.output.empty()) write_file(cfg.output, report.dump(2) + "\n");
  if (cfg.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_recognize(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const ChordlessReport r = is_chordless(g);
  const BlockDecomposition d = blocks(g);
  std::vector<int> comp;
  const int components = connected_components(g, comp);
  std::size_t largest = 0;
  for (const Block& b : d.blocks) largest = std::max(largest, b.vertices.size());
  const bool minimal = is_minimally_2connected(g);
  const int delta = max_degree(g);

  json j;
  j["chordless"] = r.chordless;
  j["delta"] = delta;
  j["vertices"] = g.order();
  j["edges"] = g.size();
  j["components"] = components;
  j["blocks"] = d.blocks.size();
  j["cutvertices"] = d.cutvertices.size();
  j["leafblocks"] = is_connected(g) && !is_two_connected(g) ? json(leafblocks(d).size()) : json(nullptr);
  j["largest_block"] = largest;
  j["two_connected"] = is_two_connected(g);
  j["minimally_2_connected"] = minimal;
  j["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);

  std::ostringstream t;
  t << "chordless: " << (r.chordless ? "true" : "false") << ", \xCE\x94=" << delta
    << ", minimally-2-connected: " << (minimal ? "true" : "false") << "\n";
  t << "vertices: " << g.order() << ", edges: " << g.size() << ", components: " << components << "\n";
  t << "blocks: " << d.blocks.size() << ", cutvertices: " << d.cutvertices.size()
    << ", largest block: " << largest << " vertices\n";
  if (r.witness) {
    t << "chord: " << edge_text(g, r.witness->chord) << "\n";
    t << "cycle: " << cycle_text(g, r.witness->cycle) << "\n";
  }
  emit(cfg, out, j, t.str());
  return r.chordless ? kOk : kFalse;
}

int cmd_color(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  StrongColoringReport report;
  if (g.size() > 0) {
    try {
      report = strong_color_chordless(g, budget_of(cfg));
    } catch (const NotChordless& ex) {
      json j;
      j["refused"] = "graph is not chordless";
      j["witness"] = witness_json(ex.witness());
      std::ostringstream t;
      t << "refused: graph is not chordless\n";
      t << "chord: " << edge_text(g, ex.witness().chord) << "\n";
      t << "cycle: " << cycle_text(g, ex.witness().cycle) << "\n";
      if (cfg.format == "json") {
        out << j.dump(2) << "\n";
      } else {
        out << t.str();
      }
      return kRefused;
    }
  }
  const bool valid = !verify_strong(g, report.coloring);
  json j = to_json(g, report);
  if (!cfg.output.empty()) write_file(cfg.output, j.dump(2) + "\n");
  j["valid"] = valid;

  std::ostringstream t;
  t << "colors used: " << report.coloring.colors_used << "\n";
  t << "3\xCE\x94 bound: " << 3 * report.delta << " (claimed " << report.bound_claimed << ")\n";
  t << "edge-coloring path: " << strong_path_name(report.path) << "\n";
  t << "valid: " << (valid ? "true" : "false") << "\n";
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << t.str();
  }
  return valid ? kOk : kFalse;
}

struct ColoringFile {
  StrongEdgeColoring coloring;
  std::optional<std::size_t> missing;
};

ColoringFile load_coloring(const Graph& g, const std::string& text) {
  ColoringFile f;
  f.coloring.color.assign(g.size(), 0);
  auto assign = [&](Vertex u, Vertex v, long long c, std::size_t line) {
    if (!g.contains(u) || !g.contains(v) || u == v) throw ParseError(line, "unknown edge");
    const auto id = g.edge_id(u, v);
    if (!id) throw ParseError(line, "not an edge of the graph: " + g.label(u) + " " + g.label(v));
    if (c <= 0) throw ParseError(line, "colours must be positive");
    f.coloring.color[*id] = static_cast<int>(c);
  };
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& ex) {
      throw ParseError(0, ex.what());
    }
    if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError(0, "missing \"edges\" array");
    std::size_t row = 0;
    for (const auto& e : j["edges"]) {
      ++row;
      if (!e.is_array() || e.size() < 3 || !e.front().is_number_integer() || !e[1].is_number_integer() ||
          !e.back().is_number_integer()) {
        throw ParseError(row, "edge entry must be [u, v, ..., colour]");
      }
      assign(e[0].get<Vertex>(), e[1].get<Vertex>(), e.back().get<long long>(), row);
    }
  } else {
    std::map<std::string, Vertex> ids;
    for (std::size_t v = 0; v < g.order(); ++v) ids.emplace(g.label(static_cast<Vertex>(v)), static_cast<Vertex>(v));
    std::istringstream in(text);
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
      std::istringstream fields(line);
      std::string a;
      std::string b;
      std::string c;
      if (!(fields >> a) || a.front() == '#') continue;
      std::string extra;
      if (!(fields >> b >> c) || (fields >> extra)) throw ParseError(no, "expected: u v colour");
      const auto ia = ids.find(a);
      const auto ib = ids.find(b);
      if (ia == ids.end() || ib == ids.end()) throw ParseError(no, "unknown vertex");
      long long colour = 0;
      const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), colour);
      if (ec != std::errc() || ptr != c.data() + c.size()) throw ParseError(no, "bad colour: " + c);
      assign(ia->second, ib->second, colour, no);
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (f.coloring.color[i] == 0) {
      f.missing = i;
      break;
    }
  }
  f.coloring.colors_used = distinct_colors(f.coloring.color);
  return f;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.coloring.empty()) throw UsageError("verify needs --coloring FILE");
  const Graph g = load_graph(cfg);
  const ColoringFile f = load_coloring(g, read_file(cfg.coloring));
  json j;
  std::ostringstream t;
  if (f.missing) {
    const Edge e = g.edges()[*f.missing];
    j["valid"] = false;
    j["coverage_gap"] = {e.u, e.v};
    t << "coverage gap: edge " << edge_text(g, e) << " has no colour\n";
    emit(cfg, out, j, t.str());
    return kCoverage;
  }
  const auto violation = verify_strong(g, f.coloring);
  j["valid"] = !violation.has_value();
  j["colors_used"] = f.coloring.colors_used;
  if (violation) {
    const Edge a = g.edges()[violation->first];
    const Edge b = g.edges()[violation->second];
    json v;
    v["first"] = {a.u, a.v};
    v["second"] = {b.u, b.v};
    v["color"] = f.coloring.color[violation->first];
    v["reason"] = violation->reason == Violation::Reason::kSharedEndpoint ? "shared-endpoint" : "linking-edge";
    v["link"] = violation->link ? json{violation->link->u, violation->link->v} : json(nullptr);
    j["violation"] = std::move(v);
    t << "violation: edges " << edge_text(g, a) << " and " << edge_text(g, b) << " share colour "
      << f.coloring.color[violation->first];
    if (violation->link) {
      t << ", joined by " << edge_text(g, *violation->link) << "\n";
    } else {
      t << ", shared endpoint\n";
    }
  } else {
    t << "valid: true, colors used: " << f.coloring.colors_used << "\n";
  }
  emit(cfg, out, j, t.str());
  return violation ? kFalse : kOk;
}

std::string_view status_name(OracleResult::Status s) {
  switch (s) {
    case OracleResult::Status::kExact:
      return "exact";
    case OracleResult::Status::kBudgetExceeded:
      return "budget-exceeded";
    case OracleResult::Status::kCapExceeded:
      return "cap-exceeded";
  }
  return "unknown";
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  if (cfg.oracle_cap == 0) throw UsageError("--oracle-cap must be positive");
  const Graph g = load_graph(cfg);
  const OracleResult r = exact_chi_s(g, budget_of(cfg), cfg.oracle_cap);
  const auto value = r.value();
  json j;
  j["status"] = status_name(r.status);
  j["value"] = value ? json(*value) : json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["nodes"] = r.nodes;
  json coloring = nullptr;
  if (value && r.coloring) {
    coloring = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      coloring.push_back({g.edges()[i].u, g.edges()[i].v, r.coloring->color[i]});
    }
  }
  j["coloring"] = std::move(coloring);

  std::ostringstream t;
  if (value) {
    t << "strong chromatic index: " << *value << "\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
      t << edge_text(g, g.edges()[i]) << " " << r.coloring->color[i] << "\n";
    }
  } else {
    t << status_name(r.status) << ": " << r.lower_bound << " <= strong chromatic index <= " << r.upper_bound << "\n";
  }
  emit(cfg, out, j, t.str());
  return value ? kOk : kRefused;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  AuditConfig config = cfg.audit;
  config.seed = cfg.seed;
  config.coloring.budget = budget_of(cfg);
  if (config.min_base < 2 || config.max_base < config.min_base) throw UsageError("need 2 <= --min-base <= --max-base");
  const AuditReport report = run_audit(config);
  const json j = report.to_json();
  std::ostringstream t;
  for (const auto& [name, c] : report.log.checks()) {
    t << (c.passed() ? "PASS " : "FAIL ") << name << " (" << c.instances << " instances, " << c.failures
      << " failures)\n";
  }
  t << "graphs: " << report.graphs << ", pairs: " << report.pairs << ", mutants: " << report.mutants << "\n";
  t << (report.passed() ? "audit passed" : "audit failed") << "\n";
  emit(cfg, out, j, t.str());
  return report.passed() ? kOk : kFalse;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty()) throw UsageError("generate needs --family");
  if (!cfg.input.empty()) throw UsageError("generate takes no --input");
  const Graph g = load_graph(cfg);
  const std::string text = cfg.format == "json" ? to_json(g).dump(2) + "\n" : to_edge_list(g);
  if (!cfg.output.empty()) {
    write_file(cfg.output, text);
  } else {
    out << text;
  }
  return kOk;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "Edge-list file");
  sub->add_option("--family", cfg.family, "Generator family instead of --input");
  sub->add_option("--n", cfg.n, "Generator size parameter")->check(CLI::NonNegativeNumber);
  sub->add_option("--delta", cfg.delta, "Generator maximum degree (tightness)")->check(CLI::NonNegativeNumber);
  sub->add_option("--p", cfg.p, "Edge probability (random-graph)")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--ears", cfg.ears, "Ear count (ear-tree); default n/3")->check(CLI::NonNegativeNumber);
  sub->add_option("--base", cfg.base_family, "Base family for full-subdivision");
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--budget-nodes", cfg.budget, "Search-node budget");
  sub->add_option("--oracle-cap", cfg.oracle_cap, "Largest edge count the oracle accepts");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--output", cfg.output, "Output file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app("Chordless graph recognition and strong edge colouring", "chordless");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto* recognize = app.add_subcommand("recognize", "Decide whether a graph is chordless");
  auto* color = app.add_subcommand("color", "Strong edge colouring of a chordless graph");
  auto* verify = app.add_subcommand("verify", "Check a colouring file against a graph");
  auto* oracle = app.add_subcommand("oracle", "Exact strong chromatic index of a small graph");
  auto* audit = app.add_subcommand("audit", "Run the property audit over a seeded corpus");
  auto* gen = app.add_subcommand("generate", "Write a generated graph as an edge list");
  for (auto* sub : {recognize, color, verify, oracle, gen}) add_input_options(sub, cfg);
  for (auto* sub : {recognize, color, verify, oracle, audit, gen}) add_common_options(sub, cfg);
  verify->add_option("--coloring", cfg.coloring, "Colouring file (JSON from color, or 'u v colour' lines)");
  audit->add_option("--count", cfg.audit.count, "Corpus size");
  audit->add_option("--mutants", cfg.audit.mutants, "Planted chord mutants");
  audit->add_option("--min-base", cfg.audit.min_base, "Smallest base graph order");
  audit->add_option("--max-base", cfg.audit.max_base, "Largest base graph order");
  audit->add_option("--random-matchings", cfg.audit.random_matchings, "Random matchings per graph");
  cfg.seed = 0;
  audit->callback([&] {
    if (audit->count("--seed") == 0) cfg.seed = 7;
  });

  std::vector<const char*> argv{"chordless"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*recognize) return cmd_recognize(cfg, out);
    if (*color) return cmd_color(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*oracle) return cmd_oracle(cfg, out);
    if (*audit) return cmd_audit(cfg, out);
    if (*gen) return cmd_generate(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace chordless::cli
