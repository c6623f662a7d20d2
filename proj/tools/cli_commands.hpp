#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgeideal/edgeideal.hpp"

namespace edgeideal::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFail = 1,
  kParse = 2,
  kValidation = 3,
  kBudget = 4,
  kInconclusive = 5,
};

enum class Format { json, pretty };

struct CliConfig {
  FieldSpec field = FieldSpec::gf2();
  int max_vertices = 14;        // homology sweeps in props
  int betti_max_vertices = 16;
  std::uint64_t max_subsets = std::uint64_t{1} << 16;
  std::size_t memo_size = 1 << 16;
  int threads = 0;
  Format format = Format::json;
  std::uint64_t seed = 20240601;
};

/// Result of one command: text for stdout or stderr and the exit code.
/// Errors never carry partial stdout.
struct CommandResult {
  int code = kOk;
  std::string out;
  std::string err;
};

inline std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

inline json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string emit(const json& j) { return j.dump(2) + "\n"; }

inline std::string pretty_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " (" << g.labels()[v] << ")";
    out << ":";
    for (int w : g.adjacency()[v]) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

inline std::string cmd_construct(const std::string& kind, const std::string& spec_path, const CliConfig& cfg) {
  const json doc = parse_document(read_input(spec_path));
  Graph g;
  if (kind == "rooted-product") {
    g = rooted_product(rooted_family_from_json(doc));
  } else if (kind == "corona") {
    auto [base, rows] = corona_input_from_json(doc);
    g = corona(base, rows);
  } else if (kind == "multi-clique-corona") {
    g = multi_clique_corona(corona_spec_from_json(doc));
  } else if (kind == "multi-whisker") {
    auto [base, whiskers] = multi_whisker_input_from_json(doc);
    g = multi_whisker_graph(base, whiskers);
  } else if (kind == "transform") {
    g = multi_whisker_transform(corona_spec_from_json(doc));
  } else {
    throw ValidationError("construct: unknown kind '" + kind + "'");
  }
  return cfg.format == Format::json ? emit(to_json(g)) : pretty_graph(g);
}

inline json props_report(const Graph& g, const CliConfig& cfg, int vertex, int r) {
  const int n = g.vertex_count();
  require_bound(n <= cfg.max_vertices,
                "props: " + std::to_string(n) + " vertices exceeds bound " + std::to_string(cfg.max_vertices));
  set_decomposability_cache_capacity(cfg.memo_size);
  const CoverReport covers = cover_report(g);
  const SimplicialComplex delta = independence_complex(g);
  const ShedReport shed = shed_report(g);
  json j;
  j["n"] = n;
  j["edge_count"] = g.edge_count();
  j["field"] = cfg.field.name();
  j["alpha"] = covers.alpha;
  j["ht"] = covers.ht;
  j["bight"] = covers.bight;
  j["well_covered"] = covers.well_covered;
  j["pure"] = delta.is_pure();
  j["cm"] = is_cohen_macaulay(delta, cfg.field);
  j["serre_index"] = serre_index(delta, cfg.field);
  j["seq_cm"] = is_sequentially_cm(delta, cfg.field);
  j["vd"] = shed.vd;
  j["pure_vd"] = shed.pure_vd;
  j["Shed"] = shed.shedding.to_vector();
  j["U"] = two_pure_vertices(g).to_vector();
  j["m"] = matching_number(g);
  j["im"] = induced_matching_number(g);
  j["homology"] = to_json(reduced_homology(delta, cfg.field));
  if (vertex >= 0) {
    if (vertex >= n) throw ValidationError("props: vertex " + std::to_string(vertex) + " out of range");
    json v;
    v["vertex"] = vertex;
    v["two_pure"] = is_two_pure_at(g, vertex);
    v["two_cm"] = is_2cm_at(g, vertex, cfg.field);
    v["two_serre"] = is_2serre_at(g, vertex, r, cfg.field);
    v["r"] = r;
    j["at_vertex"] = v;
  }
  return j;
}

inline std::string pretty_props(const json& j) {
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << key << ":\n";
      for (const auto& [k2, v2] : value.items()) out << "  " << k2 << ": " << v2.dump() << '\n';
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
  return out.str();
}

inline std::string cmd_props(const std::string& graph_path, const CliConfig& cfg, int vertex, int r) {
  const Graph g = graph_from_json(parse_document(read_input(graph_path)));
  const json report = props_report(g, cfg, vertex, r);
  return cfg.format == Format::json ? emit(report) : pretty_props(report);
}

inline std::string cmd_betti(const std::string& graph_path, const CliConfig& cfg) {
  const Graph g = graph_from_json(parse_document(read_input(graph_path)));
  BettiOptions opts;
  opts.threads = cfg.threads;
  opts.max_vertices = cfg.betti_max_vertices;
  opts.max_subsets = cfg.max_subsets;
  const BettiTable t = betti_table(g, cfg.field, opts);
  return cfg.format == Format::json ? emit(to_json(t)) : t.pretty();
}

inline std::string cmd_census(int max_n, const std::vector<FieldSpec>& fields, const CliConfig& cfg) {
  if (max_n < 1) throw ValidationError("census: --max-n must be positive");
  CensusOptions opts;
  opts.threads = cfg.threads;
  opts.allow_order_seven = max_n >= 7;
  const auto rows = census(max_n, fields, opts);
  return cfg.format == Format::json ? census_jsonl(rows) : census_table(rows);
}

/// Returns the verify exit code through `code`.
inline std::string cmd_verify(const std::string& id, std::uint64_t budget, const CliConfig& cfg, int& code) {
  VerifyOptions opts;
  opts.budget = budget;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  const VerificationOutcome outcome = verify(id, opts);
  switch (outcome.status) {
    case VerifyStatus::pass: code = kOk; break;
    case VerifyStatus::fail: code = kVerifyFail; break;
    case VerifyStatus::inconclusive: code = kInconclusive; break;
  }
  if (cfg.format == Format::json) return emit(to_json(outcome));
  std::ostringstream out;
  out << outcome.theorem_id << ": " << to_string(outcome.status) << " (" << outcome.instances_checked << "/"
      << outcome.instances_total << " instances, " << outcome.wall_time << " s)\n";
  if (!outcome.note.empty()) out << "  " << outcome.note << '\n';
  for (const auto& c : outcome.counterexamples) out << "  counterexample: " << c.dump() << '\n';
  return out.str();
}

inline std::vector<FieldSpec> parse_field_list(const std::string& text) {
  std::vector<FieldSpec> fields;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) fields.push_back(FieldSpec::parse(item));
  if (fields.empty()) throw ValidationError("empty field list");
  return fields;
}

/// Parses arguments and runs one subcommand.
inline CommandResult run(int argc, const char* const* argv) {
  CommandResult result;
  CliConfig cfg;
  CLI::App app{"Edge ideals of rooted products and coronas"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string field_text = "gf2", format_text = "json";
  app.add_option("--field", field_text, "Coefficient field: gf2, gf:p or q");
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--max-vertices", cfg.max_vertices, "Vertex cap for homology sweeps")->check(CLI::PositiveNumber);
  app.add_option("--memo-size", cfg.memo_size, "Decomposability memo entries")->check(CLI::PositiveNumber);

  std::string kind, path;
  auto* construct = app.add_subcommand("construct", "Build a graph from a spec");
  construct->add_option("kind", kind, "rooted-product | corona | multi-clique-corona | multi-whisker | transform")
      ->required()
      ->check(CLI::IsMember({"rooted-product", "corona", "multi-clique-corona", "multi-whisker", "transform"}));
  construct->add_option("spec", path, "Spec JSON file, - for stdin")->required();

  int vertex = -1, r = 2;
  auto* props = app.add_subcommand("props", "Invariant report for a graph");
  props->add_option("graph", path, "Graph JSON file, - for stdin")->required();
  props->add_option("--vertex", vertex, "Report 2-properties at this vertex")->check(CLI::NonNegativeNumber);
  props->add_option("--r", r, "Serre level for --vertex")->check(CLI::Range(2, 64));

  auto* betti = app.add_subcommand("betti", "Graded Betti table of S/I(G)");
  betti->add_option("graph", path, "Graph JSON file, - for stdin")->required();
  betti->add_option("--budget-subsets", cfg.max_subsets, "Maximum number of vertex subsets")->check(CLI::PositiveNumber);
  betti->add_option("--max-n", cfg.betti_max_vertices, "Vertex cap")->check(CLI::PositiveNumber);

  int max_n = 6;
  std::string fields_text = "gf2,q";
  auto* census_cmd = app.add_subcommand("census", "Well-covered graphs on few vertices");
  census_cmd->add_option("--max-n", max_n, "Largest order");
  census_cmd->add_option("--fields", fields_text, "Comma-separated fields");

  std::string id;
  std::uint64_t budget = 1'000'000;
  bool list = false;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check of one claim");
  verify_cmd->add_option("id", id, "Verifier id");
  verify_cmd->add_option("--budget", budget, "Instance budget")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--list", list, "List verifier ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp& e) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.code = kParse;
    result.err = std::string(e.what()) + "\n";
    return result;
  }

  try {
    cfg.field = FieldSpec::parse(field_text);
    cfg.format = format_text == "pretty" ? Format::pretty : Format::json;
    if (*construct) {
      result.out = cmd_construct(kind, path, cfg);
    } else if (*props) {
      result.out = cmd_props(path, cfg, vertex, r);
    } else if (*betti) {
      result.out = cmd_betti(path, cfg);
    } else if (*census_cmd) {
      result.out = cmd_census(max_n, parse_field_list(fields_text), cfg);
    } else if (*verify_cmd) {
      if (list) {
        for (const auto& v : verifiers()) result.out += v.id + "\n";
      } else {
        if (id.empty()) throw ValidationError("verify: missing verifier id");
        result.out = cmd_verify(id, budget, cfg, result.code);
      }
    }
  } catch (const ParseError& e) {
    result = {kParse, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const BoundExceeded& e) {
    result = {kBudget, "", std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    result = {kValidation, "", std::string("invalid input: ") + e.what() + "\n"};
  } catch (const json::exception& e) {
    result = {kParse, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const std::out_of_range& e) {
    result = {kValidation, "", std::string("invalid input: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace edgeideal::cli
