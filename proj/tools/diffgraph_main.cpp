#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <diffgraph/diffgraph.hpp>

using namespace diffgraph;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

GraphDocument load_document(const std::string& path) {
  return parse_graph_document(read_file(path));
}

int fail(const std::string& type, const std::string& message, int code) {
  ordered_json j;
  j["error"]["type"] = type;
  j["error"]["message"] = message;
  std::cerr << j.dump() << "\n";
  return code;
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// Search statistics go to stderr so stdout stays a single JSON document.
void report_progress(std::uint64_t total, double seconds) {
  ordered_json j;
  j["progress"]["total_enumerated"] = total;
  j["progress"]["elapsed_seconds"] = seconds;
  j["progress"]["candidates_per_second"] =
      seconds > 0 ? (double)total / seconds : 0.0;
  std::cerr << j.dump() << "\n";
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

ordered_json prune_counts_json(const PruneCounts& p) {
  ordered_json j;
  j["primitive"] = p.primitive;
  j["min_max_form"] = p.min_max_form;
  j["edge_count"] = p.edge_count;
  j["degree_sequence"] = p.degree_sequence;
  j["total"] = p.total();
  return j;
}

ordered_json witness_json(const Graph& target, const Witness& w) {
  ordered_json j;
  j["signature"] = w.signature.values();
  ordered_json labels = ordered_json::object();
  for (int v = 0; v < target.order(); ++v) labels[target.vertex_name(v)] = w.labels[v];
  j["labels"] = std::move(labels);
  return j;
}

ordered_json search_report_json(const Graph& target, const SearchReport& report) {
  ordered_json j;
  j["exhausted"] = report.exhausted;
  j["total_enumerated"] = report.total_enumerated;
  j["candidates_examined"] = report.candidates_examined;
  j["pruned"] = prune_counts_json(report.pruned);
  j["witnesses"] = ordered_json::array();
  for (const auto& w : report.witnesses) j["witnesses"].push_back(witness_json(target, w));
  return j;
}

// ---- verify ----

int run_verify(const std::string& input, bool diagnostics) {
  GraphDocument doc = load_document(input);
  LabeledGraph lg = doc.to_labeled_graph();
  VerificationReport report = verify(lg);

  ordered_json out;
  out["command"] = "verify";
  out["input"] = input;
  if (!doc.name.empty()) out["name"] = doc.name;
  out["order"] = lg.graph.order();
  out["edge_count"] = lg.graph.edge_count();
  out["valid"] = report.valid;
  out["signature"] = report.signature.values();
  out["violations"] = ordered_json::array();
  for (const auto& violation : report.violations) {
    ordered_json v;
    v["kind"] = violation.kind == ViolationKind::missing_edge ? "missing-edge" : "extra-edge";
    v["u"] = lg.graph.vertex_name(violation.u);
    v["v"] = lg.graph.vertex_name(violation.v);
    v["difference"] = violation.difference;
    out["violations"].push_back(std::move(v));
  }

  if (diagnostics && report.valid) {
    out["edge_classes"] = ordered_json::array();
    for (const auto& edge : classify_edges(lg)) {
      ordered_json e;
      e["u"] = lg.graph.vertex_name(edge.u);
      e["v"] = lg.graph.vertex_name(edge.v);
      e["smaller"] = edge.smaller;
      e["larger"] = edge.larger;
      e["type"] = edge.type == EdgeType::first_type ? "first-type" : "second-type";
      e["witness_r"] = edge.witness_r;
      e["witness_t"] = edge.witness_t;
      out["edge_classes"].push_back(std::move(e));
    }
    FormDiagnostics d = label_form_diagnostics(lg);
    ordered_json dj;
    dj["members"] = ordered_json::array();
    for (const auto& m : d.members) {
      ordered_json mj;
      mj["value"] = m.value;
      mj["double_of_member"] = m.double_of_member;
      mj["half_of_member"] = m.half_of_member;
      mj["sum_of_members"] = m.sum_of_members;
      mj["difference_of_members"] = m.difference_of_members;
      dj["members"].push_back(std::move(mj));
    }
    dj["min_form_ok"] = d.min_form_ok;
    dj["max_form_ok"] = d.max_form_ok;
    dj["every_member_has_form"] = d.every_member_has_form;
    dj["max_vertex"] = lg.graph.vertex_name(d.max_vertex);
    dj["max_degree"] = d.max_degree;
    dj["max_has_half_neighbor"] = d.max_has_half_neighbor;
    dj["parity_consistent"] = d.parity_consistent;
    out["diagnostics"] = std::move(dj);
  }

  print(out);
  return report.valid ? 0 : 1;
}

// ---- family ----

struct FamilyArgs {
  std::string name;
  std::map<std::string, std::uint64_t> params;  // only flags the user passed
};

LabeledGraph build_family(const FamilyArgs& args) {
  return make_family({family_from_name(args.name), args.params});
}

// Registers --a/--n/--m/--t/--k/--variant on `cmd`, recording into `args`
// only the ones actually given.
void add_family_params(CLI::App* cmd, FamilyArgs& args) {
  for (const char* key : {"a", "n", "m", "t", "k"}) {
    std::string name = std::string("--") + key;
    cmd->add_option_function<std::uint64_t>(
        name, [&args, key](std::uint64_t value) { args.params[key] = value; },
        std::string("family parameter ") + key);
  }
  cmd->add_option_function<std::string>(
      "--variant",
      [&args](std::string value) {
        if (value == "A" || value == "a") args.params["variant"] = 0;
        else if (value == "B" || value == "b") args.params["variant"] = 1;
        else throw CLI::ValidationError("--variant", "must be A or B");
      },
      "star labeling variant (A or B)");
}

int run_family(const FamilyArgs& args, bool check, const std::string& out_path,
               const std::string& format) {
  LabeledGraph lg = build_family(args);
  if (check && !verify_valid(lg))
    return fail("predicate", "family '" + args.name + "' labeling failed verification", 1);
  std::string text = format == "dot"
                         ? emit_dot(lg)
                         : emit_graph_json(GraphDocument::from_labeled_graph(lg, args.name));
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

// ---- search ----

int run_search(const std::string& input, const FamilyArgs& family_args, Label max_label,
               bool first, bool primitive_only, int jobs) {
  if (input.empty() == family_args.name.empty())
    throw std::invalid_argument("search needs exactly one of --input or --family");

  Graph target(0);
  std::string target_name;
  if (!input.empty()) {
    GraphDocument doc = load_document(input);
    target = doc.to_graph();  // only the shape matters; labels are ignored
    target_name = doc.name;
  } else {
    target = build_family(family_args).graph;
    target_name = family_args.name;
  }

  SearchConfig cfg;
  cfg.max_label = max_label;
  cfg.mode = first ? SearchMode::first : SearchMode::all;
  cfg.primitive_only = primitive_only;
  cfg.jobs = jobs;

  Stopwatch timer;
  SearchReport report = find_signatures(target, cfg);
  double seconds = timer.seconds();

  ordered_json out;
  out["command"] = "search";
  if (!target_name.empty()) out["target"] = target_name;
  out["order"] = target.order();
  out["edge_count"] = target.edge_count();
  out["max_label"] = max_label;
  out["mode"] = first ? "first" : "all";
  out["primitive_only"] = primitive_only;
  out["jobs"] = jobs;
  ordered_json stats = search_report_json(target, report);
  for (auto& [key, value] : stats.items()) out[key] = std::move(value);
  print(out);
  report_progress(report.total_enumerated, seconds);
  return 0;
}

// ---- prove-absent ----

int run_prove_absent(const std::string& input, Label max_label, int jobs) {
  GraphDocument doc = load_document(input);
  Graph target = doc.to_graph();

  Stopwatch timer;
  SearchReport report = prove_absent_up_to(target, max_label, jobs);
  double seconds = timer.seconds();
  bool absent = report.exhausted && report.witnesses.empty();

  ordered_json out;
  out["command"] = "prove-absent";
  out["input"] = input;
  if (!doc.name.empty()) out["name"] = doc.name;
  out["order"] = target.order();
  out["edge_count"] = target.edge_count();
  out["max_label"] = max_label;
  out["jobs"] = jobs;
  out["absent"] = absent;
  ordered_json stats = search_report_json(target, report);
  for (auto& [key, value] : stats.items()) out[key] = std::move(value);
  print(out);
  report_progress(report.total_enumerated, seconds);
  return absent ? 0 : 1;
}

// ---- enumerate ----

int run_enumerate(int order, Label max_label, const std::string& out_path, int jobs) {
  Stopwatch timer;
  std::vector<CatalogEntry> entries = enumerate_difference_graphs(order, max_label, jobs);
  double seconds = timer.seconds();
  write_file(out_path, catalog_to_json_lines(entries));

  ordered_json out;
  out["command"] = "enumerate";
  out["order"] = order;
  out["max_label"] = max_label;
  out["jobs"] = jobs;
  out["classes"] = entries.size();
  out["out"] = out_path;
  print(out);
  report_progress(entries.size(), seconds);
  return 0;
}

// ---- check-k3 ----

int run_check_k3(Label max_label, int jobs) {
  Stopwatch timer;
  K3UniquenessReport report = check_k3_uniqueness(max_label, jobs);
  double seconds = timer.seconds();

  ordered_json out;
  out["command"] = "check-k3";
  out["max_label"] = max_label;
  out["jobs"] = jobs;
  out["unique_form"] = report.unique_form;
  out["witnesses"] = ordered_json::array();
  for (const auto& w : report.witnesses) out["witnesses"].push_back(w.signature.values());
  out["offenders"] = ordered_json::array();
  for (const auto& s : report.offenders) out["offenders"].push_back(s.values());
  print(out);
  report_progress(report.witnesses.size(), seconds);
  return report.unique_form ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"difference-graph labeling toolkit"};
  app.require_subcommand(1);

  // verify
  std::string verify_input;
  bool verify_diagnostics = false;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check a labeled graph document against the difference condition");
  verify_cmd->add_option("--input", verify_input, "labeled graph document")->required();
  verify_cmd->add_flag("--diagnostics", verify_diagnostics,
                       "also print edge classes and label-form diagnostics");

  // family
  FamilyArgs family_args;
  bool family_check = false;
  std::string family_out;
  std::string family_format = "json";
  CLI::App* family_cmd =
      app.add_subcommand("family", "construct a labeled graph from a named family");
  family_cmd->add_option("--name", family_args.name, "family name")->required();
  add_family_params(family_cmd, family_args);
  family_cmd->add_flag("--check", family_check, "verify the construction and fail if invalid");
  family_cmd->add_option("--out", family_out, "write to this file instead of stdout");
  family_cmd->add_option("--format", family_format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));

  // search
  std::string search_input;
  FamilyArgs search_family;
  Label search_max_label = 0;
  bool search_first = false;
  bool search_all = false;
  bool search_primitive = false;
  int search_jobs = 1;
  CLI::App* search_cmd =
      app.add_subcommand("search", "find signatures whose induced graph matches a target");
  search_cmd->add_option("--input", search_input, "target graph document");
  search_cmd->add_option("--family", search_family.name, "target family name");
  add_family_params(search_cmd, search_family);
  search_cmd->add_option("--max-label", search_max_label, "largest label to consider")
      ->required();
  CLI::Option* first_flag =
      search_cmd->add_flag("--first", search_first, "stop at the first witness");
  search_cmd->add_flag("--all", search_all, "collect every witness (default)")
      ->excludes(first_flag);
  search_cmd->add_flag("--primitive-only", search_primitive,
                       "only signatures with gcd 1");
  search_cmd->add_option("--jobs", search_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  // prove-absent
  std::string absent_input;
  Label absent_max_label = 0;
  int absent_jobs = 1;
  CLI::App* absent_cmd = app.add_subcommand(
      "prove-absent", "exhaust all signatures up to a bound and confirm none match");
  absent_cmd->add_option("--input", absent_input, "target graph document")->required();
  absent_cmd->add_option("--max-label", absent_max_label, "largest label to consider")
      ->required();
  absent_cmd->add_option("--jobs", absent_jobs, "worker threads")->check(CLI::PositiveNumber);

  // enumerate
  int enum_order = 0;
  Label enum_max_label = 0;
  std::string enum_out;
  int enum_jobs = 1;
  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "catalog all difference graphs of an order up to a label bound");
  enum_cmd->add_option("--order", enum_order, "number of vertices")->required();
  enum_cmd->add_option("--max-label", enum_max_label, "largest label to consider")->required();
  enum_cmd->add_option("--out", enum_out, "catalog output file (one JSON record per line)")
      ->required();
  enum_cmd->add_option("--jobs", enum_jobs, "worker threads")->check(CLI::PositiveNumber);

  // check-k3
  Label k3_max_label = 0;
  int k3_jobs = 1;
  CLI::App* k3_cmd = app.add_subcommand(
      "check-k3", "check that every triangle signature has the form {a, 2a, 3a}");
  k3_cmd->add_option("--max-label", k3_max_label, "largest label to consider")->required();
  k3_cmd->add_option("--jobs", k3_jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    return fail("usage", e.what(), 2);
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify_input, verify_diagnostics);
    if (family_cmd->parsed())
      return run_family(family_args, family_check, family_out, family_format);
    if (search_cmd->parsed())
      return run_search(search_input, search_family, search_max_label, search_first,
                        search_primitive, search_jobs);
    if (absent_cmd->parsed()) return run_prove_absent(absent_input, absent_max_label, absent_jobs);
    if (enum_cmd->parsed()) return run_enumerate(enum_order, enum_max_label, enum_out, enum_jobs);
    if (k3_cmd->parsed()) return run_check_k3(k3_max_label, k3_jobs);
    return fail("usage", "no subcommand given", 2);
  } catch (const ParseError& e) {
    return fail("parse", e.what(), 2);
  } catch (const InvalidLabelingError& e) {
    return fail("invalid-labeling", e.what(), 2);
  } catch (const UnsupportedOrderError& e) {
    return fail("unsupported-order", e.what(), 2);
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what(), 2);
  } catch (const OverflowError& e) {
    return fail("overflow", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("error", e.what(), 2);
  }
}
