// sparing: generate product graphs, compute exact sparing numbers, run the
// family labelings, and compare closed-form claims against the exact oracle.
//
// Exit codes: 0 ran to completion, 1 usage or parse error, 2 resource limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sparing/sparing.hpp"

namespace {

using namespace sparing;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kLimit = 2;

struct FamilyFlags {
  std::string family;
  std::optional<std::int64_t> m, n, m1, m2, rows, cols, path_edges;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family, "Family name")->required();
    cmd->add_option("--m", m);
    cmd->add_option("--n", n);
    cmd->add_option("--m1", m1);
    cmd->add_option("--m2", m2);
    cmd->add_option("--rows", rows);
    cmd->add_option("--cols", cols);
    cmd->add_option("--path-edges", path_edges, "Path edges (prism: n, complete_x_path: m)");
  }

  FamilyInstance instance() const {
    const auto f = parse_family(family);
    std::map<std::string, std::int64_t> params;
    auto put = [&](const char* name, const std::optional<std::int64_t>& v) {
      if (v) params[name] = *v;
    };
    put("m", m);
    put("n", n);
    put("m1", m1);
    put("m2", m2);
    put("rows", rows);
    put("cols", cols);
    if (path_edges) {
      if (f == Family::prism) params["n"] = *path_edges;
      else if (f == Family::complete_x_path) params["m"] = *path_edges;
      else throw std::invalid_argument("--path-edges applies to prism and complete_x_path only");
    }
    // Drop flags the family does not use, so shared scripts can pass extras.
    const auto wanted = family_params(f);
    std::map<std::string, std::int64_t> used;
    for (const auto& name : wanted) {
      auto it = params.find(name);
      if (it == params.end())
        throw std::invalid_argument(std::string(family_name(f)) + " needs --" + name);
      used[name] = it->second;
    }
    return FamilyInstance(f, std::move(used));
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::automatic;
  if (s == "exhaustive") return Engine::exhaustive;
  if (s == "bnb") return Engine::branch_and_bound;
  throw std::invalid_argument("unknown engine '" + s + "'");
}

std::vector<Family> parse_families(const std::string& list) {
  if (list == "all") return {kAllFamilies.begin(), kAllFamilies.end()};
  std::vector<Family> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(parse_family(item));
  if (out.empty()) throw std::invalid_argument("no families given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparing numbers of graphs under weak integer additive set-indexers"};
  app.require_subcommand(1);

  FamilyFlags gen_flags;
  std::string gen_out, gen_dot;
  auto* gen = app.add_subcommand("gen", "Write the graph of a family instance as JSON");
  gen_flags.add_to(gen);
  gen->add_option("--out", gen_out, "Output path (default stdout)");
  gen->add_option("--dot", gen_dot, "Also write DOT to this path");

  std::string phi_file, phi_engine = "auto";
  auto* phi = app.add_subcommand("phi", "Exact sparing number of a graph JSON file");
  phi->add_option("graph", phi_file, "Graph JSON file")->required();
  phi->add_option("--engine", phi_engine, "auto, exhaustive or bnb");

  std::string cmp_families = "all", cmp_format = "csv", cmp_out, cmp_engine = "auto";
  std::size_t cmp_max_vertices = 64;
  unsigned cmp_jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* cmp = app.add_subcommand("compare", "Compare claimed formulas, labelings and the oracle");
  cmp->add_option("--families", cmp_families, "Comma-separated families, or 'all'");
  cmp->add_option("--max-vertices", cmp_max_vertices, "Oracle cutoff (at most 64)");
  cmp->add_option("--format", cmp_format, "csv, json or markdown");
  cmp->add_option("--out", cmp_out, "Output path (default stdout)");
  cmp->add_option("--engine", cmp_engine, "auto, exhaustive or bnb");
  cmp->add_option("--jobs", cmp_jobs, "Worker threads");

  FamilyFlags label_flags;
  std::string label_out, label_format = "dot";
  auto* label = app.add_subcommand("label", "Run a family labeling and export it");
  label_flags.add_to(label);
  label->add_option("--format", label_format, "dot or json");
  label->add_option("--out", label_out, "Output path (default stdout)");

  std::string cat_families = "all", cat_out;
  auto* catalog = app.add_subcommand("catalog", "Dump the formula table as CSV");
  catalog->add_option("--families", cat_families, "Comma-separated families, or 'all'");
  catalog->add_option("--out", cat_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      const auto g = build_graph(gen_flags.instance());
      emit(graph_to_json_string(g) + (gen_out.empty() ? "\n" : ""), gen_out);
      if (!gen_dot.empty()) emit(to_dot(g), gen_dot);
    } else if (*phi) {
      const auto g = graph_from_json_string(read_file(phi_file));
      const auto result =
          sparing_number_exact(g, {parse_engine(phi_engine), node_budget_from_env()});
      std::cout << solve_report_json(result).dump() << "\n";
    } else if (*cmp) {
      if (cmp_max_vertices > kBranchAndBoundLimit)
        throw std::invalid_argument("--max-vertices must be at most 64");
      CompareOptions options{cmp_max_vertices, node_budget_from_env(), parse_engine(cmp_engine)};
      const auto format = parse_report_format(cmp_format);
      const auto rows =
          compare_all(default_instances(parse_families(cmp_families)), options, cmp_jobs);
      emit(render_report(rows, format), cmp_out);
    } else if (*label) {
      const auto outcome = construct(label_flags.instance());
      if (label_format == "dot") emit(to_dot(outcome.labeling), label_out);
      else if (label_format == "json") emit(outcome_json(outcome).dump() + "\n", label_out);
      else throw std::invalid_argument("unknown format '" + label_format + "'");
    } else if (*catalog) {
      emit(render_catalog_csv(default_instances(parse_families(cat_families))), cat_out);
    }
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const NodeBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise " << kNodeBudgetEnv << ")\n";
    return kLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
