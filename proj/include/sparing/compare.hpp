#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "sparing/constructions.hpp"
#include "sparing/formulas.hpp"
#include "sparing/oracle.hpp"

namespace sparing {

enum class Verdict {
  match,
  formula_low,
  formula_high,
  construction_suboptimal,
  ill_formed,
  unverified,
};

inline constexpr std::array kAllVerdicts{Verdict::match,
                                         Verdict::formula_low,
                                         Verdict::formula_high,
                                         Verdict::construction_suboptimal,
                                         Verdict::ill_formed,
                                         Verdict::unverified};

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::match: return "MATCH";
    case Verdict::formula_low: return "FORMULA_LOW";
    case Verdict::formula_high: return "FORMULA_HIGH";
    case Verdict::construction_suboptimal: return "CONSTRUCTION_SUBOPTIMAL";
    case Verdict::ill_formed: return "ILL_FORMED";
    case Verdict::unverified: return "UNVERIFIED";
  }
  return "UNVERIFIED";
}

struct ComparisonRow {
  explicit ComparisonRow(FamilyInstance inst) : instance(std::move(inst)) {}

  FamilyInstance instance;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<FormulaClaim> claims;  // as_stated first
  std::optional<std::size_t> achieved;
  std::optional<std::uint64_t> oracle;
  Verdict verdict = Verdict::unverified;
  std::optional<Verdict> proof_verdict;  // set when a proof_count claim exists
  std::string note;                      // why a number is missing, if one is
};

/// Judges a claim against the oracle; the construction only matters when the
/// claim is right.
inline Verdict judge(const FormulaClaim& claim, std::optional<std::size_t> achieved,
                     std::optional<std::uint64_t> oracle) {
  if (!oracle) return Verdict::unverified;
  if (claim.ill_formed()) return Verdict::ill_formed;
  const auto phi = static_cast<std::int64_t>(*oracle);
  const auto claimed = claim.claimed_phi();
  if (claimed < phi) return Verdict::formula_low;
  if (claimed > phi) return Verdict::formula_high;
  if (achieved && static_cast<std::int64_t>(*achieved) > phi)
    return Verdict::construction_suboptimal;
  return Verdict::match;
}

struct CompareOptions {
  std::size_t max_vertices = 64;
  std::uint64_t node_budget = kDefaultNodeBudget;
  Engine engine = Engine::automatic;
};

inline ComparisonRow compare(const FamilyInstance& inst, const CompareOptions& options = {}) {
  ComparisonRow row(inst);
  row.vertices = static_cast<std::size_t>(instance_vertex_count(inst));
  row.claims = all_claims(inst);
  const auto g = build_graph(inst);
  row.edges = g.edge_count();

  std::vector<std::string> notes;
  try {
    row.achieved = construct(inst).achieved_mono_edges;
  } catch (const std::exception& e) {
    notes.push_back(std::string("construction failed: ") + e.what());
  }

  if (row.vertices > options.max_vertices) {
    notes.push_back("above oracle cutoff " + std::to_string(options.max_vertices));
  } else {
    try {
      row.oracle = sparing_number_exact(g, {options.engine, options.node_budget}).phi;
    } catch (const InstanceTooLarge& e) {
      notes.push_back(e.what());
    } catch (const NodeBudgetExceeded& e) {
      notes.push_back(e.what());
    }
  }

  if (row.oracle && row.achieved && *row.achieved < *row.oracle)
    throw std::logic_error("construction beats the exact optimum at " + inst.params_string());

  row.verdict = judge(row.claims.front(), row.achieved, row.oracle);
  if (row.claims.size() > 1) row.proof_verdict = judge(row.claims[1], row.achieved, row.oracle);
  for (const auto& n : notes) row.note += (row.note.empty() ? "" : "; ") + n;
  return row;
}

/// One row per instance, solved on `jobs` threads; rows come back in
/// instance sort order regardless of completion order.
inline std::vector<ComparisonRow> compare_all(std::vector<FamilyInstance> instances,
                                              const CompareOptions& options = {},
                                              unsigned jobs = 1) {
  std::sort(instances.begin(), instances.end());
  instances.erase(std::unique(instances.begin(), instances.end()), instances.end());

  std::vector<std::optional<ComparisonRow>> slots(instances.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(instances.size());
  auto worker = [&] {
    for (auto i = next++; i < instances.size(); i = next++) {
      try {
        slots[i] = compare(instances[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<ComparisonRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

inline std::map<Verdict, std::size_t> summarize(const std::vector<ComparisonRow>& rows) {
  std::map<Verdict, std::size_t> counts;
  for (auto v : kAllVerdicts) counts[v] = 0;
  for (const auto& r : rows) ++counts[r.verdict];
  return counts;
}

enum class ReportFormat { csv, json, markdown };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::csv;
  if (s == "json") return ReportFormat::json;
  if (s == "markdown") return ReportFormat::markdown;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

namespace detail {

struct RowFields {
  std::string family, params, vertices, claimed, proof_claimed, achieved, oracle, verdict,
      proof_verdict;
};

inline RowFields fields(const ComparisonRow& r) {
  auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string("-"); };
  RowFields f;
  f.family = family_name(r.instance.family());
  f.params = r.instance.params_string();
  f.vertices = std::to_string(r.vertices);
  f.claimed = r.claims.front().claimed_string();
  f.proof_claimed = r.claims.size() > 1 ? r.claims[1].claimed_string() : "-";
  f.achieved = opt(r.achieved);
  f.oracle = opt(r.oracle);
  f.verdict = verdict_name(r.verdict);
  f.proof_verdict = r.proof_verdict ? std::string(verdict_name(*r.proof_verdict)) : "-";
  return f;
}

}  // namespace detail

/// CSV: header row, LF endings, one line per row, then a `#` summary line.
inline std::string render_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "family,params,vertices,claimed,proof_claimed,achieved,oracle,verdict,proof_verdict\n";
  for (const auto& r : rows) {
    const auto f = detail::fields(r);
    out << f.family << ',' << f.params << ',' << f.vertices << ',' << f.claimed << ','
        << f.proof_claimed << ',' << f.achieved << ',' << f.oracle << ',' << f.verdict << ','
        << f.proof_verdict << '\n';
  }
  out << "# summary";
  for (const auto& [v, n] : summarize(rows)) out << ' ' << verdict_name(v) << '=' << n;
  out << '\n';
  return out.str();
}

inline std::string render_markdown(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "| family | params | vertices | claimed | proof claimed | achieved | oracle | verdict | "
         "proof verdict |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    const auto f = detail::fields(r);
    out << "| " << f.family << " | " << f.params << " | " << f.vertices << " | " << f.claimed
        << " | " << f.proof_claimed << " | " << f.achieved << " | " << f.oracle << " | "
        << f.verdict << " | " << f.proof_verdict << " |\n";
  }
  out << "\n**Summary:**";
  for (const auto& [v, n] : summarize(rows)) out << ' ' << verdict_name(v) << ' ' << n << ';';
  out << '\n';
  return out.str();
}

}  // namespace sparing
