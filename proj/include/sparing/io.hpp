#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sparing/compare.hpp"
#include "sparing/constructions.hpp"
#include "sparing/formulas.hpp"
#include "sparing/graph.hpp"
#include "sparing/oracle.hpp"
#include "sparing/set_labels.hpp"

namespace sparing {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- Graph ----------------------------------------------------------------

/// {"n": 4, "edges": [[0,1],...], "coords": [[r,c],...]}; edges sorted, u < v.
inline Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.coords()) {
    Json coords = Json::array();
    for (const auto& c : *g.coords()) coords.push_back({c.row, c.copy});
    j["coords"] = std::move(coords);
  }
  return j;
}

inline std::string graph_to_json_string(const Graph& g) { return graph_to_json(g).dump(); }

inline Graph graph_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1) throw ParseError("graph JSON: n must be positive");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: edge must be [u, v]");
      const auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0) throw ParseError("graph JSON: negative vertex index");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::optional<std::vector<Coord>> coords;
    if (j.contains("coords")) {
      coords.emplace();
      for (const auto& c : j.at("coords")) {
        if (!c.is_array() || c.size() != 2) throw ParseError("graph JSON: coord must be [r, c]");
        coords->push_back({c[0].get<std::size_t>(), c[1].get<std::size_t>()});
      }
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges), std::move(coords));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

inline Graph graph_from_json_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

// ---- Labeling -------------------------------------------------------------

inline Json labeling_to_json(const Labeling& l) {
  Json labels = Json::array();
  for (const auto& s : l.labels()) labels.push_back(s.elements());
  return Json{{"labels", std::move(labels)}};
}

inline Labeling labeling_from_json(const Graph& g, const Json& j) {
  try {
    std::vector<SetLabel> labels;
    for (const auto& s : j.at("labels"))
      labels.emplace_back(s.get<std::vector<SetLabel::value_type>>());
    return Labeling(g, std::move(labels));
  } catch (const std::exception& e) {
    throw ParseError(std::string("labeling JSON: ") + e.what());
  }
}

// ---- Reports --------------------------------------------------------------

inline Json solve_report_json(const SparingResult& r) {
  Json j;
  j["phi"] = r.phi;
  j["witness"] = r.witness_independent_set;
  j["engine"] = engine_name(r.engine);
  j["nodes"] = r.nodes_explored;
  return j;
}

inline Json params_json(const FamilyInstance& inst) {
  Json p = Json::object();
  for (const auto& name : family_params(inst.family())) p[name] = inst.at(name);
  return p;
}

/// Claims are integers, or "a/2" strings when the formula is not integral.
inline Json claim_json(const FormulaClaim& c) {
  if (c.ill_formed()) return c.claimed_string();
  return c.claimed_phi();
}

inline Json outcome_json(const ConstructionOutcome& o) {
  Json j;
  j["family"] = family_name(o.family.family());
  j["params"] = params_json(o.family);
  j["achieved"] = o.achieved_mono_edges;
  j["claimed"] = claim_json(o.claim());
  if (o.claims.size() > 1) j["proof_claimed"] = claim_json(o.claims[1]);
  j["labeling"] = labeling_to_json(o.labeling);
  return j;
}

inline std::string render_json(const std::vector<ComparisonRow>& rows) {
  Json out;
  Json list = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["family"] = family_name(r.instance.family());
    j["params"] = params_json(r.instance);
    j["vertices"] = r.vertices;
    j["claimed"] = claim_json(r.claims.front());
    j["proof_claimed"] = r.claims.size() > 1 ? claim_json(r.claims[1]) : Json(nullptr);
    j["achieved"] = r.achieved ? Json(*r.achieved) : Json(nullptr);
    j["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
    j["verdict"] = verdict_name(r.verdict);
    j["proof_verdict"] = r.proof_verdict ? Json(verdict_name(*r.proof_verdict)) : Json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    list.push_back(std::move(j));
  }
  out["rows"] = std::move(list);
  Json summary = Json::object();
  for (const auto& [v, n] : summarize(rows)) summary[std::string(verdict_name(v))] = n;
  out["summary"] = std::move(summary);
  return out.dump(2) + "\n";
}

inline std::string render_report(const std::vector<ComparisonRow>& rows, ReportFormat format) {
  switch (format) {
    case ReportFormat::csv: return render_csv(rows);
    case ReportFormat::json: return render_json(rows);
    case ReportFormat::markdown: return render_markdown(rows);
  }
  return render_csv(rows);
}

/// Catalog dump: family,params,variant,claimed_phi,citation.
inline std::string render_catalog_csv(const std::vector<FamilyInstance>& instances) {
  std::ostringstream out;
  out << "family,params,variant,claimed_phi,citation\n";
  for (const auto& inst : instances)
    for (const auto& c : all_claims(inst))
      out << family_name(inst.family()) << ',' << inst.params_string() << ','
          << variant_name(c.variant) << ',' << c.claimed_string() << ',' << c.citation << '\n';
  return out.str();
}

// ---- DOT ------------------------------------------------------------------

namespace detail {

inline std::string dot_vertex_name(const Graph& g, Vertex v) {
  if (g.coords()) {
    const auto& c = (*g.coords())[v];
    return std::to_string(c.row) + "," + std::to_string(c.copy);
  }
  return std::to_string(v);
}

inline std::string set_string(const SetLabel& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.elements()[i]);
  }
  return out + "}";
}

}  // namespace detail

inline std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << detail::dot_vertex_name(g, v) << "\"];\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

/// Labeled DOT: vertices show their set-label, non-singleton vertices are
/// filled, mono-indexed edges are red and bold.
inline std::string to_dot(const Labeling& l) {
  const auto& g = l.graph();
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=box];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& s = l.labels()[v];
    out << "  " << v << " [label=\"" << detail::dot_vertex_name(g, v) << "\\n"
        << detail::set_string(s) << "\"";
    if (!s.singleton()) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (l.labels()[e.u].singleton() && l.labels()[e.v].singleton())
      out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sparing
