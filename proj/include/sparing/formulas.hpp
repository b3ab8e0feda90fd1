#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sparing/graph.hpp"

namespace sparing {

enum class Family {
  grid,
  prism,
  torus,
  complete_x_complete,
  complete_x_path,
  complete_x_cycle,
  bipartite_x_cycle,
  bipartite_x_complete,
  complete,
  cycle,
};

inline constexpr std::array kAllFamilies{
    Family::grid,
    Family::prism,
    Family::torus,
    Family::complete_x_complete,
    Family::complete_x_path,
    Family::complete_x_cycle,
    Family::bipartite_x_cycle,
    Family::bipartite_x_complete,
    Family::complete,
    Family::cycle,
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::grid: return "grid";
    case Family::prism: return "prism";
    case Family::torus: return "torus";
    case Family::complete_x_complete: return "complete_x_complete";
    case Family::complete_x_path: return "complete_x_path";
    case Family::complete_x_cycle: return "complete_x_cycle";
    case Family::bipartite_x_cycle: return "bipartite_x_cycle";
    case Family::bipartite_x_complete: return "bipartite_x_complete";
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
  }
  throw std::invalid_argument("unknown family");
}

inline Family parse_family(std::string_view name) {
  for (auto f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

/// Parameter names of each family, in sort-key order.
///
///   grid                  rows, cols   P(rows) x P(cols), both vertex counts
///   prism                 m, n         C_m x P_n, n = path edges
///   torus                 m, n         C_m x C_n
///   complete_x_complete   m, n         K_m x K_n
///   complete_x_path       n, m         K_n x P_m, m = path edges
///   complete_x_cycle      n, m         K_n x C_m
///   bipartite_x_cycle     m1, m2, n    K_{m1,m2} x C_n
///   bipartite_x_complete  m1, m2, n    K_{m1,m2} x K_n
///   complete              n            K_n
///   cycle                 n            C_n
inline std::vector<std::string> family_params(Family f) {
  switch (f) {
    case Family::grid: return {"rows", "cols"};
    case Family::prism:
    case Family::torus:
    case Family::complete_x_complete: return {"m", "n"};
    case Family::complete_x_path:
    case Family::complete_x_cycle: return {"n", "m"};
    case Family::bipartite_x_cycle:
    case Family::bipartite_x_complete: return {"m1", "m2", "n"};
    case Family::complete:
    case Family::cycle: return {"n"};
  }
  throw std::invalid_argument("unknown family");
}

class FamilyInstance {
 public:
  FamilyInstance(Family family, std::map<std::string, std::int64_t> params)
      : family_(family), params_(std::move(params)) {
    const auto names = family_params(family_);
    if (params_.size() != names.size())
      throw std::invalid_argument(std::string(family_name(family_)) + " takes " +
                                  std::to_string(names.size()) + " parameters");
    for (const auto& name : names)
      if (!params_.contains(name))
        throw std::invalid_argument(std::string(family_name(family_)) + " needs parameter " +
                                    name);
    validate();
  }

  Family family() const noexcept { return family_; }
  std::int64_t at(const std::string& name) const { return params_.at(name); }
  const std::map<std::string, std::int64_t>& params() const noexcept { return params_; }

  /// Parameter values in the family's declared order.
  std::vector<std::int64_t> key() const {
    std::vector<std::int64_t> out;
    for (const auto& name : family_params(family_)) out.push_back(params_.at(name));
    return out;
  }

  /// e.g. "m=3;n=2".
  std::string params_string() const {
    std::string out;
    for (const auto& name : family_params(family_)) {
      if (!out.empty()) out += ';';
      out += name + "=" + std::to_string(params_.at(name));
    }
    return out;
  }

  friend bool operator==(const FamilyInstance& a, const FamilyInstance& b) {
    return a.family_ == b.family_ && a.params_ == b.params_;
  }
  friend bool operator<(const FamilyInstance& a, const FamilyInstance& b) {
    if (a.family_ != b.family_) return a.family_ < b.family_;
    return a.key() < b.key();
  }

 private:
  void require(bool ok, const std::string& what) const {
    if (!ok)
      throw std::invalid_argument(std::string(family_name(family_)) + ": " + what + " (got " +
                                  params_string() + ")");
  }

  void validate() const {
    switch (family_) {
      case Family::grid:
        require(at("rows") >= 2 && at("cols") >= 2, "rows, cols >= 2");
        break;
      case Family::prism: require(at("m") >= 3 && at("n") >= 1, "m >= 3, n >= 1"); break;
      case Family::torus: require(at("m") >= 3 && at("n") >= 3, "m, n >= 3"); break;
      case Family::complete_x_complete:
        require(at("m") >= 2 && at("n") >= 2, "m, n >= 2");
        break;
      case Family::complete_x_path: require(at("n") >= 2 && at("m") >= 1, "n >= 2, m >= 1"); break;
      case Family::complete_x_cycle: require(at("n") >= 2 && at("m") >= 3, "n >= 2, m >= 3"); break;
      case Family::bipartite_x_cycle:
        require(at("m1") >= 1 && at("m1") <= at("m2") && at("n") >= 3, "1 <= m1 <= m2, n >= 3");
        break;
      case Family::bipartite_x_complete:
        require(at("m1") >= 1 && at("m1") <= at("m2") && at("n") >= 2, "1 <= m1 <= m2, n >= 2");
        break;
      case Family::complete: require(at("n") >= 2, "n >= 2"); break;
      case Family::cycle: require(at("n") >= 3, "n >= 3"); break;
    }
  }

  Family family_;
  std::map<std::string, std::int64_t> params_;
};

inline Graph build_graph(const FamilyInstance& inst) {
  auto u = [&](const char* name) { return static_cast<std::size_t>(inst.at(name)); };
  switch (inst.family()) {
    case Family::grid: return cartesian_product(path_graph(u("rows")), path_graph(u("cols")));
    case Family::prism: return cartesian_product(cycle_graph(u("m")), path_graph(u("n") + 1));
    case Family::torus: return cartesian_product(cycle_graph(u("m")), cycle_graph(u("n")));
    case Family::complete_x_complete:
      return cartesian_product(complete_graph(u("m")), complete_graph(u("n")));
    case Family::complete_x_path:
      return cartesian_product(complete_graph(u("n")), path_graph(u("m") + 1));
    case Family::complete_x_cycle:
      return cartesian_product(complete_graph(u("n")), cycle_graph(u("m")));
    case Family::bipartite_x_cycle:
      return cartesian_product(complete_bipartite(u("m1"), u("m2")), cycle_graph(u("n")));
    case Family::bipartite_x_complete:
      return cartesian_product(complete_bipartite(u("m1"), u("m2")), complete_graph(u("n")));
    case Family::complete: return complete_graph(u("n"));
    case Family::cycle: return cycle_graph(u("n"));
  }
  throw std::invalid_argument("unknown family");
}

/// Vertex count of the instance graph without building it.
inline std::int64_t instance_vertex_count(const FamilyInstance& inst) {
  switch (inst.family()) {
    case Family::grid: return inst.at("rows") * inst.at("cols");
    case Family::prism: return inst.at("m") * (inst.at("n") + 1);
    case Family::torus:
    case Family::complete_x_complete: return inst.at("m") * inst.at("n");
    case Family::complete_x_path: return inst.at("n") * (inst.at("m") + 1);
    case Family::complete_x_cycle: return inst.at("n") * inst.at("m");
    case Family::bipartite_x_cycle:
    case Family::bipartite_x_complete: return (inst.at("m1") + inst.at("m2")) * inst.at("n");
    case Family::complete:
    case Family::cycle: return inst.at("n");
  }
  throw std::invalid_argument("unknown family");
}

enum class Variant { as_stated, proof_count };

inline std::string_view variant_name(Variant v) {
  return v == Variant::as_stated ? "as_stated" : "proof_count";
}

/// A closed-form sparing number claim. Formulas containing a factor 1/2 are
/// kept doubled; an odd doubled value means the formula is not an integer at
/// this instance.
struct FormulaClaim {
  FamilyInstance instance;
  Variant variant = Variant::as_stated;
  std::int64_t doubled = 0;
  std::string citation;

  bool ill_formed() const noexcept { return doubled % 2 != 0; }
  std::int64_t claimed_phi() const {
    if (ill_formed())
      throw std::domain_error("formula is not an integer at " + instance.params_string());
    return doubled / 2;
  }
  /// "7", or "15/2" when ill-formed.
  std::string claimed_string() const {
    return ill_formed() ? std::to_string(doubled) + "/2" : std::to_string(doubled / 2);
  }
};

/// True when the family carries a second, proof-derived count that differs
/// from its closed form.
inline bool has_proof_variant(const FamilyInstance& inst) {
  switch (inst.family()) {
    case Family::torus: return inst.at("m") % 2 == 1 && inst.at("n") % 2 == 1;
    case Family::complete_x_path: return true;
    default: return false;
  }
}

/// Evaluates the claimed closed form for the instance's family, as claimed,
/// including cases that are wrong for small parameters; judging them is the
/// comparison report's job.
inline FormulaClaim phi_formula(const FamilyInstance& inst, Variant variant = Variant::as_stated) {
  if (variant == Variant::proof_count && !has_proof_variant(inst))
    throw std::invalid_argument(std::string(family_name(inst.family())) +
                                " has no separate proof count at " + inst.params_string());

  auto p = [&](const char* name) { return inst.at(name); };
  std::int64_t twice = 0;
  std::string cite;

  switch (inst.family()) {
    case Family::grid:
      twice = 0;
      cite = "grid_theorem";
      break;
    case Family::prism: {
      const auto m = p("m"), n = p("n");
      twice = m % 2 == 0 ? 0 : 2 * (2 * n + 1);
      cite = m % 2 == 0 ? "prism_even_m" : "prism_odd_m_2n+1";
      break;
    }
    case Family::torus: {
      const auto m = p("m"), n = p("n");
      if (m % 2 == 0 && n % 2 == 0) {
        twice = 0;
        cite = "torus_both_even";
      } else if (m % 2 == 1 && n % 2 == 0) {
        twice = 2 * (2 * n);
        cite = "torus_m_odd_n_even_2n";
      } else if (variant == Variant::proof_count) {
        twice = 2 * std::max(m, n);
        cite = "torus_proof_conclusion_max(m;n)";
      } else {
        twice = 2 * (2 * std::max(m, n));
        cite = "torus_otherwise_2l";
      }
      break;
    }
    case Family::complete_x_complete: {
      const auto m = p("m"), n = p("n");
      if (n < m) {
        // n*C(m-1,2) + m*C(n-1,2)
        twice = n * (m - 1) * (m - 2) + m * (n - 1) * (n - 2);
        cite = "KmxKn_n<m";
      } else if (n == m) {
        twice = 2 * m * (m - 1) * (m - 2);
        cite = "KmxKn_n=m";
      } else {
        twice = m * (n - 2) * (m + n - 2);
        cite = "KmxKn_n>m";
      }
      break;
    }
    case Family::complete_x_path: {
      const auto n = p("n"), m = p("m");
      if (variant == Variant::proof_count) {
        twice = (m + 1) * (n - 1) * (n - 2) + 2 * m * (n - 2);
        cite = "KnxPm_proof_count";
      } else {
        twice = (n - 1) * ((m + 1) * (n + 1) - 2);
        cite = "KnxPm_closed_form";
      }
      break;
    }
    case Family::complete_x_cycle: {
      const auto n = p("n"), m = p("m");
      twice = m % 2 == 0 ? m * (n + 1) * (n - 2) : (n + 1) * (m * (n - 2) + 2);
      cite = m % 2 == 0 ? "KnxCm_even_m" : "KnxCm_odd_m";
      break;
    }
    case Family::bipartite_x_cycle: {
      const auto m1 = p("m1"), m2 = p("m2"), n = p("n");
      twice = n % 2 == 0 ? 0 : 2 * m1 * (m2 + 1);
      cite = n % 2 == 0 ? "bipartite_product_is_bipartite" : "Km1m2xCn_odd_n";
      break;
    }
    case Family::bipartite_x_complete: {
      const auto m1 = p("m1"), m2 = p("m2"), n = p("n");
      twice = 2 * (n - 1) * m1 * m2 + n * (n * m1 + (n - 2) * m2);
      cite = "Km1m2xKn";
      break;
    }
    case Family::complete: {
      const auto n = p("n");
      twice = (n - 1) * (n - 2);
      cite = "Kn_(n-1)(n-2)/2";
      break;
    }
    case Family::cycle: {
      // Even cycles are bipartite; an odd cycle needs an odd, hence nonzero,
      // number of mono edges and one suffices.
      twice = p("n") % 2 == 0 ? 0 : 2;
      cite = p("n") % 2 == 0 ? "even_cycle_bipartite" : "odd_cycle_parity";
      break;
    }
  }
  if (twice < 0) throw std::logic_error("negative formula value at " + inst.params_string());
  return FormulaClaim{inst, variant, twice, std::move(cite)};
}

/// The as-stated claim, followed by the proof's own count where it differs.
inline std::vector<FormulaClaim> all_claims(const FamilyInstance& inst) {
  std::vector<FormulaClaim> out{phi_formula(inst, Variant::as_stated)};
  if (has_proof_variant(inst)) out.push_back(phi_formula(inst, Variant::proof_count));
  return out;
}

/// Default sweep ranges: every parameter tuple in [2..6]-sized ranges meeting
/// the family's preconditions, in sort-key order.
inline std::vector<FamilyInstance> default_instances(Family f) {
  std::vector<FamilyInstance> out;
  auto two = [&](const char* a, std::int64_t a_lo, std::int64_t a_hi, const char* b,
                 std::int64_t b_lo, std::int64_t b_hi) {
    for (auto x = a_lo; x <= a_hi; ++x)
      for (auto y = b_lo; y <= b_hi; ++y) out.emplace_back(f, std::map<std::string, std::int64_t>{{a, x}, {b, y}});
  };
  auto bipartite = [&](std::int64_t n_lo) {
    for (std::int64_t m1 = 1; m1 <= 4; ++m1)
      for (auto m2 = m1; m2 <= 4; ++m2)
        for (auto n = n_lo; n <= 6; ++n)
          out.emplace_back(f, std::map<std::string, std::int64_t>{{"m1", m1}, {"m2", m2}, {"n", n}});
  };
  switch (f) {
    case Family::grid: two("rows", 2, 6, "cols", 2, 6); break;
    case Family::prism: two("m", 3, 6, "n", 1, 5); break;
    case Family::torus: two("m", 3, 6, "n", 3, 6); break;
    case Family::complete_x_complete: two("m", 2, 6, "n", 2, 6); break;
    case Family::complete_x_path: two("n", 2, 6, "m", 1, 5); break;
    case Family::complete_x_cycle: two("n", 2, 6, "m", 3, 6); break;
    case Family::bipartite_x_cycle: bipartite(3); break;
    case Family::bipartite_x_complete: bipartite(2); break;
    case Family::complete:
      for (std::int64_t n = 2; n <= 6; ++n) out.emplace_back(f, std::map<std::string, std::int64_t>{{"n", n}});
      break;
    case Family::cycle:
      for (std::int64_t n = 3; n <= 6; ++n) out.emplace_back(f, std::map<std::string, std::int64_t>{{"n", n}});
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<FamilyInstance> default_instances(const std::vector<Family>& families) {
  std::vector<FamilyInstance> out;
  for (auto f : families) {
    auto part = default_instances(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sparing
