#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graceful/coloring.hpp"
#include "graceful/graph.hpp"

namespace graceful {

enum class VertexOrder { Interleaved, DegreeDescending };

std::string_view to_string(VertexOrder order);
std::optional<VertexOrder> vertex_order_from_string(std::string_view s);

struct SearchConfig {
    std::optional<int> k_min_override;
    int k_max_cap = 16;
    VertexOrder vertex_order = VertexOrder::Interleaved;
    // extreme-color pruning: off entirely, or per-vertex degree (default), or
    // only at maximum-degree vertices (the rule's narrowest sound reading)
    bool prune_extreme_colors = true;
    bool prune_per_vertex_degree = true;
    bool symmetry_reflection = true;
    std::optional<std::uint64_t> node_budget;   // per k
    std::optional<double> time_budget_seconds;  // per k
    int jobs = 1;  // >1 splits the search by first-vertex color
};

/// Outcome of a single-k search. `completed` = the tree was exhausted within
/// budget, so an absent witness is a proof of infeasibility.
struct FeasibilityResult {
    std::optional<VertexColoring> witness;
    bool completed = false;
    std::uint64_t nodes_expanded = 0;
    double elapsed_seconds = 0.0;
};

/// Per-k record kept while climbing toward chi_g.
struct KAttempt {
    int k = 0;
    std::uint64_t nodes_expanded = 0;
    bool completed = false;
};

enum class SolveStatus {
    Solved,          // witness at chi_g, every smaller k exhausted
    UpperBoundOnly,  // witness found but some smaller k ran out of budget
    ExhaustedToCap,  // every k up to the cap exhausted, none feasible
    Inconclusive,    // no witness and some k ran out of budget
};

std::string_view to_string(SolveStatus status);

struct SolveReport {
    SolveStatus status = SolveStatus::Inconclusive;
    int chi_g = 0;  // exact when Solved; upper bound when UpperBoundOnly; else 0
    std::optional<VertexColoring> witness;
    std::vector<KAttempt> attempts;  // every k tried, ascending
    int lower_bound_used = 0;
    std::uint64_t nodes_expanded_total = 0;
    double elapsed_seconds = 0.0;
    int jobs = 1;

    bool conclusive() const { return status == SolveStatus::Solved; }
};

/// Exhaustive-search proof that no graceful k-coloring of the hashed graph
/// exists, replayable by re-running with the same order and pruning flags.
struct InfeasibilityCertificate {
    std::string graph_name;
    std::uint64_t graph_hash = 0;
    int k = 0;
    VertexOrder vertex_order = VertexOrder::Interleaved;
    bool prune_extreme_colors = true;
    bool prune_per_vertex_degree = true;
    bool symmetry_reflection = true;
    std::uint64_t config_hash = 0;
    std::uint64_t nodes_expanded = 0;
};

/// FNV-1a over the vertex names and edge list (order-sensitive on the
/// canonical form, so equal graphs hash equal).
std::uint64_t graph_hash(const Graph& g);
/// FNV-1a over the search-semantic config fields (order + pruning flags);
/// budgets and job count do not affect verdicts and are excluded.
std::uint64_t config_hash(const SearchConfig& cfg);

/// Depth-first search for one graceful k-coloring. Vertices are assigned in
/// cfg.vertex_order, colors ascending; a partial assignment survives only if
/// closed neighborhoods stay rainbow and incident labels stay distinct over
/// the assigned subgraph. Every returned witness is re-validated; a validator
/// reject throws std::logic_error (solver bug, not caller error).
FeasibilityResult find_graceful_coloring(const Graph& g, int k, const SearchConfig& cfg = {});

/// Climbs k from max(lower bound, k_min_override, 2) to cfg.k_max_cap and
/// stops at the first feasible k. Budgets apply per k.
SolveReport graceful_chromatic_number(const Graph& g, const SearchConfig& cfg = {});

/// Certificate when exhaustive search proves no graceful k-coloring; absent
/// when k is feasible or the budget ran out first.
std::optional<InfeasibilityCertificate> certify_infeasibility(const Graph& g, int k,
                                                              const SearchConfig& cfg = {});

}  // namespace graceful
