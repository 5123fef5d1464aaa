#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "graceful/coloring.hpp"
#include "graceful/constructions.hpp"
#include "graceful/graph.hpp"
#include "graceful/solver.hpp"

namespace graceful {

// insertion-ordered so identical inputs serialize byte-identically
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaTag = "graceful/v1";

/// Malformed or wrong-schema document; the CLI maps this to its usage exit.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json graph_to_json(const Graph& g, const std::optional<FamilySpec>& spec = std::nullopt);
/// Rebuilds from "vertices"/"edges"; accepts any document carrying both.
Graph graph_from_json(const Json& doc);

Json coloring_to_json(const VertexColoring& f);
/// Accepts a bare {"k", "colors"} object or any document wrapping one under
/// "coloring" or "witness" (construction and solve outputs pipe back in).
VertexColoring coloring_from_json(const Json& doc);

Json validation_to_json(const ValidationReport& report);
Json construction_to_json(const ConstructionResult& result);
/// include_timing=false drops wall-clock fields so reruns are byte-identical.
Json solve_report_to_json(const Graph& g, const SolveReport& report, bool include_timing);
Json feasibility_to_json(const Graph& g, int k, const FeasibilityResult& result,
                         const SearchConfig& cfg, bool include_timing);
Json certificate_to_json(const InfeasibilityCertificate& cert);

/// DOT graph with one rank group per rail; round-trips through from_dot.
std::string to_dot(const Graph& g);
/// Parses exactly the subset to_dot emits (quoted name, rank groups, a -- b).
Graph graph_from_dot(const std::string& text);

}  // namespace graceful
