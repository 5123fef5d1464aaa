#pragma once

#include <optional>
#include <string>

#include "graceful/coloring.hpp"
#include "graceful/graph.hpp"

namespace graceful {

/// A closed-form graceful coloring together with the palette size it claims
/// to be optimal. `source_case` names the table/formula branch that produced
/// the assignment (useful when auditing a single residue class).
struct ConstructionResult {
    FamilySpec spec;
    VertexColoring coloring;
    int claimed_chi_g = 0;
    std::string source_case;
};

// Each operation covers exactly the parameter range its closed form is good
// for and throws std::invalid_argument outside it; smaller n are solver
// territory. Open variants are literal restrictions of the closed assignment
// to the open edge set (same vertices, same colors).

ConstructionResult color_closed_ladder(int n);           // n >= 2, k = 4 or 5
ConstructionResult color_open_ladder(int n);             // n >= 4, k = 5
ConstructionResult color_slanting_ladder(int n);         // n >= 4, k = 5
ConstructionResult color_triangular_ladder(int n);       // n >= 3, k = 6 or 7
ConstructionResult color_open_triangular_ladder(int n);  // n >= 5, k = 7
ConstructionResult color_diagonal_ladder(int n);         // n >= 5, k = 8 or 9
ConstructionResult color_open_diagonal_ladder(int n);    // n >= 7, k = 9
ConstructionResult color_circular_ladder(int n);         // n >= 4, k = 5 or 6

/// Dispatch by family; absent for families without a closed form (paths,
/// cycles) or n below the form's range.
std::optional<ConstructionResult> color_family(const FamilySpec& spec);

}  // namespace graceful
