#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "graceful/graph.hpp"

namespace graceful {

/// Lower bound chi_g >= Delta + 1 (a max-degree vertex and its neighbors need
/// distinct colors, and the induced labels around it need distinct values).
int lb_max_degree(const Graph& g);

/// Lower bound chi_g >= r + 2 for r-regular graphs, r >= 2; absent otherwise.
std::optional<int> lb_regular(const Graph& g);

/// Best available lower bound (>= 2 for any graph with an edge).
int lower_bound(const Graph& g);

struct KnownValue {
    FamilySpec spec;
    int chi_g = 0;
    std::string source;  // which closed-form result pins the value
};

/// Published exact values, keyed by (family, n); absent outside proven ranges
/// (e.g. P_2..P_4, SL_3, DL_4, CL_3 are solver-only territory).
std::optional<KnownValue> known_chi_g(const FamilySpec& spec);

/// Admissible colors for a degree-d vertex in a graceful k-coloring:
/// the first and last i = k - d colors. A color c in the middle band would
/// need d distinct labels drawn from {1..c-1} down and {1..k-c} up with all
/// neighbor colors distinct, which the counting argument rules out.
/// Throws std::invalid_argument when k <= d (no graceful k-coloring exists).
std::vector<int> extreme_color_set(int k, int degree);

/// Same rule as a bitmask over colors 1..k (bit c-1 set iff c admissible).
/// Solver-facing; k <= 62.
std::uint64_t extreme_color_mask(int k, int degree);

}  // namespace graceful
