#pragma once

#include <map>
#include <string>
#include <vector>

#include "graceful/graph.hpp"

namespace graceful {

/// Total vertex coloring with palette [1, k]. Stored by VertexId so a
/// coloring can outlive (or be checked against) several graphs sharing names.
struct VertexColoring {
    int k = 2;
    std::map<VertexId, int> assignment;

    int color_of(const VertexId& v) const;  // throws if v unassigned
};

struct EdgeLabel {
    VertexId u, v;  // u < v
    int label = 0;  // |f(u) - f(v)|; 0 only when f is improper
};

/// Labels for every edge of g, sorted by (u, v). Throws std::invalid_argument
/// naming the first vertex f misses.
std::vector<EdgeLabel> induced_edge_labels(const Graph& g, const VertexColoring& f);

enum class ViolationKind {
    AdjacentSameColor,        // f(u) = f(v) on an edge uv
    ClosedNeighborhoodRepeat,  // two vertices of some N[v] share a color
    MidpointPath,              // path x-y-z with 2 f(y) = f(x) + f(z)
};

std::string_view to_string(ViolationKind kind);

/// One witness per violation; `vertices` holds the center-last clash pair
/// (ClosedNeighborhoodRepeat: a, b, v with f(a)=f(b), both in N[v]), the edge
/// endpoints (AdjacentSameColor), or the path (MidpointPath: x, y, z).
struct Violation {
    ViolationKind kind;
    std::vector<VertexId> vertices;

    friend bool operator==(const Violation&, const Violation&) = default;
    // lexicographic by witness, kind as tiebreak — the report's sort order
    friend bool operator<(const Violation& a, const Violation& b) {
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.kind < b.kind;
    }
};

struct ValidationReport {
    bool graceful = false;
    std::vector<Violation> violations;  // exhaustive, sorted
};

/// Decomposed condition (i): every closed neighborhood N[v] is rainbow.
std::vector<Violation> check_closed_neighborhoods(const Graph& g, const VertexColoring& f);

/// Decomposed condition (ii): no path (x,y,z) with f(y) the mean of f(x),
/// f(z). Checked as 2 f(y) != f(x) + f(z) in integers.
std::vector<Violation> check_midpoint_paths(const Graph& g, const VertexColoring& f);

/// Direct definition: proper vertex coloring whose induced edge labels are
/// pairwise distinct around every vertex. Violations are classified so the
/// report agrees with the two-condition decomposition: a label clash between
/// incident edges va, vb is a ClosedNeighborhoodRepeat when f(a) = f(b)
/// (a, v, b rainbow fails) and a MidpointPath otherwise.
ValidationReport is_graceful(const Graph& g, const VertexColoring& f);

/// Palette reflection c -> k+1-c; preserves all induced labels.
VertexColoring reflect(const VertexColoring& f);

}  // namespace graceful
