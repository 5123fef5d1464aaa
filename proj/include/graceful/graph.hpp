#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graceful {

enum class Rail : std::uint8_t { X, Y };

/// Vertex of a ladder-style graph: rail ('x' or 'y') plus a 1-based column
/// index. Single-rail graphs (paths, cycles) use rail X throughout.
struct VertexId {
    Rail rail = Rail::X;
    int index = 1;

    friend bool operator==(const VertexId&, const VertexId&) = default;
    // canonical order: column-major, x before y (x1, y1, x2, y2, ...)
    friend bool operator<(const VertexId& a, const VertexId& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.rail < b.rail;
    }
};

inline VertexId vx(int i) { return {Rail::X, i}; }
inline VertexId vy(int i) { return {Rail::Y, i}; }

std::string to_string(const VertexId& v);
std::optional<VertexId> parse_vertex(std::string_view s);

using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph. Vertex order is fixed at construction
/// and is the canonical iteration order everywhere downstream.
class Graph {
public:
    Graph(std::string name, std::vector<VertexId> vertices,
          const std::vector<Edge>& edges);

    const std::string& name() const { return name_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    /// Edges as index pairs (u < v), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    VertexId vertex(int i) const { return vertices_[i]; }
    /// Index of a vertex in canonical order, or -1 when absent.
    int index_of(const VertexId& v) const;
    bool adjacent(int u, int v) const;

    int max_degree() const;
    std::optional<int> regular_degree() const;
    bool is_connected() const;

    /// Literal equality: same vertex sequence and same edge set.
    bool operator==(const Graph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::string name_;
    std::vector<VertexId> vertices_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

enum class Family {
    Path,
    Cycle,
    ClosedLadder,
    OpenLadder,
    SlantingLadder,
    TriangularLadder,
    OpenTriangularLadder,
    DiagonalLadder,
    OpenDiagonalLadder,
    CircularLadder,
};

struct FamilySpec {
    Family family = Family::Path;
    int n = 1;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Short code used in CLI flags and JSON ("L", "OL", ..., "P", "C").
std::string_view family_code(Family f);
std::optional<Family> family_from_code(std::string_view code);
std::string_view family_name(Family f);

/// Smallest n the generator accepts (CL needs n >= 3 to stay simple).
int family_min_n(Family f);

/// All generatable families, in a fixed presentation order.
std::span<const Family> all_families();

/// Builds the family graph with the canonical vertex order
/// (x1, y1, x2, y2, ... for two-rail families, x1..xn otherwise).
/// Throws std::invalid_argument when n is below the family minimum.
Graph build_family(const FamilySpec& spec);

inline std::string family_graph_name(const FamilySpec& spec) {
    return std::string(family_code(spec.family)) + std::to_string(spec.n);
}

}  // namespace graceful
