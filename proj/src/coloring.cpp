#include "graceful/coloring.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace graceful {

int VertexColoring::color_of(const VertexId& v) const {
    auto it = assignment.find(v);
    if (it == assignment.end())
        throw std::invalid_argument("no color assigned to " + to_string(v));
    return it->second;
}

namespace {

// Colors in graph index order; throws naming the first unassigned vertex.
std::vector<int> colors_by_index(const Graph& g, const VertexColoring& f) {
    std::vector<int> c(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) c[i] = f.color_of(g.vertex(i));
    return c;
}

}  // namespace

std::vector<EdgeLabel> induced_edge_labels(const Graph& g, const VertexColoring& f) {
    const auto c = colors_by_index(g, f);
    std::vector<EdgeLabel> labels;
    labels.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
        labels.push_back({g.vertex(u), g.vertex(v), std::abs(c[u] - c[v])});
    return labels;
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::AdjacentSameColor: return "adjacent_same_color";
        case ViolationKind::ClosedNeighborhoodRepeat: return "closed_neighborhood_repeat";
        case ViolationKind::MidpointPath: return "midpoint_path";
    }
    throw std::logic_error("unknown violation kind");
}

std::vector<Violation> check_closed_neighborhoods(const Graph& g, const VertexColoring& f) {
    const auto c = colors_by_index(g, f);
    std::vector<Violation> out;
    std::vector<int> hood;
    for (int v = 0; v < g.vertex_count(); ++v) {
        hood.clear();
        hood.push_back(v);
        hood.insert(hood.end(), g.neighbors(v).begin(), g.neighbors(v).end());
        std::sort(hood.begin(), hood.end());
        for (std::size_t i = 0; i < hood.size(); ++i)
            for (std::size_t j = i + 1; j < hood.size(); ++j)
                if (c[hood[i]] == c[hood[j]])
                    out.push_back({ViolationKind::ClosedNeighborhoodRepeat,
                                   {g.vertex(hood[i]), g.vertex(hood[j]), g.vertex(v)}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Violation> check_midpoint_paths(const Graph& g, const VertexColoring& f) {
    const auto c = colors_by_index(g, f);
    std::vector<Violation> out;
    for (int y = 0; y < g.vertex_count(); ++y) {
        const auto nbrs = g.neighbors(y);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (2 * c[y] == c[nbrs[i]] + c[nbrs[j]])
                    out.push_back({ViolationKind::MidpointPath,
                                   {g.vertex(nbrs[i]), g.vertex(y), g.vertex(nbrs[j])}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

ValidationReport is_graceful(const Graph& g, const VertexColoring& f) {
    const auto c = colors_by_index(g, f);
    for (int i = 0; i < g.vertex_count(); ++i)
        if (c[i] < 1 || c[i] > f.k)
            throw std::invalid_argument("color of " + to_string(g.vertex(i)) +
                                        " outside [1, " + std::to_string(f.k) + "]");
    ValidationReport report;
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v])
            report.violations.push_back({ViolationKind::AdjacentSameColor,
                                         {g.vertex(u), g.vertex(v)}});
    // Incident edges va, vb share a label iff either f(a)=f(b) (N[v] not
    // rainbow) or 2 f(v) = f(a)+f(b) (v is the midpoint of path a-v-b).
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const int a = nbrs[i], b = nbrs[j];
                if (std::abs(c[v] - c[a]) != std::abs(c[v] - c[b])) continue;
                if (c[a] == c[b])
                    report.violations.push_back({ViolationKind::ClosedNeighborhoodRepeat,
                                                 {g.vertex(a), g.vertex(b), g.vertex(v)}});
                else
                    report.violations.push_back({ViolationKind::MidpointPath,
                                                 {g.vertex(a), g.vertex(v), g.vertex(b)}});
            }
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.graceful = report.violations.empty();
    return report;
}

VertexColoring reflect(const VertexColoring& f) {
    VertexColoring out{f.k, {}};
    for (const auto& [v, c] : f.assignment) out.assignment[v] = f.k + 1 - c;
    return out;
}

}  // namespace graceful
