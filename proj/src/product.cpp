#include "graceful/product.hpp"

#include <stdexcept>

namespace graceful {

namespace {

bool is_single_edge(const Graph& h) {
    return h.vertex_count() == 2 && h.edge_count() == 1;
}

// Maps pair (gi, hj) — 0-based positions in each factor — to the product
// vertex. Against P_2 the ladder convention applies: (v, 0) -> x_{v+1},
// (v, 1) -> y_{v+1}. Otherwise pairs linearize row-major onto the x rail.
VertexId pair_vertex(int gi, int hj, int h_count, bool ladder_names) {
    if (ladder_names) return hj == 0 ? vx(gi + 1) : vy(gi + 1);
    return vx(gi * h_count + hj + 1);
}

Graph build_product(const Graph& g, const Graph& h, std::string_view op,
                    bool with_strong_edges) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("product factors must be nonempty");
    const bool ladder_names = is_single_edge(h);
    const int hc = h.vertex_count();

    std::vector<VertexId> vs;
    vs.reserve(static_cast<std::size_t>(g.vertex_count()) * hc);
    for (int gi = 0; gi < g.vertex_count(); ++gi)
        for (int hj = 0; hj < hc; ++hj)
            vs.push_back(pair_vertex(gi, hj, hc, ladder_names));

    std::vector<Edge> es;
    for (int gi = 0; gi < g.vertex_count(); ++gi)
        for (const auto& [ha, hb] : h.edges())
            es.push_back({pair_vertex(gi, ha, hc, ladder_names),
                          pair_vertex(gi, hb, hc, ladder_names)});
    for (const auto& [ga, gb] : g.edges())
        for (int hj = 0; hj < hc; ++hj)
            es.push_back({pair_vertex(ga, hj, hc, ladder_names),
                          pair_vertex(gb, hj, hc, ladder_names)});
    if (with_strong_edges) {
        for (const auto& [ga, gb] : g.edges())
            for (const auto& [ha, hb] : h.edges()) {
                es.push_back({pair_vertex(ga, ha, hc, ladder_names),
                              pair_vertex(gb, hb, hc, ladder_names)});
                es.push_back({pair_vertex(ga, hb, hc, ladder_names),
                              pair_vertex(gb, ha, hc, ladder_names)});
            }
    }

    return Graph(g.name() + std::string(op) + h.name(), std::move(vs), es);
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
    return build_product(g, h, "□", false);
}

Graph strong_product(const Graph& g, const Graph& h) {
    return build_product(g, h, "⊠", true);
}

}  // namespace graceful
