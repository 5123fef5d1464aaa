#include "graceful/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <stdexcept>

namespace graceful {

std::string to_string(const VertexId& v) {
    return (v.rail == Rail::X ? "x" : "y") + std::to_string(v.index);
}

std::optional<VertexId> parse_vertex(std::string_view s) {
    if (s.size() < 2) return std::nullopt;
    Rail rail;
    if (s[0] == 'x') rail = Rail::X;
    else if (s[0] == 'y') rail = Rail::Y;
    else return std::nullopt;
    int index = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), index);
    if (ec != std::errc{} || ptr != s.data() + s.size() || index < 1) return std::nullopt;
    return VertexId{rail, index};
}

Graph::Graph(std::string name, std::vector<VertexId> vertices,
             const std::vector<Edge>& edges)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
    std::map<VertexId, int> pos;
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        if (!pos.emplace(vertices_[i], i).second)
            throw std::invalid_argument("duplicate vertex " + to_string(vertices_[i]));
    }
    adj_.assign(vertices_.size(), {});
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = pos.find(a), ib = pos.find(b);
        if (ia == pos.end()) throw std::invalid_argument("edge endpoint not a vertex: " + to_string(a));
        if (ib == pos.end()) throw std::invalid_argument("edge endpoint not a vertex: " + to_string(b));
        int u = ia->second, v = ib->second;
        if (u == v) throw std::invalid_argument("self-loop at " + to_string(a));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("parallel edge in " + name_);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::index_of(const VertexId& v) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices_[i] == v) return i;
    return -1;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

std::optional<int> Graph::regular_degree() const {
    if (vertices_.empty()) return std::nullopt;
    int r = degree(0);
    for (int v = 1; v < vertex_count(); ++v)
        if (degree(v) != r) return std::nullopt;
    return r;
}

bool Graph::is_connected() const {
    if (vertices_.empty()) return false;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == vertex_count();
}

namespace {

struct FamilyInfo {
    Family family;
    std::string_view code;
    std::string_view name;
    int min_n;
};

constexpr std::array<FamilyInfo, 10> kFamilies{{
    {Family::Path, "P", "path", 1},
    {Family::Cycle, "C", "cycle", 3},
    {Family::ClosedLadder, "L", "closed ladder", 2},
    {Family::OpenLadder, "OL", "open ladder", 2},
    {Family::SlantingLadder, "SL", "slanting ladder", 2},
    {Family::TriangularLadder, "TL", "triangular ladder", 2},
    {Family::OpenTriangularLadder, "OTL", "open triangular ladder", 2},
    {Family::DiagonalLadder, "DL", "diagonal ladder", 2},
    {Family::OpenDiagonalLadder, "ODL", "open diagonal ladder", 2},
    {Family::CircularLadder, "CL", "circular ladder", 3},
}};

const FamilyInfo& info(Family f) {
    for (const auto& fi : kFamilies)
        if (fi.family == f) return fi;
    throw std::logic_error("unknown family");
}

std::vector<VertexId> two_rail_vertices(int n) {
    std::vector<VertexId> vs;
    vs.reserve(2 * n);
    for (int i = 1; i <= n; ++i) {
        vs.push_back(vx(i));
        vs.push_back(vy(i));
    }
    return vs;
}

void add_rails(std::vector<Edge>& es, int n) {
    for (int i = 1; i < n; ++i) {
        es.push_back({vx(i), vx(i + 1)});
        es.push_back({vy(i), vy(i + 1)});
    }
}

void add_rungs(std::vector<Edge>& es, int n, bool open) {
    int lo = open ? 2 : 1, hi = open ? n - 1 : n;
    for (int i = lo; i <= hi; ++i) es.push_back({vx(i), vy(i)});
}

void add_forward_diagonals(std::vector<Edge>& es, int n) {
    for (int i = 1; i < n; ++i) es.push_back({vx(i), vy(i + 1)});
}

void add_backward_diagonals(std::vector<Edge>& es, int n) {
    for (int i = 1; i < n; ++i) es.push_back({vy(i), vx(i + 1)});
}

}  // namespace

std::string_view family_code(Family f) { return info(f).code; }
std::string_view family_name(Family f) { return info(f).name; }
int family_min_n(Family f) { return info(f).min_n; }

std::optional<Family> family_from_code(std::string_view code) {
    for (const auto& fi : kFamilies)
        if (fi.code == code) return fi.family;
    return std::nullopt;
}

std::span<const Family> all_families() {
    static const std::array<Family, 10> order = [] {
        std::array<Family, 10> a{};
        for (std::size_t i = 0; i < kFamilies.size(); ++i) a[i] = kFamilies[i].family;
        return a;
    }();
    return order;
}

Graph build_family(const FamilySpec& spec) {
    const auto& fi = info(spec.family);
    if (spec.n < fi.min_n)
        throw std::invalid_argument(std::string(fi.name) + " requires n >= " +
                                    std::to_string(fi.min_n) + ", got n = " +
                                    std::to_string(spec.n));
    const int n = spec.n;
    std::string name = family_graph_name(spec);
    std::vector<Edge> es;

    switch (spec.family) {
        case Family::Path: {
            std::vector<VertexId> vs;
            for (int i = 1; i <= n; ++i) vs.push_back(vx(i));
            for (int i = 1; i < n; ++i) es.push_back({vx(i), vx(i + 1)});
            return Graph(std::move(name), std::move(vs), es);
        }
        case Family::Cycle: {
            std::vector<VertexId> vs;
            for (int i = 1; i <= n; ++i) vs.push_back(vx(i));
            for (int i = 1; i < n; ++i) es.push_back({vx(i), vx(i + 1)});
            es.push_back({vx(n), vx(1)});
            return Graph(std::move(name), std::move(vs), es);
        }
        case Family::ClosedLadder:
            add_rails(es, n);
            add_rungs(es, n, false);
            break;
        case Family::OpenLadder:
            add_rails(es, n);
            add_rungs(es, n, true);
            break;
        case Family::SlantingLadder:
            add_rails(es, n);
            add_forward_diagonals(es, n);
            break;
        case Family::TriangularLadder:
            add_rails(es, n);
            add_rungs(es, n, false);
            add_forward_diagonals(es, n);
            break;
        case Family::OpenTriangularLadder:
            add_rails(es, n);
            add_rungs(es, n, true);
            add_forward_diagonals(es, n);
            break;
        case Family::DiagonalLadder:
            add_rails(es, n);
            add_rungs(es, n, false);
            add_forward_diagonals(es, n);
            add_backward_diagonals(es, n);
            break;
        case Family::OpenDiagonalLadder:
            add_rails(es, n);
            add_rungs(es, n, true);
            add_forward_diagonals(es, n);
            add_backward_diagonals(es, n);
            break;
        case Family::CircularLadder:
            add_rails(es, n);
            add_rungs(es, n, false);
            es.push_back({vx(1), vx(n)});
            es.push_back({vy(1), vy(n)});
            break;
    }
    return Graph(std::move(name), two_rail_vertices(n), es);
}

}  // namespace graceful
