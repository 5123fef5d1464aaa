#include "graceful/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "graceful/bounds.hpp"

namespace graceful {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
        h ^= (value >> (8 * byte)) & 0xff;
        h *= 1099511628211ULL;
    }
    return h;
}

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;

// Single-threaded DFS over one slice of the search tree. Shared state is
// read-only apart from the stop flag (set once a witness exists elsewhere).
struct Searcher {
    const Graph& g;
    int k;
    const std::vector<int>& order;
    const std::vector<std::uint64_t>& allowed;
    std::atomic<bool>* stop = nullptr;

    std::uint64_t node_budget = 0;  // 0 = unlimited
    Clock::time_point deadline{};
    bool has_deadline = false;

    std::vector<int> color;  // by graph index; 0 = unassigned
    std::uint64_t nodes = 0;
    bool truncated = false;

    Searcher(const Graph& graph, int palette, const std::vector<int>& ord,
             const std::vector<std::uint64_t>& masks)
        : g(graph), k(palette), order(ord), allowed(masks),
          color(graph.vertex_count(), 0) {}

    // node budget is exact; the clock and the stop flag are polled every 256
    // nodes to keep the hot loop branch-cheap
    bool should_abort() {
        if (node_budget && nodes >= node_budget) return true;
        if ((nodes & 255) == 0) {
            if (has_deadline && Clock::now() >= deadline) return true;
            if (stop && stop->load(std::memory_order_relaxed)) return true;
        }
        return false;
    }

    // Extending u by c keeps the partial assignment graceful iff: c differs
    // from every assigned color in N[u] and in N[w] for assigned neighbors w
    // (closed neighborhoods stay rainbow), u's assigned neighbors are already
    // pairwise distinct (their shared center u was unassigned until now), and
    // the new labels |c - f(w)| collide with nothing incident to u or w.
    bool extends(int u, int c) const {
        std::uint64_t labels_at_u = 0, neighbor_colors = 0;
        for (int w : g.neighbors(u)) {
            const int cw = color[w];
            if (cw == 0) continue;
            if (cw == c) return false;
            const std::uint64_t cw_bit = std::uint64_t{1} << cw;
            if (neighbor_colors & cw_bit) return false;
            neighbor_colors |= cw_bit;
            const int lab = c > cw ? c - cw : cw - c;
            const std::uint64_t lab_bit = std::uint64_t{1} << lab;
            if (labels_at_u & lab_bit) return false;
            labels_at_u |= lab_bit;
            for (int w2 : g.neighbors(w)) {
                const int cw2 = color[w2];
                if (cw2 == 0 || w2 == u) continue;
                if (cw2 == c) return false;
                const int lab2 = cw > cw2 ? cw - cw2 : cw2 - cw;
                if (lab2 == lab) return false;
            }
        }
        return true;
    }

    bool dfs(std::size_t depth) {
        if (depth == order.size()) return true;
        const int u = order[depth];
        const std::uint64_t mask = allowed[u];
        for (int c = 1; c <= k; ++c) {
            if (!(mask >> (c - 1) & 1)) continue;
            ++nodes;
            if (should_abort()) {
                truncated = true;
                return false;
            }
            if (!extends(u, c)) continue;
            color[u] = c;
            if (dfs(depth + 1)) return true;
            color[u] = 0;
            if (truncated) return false;
        }
        return false;
    }
};

std::vector<int> assignment_order(const Graph& g, VertexOrder order) {
    std::vector<int> ord(g.vertex_count());
    std::iota(ord.begin(), ord.end(), 0);
    if (order == VertexOrder::DegreeDescending)
        std::stable_sort(ord.begin(), ord.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return ord;
}

std::vector<std::uint64_t> color_masks(const Graph& g, int k, const SearchConfig& cfg,
                                       int first_vertex) {
    const std::uint64_t full = k == 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> masks(g.vertex_count(), full);
    if (cfg.prune_extreme_colors) {
        const int max_deg = g.max_degree();
        for (int v = 0; v < g.vertex_count(); ++v) {
            const int d = cfg.prune_per_vertex_degree ? g.degree(v) : max_deg;
            if (!cfg.prune_per_vertex_degree && g.degree(v) != max_deg)
                continue;  // audit mode restricts only max-degree vertices
            if (k > d) masks[v] &= extreme_color_mask(k, d);
        }
    }
    if (cfg.symmetry_reflection) {
        const int half = (k + 1) / 2;  // reflection c -> k+1-c halves the root
        masks[first_vertex] &= (std::uint64_t{1} << half) - 1;
    }
    return masks;
}

VertexColoring witness_from(const Graph& g, int k, const std::vector<int>& color) {
    VertexColoring f{k, {}};
    for (int v = 0; v < g.vertex_count(); ++v) f.assignment[g.vertex(v)] = color[v];
    return f;
}

void check_witness(const Graph& g, const VertexColoring& f) {
    if (!is_graceful(g, f).graceful)
        throw std::logic_error("search produced a witness the validator rejects on " +
                               g.name());
}

FeasibilityResult search_single(const Graph& g, int k, const SearchConfig& cfg,
                                const std::vector<int>& order,
                                const std::vector<std::uint64_t>& masks,
                                Clock::time_point start) {
    Searcher s(g, k, order, masks);
    if (cfg.node_budget) s.node_budget = *cfg.node_budget;
    if (cfg.time_budget_seconds) {
        s.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(*cfg.time_budget_seconds));
        s.has_deadline = true;
    }
    FeasibilityResult res;
    const bool found = s.dfs(0);
    res.nodes_expanded = s.nodes;
    res.completed = found || !s.truncated;
    if (found) res.witness = witness_from(g, k, s.color);
    return res;
}

FeasibilityResult search_parallel(const Graph& g, int k, const SearchConfig& cfg,
                                  const std::vector<int>& order,
                                  const std::vector<std::uint64_t>& masks,
                                  Clock::time_point start) {
    // one task per admissible root color; workers drain the queue
    const int root = order[0];
    std::vector<int> root_colors;
    for (int c = 1; c <= k; ++c)
        if (masks[root] >> (c - 1) & 1) root_colors.push_back(c);

    std::atomic<bool> stop{false};
    std::atomic<std::size_t> next_task{0};
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<bool> truncated{false};
    std::mutex witness_mutex;
    std::optional<VertexColoring> witness;

    auto worker = [&] {
        for (;;) {
            const std::size_t t = next_task.fetch_add(1);
            if (t >= root_colors.size()) return;
            if (stop.load()) return;
            Searcher s(g, k, order, masks);
            s.stop = &stop;
            if (cfg.node_budget)
                s.node_budget = std::max<std::uint64_t>(1, *cfg.node_budget / root_colors.size());
            if (cfg.time_budget_seconds) {
                s.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(
                                             *cfg.time_budget_seconds));
                s.has_deadline = true;
            }
            const int c = root_colors[t];
            s.color[root] = c;
            ++s.nodes;
            bool found = s.extends(root, c) && s.dfs(1);
            total_nodes.fetch_add(s.nodes);
            if (found) {
                std::scoped_lock lock(witness_mutex);
                if (!witness) witness = witness_from(g, k, s.color);
                stop.store(true);
            } else if (s.truncated && !stop.load()) {
                truncated.store(true);
            }
        }
    };

    const int thread_count =
        std::max(1, std::min<int>(cfg.jobs, static_cast<int>(root_colors.size())));
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();

    FeasibilityResult res;
    res.nodes_expanded = total_nodes.load();
    if (witness) {
        res.witness = std::move(witness);
        res.completed = true;
    } else {
        res.completed = !truncated.load();
    }
    return res;
}

}  // namespace

std::string_view to_string(VertexOrder order) {
    return order == VertexOrder::Interleaved ? "interleaved" : "degree-descending";
}

std::optional<VertexOrder> vertex_order_from_string(std::string_view s) {
    if (s == "interleaved") return VertexOrder::Interleaved;
    if (s == "degree-descending" || s == "degree") return VertexOrder::DegreeDescending;
    return std::nullopt;
}

std::string_view to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::UpperBoundOnly: return "upper_bound_only";
        case SolveStatus::ExhaustedToCap: return "exhausted_to_cap";
        case SolveStatus::Inconclusive: return "inconclusive";
    }
    throw std::logic_error("unknown solve status");
}

std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = kFnvOffset;
    h = fnv1a(h, static_cast<std::uint64_t>(g.vertex_count()));
    for (const auto& v : g.vertices())
        h = fnv1a(h, (std::uint64_t{v.rail == Rail::Y} << 32) |
                         static_cast<std::uint32_t>(v.index));
    h = fnv1a(h, static_cast<std::uint64_t>(g.edge_count()));
    for (const auto& [u, v] : g.edges())
        h = fnv1a(h, (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v));
    return h;
}

std::uint64_t config_hash(const SearchConfig& cfg) {
    std::uint64_t h = kFnvOffset;
    h = fnv1a(h, static_cast<std::uint64_t>(cfg.vertex_order));
    h = fnv1a(h, (std::uint64_t{cfg.prune_extreme_colors} << 2) |
                     (std::uint64_t{cfg.prune_per_vertex_degree} << 1) |
                     std::uint64_t{cfg.symmetry_reflection});
    return h;
}

FeasibilityResult find_graceful_coloring(const Graph& g, int k, const SearchConfig& cfg) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (k < 2) throw std::invalid_argument("palette needs k >= 2");
    if (k > 62) throw std::invalid_argument("palette sizes beyond 62 unsupported");
    const auto start = Clock::now();
    const auto order = assignment_order(g, cfg.vertex_order);
    const auto masks = color_masks(g, k, cfg, order[0]);
    FeasibilityResult res = cfg.jobs > 1 ? search_parallel(g, k, cfg, order, masks, start)
                                         : search_single(g, k, cfg, order, masks, start);
    res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (res.witness) check_witness(g, *res.witness);
    return res;
}

SolveReport graceful_chromatic_number(const Graph& g, const SearchConfig& cfg) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    const auto start = Clock::now();
    SolveReport report;
    report.jobs = cfg.jobs;
    report.lower_bound_used =
        std::max(lower_bound(g), cfg.k_min_override.value_or(2));
    bool all_lower_completed = true;
    for (int k = report.lower_bound_used; k <= cfg.k_max_cap; ++k) {
        FeasibilityResult res = find_graceful_coloring(g, k, cfg);
        report.attempts.push_back({k, res.nodes_expanded, res.completed});
        report.nodes_expanded_total += res.nodes_expanded;
        if (res.witness) {
            report.chi_g = k;
            report.witness = std::move(res.witness);
            report.status = all_lower_completed ? SolveStatus::Solved
                                                : SolveStatus::UpperBoundOnly;
            break;
        }
        if (!res.completed) all_lower_completed = false;
    }
    if (!report.witness)
        report.status = all_lower_completed ? SolveStatus::ExhaustedToCap
                                            : SolveStatus::Inconclusive;
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

std::optional<InfeasibilityCertificate> certify_infeasibility(const Graph& g, int k,
                                                              const SearchConfig& cfg) {
    FeasibilityResult res = find_graceful_coloring(g, k, cfg);
    if (res.witness || !res.completed) return std::nullopt;
    InfeasibilityCertificate cert;
    cert.graph_name = g.name();
    cert.graph_hash = graph_hash(g);
    cert.k = k;
    cert.vertex_order = cfg.vertex_order;
    cert.prune_extreme_colors = cfg.prune_extreme_colors;
    cert.prune_per_vertex_degree = cfg.prune_per_vertex_degree;
    cert.symmetry_reflection = cfg.symmetry_reflection;
    cert.config_hash = config_hash(cfg);
    cert.nodes_expanded = res.nodes_expanded;
    return cert;
}

}  // namespace graceful
