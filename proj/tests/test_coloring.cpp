#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "graceful/coloring.hpp"
#include "graceful/graph.hpp"
#include "oracle.hpp"

using namespace graceful;

namespace {

VertexColoring on_rails(int k, std::vector<int> xs, std::vector<int> ys) {
    VertexColoring f{k, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) f.assignment[vx(int(i) + 1)] = xs[i];
    for (std::size_t i = 0; i < ys.size(); ++i) f.assignment[vy(int(i) + 1)] = ys[i];
    return f;
}

// the 3-column closed-ladder 5-coloring used as a worked example throughout
VertexColoring l3_good() { return on_rails(5, {3, 1, 2}, {2, 5, 4}); }

int label_of(const std::vector<EdgeLabel>& labels, VertexId u, VertexId v) {
    if (v < u) std::swap(u, v);
    for (const auto& e : labels)
        if (e.u == u && e.v == v) return e.label;
    return -1;
}

}  // namespace

TEST_CASE("induced labels are absolute color differences") {
    const Graph p2 = build_family({Family::Path, 2});
    VertexColoring f{2, {{vx(1), 1}, {vx(2), 2}}};
    const auto labels = induced_edge_labels(p2, f);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0].label == 1);

    const Graph l3 = build_family({Family::ClosedLadder, 3});
    const auto l3_labels = induced_edge_labels(l3, l3_good());
    CHECK(label_of(l3_labels, vx(2), vy(2)) == 4);
    CHECK(label_of(l3_labels, vx(1), vy(1)) == 1);

    const Graph p3 = build_family({Family::Path, 3});
    VertexColoring ramp{3, {{vx(1), 1}, {vx(2), 2}, {vx(3), 3}}};
    for (const auto& e : induced_edge_labels(p3, ramp)) CHECK(e.label == 1);
}

TEST_CASE("missing assignments are reported by vertex name") {
    const Graph p2 = build_family({Family::Path, 2});
    VertexColoring partial{2, {{vx(1), 1}}};
    CHECK_THROWS_WITH_AS(induced_edge_labels(p2, partial), doctest::Contains("x2"),
                         std::invalid_argument);
}

TEST_CASE("closed-neighborhood check") {
    const Graph c4 = build_family({Family::Cycle, 4});
    VertexColoring good{5, {{vx(1), 1}, {vx(2), 2}, {vx(3), 4}, {vx(4), 5}}};
    CHECK(check_closed_neighborhoods(c4, good).empty());

    // star with two leaves = 3-vertex path centered at x2
    const Graph star = build_family({Family::Path, 3});
    VertexColoring leaves_clash{2, {{vx(1), 2}, {vx(2), 1}, {vx(3), 2}}};
    const auto violations = check_closed_neighborhoods(star, leaves_clash);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::ClosedNeighborhoodRepeat);
    CHECK(violations[0].vertices == std::vector<VertexId>{vx(1), vx(3), vx(2)});

    CHECK(check_closed_neighborhoods(build_family({Family::ClosedLadder, 3}), l3_good())
              .empty());
}

TEST_CASE("midpoint-path check uses the integer mean form") {
    const Graph p3 = build_family({Family::Path, 3});
    VertexColoring mean{3, {{vx(1), 1}, {vx(2), 2}, {vx(3), 3}}};
    const auto violations = check_midpoint_paths(p3, mean);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].vertices == std::vector<VertexId>{vx(1), vx(2), vx(3)});

    VertexColoring skew{5, {{vx(1), 1}, {vx(2), 2}, {vx(3), 5}}};
    CHECK(check_midpoint_paths(p3, skew).empty());

    CHECK(check_midpoint_paths(build_family({Family::ClosedLadder, 3}), l3_good()).empty());
}

TEST_CASE("direct gracefulness check on the worked examples") {
    const Graph l3 = build_family({Family::ClosedLadder, 3});
    CHECK(is_graceful(l3, l3_good()).graceful);

    // forced assignment from the 4-color impossibility argument: the labels
    // of x3y3 and y2y3 both come out 1, clashing at y3
    const VertexColoring forced = on_rails(4, {3, 1, 2}, {2, 4, 3});
    const auto report = is_graceful(l3, forced);
    CHECK_FALSE(report.graceful);
    const bool clash_at_y3 =
        std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
            return v.kind == ViolationKind::MidpointPath &&
                   v.vertices == std::vector<VertexId>{vy(2), vy(3), vx(3)};
        });
    CHECK(clash_at_y3);

    const VertexColoring constant = on_rails(2, {1, 1, 1}, {1, 1, 1});
    const auto constant_report = is_graceful(l3, constant);
    CHECK_FALSE(constant_report.graceful);
    CHECK(std::any_of(constant_report.violations.begin(), constant_report.violations.end(),
                      [](const Violation& v) {
                          return v.kind == ViolationKind::AdjacentSameColor;
                      }));
}

TEST_CASE("violations come out sorted and exhaustive") {
    const Graph p3 = build_family({Family::Path, 3});
    VertexColoring bad{3, {{vx(1), 1}, {vx(2), 1}, {vx(3), 1}}};
    const auto report = is_graceful(p3, bad);
    CHECK(report.violations.size() >= 3);  // two improper edges + the N[x2] repeat
    CHECK(std::is_sorted(report.violations.begin(), report.violations.end()));
}

TEST_CASE("a reported violation disappears with its edge") {
    const Graph p3 = build_family({Family::Path, 3});
    VertexColoring mean{3, {{vx(1), 1}, {vx(2), 2}, {vx(3), 3}}};
    REQUIRE_FALSE(is_graceful(p3, mean).graceful);
    // drop the x2x3 edge: the path x1-x2-x3 no longer exists
    const Graph truncated("P3-minus", {vx(1), vx(2), vx(3)}, {{vx(1), vx(2)}});
    CHECK(is_graceful(truncated, mean).graceful);
}

TEST_CASE("out-of-range colors are rejected") {
    const Graph p2 = build_family({Family::Path, 2});
    VertexColoring too_big{2, {{vx(1), 1}, {vx(2), 3}}};
    CHECK_THROWS_AS(is_graceful(p2, too_big), std::invalid_argument);
}

TEST_CASE("direct check agrees with the two-condition decomposition") {
    std::mt19937 rng(20240811);
    int samples = 0, graceful_count = 0;
    for (Family family : all_families()) {
        for (int n = family_min_n(family);; ++n) {
            const Graph g = build_family({family, n});
            if (g.vertex_count() > 12) break;
            for (int k = 2; k <= 7; ++k) {
                std::uniform_int_distribution<int> color(1, k);
                for (int trial = 0; trial < 30; ++trial) {
                    VertexColoring f{k, {}};
                    for (const auto& v : g.vertices()) f.assignment[v] = color(rng);
                    const bool direct = is_graceful(g, f).graceful;
                    const bool decomposed = check_closed_neighborhoods(g, f).empty() &&
                                            check_midpoint_paths(g, f).empty();
                    ++samples;
                    graceful_count += direct;
                    REQUIRE(direct == decomposed);
                }
            }
        }
    }
    CHECK(samples >= 10000);
    CHECK(graceful_count > 0);  // the sample hits both sides of the equivalence
}

TEST_CASE("direct check agrees with the definition oracle on full enumerations") {
    for (FamilySpec spec : {FamilySpec{Family::Path, 4}, FamilySpec{Family::Cycle, 4},
                            FamilySpec{Family::ClosedLadder, 2}}) {
        const Graph g = build_family(spec);
        for (int k = 2; k <= 4; ++k) {
            oracle::for_each_coloring(g.vertex_count(), k, [&](const std::vector<int>& c) {
                VertexColoring f{k, {}};
                for (int v = 0; v < g.vertex_count(); ++v)
                    f.assignment[g.vertex(v)] = c[v];
                REQUIRE(is_graceful(g, f).graceful ==
                        oracle::graceful_by_definition(g, c));
            });
        }
    }
}

TEST_CASE("proper colorings only induce labels in [1, k-1]") {
    std::mt19937 rng(7);
    const Graph g = build_family({Family::TriangularLadder, 4});
    std::uniform_int_distribution<int> color(1, 6);
    int proper_seen = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        VertexColoring f{6, {}};
        for (const auto& v : g.vertices()) f.assignment[v] = color(rng);
        const auto labels = induced_edge_labels(g, f);
        const bool proper = std::all_of(labels.begin(), labels.end(),
                                        [](const EdgeLabel& e) { return e.label != 0; });
        if (!proper) continue;
        ++proper_seen;
        for (const auto& e : labels) {
            CHECK(e.label >= 1);
            CHECK(e.label <= 5);
        }
    }
    CHECK(proper_seen > 0);
}

TEST_CASE("palette reflection preserves gracefulness") {
    const Graph l3 = build_family({Family::ClosedLadder, 3});
    const VertexColoring f = l3_good();
    const VertexColoring mirrored = reflect(f);
    CHECK(is_graceful(l3, mirrored).graceful);
    CHECK(mirrored.color_of(vx(1)) == 3);  // 5+1-3
    CHECK(mirrored.color_of(vy(2)) == 1);  // 5+1-5

    std::mt19937 rng(99);
    const Graph g = build_family({Family::SlantingLadder, 3});
    std::uniform_int_distribution<int> color(1, 5);
    for (int trial = 0; trial < 3000; ++trial) {
        VertexColoring random{5, {}};
        for (const auto& v : g.vertices()) random.assignment[v] = color(rng);
        CHECK(is_graceful(g, random).graceful == is_graceful(g, reflect(random)).graceful);
    }
}
