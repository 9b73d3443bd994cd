#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "treeshift/treedecomp.hpp"

using namespace treeshift;

namespace {

TreeDecomposition exact_td(const Graph& g) {
    if (g.n() == 0) {
        TreeDecomposition td;
        td.blocks = {{}};
        td.parent = {-1};
        td.rebuild_children();
        return td;
    }
    return exact_treewidth(g).decomposition;
}

// Straight-line subset oracle local to this file so DP failures cannot
// hide behind a shared implementation.
int local_opt(const Graph& g, ProblemKind kind) {
    int n = g.n();
    REQUIRE(n <= 20);
    auto edges = g.edges();
    int best = is_minimization(kind) ? n + 1 : -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        VertexSet x;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) x.push_back(v);
        if (!is_feasible(g, kind, x)) continue;
        int c = static_cast<int>(x.size());
        best = is_minimization(kind) ? std::min(best, c) : std::max(best, c);
    }
    return best;
}

}  // namespace

TEST_CASE("feasibility predicates") {
    Graph p3 = path_graph(3);
    CHECK(is_vertex_cover(p3, {1}));
    CHECK_FALSE(is_vertex_cover(p3, {0}));
    CHECK(is_dominating_set(p3, {1}));
    CHECK_FALSE(is_dominating_set(p3, {}));
    CHECK(is_independent_set(p3, {0, 2}));
    CHECK_FALSE(is_independent_set(p3, {0, 1}));
}

TEST_CASE("exact DP on named instances") {
    Graph p3 = path_graph(3);
    auto s = solve_exact_tw(p3, exact_td(p3), ProblemKind::VertexCover);
    CHECK(s.feasible);
    CHECK(s.value == 1);
    CHECK(s.vertices == VertexSet{1});

    Graph g33 = grid_graph(3, 3);
    auto td = exact_td(g33);
    auto is = solve_exact_tw(g33, td, ProblemKind::IndependentSet);
    CHECK(is.value == 5);
    CHECK(is_independent_set(g33, is.vertices));
    CHECK(is.value == local_opt(g33, ProblemKind::IndependentSet));

    auto ds = solve_exact_tw(g33, td, ProblemKind::DominatingSet);
    CHECK(ds.value == 3);
    CHECK(is_dominating_set(g33, ds.vertices));
    CHECK(ds.value == local_opt(g33, ProblemKind::DominatingSet));
}

TEST_CASE("brute force oracle on named instances") {
    CHECK(brute_force(cycle_graph(5), ProblemKind::VertexCover).value == 3);
    CHECK(brute_force(cycle_graph(5), ProblemKind::IndependentSet).value == 2);
    CHECK(brute_force(complete_graph(4), ProblemKind::DominatingSet).value == 1);
    CHECK_THROWS_AS(brute_force(grid_graph(5, 5), ProblemKind::VertexCover),
                    GraphError);
}

TEST_CASE("brute force honors constraints") {
    Graph c5 = cycle_graph(5);
    auto s = brute_force(c5, ProblemKind::VertexCover, {0}, {1});
    CHECK(s.feasible);
    CHECK(set_contains(s.vertices, 0));
    CHECK_FALSE(set_contains(s.vertices, 1));
    CHECK(is_vertex_cover(c5, s.vertices));

    // Forbidding both ends of an edge makes VC infeasible.
    auto bad = brute_force(path_graph(2), ProblemKind::VertexCover, {}, {0, 1});
    CHECK_FALSE(bad.feasible);

    // dominate_only: only vertex 4 needs domination.
    auto ds = brute_force(path_graph(5), ProblemKind::DominatingSet, {}, {},
                          VertexSet{4});
    CHECK(ds.value == 1);
}

TEST_CASE("DP equals brute force on trees and random graphs") {
    auto kinds = {ProblemKind::VertexCover, ProblemKind::DominatingSet,
                  ProblemKind::IndependentSet};
    for (auto& t : all_labeled_trees(5)) {
        auto td = heuristic_decomposition(t, EliminationStrategy::MinDegree);
        for (auto kind : kinds) {
            auto dp = solve_exact_tw(t, td, kind);
            auto bf = brute_force(t, kind);
            CHECK(dp.value == bf.value);
            CHECK(is_feasible(t, kind, dp.vertices));
        }
    }
    std::mt19937_64 rng(202);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_connected(4 + static_cast<int>(rng() % 6),
                                   0.25 + 0.05 * (rng() % 8), rng());
        auto td = exact_td(g);
        for (auto kind : kinds) {
            auto dp = solve_exact_tw(g, td, kind);
            auto bf = brute_force(g, kind);
            CHECK(dp.value == bf.value);
            CHECK(is_feasible(g, kind, dp.vertices));
        }
    }
}

TEST_CASE("DP honors forced and forbidden constraints") {
    std::mt19937_64 rng(303);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_connected(5 + static_cast<int>(rng() % 4), 0.35, rng());
        auto td = exact_td(g);
        VertexSet forced{static_cast<Vertex>(rng() % g.n())};
        VertexSet forbidden{static_cast<Vertex>(rng() % g.n())};
        if (forced == forbidden) continue;
        for (auto kind : {ProblemKind::VertexCover, ProblemKind::DominatingSet,
                          ProblemKind::IndependentSet}) {
            DpConstraints cons;
            cons.forced_in = forced;
            cons.forbidden = forbidden;
            auto bf = brute_force(g, kind, forced, forbidden);
            Solution dp;
            bool threw = false;
            try {
                dp = solve_exact_tw(g, td, kind, cons);
            } catch (const GraphError&) {
                threw = true;
            }
            if (threw) continue;
            CHECK(dp.feasible == bf.feasible);
            if (dp.feasible) {
                CHECK(dp.value == bf.value);
                CHECK(is_subset(forced, dp.vertices));
                CHECK(set_intersection(forbidden, dp.vertices).empty());
            }
        }
    }
}

TEST_CASE("constrained vertex cover examples") {
    Graph edge = path_graph(2);
    // G\U = single vertex 1, trivial decomposition.
    TreeDecomposition td;
    td.blocks = {{0}};
    td.parent = {-1};
    td.rebuild_children();

    auto covered = solve_vc_constrained(edge, {0}, {0}, td, {1});
    CHECK(covered.feasible);
    CHECK(covered.value == 0);

    auto forced = solve_vc_constrained(edge, {0}, {}, td, {1});
    CHECK(forced.feasible);
    CHECK(forced.vertices == VertexSet{1});

    Graph tri = complete_graph(3);
    TreeDecomposition td1;
    td1.blocks = {{0}};
    td1.parent = {-1};
    td1.rebuild_children();
    auto inf = solve_vc_constrained(tri, {0, 1}, {}, td1, {2});
    CHECK_FALSE(inf.feasible);
}

TEST_CASE("constrained vertex cover with empty U matches plain VC") {
    std::mt19937_64 rng(404);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected(5 + static_cast<int>(rng() % 5), 0.3, rng());
        auto td = exact_td(g);
        VertexSet all;
        for (Vertex v = 0; v < g.n(); ++v) all.push_back(v);
        auto a = solve_vc_constrained(g, {}, {}, td, all);
        auto b = solve_exact_tw(g, td, ProblemKind::VertexCover);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("constrained vertex cover is monotone in Y") {
    std::mt19937_64 rng(505);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_connected(6 + static_cast<int>(rng() % 4), 0.35, rng());
        VertexSet u;
        while (u.size() < 3) {
            Vertex v = static_cast<Vertex>(rng() % g.n());
            if (!set_contains(u, v)) u.push_back(v);
        }
        u = sorted_unique(u);
        VertexSet rest;
        for (Vertex v = 0; v < g.n(); ++v)
            if (!set_contains(u, v)) rest.push_back(v);
        auto sub = induced_subgraph(g, rest);
        auto td = exact_treewidth(sub.graph).decomposition;
        // |X(Y)| never grows when Y does.
        for (unsigned ym = 0; ym < 8u; ++ym) {
            VertexSet y;
            for (int i = 0; i < 3; ++i)
                if ((ym >> i) & 1) y.push_back(u[i]);
            auto base = solve_vc_constrained(g, u, y, td, sub.to_host);
            for (int i = 0; i < 3; ++i) {
                if (set_contains(y, u[i])) continue;
                auto bigger = solve_vc_constrained(
                    g, u, sorted_unique(set_union(y, {u[i]})), td, sub.to_host);
                if (base.feasible) {
                    REQUIRE(bigger.feasible);
                    CHECK(bigger.value <= base.value);
                }
            }
            if (base.feasible) {
                CHECK(is_vertex_cover(g, set_union(base.vertices, y)));
                auto oracle =
                    brute_force(g, ProblemKind::VertexCover, y, set_difference(u, y));
                CHECK(base.value + static_cast<int>(y.size()) == oracle.value);
            }
        }
    }
}

TEST_CASE("dominating strip solver examples") {
    Graph p5 = path_graph(5);
    VertexSet all{0, 1, 2, 3, 4};
    auto td = exact_td(p5);
    auto one = solve_ds_strip(p5, all, {1, 2, 3}, td, all);
    CHECK(one.feasible);
    CHECK(one.value == 1);
    CHECK(one.vertices == VertexSet{2});

    auto zero = solve_ds_strip(p5, all, {}, td, all);
    CHECK(zero.value == 0);

    Graph g33 = grid_graph(3, 3);
    VertexSet all9;
    for (Vertex v = 0; v < 9; ++v) all9.push_back(v);
    auto td9 = exact_td(g33);
    auto full = solve_ds_strip(g33, all9, all9, td9, all9);
    CHECK(full.value == 3);
    CHECK(is_dominating_set(g33, full.vertices));
}

TEST_CASE("strip solver with full interior matches plain dominating set") {
    std::mt19937_64 rng(606);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected(5 + static_cast<int>(rng() % 5), 0.3, rng());
        VertexSet all;
        for (Vertex v = 0; v < g.n(); ++v) all.push_back(v);
        auto td = exact_td(g);
        auto strip = solve_ds_strip(g, all, all, td, all);
        auto plain = solve_exact_tw(g, td, ProblemKind::DominatingSet);
        CHECK(strip.value == plain.value);
    }
}

TEST_CASE("solutions carry consistent metadata") {
    Graph g = cycle_graph(6);
    auto s = solve_exact_tw(g, exact_td(g), ProblemKind::VertexCover);
    CHECK(s.value == static_cast<int>(s.vertices.size()));
    CHECK(s.kind == ProblemKind::VertexCover);
    CHECK(std::is_sorted(s.vertices.begin(), s.vertices.end()));
}
