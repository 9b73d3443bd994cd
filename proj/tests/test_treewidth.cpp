#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "treeshift/treedecomp.hpp"

using namespace treeshift;

TEST_CASE("exact tree-width of small named graphs") {
    auto k4 = exact_treewidth(complete_graph(4));
    CHECK(k4.width == 3);
    CHECK(k4.exact);
    CHECK(validate(complete_graph(4), k4.decomposition).valid());

    auto c6 = exact_treewidth(cycle_graph(6));
    CHECK(c6.width == 2);
    CHECK(c6.exact);

    auto grid = exact_treewidth(grid_graph(4, 4));
    CHECK(grid.width == 4);
    CHECK(grid.exact);
    CHECK(width(grid.decomposition) == 4);
    CHECK(validate(grid_graph(4, 4), grid.decomposition).valid());
}

TEST_CASE("exact solver refuses oversized inputs") {
    CHECK_THROWS_AS(exact_treewidth(grid_graph(6, 6)), GraphError);
}

TEST_CASE("exact solver agrees with an exhaustive elimination search") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 40; ++it) {
        int n = 4 + static_cast<int>(rng() % 6);  // up to 9
        Graph g = random_connected(n, 0.25 + 0.05 * (rng() % 8), rng());
        auto res = exact_treewidth(g);
        REQUIRE(res.exact);
        CHECK(res.width == brute_treewidth(g));
        CHECK(width(res.decomposition) == res.width);
        CHECK(validate(g, res.decomposition).valid());
    }
}

TEST_CASE("heuristic decomposition is valid and exact on easy shapes") {
    Graph tree = path_graph(7);
    auto td = heuristic_decomposition(tree);
    CHECK(validate(tree, td).valid());
    CHECK(width(td) == 1);

    for (auto& t : all_labeled_trees(6)) {
        auto tw = heuristic_decomposition(t, EliminationStrategy::MinDegree);
        CHECK(validate(t, tw).valid());
        CHECK(width(tw) == 1);
    }

    Graph k5 = complete_graph(5);
    auto td5 = heuristic_decomposition(k5);
    CHECK(validate(k5, td5).valid());
    CHECK(width(td5) == 4);

    Graph g8 = grid_graph(8, 8);
    auto td8 = heuristic_decomposition(g8);
    CHECK(validate(g8, td8).valid());
    CHECK(width(td8) >= 8);
    CHECK(width(td8) <= 10);
}

TEST_CASE("heuristic is deterministic") {
    Graph g = random_connected(30, 0.15, 9);
    auto a = heuristic_decomposition(g);
    auto b = heuristic_decomposition(g);
    CHECK(a.blocks == b.blocks);
    CHECK(a.parent == b.parent);
}

TEST_CASE("heuristic never beats the exact width") {
    std::mt19937_64 rng(123);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected(6 + static_cast<int>(rng() % 5), 0.3, rng());
        auto exact = exact_treewidth(g);
        for (auto strat : {EliminationStrategy::MinFill, EliminationStrategy::MinDegree}) {
            auto td = heuristic_decomposition(g, strat);
            CHECK(validate(g, td).valid());
            CHECK(width(td) >= exact.width);
        }
    }
}

TEST_CASE("lower bounds bracket the exact width") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected(5 + static_cast<int>(rng() % 5), 0.35, rng());
        auto res = exact_treewidth(g);
        CHECK(clique_number(g) - 1 <= res.width);
        CHECK(mmd_lower_bound(g) <= res.width);
    }
}

TEST_CASE("every clique fits inside some block of a valid decomposition") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 15; ++it) {
        Graph g = random_connected(7 + static_cast<int>(rng() % 4), 0.4, rng());
        auto td = heuristic_decomposition(g);
        REQUIRE(validate(g, td).valid());
        // Enumerate maximal-ish cliques by brute force over subsets.
        int n = g.n();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            VertexSet x;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) x.push_back(v);
            if (x.size() < 2 || !is_clique(g, x)) continue;
            bool housed = false;
            for (const auto& b : td.blocks)
                if (is_subset(x, b)) { housed = true; break; }
            CHECK(housed);
        }
    }
}

TEST_CASE("decomposition from an elimination order is always valid") {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 10; ++it) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = random_connected(n, 0.3, rng());
        std::vector<Vertex> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        auto td = decomposition_from_order(g, order);
        CHECK(validate(g, td).valid());
        CHECK(width(td) >= exact_treewidth(g).width);
    }
}
