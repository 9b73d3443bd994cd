#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "helpers.hpp"
#include "treeshift/graph.hpp"

using namespace treeshift;

TEST_CASE("parse edge list builds a path") {
    Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::EdgeList);
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("duplicate and reversed edge lines collapse") {
    Graph g = parse_graph("p edge 2 1\ne 1 2\ne 2 1\n", GraphFormat::EdgeList);
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
}

TEST_CASE("self loop is rejected") {
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n", GraphFormat::EdgeList),
                    ParseError);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_graph("p edge 3 2\ne 1 2\ne 9 1\n", GraphFormat::EdgeList);
        FAIL("out-of-range vertex accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("p edge 2 1\nnot a line\n", GraphFormat::EdgeList),
                    ParseError);
    CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\n", GraphFormat::EdgeList),
                    ParseError);
}

TEST_CASE("comment lines are ignored") {
    Graph g = parse_graph("c hello\np edge 2 1\nc mid\ne 1 2\n",
                          GraphFormat::EdgeList);
    CHECK(g.m() == 1);
}

TEST_CASE("serialize then parse round trips") {
    Graph g = grid_graph(3, 4);
    std::string text = serialize_graph(g);
    Graph h = parse_graph(text, GraphFormat::EdgeList);
    CHECK(g == h);
    CHECK(serialize_graph(h) == text);
}

TEST_CASE("bfs layers on a path and a clique") {
    Graph p3 = path_graph(3);
    BfsLayers l = bfs_layers(p3, 0);
    REQUIRE(l.levels.size() == 3);
    CHECK(l.levels[0] == VertexSet{0});
    CHECK(l.levels[1] == VertexSet{1});
    CHECK(l.levels[2] == VertexSet{2});
    CHECK(l.unreachable.empty());

    Graph k4 = complete_graph(4);
    BfsLayers lk = bfs_layers(k4, 2);
    REQUIRE(lk.levels.size() == 2);
    CHECK(lk.levels[0] == VertexSet{2});
    CHECK(lk.levels[1].size() == 3);
}

TEST_CASE("bfs layers report unreachable vertices separately") {
    Graph g = Graph::from_edges(4, {{0, 1}});
    BfsLayers l = bfs_layers(g, 0);
    CHECK(l.levels.size() == 2);
    CHECK(l.unreachable == VertexSet{2, 3});
}

TEST_CASE("5x5 grid layer sizes from the center") {
    Graph g = grid_graph(5, 5);
    Vertex center = 12;
    BfsLayers l = bfs_layers(g, center);
    std::vector<size_t> sizes;
    for (const auto& lv : l.levels) sizes.push_back(lv.size());
    CHECK(sizes == std::vector<size_t>{1, 4, 8, 8, 4});

    // Cross-check every level against an independent BFS.
    std::vector<int> d = naive_distances(g, center);
    for (int r = 0; r < static_cast<int>(l.levels.size()); ++r)
        for (Vertex w : l.levels[r]) CHECK(d[w] == r);
}

TEST_CASE("bfs layers partition reachable vertices, edges stay near") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_connected(3 + static_cast<int>(rng() % 20),
                                   0.2 + 0.05 * (rng() % 8), rng());
        Vertex v = static_cast<Vertex>(rng() % g.n());
        BfsLayers l = bfs_layers(g, v);
        std::vector<int> seen(g.n(), 0);
        for (const auto& lv : l.levels)
            for (Vertex w : lv) ++seen[w];
        for (Vertex w : l.unreachable) ++seen[w];
        for (int w = 0; w < g.n(); ++w) CHECK(seen[w] == 1);
        std::vector<int> level(g.n(), -1);
        for (int r = 0; r < static_cast<int>(l.levels.size()); ++r)
            for (Vertex w : l.levels[r]) level[w] = r;
        for (auto [a, b] : g.edges())
            if (level[a] >= 0 && level[b] >= 0)
                CHECK(std::abs(level[a] - level[b]) <= 1);
    }
}

TEST_CASE("level interval clamping conventions") {
    Graph g = grid_graph(5, 5);
    CHECK(level_interval(g, 12, 3, 1).empty());
    CHECK(level_interval(g, 12, -2, 1) == level_interval(g, 12, 0, 1));
    CHECK(level_interval(g, 12, -2, 1).size() == 5);
    CHECK(level_interval(g, 12, 1, 2).size() == 12);
    CHECK_THROWS_AS(level_interval(g, 99, 0, 1), GraphError);
}

TEST_CASE("level interval equals the union of layers") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected(4 + static_cast<int>(rng() % 14), 0.3, rng());
        Vertex v = static_cast<Vertex>(rng() % g.n());
        BfsLayers l = bfs_layers(g, v);
        int m = static_cast<int>(l.levels.size()) - 1;
        for (int i = -1; i <= m; ++i)
            for (int j = i; j <= m + 1; ++j) {
                VertexSet want;
                for (int r = std::max(0, i);
                     r <= std::min(j, m); ++r)
                    for (Vertex w : l.levels[r]) want.push_back(w);
                std::sort(want.begin(), want.end());
                CHECK(level_interval(g, v, i, j) == want);
            }
    }
}

TEST_CASE("induced subgraph examples") {
    Graph k4 = complete_graph(4);
    auto sub = induced_subgraph(k4, {0, 2, 3});
    CHECK(sub.graph.n() == 3);
    CHECK(sub.graph.m() == 3);

    Graph c6 = cycle_graph(6);
    auto alt = induced_subgraph(c6, {0, 2, 4});
    CHECK(alt.graph.m() == 0);

    Graph g33 = grid_graph(3, 3);
    auto row = induced_subgraph(g33, {3, 4, 5});
    CHECK(row.graph.n() == 3);
    CHECK(row.graph.m() == 2);
    std::vector<int> degs;
    for (int v = 0; v < 3; ++v) degs.push_back(row.graph.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 2});
    for (Vertex h : row.to_host) CHECK((h == 3 || h == 4 || h == 5));
    CHECK_THROWS_AS(induced_subgraph(k4, {0, 9}), GraphError);
}

TEST_CASE("contract ball on a path") {
    Graph p5 = path_graph(5);
    auto res = contract_ball(p5, 0, 1);
    CHECK(res.graph.n() == 4);
    CHECK(res.graph.m() == 3);
    res.witness.host = &p5;
    res.witness.pattern = &res.graph;
    CHECK(res.witness.check().empty());
    // Contracted vertex stands for {0,1}.
    CHECK(res.witness.branch_sets.at(res.contracted_vertex) == VertexSet{0, 1});
}

TEST_CASE("contract ball with radius zero is an isomorphic copy") {
    Graph g = grid_graph(3, 3);
    auto res = contract_ball(g, 4, 0);
    CHECK(res.graph.n() == g.n());
    CHECK(res.graph.m() == g.m());
    res.witness.host = &g;
    res.witness.pattern = &res.graph;
    CHECK(res.witness.check().empty());
}

TEST_CASE("contract ball shifts distances by the radius") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 15; ++it) {
        Graph g = random_connected(10 + static_cast<int>(rng() % 40), 0.12, rng());
        Vertex v = static_cast<Vertex>(rng() % g.n());
        int r = 1 + static_cast<int>(rng() % 2);
        auto res = contract_ball(g, v, r);
        res.witness.host = &g;
        res.witness.pattern = &res.graph;
        CHECK(res.witness.check().empty());
        std::vector<int> dg = naive_distances(g, v);
        std::vector<int> dh = naive_distances(res.graph, res.contracted_vertex);
        for (int w = 0; w < g.n(); ++w) {
            if (dg[w] < r + 1) continue;
            // Locate w in the contracted graph via to_host.
            for (int x = 0; x < res.graph.n(); ++x)
                if (x != res.contracted_vertex && res.to_host[x] == w)
                    CHECK(dh[x] == dg[w] - r);
        }
    }
}

TEST_CASE("contract ball of the whole 5x5 grid center at radius 1") {
    Graph g = grid_graph(5, 5);
    auto res = contract_ball(g, 12, 1);
    res.witness.host = &g;
    res.witness.pattern = &res.graph;
    CHECK(res.witness.check().empty());
    std::vector<int> dg = naive_distances(g, 12);
    std::vector<int> dh = naive_distances(res.graph, res.contracted_vertex);
    for (int x = 0; x < res.graph.n(); ++x) {
        if (x == res.contracted_vertex) continue;
        Vertex w = res.to_host[x];
        if (dg[w] >= 2) CHECK(dh[x] == dg[w] - 1);
    }
}

TEST_CASE("is_clique") {
    Graph k4 = complete_graph(4);
    CHECK(is_clique(k4, {0, 1, 2, 3}));
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(is_clique(c4, {0, 2}));
    CHECK(is_clique(c4, {}));
    CHECK(is_clique(c4, {1}));
    CHECK_THROWS_AS(is_clique(c4, {0, 7}), GraphError);
}

TEST_CASE("generators produce the advertised shapes") {
    Graph c4 = grid_graph(2, 2);
    CHECK(c4.n() == 4);
    CHECK(c4.m() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    Graph k5 = complete_graph(5);
    CHECK(k5.n() == 5);
    CHECK(k5.m() == 10);

    Graph cy = cycle_graph(6);
    CHECK(cy.n() == 6);
    CHECK(cy.m() == 6);

    Graph kt = k_tree(10, 3, 7);
    CHECK(kt.n() == 10);
    CHECK(clique_number(kt) >= 4);

    Graph bd = bounded_degree_graph(20, 3, 99);
    for (int v = 0; v < bd.n(); ++v) CHECK(bd.degree(v) <= 3);
    CHECK(is_connected(bd));
}

TEST_CASE("generators are deterministic per seed") {
    CHECK(random_connected(12, 0.3, 42) == random_connected(12, 0.3, 42));
    CHECK(stacked_planar(15, 2, 8) == stacked_planar(15, 2, 8));
    auto a = clique_sum_of(3, 6, 2, 1, 5);
    auto b = clique_sum_of(3, 6, 2, 1, 5);
    CHECK(a.graph == b.graph);
}

TEST_CASE("clique_sum_of emits a valid ground-truth decomposition") {
    auto inst = clique_sum_of(2, 3, 1, 0, 3);
    CHECK(inst.decomposition.node_count() == 2);
    CHECK(validate(inst.graph, inst.decomposition.tree).valid());
    CHECK(adhesion(inst.decomposition.tree) == 1);

    auto big = clique_sum_of(4, 8, 3, 2, 17);
    CHECK(validate(big.graph, big.decomposition.tree).valid());
    CHECK(is_connected(big.graph));
    for (size_t t = 0; t < big.decomposition.apex.size(); ++t) {
        CHECK(big.decomposition.apex[t].size() <= 2);
        CHECK(is_subset(big.decomposition.apex[t],
                        big.decomposition.tree.blocks[t]));
    }
}

TEST_CASE("set helpers behave") {
    VertexSet a{1, 3, 5}, b{3, 4, 5};
    CHECK(set_union(a, b) == VertexSet{1, 3, 4, 5});
    CHECK(set_intersection(a, b) == VertexSet{3, 5});
    CHECK(set_difference(a, b) == VertexSet{1});
    CHECK(set_contains(a, 3));
    CHECK_FALSE(set_contains(a, 2));
    CHECK(is_subset(VertexSet{3, 5}, a));
    CHECK_FALSE(is_subset(b, a));
}
