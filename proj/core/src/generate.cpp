#include "treeshift/generate.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace treeshift {

namespace {
using Edges = std::vector<std::pair<Vertex, Vertex>>;
}

Graph grid_graph(int rows, int cols) {
    Edges edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, edges);
}

Graph path_graph(int n) {
    Edges edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    Edges edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    if (n > 2) edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    Edges edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph k_tree(int n, int k, std::uint64_t seed) {
    if (n < k + 1) throw GraphError("k-tree needs at least k+1 vertices");
    std::mt19937_64 rng(seed);
    Edges edges;
    std::vector<VertexSet> cliques;
    VertexSet first;
    for (int v = 0; v <= k; ++v) first.push_back(v);
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
    for (std::size_t i = 0; i < first.size(); ++i) {
        VertexSet c;
        for (std::size_t j = 0; j < first.size(); ++j)
            if (j != i) c.push_back(first[j]);
        cliques.push_back(c);
    }
    for (int v = k + 1; v < n; ++v) {
        const auto& c = cliques[rng() % cliques.size()];
        for (Vertex u : c) edges.emplace_back(u, v);
        for (std::size_t i = 0; i < c.size(); ++i) {
            VertexSet nc;
            for (std::size_t j = 0; j < c.size(); ++j)
                if (j != i) nc.push_back(c[j]);
            nc.push_back(v);
            cliques.push_back(sorted_unique(std::move(nc)));
        }
    }
    return Graph::from_edges(n, edges);
}

Graph apex_over(const Graph& base, int extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Edges edges = base.edges();
    int n = base.n();
    for (int a = 0; a < extra; ++a) {
        Vertex apex = n + a;
        int wired = 0;
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) {
                edges.emplace_back(v, apex);
                ++wired;
            }
        if (wired == 0) edges.emplace_back(static_cast<Vertex>(rng() % n), apex);
    }
    return Graph::from_edges(n + extra, edges);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Edges edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph stacked_planar(int n, int deletions, std::uint64_t seed) {
    if (n < 3) return path_graph(n);
    std::mt19937_64 rng(seed);
    Edges edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::size_t f = rng() % faces.size();
        auto face = faces[f];
        for (Vertex u : face) edges.emplace_back(u, v);
        faces[f] = {face[0], face[1], v};
        faces.push_back({face[0], face[2], v});
        faces.push_back({face[1], face[2], v});
    }
    Graph g = Graph::from_edges(n, edges);
    for (int d = 0; d < deletions; ++d) {
        auto all = g.edges();
        bool removed = false;
        for (int attempt = 0; attempt < 30 && !removed; ++attempt) {
            auto pick = all[rng() % all.size()];
            Edges kept;
            for (auto e : all)
                if (e != pick) kept.push_back(e);
            Graph h = Graph::from_edges(n, kept);
            if (is_connected(h)) {
                g = std::move(h);
                removed = true;
            }
        }
        if (!removed) break;
    }
    return g;
}

Graph bounded_degree_graph(int n, int max_degree, std::uint64_t seed) {
    if (max_degree < 2) throw GraphError("degree bound must be at least 2");
    std::mt19937_64 rng(seed);
    std::vector<int> deg(n, 0);
    Edges edges;
    for (int v = 1; v < n; ++v) {
        // Attach to a random earlier vertex with spare degree.
        std::vector<Vertex> cand;
        for (int u = 0; u < v; ++u)
            if (deg[u] < max_degree) cand.push_back(u);
        if (cand.empty()) throw GraphError("degree bound too tight for n");
        Vertex u = cand[rng() % cand.size()];
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    for (int attempt = 0; attempt < 4 * n; ++attempt) {
        Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
        if (u == v || deg[u] >= max_degree || deg[v] >= max_degree) continue;
        bool dup = false;
        for (auto e : edges)
            if ((e.first == std::min(u, v) && e.second == std::max(u, v)) ||
                (e.first == std::max(u, v) && e.second == std::min(u, v)))
                dup = true;
        if (dup) continue;
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    return Graph::from_edges(n, edges);
}

CliqueSumInstance clique_sum_of(int parts, int part_size, int adhesion, int apexes,
                                std::uint64_t seed) {
    if (parts < 1 || part_size < std::max(adhesion, 1))
        throw GraphError("bad clique-sum shape");
    std::mt19937_64 rng(seed);
    Edges edges;
    std::vector<VertexSet> base_ids(parts);  // piece-local base -> graph id
    int next_id = 0;

    for (int i = 0; i < parts; ++i) {
        Graph local = stacked_planar(part_size, part_size / 4, rng());
        VertexSet ids(part_size);
        if (i == 0) {
            for (int j = 0; j < part_size; ++j) ids[j] = next_id++;
        } else {
            // Share `adhesion` vertices with the previous piece.
            VertexSet pool = base_ids[i - 1];
            std::shuffle(pool.begin(), pool.end(), rng);
            for (int j = 0; j < adhesion; ++j) ids[j] = pool[j];
            for (int j = adhesion; j < part_size; ++j) ids[j] = next_id++;
            // The shared set becomes a clique on both sides.
            for (int a = 0; a < adhesion; ++a)
                for (int b = a + 1; b < adhesion; ++b) edges.emplace_back(ids[a], ids[b]);
        }
        for (auto [u, v] : local.edges()) edges.emplace_back(ids[u], ids[v]);
        base_ids[i] = ids;
    }

    // Apexes wire into their own piece only.
    std::vector<VertexSet> apex_ids(parts);
    for (int i = 0; i < parts; ++i)
        for (int a = 0; a < apexes; ++a) {
            Vertex apex = next_id++;
            apex_ids[i].push_back(apex);
            int wired = 0;
            for (Vertex v : base_ids[i])
                if (rng() % 3 == 0) {
                    edges.emplace_back(v, apex);
                    ++wired;
                }
            if (wired == 0) edges.emplace_back(base_ids[i][rng() % base_ids[i].size()], apex);
        }

    CliqueSumInstance inst;
    inst.graph = Graph::from_edges(next_id, edges);
    inst.decomposition.tree.blocks.resize(parts);
    inst.decomposition.tree.parent.assign(parts, -1);
    inst.decomposition.apex.resize(parts);
    for (int i = 0; i < parts; ++i) {
        inst.decomposition.tree.blocks[i] =
            set_union(sorted_unique(base_ids[i]), sorted_unique(apex_ids[i]));
        inst.decomposition.tree.parent[i] = i - 1;
        inst.decomposition.apex[i] = sorted_unique(apex_ids[i]);
    }
    inst.decomposition.tree.rebuild_children();
    return inst;
}

}  // namespace treeshift
