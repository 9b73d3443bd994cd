#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <functional>
#include <queue>
#include <random>

#include "treeshift/dp.hpp"
#include "treeshift/generate.hpp"
#include "treeshift/treewidth.hpp"

namespace th = treeshift;

// Independent BFS used to cross-check the library's layer machinery.
inline std::vector<int> naive_distances(const th::Graph& g, th::Vertex s) {
    std::vector<int> d(g.n(), -1);
    std::queue<th::Vertex> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        th::Vertex v = q.front();
        q.pop();
        for (th::Vertex u : g.neighbors(v))
            if (d[u] < 0) {
                d[u] = d[v] + 1;
                q.push(u);
            }
    }
    return d;
}

// All labeled trees on n vertices via Pruefer sequences.
inline std::vector<th::Graph> all_labeled_trees(int n) {
    std::vector<th::Graph> out;
    if (n == 1) {
        out.push_back(th::Graph(1));
        return out;
    }
    if (n == 2) {
        out.push_back(th::Graph::from_edges(2, {{0, 1}}));
        return out;
    }
    std::vector<int> code(n - 2, 0);
    while (true) {
        std::vector<int> deg(n, 1);
        for (int c : code) ++deg[c];
        std::vector<std::pair<th::Vertex, th::Vertex>> edges;
        std::vector<int> degs = deg;
        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 0; v < n; ++v)
            if (degs[v] == 1) leaves.push(v);
        for (int c : code) {
            int leaf = leaves.top();
            leaves.pop();
            edges.emplace_back(leaf, c);
            if (--degs[c] == 1) leaves.push(c);
        }
        int a = leaves.top();
        leaves.pop();
        int b = leaves.top();
        edges.emplace_back(a, b);
        out.push_back(th::Graph::from_edges(n, edges));
        int pos = n - 3;
        while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
        if (pos < 0) break;
        ++code[pos];
    }
    return out;
}

// Exhaustive elimination-order tree-width, independent of the solver under
// test. Exponential; n <= 9 or so.
inline int brute_treewidth(const th::Graph& g) {
    int n = g.n();
    std::vector<unsigned> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (th::Vertex u : g.neighbors(v)) adj[v] |= 1u << u;
    std::vector<int> memo(1u << n, -2);
    std::function<int(unsigned)> solve = [&](unsigned left) -> int {
        if (memo[left] != -2) return memo[left];
        int cnt = __builtin_popcount(left);
        if (cnt <= 1) return memo[left] = 0;
        // Rebuild the fill graph for `left` from scratch: eliminate V\left in
        // any order (fill graphs are order independent).
        std::vector<unsigned> a = adj;
        unsigned gone = ((1u << n) - 1) & ~left;
        while (gone) {
            int v = __builtin_ctz(gone);
            gone &= gone - 1;
            unsigned nb = a[v] & ~(1u << v);
            for (int u = 0; u < n; ++u)
                if ((nb >> u) & 1) a[u] = (a[u] | nb) & ~(1u << u) & ~(1u << v);
            a[v] = 0;
        }
        // Mask out already-eliminated vertices from neighborhoods.
        for (int u = 0; u < n; ++u) a[u] &= left;
        int best = n;
        for (int v = 0; v < n; ++v)
            if ((left >> v) & 1) {
                int d = __builtin_popcount(a[v]);
                best = std::min(best, std::max(d, solve(left & ~(1u << v))));
            }
        return memo[left] = best;
    };
    return solve((1u << n) - 1);
}

#endif
