#include "treeshift/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

namespace treeshift {

namespace {

// Dense adjacency used by the elimination simulations.
struct DenseGraph {
    int n = 0;
    std::vector<char> mat;  // n*n
    std::vector<int> deg;

    explicit DenseGraph(const Graph& g) : n(g.n()), mat(std::size_t(g.n()) * g.n(), 0), deg(g.n(), 0) {
        for (auto [u, v] : g.edges()) add_edge(u, v);
    }
    bool edge(int u, int v) const { return mat[std::size_t(u) * n + v] != 0; }
    void add_edge(int u, int v) {
        if (u == v || edge(u, v)) return;
        mat[std::size_t(u) * n + v] = mat[std::size_t(v) * n + u] = 1;
        ++deg[u];
        ++deg[v];
    }
    void remove_vertex(int v, const std::vector<char>& alive) {
        for (int u = 0; u < n; ++u)
            if (alive[u] && edge(u, v)) {
                mat[std::size_t(u) * n + v] = mat[std::size_t(v) * n + u] = 0;
                --deg[u];
                --deg[v];
            }
    }
    // Connects the alive neighborhood of v into a clique; returns fill count.
    int saturate(int v, const std::vector<char>& alive) {
        std::vector<int> nb;
        for (int u = 0; u < n; ++u)
            if (alive[u] && u != v && edge(u, v)) nb.push_back(u);
        int fill = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!edge(nb[i], nb[j])) {
                    add_edge(nb[i], nb[j]);
                    ++fill;
                }
        return fill;
    }
    int fill_cost(int v, const std::vector<char>& alive) const {
        std::vector<int> nb;
        for (int u = 0; u < n; ++u)
            if (alive[u] && u != v && edge(u, v)) nb.push_back(u);
        int fill = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!edge(nb[i], nb[j])) ++fill;
        return fill;
    }
};

std::vector<Vertex> elimination_order(const Graph& g, EliminationStrategy strategy) {
    DenseGraph d(g);
    std::vector<char> alive(g.n(), 1);
    std::vector<Vertex> order;
    order.reserve(g.n());
    for (int step = 0; step < g.n(); ++step) {
        int best = -1;
        long best_key = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (!alive[v]) continue;
            long key = strategy == EliminationStrategy::MinDegree
                           ? d.deg[v]
                           : d.fill_cost(v, alive);
            if (best < 0 || key < best_key) {  // ties go to the lowest id
                best = v;
                best_key = key;
            }
        }
        d.saturate(best, alive);
        d.remove_vertex(best, alive);
        alive[best] = 0;
        order.push_back(best);
    }
    return order;
}

}  // namespace

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
    if (g.n() == 0) {
        TreeDecomposition td;
        td.blocks.push_back({});
        td.parent.push_back(-1);
        td.rebuild_children();
        return td;
    }
    if (static_cast<int>(order.size()) != g.n())
        throw GraphError("elimination order length mismatch");
    DenseGraph d(g);
    std::vector<char> alive(g.n(), 1);
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;

    std::vector<VertexSet> bags(g.n());
    for (int i = 0; i < g.n(); ++i) {
        int v = order[i];
        VertexSet bag{v};
        for (int u = 0; u < g.n(); ++u)
            if (alive[u] && u != v && d.edge(u, v)) bag.push_back(u);
        bags[i] = sorted_unique(std::move(bag));
        d.saturate(v, alive);
        d.remove_vertex(v, alive);
        alive[v] = 0;
    }

    TreeDecomposition td;
    td.blocks = bags;
    td.parent.assign(g.n(), -1);
    // Parent of bag i: the bag of the earliest-eliminated other member; bags
    // with no later neighbor (component roots) chain onto the final bag.
    for (int i = 0; i < g.n(); ++i) {
        int best = -1;
        for (Vertex u : bags[i])
            if (u != order[i] && (best < 0 || pos[u] < best)) best = pos[u];
        if (best >= 0)
            td.parent[i] = best;
        else if (i != g.n() - 1)
            td.parent[i] = g.n() - 1;
    }
    td.rebuild_children();
    return td;
}

TreeDecomposition heuristic_decomposition(const Graph& g, EliminationStrategy strategy) {
    return decomposition_from_order(g, elimination_order(g, strategy));
}

int clique_number(const Graph& g) {
    if (g.n() == 0) return 0;
    if (g.n() > 64) {
        // Greedy fallback above the bitset range; only used as a bound.
        int best = 0;
        for (Vertex v = 0; v < g.n(); ++v) {
            VertexSet c{v};
            for (Vertex u : g.neighbors(v)) {
                bool ok = true;
                for (Vertex w : c)
                    if (!g.has_edge(u, w)) { ok = false; break; }
                if (ok) c.push_back(u);
            }
            best = std::max<int>(best, static_cast<int>(c.size()));
        }
        return best;
    }
    std::vector<std::uint64_t> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
    int best = 0;
    // Bron–Kerbosch with pivot.
    auto expand = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (p == 0 && x == 0) {
            best = std::max(best, std::popcount(r));
            return;
        }
        if (std::popcount(r) + std::popcount(p) <= best) return;
        std::uint64_t px = p | x;
        int pivot = std::countr_zero(px);
        int best_cover = -1;
        for (std::uint64_t s = px; s; s &= s - 1) {
            int u = std::countr_zero(s);
            int cover = std::popcount(p & adj[u]);
            if (cover > best_cover) { best_cover = cover; pivot = u; }
        }
        for (std::uint64_t cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
            int v = std::countr_zero(cand);
            std::uint64_t bit = 1ull << v;
            self(self, r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    std::uint64_t all = g.n() == 64 ? ~0ull : (1ull << g.n()) - 1;
    expand(expand, 0, all, 0);
    return best;
}

int mmd_lower_bound(const Graph& g) {
    DenseGraph d(g);
    std::vector<char> alive(g.n(), 1);
    int bound = 0;
    for (int step = 0; step < g.n(); ++step) {
        int best = -1;
        for (int v = 0; v < g.n(); ++v)
            if (alive[v] && (best < 0 || d.deg[v] < d.deg[best])) best = v;
        bound = std::max(bound, d.deg[best]);
        d.remove_vertex(best, alive);
        alive[best] = 0;
    }
    return bound;
}

namespace {

// Branch-and-bound "is tw(G) <= w" decision over elimination orderings.
// Adjacency after eliminating a vertex set is order-independent, so failed
// eliminated-sets are memoized per target width.
struct BBContext {
    int n;
    int target;
    std::int64_t* budget;
    std::unordered_set<std::uint64_t>* failed;
    std::vector<Vertex>* order_out;
};

bool bb_decide(BBContext& ctx, std::vector<std::uint32_t>& adj, std::uint32_t remaining,
               std::vector<Vertex>& order) {
    int rem = std::popcount(remaining);
    if (rem <= ctx.target + 1) {
        for (std::uint32_t s = remaining; s; s &= s - 1)
            order.push_back(std::countr_zero(s));
        return true;
    }
    if (--*ctx.budget <= 0) throw std::overflow_error("node budget exhausted");
    if (ctx.failed->count(remaining)) return false;

    // Eliminate simplicial vertices of fitting degree greedily; always safe.
    for (std::uint32_t s = remaining; s; s &= s - 1) {
        int v = std::countr_zero(s);
        std::uint32_t nb = adj[v] & remaining;
        int deg = std::popcount(nb);
        if (deg > ctx.target) continue;
        bool simplicial = true;
        for (std::uint32_t t = nb; t && simplicial; t &= t - 1) {
            int u = std::countr_zero(t);
            if ((nb & ~adj[u] & ~(1u << u)) != 0) simplicial = false;
        }
        if (simplicial) {
            order.push_back(v);
            bool ok = bb_decide(ctx, adj, remaining & ~(1u << v), order);
            if (!ok) {
                order.pop_back();
                ctx.failed->insert(remaining);
            }
            return ok;
        }
    }

    // Branch on candidates by ascending fill-in, then degree, then id.
    std::vector<std::tuple<int, int, int>> cands;
    for (std::uint32_t s = remaining; s; s &= s - 1) {
        int v = std::countr_zero(s);
        std::uint32_t nb = adj[v] & remaining;
        int deg = std::popcount(nb);
        if (deg > ctx.target) continue;
        int fill = 0;
        for (std::uint32_t t = nb; t; t &= t - 1) {
            int u = std::countr_zero(t);
            fill += std::popcount(nb & ~adj[u] & ~(1u << u));
        }
        cands.emplace_back(fill / 2, deg, v);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [fill, deg, v] : cands) {
        std::uint32_t nb = adj[v] & remaining;
        std::vector<std::pair<int, std::uint32_t>> saved;
        for (std::uint32_t t = nb; t; t &= t - 1) {
            int u = std::countr_zero(t);
            saved.emplace_back(u, adj[u]);
            adj[u] |= nb & ~(1u << u);
        }
        order.push_back(v);
        if (bb_decide(ctx, adj, remaining & ~(1u << v), order)) return true;
        order.pop_back();
        for (auto [u, old] : saved) adj[u] = old;
    }
    ctx.failed->insert(remaining);
    return false;
}

}  // namespace

ExactTreewidthResult exact_treewidth(const Graph& g, std::int64_t node_budget, int ceiling) {
    if (g.n() > ceiling)
        throw GraphError("exact_treewidth: n=" + std::to_string(g.n()) +
                         " over ceiling " + std::to_string(ceiling));
    ExactTreewidthResult res;
    if (g.n() == 0) {
        res.width = -1;
        res.lower_bound = -1;
        res.decomposition = decomposition_from_order(g, {});
        return res;
    }
    auto heur_order = elimination_order(g, EliminationStrategy::MinFill);
    auto heur_td = decomposition_from_order(g, heur_order);
    int ub = width(heur_td);
    int lb = std::max(clique_number(g) - 1, mmd_lower_bound(g));
    res.decomposition = heur_td;
    res.width = ub;
    res.lower_bound = lb;
    if (lb >= ub) return res;

    std::vector<std::uint32_t> base(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        base[u] |= 1u << v;
        base[v] |= 1u << u;
    }
    std::uint32_t all = g.n() == 32 ? ~0u : (1u << g.n()) - 1;
    std::int64_t budget = node_budget;
    for (int w = lb; w < ub; ++w) {
        std::unordered_set<std::uint64_t> failed;
        std::vector<Vertex> order;
        BBContext ctx{g.n(), w, &budget, &failed, &order};
        auto adj = base;
        try {
            if (bb_decide(ctx, adj, all, order)) {
                res.width = w;
                res.decomposition = decomposition_from_order(g, order);
                return res;
            }
        } catch (const std::overflow_error&) {
            res.exact = false;
            res.lower_bound = std::max(lb, w);  // widths < w were refuted
            return res;
        }
        res.lower_bound = w + 1;
    }
    return res;  // heuristic width confirmed optimal
}

}  // namespace treeshift
