#include "treeshift/classdecomp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "treeshift/treewidth.hpp"

namespace treeshift {

ClassPredicate width_class(int w) {
    ClassPredicate p;
    p.name = "tw<=" + std::to_string(w);
    p.omega = w + 1;
    p.test = [w](const Graph& g) {
        if (g.n() == 0) return true;
        if (clique_number(g) > w + 1) return false;
        if (width(heuristic_decomposition(g)) <= w) return true;
        if (g.n() > kDefaultExactCeiling) return false;  // undecided counts as out
        return exact_treewidth(g).width <= w;
    };
    return p;
}

ClassPredicate apex_width_class(int mu, int w) {
    ClassPredicate base = width_class(w);
    ClassPredicate p;
    p.name = "apex" + std::to_string(mu) + "+tw<=" + std::to_string(w);
    p.omega = w + 1 + mu;
    p.test = [mu, base](const Graph& g) {
        // Enumerate apex candidates by increasing size.
        std::function<bool(VertexSet&, int, int)> go = [&](VertexSet& x, int start,
                                                           int left) -> bool {
            auto rest = induced_subgraph(g, [&] {
                VertexSet all;
                for (int v = 0; v < g.n(); ++v)
                    if (!set_contains(x, v)) all.push_back(v);
                return all;
            }());
            if (base.test(rest.graph)) return true;
            if (left == 0) return false;
            for (int v = start; v < g.n(); ++v) {
                x.push_back(v);
                if (go(x, v + 1, left - 1)) return true;
                x.pop_back();
            }
            return false;
        };
        VertexSet x;
        return go(x, 0, mu);
    };
    return p;
}

namespace {

// A piece in the recursion: a standalone graph (induced edges plus the
// accumulated separator cliques) with a map back to subject-graph ids.
struct Piece {
    Graph graph;
    VertexSet to_g;
};

struct Search {
    const ClassPredicate* p = nullptr;
    std::vector<std::string> rejection;
    std::map<std::string, std::optional<TreeDecomposition>> memo;

    std::string key(const Piece& piece) const {
        std::ostringstream ss;
        for (Vertex v : piece.to_g) ss << v << ',';
        ss << '|';
        for (auto [u, v] : piece.graph.edges())
            ss << piece.to_g[u] << '-' << piece.to_g[v] << ';';
        return ss.str();
    }

    // Returns a decomposition of the piece over subject-graph ids, rerooted
    // at a node whose block contains `required` (a clique of the piece), or
    // nullopt when the piece does not decompose over the class.
    std::optional<TreeDecomposition> solve(const Piece& piece, const VertexSet& required);
};

// Lexicographic size-then-content enumeration of subsets up to `max_size`.
void for_each_subset(int n, int max_size, const std::function<bool(const VertexSet&)>& fn) {
    VertexSet cur;
    // Size-major, then lexicographic: smaller separators win regardless of
    // content, ties go to the lexicographically least set.
    for (int s = 1; s <= max_size; ++s) {
        std::function<bool(int, int)> go = [&](int start, int target) -> bool {
            if (static_cast<int>(cur.size()) == target) return fn(cur);
            for (int v = start; v < n; ++v) {
                cur.push_back(v);
                if (go(v + 1, target)) return true;
                cur.pop_back();
            }
            return false;
        };
        if (go(0, s)) return;
    }
}

int find_node_with(const TreeDecomposition& td, const VertexSet& need) {
    for (int t = 0; t < td.node_count(); ++t)
        if (is_subset(need, td.blocks[t])) return t;
    return -1;
}

std::optional<TreeDecomposition> Search::solve(const Piece& piece, const VertexSet& required) {
    std::string k = key(piece);
    auto it = memo.find(k);
    if (it != memo.end()) {
        if (!it->second) return std::nullopt;
        TreeDecomposition td = *it->second;
        td.reroot(find_node_with(td, required));
        return td;
    }

    auto finish = [&](std::optional<TreeDecomposition> td) {
        memo[k] = td;
        if (td) td->reroot(find_node_with(*td, required));
        return td;
    };

    if (p->test(piece.graph)) {
        TreeDecomposition td;
        td.blocks = {piece.to_g};
        td.parent = {-1};
        td.rebuild_children();
        return finish(td);
    }

    std::optional<TreeDecomposition> found;
    for_each_subset(piece.graph.n(), p->omega, [&](const VertexSet& x_local) {
        VertexSet rest;
        for (int v = 0; v < piece.graph.n(); ++v)
            if (!set_contains(x_local, v)) rest.push_back(v);
        auto cut = induced_subgraph(piece.graph, rest);
        auto comps = connected_components(cut.graph);
        if (comps.size() < 2) return false;

        // Build the pieces <X ∪ C> ∪ K_X.
        std::vector<Piece> pieces;
        for (const auto& comp : comps) {
            VertexSet verts = x_local;
            for (Vertex v : comp) verts.push_back(cut.to_host[v]);
            verts = sorted_unique(std::move(verts));
            auto sg = induced_subgraph(piece.graph, verts);
            auto edges = sg.graph.edges();
            for (std::size_t a = 0; a < x_local.size(); ++a)
                for (std::size_t b = a + 1; b < x_local.size(); ++b) {
                    auto la = std::lower_bound(verts.begin(), verts.end(), x_local[a]);
                    auto lb = std::lower_bound(verts.begin(), verts.end(), x_local[b]);
                    edges.emplace_back(static_cast<Vertex>(la - verts.begin()),
                                       static_cast<Vertex>(lb - verts.begin()));
                }
            Piece sub;
            sub.graph = Graph::from_edges(sg.graph.n(), edges);
            for (Vertex v : verts) sub.to_g.push_back(piece.to_g[v]);
            pieces.push_back(std::move(sub));
        }

        VertexSet x_g;
        for (Vertex v : x_local) x_g.push_back(piece.to_g[v]);
        VertexSet req_g;
        for (Vertex v : required) req_g.push_back(v);

        // The required clique survives into exactly one piece (it cannot
        // straddle components); the others glue along X.
        int home = 0;
        for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
            if (is_subset(req_g, sorted_unique(VertexSet(pieces[i].to_g)))) {
                home = i;
                break;
            }

        std::vector<TreeDecomposition> sub_tds(pieces.size());
        for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
            auto td = solve(pieces[i], i == home ? req_g : x_g);
            if (!td) return false;
            sub_tds[i] = std::move(*td);
        }

        // Glue: home piece keeps its root; every other piece hangs off a
        // home-side node containing X.
        TreeDecomposition merged = sub_tds[home];
        int attach = find_node_with(merged, x_g);
        for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
            if (i == home) continue;
            int base = merged.node_count();
            const auto& td = sub_tds[i];
            for (int t = 0; t < td.node_count(); ++t) {
                merged.blocks.push_back(td.blocks[t]);
                merged.parent.push_back(t == td.root ? attach
                                                    : td.parent[t] + base);
            }
            // Parent offsets: non-root parents shifted by base.
        }
        merged.rebuild_children();
        found = std::move(merged);
        return true;
    });

    if (!found)
        rejection.push_back("piece {" + [&] {
            std::string s;
            for (Vertex v : piece.to_g) s += std::to_string(v + 1) + " ";
            return s;
        }() + "}: predicate fails and no separator of size <= " +
                            std::to_string(p->omega) + " splits it into decomposable pieces");
    return finish(found);
}

}  // namespace

ClassDecomposeResult decompose_over_class(const Graph& g, const ClassPredicate& p,
                                          int ceiling) {
    if (g.n() > ceiling)
        throw GraphError("decompose_over_class: graph exceeds ceiling " +
                         std::to_string(ceiling));
    ClassDecomposeResult res;
    if (g.n() == 0) {
        res.accepted = true;
        res.td.blocks = {{}};
        res.td.parent = {-1};
        res.td.rebuild_children();
        return res;
    }
    Search search;
    search.p = &p;
    Piece whole;
    whole.graph = g;
    for (int v = 0; v < g.n(); ++v) whole.to_g.push_back(v);
    auto td = search.solve(whole, {});
    if (td) {
        res.accepted = true;
        res.td = std::move(*td);
    } else {
        res.rejection = std::move(search.rejection);
        res.rejection.push_back("graph rejected for class " + p.name);
    }
    return res;
}

}  // namespace treeshift
