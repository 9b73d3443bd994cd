#include "treeshift/treedecomp.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace treeshift {

void TreeDecomposition::rebuild_children() {
    children.assign(blocks.size(), {});
    for (int t = 0; t < node_count(); ++t) {
        if (parent[t] < 0)
            root = t;
        else
            children[parent[t]].push_back(t);
    }
}

void TreeDecomposition::reroot(int new_root) {
    // Flip parent pointers along the path from new_root to the old root.
    std::vector<int> path;
    for (int t = new_root; t != -1; t = parent[t]) path.push_back(t);
    for (std::size_t i = path.size(); i-- > 1;) parent[path[i]] = path[i - 1];
    parent[new_root] = -1;
    root = new_root;
    rebuild_children();
}

VertexSet TreeDecomposition::adhesion_set(int t) const {
    if (parent[t] < 0) return {};
    return set_intersection(blocks[t], blocks[parent[t]]);
}

TreeDecomposition PathDecomposition::as_tree() const {
    TreeDecomposition td;
    td.blocks = blocks;
    td.parent.assign(blocks.size(), -1);
    for (std::size_t i = 1; i < blocks.size(); ++i) td.parent[i] = static_cast<int>(i - 1);
    td.rebuild_children();
    return td;
}

int PathDecomposition::width() const {
    int w = -1;
    for (const auto& b : blocks) w = std::max<int>(w, static_cast<int>(b.size()) - 1);
    return w;
}

ValidityReport validate(const Graph& g, const TreeDecomposition& td) {
    ValidityReport rep;
    if (td.blocks.empty()) {
        if (g.n() > 0) rep.violations.push_back("empty decomposition of a non-empty graph");
        return rep;
    }
    if (td.parent.size() != td.blocks.size()) {
        rep.violations.push_back("parent array size mismatch");
        return rep;
    }
    int roots = 0;
    for (int t = 0; t < td.node_count(); ++t) {
        if (td.parent[t] == -1) ++roots;
        else if (td.parent[t] < 0 || td.parent[t] >= td.node_count())
            rep.violations.push_back("node " + std::to_string(t) + " has invalid parent");
    }
    if (roots != 1) rep.violations.push_back("decomposition tree must have exactly one root");
    // Tree acyclicity: every node must reach the root.
    for (int t = 0; t < td.node_count(); ++t) {
        int steps = 0, u = t;
        while (u != -1 && steps <= td.node_count()) { u = td.parent[u]; ++steps; }
        if (u != -1 || steps > td.node_count()) {
            rep.violations.push_back("parent pointers contain a cycle");
            return rep;
        }
    }

    std::vector<std::vector<int>> occ(g.n());
    for (int t = 0; t < td.node_count(); ++t)
        for (Vertex v : td.blocks[t]) {
            if (v < 0 || v >= g.n()) {
                rep.violations.push_back("block " + std::to_string(t) +
                                         " references out-of-range vertex " + std::to_string(v));
                continue;
            }
            occ[v].push_back(t);
        }

    for (Vertex v = 0; v < g.n(); ++v)
        if (occ[v].empty())
            rep.violations.push_back("vertex " + std::to_string(v) + " uncovered");

    for (auto [u, v] : g.edges()) {
        bool together = false;
        for (int t : occ[u])
            if (set_contains(td.blocks[t], v)) { together = true; break; }
        if (!together)
            rep.violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                     " uncovered");
    }

    // Connectivity of occurrence sets: within occ[v], every node except one
    // must have its parent in occ[v].
    for (Vertex v = 0; v < g.n(); ++v) {
        if (occ[v].size() <= 1) continue;
        int without_parent = 0;
        for (int t : occ[v]) {
            int p = td.parent[t];
            if (p < 0 || !set_contains(td.blocks[p], v)) ++without_parent;
        }
        if (without_parent != 1)
            rep.violations.push_back("occurrence set of vertex " + std::to_string(v) +
                                     " disconnected");
    }
    return rep;
}

int width(const TreeDecomposition& td) {
    int w = -1;
    for (const auto& b : td.blocks) w = std::max<int>(w, static_cast<int>(b.size()) - 1);
    return w;
}

int adhesion(const TreeDecomposition& td) {
    int a = 0;
    for (int t = 0; t < td.node_count(); ++t)
        a = std::max<int>(a, static_cast<int>(td.adhesion_set(t).size()));
    return a;
}

InducedSubgraph torso(const Graph& g, const TreeDecomposition& td, int t) {
    if (t < 0 || t >= td.node_count()) throw GraphError("unknown decomposition node");
    auto sub = induced_subgraph(g, td.blocks[t]);
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < static_cast<int>(sub.to_host.size()); ++i) local[sub.to_host[i]] = i;

    std::vector<std::pair<Vertex, Vertex>> extra = sub.graph.edges();
    auto add_clique = [&](const VertexSet& a) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                extra.emplace_back(local[a[i]], local[a[j]]);
    };
    add_clique(td.adhesion_set(t));
    for (int c = 0; c < td.node_count(); ++c)
        if (td.parent[c] == t) add_clique(td.adhesion_set(c));

    InducedSubgraph out;
    out.graph = Graph::from_edges(sub.graph.n(), extra);
    out.to_host = sub.to_host;
    return out;
}

void serialize_decomposition(const TreeDecomposition& td, int n, std::ostream& out) {
    out << "td " << td.node_count() << ' ' << width(td) + 1 << ' ' << n << '\n';
    for (int t = 0; t < td.node_count(); ++t) {
        out << "b " << t + 1;
        for (Vertex v : td.blocks[t]) out << ' ' << v + 1;
        out << '\n';
    }
    for (int t = 0; t < td.node_count(); ++t)
        if (td.parent[t] >= 0) out << "t " << td.parent[t] + 1 << ' ' << t + 1 << '\n';
}

std::string serialize_decomposition(const TreeDecomposition& td, int n) {
    std::ostringstream ss;
    serialize_decomposition(td, n, ss);
    return ss.str();
}

TreeDecomposition parse_decomposition(std::istream& in) {
    std::string line;
    int lineno = 0, nodes = -1;
    TreeDecomposition td;
    std::vector<std::pair<int, int>> tree_edges;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "td") {
            int w, n;
            if (!(ss >> nodes >> w >> n) || nodes < 0) fail("malformed td header");
            td.blocks.assign(nodes, {});
            td.parent.assign(nodes, -1);
        } else if (tag == "b") {
            int id;
            if (nodes < 0 || !(ss >> id) || id < 1 || id > nodes) fail("bad block id");
            VertexSet b;
            int v;
            while (ss >> v) b.push_back(v - 1);
            td.blocks[id - 1] = sorted_unique(std::move(b));
        } else if (tag == "t") {
            int p, c;
            if (nodes < 0 || !(ss >> p >> c) || p < 1 || p > nodes || c < 1 || c > nodes)
                fail("bad tree edge");
            tree_edges.emplace_back(p - 1, c - 1);
        } else {
            fail("unrecognized line prefix '" + tag + "'");
        }
    }
    if (nodes < 0) throw ParseError("missing td header");
    // Tolerate arbitrary edge orientation: orient from node 0 outward.
    std::vector<std::vector<int>> nbr(nodes);
    for (auto [p, c] : tree_edges) {
        nbr[p].push_back(c);
        nbr[c].push_back(p);
    }
    std::vector<char> seen(nodes, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    td.parent.assign(nodes, -1);
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int u : nbr[t])
            if (!seen[u]) {
                seen[u] = 1;
                td.parent[u] = t;
                q.push_back(u);
            }
    }
    for (int t = 0; t < nodes; ++t)
        if (!seen[t]) throw ParseError("decomposition tree is disconnected");
    td.rebuild_children();
    return td;
}

TreeDecomposition parse_decomposition(const std::string& text) {
    std::istringstream ss(text);
    return parse_decomposition(ss);
}

AttachResult attach_path(const Graph& g, const TreeDecomposition& td_g,
                         const Graph& h, const PathDecomposition& pd_h,
                         const std::vector<Vertex>& anchors_g,
                         const std::vector<Vertex>& anchors_h) {
    const std::size_t m = pd_h.blocks.size();
    if (anchors_g.size() != m || anchors_h.size() != m)
        throw GraphError("anchor count must equal the number of path blocks");
    for (std::size_t i = 0; i < m; ++i) {
        g.check_vertex(anchors_g[i]);
        h.check_vertex(anchors_h[i]);
        if (!set_contains(pd_h.blocks[i], anchors_h[i]))
            throw GraphError("anchor x_" + std::to_string(i + 1) +
                             " not in path block " + std::to_string(i + 1));
        if (i > 0 && anchors_g[i] != anchors_g[i - 1] &&
            !g.has_edge(anchors_g[i - 1], anchors_g[i]))
            throw GraphError("anchors x_" + std::to_string(i) + ",x_" + std::to_string(i + 1) +
                             " not consecutive on a path in G");
    }

    // Combined id space: G keeps its ids, non-anchor H vertices appended.
    std::vector<Vertex> embed(h.n(), -1);
    for (std::size_t i = 0; i < m; ++i) embed[anchors_h[i]] = anchors_g[i];
    int next = g.n();
    for (Vertex v = 0; v < h.n(); ++v)
        if (embed[v] < 0) embed[v] = next++;

    auto edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(embed[u], embed[v]);
    AttachResult out;
    out.combined = Graph::from_edges(next, edges);
    out.embed_h = embed;

    out.decomposition = td_g;
    for (int t = 0; t < td_g.node_count(); ++t) {
        VertexSet blk = td_g.blocks[t];
        for (std::size_t i = 0; i < m; ++i) {
            if (!set_contains(td_g.blocks[t], anchors_g[i])) continue;
            for (Vertex v : pd_h.blocks[i]) blk.push_back(embed[v]);
        }
        out.decomposition.blocks[t] = sorted_unique(std::move(blk));
    }
    out.decomposition.rebuild_children();
    return out;
}

}  // namespace treeshift
