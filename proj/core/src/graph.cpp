#include "treeshift/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace treeshift {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

int Graph::m() const {
    std::size_t deg = 0;
    for (const auto& nb : adj_) deg += nb.size();
    return static_cast<int>(deg / 2);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n())
        throw GraphError("vertex " + std::to_string(v) + " out of range [0," +
                         std::to_string(n()) + ")");
}

void Graph::check_vertices(const VertexSet& xs) const {
    for (Vertex v : xs) check_vertex(v);
}

std::vector<std::string> MinorWitness::check() const {
    std::vector<std::string> bad;
    if (!host || !pattern) {
        bad.push_back("witness missing host or pattern graph");
        return bad;
    }
    if (static_cast<int>(branch_sets.size()) != pattern->n()) {
        bad.push_back("branch set count does not match pattern order");
        return bad;
    }
    std::vector<int> owner(host->n(), -1);
    for (Vertex x = 0; x < pattern->n(); ++x) {
        const auto& bs = branch_sets[x];
        if (bs.empty()) {
            bad.push_back("empty branch set for pattern vertex " + std::to_string(x));
            continue;
        }
        for (Vertex u : bs) {
            host->check_vertex(u);
            if (owner[u] != -1)
                bad.push_back("host vertex " + std::to_string(u) +
                              " in branch sets of pattern vertices " +
                              std::to_string(owner[u]) + " and " + std::to_string(x));
            owner[u] = x;
        }
        auto sub = induced_subgraph(*host, bs);
        if (!is_connected(sub.graph))
            bad.push_back("branch set of pattern vertex " + std::to_string(x) +
                          " not connected");
    }
    for (auto [x, y] : pattern->edges()) {
        bool covered = false;
        for (Vertex u : branch_sets[x]) {
            for (Vertex v : host->neighbors(u))
                if (set_contains(branch_sets[y], v)) { covered = true; break; }
            if (covered) break;
        }
        if (!covered)
            bad.push_back("pattern edge " + std::to_string(x) + "-" + std::to_string(y) +
                          " has no host edge between branch sets");
    }
    return bad;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat) {
    // Both accepted formats share the DIMACS-ish shape:
    //   p edge <n> <m>, then m lines "e <u> <v>", 1-based, "c" comments.
    std::string line;
    int lineno = 0;
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) fail("duplicate header");
            if (toks.size() != 4) fail("malformed header, expected 'p edge <n> <m>'");
            try {
                n = std::stoi(toks[2]);
                declared_m = std::stol(toks[3]);
            } catch (const std::exception&) {
                fail("non-numeric header fields");
            }
            if (n < 0 || declared_m < 0) fail("negative counts in header");
        } else if (toks[0] == "e") {
            if (n < 0) fail("edge line before header");
            if (toks.size() != 3) fail("malformed edge line");
            int u, v;
            try {
                u = std::stoi(toks[1]);
                v = std::stoi(toks[2]);
            } catch (const std::exception&) {
                fail("non-numeric edge endpoints");
            }
            if (u < 1 || u > n || v < 1 || v > n)
                fail("vertex index out of range 1.." + std::to_string(n));
            if (u == v) fail("self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
        } else {
            fail("unrecognized line prefix '" + toks[0] + "'");
        }
    }
    if (n < 0) throw ParseError("missing 'p edge' header");
    // Duplicate and reversed edge lines collapse to one edge; the declared
    // count is checked against the deduplicated total.
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (declared_m != static_cast<long>(edges.size()))
        throw ParseError("declared m=" + std::to_string(declared_m) +
                         " but found " + std::to_string(edges.size()) +
                         " distinct edges");
    return Graph::from_edges(n, edges);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream ss(text);
    return parse_graph(ss, format);
}

void serialize_graph(const Graph& g, std::ostream& out) {
    auto es = g.edges();
    out << "p edge " << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream ss;
    serialize_graph(g, ss);
    return ss.str();
}

std::vector<int> bfs_distances(const Graph& g, Vertex v) {
    g.check_vertex(v);
    std::vector<int> dist(g.n(), -1);
    std::deque<Vertex> q{v};
    dist[v] = 0;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (Vertex w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

BfsLayers bfs_layers(const Graph& g, Vertex v) {
    auto dist = bfs_distances(g, v);
    BfsLayers out;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (dist[u] < 0) {
            out.unreachable.push_back(u);
            continue;
        }
        if (static_cast<int>(out.levels.size()) <= dist[u])
            out.levels.resize(dist[u] + 1);
        out.levels[dist[u]].push_back(u);
    }
    return out;
}

VertexSet level_interval(const BfsLayers& layers, int i, int j) {
    if (i > j) return {};
    int lo = std::max(i, 0);
    int hi = std::min<int>(j, static_cast<int>(layers.levels.size()) - 1);
    VertexSet out;
    for (int r = lo; r <= hi; ++r)
        out.insert(out.end(), layers.levels[r].begin(), layers.levels[r].end());
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet level_interval(const Graph& g, Vertex v, int i, int j) {
    return level_interval(bfs_layers(g, v), i, j);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
    g.check_vertices(x);
    VertexSet verts = sorted_unique(x);
    std::vector<int> newid(g.n(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) newid[verts[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : verts)
        for (Vertex v : g.neighbors(u))
            if (u < v && newid[v] >= 0) edges.emplace_back(newid[u], newid[v]);
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(verts.size()), edges);
    out.to_host = std::move(verts);
    return out;
}

ContractionResult contract_ball(const Graph& g, Vertex v, int r) {
    g.check_vertex(v);
    if (r < 0) throw GraphError("negative radius");
    auto dist = bfs_distances(g, v);
    VertexSet ball;
    for (Vertex u = 0; u < g.n(); ++u)
        if (dist[u] >= 0 && dist[u] <= r) ball.push_back(u);

    // New vertex 0 is the contracted ball; outside vertices keep their
    // relative order at ids 1..
    std::vector<int> newid(g.n(), -1);
    std::vector<Vertex> to_host{v};
    int next = 1;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (set_contains(ball, u)) continue;
        newid[u] = next++;
        to_host.push_back(u);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [a, b] : g.edges()) {
        bool ain = set_contains(ball, a), bin = set_contains(ball, b);
        if (ain && bin) continue;
        int na = ain ? 0 : newid[a];
        int nb = bin ? 0 : newid[b];
        edges.emplace_back(na, nb);
    }
    ContractionResult out;
    out.graph = Graph::from_edges(next, edges);
    out.contracted_vertex = 0;
    out.to_host = std::move(to_host);
    out.witness.branch_sets.assign(out.graph.n(), {});
    out.witness.branch_sets[0] = ball;
    for (int i = 1; i < out.graph.n(); ++i)
        out.witness.branch_sets[i] = {out.to_host[i]};
    return out;
}

bool is_clique(const Graph& g, const VertexSet& x) {
    g.check_vertices(x);
    VertexSet xs = sorted_unique(x);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!g.has_edge(xs[i], xs[j])) return false;
    return true;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.n(), 0);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::deque<Vertex> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& a, Vertex v) {
    return std::binary_search(a.begin(), a.end(), v);
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet sorted_unique(VertexSet xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace treeshift
