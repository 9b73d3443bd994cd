#ifndef TREESHIFT_GRAPH_HPP
#define TREESHIFT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treeshift {

using Vertex = int;
// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<Vertex>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : GraphError {
    using GraphError::GraphError;
};

/// Finite simple undirected graph with dense 0-based vertex ids.
/// Adjacency lists are kept strictly increasing; instances are immutable
/// after construction and safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    // Builds from an edge list; duplicates and reversed pairs collapse,
    // self-loops throw.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const;

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;

    // All edges (u < v), lexicographic.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    void check_vertex(Vertex v) const;
    void check_vertices(const VertexSet& xs) const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;  // optional external names, for I/O
};

/// Branch-set certificate for a minor relation: pattern vertex -> host
/// vertex set. check() re-verifies connectivity, disjointness and edge
/// coverage directly against the two graphs.
struct MinorWitness {
    const Graph* host = nullptr;
    const Graph* pattern = nullptr;
    std::vector<VertexSet> branch_sets;  // indexed by pattern vertex

    // Empty list iff the witness is valid; entries are human-readable
    // violation descriptions.
    std::vector<std::string> check() const;
};

enum class GraphFormat { EdgeList, DimacsLike };

Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::EdgeList);
Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::EdgeList);
void serialize_graph(const Graph& g, std::ostream& out);
std::string serialize_graph(const Graph& g);

/// BFS distances from v; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex v);

struct BfsLayers {
    std::vector<VertexSet> levels;  // levels[r] = vertices at distance r
    VertexSet unreachable;
};

BfsLayers bfs_layers(const Graph& g, Vertex v);

/// L_v[i,j] with the clamping convention: empty for i > j, [0,j] for i <= 0.
VertexSet level_interval(const Graph& g, Vertex v, int i, int j);
VertexSet level_interval(const BfsLayers& layers, int i, int j);

struct InducedSubgraph {
    Graph graph;
    VertexSet to_host;  // new id -> host id (injective, sorted)
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

struct ContractionResult {
    Graph graph;
    MinorWitness witness;       // owned pointers fixed up by caller-side storage
    Vertex contracted_vertex;   // id of v' in the result
    std::vector<Vertex> to_host;  // result vertex -> representative host vertex (v' -> v)
};

/// Contracts the ball N_r(v) to a single vertex; the result stays simple.
ContractionResult contract_ball(const Graph& g, Vertex v, int r);

bool is_clique(const Graph& g, const VertexSet& x);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

// Set helpers over sorted VertexSets.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, Vertex v);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet sorted_unique(VertexSet xs);

}  // namespace treeshift

#endif
