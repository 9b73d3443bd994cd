#ifndef TREESHIFT_TREEDECOMP_HPP
#define TREESHIFT_TREEDECOMP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "treeshift/graph.hpp"

namespace treeshift {

/// Rooted tree decomposition. Node 0 is the root unless re-rooted; parent
/// of the root is -1. Blocks are sorted vertex sets over the subject graph.
/// Adhesion sets A_t = B_t ∩ B_parent(t) are always derived, never stored.
struct TreeDecomposition {
    std::vector<VertexSet> blocks;
    std::vector<int> parent;                 // parent[t], -1 for root
    std::vector<std::vector<int>> children;  // derived from parent
    int root = 0;

    int node_count() const { return static_cast<int>(blocks.size()); }
    void rebuild_children();
    void reroot(int new_root);

    VertexSet adhesion_set(int t) const;
};

struct PathDecomposition {
    std::vector<VertexSet> blocks;  // B_1..B_m along the path

    TreeDecomposition as_tree() const;
    int width() const;
};

struct ValidityReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

ValidityReport validate(const Graph& g, const TreeDecomposition& td);

int width(const TreeDecomposition& td);
int adhesion(const TreeDecomposition& td);

/// Block subgraph augmented with cliques on its own adhesion set and on
/// every child's adhesion set. Returned over block-local ids with a map
/// back to the subject graph.
InducedSubgraph torso(const Graph& g, const TreeDecomposition& td, int t);

void serialize_decomposition(const TreeDecomposition& td, int n, std::ostream& out);
std::string serialize_decomposition(const TreeDecomposition& td, int n);
TreeDecomposition parse_decomposition(std::istream& in);
TreeDecomposition parse_decomposition(const std::string& text);

/// Glues a path-decomposed graph H onto G along an anchor path, following
/// the construction C'_t = C_t ∪ ⋃_{x_i ∈ C_t} B_i. Vertices of H\G are
/// appended to G's id space by `embed_h` (H vertex -> combined id).
struct AttachResult {
    Graph combined;                  // G ∪ H
    TreeDecomposition decomposition; // of the combined graph
    std::vector<Vertex> embed_h;     // H vertex -> combined vertex
};

AttachResult attach_path(const Graph& g, const TreeDecomposition& td_g,
                         const Graph& h, const PathDecomposition& pd_h,
                         const std::vector<Vertex>& anchors_g,
                         const std::vector<Vertex>& anchors_h);

}  // namespace treeshift

#endif
