#ifndef TREESHIFT_GENERATE_HPP
#define TREESHIFT_GENERATE_HPP

#include <cstdint>

#include "treeshift/cliquesum.hpp"

namespace treeshift {

// Deterministic instance builders for tests and benchmark corpora. All
// randomness flows from the explicit seed.

Graph grid_graph(int rows, int cols);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Maximal graph of tree-width k on n >= k+1 vertices: a k-clique extended
/// by vertices adjacent to a random existing k-clique.
Graph k_tree(int n, int k, std::uint64_t seed);

/// Base graph plus `extra` fresh vertices, each wired to a random non-empty
/// subset of the base (the new vertices are the apexes, ids n..n+extra-1).
Graph apex_over(const Graph& base, int extra, std::uint64_t seed);

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability p.
Graph random_connected(int n, double p, std::uint64_t seed);

/// Planar-like triangulation: starts from a triangle and repeatedly splits a
/// random face vertex-triple (stacked triangulation), then optionally drops
/// `deletions` random edges while keeping the graph connected.
Graph stacked_planar(int n, int deletions, std::uint64_t seed);

/// Random cubic-ish graph: degree <= 3, connected.
Graph bounded_degree_graph(int n, int max_degree, std::uint64_t seed);

struct CliqueSumInstance {
    Graph graph;
    CliqueSumDecomposition decomposition;  // ground truth from construction
};

/// Glues `parts` generated pieces into a path-shaped clique sum: consecutive
/// pieces share a clique of size `adhesion` (made into a clique in both),
/// and each piece gets `apexes` extra apex vertices wired into it. The
/// decomposition has one node per piece with the shared sets as adhesions.
CliqueSumInstance clique_sum_of(int parts, int part_size, int adhesion, int apexes,
                                std::uint64_t seed);

}  // namespace treeshift

#endif
