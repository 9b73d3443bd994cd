#ifndef TREESHIFT_TREEWIDTH_HPP
#define TREESHIFT_TREEWIDTH_HPP

#include <cstdint>
#include <optional>

#include "treeshift/treedecomp.hpp"

namespace treeshift {

// Desk-scale ceiling for the exact solver; overridable via the CLI env knob.
inline constexpr int kDefaultExactCeiling = 25;

enum class EliminationStrategy { MinFill, MinDegree };

struct ExactTreewidthResult {
    int width = 0;            // exact iff `exact`, otherwise best upper bound found
    int lower_bound = 0;      // best proven lower bound
    bool exact = true;
    TreeDecomposition decomposition;  // width `width`
};

/// Iterative deepening over the target width with elimination-ordering
/// branch and bound. `node_budget` caps search nodes; on exhaustion the
/// best-known bounds come back flagged inexact.
ExactTreewidthResult exact_treewidth(const Graph& g,
                                     std::int64_t node_budget = 50'000'000,
                                     int ceiling = kDefaultExactCeiling);

TreeDecomposition heuristic_decomposition(const Graph& g,
                                          EliminationStrategy strategy = EliminationStrategy::MinFill);

/// Exact clique number (Bron–Kerbosch with pivoting); desk scale only.
int clique_number(const Graph& g);

/// Maximum-minimum-degree lower bound for tree-width.
int mmd_lower_bound(const Graph& g);

/// Builds a rooted tree decomposition from an elimination order, with bags
/// {v} ∪ N_fill(v) at elimination time.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

}  // namespace treeshift

#endif
