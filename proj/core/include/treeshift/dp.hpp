#ifndef TREESHIFT_DP_HPP
#define TREESHIFT_DP_HPP

#include <optional>
#include <string>

#include "treeshift/treedecomp.hpp"

namespace treeshift {

enum class ProblemKind { VertexCover, DominatingSet, IndependentSet };

const char* kind_name(ProblemKind k);
bool is_minimization(ProblemKind k);

struct Solution {
    ProblemKind kind = ProblemKind::VertexCover;
    VertexSet vertices;
    int value = 0;  // |vertices|
    bool feasible = false;
    std::string provenance;  // shift index, strip list, apex subset, free-form

    static Solution infeasible_solution(ProblemKind k) {
        Solution s;
        s.kind = k;
        s.feasible = false;
        return s;
    }
};

/// Direct feasibility predicates, independent of any DP path.
bool is_vertex_cover(const Graph& g, const VertexSet& x);
bool is_dominating_set(const Graph& g, const VertexSet& x);
bool is_independent_set(const Graph& g, const VertexSet& x);
bool is_feasible(const Graph& g, ProblemKind kind, const VertexSet& x);

/// Side constraints threaded through the table computations.
struct DpConstraints {
    VertexSet forced_in;   // must belong to the solution
    VertexSet forbidden;   // must not
    // DS only: vertices that must end up dominated (or chosen). Empty means
    // "all of them", the plain problem.
    std::optional<VertexSet> dominate_only;
    // Problem edge set override: edges to cover (VC), conflict edges (IS),
    // domination edges (DS). Must be a subset of the subject's edges; the
    // decomposition may cover more (torso edges shape the decomposition only).
    std::optional<std::vector<std::pair<Vertex, Vertex>>> problem_edges;
};

/// Exact optimum by dynamic programming over a (nicified) tree
/// decomposition. Complexity exponential only in the decomposition width.
Solution solve_exact_tw(const Graph& g, const TreeDecomposition& td, ProblemKind kind,
                        const DpConstraints& cons = {});

/// Lemma-6 style constrained cover: minimum X ⊆ V\U with X ∪ Y a vertex
/// cover of G, or infeasible when an edge lies inside U\Y. `td` decomposes
/// G\U via `gu_to_g` (subgraph id -> G id).
Solution solve_vc_constrained(const Graph& g, const VertexSet& u, const VertexSet& y,
                              const TreeDecomposition& td, const VertexSet& gu_to_g);

/// Strip variant of dominating set: every interior vertex is chosen or has
/// a chosen neighbor; boundary rows carry no obligation. `td` decomposes
/// the strip-induced subgraph via `strip_to_g`.
Solution solve_ds_strip(const Graph& g, const VertexSet& strip, const VertexSet& interior,
                        const TreeDecomposition& td, const VertexSet& strip_to_g);

inline constexpr int kDefaultBruteForceCeiling = 22;

/// Exhaustive subset-enumeration oracle.
Solution brute_force(const Graph& g, ProblemKind kind, const VertexSet& forced_in = {},
                     const VertexSet& forbidden = {},
                     const std::optional<VertexSet>& dominate_only = std::nullopt,
                     int ceiling = kDefaultBruteForceCeiling);

}  // namespace treeshift

#endif
