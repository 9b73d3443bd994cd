#ifndef TREESHIFT_CLIQUESUM_HPP
#define TREESHIFT_CLIQUESUM_HPP

#include <iosfwd>

#include "treeshift/ptas.hpp"

namespace treeshift {

/// Tree-decomposition over L(lambda, mu): per-node torso, apex set U_t,
/// adhesion cliques. Consumed by the step-3 PTAS.
struct CliqueSumDecomposition {
    TreeDecomposition tree;
    std::vector<VertexSet> apex;  // U_t ⊆ B_t per node

    int node_count() const { return tree.node_count(); }
};

/// Checks the underlying decomposition plus the clique-sum side conditions:
/// apex containment and budgets, adhesion bound lambda+mu+1.
ValidityReport validate_csd(const Graph& g, const CliqueSumDecomposition& d,
                            int lambda, int mu);

void serialize_csd(const CliqueSumDecomposition& d, int n, std::ostream& out);
std::string serialize_csd(const CliqueSumDecomposition& d, int n);
CliqueSumDecomposition parse_csd(std::istream& in);
CliqueSumDecomposition parse_csd(const std::string& text);

/// Step 3: leaf-to-root recursion over the clique-sum tree. At every node,
/// per adhesion key, an eps-close constrained solution for the subtree graph
/// is assembled from shifted strips of the torso minus apexes, with child
/// tables plugged in at their adhesion cliques.
PtasResult ptas_cliquesum(const Graph& g, const CliqueSumDecomposition& d,
                          ProblemKind kind, const PtasConfig& cfg);

}  // namespace treeshift

#endif
