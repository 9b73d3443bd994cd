#ifndef TREESHIFT_CLASSDECOMP_HPP
#define TREESHIFT_CLASSDECOMP_HPP

#include <functional>
#include <string>

#include "treeshift/treedecomp.hpp"

namespace treeshift {

/// Membership oracle for a graph class, together with the clique-number
/// bound omega that caps separator sizes. The test must be consistent under
/// subgraphs for the recursive search to be sound.
struct ClassPredicate {
    std::string name;
    int omega = 1;
    std::function<bool(const Graph&)> test;
};

/// Graphs of tree-width <= w (omega = w+1). Uses a heuristic width first and
/// escalates to the exact solver at desk scale.
ClassPredicate width_class(int w);

/// Graphs with an apex set of size <= mu whose removal has tree-width <= w
/// (omega = w+1+mu).
ClassPredicate apex_width_class(int mu, int w);

struct ClassDecomposeResult {
    bool accepted = false;
    TreeDecomposition td;                 // valid iff accepted
    std::vector<std::string> rejection;   // proof-of-work trail otherwise
};

/// Recursive separator decomposition: either the graph satisfies P, or some
/// X with |X| <= P.omega splits it and every piece <X ∪ C> ∪ K_X decomposes
/// recursively. Returns a decomposition whose torsos all satisfy P with
/// adhesion <= omega, or a documented rejection.
ClassDecomposeResult decompose_over_class(const Graph& g, const ClassPredicate& p,
                                          int ceiling = 32);

}  // namespace treeshift

#endif
