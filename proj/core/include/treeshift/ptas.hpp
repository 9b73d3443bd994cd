#ifndef TREESHIFT_PTAS_HPP
#define TREESHIFT_PTAS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "treeshift/dp.hpp"
#include "treeshift/treewidth.hpp"

namespace treeshift {

enum class CenterRule { FirstVertex, Given, BestOfAll };

struct PtasConfig {
    double epsilon = 0.5;
    int lambda = 3;   // assumed local-tree-width slope
    int mu = 0;       // apex budget
    CenterRule center_rule = CenterRule::FirstVertex;
    Vertex given_center = 0;

    // k = ceil(1/eps) for VC/IS, ceil(2/eps) for DS.
    int k_for(ProblemKind kind) const {
        double num = kind == ProblemKind::DominatingSet ? 2.0 : 1.0;
        int k = static_cast<int>(std::ceil(num / epsilon - 1e-12));
        return std::max(k, 1);
    }
};

/// One band of BFS levels with problem-specific geometry. `lo`/`hi` are the
/// level interval actually used after clamping; for DS `interior` carries
/// the rows that must be dominated, otherwise interior == vertices.
struct Strip {
    ProblemKind problem;
    int shift = 1;  // i, 1..k
    int band = 0;   // j, >= 0
    int lo = 0, hi = 0;
    VertexSet vertices;
    VertexSet interior;
};

/// Strips for shift i over the BFS layers of (G, v):
///   VC: [(j-1)k+i, jk+i]   DS: [(j-1)k+i-1, jk+i], interior [(j-1)k+i, jk+i-1]
///   IS: [(j-1)k+i, jk+i-2]
std::vector<Strip> build_strips(const Graph& g, Vertex v, ProblemKind kind, int k, int i);
std::vector<Strip> build_strips(const BfsLayers& layers, ProblemKind kind, int k, int i);

struct StripAudit {
    int shift, band;
    int size;
    int measured_width;
    bool within_lambda_bound;  // measured <= lambda * band length
};

struct ShiftAudit {
    Vertex center = 0;
    std::vector<int> shift_values;  // |X_i| per shift, index i-1
    int chosen_shift = 1;
    std::vector<StripAudit> strips;
    bool lambda_bound_respected = true;  // (1+eps) claim conditional when false
};

struct PtasResult {
    Solution solution;
    std::vector<ShiftAudit> components;  // one audit per processed component
    std::string describe() const;
};

/// Step 1: the shifting scheme on a graph assumed to lie in L(lambda).
/// Multi-component inputs are processed per component and unioned.
PtasResult ptas_local(const Graph& g, ProblemKind kind, const PtasConfig& cfg);

/// Step 2: apex enumeration. U with |U| <= cfg.mu, G\U assumed in L(lambda).
PtasResult ptas_apex(const Graph& g, const VertexSet& u, ProblemKind kind,
                     const PtasConfig& cfg);

/// Decomposes a strip subgraph: min-fill first, exact escalation under a
/// budget when the heuristic width exceeds the lambda bound.
struct StripDecomposition {
    TreeDecomposition td;
    int width;
    bool exact;
};
StripDecomposition decompose_strip(const Graph& strip_graph, int lambda_bound);

}  // namespace treeshift

#endif
