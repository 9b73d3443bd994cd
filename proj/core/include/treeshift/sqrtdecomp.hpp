#ifndef TREESHIFT_SQRTDECOMP_HPP
#define TREESHIFT_SQRTDECOMP_HPP

#include <functional>

#include "treeshift/treedecomp.hpp"

namespace treeshift {

/// BFS levels partitioned into maximal runs of light (|L_j|^2 <= lambda*n)
/// and heavy (>) levels. Comparisons are exact integer arithmetic; ties are
/// light.
struct IntervalSplit {
    struct Interval {
        int lo = 0, hi = 0;  // inclusive level range
        bool heavy = false;
    };
    std::vector<int> level_sizes;
    std::vector<Interval> intervals;
    long long threshold_sq = 0;  // lambda * n

    bool is_light(int level) const {
        long long s = level_sizes[level];
        return s * s <= threshold_sq;
    }
};

IntervalSplit split_levels(const BfsLayers& layers, int lambda, int n);

using InnerProvider = std::function<TreeDecomposition(const Graph&)>;

struct SqrtReport {
    TreeDecomposition td;
    IntervalSplit split;
    std::vector<int> interval_widths;  // aligned with split.intervals
    int width = 0;
    int bound = 0;  // floor(3*sqrt(lambda*n)), plus mu for the apex variant
};

/// Width O(sqrt(lambda n)) decomposition: light runs get path decompositions
/// over consecutive level pairs, heavy runs get provider decompositions
/// augmented with both neighboring border levels, all spliced into one tree.
SqrtReport sqrt_decomposition(const Graph& g, int lambda, Vertex v,
                              const InnerProvider& inner = {});

/// Removes the apex set first, decomposes the rest, then adds the apexes to
/// every block.
SqrtReport sqrt_decomposition_apex(const Graph& g, int lambda, int mu, const VertexSet& x,
                                   Vertex v, const InnerProvider& inner = {});

}  // namespace treeshift

#endif
