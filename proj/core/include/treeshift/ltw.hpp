#ifndef TREESHIFT_LTW_HPP
#define TREESHIFT_LTW_HPP

#include <cstdint>
#include <string>

#include "treeshift/treedecomp.hpp"

namespace treeshift {

// Kept equal to the exact-treewidth ceiling.
inline constexpr int kDefaultLtwCeiling = 25;

struct LtwEntry {
    int radius = 0;
    int value = 0;
    Vertex witness = -1;  // vertex whose r-neighborhood attains the value
    bool exact = true;
};

struct LtwProfile {
    std::vector<LtwEntry> entries;  // index = radius

    int value(int r) const { return entries.at(r).value; }
};

enum class LtwMode { Exact, Upper };

/// ltw(r) = max over vertices of tw(<N_r(x)>) for r = 0..r_max. Exact mode
/// solves every neighborhood exactly (deduped by a cheap invariant hash) and
/// throws when one exceeds the solver ceiling; upper mode reports heuristic
/// widths flagged inexact.
LtwProfile local_treewidth(const Graph& g, int r_max, LtwMode mode = LtwMode::Exact,
                           int ceiling = kDefaultLtwCeiling);

struct LinearBoundCheck {
    int radius = 0;
    int value = 0;
    int bound = 0;  // lambda * r
    bool pass = false;
    Vertex witness = -1;
};

struct LinearBoundReport {
    int lambda = 0;
    std::vector<LinearBoundCheck> checks;
    bool all_pass = true;
    // The check covers subgraph neighborhoods only, not every minor; the
    // consumer must treat a pass as evidence, not a certificate.
    std::string scope = "subgraph neighborhoods only";
};

LinearBoundReport check_linear_bound(const Graph& g, int lambda, int r_max,
                                     LtwMode mode = LtwMode::Exact);

/// l * (l-1)^(r-1), the degree-l neighborhood growth bound. Throws on
/// overflow of 64-bit arithmetic.
std::int64_t valence_bound(int l, int r);

}  // namespace treeshift

#endif
