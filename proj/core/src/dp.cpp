#include "treeshift/dp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>

namespace treeshift {

const char* kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::VertexCover: return "vc";
        case ProblemKind::DominatingSet: return "ds";
        case ProblemKind::IndependentSet: return "is";
    }
    return "?";
}

bool is_minimization(ProblemKind k) { return k != ProblemKind::IndependentSet; }

bool is_vertex_cover(const Graph& g, const VertexSet& x) {
    for (auto [u, v] : g.edges())
        if (!set_contains(x, u) && !set_contains(x, v)) return false;
    return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& x) {
    for (Vertex v = 0; v < g.n(); ++v) {
        if (set_contains(x, v)) continue;
        bool dom = false;
        for (Vertex u : g.neighbors(v))
            if (set_contains(x, u)) { dom = true; break; }
        if (!dom) return false;
    }
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& x) {
    for (Vertex v : x)
        for (Vertex u : g.neighbors(v))
            if (u > v && set_contains(x, u)) return false;
    return true;
}

bool is_feasible(const Graph& g, ProblemKind kind, const VertexSet& x) {
    switch (kind) {
        case ProblemKind::VertexCover: return is_vertex_cover(g, x);
        case ProblemKind::DominatingSet: return is_dominating_set(g, x);
        case ProblemKind::IndependentSet: return is_independent_set(g, x);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Nice decomposition

namespace {

constexpr int kInf = 1 << 28;

struct NiceNode {
    enum Kind { Leaf, Introduce, Forget, Join } kind = Leaf;
    Vertex v = -1;     // introduced/forgotten vertex
    VertexSet bag;
    int left = -1, right = -1;  // children (created before this node)
};

struct NiceTree {
    std::vector<NiceNode> nodes;
    int root = -1;

    int add(NiceNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }
};

// Chain of forgets (bag \ target) then introduces (target \ bag) on top of
// node `at`, ending with bag `target`.
int morph(NiceTree& nt, int at, const VertexSet& target) {
    VertexSet cur = nt.nodes[at].bag;
    for (Vertex v : set_difference(cur, target)) {
        NiceNode n;
        n.kind = NiceNode::Forget;
        n.v = v;
        n.bag = set_difference(nt.nodes[at].bag, {v});
        n.left = at;
        at = nt.add(std::move(n));
    }
    for (Vertex v : set_difference(target, cur)) {
        NiceNode n;
        n.kind = NiceNode::Introduce;
        n.v = v;
        n.bag = set_union(nt.nodes[at].bag, {v});
        n.left = at;
        at = nt.add(std::move(n));
    }
    return at;
}

int build_nice(NiceTree& nt, const TreeDecomposition& td, int t) {
    std::vector<int> kids;
    for (int c : td.children[t]) kids.push_back(morph(nt, build_nice(nt, td, c), td.blocks[t]));
    if (kids.empty()) {
        int leaf = nt.add(NiceNode{});
        return morph(nt, leaf, td.blocks[t]);
    }
    int acc = kids[0];
    for (std::size_t i = 1; i < kids.size(); ++i) {
        NiceNode j;
        j.kind = NiceNode::Join;
        j.bag = td.blocks[t];
        j.left = acc;
        j.right = kids[i];
        acc = nt.add(std::move(j));
    }
    return acc;
}

NiceTree nicify(const TreeDecomposition& td) {
    NiceTree nt;
    if (td.blocks.empty()) {
        nt.root = nt.add(NiceNode{});
        return nt;
    }
    int top = build_nice(nt, td, td.root);
    nt.root = morph(nt, top, {});
    return nt;
}

int index_in(const VertexSet& bag, Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Inserts a bit at position p (binary states).
std::uint32_t insert_bit(std::uint32_t s, int p, std::uint32_t b) {
    std::uint32_t low = s & ((1u << p) - 1);
    return low | (b << p) | ((s >> p) << (p + 1));
}

std::uint32_t remove_bit(std::uint32_t s, int p) {
    std::uint32_t low = s & ((1u << p) - 1);
    return low | ((s >> (p + 1)) << p);
}

struct DpSetup {
    const Graph* g;
    ProblemKind kind;
    std::vector<char> forced, blocked, dom_req;
    std::vector<VertexSet> padj;  // adjacency under the problem edge set
};

DpSetup make_setup(const Graph& g, ProblemKind kind, const DpConstraints& cons) {
    DpSetup s;
    s.g = &g;
    s.kind = kind;
    s.forced.assign(g.n(), 0);
    s.blocked.assign(g.n(), 0);
    for (Vertex v : cons.forced_in) {
        g.check_vertex(v);
        s.forced[v] = 1;
    }
    for (Vertex v : cons.forbidden) {
        g.check_vertex(v);
        s.blocked[v] = 1;
        if (s.forced[v]) throw GraphError("vertex both forced and forbidden");
    }
    s.dom_req.assign(g.n(), 1);
    if (cons.dominate_only) {
        s.dom_req.assign(g.n(), 0);
        for (Vertex v : *cons.dominate_only) {
            g.check_vertex(v);
            s.dom_req[v] = 1;
        }
    }
    s.padj.assign(g.n(), {});
    if (cons.problem_edges) {
        for (auto [u, v] : *cons.problem_edges) {
            if (!g.has_edge(u, v))
                throw GraphError("problem edge not present in the subject graph");
            s.padj[u].push_back(v);
            s.padj[v].push_back(u);
        }
        for (auto& a : s.padj) a = sorted_unique(std::move(a));
    } else {
        for (Vertex v = 0; v < g.n(); ++v) s.padj[v] = g.neighbors(v);
    }
    return s;
}

// --- VC / IS tables (binary states: bit set = vertex in the solution) -----

struct BinaryDp {
    const NiceTree* nt;
    const DpSetup* st;
    bool maximize;  // IS
    std::vector<std::vector<int>> table;

    int invalid() const { return maximize ? -kInf : kInf; }
    bool better(int a, int b) const { return maximize ? a > b : a < b; }

    void run() {
        table.resize(nt->nodes.size());
        for (std::size_t idx = 0; idx < nt->nodes.size(); ++idx) compute(static_cast<int>(idx));
    }

    void compute(int idx) {
        const NiceNode& nd = nt->nodes[idx];
        int b = static_cast<int>(nd.bag.size());
        auto& dp = table[idx];
        dp.assign(std::size_t(1) << b, invalid());
        switch (nd.kind) {
            case NiceNode::Leaf:
                dp[0] = 0;
                break;
            case NiceNode::Introduce: {
                const auto& child = table[nd.left];
                int p = index_in(nd.bag, nd.v);
                for (std::uint32_t s = 0; s < dp.size(); ++s) {
                    bool in = (s >> p) & 1;
                    if (in && st->blocked[nd.v]) continue;
                    if (!in && st->forced[nd.v]) continue;
                    if (!valid_state(nd.bag, s, nd.v, in)) continue;
                    int cv = child[remove_bit(s, p)];
                    if (cv == invalid()) continue;
                    dp[s] = cv + (in ? 1 : 0);
                }
                break;
            }
            case NiceNode::Forget: {
                const auto& child = table[nd.left];
                int p = index_in(nt->nodes[nd.left].bag, nd.v);
                for (std::uint32_t s = 0; s < dp.size(); ++s) {
                    int best = invalid();
                    for (std::uint32_t in = 0; in <= 1; ++in) {
                        int cv = child[insert_bit(s, p, in)];
                        if (cv != invalid() && better(cv, best)) best = cv;
                    }
                    dp[s] = best;
                }
                break;
            }
            case NiceNode::Join: {
                const auto& a = table[nd.left];
                const auto& c = table[nd.right];
                for (std::uint32_t s = 0; s < dp.size(); ++s) {
                    if (a[s] == invalid() || c[s] == invalid()) continue;
                    dp[s] = a[s] + c[s] - std::popcount(s);
                }
                break;
            }
        }
    }

    // Edge consistency at introduce time: VC requires uncovered problem
    // edges to be impossible; IS forbids chosen adjacent pairs.
    bool valid_state(const VertexSet& bag, std::uint32_t s, Vertex v, bool in) const {
        for (Vertex u : st->padj[v]) {
            if (!set_contains(bag, u) || u == v) continue;
            bool uin = (s >> index_in(bag, u)) & 1;
            if (maximize) {
                if (in && uin) return false;  // IS conflict
            } else {
                if (!in && !uin) return false;  // VC uncovered edge
            }
        }
        return true;
    }

    void reconstruct(int idx, std::uint32_t s, std::vector<char>& chosen) const {
        const NiceNode& nd = nt->nodes[idx];
        switch (nd.kind) {
            case NiceNode::Leaf:
                return;
            case NiceNode::Introduce: {
                int p = index_in(nd.bag, nd.v);
                if ((s >> p) & 1) chosen[nd.v] = 1;
                reconstruct(nd.left, remove_bit(s, p), chosen);
                return;
            }
            case NiceNode::Forget: {
                int p = index_in(nt->nodes[nd.left].bag, nd.v);
                int want = table[idx][s];
                // Deterministic tie-break: prefer the vertex excluded.
                for (std::uint32_t in = 0; in <= 1; ++in) {
                    std::uint32_t cs = insert_bit(s, p, in);
                    if (table[nd.left][cs] == want) {
                        reconstruct(nd.left, cs, chosen);
                        return;
                    }
                }
                throw GraphError("dp reconstruction failed (forget)");
            }
            case NiceNode::Join:
                reconstruct(nd.left, s, chosen);
                reconstruct(nd.right, s, chosen);
                return;
        }
    }
};

// --- DS tables (ternary states: 0 = chosen, 1 = dominated, 2 = not yet) ---

constexpr int kBlack = 0, kWhite = 1, kGrey = 2;

struct TernaryDp {
    const NiceTree* nt;
    const DpSetup* st;
    std::vector<std::vector<int>> table;
    std::vector<int> pow3;

    void init_pow3(int maxbag) {
        pow3.assign(maxbag + 2, 1);
        for (int i = 1; i < static_cast<int>(pow3.size()); ++i) pow3[i] = pow3[i - 1] * 3;
    }

    int digit(int s, int p) const { return (s / pow3[p]) % 3; }
    int with_digit(int s, int p, int d) const { return s + (d - digit(s, p)) * pow3[p]; }
    int insert_digit(int s, int p, int d) const {
        int low = s % pow3[p];
        return low + d * pow3[p] + (s / pow3[p]) * pow3[p + 1];
    }
    int remove_digit(int s, int p) const {
        int low = s % pow3[p];
        return low + (s / pow3[p + 1]) * pow3[p];
    }

    void run() {
        int maxbag = 0;
        for (const auto& nd : nt->nodes) maxbag = std::max<int>(maxbag, nd.bag.size());
        if (maxbag > 15)
            throw GraphError("dominating-set table too wide (bag size " +
                             std::to_string(maxbag) + ")");
        init_pow3(maxbag);
        table.resize(nt->nodes.size());
        for (std::size_t idx = 0; idx < nt->nodes.size(); ++idx) compute(static_cast<int>(idx));
    }

    // Minimal child value for an introduce-black step: each white problem
    // neighbor may have been white already or owes its domination to v.
    int black_intro_value(const std::vector<int>& child, int base_state,
                          const std::vector<int>& white_nb_pos) const {
        int best = kInf;
        int combos = 1 << white_nb_pos.size();
        for (int mask = 0; mask < combos; ++mask) {
            int cs = base_state;
            for (std::size_t i = 0; i < white_nb_pos.size(); ++i)
                if ((mask >> i) & 1) cs = with_digit(cs, white_nb_pos[i], kGrey);
            best = std::min(best, child[cs]);
        }
        return best;
    }

    void compute(int idx) {
        const NiceNode& nd = nt->nodes[idx];
        int b = static_cast<int>(nd.bag.size());
        auto& dp = table[idx];
        dp.assign(pow3[b], kInf);
        switch (nd.kind) {
            case NiceNode::Leaf:
                dp[0] = 0;
                break;
            case NiceNode::Introduce: {
                const auto& child = table[nd.left];
                int p = index_in(nd.bag, nd.v);
                for (int s = 0; s < static_cast<int>(dp.size()); ++s) {
                    int d = digit(s, p);
                    if (d == kBlack && st->blocked[nd.v]) continue;
                    if (d != kBlack && st->forced[nd.v]) continue;
                    bool black_nb = false;
                    std::vector<int> white_nb_pos;
                    bool bad = false;
                    for (Vertex u : st->padj[nd.v]) {
                        if (u == nd.v || !set_contains(nd.bag, u)) continue;
                        int q = index_in(nd.bag, u);
                        int du = digit(s, q);
                        if (du == kBlack) black_nb = true;
                        if (d == kBlack) {
                            if (du == kGrey) { bad = true; break; }  // must be white
                            if (du == kWhite) white_nb_pos.push_back(q < p ? q : q - 1);
                        }
                    }
                    if (bad) continue;
                    if (d == kWhite && !black_nb) continue;   // nothing dominates v yet
                    if (d == kGrey && black_nb) continue;     // normalization
                    int base = remove_digit(s, p);
                    int val;
                    if (d == kBlack)
                        val = black_intro_value(child, base, white_nb_pos);
                    else
                        val = child[base];
                    if (val >= kInf) continue;
                    dp[s] = val + (d == kBlack ? 1 : 0);
                }
                break;
            }
            case NiceNode::Forget: {
                const auto& child = table[nd.left];
                int p = index_in(nt->nodes[nd.left].bag, nd.v);
                bool need_dom = st->dom_req[nd.v];
                for (int s = 0; s < static_cast<int>(dp.size()); ++s) {
                    int best = kInf;
                    for (int d = 0; d < 3; ++d) {
                        if (d == kGrey && need_dom) continue;
                        best = std::min(best, child[insert_digit(s, p, d)]);
                    }
                    dp[s] = best;
                }
                break;
            }
            case NiceNode::Join: {
                const auto& a = table[nd.left];
                const auto& c = table[nd.right];
                std::vector<int> white_pos;
                for (int s = 0; s < static_cast<int>(dp.size()); ++s) {
                    white_pos.clear();
                    int blacks = 0;
                    for (int p = 0; p < b; ++p) {
                        int d = digit(s, p);
                        if (d == kWhite) white_pos.push_back(p);
                        if (d == kBlack) ++blacks;
                    }
                    int best = kInf;
                    int combos = 1;
                    for (std::size_t i = 0; i < white_pos.size(); ++i) combos *= 3;
                    for (int m = 0; m < combos; ++m) {
                        int s1 = s, s2 = s, mm = m;
                        for (int p : white_pos) {
                            switch (mm % 3) {  // (white,grey) (grey,white) (white,white)
                                case 0: s2 = with_digit(s2, p, kGrey); break;
                                case 1: s1 = with_digit(s1, p, kGrey); break;
                                default: break;
                            }
                            mm /= 3;
                        }
                        if (a[s1] < kInf && c[s2] < kInf)
                            best = std::min(best, a[s1] + c[s2] - blacks);
                    }
                    dp[s] = best;
                }
                break;
            }
        }
    }

    void reconstruct(int idx, int s, std::vector<char>& chosen) const {
        const NiceNode& nd = nt->nodes[idx];
        switch (nd.kind) {
            case NiceNode::Leaf:
                return;
            case NiceNode::Introduce: {
                int p = index_in(nd.bag, nd.v);
                int d = digit(s, p);
                int base = remove_digit(s, p);
                if (d == kBlack) {
                    chosen[nd.v] = 1;
                    std::vector<int> white_nb_pos;
                    for (Vertex u : st->padj[nd.v]) {
                        if (u == nd.v || !set_contains(nd.bag, u)) continue;
                        int q = index_in(nd.bag, u);
                        if (digit(s, q) == kWhite) white_nb_pos.push_back(q < p ? q : q - 1);
                    }
                    int want = table[idx][s] - 1;
                    int combos = 1 << white_nb_pos.size();
                    for (int mask = 0; mask < combos; ++mask) {
                        int cs = base;
                        for (std::size_t i = 0; i < white_nb_pos.size(); ++i)
                            if ((mask >> i) & 1) cs = with_digit(cs, white_nb_pos[i], kGrey);
                        if (table[nd.left][cs] == want) {
                            reconstruct(nd.left, cs, chosen);
                            return;
                        }
                    }
                    throw GraphError("dp reconstruction failed (introduce)");
                }
                reconstruct(nd.left, base, chosen);
                return;
            }
            case NiceNode::Forget: {
                int p = index_in(nt->nodes[nd.left].bag, nd.v);
                int want = table[idx][s];
                for (int d : {kWhite, kGrey, kBlack}) {  // prefer not choosing v
                    if (d == kGrey && st->dom_req[nd.v]) continue;
                    int cs = insert_digit(s, p, d);
                    if (table[nd.left][cs] == want) {
                        reconstruct(nd.left, cs, chosen);
                        return;
                    }
                }
                throw GraphError("dp reconstruction failed (forget)");
            }
            case NiceNode::Join: {
                const auto& a = table[nd.left];
                const auto& c = table[nd.right];
                int b = static_cast<int>(nd.bag.size());
                std::vector<int> white_pos;
                int blacks = 0;
                for (int p = 0; p < b; ++p) {
                    int d = digit(s, p);
                    if (d == kWhite) white_pos.push_back(p);
                    if (d == kBlack) ++blacks;
                }
                int want = table[idx][s];
                int combos = 1;
                for (std::size_t i = 0; i < white_pos.size(); ++i) combos *= 3;
                for (int m = 0; m < combos; ++m) {
                    int s1 = s, s2 = s, mm = m;
                    for (int p : white_pos) {
                        switch (mm % 3) {
                            case 0: s2 = with_digit(s2, p, kGrey); break;
                            case 1: s1 = with_digit(s1, p, kGrey); break;
                            default: break;
                        }
                        mm /= 3;
                    }
                    if (a[s1] < kInf && c[s2] < kInf && a[s1] + c[s2] - blacks == want) {
                        reconstruct(nd.left, s1, chosen);
                        reconstruct(nd.right, s2, chosen);
                        return;
                    }
                }
                throw GraphError("dp reconstruction failed (join)");
            }
        }
    }
};

}  // namespace

Solution solve_exact_tw(const Graph& g, const TreeDecomposition& td, ProblemKind kind,
                        const DpConstraints& cons) {
    auto rep = validate(g, td);
    if (!rep.valid())
        throw GraphError("invalid tree decomposition: " + rep.violations.front());
    Solution sol;
    sol.kind = kind;
    if (g.n() == 0) {
        sol.feasible = true;
        sol.provenance = "dp:empty";
        return sol;
    }
    DpSetup st = make_setup(g, kind, cons);
    NiceTree nt = nicify(td);
    std::vector<char> chosen(g.n(), 0);
    int value;
    if (kind == ProblemKind::DominatingSet) {
        TernaryDp dp{&nt, &st, {}, {}};
        dp.run();
        value = dp.table[nt.root][0];
        if (value >= kInf) return Solution::infeasible_solution(kind);
        dp.reconstruct(nt.root, 0, chosen);
    } else {
        BinaryDp dp{&nt, &st, kind == ProblemKind::IndependentSet, {}};
        dp.run();
        value = dp.table[nt.root][0];
        if (value == dp.invalid()) return Solution::infeasible_solution(kind);
        dp.reconstruct(nt.root, 0, chosen);
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (chosen[v]) sol.vertices.push_back(v);
    sol.value = static_cast<int>(sol.vertices.size());
    if (sol.value != value) throw GraphError("dp value/reconstruction mismatch");
    // Feasibility re-verified independently of the tables.
    bool ok;
    if (kind == ProblemKind::DominatingSet && cons.dominate_only) {
        ok = true;
        for (Vertex v : *cons.dominate_only) {
            if (set_contains(sol.vertices, v)) continue;
            bool dom = false;
            for (Vertex u : st.padj[v])
                if (set_contains(sol.vertices, u)) { dom = true; break; }
            if (!dom) { ok = false; break; }
        }
    } else if (cons.problem_edges) {
        ok = true;
        if (kind == ProblemKind::VertexCover) {
            for (auto [u, v] : *cons.problem_edges)
                if (!set_contains(sol.vertices, u) && !set_contains(sol.vertices, v)) ok = false;
        } else if (kind == ProblemKind::IndependentSet) {
            for (auto [u, v] : *cons.problem_edges)
                if (set_contains(sol.vertices, u) && set_contains(sol.vertices, v)) ok = false;
        }
    } else {
        ok = is_feasible(g, kind, sol.vertices);
    }
    if (!ok) throw GraphError("dp produced an infeasible solution");
    sol.feasible = true;
    sol.provenance = "dp";
    return sol;
}

Solution solve_vc_constrained(const Graph& g, const VertexSet& u, const VertexSet& y,
                              const TreeDecomposition& td, const VertexSet& gu_to_g) {
    VertexSet uu = sorted_unique(u), yy = sorted_unique(y);
    g.check_vertices(uu);
    if (!is_subset(yy, uu)) throw GraphError("Y must be a subset of U");
    VertexSet uncovered_u = set_difference(uu, yy);
    for (Vertex a : uncovered_u)
        for (Vertex b : g.neighbors(a))
            if (b > a && set_contains(uncovered_u, b))
                return Solution::infeasible_solution(ProblemKind::VertexCover);

    // Vertices outside U adjacent to an uncovered U vertex are forced.
    std::vector<int> sub_id(g.n(), -1);
    for (int i = 0; i < static_cast<int>(gu_to_g.size()); ++i) sub_id[gu_to_g[i]] = i;
    DpConstraints cons;
    for (Vertex a : uncovered_u)
        for (Vertex b : g.neighbors(a)) {
            if (set_contains(uu, b)) continue;
            if (sub_id[b] < 0) throw GraphError("subgraph map does not cover V\\U");
            cons.forced_in.push_back(sub_id[b]);
        }
    cons.forced_in = sorted_unique(std::move(cons.forced_in));

    auto sub = induced_subgraph(g, gu_to_g);
    Solution inner = solve_exact_tw(sub.graph, td, ProblemKind::VertexCover, cons);
    if (!inner.feasible) return Solution::infeasible_solution(ProblemKind::VertexCover);
    Solution sol;
    sol.kind = ProblemKind::VertexCover;
    for (Vertex v : inner.vertices) sol.vertices.push_back(gu_to_g[v]);
    sol.vertices = sorted_unique(std::move(sol.vertices));
    sol.value = static_cast<int>(sol.vertices.size());
    sol.feasible = is_vertex_cover(g, set_union(sol.vertices, yy));
    if (!sol.feasible) throw GraphError("constrained cover check failed");
    sol.provenance = "dp:vc-constrained";
    return sol;
}

Solution solve_ds_strip(const Graph& g, const VertexSet& strip, const VertexSet& interior,
                        const TreeDecomposition& td, const VertexSet& strip_to_g) {
    VertexSet ss = sorted_unique(strip), ii = sorted_unique(interior);
    if (!is_subset(ii, ss)) throw GraphError("interior must be a subset of the strip");
    if (strip_to_g != ss) throw GraphError("strip map mismatch");
    std::vector<int> sub_id(g.n(), -1);
    for (int i = 0; i < static_cast<int>(strip_to_g.size()); ++i) sub_id[strip_to_g[i]] = i;
    auto sub = induced_subgraph(g, ss);
    DpConstraints cons;
    VertexSet dom;
    for (Vertex v : ii) dom.push_back(sub_id[v]);
    cons.dominate_only = sorted_unique(std::move(dom));
    Solution inner = solve_exact_tw(sub.graph, td, ProblemKind::DominatingSet, cons);
    if (!inner.feasible) return Solution::infeasible_solution(ProblemKind::DominatingSet);
    Solution sol;
    sol.kind = ProblemKind::DominatingSet;
    for (Vertex v : inner.vertices) sol.vertices.push_back(strip_to_g[v]);
    sol.vertices = sorted_unique(std::move(sol.vertices));
    sol.value = static_cast<int>(sol.vertices.size());
    sol.feasible = true;
    sol.provenance = "dp:ds-strip";
    return sol;
}

Solution brute_force(const Graph& g, ProblemKind kind, const VertexSet& forced_in,
                     const VertexSet& forbidden, const std::optional<VertexSet>& dominate_only,
                     int ceiling) {
    if (g.n() > ceiling)
        throw GraphError("brute_force: n=" + std::to_string(g.n()) + " over ceiling " +
                         std::to_string(ceiling));
    g.check_vertices(forced_in);
    g.check_vertices(forbidden);
    const int n = g.n();
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::uint32_t forced = 0, blocked = 0, domreq = n == 32 ? ~0u : (1u << n) - 1;
    for (Vertex v : forced_in) forced |= 1u << v;
    for (Vertex v : forbidden) blocked |= 1u << v;
    if (dominate_only) {
        domreq = 0;
        for (Vertex v : *dominate_only) domreq |= 1u << v;
    }
    bool minimize = is_minimization(kind);
    int best = minimize ? kInf : -1;
    std::uint32_t best_mask = 0;
    bool found = false;
    std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t m64 = 0; m64 < total; ++m64) {
        std::uint32_t m = static_cast<std::uint32_t>(m64);
        if ((m & forced) != forced || (m & blocked) != 0) continue;
        bool ok = true;
        switch (kind) {
            case ProblemKind::VertexCover:
                for (int v = 0; v < n && ok; ++v)
                    if (!((m >> v) & 1) && (adj[v] & ~m) != 0) ok = false;
                break;
            case ProblemKind::DominatingSet:
                for (int v = 0; v < n && ok; ++v)
                    if (((domreq >> v) & 1) && !((m >> v) & 1) && (adj[v] & m) == 0) ok = false;
                break;
            case ProblemKind::IndependentSet:
                for (int v = 0; v < n && ok; ++v)
                    if (((m >> v) & 1) && (adj[v] & m) != 0) ok = false;
                break;
        }
        if (!ok) continue;
        int val = std::popcount(m);
        if (!found || (minimize ? val < best : val > best)) {
            best = val;
            best_mask = m;
            found = true;
        }
    }
    if (!found) return Solution::infeasible_solution(kind);
    Solution sol;
    sol.kind = kind;
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1) sol.vertices.push_back(v);
    sol.value = best;
    sol.feasible = true;
    sol.provenance = "oracle:enumeration";
    return sol;
}

}  // namespace treeshift
