#include "treeshift/cliquesum.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace treeshift {

ValidityReport validate_csd(const Graph& g, const CliqueSumDecomposition& d,
                            int lambda, int mu) {
    ValidityReport rep = validate(g, d.tree);
    if (d.apex.size() != d.tree.blocks.size()) {
        rep.violations.push_back("apex list size does not match node count");
        return rep;
    }
    for (int t = 0; t < d.node_count(); ++t) {
        if (!is_subset(d.apex[t], d.tree.blocks[t]))
            rep.violations.push_back("apex set of node " + std::to_string(t) +
                                     " not inside its block");
        if (static_cast<int>(d.apex[t].size()) > mu)
            rep.violations.push_back("apex set of node " + std::to_string(t) +
                                     " exceeds mu=" + std::to_string(mu));
        int ad = static_cast<int>(d.tree.adhesion_set(t).size());
        if (ad > lambda + mu + 1)
            rep.violations.push_back("adhesion of node " + std::to_string(t) + " is " +
                                     std::to_string(ad) + " > lambda+mu+1");
    }
    return rep;
}

namespace {

std::string join_csv(const VertexSet& xs) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < xs.size(); ++i) ss << (i ? "," : "") << xs[i] + 1;
    return ss.str();
}

VertexSet parse_csv(const std::string& s) {
    VertexSet out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok) - 1);
        } catch (const std::exception&) {
            throw ParseError("bad vertex id '" + tok + "' in list");
        }
    }
    return sorted_unique(std::move(out));
}

}  // namespace

void serialize_csd(const CliqueSumDecomposition& d, int n, std::ostream& out) {
    out << "csd " << d.node_count() << ' ' << n << '\n';
    for (int t = 0; t < d.node_count(); ++t) {
        out << "node " << t + 1 << " parent=";
        if (d.tree.parent[t] < 0)
            out << '-';
        else
            out << d.tree.parent[t] + 1;
        out << " block=" << join_csv(d.tree.blocks[t]) << " apex=" << join_csv(d.apex[t])
            << '\n';
    }
}

std::string serialize_csd(const CliqueSumDecomposition& d, int n) {
    std::ostringstream ss;
    serialize_csd(d, n, ss);
    return ss.str();
}

CliqueSumDecomposition parse_csd(std::istream& in) {
    CliqueSumDecomposition d;
    std::string line;
    int lineno = 0, nodes = -1;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "csd") {
            int n;
            if (!(ss >> nodes >> n) || nodes < 0) fail("malformed csd header");
            d.tree.blocks.assign(nodes, {});
            d.tree.parent.assign(nodes, -1);
            d.apex.assign(nodes, {});
        } else if (tag == "node") {
            if (nodes < 0) fail("node line before header");
            int id;
            if (!(ss >> id) || id < 1 || id > nodes) fail("bad node id");
            std::string field;
            while (ss >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) fail("malformed field '" + field + "'");
                std::string key = field.substr(0, eq), val = field.substr(eq + 1);
                if (key == "parent") {
                    if (val == "-") {
                        d.tree.parent[id - 1] = -1;
                    } else {
                        int p = 0;
                        try {
                            p = std::stoi(val);
                        } catch (const std::exception&) {
                            fail("bad parent '" + val + "'");
                        }
                        if (p < 1 || p > nodes) fail("parent id out of range");
                        d.tree.parent[id - 1] = p - 1;
                    }
                } else if (key == "block")
                    d.tree.blocks[id - 1] = parse_csv(val);
                else if (key == "apex")
                    d.apex[id - 1] = parse_csv(val);
                else
                    fail("unknown field '" + key + "'");
            }
        } else {
            fail("unrecognized line prefix '" + tag + "'");
        }
    }
    if (nodes < 0) throw ParseError("missing csd header");
    d.tree.rebuild_children();
    return d;
}

CliqueSumDecomposition parse_csd(const std::string& text) {
    std::istringstream ss(text);
    return parse_csd(ss);
}

// ---------------------------------------------------------------------------
// The leaf-to-root recursion.
//
// Per node t a table indexed by assignments over the adhesion set A_t holds
// the best solution for the subtree graph consistent with the assignment, or
// absent for infeasible keys. VC/IS keys are subsets of A_t (the solution
// vertices the parent side accounts for itself); DS keys label each adhesion
// vertex chosen / needs-domination-from-below / free. Within a node, an
// assignment zeta over W = U_t ∪ A_t is enumerated; the block minus W is
// shifted per connected component of the torso arena, and child tables plug
// in at their adhesion cliques via small label enumerations.

namespace {

// DS labels over W / adhesion sets.
constexpr int kChosen = 0;
constexpr int kNeedsDom = 1;
constexpr int kFree = 2;

int pow3i(int e) {
    int r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct ChildInfo {
    int node;
    VertexSet adhesion;    // A_{t'}, g ids
    VertexSet strip_part;  // A_{t'} \ W
};

// A candidate partial solution: the vertex set (g ids) plus the node-level
// domination targets it takes care of. Cost is always |set|.
struct Option {
    VertexSet set;
    int covered = 0;
};

// One labeling choice for a child: the resolved table entry plus the
// constraints it imposes on the surrounding strips.
struct KidChoice {
    VertexSet set;             // child table entry
    int covered = 0;           // target bits the child dominates
    VertexSet chosen_arena;    // A'\W vertices placed in the solution
    VertexSet unchosen_arena;  // IS: A'\W vertices pinned out
    VertexSet exempt_arena;    // DS: A'\W vertices the child dominates
};

using TableRow = std::vector<std::optional<VertexSet>>;

struct Recursion {
    const Graph* g = nullptr;
    const CliqueSumDecomposition* d = nullptr;
    ProblemKind kind = ProblemKind::VertexCover;
    const PtasConfig* cfg = nullptr;
    int k = 1;
    std::vector<TableRow> tables;
    std::vector<StripAudit> audits;
    bool lambda_ok = true;

    bool maximize() const { return kind == ProblemKind::IndependentSet; }

    bool better(const VertexSet& a, const VertexSet& b) const {
        if (a.size() != b.size())
            return maximize() ? a.size() > b.size() : a.size() < b.size();
        return lex_less(a, b);
    }

    int key_space(const VertexSet& adhesion) const {
        return kind == ProblemKind::DominatingSet
                   ? pow3i(static_cast<int>(adhesion.size()))
                   : 1 << adhesion.size();
    }

    int make_key(const VertexSet& adhesion, const std::function<int(Vertex)>& value) const {
        int key = 0;
        if (kind == ProblemKind::DominatingSet) {
            int p = 1;
            for (Vertex v : adhesion) {
                key += value(v) * p;
                p *= 3;
            }
        } else {
            for (std::size_t b = 0; b < adhesion.size(); ++b)
                if (value(adhesion[b])) key |= 1 << b;
        }
        return key;
    }

    void process(int t);
    std::optional<VertexSet> assemble(int t, const std::function<int(Vertex)>& zeta,
                                      const VertexSet& w, const VertexSet& z_chosen,
                                      const std::vector<ChildInfo>& kids);
};

// Merges `opts` into the accumulator over covered-target subsets, taking
// unions of vertex sets. Returns false when no entry survives.
bool fold_options(std::vector<std::optional<VertexSet>>& acc,
                  const std::vector<Option>& opts, const Recursion& rec) {
    const int space = static_cast<int>(acc.size());
    std::vector<std::optional<VertexSet>> next(space);
    for (int m = 0; m < space; ++m) {
        if (!acc[m]) continue;
        for (const auto& o : opts) {
            int nm = m | o.covered;
            VertexSet u = set_union(*acc[m], o.set);
            if (!next[nm] || rec.better(u, *next[nm])) next[nm] = std::move(u);
        }
    }
    acc = std::move(next);
    return std::any_of(acc.begin(), acc.end(), [](const auto& e) { return bool(e); });
}

std::optional<VertexSet> Recursion::assemble(int t, const std::function<int(Vertex)>& zeta,
                                             const VertexSet& w, const VertexSet& z_chosen,
                                             const std::vector<ChildInfo>& kids) {
    const Graph& G = *g;
    const VertexSet& block = d->tree.blocks[t];

    if (kind == ProblemKind::VertexCover) {
        for (Vertex a : w)
            for (Vertex b : G.neighbors(a))
                if (b > a && set_contains(w, b) && !set_contains(z_chosen, a) &&
                    !set_contains(z_chosen, b))
                    return std::nullopt;
    }
    if (kind == ProblemKind::IndependentSet && !is_independent_set(G, z_chosen))
        return std::nullopt;

    // Node-level domination targets: labeled vertices still needing help from
    // this subtree, not already next to a chosen W vertex.
    VertexSet targets;
    if (kind == ProblemKind::DominatingSet) {
        for (Vertex v : w) {
            if (zeta(v) != kNeedsDom || set_contains(z_chosen, v)) continue;
            bool dom = false;
            for (Vertex u : G.neighbors(v))
                if (set_contains(z_chosen, u)) {
                    dom = true;
                    break;
                }
            if (!dom) targets.push_back(v);
        }
        if (targets.size() > 8) throw GraphError("clique-sum node has too many apex targets");
    }
    const int tn = static_cast<int>(targets.size());
    auto target_bit = [&](Vertex v) -> int {
        auto it = std::lower_bound(targets.begin(), targets.end(), v);
        return it != targets.end() && *it == v ? static_cast<int>(it - targets.begin()) : -1;
    };

    std::vector<std::optional<VertexSet>> acc(1 << tn);
    acc[0] = VertexSet{};

    std::vector<ChildInfo> strip_kids, direct_kids;
    for (const auto& c : kids)
        (c.strip_part.empty() ? direct_kids : strip_kids).push_back(c);

    // Enumerates the label/claim choices of one child; resolves each against
    // the child table and drops infeasible keys.
    auto kid_choices = [&](const ChildInfo& c) {
        std::vector<KidChoice> out;
        const VertexSet& sp = c.strip_part;
        VertexSet claimable;
        for (Vertex v : c.adhesion)
            if (target_bit(v) >= 0) claimable.push_back(v);
        int arena_states = kind == ProblemKind::DominatingSet
                               ? pow3i(static_cast<int>(sp.size()))
                               : 1 << sp.size();
        for (int am = 0; am < arena_states; ++am) {
            for (int cm = 0; cm < (1 << claimable.size()); ++cm) {
                auto arena_label = [&](Vertex v) {
                    auto it = std::lower_bound(sp.begin(), sp.end(), v);
                    int idx = static_cast<int>(it - sp.begin());
                    return kind == ProblemKind::DominatingSet ? am / pow3i(idx) % 3
                                                             : (am >> idx) & 1;
                };
                auto value = [&](Vertex v) -> int {
                    if (set_contains(sp, v)) return arena_label(v);
                    if (set_contains(z_chosen, v))
                        return kind == ProblemKind::DominatingSet ? kChosen : 1;
                    if (kind != ProblemKind::DominatingSet) return 0;
                    for (std::size_t b = 0; b < claimable.size(); ++b)
                        if (claimable[b] == v) return (cm >> b) & 1 ? kNeedsDom : kFree;
                    return kFree;
                };
                const auto& entry = tables[c.node][make_key(c.adhesion, value)];
                if (!entry) continue;
                KidChoice kc;
                kc.set = *entry;
                for (std::size_t b = 0; b < claimable.size(); ++b)
                    if ((cm >> b) & 1) kc.covered |= 1 << target_bit(claimable[b]);
                for (Vertex v : sp) {
                    int lab = arena_label(v);
                    if (kind == ProblemKind::DominatingSet) {
                        if (lab == kChosen) kc.chosen_arena.push_back(v);
                        if (lab == kNeedsDom) kc.exempt_arena.push_back(v);
                    } else if (lab == 1) {
                        kc.chosen_arena.push_back(v);
                    } else if (kind == ProblemKind::IndependentSet) {
                        kc.unchosen_arena.push_back(v);
                    }
                }
                out.push_back(std::move(kc));
            }
        }
        return out;
    };

    // Direct children: adhesion inside W, fold straight into the accumulator.
    for (const auto& c : direct_kids) {
        std::vector<Option> opts;
        for (auto& kc : kid_choices(c)) opts.push_back({std::move(kc.set), kc.covered});
        if (!fold_options(acc, opts, *this)) return std::nullopt;
    }

    // The arena: torso minus W.
    auto tor = torso(G, d->tree, t);
    std::vector<int> tor_local(G.n(), -1);
    for (int i = 0; i < static_cast<int>(tor.to_host.size()); ++i)
        tor_local[tor.to_host[i]] = i;
    VertexSet r_local;
    for (Vertex v : set_difference(block, w)) r_local.push_back(tor_local[v]);
    auto arena = induced_subgraph(tor.graph, r_local);
    VertexSet arena_g(arena.graph.n());
    for (int i = 0; i < arena.graph.n(); ++i) arena_g[i] = tor.to_host[arena.to_host[i]];

    for (const auto& comp : connected_components(arena.graph)) {
        auto sub = induced_subgraph(arena.graph, comp);
        VertexSet sub_g(sub.graph.n());
        for (int i = 0; i < sub.graph.n(); ++i) sub_g[i] = arena_g[sub.to_host[i]];

        std::vector<int> comp_kids;
        for (int ci = 0; ci < static_cast<int>(strip_kids.size()); ++ci)
            if (set_contains(sub_g, strip_kids[ci].strip_part.front()))
                comp_kids.push_back(ci);

        auto layers = bfs_layers(sub.graph, 0);  // lowest g id of the component
        std::vector<std::optional<VertexSet>> comp_best;  // per covered subset

        for (int i = 1; i <= k; ++i) {
            auto strips = build_strips(layers, kind, k, i);
            struct Task {
                Strip strip;
                VertexSet g_vertices, interior_g;
                TreeDecomposition td;  // strip-local ids
                VertexSet reach_targets;
            };
            std::vector<Task> tasks(strips.size());
            for (std::size_t s = 0; s < strips.size(); ++s) {
                Task& tk = tasks[s];
                tk.strip = strips[s];
                for (Vertex v : strips[s].vertices) tk.g_vertices.push_back(sub_g[v]);
                for (Vertex v : strips[s].interior) tk.interior_g.push_back(sub_g[v]);
                auto tstrip = induced_subgraph(sub.graph, strips[s].vertices);
                int bound = cfg->lambda * (strips[s].hi - strips[s].lo + 1);
                auto dec = decompose_strip(tstrip.graph, bound);
                tk.td = dec.td;
                bool within = dec.width <= bound;
                audits.push_back({i, strips[s].band,
                                  static_cast<int>(strips[s].vertices.size()), dec.width,
                                  within});
                if (!within) lambda_ok = false;
                if (kind == ProblemKind::DominatingSet)
                    for (Vertex tv : targets)
                        for (Vertex u : G.neighbors(tv))
                            if (set_contains(tk.g_vertices, u)) {
                                tk.reach_targets.push_back(tv);
                                break;
                            }
            }

            // Assign each component child to the least band containing its
            // adhesion clique.
            bool assignable = true;
            std::vector<int> assigned(comp_kids.size(), -1);
            VertexSet stranded_forbidden;
            for (std::size_t ki = 0; ki < comp_kids.size(); ++ki) {
                const auto& sp = strip_kids[comp_kids[ki]].strip_part;
                for (std::size_t s = 0; s < tasks.size(); ++s)
                    if (is_subset(sp, tasks[s].g_vertices)) {
                        assigned[ki] = static_cast<int>(s);
                        break;
                    }
                if (assigned[ki] < 0) {
                    // Only IS gap rows can strand a clique; pin the vertices
                    // out and resolve the child like a direct one.
                    if (kind != ProblemKind::IndependentSet) {
                        assignable = false;
                        break;
                    }
                    for (Vertex v : sp) stranded_forbidden.push_back(v);
                }
            }
            if (!assignable) continue;
            stranded_forbidden = sorted_unique(std::move(stranded_forbidden));

            // Per-child choice lists; stranded IS children collapse to the
            // all-unchosen labeling.
            std::vector<std::vector<KidChoice>> choices(comp_kids.size());
            bool dead = false;
            long long combos = 1;
            for (std::size_t ki = 0; ki < comp_kids.size() && !dead; ++ki) {
                const auto& c = strip_kids[comp_kids[ki]];
                if (assigned[ki] < 0) {
                    auto value = [&](Vertex v) { return set_contains(z_chosen, v) ? 1 : 0; };
                    const auto& entry = tables[c.node][make_key(c.adhesion, value)];
                    if (!entry) {
                        dead = true;
                        break;
                    }
                    choices[ki].push_back({*entry, 0, {}, {}, {}});
                } else {
                    choices[ki] = kid_choices(c);
                    if (choices[ki].empty()) {
                        dead = true;
                        break;
                    }
                }
                combos *= static_cast<long long>(choices[ki].size());
                if (combos > 200000) throw GraphError("clique-sum child labeling explosion");
            }
            if (dead) continue;

            // Cached constrained strip solve.
            std::map<std::string, std::optional<VertexSet>> cache;
            auto solve_strip_c = [&](std::size_t s, const VertexSet& forced,
                                     const VertexSet& forbidden, const VertexSet& exempt,
                                     int tmask) -> const std::optional<VertexSet>& {
                const Task& tk = tasks[s];
                std::string sig = std::to_string(s) + '|' + join_csv(forced) + '|' +
                                  join_csv(forbidden) + '|' + join_csv(exempt) + '|' +
                                  std::to_string(tmask);
                auto it = cache.find(sig);
                if (it != cache.end()) return it->second;

                // Contradictory labelings from different children are dead
                // combos, not errors.
                if (!set_intersection(forced, forbidden).empty())
                    return cache.emplace(std::move(sig), std::nullopt).first->second;

                VertexSet piece_g = tk.g_vertices;
                VertexSet t_sel;
                if (kind == ProblemKind::DominatingSet) {
                    piece_g = set_union(piece_g, tk.reach_targets);
                    for (Vertex tv : tk.reach_targets)
                        if ((tmask >> target_bit(tv)) & 1) t_sel.push_back(tv);
                }
                auto piece = induced_subgraph(G, piece_g);
                std::vector<int> loc(G.n(), -1);
                for (int p = 0; p < piece.graph.n(); ++p) loc[piece.to_host[p]] = p;

                // The strip decomposition indexes vertices by their rank in
                // the strip list, which matches the piece-local order; DS
                // ride-along targets join every block.
                TreeDecomposition td = tk.td;
                for (auto& b : td.blocks) {
                    for (Vertex& v : b) v = loc[tk.g_vertices[v]];
                    if (kind == ProblemKind::DominatingSet)
                        for (Vertex tv : tk.reach_targets) b.push_back(loc[tv]);
                    b = sorted_unique(std::move(b));
                }
                td.rebuild_children();

                DpConstraints cons;
                for (Vertex v : forced)
                    if (loc[v] >= 0) cons.forced_in.push_back(loc[v]);
                for (Vertex v : forbidden)
                    if (loc[v] >= 0) cons.forbidden.push_back(loc[v]);
                if (kind == ProblemKind::DominatingSet) {
                    for (Vertex tv : tk.reach_targets) cons.forbidden.push_back(loc[tv]);
                    VertexSet dom;
                    for (Vertex v : set_difference(tk.interior_g, exempt))
                        dom.push_back(loc[v]);
                    for (Vertex tv : t_sel) dom.push_back(loc[tv]);
                    cons.dominate_only = sorted_unique(std::move(dom));
                }
                cons.forced_in = sorted_unique(std::move(cons.forced_in));
                cons.forbidden = sorted_unique(std::move(cons.forbidden));

                std::optional<VertexSet> res;
                Solution sol = solve_exact_tw(piece.graph, td, kind, cons);
                if (sol.feasible) {
                    VertexSet out;
                    for (Vertex v : sol.vertices) out.push_back(piece.to_host[v]);
                    res = sorted_unique(std::move(out));
                }
                return cache.emplace(std::move(sig), std::move(res)).first->second;
            };

            // Base constraints induced by zeta, identical across combos.
            std::vector<VertexSet> base_forced(tasks.size()), base_forbidden(tasks.size()),
                base_exempt(tasks.size());
            for (std::size_t s = 0; s < tasks.size(); ++s) {
                for (Vertex x : tasks[s].g_vertices) {
                    bool next_to_unchosen_w = false, next_to_chosen = false;
                    for (Vertex u : G.neighbors(x)) {
                        if (set_contains(w, u) && !set_contains(z_chosen, u))
                            next_to_unchosen_w = true;
                        if (set_contains(z_chosen, u)) next_to_chosen = true;
                    }
                    if (kind == ProblemKind::VertexCover && next_to_unchosen_w)
                        base_forced[s].push_back(x);
                    if (kind == ProblemKind::IndependentSet && next_to_chosen)
                        base_forbidden[s].push_back(x);
                    if (kind == ProblemKind::DominatingSet && next_to_chosen)
                        base_exempt[s].push_back(x);
                }
                if (kind == ProblemKind::IndependentSet)
                    base_forbidden[s] = set_union(
                        base_forbidden[s],
                        set_intersection(stranded_forbidden, tasks[s].g_vertices));
            }

            std::vector<std::optional<VertexSet>> shift_best;  // per covered subset
            std::vector<std::size_t> odo(comp_kids.size(), 0);
            bool more = true;
            while (more) {
                VertexSet forced_all, forbidden_all, exempt_all, kid_union;
                int kid_covered = 0;
                for (std::size_t ki = 0; ki < comp_kids.size(); ++ki) {
                    const KidChoice& kc = choices[ki][odo[ki]];
                    forced_all = set_union(forced_all, kc.chosen_arena);
                    forbidden_all = set_union(forbidden_all, kc.unchosen_arena);
                    exempt_all = set_union(exempt_all, kc.exempt_arena);
                    kid_union = set_union(kid_union, kc.set);
                    kid_covered |= kc.covered;
                }

                std::vector<std::optional<VertexSet>> cacc(1 << tn);
                cacc[kid_covered] = kid_union;
                bool combo_ok = true;
                for (std::size_t s = 0; s < tasks.size() && combo_ok; ++s) {
                    VertexSet f = set_union(
                        base_forced[s], set_intersection(forced_all, tasks[s].g_vertices));
                    VertexSet fb = set_union(
                        base_forbidden[s],
                        set_intersection(forbidden_all, tasks[s].g_vertices));
                    VertexSet ex = set_union(
                        base_exempt[s], set_intersection(exempt_all, tasks[s].interior_g));
                    int reach_bits = 0;
                    for (Vertex tv : tasks[s].reach_targets)
                        reach_bits |= 1 << target_bit(tv);
                    std::vector<Option> opts;
                    for (int tm = reach_bits;; tm = (tm - 1) & reach_bits) {
                        const auto& sol = solve_strip_c(s, f, fb, ex, tm);
                        if (sol) opts.push_back({*sol, tm});
                        if (tm == 0) break;
                    }
                    combo_ok = fold_options(cacc, opts, *this);
                }
                if (combo_ok) {
                    if (shift_best.empty()) shift_best.assign(1 << tn, std::nullopt);
                    for (int m = 0; m < (1 << tn); ++m)
                        if (cacc[m] && (!shift_best[m] || better(*cacc[m], *shift_best[m])))
                            shift_best[m] = cacc[m];
                }

                if (odo.empty()) break;
                std::size_t pos = 0;
                while (pos < odo.size() && ++odo[pos] == choices[pos].size()) odo[pos++] = 0;
                more = pos < odo.size();
            }

            if (shift_best.empty()) continue;
            if (comp_best.empty()) {
                comp_best = shift_best;
            } else {
                for (int m = 0; m < (1 << tn); ++m)
                    if (shift_best[m] &&
                        (!comp_best[m] || better(*shift_best[m], *comp_best[m])))
                        comp_best[m] = shift_best[m];
            }
        }

        if (comp_best.empty()) return std::nullopt;
        std::vector<Option> comp_opts;
        for (int m = 0; m < (1 << tn); ++m)
            if (comp_best[m]) comp_opts.push_back({*comp_best[m], m});
        if (!fold_options(acc, comp_opts, *this)) return std::nullopt;
    }

    return acc[(1 << tn) - 1];
}

void Recursion::process(int t) {
    const VertexSet adhesion = d->tree.adhesion_set(t);
    const VertexSet& apex = d->apex[t];
    const VertexSet w = set_union(adhesion, apex);
    const bool ds = kind == ProblemKind::DominatingSet;
    if (static_cast<int>(w.size()) > (ds ? 8 : 16))
        throw GraphError("clique-sum node interface too large for enumeration");

    std::vector<ChildInfo> kids;
    for (int c : d->tree.children[t]) {
        VertexSet ca = d->tree.adhesion_set(c);
        kids.push_back({c, ca, set_difference(ca, w)});
    }

    TableRow row(key_space(adhesion));
    const int states = ds ? pow3i(static_cast<int>(w.size())) : 1 << w.size();
    for (int zm = 0; zm < states; ++zm) {
        auto zeta = [&](Vertex v) -> int {
            auto it = std::lower_bound(w.begin(), w.end(), v);
            int idx = static_cast<int>(it - w.begin());
            return ds ? zm / pow3i(idx) % 3 : (zm >> idx) & 1;
        };
        if (ds) {
            // Apex vertices outside the adhesion must resolve locally.
            bool ok = true;
            for (Vertex v : set_difference(apex, adhesion))
                if (zeta(v) == kFree) ok = false;
            if (!ok) continue;
        }
        VertexSet z_chosen;
        for (Vertex v : w)
            if ((ds && zeta(v) == kChosen) || (!ds && zeta(v) == 1)) z_chosen.push_back(v);

        auto res = assemble(t, zeta, w, z_chosen, kids);
        if (!res) continue;

        for (int key = 0; key < key_space(adhesion); ++key) {
            VertexSet key_chosen;
            bool compat = true;
            for (std::size_t b = 0; b < adhesion.size() && compat; ++b) {
                Vertex v = adhesion[b];
                int zl = zeta(v);
                if (!ds) {
                    bool in_key = (key >> b) & 1;
                    if (in_key && zl != 1) compat = false;
                    // Extra chosen adhesion vertices: fine for VC (covers are
                    // monotone), breaks independence bookkeeping for IS.
                    if (!in_key && zl == 1 && kind == ProblemKind::IndependentSet)
                        compat = false;
                    if (in_key) key_chosen.push_back(v);
                } else {
                    int digit = key / pow3i(static_cast<int>(b)) % 3;
                    if (digit == kChosen && zl != kChosen) compat = false;
                    if (digit == kNeedsDom && zl == kFree) compat = false;
                    if (digit == kChosen) key_chosen.push_back(v);
                }
            }
            if (!compat) continue;
            VertexSet stored = set_union(*res, set_difference(z_chosen, key_chosen));
            if (!row[key] || better(stored, *row[key])) row[key] = std::move(stored);
        }
    }
    tables[t] = std::move(row);
}

}  // namespace

PtasResult ptas_cliquesum(const Graph& g, const CliqueSumDecomposition& d,
                          ProblemKind kind, const PtasConfig& cfg) {
    auto rep = validate_csd(g, d, cfg.lambda, cfg.mu);
    if (!rep.valid())
        throw GraphError("invalid clique-sum decomposition: " + rep.violations.front());

    Recursion rec;
    rec.g = &g;
    rec.d = &d;
    rec.kind = kind;
    rec.cfg = &cfg;
    rec.k = cfg.k_for(kind);
    rec.tables.resize(d.node_count());

    std::vector<int> order, stack{d.tree.root};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        order.push_back(t);
        for (int c : d.tree.children[t]) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
    for (int t : order) rec.process(t);

    const auto& entry = rec.tables[d.tree.root][0];
    if (!entry) throw GraphError("clique-sum recursion produced no feasible solution");
    if (!is_feasible(g, kind, *entry))
        throw GraphError("clique-sum recursion produced an infeasible solution");

    PtasResult result;
    result.solution.kind = kind;
    result.solution.vertices = *entry;
    result.solution.value = static_cast<int>(entry->size());
    result.solution.feasible = true;
    result.solution.provenance =
        "clique-sum recursion over " + std::to_string(d.node_count()) + " nodes";
    ShiftAudit audit;
    audit.strips = std::move(rec.audits);
    audit.lambda_bound_respected = rec.lambda_ok;
    result.components.push_back(std::move(audit));
    return result;
}

}  // namespace treeshift
