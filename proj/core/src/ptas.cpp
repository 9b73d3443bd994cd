#include "treeshift/ptas.hpp"

#include <algorithm>
#include <sstream>

namespace treeshift {

std::vector<Strip> build_strips(const BfsLayers& layers, ProblemKind kind, int k, int i) {
    if (k < 1 || i < 1 || i > k) throw GraphError("shift index out of range 1..k");
    std::vector<Strip> out;
    int maxlevel = static_cast<int>(layers.levels.size()) - 1;
    for (int j = 0;; ++j) {
        int lo, hi;
        switch (kind) {
            case ProblemKind::VertexCover:
                lo = (j - 1) * k + i;
                hi = j * k + i;
                break;
            case ProblemKind::DominatingSet:
                lo = (j - 1) * k + i - 1;
                hi = j * k + i;
                break;
            case ProblemKind::IndependentSet:
                lo = (j - 1) * k + i;
                hi = j * k + i - 2;
                break;
            default:
                throw GraphError("unknown problem kind");
        }
        if (j > 0 && lo > maxlevel) break;
        Strip s;
        s.problem = kind;
        s.shift = i;
        s.band = j;
        s.lo = std::max(lo, 0);
        s.hi = hi;
        s.vertices = level_interval(layers, lo, hi);
        if (kind == ProblemKind::DominatingSet)
            s.interior = level_interval(layers, (j - 1) * k + i, j * k + i - 1);
        else
            s.interior = s.vertices;
        if (!s.vertices.empty()) out.push_back(std::move(s));
        // Stop only once the coverage region (the interior, for the
        // dominating-set geometry) has reached the last level; the plain
        // span reaching it is not enough, because the top level would then
        // sit on a boundary only and never inside any interior.
        int cover_hi = kind == ProblemKind::DominatingSet ? j * k + i - 1 : hi;
        if (cover_hi >= maxlevel) break;
        if (j == 0 && lo > maxlevel) break;
    }
    return out;
}

std::vector<Strip> build_strips(const Graph& g, Vertex v, ProblemKind kind, int k, int i) {
    return build_strips(bfs_layers(g, v), kind, k, i);
}

StripDecomposition decompose_strip(const Graph& strip_graph, int lambda_bound) {
    StripDecomposition out;
    out.td = heuristic_decomposition(strip_graph, EliminationStrategy::MinFill);
    out.width = width(out.td);
    out.exact = false;
    if (out.width > lambda_bound && strip_graph.n() <= kDefaultExactCeiling) {
        auto ex = exact_treewidth(strip_graph, 5'000'000);
        if (ex.width < out.width) {
            out.td = ex.decomposition;
            out.width = ex.width;
        }
        out.exact = ex.exact;
    }
    return out;
}

namespace {

// Solves one strip on a connected component subgraph `sub`; forced/forbidden
// are in sub ids and are intersected with the strip here.
VertexSet solve_strip(const Graph& sub, const Strip& strip, const PtasConfig& cfg,
                      const VertexSet& forced, const VertexSet& forbidden,
                      const VertexSet& ds_exempt, std::vector<StripAudit>& audits) {
    auto piece = induced_subgraph(sub, strip.vertices);
    int rows = std::max(std::min<int>(strip.hi, 1 << 30), strip.lo) - strip.lo + 1;
    int bound = cfg.lambda * std::max(rows, 1);
    auto dec = decompose_strip(piece.graph, bound);
    audits.push_back({strip.shift, strip.band, piece.graph.n(), dec.width, dec.width <= bound});

    std::vector<int> local(sub.n(), -1);
    for (int idx = 0; idx < static_cast<int>(piece.to_host.size()); ++idx)
        local[piece.to_host[idx]] = idx;

    DpConstraints cons;
    for (Vertex v : set_intersection(forced, strip.vertices)) cons.forced_in.push_back(local[v]);
    for (Vertex v : set_intersection(forbidden, strip.vertices)) cons.forbidden.push_back(local[v]);
    cons.forced_in = sorted_unique(std::move(cons.forced_in));
    cons.forbidden = sorted_unique(std::move(cons.forbidden));

    Solution inner;
    if (strip.problem == ProblemKind::DominatingSet) {
        VertexSet dom;
        for (Vertex v : set_difference(strip.interior, ds_exempt)) dom.push_back(local[v]);
        cons.dominate_only = sorted_unique(std::move(dom));
        inner = solve_exact_tw(piece.graph, dec.td, ProblemKind::DominatingSet, cons);
    } else {
        inner = solve_exact_tw(piece.graph, dec.td, strip.problem, cons);
    }
    if (!inner.feasible)
        throw GraphError("strip subproblem infeasible");  // cannot happen unconstrained
    VertexSet out;
    for (Vertex v : inner.vertices) out.push_back(piece.to_host[v]);
    return sorted_unique(std::move(out));
}

struct ShiftRun {
    VertexSet solution;  // sub ids
    ShiftAudit audit;
    bool feasible = true;
};

// The core shifting loop on a connected subgraph.
ShiftRun run_shifting(const Graph& sub, ProblemKind kind, const PtasConfig& cfg, Vertex center,
                      const VertexSet& forced, const VertexSet& forbidden,
                      const VertexSet& ds_exempt) {
    int k = cfg.k_for(kind);
    auto layers = bfs_layers(sub, center);
    ShiftRun run;
    run.audit.center = center;
    bool minimize = is_minimization(kind);
    int best_val = 0;
    for (int i = 1; i <= k; ++i) {
        VertexSet xi;
        for (const Strip& s : build_strips(layers, kind, k, i))
            xi = set_union(xi, solve_strip(sub, s, cfg, forced, forbidden, ds_exempt,
                                           run.audit.strips));
        int val = static_cast<int>(xi.size());
        run.audit.shift_values.push_back(val);
        if (i == 1 || (minimize ? val < best_val : val > best_val)) {
            best_val = val;
            run.audit.chosen_shift = i;
            run.solution = std::move(xi);
        }
    }
    for (const auto& a : run.audit.strips)
        if (!a.within_lambda_bound) run.audit.lambda_bound_respected = false;
    return run;
}

Vertex pick_center(const Graph& sub, const PtasConfig& cfg) {
    if (cfg.center_rule == CenterRule::Given && cfg.given_center < sub.n())
        return cfg.given_center;
    return 0;
}

// Runs shifting on every component of `g` (restricted to `domain` when
// non-null), unioning per-component best shifts.
struct ComponentOutcome {
    VertexSet solution;  // g ids
    std::vector<ShiftAudit> audits;
};

ComponentOutcome shift_components(const Graph& g, ProblemKind kind, const PtasConfig& cfg,
                                  const VertexSet& forced_g, const VertexSet& forbidden_g,
                                  const VertexSet& ds_exempt_g) {
    ComponentOutcome out;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        std::vector<int> local(g.n(), -1);
        for (int i = 0; i < static_cast<int>(sub.to_host.size()); ++i) local[sub.to_host[i]] = i;
        auto map_in = [&](const VertexSet& xs) {
            VertexSet r;
            for (Vertex v : xs)
                if (local[v] >= 0) r.push_back(local[v]);
            return sorted_unique(std::move(r));
        };
        VertexSet forced = map_in(forced_g), forbidden = map_in(forbidden_g),
                  exempt = map_in(ds_exempt_g);

        ShiftRun best;
        bool have = false;
        if (cfg.center_rule == CenterRule::BestOfAll) {
            for (Vertex c = 0; c < sub.graph.n(); ++c) {
                auto run = run_shifting(sub.graph, kind, cfg, c, forced, forbidden, exempt);
                int v = static_cast<int>(run.solution.size());
                int bv = static_cast<int>(best.solution.size());
                if (!have || (is_minimization(kind) ? v < bv : v > bv)) {
                    best = std::move(run);
                    have = true;
                }
            }
        } else {
            best = run_shifting(sub.graph, kind, cfg, pick_center(sub.graph, cfg), forced,
                                forbidden, exempt);
        }
        for (Vertex v : best.solution) out.solution.push_back(sub.to_host[v]);
        best.audit.center = sub.to_host[best.audit.center];
        out.audits.push_back(std::move(best.audit));
    }
    out.solution = sorted_unique(std::move(out.solution));
    return out;
}

}  // namespace

std::string PtasResult::describe() const {
    std::ostringstream ss;
    for (const auto& a : components) {
        ss << "component center=" << a.center << " chosen_shift=" << a.chosen_shift
           << " shift_values=[";
        for (std::size_t i = 0; i < a.shift_values.size(); ++i)
            ss << (i ? "," : "") << a.shift_values[i];
        ss << "] lambda_ok=" << (a.lambda_bound_respected ? "yes" : "no") << '\n';
    }
    return ss.str();
}

PtasResult ptas_local(const Graph& g, ProblemKind kind, const PtasConfig& cfg) {
    PtasResult res;
    auto outcome = shift_components(g, kind, cfg, {}, {}, {});
    res.components = std::move(outcome.audits);
    res.solution.kind = kind;
    res.solution.vertices = std::move(outcome.solution);
    res.solution.value = static_cast<int>(res.solution.vertices.size());
    res.solution.feasible = is_feasible(g, kind, res.solution.vertices);
    if (!res.solution.feasible) throw GraphError("shifting produced an infeasible solution");
    res.solution.provenance = "ptas:local";
    return res;
}

namespace {

PtasResult ptas_apex_vc(const Graph& g, const VertexSet& u, const PtasConfig& cfg) {
    VertexSet rest = set_difference([&] {
        VertexSet all(g.n());
        for (int i = 0; i < g.n(); ++i) all[i] = i;
        return all;
    }(), u);
    auto h = induced_subgraph(g, rest);
    std::vector<int> hid(g.n(), -1);
    for (int i = 0; i < static_cast<int>(h.to_host.size()); ++i) hid[h.to_host[i]] = i;

    PtasResult best;
    bool have = false;
    const int subsets = 1 << u.size();
    for (int ymask = 0; ymask < subsets; ++ymask) {
        VertexSet y, rest_u;
        for (std::size_t b = 0; b < u.size(); ++b)
            ((ymask >> b) & 1 ? y : rest_u).push_back(u[b]);
        bool bad = false;
        for (Vertex a : rest_u) {
            for (Vertex w : g.neighbors(a))
                if (w > a && set_contains(rest_u, w)) { bad = true; break; }
            if (bad) break;
        }
        if (bad) continue;  // X(Y) = bot: an edge lies inside U\Y
        VertexSet forced_h;
        for (Vertex a : rest_u)
            for (Vertex w : g.neighbors(a))
                if (hid[w] >= 0) forced_h.push_back(hid[w]);
        forced_h = sorted_unique(std::move(forced_h));

        auto outcome = shift_components(h.graph, ProblemKind::VertexCover, cfg, forced_h, {}, {});
        VertexSet cand = y;
        for (Vertex v : outcome.solution) cand.push_back(h.to_host[v]);
        cand = sorted_unique(std::move(cand));
        if (!have || cand.size() < best.solution.vertices.size()) {
            best.solution.vertices = cand;
            best.components = std::move(outcome.audits);
            have = true;
        }
    }
    if (!have) throw GraphError("no apex subset admits a cover");  // cannot happen: Y=U works
    best.solution.kind = ProblemKind::VertexCover;
    best.solution.value = static_cast<int>(best.solution.vertices.size());
    best.solution.feasible = is_vertex_cover(g, best.solution.vertices);
    if (!best.solution.feasible) throw GraphError("apex cover check failed");
    best.solution.provenance = "ptas:apex";
    return best;
}

PtasResult ptas_apex_is(const Graph& g, const VertexSet& u, const PtasConfig& cfg) {
    VertexSet rest;
    for (int i = 0; i < g.n(); ++i)
        if (!set_contains(u, i)) rest.push_back(i);
    auto h = induced_subgraph(g, rest);
    std::vector<int> hid(g.n(), -1);
    for (int i = 0; i < static_cast<int>(h.to_host.size()); ++i) hid[h.to_host[i]] = i;

    PtasResult best;
    bool have = false;
    const int subsets = 1 << u.size();
    for (int ymask = 0; ymask < subsets; ++ymask) {
        VertexSet y;
        for (std::size_t b = 0; b < u.size(); ++b)
            if ((ymask >> b) & 1) y.push_back(u[b]);
        if (!is_independent_set(g, y)) continue;
        VertexSet forbidden_h;
        for (Vertex a : y)
            for (Vertex w : g.neighbors(a))
                if (hid[w] >= 0) forbidden_h.push_back(hid[w]);
        forbidden_h = sorted_unique(std::move(forbidden_h));

        auto outcome =
            shift_components(h.graph, ProblemKind::IndependentSet, cfg, {}, forbidden_h, {});
        VertexSet cand = y;
        for (Vertex v : outcome.solution) cand.push_back(h.to_host[v]);
        cand = sorted_unique(std::move(cand));
        if (!have || cand.size() > best.solution.vertices.size()) {
            best.solution.vertices = cand;
            best.components = std::move(outcome.audits);
            have = true;
        }
    }
    best.solution.kind = ProblemKind::IndependentSet;
    best.solution.value = static_cast<int>(best.solution.vertices.size());
    best.solution.feasible = is_independent_set(g, best.solution.vertices);
    if (!best.solution.feasible) throw GraphError("apex independent-set check failed");
    best.solution.provenance = "ptas:apex";
    return best;
}

// DS apex step. For each Y ⊆ U the apexes still needing domination from the
// non-apex side become explicit targets: they ride along in each strip
// subgraph as forbidden vertices, strips compute cost tables per dominated
// target subset, and a small subset DP stitches strips and components.
PtasResult ptas_apex_ds(const Graph& g, const VertexSet& u, const PtasConfig& cfg) {
    constexpr int kInf = 1 << 28;
    VertexSet rest;
    for (int i = 0; i < g.n(); ++i)
        if (!set_contains(u, i)) rest.push_back(i);
    auto h = induced_subgraph(g, rest);
    std::vector<int> hid(g.n(), -1);
    for (int i = 0; i < static_cast<int>(h.to_host.size()); ++i) hid[h.to_host[i]] = i;
    int k = cfg.k_for(ProblemKind::DominatingSet);

    PtasResult best;
    bool have = false;
    const int subsets = 1 << u.size();
    for (int ymask = 0; ymask < subsets; ++ymask) {
        VertexSet y, rest_u;
        for (std::size_t b = 0; b < u.size(); ++b)
            ((ymask >> b) & 1 ? y : rest_u).push_back(u[b]);
        // Targets: apexes outside Y with no dominating neighbor in Y.
        VertexSet targets;
        bool bad = false;
        for (Vertex a : rest_u) {
            bool dom = false;
            for (Vertex w : g.neighbors(a))
                if (set_contains(y, w)) { dom = true; break; }
            if (dom) continue;
            bool has_h_neighbor = false;
            for (Vertex w : g.neighbors(a))
                if (hid[w] >= 0) { has_h_neighbor = true; break; }
            if (!has_h_neighbor) { bad = true; break; }
            targets.push_back(a);
        }
        if (bad) continue;
        // H vertices already dominated by Y are exempt.
        VertexSet exempt_h;
        for (Vertex a : y)
            for (Vertex w : g.neighbors(a))
                if (hid[w] >= 0) exempt_h.push_back(hid[w]);
        exempt_h = sorted_unique(std::move(exempt_h));

        int tn = static_cast<int>(targets.size());
        std::vector<int> global(1 << tn, kInf);
        global[0] = 0;
        std::vector<VertexSet> global_pick(1 << tn);
        std::vector<ShiftAudit> audits;

        for (const auto& comp : connected_components(h.graph)) {
            auto sub = induced_subgraph(h.graph, comp);
            // Which targets are reachable from this component at all.
            std::vector<char> touches(tn, 0);
            for (int ti = 0; ti < tn; ++ti)
                for (Vertex w : g.neighbors(targets[ti]))
                    if (hid[w] >= 0 && set_contains(comp, hid[w])) touches[ti] = 1;

            VertexSet exempt;
            std::vector<int> local(h.graph.n(), -1);
            for (int i = 0; i < static_cast<int>(sub.to_host.size()); ++i)
                local[sub.to_host[i]] = i;
            for (Vertex v : exempt_h)
                if (local[v] >= 0) exempt.push_back(local[v]);
            exempt = sorted_unique(std::move(exempt));

            // Per shift, per dominated-target-subset cost over this component.
            std::vector<int> comp_cost(1 << tn, kInf);
            std::vector<VertexSet> comp_pick(1 << tn);  // g ids
            ShiftAudit comp_audit;
            Vertex center = pick_center(sub.graph, cfg);
            auto layers = bfs_layers(sub.graph, center);
            for (int i = 1; i <= k; ++i) {
                std::vector<int> shift_cost(1 << tn, kInf);
                std::vector<VertexSet> shift_pick(1 << tn);
                shift_cost[0] = 0;
                for (const Strip& s : build_strips(layers, ProblemKind::DominatingSet, k, i)) {
                    // Augment the strip with targets whose neighborhood meets it.
                    std::vector<int> strip_targets;
                    for (int ti = 0; ti < tn; ++ti) {
                        if (!touches[ti]) continue;
                        for (Vertex w : g.neighbors(targets[ti])) {
                            if (hid[w] < 0 || local[hid[w]] < 0) continue;
                            if (set_contains(s.vertices, local[hid[w]])) {
                                strip_targets.push_back(ti);
                                break;
                            }
                        }
                    }
                    int stn = static_cast<int>(strip_targets.size());
                    // Strip graph over G: strip vertices plus riding targets.
                    VertexSet gverts;
                    for (Vertex v : s.vertices) gverts.push_back(h.to_host[sub.to_host[v]]);
                    for (int ti : strip_targets) gverts.push_back(targets[ti]);
                    gverts = sorted_unique(std::move(gverts));
                    auto piece = induced_subgraph(g, gverts);
                    std::vector<int> pl(g.n(), -1);
                    for (int idx = 0; idx < static_cast<int>(piece.to_host.size()); ++idx)
                        pl[piece.to_host[idx]] = idx;

                    int rows = s.hi - s.lo + 1;
                    // Decompose without the targets, then ride them in every block.
                    VertexSet strip_only;
                    for (Vertex v : s.vertices)
                        strip_only.push_back(pl[h.to_host[sub.to_host[v]]]);
                    strip_only = sorted_unique(std::move(strip_only));
                    auto core_piece = induced_subgraph(piece.graph, strip_only);
                    auto dec = decompose_strip(core_piece.graph, cfg.lambda * rows);
                    TreeDecomposition td;
                    td.parent = dec.td.parent;
                    for (const auto& blk : dec.td.blocks) {
                        VertexSet b;
                        for (Vertex v : blk) b.push_back(core_piece.to_host[v]);
                        for (int ti : strip_targets) b.push_back(pl[targets[ti]]);
                        td.blocks.push_back(sorted_unique(std::move(b)));
                    }
                    td.rebuild_children();
                    comp_audit.strips.push_back({i, s.band, piece.graph.n(), width(td),
                                                 width(td) <= cfg.lambda * rows + stn});
                    if (width(td) > cfg.lambda * rows + stn)
                        comp_audit.lambda_bound_respected = false;

                    VertexSet base_dom;
                    for (Vertex v : set_difference(s.interior, exempt))
                        base_dom.push_back(pl[h.to_host[sub.to_host[v]]]);
                    base_dom = sorted_unique(std::move(base_dom));
                    VertexSet forbidden;
                    for (int ti : strip_targets) forbidden.push_back(pl[targets[ti]]);
                    forbidden = sorted_unique(std::move(forbidden));

                    // Cost per target subset handled by this strip.
                    std::vector<int> strip_tab(1 << stn, kInf);
                    std::vector<VertexSet> strip_sets(1 << stn);
                    for (int tmask = 0; tmask < (1 << stn); ++tmask) {
                        DpConstraints cons;
                        cons.forbidden = forbidden;
                        VertexSet dom = base_dom;
                        for (int bpos = 0; bpos < stn; ++bpos)
                            if ((tmask >> bpos) & 1) dom.push_back(pl[targets[strip_targets[bpos]]]);
                        cons.dominate_only = sorted_unique(std::move(dom));
                        Solution sol = solve_exact_tw(piece.graph, td,
                                                      ProblemKind::DominatingSet, cons);
                        if (!sol.feasible) continue;
                        strip_tab[tmask] = sol.value;
                        for (Vertex v : sol.vertices) strip_sets[tmask].push_back(piece.to_host[v]);
                    }
                    // Fold into the shift-level subset DP.
                    std::vector<int> next_cost(1 << tn, kInf);
                    std::vector<VertexSet> next_pick(1 << tn);
                    for (int acc = 0; acc < (1 << tn); ++acc) {
                        if (shift_cost[acc] >= kInf) continue;
                        for (int tmask = 0; tmask < (1 << stn); ++tmask) {
                            if (strip_tab[tmask] >= kInf) continue;
                            int nacc = acc;
                            for (int bpos = 0; bpos < stn; ++bpos)
                                if ((tmask >> bpos) & 1) nacc |= 1 << strip_targets[bpos];
                            int c = shift_cost[acc] + strip_tab[tmask];
                            if (c < next_cost[nacc]) {
                                next_cost[nacc] = c;
                                next_pick[nacc] = set_union(shift_pick[acc], strip_sets[tmask]);
                            }
                        }
                    }
                    shift_cost = std::move(next_cost);
                    shift_pick = std::move(next_pick);
                }
                comp_audit.shift_values.push_back(shift_cost.back() < kInf
                                                      ? shift_cost.back()
                                                      : -1);
                for (int t = 0; t < (1 << tn); ++t)
                    if (shift_cost[t] < comp_cost[t]) {
                        comp_cost[t] = shift_cost[t];
                        comp_pick[t] = shift_pick[t];
                        if (t == (1 << tn) - 1) comp_audit.chosen_shift = i;
                    }
            }
            comp_audit.center = h.to_host[sub.to_host[center]];
            audits.push_back(comp_audit);

            // Merge component tables into the global target DP.
            std::vector<int> merged(1 << tn, kInf);
            std::vector<VertexSet> merged_pick(1 << tn);
            for (int a = 0; a < (1 << tn); ++a) {
                if (global[a] >= kInf) continue;
                for (int b = 0; b < (1 << tn); ++b) {
                    if (comp_cost[b] >= kInf) continue;
                    int c = a | b;
                    if (global[a] + comp_cost[b] < merged[c]) {
                        merged[c] = global[a] + comp_cost[b];
                        merged_pick[c] = set_union(global_pick[a], comp_pick[b]);
                    }
                }
            }
            global = std::move(merged);
            global_pick = std::move(merged_pick);
        }

        int full = (1 << tn) - 1;
        if (global[full] >= kInf) continue;
        VertexSet cand = set_union(global_pick[full], y);
        if (!have || cand.size() < best.solution.vertices.size()) {
            best.solution.vertices = cand;
            best.components = std::move(audits);
            have = true;
        }
    }
    if (!have) throw GraphError("no apex subset admits a dominating set");
    best.solution.kind = ProblemKind::DominatingSet;
    best.solution.value = static_cast<int>(best.solution.vertices.size());
    best.solution.feasible = is_dominating_set(g, best.solution.vertices);
    if (!best.solution.feasible) throw GraphError("apex dominating-set check failed");
    best.solution.provenance = "ptas:apex";
    return best;
}

}  // namespace

PtasResult ptas_apex(const Graph& g, const VertexSet& u, ProblemKind kind,
                     const PtasConfig& cfg) {
    VertexSet uu = sorted_unique(u);
    g.check_vertices(uu);
    if (static_cast<int>(uu.size()) > std::max(cfg.mu, 0))
        throw GraphError("apex set larger than the configured mu budget");
    if (uu.empty()) return ptas_local(g, kind, cfg);
    switch (kind) {
        case ProblemKind::VertexCover: return ptas_apex_vc(g, uu, cfg);
        case ProblemKind::IndependentSet: return ptas_apex_is(g, uu, cfg);
        case ProblemKind::DominatingSet: return ptas_apex_ds(g, uu, cfg);
    }
    throw GraphError("unknown problem kind");
}

}  // namespace treeshift
