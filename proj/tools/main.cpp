// Batch front-end: solve / decompose / ltw / bench over edge-list graphs.
// Output is line-delimited key=value records with stable field order; all
// numeric claims are recomputable from the inputs and parameters.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "treeshift/classdecomp.hpp"
#include "treeshift/cliquesum.hpp"
#include "treeshift/generate.hpp"
#include "treeshift/ltw.hpp"
#include "treeshift/sqrtdecomp.hpp"
#include "treeshift/treewidth.hpp"

using namespace treeshift;

namespace {

struct Record {
    std::vector<std::pair<std::string, std::string>> fields;
    void add(const std::string& k, const std::string& v) { fields.emplace_back(k, v); }
    void add(const std::string& k, long long v) { add(k, std::to_string(v)); }
    void add(const std::string& k, int v) { add(k, std::to_string(v)); }
    void add(const std::string& k, double v) {
        std::ostringstream ss;
        ss << v;
        add(k, ss.str());
    }
    void write(std::ostream& out) const {
        for (const auto& [k, v] : fields) out << k << '=' << v << '\n';
    }
};

std::string vertex_list(const VertexSet& xs) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < xs.size(); ++i) ss << (i ? "," : "") << xs[i] + 1;
    return ss.str();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot read " + path);
    return parse_graph(in);
}

VertexSet load_vertex_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot read " + path);
    VertexSet out;
    int v;
    while (in >> v) out.push_back(v - 1);
    out = sorted_unique(std::move(out));
    g.check_vertices(out);
    return out;
}

int env_ceiling(const char* name, int fallback) {
    const char* v = std::getenv(name);
    return v ? std::atoi(v) : fallback;
}

ProblemKind parse_kind(const std::string& s) {
    if (s == "vc") return ProblemKind::VertexCover;
    if (s == "ds") return ProblemKind::DominatingSet;
    if (s == "is") return ProblemKind::IndependentSet;
    throw CLI::ValidationError("problem must be vc, ds or is");
}

struct OutSink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw GraphError("cannot write " + path);
        os = &file;
    }
};

void add_digest(Record& rec, const Graph& g) {
    rec.add("n", g.n());
    rec.add("m", g.m());
    rec.add("digest", std::to_string(fnv1a(serialize_graph(g))));
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int run_solve(const std::string& problem, const std::string& input, bool exact,
              double ptas_eps, bool have_ptas, int lambda, int mu,
              const std::string& apex_file, const std::string& csd_file, bool oracle,
              bool oracle_compare, const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    ProblemKind kind = parse_kind(problem);
    Graph g = load_graph(input);
    OutSink sink;
    sink.open(out_path);

    Record rec;
    rec.add("command", "solve");
    rec.add("problem", problem);
    add_digest(rec, g);

    int modes = int(exact) + int(have_ptas) + int(oracle);
    if (modes != 1) throw CLI::ValidationError("pick exactly one of --exact, --ptas, --oracle");
    if (!csd_file.empty() && !have_ptas)
        throw CLI::ValidationError("--csd-file requires --ptas");

    Solution sol;
    if (oracle) {
        int ceiling = env_ceiling("TREESHIFT_BRUTE_CEILING", kDefaultBruteForceCeiling);
        rec.add("mode", "oracle");
        sol = brute_force(g, kind, {}, {}, std::nullopt, ceiling);
    } else if (exact) {
        int ceiling = env_ceiling("TREESHIFT_EXACT_CEILING", kDefaultExactCeiling);
        rec.add("mode", "exact");
        auto tw = exact_treewidth(g, 50'000'000, ceiling);
        rec.add("width", tw.width);
        sol = solve_exact_tw(g, tw.decomposition, kind);
    } else {
        PtasConfig cfg;
        cfg.epsilon = ptas_eps;
        cfg.lambda = lambda;
        cfg.mu = mu;
        rec.add("mode", "ptas");
        rec.add("epsilon", ptas_eps);
        rec.add("k", cfg.k_for(kind));
        rec.add("lambda", lambda);
        rec.add("mu", mu);
        PtasResult res;
        if (!csd_file.empty()) {
            std::ifstream in(csd_file);
            if (!in) throw GraphError("cannot read " + csd_file);
            auto csd = parse_csd(in);
            res = ptas_cliquesum(g, csd, kind, cfg);
        } else if (!apex_file.empty()) {
            VertexSet u = load_vertex_file(apex_file, g);
            res = ptas_apex(g, u, kind, cfg);
        } else {
            res = ptas_local(g, kind, cfg);
        }
        bool lam_ok = true;
        for (const auto& a : res.components) lam_ok = lam_ok && a.lambda_bound_respected;
        rec.add("lambda_bound_respected", lam_ok ? "true" : "false");
        sol = res.solution;
    }

    rec.add("value", sol.value);
    rec.add("vertices", vertex_list(sol.vertices));
    rec.add("feasible", sol.feasible ? "true" : "false");
    if (oracle_compare && !oracle) {
        int ceiling = env_ceiling("TREESHIFT_BRUTE_CEILING", kDefaultBruteForceCeiling);
        Solution opt = brute_force(g, kind, {}, {}, std::nullopt, ceiling);
        rec.add("oracle_value", opt.value);
        std::ostringstream ratio;
        ratio << (opt.value == 0 ? 1.0
                                 : static_cast<double>(sol.value) / opt.value);
        rec.add("ratio", ratio.str());
    }
    rec.add("time_total_ms", ms_since(t0));
    rec.write(*sink.os);
    return sol.feasible ? 0 : 2;
}

int run_decompose(const std::string& input, bool exact, bool heuristic, int sqrt_lambda,
                  int apex_mu, const std::string& apex_file, const std::string& over_class,
                  const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    Graph g = load_graph(input);
    OutSink sink;
    sink.open(out_path);
    Record rec;
    rec.add("command", "decompose");
    add_digest(rec, g);

    TreeDecomposition td;
    bool have = false;
    if (exact) {
        int ceiling = env_ceiling("TREESHIFT_EXACT_CEILING", kDefaultExactCeiling);
        rec.add("mode", "exact");
        auto res = exact_treewidth(g, 50'000'000, ceiling);
        rec.add("width", res.width);
        rec.add("exact", res.exact ? "true" : "false");
        td = res.decomposition;
        have = true;
    } else if (sqrt_lambda > 0) {
        rec.add("mode", "sqrt");
        rec.add("lambda", sqrt_lambda);
        SqrtReport rep;
        if (!apex_file.empty()) {
            VertexSet x = load_vertex_file(apex_file, g);
            Vertex v = 0;
            while (set_contains(x, v)) ++v;
            rep = sqrt_decomposition_apex(g, sqrt_lambda, apex_mu, x, v);
        } else {
            rep = sqrt_decomposition(g, sqrt_lambda, 0);
        }
        rec.add("width", rep.width);
        rec.add("bound", rep.bound);
        std::ostringstream iv;
        for (const auto& it : rep.split.intervals)
            iv << (it.heavy ? 'J' : 'I') << it.lo << '-' << it.hi << ';';
        rec.add("intervals", iv.str());
        td = rep.td;
        have = true;
    } else if (!over_class.empty()) {
        rec.add("mode", "over-class");
        rec.add("class", over_class);
        ClassPredicate p;
        int w = 0, mu = 0;
        if (std::sscanf(over_class.c_str(), "apex%dtw%d", &mu, &w) == 2)
            p = apex_width_class(mu, w);
        else if (std::sscanf(over_class.c_str(), "tw%d", &w) == 1)
            p = width_class(w);
        else
            throw CLI::ValidationError("unknown class name (use twK or apexMtwK)");
        auto res = decompose_over_class(g, p);
        if (!res.accepted) {
            rec.add("accepted", "false");
            for (std::size_t i = 0; i < res.rejection.size(); ++i)
                rec.add("rejection" + std::to_string(i), res.rejection[i]);
            rec.add("time_total_ms", ms_since(t0));
            rec.write(*sink.os);
            return 2;
        }
        rec.add("accepted", "true");
        rec.add("adhesion", adhesion(res.td));
        td = res.td;
        have = true;
    } else {
        heuristic = true;
        rec.add("mode", "heuristic");
        td = heuristic_decomposition(g);
        rec.add("width", width(td));
        have = true;
    }
    (void)heuristic;
    if (have) {
        auto rep = validate(g, td);
        rec.add("valid", rep.valid() ? "true" : "false");
        std::ostringstream body;
        serialize_decomposition(td, g.n(), body);
        rec.add("time_total_ms", ms_since(t0));
        rec.write(*sink.os);
        *sink.os << body.str();
    }
    return 0;
}

int run_ltw(const std::string& input, int rmax, bool exact_mode, int check_lambda,
            const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    Graph g = load_graph(input);
    OutSink sink;
    sink.open(out_path);
    Record rec;
    rec.add("command", "ltw");
    add_digest(rec, g);
    rec.add("rmax", rmax);
    LtwMode mode = exact_mode ? LtwMode::Exact : LtwMode::Upper;
    int ceiling = env_ceiling("TREESHIFT_EXACT_CEILING", kDefaultExactCeiling);
    auto profile = local_treewidth(g, rmax, mode, ceiling);
    for (const auto& e : profile.entries) {
        rec.add("ltw" + std::to_string(e.radius),
                std::to_string(e.value) + (e.exact ? "" : "~") + " witness=" +
                    std::to_string(e.witness + 1));
    }
    bool all_pass = true;
    if (check_lambda > 0) {
        rec.add("check_lambda", check_lambda);
        auto rep = check_linear_bound(g, check_lambda, rmax, mode);
        for (const auto& c : rep.checks)
            rec.add("check_r" + std::to_string(c.radius),
                    std::string(c.pass ? "pass" : "fail") + " value=" +
                        std::to_string(c.value) + " bound=" + std::to_string(c.bound));
        all_pass = rep.all_pass;
        rec.add("all_pass", all_pass ? "true" : "false");
        rec.add("scope", rep.scope);
    }
    rec.add("time_total_ms", ms_since(t0));
    rec.write(*sink.os);
    return all_pass ? 0 : 2;
}

int run_bench(const std::string& corpus, const std::string& suite, unsigned long seed,
              const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    OutSink sink;
    sink.open(out_path);
    ProblemKind kind;
    if (suite == "ratio-vc")
        kind = ProblemKind::VertexCover;
    else if (suite == "ratio-ds")
        kind = ProblemKind::DominatingSet;
    else if (suite == "ratio-is")
        kind = ProblemKind::IndependentSet;
    else
        throw CLI::ValidationError("unknown suite (ratio-vc, ratio-ds, ratio-is)");

    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(corpus))
        if (e.is_regular_file()) files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw GraphError("empty corpus directory " + corpus);

    PtasConfig cfg;
    cfg.epsilon = 0.5;
    int brute_ceiling = env_ceiling("TREESHIFT_BRUTE_CEILING", kDefaultBruteForceCeiling);
    bool all_ok = true;
    for (const auto& f : files) {
        Graph g = load_graph(f);
        Solution opt = brute_force(g, kind, {}, {}, std::nullopt, brute_ceiling);
        auto res = ptas_local(g, kind, cfg);
        double ratio = opt.value == 0
                           ? 1.0
                           : static_cast<double>(res.solution.value) / opt.value;
        bool ok = is_minimization(kind) ? res.solution.value <= opt.value * 3 / 2
                                        : 2 * res.solution.value >= opt.value;
        all_ok = all_ok && ok && res.solution.feasible;
        Record rec;
        rec.add("instance", std::filesystem::path(f).filename().string());
        rec.add("suite", suite);
        rec.add("seed", static_cast<long long>(seed));
        rec.add("opt", opt.value);
        rec.add("ptas_value", res.solution.value);
        rec.add("ratio", ratio);
        rec.add("within_bound", ok ? "true" : "false");
        rec.write(*sink.os);
        *sink.os << "---\n";
    }
    Record summary;
    summary.add("instances", static_cast<long long>(files.size()));
    summary.add("all_within_bound", all_ok ? "true" : "false");
    summary.add("time_total_ms", ms_since(t0));
    summary.write(*sink.os);
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"layer-shifting approximation toolkit"};
    app.require_subcommand(1);

    std::string problem, input, apex_file, csd_file, out_path, over_class;
    bool exact = false, oracle = false, oracle_compare = false, heuristic = false;
    bool ltw_exact = false;
    double eps = 0.5;
    int lambda = 3, mu = 0, sqrt_lambda = 0, apex_mu = 0, rmax = 2, check_lambda = 0;
    unsigned long seed = 1;
    std::string corpus, suite;

    auto* solve = app.add_subcommand("solve", "approximate or exact problem solving");
    solve->add_option("problem", problem, "vc | ds | is")->required();
    solve->add_option("input", input, "edge-list graph file")->required();
    auto* eps_opt = solve->add_option("--ptas", eps, "epsilon for the shifting scheme");
    solve->add_flag("--exact", exact, "exact solve via tree decomposition DP");
    solve->add_flag("--oracle", oracle, "brute-force oracle (desk scale)");
    solve->add_flag("--oracle-compare", oracle_compare, "also run the oracle, report ratio");
    solve->add_option("--lambda", lambda, "assumed local-tree-width slope");
    solve->add_option("--mu", mu, "apex budget");
    solve->add_option("--apex-file", apex_file, "apex vertex list (1-based)");
    solve->add_option("--csd-file", csd_file, "clique-sum decomposition file");
    solve->add_option("--out", out_path, "write the record here instead of stdout");

    auto* dec = app.add_subcommand("decompose", "tree decompositions");
    dec->add_option("input", input, "edge-list graph file")->required();
    dec->add_flag("--exact", exact, "exact tree-width");
    dec->add_flag("--heuristic", heuristic, "min-fill heuristic");
    dec->add_option("--sqrt", sqrt_lambda, "sqrt construction with this lambda");
    dec->add_option("--apex", apex_mu, "apex budget for --sqrt");
    dec->add_option("--apex-file", apex_file, "apex vertex list for --sqrt");
    dec->add_option("--over-class", over_class, "recursive class decomposition (twK, apexMtwK)");
    dec->add_option("--out", out_path, "output path");

    auto* ltw_cmd = app.add_subcommand("ltw", "local tree-width profiles");
    ltw_cmd->add_option("input", input, "edge-list graph file")->required();
    ltw_cmd->add_option("--rmax", rmax, "largest radius");
    ltw_cmd->add_flag("--exact", ltw_exact, "exact neighborhood widths");
    ltw_cmd->add_option("--check", check_lambda, "verify ltw(r) <= lambda*r");
    ltw_cmd->add_option("--out", out_path, "output path");

    auto* bench = app.add_subcommand("bench", "corpus ratio suites");
    bench->add_option("corpus", corpus, "directory of graph files")->required();
    bench->add_option("suite", suite, "ratio-vc | ratio-ds | ratio-is")->required();
    bench->add_option("--seed", seed, "corpus seed echoed into records");
    bench->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return run_solve(problem, input, exact, eps, eps_opt->count() > 0, lambda, mu,
                             apex_file, csd_file, oracle, oracle_compare, out_path);
        if (dec->parsed())
            return run_decompose(input, exact, heuristic, sqrt_lambda, apex_mu, apex_file,
                                 over_class, out_path);
        if (ltw_cmd->parsed())
            return run_ltw(input, rmax, ltw_exact, check_lambda, out_path);
        if (bench->parsed()) return run_bench(corpus, suite, seed, out_path);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
