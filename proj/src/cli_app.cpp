#include "ftreach/cli_app.hpp"

#include "ftreach/dual_preserver.hpp"
#include "ftreach/instances.hpp"
#include "ftreach/serialize.hpp"
#include "ftreach/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ftreach {

namespace {

void write_text(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw input_error("cannot open for writing: " + path);
    os << text;
}

std::string read_text(const std::string &path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw input_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

DiGraph load_graph(const std::string &path) { return DiGraph::parse_string(read_text(path)); }
PairList load_pairs(const std::string &path) { return parse_pairs_string(read_text(path)); }

long long env_budget() {
    if (const char *env = std::getenv("FTREACH_BUDGET")) {
        char *end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return CheckOptions{}.budget;
}

struct BuildArgs {
    std::string structure, graph_path, pairs_path, out = "-", provider = "baseline";
    std::string out_graph; // optional plain edge-list copy for preserver kinds
    int k = 2;
    long long ell = 0;
    double sample_c = 4.0;
    std::uint64_t seed = 1;
};

AnyStructure build_any(const BuildArgs &args, const DiGraph &g, const PairList &pairs) {
    Providers providers = Providers::by_name(args.provider);
    AnyStructure out;
    out.kind = args.structure;
    if (args.structure == "pair-skel") {
        out.skeletons = build_stored_skeletons(g, pairs);
    } else if (args.structure == "dual-oracle") {
        out.dual = build_dual_oracle(g, pairs, providers);
    } else if (args.structure == "ftro1-vertex") {
        out.vertex_oracle = build_vertex_ftro(g, pairs);
    } else if (args.structure == "ftro1-edge") {
        out.edge_oracle = build_edge_ftro(g, pairs);
    } else if (args.structure == "dual-preserver") {
        StoredSubgraph stored;
        stored.kind = args.structure;
        stored.k = 2;
        stored.sub = build_dual_preserver(g, pairs, providers).materialize();
        out.stored = std::move(stored);
    } else if (args.structure == "k-ftrs") {
        KFtrsParams params;
        params.k = args.k;
        params.ell = args.ell;
        params.sample_c = args.sample_c;
        params.seed = args.seed;
        KFtrsResult result = build_k_ftrs(g, pairs, params, providers);
        StoredSubgraph stored;
        stored.kind = args.structure;
        stored.k = params.k;
        stored.ell = result.ell;
        stored.sampled = result.sampled;
        stored.sub = result.sub.materialize();
        out.stored = std::move(stored);
    } else {
        throw input_error("unknown structure: " + args.structure);
    }
    return out;
}

int cmd_gen(const std::string &family, int N, int r, int rho, int k, int n, double p,
            std::uint64_t seed, const std::string &out_graph,
            const std::string &out_pairs) {
    DiGraph graph;
    PairList pairs;
    if (family == "hard2") {
        HardInstance inst = gen_hard_dual(N, r);
        graph = std::move(inst.graph);
        pairs = std::move(inst.pairs);
    } else if (family == "hardk") {
        HardMulti inst = gen_hard_multi(rho, k, N);
        graph = std::move(inst.graph);
        pairs = std::move(inst.pairs);
    } else if (family == "gnp") {
        graph = gen_random_digraph(n, p, seed);
    } else if (family == "gnp-dag") {
        graph = gen_random_dag(n, p, seed);
    } else {
        throw input_error("unknown family: " + family);
    }
    write_text(out_graph, graph.format_string());
    if (!out_pairs.empty()) {
        std::ostringstream os;
        format_pairs(os, pairs);
        write_text(out_pairs, os.str());
    }
    return 0;
}

int cmd_query(const std::string &expected_kind, const std::string &in_path,
              const std::string &queries_path) {
    std::istringstream is(read_text(in_path));
    AnyStructure structure = load_structure(is);
    if (!expected_kind.empty() && expected_kind != structure.kind)
        throw input_error("structure file holds '" + structure.kind + "', not '" +
                          expected_kind + "'");

    std::istringstream qs(read_text(queries_path));
    std::string line;
    while (std::getline(qs, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        VertexPair pair;
        std::string mode;
        if (!(ls >> pair.s >> pair.t)) continue; // blank line
        EdgeList edge_fails;
        std::vector<VertexId> vertex_fails;
        if (ls >> mode) {
            if (mode == "V") {
                VertexId x;
                if (!(ls >> x)) throw input_error("vertex query needs one vertex");
                vertex_fails.push_back(x);
            } else if (mode == "E") {
                VertexId u, v;
                while (ls >> u >> v) edge_fails.push_back({u, v});
            } else {
                throw input_error("query mode must be V or E");
            }
        }
        std::cout << (structure.query(pair, edge_fails, vertex_fails) ? 1 : 0) << '\n';
    }
    return 0;
}

int cmd_verify(const BuildArgs &args, bool exhaustive, long long sample,
               std::uint64_t seed) {
    DiGraph g = load_graph(args.graph_path);
    PairList pairs = load_pairs(args.pairs_path);
    CheckOptions options;
    options.budget = env_budget();
    options.seed = seed;
    if (!exhaustive && sample > 0) options.sample = sample;

    CheckReport report;
    if (args.structure == "pair-skel" || args.structure == "dual-preserver" ||
        args.structure == "k-ftrs") {
        Providers providers = Providers::by_name(args.provider);
        if (args.structure == "pair-skel") {
            for (const VertexPair &p : pairs) {
                Subgraph sub(g);
                if (p.s != p.t && reachable_ids(g, p.s, p.t, {}))
                    sub = build_pair_skeleton(g, p.s, p.t).kept;
                CheckReport one = is_k_ftrs(g, sub, {p}, 2, options);
                report.total_queries += one.total_queries;
                report.mismatches.insert(report.mismatches.end(), one.mismatches.begin(),
                                         one.mismatches.end());
            }
        } else if (args.structure == "dual-preserver") {
            Subgraph sub = build_dual_preserver(g, pairs, providers);
            report = is_k_ftrs(g, sub, pairs, 2, options);
        } else {
            KFtrsParams params{args.k, args.ell, args.sample_c, args.seed};
            KFtrsResult result = build_k_ftrs(g, pairs, params, providers);
            report = is_k_ftrs(g, result.sub, pairs, params.k, options);
        }
    } else {
        AnyStructure structure = build_any(args, g, pairs);
        FailMode mode = args.structure == "ftro1-vertex" ? FailMode::Vertex : FailMode::Edge;
        int k = args.structure == "dual-oracle" ? 2 : 1;
        OracleFn oracle = [&](VertexPair p, const std::vector<EdgeId> &edge_ids,
                              const std::vector<VertexId> &vertex_ids) {
            EdgeList edges;
            for (EdgeId e : edge_ids) edges.push_back(g.edge(e));
            return structure.query(p, edges, vertex_ids);
        };
        report = check_oracle(oracle, g, pairs, mode, k, options);
    }

    for (const Mismatch &mm : report.mismatches)
        std::cout << describe(mm, g) << '\n';
    std::cerr << "checked " << report.total_queries << " queries, "
              << report.mismatches.size() << " mismatches\n";
    return report.pass() ? 0 : 1;
}

struct BenchSize {
    int N, r;
};

std::vector<BenchSize> parse_sizes(const std::string &text) {
    std::vector<BenchSize> sizes;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto x = item.find('x');
        if (x == std::string::npos) throw input_error("size format is NxR");
        sizes.push_back({std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1))});
    }
    if (sizes.empty()) throw input_error("no sizes given");
    return sizes;
}

int cmd_bench(const std::string &family, const std::string &sizes_text,
              const std::vector<std::string> &structures, std::uint64_t seed,
              const std::string &out, bool timing, const std::string &provider) {
    if (family != "hard2") throw input_error("bench supports the hard2 family");
    struct Row {
        std::string structure;
        int n, m, pairs, k;
        std::size_t words, edges_kept;
        long long build_ms;
        std::uint64_t seed;
    };
    std::vector<Row> rows;
    for (BenchSize size : parse_sizes(sizes_text)) {
        HardInstance inst = gen_hard_dual(size.N, size.r);
        for (const std::string &name : structures) {
            BuildArgs args;
            args.structure = name;
            args.provider = provider;
            args.seed = seed;
            auto start = std::chrono::steady_clock::now();
            AnyStructure structure = build_any(args, inst.graph, inst.pairs);
            auto stop = std::chrono::steady_clock::now();
            Row row;
            row.structure = name;
            row.n = inst.graph.n();
            row.m = inst.graph.m();
            row.pairs = static_cast<int>(inst.pairs.size());
            row.k = name == "ftro1-vertex" || name == "ftro1-edge" ? 1
                    : name == "k-ftrs"                             ? args.k
                                                                   : 2;
            row.words = structure.words();
            row.edges_kept = structure.edges_kept();
            row.build_ms =
                timing ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                             .count()
                       : 0;
            row.seed = seed;
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
        if (a.structure != b.structure) return a.structure < b.structure;
        if (a.n != b.n) return a.n < b.n;
        return a.m < b.m;
    });
    std::ostringstream csv;
    csv << "structure,n,m,pairs,k,words,edges_kept,build_ms,seed\n";
    for (const Row &row : rows)
        csv << row.structure << ',' << row.n << ',' << row.m << ',' << row.pairs << ','
            << row.k << ',' << row.words << ',' << row.edges_kept << ',' << row.build_ms
            << ',' << row.seed << '\n';
    write_text(out, csv.str());
    return 0;
}

} // namespace

int run_command(const std::vector<std::string> &args) {
    CLI::App app{"fault-tolerant pairwise reachability structures"};
    app.require_subcommand(1);

    // gen
    auto *gen = app.add_subcommand("gen", "emit a generated graph (and pair file)");
    std::string family, out_graph = "-", out_pairs;
    int N = 2, r = 2, rho = 1, k_tree = 1, n = 10;
    double p = 0.3;
    std::uint64_t gen_seed = 1;
    gen->add_option("--family", family)->required();
    gen->add_option("--N", N);
    gen->add_option("--r", r);
    gen->add_option("--rho", rho);
    gen->add_option("--k", k_tree);
    gen->add_option("--n", n);
    gen->add_option("--p", p);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--out-graph", out_graph);
    gen->add_option("--out-pairs", out_pairs);

    // build
    auto *build = app.add_subcommand("build", "build a structure and write it out");
    BuildArgs build_args;
    build->add_option("--structure", build_args.structure)->required();
    build->add_option("--graph", build_args.graph_path)->required();
    build->add_option("--pairs", build_args.pairs_path)->required();
    build->add_option("--k", build_args.k);
    build->add_option("--ell", build_args.ell);
    build->add_option("--sample-c", build_args.sample_c);
    build->add_option("--seed", build_args.seed);
    build->add_option("--provider", build_args.provider);
    build->add_option("--out", build_args.out)->required();
    build->add_option("--out-graph", build_args.out_graph);

    // query
    auto *query = app.add_subcommand("query", "answer query lines against a saved structure");
    std::string query_structure, in_path, queries_path;
    query->add_option("--structure", query_structure);
    query->add_option("--in", in_path)->required();
    query->add_option("--queries", queries_path)->required();

    // verify
    auto *verify = app.add_subcommand("verify", "compare a structure against brute force");
    BuildArgs verify_args;
    bool exhaustive = false;
    long long sample = 0;
    std::uint64_t verify_seed = 0;
    verify->add_option("--structure", verify_args.structure)->required();
    verify->add_option("--graph", verify_args.graph_path)->required();
    verify->add_option("--pairs", verify_args.pairs_path)->required();
    verify->add_option("--k", verify_args.k);
    verify->add_option("--ell", verify_args.ell);
    verify->add_option("--sample-c", verify_args.sample_c);
    verify->add_option("--provider", verify_args.provider);
    verify->add_flag("--exhaustive", exhaustive);
    verify->add_option("--sample", sample);
    verify->add_option("--seed", verify_seed);

    // bench
    auto *bench = app.add_subcommand("bench", "size/scaling measurements as CSV");
    std::string suite = "scaling", bench_family = "hard2", sizes, bench_out = "-";
    std::string bench_provider = "baseline";
    std::vector<std::string> bench_structures{"dual-oracle", "ftro1-vertex", "ftro1-edge",
                                              "dual-preserver"};
    std::uint64_t bench_seed = 1;
    bool timing = false;
    bench->add_option("--suite", suite);
    bench->add_option("--family", bench_family);
    bench->add_option("--sizes", sizes)->required();
    bench->add_option("--structures", bench_structures)->delimiter(',');
    bench->add_option("--seed", bench_seed);
    bench->add_option("--out", bench_out);
    bench->add_option("--provider", bench_provider);
    bench->add_flag("--timing", timing);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, N, r, rho, k_tree, n, p, gen_seed, out_graph, out_pairs);
        if (build->parsed()) {
            DiGraph g = load_graph(build_args.graph_path);
            PairList pairs = load_pairs(build_args.pairs_path);
            AnyStructure structure = build_any(build_args, g, pairs);
            std::ostringstream os;
            save_structure(os, structure);
            write_text(build_args.out, os.str());
            if (!build_args.out_graph.empty()) {
                if (!structure.stored)
                    throw input_error("--out-graph applies to preserver structures only");
                write_text(build_args.out_graph, structure.stored->sub.format_string());
            }
            return 0;
        }
        if (query->parsed()) return cmd_query(query_structure, in_path, queries_path);
        if (verify->parsed()) return cmd_verify(verify_args, exhaustive, sample, verify_seed);
        if (bench->parsed())
            return cmd_bench(bench_family, sizes, bench_structures, bench_seed, bench_out,
                             timing, bench_provider);
    } catch (const CLI::Error &e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const input_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const parse_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace ftreach
