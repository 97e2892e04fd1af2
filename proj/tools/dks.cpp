// Command-line surface: solve / params / gen / bench, JSON on stdout.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dks/dks.hpp"

using nlohmann::json;

namespace {

dks::EdgeListFile load_graph(const std::string &path) {
    std::ifstream in(path);
    if (!in) dks::fail(dks::ErrorKind::IoError, "cannot open graph file " + path);
    return dks::read_edge_list(in);
}

std::vector<int> parse_id_list(const std::string &text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream iss(text);
    while (std::getline(iss, tok, ',')) {
        if (tok.empty()) continue;
        long long v = 0;
        if (!dks::detail::parse_int(tok, v))
            dks::fail(dks::ErrorKind::InvalidSpec, "bad vertex id \"" + tok + "\" in list");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

// Weights file: '#' comments; lines "v w"; unlisted vertices weigh 0.
dks::VertexWeights load_weights(const std::string &path, int n) {
    std::ifstream in(path);
    if (!in) dks::fail(dks::ErrorKind::IoError, "cannot open weights file " + path);
    dks::VertexWeights w(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream iss(line);
        long long v, wv;
        if (!(iss >> v >> wv) || v < 0 || v >= n || wv < 0)
            dks::fail(dks::ErrorKind::MalformedHeader,
                      "bad weight line " + std::to_string(lineno) + " in " + path);
        if (seen[static_cast<std::size_t>(v)])
            dks::fail(dks::ErrorKind::MalformedHeader, "duplicate weight for vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = 1;
        w[static_cast<std::size_t>(v)] = wv;
    }
    return w;
}

int env_threads() {
    const char *env = std::getenv("DKS_THREADS");
    if (env == nullptr) return 1;
    int t = std::atoi(env);
    return t >= 1 ? t : 1;
}

int run_solve(const std::string &graph_path, int k, const std::string &objective,
              const std::string &strategy_name, const std::string &deletion_list,
              const std::string &expression_path, const std::string &weights_path, int threads,
              const std::string &dump_iqp) {
    dks::EdgeListFile file = load_graph(graph_path);
    dks::Objective obj;
    if (objective == "densest")
        obj = dks::Objective::Densest;
    else if (objective == "sparsest")
        obj = dks::Objective::Sparsest;
    else
        dks::fail(dks::ErrorKind::InvalidSpec, "objective must be densest or sparsest");

    dks::VertexWeights w = file.weights;
    if (!weights_path.empty()) {
        bool in_file = std::any_of(w.begin(), w.end(), [](dks::Value x) { return x != 0; });
        if (in_file)
            dks::fail(dks::ErrorKind::InvalidSpec,
                      "graph file already carries weights; drop --weights or the weights section");
        w = load_weights(weights_path, file.graph.n());
    }

    dks::Strategy strategy;
    strategy.kind = dks::parse_strategy_kind(strategy_name);
    strategy.threads = threads;
    if (!deletion_list.empty()) strategy.deletion_set = parse_id_list(deletion_list);
    if (!expression_path.empty()) {
        std::ifstream ein(expression_path);
        if (!ein) dks::fail(dks::ErrorKind::IoError, "cannot open expression file " + expression_path);
        strategy.expression = dks::parse_expression(ein);
    }

    if (!dump_iqp.empty()) {
        if (strategy.kind != dks::StrategyKind::NdEnum)
            dks::fail(dks::ErrorKind::InvalidSpec, "--dump-iqp needs --strategy nd-enum");
        dks::NdPartition p = dks::compute_nd_partition(file.graph);
        dks::TypeGraph tg = dks::build_type_graph(file.graph, p);
        std::ofstream out(dump_iqp);
        if (!out) dks::fail(dks::ErrorKind::IoError, "cannot write " + dump_iqp);
        out << dks::format_iqp(dks::emit_iqp(p, tg, k, obj));
    }

    auto start = std::chrono::steady_clock::now();
    dks::SolveResult res = dks::solve(file.graph, w, k, obj, strategy);
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    json out = {
        {"value", res.value},        {"witness", res.witness},
        {"strategy", res.strategy},  {"k", k},
        {"objective", objective},    {"elapsed_ms", elapsed.count()},
    };
    std::cout << out.dump() << "\n";
    return 0;
}

int run_params(const std::string &graph_path) {
    dks::EdgeListFile file = load_graph(graph_path);
    std::cout << dks::param_report_to_json(dks::check_parameter_inequalities(file.graph)).dump() << "\n";
    return 0;
}

int run_gen(const std::string &kind, std::uint64_t seed, int n, int d, int max_block, double p,
            const std::string &out_path) {
    dks::InstanceSpec spec;
    if (kind == "block")
        spec.kind = dks::InstanceKind::BlockGraph;
    else if (kind == "planted")
        spec.kind = dks::InstanceKind::PlantedDeletion;
    else if (kind == "cograph")
        spec.kind = dks::InstanceKind::Cograph;
    else if (kind == "er")
        spec.kind = dks::InstanceKind::ErdosRenyi;
    else
        dks::fail(dks::ErrorKind::InvalidSpec, "kind must be block|planted|cograph|er");
    spec.n = n;
    spec.d = d;
    spec.max_block = max_block;
    spec.p = p;
    spec.seed = seed;

    dks::GeneratedInstance inst = dks::generate(spec);
    std::ofstream out(out_path);
    if (!out) dks::fail(dks::ErrorKind::IoError, "cannot write " + out_path);
    out << "# generated: kind=" << kind << " n=" << n << " seed=" << seed << "\n";
    if (!inst.planted.empty()) {
        out << "# planted deletion set:";
        for (int v : inst.planted) out << " " << v;
        out << "\n";
    }
    dks::write_edge_list(out, inst.graph);

    json meta = {{"kind", kind},         {"n", inst.graph.n()}, {"m", inst.graph.m()},
                 {"seed", seed},         {"out", out_path},     {"deletion_set", inst.planted}};
    std::cout << meta.dump() << "\n";
    return 0;
}

double solve_block_ms(const dks::Graph &g, int k) {
    auto start = std::chrono::steady_clock::now();
    dks::SolveResult r = dks::solve_block_weighted(g, k, dks::Objective::Densest);
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    (void)r;
    return static_cast<double>(us.count()) / 1000.0;
}

int run_bench(const std::string &suite, int threads) {
    if (suite == "block-scaling") {
        for (int n : {10000, 20000}) {
            for (int trial = 0; trial < 3; ++trial) {
                dks::InstanceSpec spec;
                spec.kind = dks::InstanceKind::BlockGraph;
                spec.n = n;
                spec.max_block = 5;
                spec.seed = static_cast<std::uint64_t>(trial) + 1;
                dks::Graph g = dks::generate(spec).graph;
                json row = {{"suite", suite}, {"n", n}, {"k", 30}, {"trial", trial},
                            {"ms", solve_block_ms(g, 30)}};
                std::cout << row.dump() << "\n";
            }
        }
        return 0;
    }
    if (suite == "deletion-scaling") {
        dks::WeightedSolver solver = dks::block_dp_solver();
        for (int d = 8; d <= 14; ++d) {
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                dks::InstanceSpec spec;
                spec.kind = dks::InstanceKind::PlantedDeletion;
                spec.n = 200;
                spec.d = d;
                spec.p = 0.3;
                spec.seed = seed;
                dks::GeneratedInstance inst = dks::generate(spec);
                auto start = std::chrono::steady_clock::now();
                dks::SolveResult r = dks::solve_with_deletion_set(inst.graph, inst.planted, 20,
                                                                  dks::Objective::Densest, solver, threads);
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start);
                json row = {{"suite", suite},      {"d", d},   {"seed", seed},
                            {"value", r.value},    {"k", 20},  {"threads", threads},
                            {"ms", ms.count()}};
                std::cout << row.dump() << "\n";
            }
        }
        return 0;
    }
    dks::fail(dks::ErrorKind::InvalidSpec, "suite must be block-scaling or deletion-scaling");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Densest/Sparsest k-Subgraph solvers parameterized by graph structure"};
    app.require_subcommand(1);

    std::string graph_path, objective = "densest", strategy_name = "oracle";
    std::string deletion_list, expression_path, weights_path, dump_iqp;
    int k = 0;
    int threads = env_threads();

    CLI::App *solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("--graph", graph_path, "edge-list file")->required();
    solve->add_option("--k", k, "subgraph size")->required();
    solve->add_option("--objective", objective, "densest|sparsest");
    solve->add_option("--strategy", strategy_name,
                      "oracle|block-dp|deletion-block|deletion-cw|nd-enum|approx-split");
    solve->add_option("--deletion-set", deletion_list, "comma-separated vertex ids");
    solve->add_option("--expression", expression_path, "c-expression file for the residual");
    solve->add_option("--weights", weights_path, "vertex weight file");
    solve->add_option("--threads", threads, "worker cap (env DKS_THREADS)");
    solve->add_option("--dump-iqp", dump_iqp, "write the nd-enum IQP instance to this path");

    std::string params_graph;
    CLI::App *params = app.add_subcommand("params", "structural parameter report");
    params->add_option("--graph", params_graph, "edge-list file")->required();

    std::string gen_kind = "er", gen_out;
    std::uint64_t gen_seed = 0;
    int gen_n = 10, gen_d = 0, gen_max_block = 4;
    double gen_p = 0.5;
    CLI::App *gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--kind", gen_kind, "block|planted|cograph|er")->required();
    gen->add_option("--seed", gen_seed, "rng seed")->required();
    gen->add_option("--out", gen_out, "output edge-list file")->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--d", gen_d, "planted deletion vertices");
    gen->add_option("--max-block", gen_max_block, "block size bound");
    gen->add_option("--p", gen_p, "edge probability");

    std::string bench_suite;
    int bench_threads = env_threads();
    CLI::App *bench = app.add_subcommand("bench", "timing suites");
    bench->add_option("--suite", bench_suite, "block-scaling|deletion-scaling")->required();
    bench->add_option("--threads", bench_threads, "worker cap (env DKS_THREADS)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return run_solve(graph_path, k, objective, strategy_name, deletion_list, expression_path,
                             weights_path, threads, dump_iqp);
        if (params->parsed()) return run_params(params_graph);
        if (gen->parsed()) return run_gen(gen_kind, gen_seed, gen_n, gen_d, gen_max_block, gen_p, gen_out);
        if (bench->parsed()) return run_bench(bench_suite, bench_threads);
    } catch (const dks::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
