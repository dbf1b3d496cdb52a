// disc: build reduction gadgets, solve instances, verify reductions, benchmark.
//
// Exit codes: 0 success, 1 verify mismatch, 2 usage, I/O or input error.

#include "disc/disc.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

disc::Problem require_problem(const std::string& name)
{
    auto p = disc::parse_problem(name);
    if (!p)
        throw CLI::ValidationError("problem", "unknown problem '" + name + "'");
    return *p;
}

std::optional<disc::Rational> parse_mu(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    return disc::Rational::parse(s);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact discrepancy solvers and clique-reduction gadgets"};
    app.require_subcommand(1);

    std::string type, graph_path, out_path, mu_text, problem_name, instance_path;
    int k = 0;
    bool raw = false, as_json = false;
    unsigned threads = disc::default_threads();
    std::uint64_t m = 0, seed = 1;
    double cutoff = 1e8;
    std::vector<std::size_t> dims, sizes;

    auto* gadget = app.add_subcommand("gadget", "Write the reduction instance for a graph");
    gadget->add_option("--type", type, "Problem")->required();
    gadget->add_option("--graph", graph_path, "Graph file")->required();
    gadget->add_option("-k", k, "Clique size")->required();
    gadget->add_option("--mu", mu_text, "mu as p/q (empty-star only)");
    gadget->add_flag("--raw", raw, "Keep integer coordinates (box gadgets only)");
    gadget->add_option("-o", out_path, "Output instance file")->required();

    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("--problem", problem_name, "Problem")->required();
    solve->add_option("instance", instance_path, "Instance file")->required();
    solve->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    auto* m_opt = solve->add_option("-m", m, "Threshold for the half-space decision problem");
    solve->add_flag("--json", as_json, "Print JSON");

    auto* verify = app.add_subcommand("verify", "Check a reduction against the clique oracle");
    verify->add_option("--type", type, "Problem")->required();
    verify->add_option("--graph", graph_path, "Graph file")->required();
    verify->add_option("-k", k, "Clique size")->required();
    verify->add_option("--mu", mu_text, "mu as p/q (empty-star only)");
    verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "Append scaling rows to a CSV file");
    bench->add_option("--problem", problem_name, "Problem")->required();
    bench->add_option("--dims", dims, "Dimensions")->required()->delimiter(',');
    bench->add_option("--sizes", sizes, "Point counts")->required()->delimiter(',');
    bench->add_option("-o", out_path, "CSV file")->required();
    bench->add_option("--seed", seed, "Random seed");
    bench->add_option("--cutoff", cutoff, "Skip rows projected above this many candidates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*gadget) {
            const auto p = require_problem(type);
            const auto g = disc::parse_graph(disc::read_file(graph_path));
            const auto inst = disc::build_gadget(p, g, k, parse_mu(mu_text), !raw);
            disc::write_file(out_path, disc::write_instance(inst));
            std::cout << "wrote " << inst.points.size() << " points (dim " << inst.points.dim() << ") to " << out_path
                      << "\n";
            return 0;
        }
        if (*solve) {
            const auto p = require_problem(problem_name);
            const auto inst = disc::read_instance(disc::read_file(instance_path));
            std::optional<std::uint64_t> threshold;
            if (*m_opt)
                threshold = m;
            const auto out = disc::solve_instance(inst, p, disc::SolveOptions{threads}, threshold);
            if (as_json)
                std::cout << disc::outcome_to_json(out).dump(2) << "\n";
            else
                std::cout << disc::format_outcome(out);
            return 0;
        }
        if (*verify) {
            const auto p = require_problem(type);
            const auto g = disc::parse_graph(disc::read_file(graph_path));
            const auto r = disc::verify_reduction(p, g, k, parse_mu(mu_text), disc::SolveOptions{threads});
            std::cout << "clique(" << k << "): " << (r.clique ? "yes" : "no") << "\n"
                      << "expected: " << r.expected << "\n"
                      << "observed: " << r.observed << "\n";
            for (const auto& d : r.diffs)
                std::cout << "diff: " << d << "\n";
            std::cout << (r.match ? "MATCH" : "MISMATCH") << "\n";
            return r.match ? 0 : exit_mismatch;
        }
        if (*bench) {
            const auto p = require_problem(problem_name);
            const auto rows = disc::bench_scaling(p, dims, sizes, seed, cutoff);
            disc::append_bench_rows(out_path, rows);
            for (const auto& r : rows)
                std::cout << disc::to_csv(r) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
