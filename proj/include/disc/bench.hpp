#pragma once

// Scaling benchmark on seeded random instances.

#include "disc/verify.hpp"

#include <cmath>
#include <filesystem>
#include <random>

namespace disc {

struct BenchRow {
    Problem problem = Problem::star_disc;
    std::size_t d = 0;
    std::size_t n_points = 0;
    bool skipped = false;
    std::uint64_t candidates_evaluated = 0;
    double elapsed_ms = 0;
};

inline constexpr const char* bench_header = "problem,d,n_points,candidates_evaluated,elapsed_ms";

inline std::string to_csv(const BenchRow& r)
{
    std::ostringstream out;
    out << to_string(r.problem) << ',' << r.d << ',' << r.n_points << ',';
    if (r.skipped)
        out << "skipped,skipped";
    else
        out << r.candidates_evaluated << ',' << r.elapsed_ms;
    return out.str();
}

/// n random points in [0,1]^d with coordinates on a 2^-20 grid, coloured
/// red or blue uniformly at random; every fourth point is marked as in S.
inline GadgetInstance random_instance(Problem problem, std::size_t d, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ (d * 0x9E3779B97F4A7C15ULL) ^ (n << 32));
    std::uniform_int_distribution<long> coord(0, 1L << 20);
    std::bernoulli_distribution coin(0.5);
    GadgetInstance inst;
    inst.problem = problem;
    inst.points = PointSet(d);
    const Rational den(1L << 20);
    for (std::size_t i = 0; i < n; ++i) {
        Point p;
        for (std::size_t j = 0; j < d; ++j)
            p.push_back(Rational(coord(rng)) / den);
        inst.points.add(std::move(p), coin(rng) ? Color::blue : Color::red);
        inst.in_s.push_back(i % 4 == 0);
    }
    // Colour-based solvers need both colours present.
    if (n > 0)
        inst.points[0].color = Color::blue;
    if (n > 1)
        inst.points[1].color = Color::red;
    inst.params.N = inst.points.total_weight();
    inst.params.eps = Rational::make(1, 4);
    return inst;
}

/// Upper estimate of the candidates a solver would evaluate, used only to
/// decide whether a row is skipped.
inline double projected_candidates(Problem problem, const PointSet& ps)
{
    double total = 1;
    const auto n = static_cast<double>(ps.size());
    for (std::size_t j = 0; j < ps.dim(); ++j) {
        std::set<Rational> distinct;
        for (const auto& p : ps)
            distinct.insert(p.coords[j]);
        const auto g = static_cast<double>(distinct.size());
        switch (problem) {
        case Problem::star_disc:
        case Problem::empty_star: total *= g + 1; break;
        case Problem::box_disc:
        case Problem::empty_box: total *= (g + 2) * (g + 1) / 2; break;
        default: total *= n * (n + 1) / 2; break;
        }
    }
    if (problem == Problem::halfspace_bichromatic || problem == Problem::net_halfspace)
        total = std::pow(2.0, n);
    return total;
}

/// One row per (d, n). The instance is solved once as a warm-up and the
/// second run is timed. Rows run sequentially on a single worker.
inline std::vector<BenchRow> bench_scaling(Problem problem, const std::vector<std::size_t>& dims,
                                           const std::vector<std::size_t>& sizes, std::uint64_t seed = 1,
                                           double cutoff = 1e8)
{
    std::vector<BenchRow> rows;
    SolveOptions opt{1};
    for (auto d : dims)
        for (auto n : sizes) {
            BenchRow row{problem, d, n};
            auto inst = random_instance(problem, d, n, seed);
            if (projected_candidates(problem, inst.points) > cutoff) {
                row.skipped = true;
            } else {
                solve_instance(inst, problem, opt);
                auto start = std::chrono::steady_clock::now();
                auto out = solve_instance(inst, problem, opt);
                row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                row.candidates_evaluated = out.candidates_evaluated;
            }
            rows.push_back(row);
        }
    return rows;
}

/// Appends rows to a CSV file, writing the header only when the file is new
/// or empty.
inline void append_bench_rows(const std::string& path, const std::vector<BenchRow>& rows)
{
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out)
        throw FormatError("cannot write " + path);
    if (fresh)
        out << bench_header << "\n";
    for (const auto& r : rows)
        out << to_csv(r) << "\n";
}

} // namespace disc
