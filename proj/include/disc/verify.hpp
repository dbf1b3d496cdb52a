#pragma once

// Problem dispatch for instance files and the graph -> gadget -> solver ->
// clique-oracle check.

#include "disc/continuous.hpp"
#include "disc/halfspace.hpp"
#include "disc/io.hpp"
#include "disc/oracles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace disc {

struct SolveOutcome {
    Problem problem = Problem::bichromatic_box;
    std::optional<Rational> value; // absent for net problems
    std::optional<bool> decision;  // feasible (threshold half-space) or is_net
    std::optional<std::uint64_t> threshold;
    std::string witness = "none";
    std::optional<Side> side;
    std::uint64_t candidates_evaluated = 0;
    double elapsed_ms = 0;
};

namespace detail {

inline double to_ms(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

inline SolveOutcome from_report(Problem p, const DiscrepancyReport& r)
{
    return {p, r.value, std::nullopt, std::nullopt, to_string(r.witness), r.side, r.candidates_evaluated, to_ms(r.elapsed)};
}

inline SolveOutcome from_report(Problem p, const EmptyBoxReport& r)
{
    return {p, r.volume, std::nullopt, std::nullopt, to_string(r.witness), std::nullopt, r.candidates_evaluated,
            to_ms(r.elapsed)};
}

inline SolveOutcome from_report(Problem p, const BichromaticReport& r)
{
    return {p, Rational(r.value), r.feasible, std::nullopt, to_string(r.witness), std::nullopt, r.candidates_evaluated,
            to_ms(r.elapsed)};
}

} // namespace detail

/// Runs the solver for `problem` on the instance. For the half-space problem
/// a threshold m gives the decision version; without it the maximum is found.
/// Net problems read S and eps from the instance.
inline SolveOutcome solve_instance(const GadgetInstance& inst, Problem problem, const SolveOptions& opt = {},
                                   std::optional<std::uint64_t> m = std::nullopt)
{
    const auto& ps = inst.points;
    switch (problem) {
    case Problem::bichromatic_box: return detail::from_report(problem, solve_bichromatic_box(ps, false, opt));
    case Problem::redblue_disc: return detail::from_report(problem, solve_redblue_box_discrepancy(ps, opt));
    case Problem::empty_star: return detail::from_report(problem, solve_max_empty_star(ps, opt));
    case Problem::star_disc: return detail::from_report(problem, solve_star_discrepancy(ps, opt));
    case Problem::empty_box: return detail::from_report(problem, solve_max_empty_box(ps, opt));
    case Problem::box_disc: return detail::from_report(problem, solve_box_discrepancy(ps, opt));
    case Problem::halfspace_bichromatic: {
        auto r = m ? solve_bichromatic_halfspace(ps, *m) : max_bichromatic_halfspace(ps);
        auto out = detail::from_report(problem, r);
        out.threshold = m;
        return out;
    }
    case Problem::net_halfspace:
    case Problem::net_box: {
        if (inst.in_s.empty())
            throw std::invalid_argument("instance has no in_S marks");
        if (!inst.params.eps)
            throw std::invalid_argument("instance has no eps parameter");
        auto family = problem == Problem::net_box ? RangeFamily::box : RangeFamily::halfspace;
        auto r = verify_epsilon_net(ps, inst.in_s, *inst.params.eps, family, opt);
        SolveOutcome out;
        out.problem = problem;
        out.decision = r.is_net;
        out.threshold = r.threshold;
        if (r.violator)
            out.witness = to_string(*r.violator);
        return out;
    }
    }
    throw std::invalid_argument("unknown problem");
}

/// Candidate counts depend on pruning order and so on the worker count; they
/// are left out so that the printed result does not.
inline std::string format_outcome(const SolveOutcome& o)
{
    std::ostringstream out;
    const bool net = o.problem == Problem::net_box || o.problem == Problem::net_halfspace;
    if (net)
        out << "is_net: " << (*o.decision ? "true" : "false") << "\n";
    else
        out << *o.value << "\n";
    if (o.problem == Problem::halfspace_bichromatic && o.threshold)
        out << "feasible: " << (*o.decision ? "true" : "false") << " (m = " << *o.threshold << ")\n";
    if (net)
        out << "threshold: " << *o.threshold << "\n";
    out << (net ? "violator: " : "witness: ") << o.witness << "\n";
    if (o.side)
        out << "side: " << to_string(*o.side) << "\n";
    return out.str();
}

inline json outcome_to_json(const SolveOutcome& o)
{
    json j;
    j["problem"] = to_string(o.problem);
    if (o.value)
        j["value"] = o.value->str();
    if (o.decision)
        j[o.problem == Problem::halfspace_bichromatic ? "feasible" : "is_net"] = *o.decision;
    if (o.threshold)
        j["threshold"] = *o.threshold;
    j["witness"] = o.witness;
    if (o.side)
        j["side"] = to_string(*o.side);
    return j;
}

struct VerifyResult {
    bool match = true;
    bool clique = false;
    std::string expected;
    std::string observed;
    std::vector<std::string> diffs;
};

/// Builds the gadget, round-trips it through the instance format, recomputes
/// its parameters from the points, solves it and compares the result with
/// what the clique oracle implies.
inline VerifyResult verify_reduction(Problem problem, const Graph& g, int k, std::optional<Rational> mu = std::nullopt,
                                     const SolveOptions& opt = {})
{
    VerifyResult res;
    auto diff = [&](std::string what) {
        res.match = false;
        res.diffs.push_back(std::move(what));
    };
    const auto built = build_gadget(problem, g, k, mu);
    const auto text = write_instance(built);
    const auto inst = read_instance(text);
    if (write_instance(inst) != text)
        diff("instance file does not round-trip");

    const auto& p = inst.params;
    if (p.k != k || p.n != g.n())
        diff("params k/n differ from the request");
    const std::uint64_t N = inst.points.total_weight();
    if (p.N != N)
        diff("params.N = " + std::to_string(p.N) + ", points weigh " + std::to_string(N));
    std::optional<Rational> V;
    if (p.mu) {
        const Rational C = reciprocal(rat_pow(*p.mu, g.n() - 1));
        V = rat_pow(C, k);
        if (!p.C || *p.C != C)
            diff("params.C != 1/mu^(n-1) = " + C.str());
        if (!p.V || *p.V != *V)
            diff("params.V != C^k = " + V->str());
    }

    res.clique = k <= g.n() && oracle::has_clique(g, k);
    const auto out = solve_instance(inst, problem, opt,
                                    problem == Problem::halfspace_bichromatic
                                        ? std::optional<std::uint64_t>(static_cast<std::uint64_t>(k + 1))
                                        : std::nullopt);
    res.observed = out.value ? out.value->str() : std::string();

    auto expect_value = [&](const Rational& target, const std::optional<Rational>& neg_bound) {
        const Rational& v = *out.value;
        if (res.clique) {
            res.expected = target.str();
            if (v != target)
                diff("expected " + target.str() + ", solver returned " + v.str());
        } else if (neg_bound) {
            res.expected = "<= " + neg_bound->str();
            if (v > *neg_bound)
                diff("expected at most " + neg_bound->str() + ", solver returned " + v.str());
        } else {
            res.expected = "< " + target.str();
            if (v >= target)
                diff("expected below " + target.str() + ", solver returned " + v.str());
        }
    };

    switch (problem) {
    case Problem::bichromatic_box: expect_value(Rational(k + 1), Rational(k)); break;
    case Problem::redblue_disc: expect_value(Rational((N + 1) / 2 + static_cast<std::uint64_t>(k)), std::nullopt); break;
    // Without a k-clique the optimum is C^k / mu^(k - w), w the clique number,
    // so only the bound C^k / mu holds for every negative instance.
    case Problem::empty_star:
    case Problem::empty_box: expect_value(*V, *V / *p.mu); break;
    case Problem::star_disc:
    case Problem::box_disc: expect_value(*V, std::nullopt); break;
    case Problem::halfspace_bichromatic:
        res.expected = std::string("feasible = ") + (res.clique ? "true" : "false");
        res.observed = std::string("feasible = ") + (*out.decision ? "true" : "false");
        if (*out.decision != res.clique)
            diff("expected " + res.expected + ", solver returned " + res.observed);
        break;
    case Problem::net_halfspace:
    case Problem::net_box: {
        if (!p.eps || *p.eps != Rational(k + 1) / Rational(N))
            diff("params.eps != (k+1)/N");
        res.expected = std::string("is_net = ") + (res.clique ? "false" : "true");
        res.observed = std::string("is_net = ") + (*out.decision ? "true" : "false");
        if (*out.decision == res.clique)
            diff("expected " + res.expected + ", verifier returned " + res.observed);
        break;
    }
    }
    return res;
}

} // namespace disc
