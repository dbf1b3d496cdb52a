#pragma once

// Disjoint partitioning of a candidate space across worker threads with a
// deterministic merge. Worker w handles top-level tasks w, w + T, w + 2T, ...
// and keeps its own incumbent; incumbents are merged by value, ties going to
// the smaller task index. Since each worker only accepts strict improvements
// and visits its tasks in increasing order, the merged result is the first
// optimum of the sequential traversal for every worker count.

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace disc {

/// Worker count from DISC_THREADS, else 1.
inline unsigned default_threads()
{
    if (const char* env = std::getenv("DISC_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t > 0)
                return static_cast<unsigned>(t);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

struct SolveOptions {
    unsigned threads = default_threads();
};

template <class Value, class Witness>
struct Incumbent {
    bool has = false;
    Value value{};
    Witness witness{};
    std::size_t task = 0;

    bool beaten_by(const Value& v) const { return !has || value < v; }

    /// True when no candidate bounded by `bound` can strictly improve.
    bool dominates(const Value& bound) const { return has && !(value < bound); }

    void offer(const Value& v, const Witness& w, std::size_t t)
    {
        if (beaten_by(v)) {
            has = true;
            value = v;
            witness = w;
            task = t;
        }
    }

    void merge(const Incumbent& o)
    {
        if (!o.has)
            return;
        if (!has || value < o.value || (o.value == value && o.task < task))
            *this = o;
    }
};

/// Runs body(first, stride) on `threads` workers and returns their results in
/// worker order. Exceptions thrown by a worker are rethrown on the caller.
template <class Body>
auto run_workers(unsigned threads, std::size_t tasks, Body body)
{
    using Result = decltype(body(std::size_t{0}, std::size_t{1}));
    if (threads == 0)
        threads = 1;
    if (tasks > 0 && threads > tasks)
        threads = static_cast<unsigned>(tasks);
    std::vector<Result> results(threads);
    if (threads == 1) {
        results[0] = body(0, 1);
        return results;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                try {
                    results[w] = body(w, threads);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

} // namespace disc
