#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace disc {

/// Simple undirected graph on vertices 1..n.
class Graph {
public:
    explicit Graph(int n = 0) : n_(n)
    {
        if (n < 0)
            throw std::invalid_argument("vertex count must be non-negative");
    }

    void add_edge(int u, int v)
    {
        if (u == v)
            throw std::invalid_argument("loops forbidden (graph is simple)");
        if (u < 1 || v < 1 || u > n_ || v > n_)
            throw std::invalid_argument("vertex out of range: " + std::to_string(u < 1 || u > n_ ? u : v));
        if (!edges_.emplace(std::min(u, v), std::max(u, v)).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }

    bool has_edge(int u, int v) const { return edges_.count({std::min(u, v), std::max(u, v)}) > 0; }

    int n() const { return n_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::set<std::pair<int, int>> edges_;
};

inline Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

/// One representative per isomorphism class of graphs on n vertices
/// (2, 4 and 11 classes for n = 2, 3, 4). Brute force; intended for n <= 5.
inline std::vector<Graph> graphs_up_to_isomorphism(int n)
{
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            slots.emplace_back(u, v);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::set<unsigned long> seen;
    std::vector<Graph> out;
    const unsigned long masks = 1UL << slots.size();
    for (unsigned long mask = 0; mask < masks; ++mask) {
        unsigned long canon = ~0UL;
        std::iota(perm.begin(), perm.end(), 1);
        do {
            unsigned long image = 0;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (!(mask >> s & 1))
                    continue;
                int a = perm[static_cast<std::size_t>(slots[s].first - 1)];
                int b = perm[static_cast<std::size_t>(slots[s].second - 1)];
                auto it = std::find(slots.begin(), slots.end(), std::make_pair(std::min(a, b), std::max(a, b)));
                image |= 1UL << (it - slots.begin());
            }
            canon = std::min(canon, image);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(canon).second)
            continue;
        Graph g(n);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (canon >> s & 1)
                g.add_edge(slots[s].first, slots[s].second);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace disc
