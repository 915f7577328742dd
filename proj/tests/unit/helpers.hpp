#pragma once

#include <algorithm>
#include <vector>

#include "graphfactor/graph.hpp"
#include "graphfactor/matching.hpp"
#include "graphfactor/rng.hpp"

namespace testutil {

using graphfactor::Multigraph;

inline Multigraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Multigraph(n, edges);
}

inline Multigraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Multigraph(n, edges);
}

inline Multigraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Multigraph(n, edges);
}

/// K_{1,k}: center 0, leaves 1..k.
inline Multigraph star(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return Multigraph(k + 1, edges);
}

inline Multigraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Multigraph(10, edges);
}

/// Random connected multigraph: spanning tree plus extra edges, loops allowed.
inline Multigraph random_multigraph(graphfactor::SplitMix64& rng, int n, int extra, bool loops) {
    std::vector<std::tuple<int, int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng.bounded(v)), v, 1);
    for (int e = 0; e < extra; ++e) {
        int u = static_cast<int>(rng.bounded(n));
        int v = static_cast<int>(rng.bounded(n));
        if (u == v && !loops) v = (u + 1) % n;
        edges.emplace_back(u, v, 1);
    }
    return Multigraph(n, edges);
}

/// Exhaustive alternating-path search: true iff an augmenting path exists for
/// the matching given by mate[]. Independent of the blossom implementation.
inline bool augmenting_path_exists(const Multigraph& g, const std::vector<int>& mate) {
    const int n = g.order();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);

    // v was entered along a matched edge (or is an exposed start); the next
    // edge must be unmatched
    auto dfs = [&](auto&& self, int v) -> bool {
        for (const int* w = g.neighbors_begin(v); w != g.neighbors_end(v); ++w) {
            if (visited[static_cast<std::size_t>(*w)] || mate[static_cast<std::size_t>(v)] == *w)
                continue;
            if (mate[static_cast<std::size_t>(*w)] < 0) return true;
            const int next = mate[static_cast<std::size_t>(*w)];
            if (visited[static_cast<std::size_t>(next)]) continue;
            visited[static_cast<std::size_t>(*w)] = 1;
            visited[static_cast<std::size_t>(next)] = 1;
            if (self(self, next)) return true;
            visited[static_cast<std::size_t>(*w)] = 0;
            visited[static_cast<std::size_t>(next)] = 0;
        }
        return false;
    };

    for (int v = 0; v < n; ++v) {
        if (mate[static_cast<std::size_t>(v)] >= 0) continue;
        std::fill(visited.begin(), visited.end(), 0);
        visited[static_cast<std::size_t>(v)] = 1;
        if (dfs(dfs, v)) return true;
    }
    return false;
}

inline std::vector<int> mate_of(const Multigraph& g, const graphfactor::Matching& m) {
    std::vector<int> mate(static_cast<std::size_t>(g.order()), -1);
    for (const auto& e : m.edges) {
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    return mate;
}

} // namespace testutil
