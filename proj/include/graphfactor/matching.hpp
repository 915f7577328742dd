#pragma once

#include <optional>
#include <vector>

#include "graphfactor/graph.hpp"

namespace graphfactor {

/// A set of edge copies with pairwise disjoint endpoints, canonically sorted.
struct Matching {
    std::vector<EdgeInstance> edges;

    std::size_t size() const { return edges.size(); }
    bool operator==(const Matching&) const = default;
};

/// Maximum-cardinality matching via Edmonds' blossom algorithm, O(V^3).
/// Loops are ignored; parallel classes collapse (two copies share endpoints,
/// so only copy 0 can ever be used). Deterministic for a given graph:
/// canonical edge order drives both the greedy seed and the augmenting search.
Matching max_matching(const Multigraph& g);

/// A perfect matching if one exists; absence is a guaranteed answer.
std::optional<Matching> has_perfect_matching(const Multigraph& g);

/// Exhaustive-search oracle; requires total multiplicity <= 20.
Matching brute_force_max_matching(const Multigraph& g);

} // namespace graphfactor
