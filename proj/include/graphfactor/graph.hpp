#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graphfactor/errors.hpp"

namespace graphfactor {

/// One parallel class of edges: endpoints u <= v, multiplicity >= 1.
/// A loop is the class (v, v) and contributes 2 to deg(v) per copy.
struct Edge {
    int u = 0;
    int v = 0;
    int mult = 1;

    bool is_loop() const { return u == v; }
    auto operator<=>(const Edge&) const = default;
};

/// A single edge copy: the k-th parallel copy (0-based) of the class (u, v).
/// Certificates and matchings are multisets of these.
struct EdgeInstance {
    int u = 0;
    int v = 0;
    int k = 0;

    bool is_loop() const { return u == v; }
    auto operator<=>(const EdgeInstance&) const = default;
};

/// A subset of vertex ids in canonical sorted order, no duplicates.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);
    static VertexSet from_mask(std::uint64_t mask);

    bool contains(int v) const;
    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    const std::vector<int>& ids() const { return ids_; }
    std::uint64_t mask() const; // requires max id < 64

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> ids_;
};

/// General graph: multigraph with loops, dense vertex ids 0..n-1.
/// Immutable after construction; derived quantities are built eagerly.
class Multigraph {
public:
    /// Edges may repeat and arrive in any orientation; parallel copies
    /// accumulate into one class. Multiplicities must be >= 1 and endpoints
    /// must lie in [0, n).
    Multigraph(int n, const std::vector<std::tuple<int, int, int>>& edges);
    Multigraph(int n, const std::vector<std::pair<int, int>>& edges);
    explicit Multigraph(int n) : Multigraph(n, std::vector<std::pair<int, int>>{}) {}

    int order() const { return n_; }
    int total_multiplicity() const { return total_mult_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const;
    int multiplicity(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }
    bool is_simple() const { return simple_; }

    /// Collapsed adjacency (distinct neighbors, loops excluded), sorted.
    const int* neighbors_begin(int v) const { return adj_.data() + adj_offsets_[v]; }
    const int* neighbors_end(int v) const { return adj_.data() + adj_offsets_[v + 1]; }
    int neighbor_count(int v) const { return adj_offsets_[v + 1] - adj_offsets_[v]; }

    /// Neighbor bitmask, only valid when order() <= 64.
    std::uint64_t neighbor_mask(int v) const { return adj_mask_[v]; }

    /// All edge copies in canonical (u, v, k) order.
    std::vector<EdgeInstance> edge_instances() const;

    /// Canonical one-line edge-list text "n; u v m; ..." used in replay bundles.
    std::string replay_text() const;

    bool operator==(const Multigraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void build_caches();

    int n_ = 0;
    int total_mult_ = 0;
    bool simple_ = true;
    std::vector<Edge> edges_;           // sorted by (u, v), u <= v
    std::vector<int> degree_;
    std::vector<int> adj_;              // CSR neighbor lists
    std::vector<int> adj_offsets_;
    std::vector<std::uint64_t> adj_mask_; // empty when n > 64
};

/// Connected components as a partition of vertex ids; blocks are sorted
/// internally and ordered by their smallest member.
std::vector<std::vector<int>> components(const Multigraph& g);

/// Number of odd-order components of G - S (S's incident edges removed too).
int odd_components(const Multigraph& g, const VertexSet& s);

/// G plus a new pendant vertex x' = n attached to x by one edge.
std::pair<Multigraph, int> add_pendant(const Multigraph& g, int x);

} // namespace graphfactor
