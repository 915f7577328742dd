#include "graphfactor/matching.hpp"

#include <algorithm>
#include <queue>

namespace graphfactor {

namespace {

/// Edmonds' blossom algorithm on the collapsed simple adjacency, using the
/// classic base/parent/match arrays with blossom contraction by base
/// relabeling. Deterministic: neighbors are scanned in sorted order and
/// augmenting roots in ascending id order.
class Blossom {
public:
    explicit Blossom(const Multigraph& g)
        : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

    std::vector<int> solve() {
        greedy_seed();
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) augment_from(v);
        return match_;
    }

private:
    void greedy_seed() {
        for (const Edge& e : g_.edges()) {
            if (e.is_loop()) continue;
            if (match_[e.u] < 0 && match_[e.v] < 0) {
                match_[e.u] = e.v;
                match_[e.v] = e.u;
            }
        }
    }

    int lowest_common_base(int a, int b) {
        std::vector<char> on_path(n_, 0);
        while (true) {
            a = base_[a];
            on_path[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (on_path[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    bool augment_from(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        std::queue<int> queue;
        used_[root] = 1;
        queue.push(root);

        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (const int* it = g_.neighbors_begin(v); it != g_.neighbors_end(v); ++it) {
                const int u = *it;
                if (base_[v] == base_[u] || match_[v] == u) continue;
                if (u == root || (match_[u] >= 0 && parent_[match_[u]] >= 0)) {
                    // odd cycle: contract the blossom by relabeling bases
                    const int b = lowest_common_base(v, u);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, b, u);
                    mark_path(u, b, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push(i);
                            }
                        }
                } else if (parent_[u] < 0) {
                    parent_[u] = v;
                    if (match_[u] < 0) {
                        flip_path(u);
                        return true;
                    }
                    used_[match_[u]] = 1;
                    queue.push(match_[u]);
                }
            }
        }
        return false;
    }

    void flip_path(int u) {
        while (u >= 0) {
            const int pv = parent_[u];
            const int next = match_[pv];
            match_[u] = pv;
            match_[pv] = u;
            u = next;
        }
    }

    const Multigraph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

Matching mate_to_matching(const std::vector<int>& mate) {
    Matching m;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v) m.edges.push_back({v, mate[v], 0});
    return m;
}

} // namespace

Matching max_matching(const Multigraph& g) {
    Blossom solver(g);
    return mate_to_matching(solver.solve());
}

std::optional<Matching> has_perfect_matching(const Multigraph& g) {
    if (g.order() % 2 != 0) return std::nullopt;
    Matching m = max_matching(g);
    if (static_cast<int>(m.size()) * 2 != g.order()) return std::nullopt;
    return m;
}

namespace {

/// Backtracking over distinct non-loop pairs; parallel copies never help a
/// matching, so the collapsed edge classes are the whole search space.
struct BruteMatcher {
    std::vector<std::pair<int, int>> pairs;
    std::uint64_t used = 0;
    std::size_t best = 0;

    void search(std::size_t i, std::size_t taken) {
        if (taken + (pairs.size() - i) <= best) return;
        if (i == pairs.size()) {
            best = std::max(best, taken);
            return;
        }
        const auto [u, v] = pairs[i];
        const std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if ((used & mask) == 0) {
            used |= mask;
            search(i + 1, taken + 1);
            used &= ~mask;
        }
        search(i + 1, taken);
    }
};

} // namespace

Matching brute_force_max_matching(const Multigraph& g) {
    if (g.total_multiplicity() > 20)
        throw CapError("brute_force_max_matching: total multiplicity > 20");
    BruteMatcher bm;
    for (const Edge& e : g.edges())
        if (!e.is_loop()) bm.pairs.emplace_back(e.u, e.v);
    bm.search(0, 0);

    // rebuild one maximum matching deterministically: rerun, stopping at the
    // first assignment attaining the optimum in canonical DFS order
    struct Rebuilder {
        const std::vector<std::pair<int, int>>& pairs;
        std::size_t target;
        std::uint64_t used = 0;
        std::vector<int> chosen;
        bool done = false;

        Rebuilder(const std::vector<std::pair<int, int>>& p, std::size_t t) : pairs(p), target(t) {}

        void search(std::size_t i, std::size_t taken) {
            if (done) return;
            if (taken == target) {
                done = true;
                return;
            }
            if (i == pairs.size() || taken + (pairs.size() - i) < target) return;
            const auto [u, v] = pairs[i];
            const std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if ((used & mask) == 0) {
                used |= mask;
                chosen.push_back(static_cast<int>(i));
                search(i + 1, taken + 1);
                if (done) return;
                chosen.pop_back();
                used &= ~mask;
            }
            search(i + 1, taken);
        }
    } rb(bm.pairs, bm.best);
    rb.search(0, 0);

    Matching m;
    for (int i : rb.chosen) m.edges.push_back({bm.pairs[i].first, bm.pairs[i].second, 0});
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

} // namespace graphfactor
