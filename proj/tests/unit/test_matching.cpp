#include <doctest.h>

#include "graphfactor/matching.hpp"
#include "helpers.hpp"

using namespace graphfactor;
using namespace testutil;

TEST_SUITE_BEGIN("matching");

namespace {

bool valid_matching(const Multigraph& g, const Matching& m) {
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (const EdgeInstance& e : m.edges) {
        if (e.is_loop()) return false;
        if (e.k < 0 || e.k >= g.multiplicity(e.u, e.v)) return false;
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)])
            return false;
        used[static_cast<std::size_t>(e.u)] = 1;
        used[static_cast<std::size_t>(e.v)] = 1;
    }
    return true;
}

Multigraph permuted(const Multigraph& g, const std::vector<int>& perm) {
    std::vector<std::tuple<int, int, int>> edges;
    for (const Edge& e : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(e.u)],
                           perm[static_cast<std::size_t>(e.v)], e.mult);
    return Multigraph(g.order(), edges);
}

} // namespace

TEST_CASE("max_matching basics") {
    CHECK(max_matching(complete(4)).size() == 2);
    CHECK(max_matching(path(3)).size() == 1);
    CHECK(max_matching(petersen()).size() == 5);
    CHECK(brute_force_max_matching(petersen()).size() == 5);
}

TEST_CASE("has_perfect_matching") {
    auto k2 = has_perfect_matching(path(2));
    REQUIRE(k2.has_value());
    CHECK(k2->edges == std::vector<EdgeInstance>{{0, 1, 0}});
    CHECK(!has_perfect_matching(star(3)).has_value());
    auto c6 = has_perfect_matching(cycle(6));
    REQUIRE(c6.has_value());
    CHECK(c6->size() == 3);
    CHECK(!has_perfect_matching(path(3)).has_value()); // odd order
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_max_matching(complete(4)).size() == 2);
    CHECK(brute_force_max_matching(complete(3)).size() == 1);
    Multigraph dbl(2, std::vector<std::tuple<int, int, int>>{{0, 1, 2}});
    CHECK(brute_force_max_matching(dbl).size() == 1);
    CHECK_THROWS_AS(brute_force_max_matching(complete(8)), CapError); // 28 > 20 copies
}

TEST_CASE("blossom agrees with the oracle and admits no augmenting path") {
    SplitMix64 rng(42);
    for (int round = 0; round < 300; ++round) {
        const int n = 2 + static_cast<int>(rng.bounded(9));
        Multigraph g = random_multigraph(rng, n, static_cast<int>(rng.bounded(8)), true);
        if (g.total_multiplicity() > 20) continue;
        const Matching fast = max_matching(g);
        CHECK(valid_matching(g, fast));
        CHECK(fast.size() == brute_force_max_matching(g).size());
        CHECK(!augmenting_path_exists(g, mate_of(g, fast)));
    }
}

TEST_CASE("matching number is invariant under relabeling") {
    SplitMix64 rng(43);
    for (int round = 0; round < 100; ++round) {
        const int n = 2 + static_cast<int>(rng.bounded(8));
        Multigraph g = random_multigraph(rng, n, static_cast<int>(rng.bounded(6)), false);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
        for (int v = n - 1; v > 0; --v)
            std::swap(perm[static_cast<std::size_t>(v)],
                      perm[static_cast<std::size_t>(rng.bounded(v + 1))]);
        CHECK(max_matching(g).size() == max_matching(permuted(g, perm)).size());
    }
}

TEST_CASE("deterministic output") {
    const Multigraph g = petersen();
    CHECK(max_matching(g) == max_matching(g));
}

TEST_SUITE_END();
