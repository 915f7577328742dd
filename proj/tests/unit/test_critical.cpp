#include <doctest.h>

#include "graphfactor/critical.hpp"
#include "graphfactor/theorems.hpp"
#include "helpers.hpp"

using namespace graphfactor;
using namespace testutil;

TEST_SUITE_BEGIN("critical");

TEST_CASE("h_pendant") {
    HAssignment h = HAssignment::uniform(3, j_set(1));
    const HAssignment hx = h_pendant(h, 3);
    REQUIRE(hx.size() == 4);
    CHECK(hx.at(3) == j_set(1));
    for (int v = 0; v < 3; ++v) CHECK(hx.at(v) == h.at(v));

    HFamily family(FSpec({2, 2}));
    const HAssignment jf = family.member(0);
    const HAssignment jx = h_pendant(jf, 2);
    CHECK(jx.at(0) == j_set(2));
    CHECK(jx.at(1) == j_set(2));
    CHECK(jx.at(2).elements() == std::vector<int>{1});

    CHECK_THROWS_AS(h_pendant(h, 2), std::invalid_argument);
}

TEST_CASE("triangles are {1}-critical") {
    const CriticalityReport r = is_h_critical(complete(3), HAssignment::uniform(3, j_set(1)));
    CHECK(!r.has_factor);
    CHECK(r.is_critical);
    REQUIRE(r.per_vertex.size() == 3);
    for (const auto& cert : r.per_vertex) {
        REQUIRE(cert.has_value());
        CHECK(cert->degrees.back() == 1); // the pendant vertex
    }
}

TEST_CASE("K2 has a factor, so it is not critical") {
    const CriticalityReport r = is_h_critical(path(2), HAssignment::uniform(2, j_set(1)));
    CHECK(r.has_factor);
    CHECK(!r.is_critical);
}

TEST_CASE("the claw is neither") {
    const CriticalityReport r = is_h_critical(star(3), HAssignment::uniform(4, j_set(1)));
    CHECK(!r.has_factor);
    CHECK(!r.is_critical); // every pendant graph has odd order, no perfect matching
    for (const auto& cert : r.per_vertex) CHECK(!cert.has_value());
}

TEST_CASE("fast mode agrees with full mode on the verdict") {
    SplitMix64 rng(31);
    for (int round = 0; round < 60; ++round) {
        const int n = 1 + static_cast<int>(rng.bounded(5));
        Multigraph g = random_multigraph(rng, n, static_cast<int>(rng.bounded(4)), true);
        std::vector<int> values(static_cast<std::size_t>(n));
        for (auto& v : values) v = 1 + static_cast<int>(rng.bounded(3));
        const HFamily family{FSpec(values)};
        const HAssignment h = family.member(rng.bounded(family.size()));
        const CriticalityReport full = is_h_critical(g, h, CriticalityMode::Full);
        const CriticalityReport fast = is_h_critical(g, h, CriticalityMode::Fast);
        CHECK(full.is_critical == fast.is_critical);
        CHECK(full.has_factor == fast.has_factor);
        CHECK(!(full.has_factor && full.is_critical)); // exclusivity
    }
}

TEST_CASE("pendant certificates use the pendant edge and shrink back into G") {
    const Multigraph g = complete(5);
    const HAssignment h = HAssignment::uniform(5, j_set(1));
    const CriticalityReport r = is_h_critical(g, h);
    CHECK(r.is_critical);
    for (int x = 0; x < 5; ++x) {
        REQUIRE(r.per_vertex[static_cast<std::size_t>(x)].has_value());
        const FactorCertificate& cert = *r.per_vertex[static_cast<std::size_t>(x)];
        // x' has degree exactly 1, so the pendant edge x-x' is used
        CHECK(cert.degrees[5] == 1);
        bool pendant_used = false;
        std::vector<int> host_deg(5, 0);
        for (const EdgeInstance& e : cert.edges) {
            if (e.v == 5) {
                pendant_used = true;
                CHECK(e.u == x);
                continue;
            }
            ++host_deg[static_cast<std::size_t>(e.u)];
            ++host_deg[static_cast<std::size_t>(e.v)];
        }
        CHECK(pendant_used);
        // deleting x' leaves x one short of a member of H(x)
        CHECK(h.at(x).contains(host_deg[static_cast<std::size_t>(x)] + 1));
    }
}

TEST_CASE("parity split for all-odd families") {
    SplitMix64 rng(32);
    int critical_seen = 0, factor_seen = 0;
    for (int round = 0; round < 80; ++round) {
        const int n = 2 + static_cast<int>(rng.bounded(5));
        Multigraph g = random_multigraph(rng, n, static_cast<int>(rng.bounded(4)), false);
        std::vector<int> values(static_cast<std::size_t>(n));
        for (auto& v : values) v = 1 + 2 * static_cast<int>(rng.bounded(2)); // odd values
        const HAssignment h = HFamily(FSpec(values)).member(0); // all-odd parity intervals
        const CriticalityReport r = is_h_critical(g, h);
        if (r.is_critical) {
            CHECK(n % 2 == 1);
            ++critical_seen;
        }
        if (r.has_factor) {
            CHECK(n % 2 == 0);
            ++factor_seen;
        }
    }
    CHECK(critical_seen > 0);
    CHECK(factor_seen > 0);
}

TEST_SUITE_END();
