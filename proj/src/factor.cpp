#include "graphfactor/factor.hpp"

#include <algorithm>
#include <bit>

namespace graphfactor {

namespace {

struct IntervalSpec {
    int lo = 0;
    int hi = 0;
};

/// Gadget for fixed parity intervals. hi is clamped to the degree-feasible
/// range (degrees above deg_G(v) are unreachable, so the clamp is lossless).
GadgetResult build_gadget_intervals(const Multigraph& g, const std::vector<IntervalSpec>& spec) {
    const int n = g.order();
    std::vector<int> slot_base(n), core_base(n), core_count(n), pair_count(n);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        const int lo = spec[static_cast<std::size_t>(v)].lo;
        int hi = spec[static_cast<std::size_t>(v)].hi;
        if (d < lo) return InfeasibleAt{v};
        hi = std::min(hi, lo + 2 * ((d - lo) / 2));
        slot_base[v] = next;
        next += d;
        core_base[v] = next;
        core_count[v] = d - lo;
        next += core_count[v];
        pair_count[v] = (hi - lo) / 2;
    }

    GadgetGraph gg;
    gg.instances = g.edge_instances();
    gg.interval_lo.resize(n);
    for (int v = 0; v < n; ++v) gg.interval_lo[v] = spec[static_cast<std::size_t>(v)].lo;
    gg.slot_nodes.reserve(gg.instances.size());
    gg.core_nodes.resize(n);
    gg.core_pairs.resize(n);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(gg.instances.size() + static_cast<std::size_t>(next));

    std::vector<int> next_slot(n, 0);
    for (const EdgeInstance& e : gg.instances) {
        const int su = slot_base[e.u] + next_slot[e.u]++;
        const int sv = slot_base[e.v] + next_slot[e.v]++; // loop: second slot at the same vertex
        gg.slot_nodes.emplace_back(su, sv);
        edges.emplace_back(su, sv);
    }
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        for (int c = 0; c < core_count[v]; ++c) {
            const int core = core_base[v] + c;
            gg.core_nodes[v].push_back(core);
            for (int s = 0; s < d; ++s) edges.emplace_back(slot_base[v] + s, core);
        }
        for (int t = 0; t < pair_count[v]; ++t) {
            const int a = core_base[v] + 2 * t;
            const int b = a + 1;
            gg.core_pairs[v].emplace_back(a, b);
            edges.emplace_back(a, b);
        }
    }
    gg.graph = Multigraph(next, edges);
    return gg;
}

std::vector<IntervalSpec> intervals_of(const HAssignment& h) {
    std::vector<IntervalSpec> spec(static_cast<std::size_t>(h.size()));
    for (int v = 0; v < h.size(); ++v) {
        const DegreeSet& d = h.at(v);
        if (d.kind() != DegreeSet::Kind::ParityInterval)
            throw std::invalid_argument("build_gadget: set at vertex " + std::to_string(v) +
                                        " is not a parity interval or singleton");
        spec[static_cast<std::size_t>(v)] = {d.lo(), d.hi()};
    }
    return spec;
}

} // namespace

GadgetResult build_gadget(const Multigraph& g, const HAssignment& h) {
    if (h.size() != g.order()) throw std::invalid_argument("build_gadget: length mismatch");
    return build_gadget_intervals(g, intervals_of(h));
}

FactorCertificate decode_matching(const GadgetGraph& gg, const Matching& m) {
    const int nodes = gg.graph.order();
    std::vector<int> mate(nodes, -1);
    for (const EdgeInstance& e : m.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= nodes || e.v >= nodes ||
            gg.graph.multiplicity(e.u, e.v) < 1)
            throw std::invalid_argument("decode_matching: edge not in gadget");
        if (mate[e.u] != -1 || mate[e.v] != -1)
            throw std::invalid_argument("decode_matching: vertex matched twice");
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    for (int v = 0; v < nodes; ++v)
        if (mate[v] < 0) throw std::invalid_argument("decode_matching: matching is not perfect");

    const int n = static_cast<int>(gg.core_nodes.size());
    FactorCertificate cert;
    cert.degrees.assign(n, 0);
    for (std::size_t i = 0; i < gg.instances.size(); ++i) {
        const auto [su, sv] = gg.slot_nodes[i];
        if (mate[su] == sv) cert.edges.push_back(gg.instances[i]);
    }
    for (int v = 0; v < n; ++v) {
        int pairs_used = 0;
        for (const auto& [a, b] : gg.core_pairs[v])
            if (mate[a] == b) ++pairs_used;
        cert.degrees[v] = gg.interval_lo[v] + 2 * pairs_used;
    }
    // decoded degrees must agree with a direct recount from the edge set
    std::vector<int> recount(n, 0);
    for (const EdgeInstance& e : cert.edges) {
        if (e.is_loop()) recount[e.u] += 2;
        else {
            ++recount[e.u];
            ++recount[e.v];
        }
    }
    if (recount != cert.degrees)
        throw std::logic_error("decode_matching: degree arithmetic mismatch");
    return cert;
}

FactorResult find_h_factor(const Multigraph& g, const HAssignment& h, const SolverLimits& limits) {
    if (h.size() != g.order()) throw std::invalid_argument("find_h_factor: length mismatch");

    TruncateResult tr = truncate(h, g);
    if (auto* infeasible = std::get_if<InfeasibleAt>(&tr)) {
        FactorResult r;
        r.reason = NoFactorReason::Infeasible;
        r.infeasible_vertex = infeasible->vertex;
        return r;
    }
    const HAssignment& cut = std::get<HAssignment>(tr);

    const int n = g.order();
    std::vector<IntervalSpec> spec(static_cast<std::size_t>(n));
    std::vector<int> branch_vertices; // plus-top vertices, ascending id
    for (int v = 0; v < n; ++v) {
        const DegreeSet& d = cut.at(v);
        switch (classify(d)) {
        case SetClass::ParityInterval:
        case SetClass::Singleton:
            spec[static_cast<std::size_t>(v)] = {d.lo(), d.hi()};
            break;
        case SetClass::ParityIntervalPlusTop:
            branch_vertices.push_back(v);
            break;
        case SetClass::Other:
            throw std::invalid_argument("find_h_factor: unsupported set class at vertex " +
                                        std::to_string(v) + " (" + d.display() + ")");
        }
    }

    const std::size_t k = branch_vertices.size();
    if (k >= 63 || (std::uint64_t{1} << k) > limits.branch_cap)
        throw CapError("find_h_factor: 2^" + std::to_string(k) + " branches exceeds the cap of " +
                       std::to_string(limits.branch_cap));

    int fixed_parity = 0;
    for (int v = 0; v < n; ++v) {
        bool branched = std::binary_search(branch_vertices.begin(), branch_vertices.end(), v);
        if (!branched) fixed_parity ^= spec[static_cast<std::size_t>(v)].lo & 1;
    }

    FactorResult result;
    const std::uint64_t branches = std::uint64_t{1} << k;
    for (std::uint64_t idx = 0; idx < branches; ++idx) {
        ++result.branches_tried;
        int parity = fixed_parity;
        for (std::size_t j = 0; j < k; ++j) {
            const int v = branch_vertices[j];
            const DegreeSet& d = cut.at(v);
            if ((idx >> j) & 1)
                spec[static_cast<std::size_t>(v)] = {d.top_even(), d.top_even()};
            else
                spec[static_cast<std::size_t>(v)] = {d.lo(), d.hi_odd()};
            parity ^= spec[static_cast<std::size_t>(v)].lo & 1;
        }
        // sum of factor degrees is even, so an odd parity sum has no matching
        if (parity) continue;

        GadgetResult gr = build_gadget_intervals(g, spec);
        if (std::holds_alternative<InfeasibleAt>(gr)) continue;
        const GadgetGraph& gg = std::get<GadgetGraph>(gr);
        auto pm = has_perfect_matching(gg.graph);
        if (!pm) continue;

        result.certificate = decode_matching(gg, *pm);
        result.branch_index = idx;
        if (!verify_factor(g, h, *result.certificate))
            throw std::logic_error("find_h_factor: produced certificate failed verification");
        return result;
    }
    result.reason = NoFactorReason::Exhausted;
    return result;
}

std::optional<FactorCertificate> brute_force_h_factor(const Multigraph& g, const HAssignment& h) {
    if (h.size() != g.order()) throw std::invalid_argument("brute_force_h_factor: length mismatch");
    const int m = g.total_multiplicity();
    if (m > 16) throw CapError("brute_force_h_factor: total multiplicity > 16");

    const int n = g.order();
    const std::vector<EdgeInstance> instances = g.edge_instances();

    // membership pre-resolved as bitmasks; degrees never exceed 2m <= 32
    std::vector<std::uint64_t> allowed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int d = 0; d <= g.degree(v); ++d)
            if (h.at(v).contains(d)) allowed[static_cast<std::size_t>(v)] |= std::uint64_t{1} << d;

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int bad = 0;
    for (int v = 0; v < n; ++v)
        if (!(allowed[static_cast<std::size_t>(v)] & 1)) ++bad;

    auto adjust = [&](int v, int delta) {
        const auto sv = static_cast<std::size_t>(v);
        const bool was_ok = (allowed[sv] >> deg[sv]) & 1;
        deg[sv] += delta;
        const bool now_ok = (allowed[sv] >> deg[sv]) & 1;
        bad += (was_ok ? 0 : -1) + (now_ok ? 0 : 1);
    };
    auto toggle = [&](std::size_t i, bool on) {
        const EdgeInstance& e = instances[i];
        const int delta = on ? 1 : -1;
        if (e.is_loop()) adjust(e.u, 2 * delta);
        else {
            adjust(e.u, delta);
            adjust(e.v, delta);
        }
    };

    const std::uint64_t full = (m == 0) ? 0 : ((std::uint64_t{1} << m) - 1);
    std::uint64_t mask = 0;
    while (true) {
        if (bad == 0) {
            FactorCertificate cert;
            cert.degrees = deg;
            for (std::size_t i = 0; i < instances.size(); ++i)
                if ((mask >> i) & 1) cert.edges.push_back(instances[i]);
            return cert;
        }
        if (mask == full) return std::nullopt;
        const std::uint64_t flips = mask ^ (mask + 1);
        ++mask;
        for (std::uint64_t f = flips; f != 0; f &= f - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(f));
            toggle(i, (mask >> i) & 1);
        }
    }
}

bool verify_factor(const Multigraph& g, const HAssignment& h, const FactorCertificate& f) {
    if (h.size() != g.order()) throw std::invalid_argument("verify_factor: length mismatch");
    std::vector<EdgeInstance> seen = f.edges;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("verify_factor: edge instance used twice");
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    for (const EdgeInstance& e : seen) {
        if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || e.u > e.v || e.k < 0 ||
            e.k >= g.multiplicity(e.u, e.v))
            throw std::invalid_argument("verify_factor: foreign edge instance");
        if (e.is_loop()) deg[static_cast<std::size_t>(e.u)] += 2;
        else {
            ++deg[static_cast<std::size_t>(e.u)];
            ++deg[static_cast<std::size_t>(e.v)];
        }
    }
    if (!f.degrees.empty() &&
        f.degrees != deg) // recorded degrees must match the recount
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (!h.at(v).contains(deg[static_cast<std::size_t>(v)])) return false;
    return true;
}

} // namespace graphfactor
