#include "graphfactor/critical.hpp"

namespace graphfactor {

HAssignment h_pendant(const HAssignment& h, int x_prime) {
    if (x_prime != h.size())
        throw std::invalid_argument("h_pendant: pendant vertex id must equal n");
    std::vector<DegreeSet> sets = h.sets();
    std::vector<SetTag> tags;
    tags.reserve(static_cast<std::size_t>(h.size()) + 1);
    for (int v = 0; v < h.size(); ++v) tags.push_back(h.tag(v));
    sets.push_back(DegreeSet::parity_interval(1, 1));
    tags.push_back(SetTag::OTHER);
    return HAssignment(std::move(sets), std::move(tags));
}

HAssignment pendant_assignment(const Multigraph& gx, const HAssignment& h, int x) {
    if (gx.order() != h.size() + 1 || x < 0 || x >= h.size())
        throw std::invalid_argument("pendant_assignment: shape mismatch");
    HAssignment hx = h_pendant(h, h.size());
    if (h.tag(x) != SetTag::ODD_ALL) return hx;
    const int d = gx.degree(x);
    std::vector<DegreeSet> sets = hx.sets();
    std::vector<SetTag> tags;
    tags.reserve(sets.size());
    for (int v = 0; v <= h.size(); ++v) tags.push_back(hx.tag(v));
    sets[static_cast<std::size_t>(x)] = DegreeSet::parity_interval(1, (d & 1) ? d : d - 1);
    return HAssignment(std::move(sets), std::move(tags));
}

CriticalityReport is_h_critical(const Multigraph& g, const HAssignment& h,
                                CriticalityMode mode, const SolverLimits& limits,
                                const FactorSolver& solver) {
    if (h.size() != g.order()) throw std::invalid_argument("is_h_critical: length mismatch");

    auto solve = [&](const Multigraph& gg, const HAssignment& hh) {
        return solver ? solver(gg, hh) : find_h_factor(gg, hh, limits);
    };

    CriticalityReport report;
    report.per_vertex.assign(static_cast<std::size_t>(g.order()), std::nullopt);
    report.has_factor = solve(g, h).found();

    bool all_pendants = g.order() > 0;
    if (mode == CriticalityMode::Fast && report.has_factor) {
        all_pendants = false; // not computed; no claim either way
    } else {
        for (int x = 0; x < g.order(); ++x) {
            auto [gx, x_prime] = add_pendant(g, x);
            FactorResult fr = solve(gx, pendant_assignment(gx, h, x));
            ++report.pendants_solved;
            if (fr.found()) {
                report.per_vertex[static_cast<std::size_t>(x)] = std::move(*fr.certificate);
            } else {
                all_pendants = false;
                if (mode == CriticalityMode::Fast) break;
            }
        }
    }

    report.is_critical =
        !report.has_factor && all_pendants && report.pendants_solved == g.order();
    return report;
}

} // namespace graphfactor
