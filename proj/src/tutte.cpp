#include "graphfactor/tutte.hpp"

#include <algorithm>
#include <bit>

namespace graphfactor {

namespace {

constexpr int kSubsetGuard = 24;

/// Odd components of G - S over cached neighbor masks; callers guarantee
/// n <= kSubsetGuard < 64.
int odd_components_fast(const Multigraph& g, std::uint64_t s_mask, std::uint64_t all) {
    std::uint64_t rem = all & ~s_mask;
    int odd = 0;
    while (rem != 0) {
        std::uint64_t comp = rem & (~rem + 1);
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f != 0; f &= f - 1)
                next |= g.neighbor_mask(std::countr_zero(f));
            frontier = next & rem & ~comp;
            comp |= frontier;
        }
        odd += std::popcount(comp) & 1;
        rem &= ~comp;
    }
    return odd;
}

/// Visit every nonempty S in (size, lexicographic) order. The visitor
/// returns true to stop early.
template <typename Visitor>
void for_each_subset(int n, Visitor&& visit) {
    std::vector<int> idx;
    for (int size = 1; size <= n; ++size) {
        idx.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= std::uint64_t{1} << i;
            if (visit(mask)) return;
            // next lexicographic combination
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
}

void check_guard(const Multigraph& g, const FSpec& f, const char* who) {
    if (f.size() != g.order())
        throw std::invalid_argument(std::string(who) + ": f length mismatch");
    if (g.order() > kSubsetGuard)
        throw CapError(std::string(who) + ": n > " + std::to_string(kSubsetGuard) +
                       " exceeds the exhaustive enumeration guard");
}

} // namespace

TutteVerdict check_tutte(const Multigraph& g, const FSpec& f) {
    check_guard(g, f, "check_tutte");
    const int n = g.order();
    const std::uint64_t all = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);

    TutteVerdict verdict;
    verdict.holds = true;
    for_each_subset(n, [&](std::uint64_t mask) {
        ++verdict.subsets_checked;
        long long fs = 0;
        for (std::uint64_t s = mask; s != 0; s &= s - 1) fs += f.value(std::countr_zero(s));
        const int odd = odd_components_fast(g, mask, all);
        if (odd > fs) {
            verdict.holds = false;
            verdict.violation = TutteViolation{VertexSet::from_mask(mask), odd, fs};
            return true;
        }
        return false;
    });
    return verdict;
}

std::pair<VertexSet, long long> worst_deficiency(const Multigraph& g, const FSpec& f) {
    check_guard(g, f, "worst_deficiency");
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("worst_deficiency: empty graph has no nonempty S");
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;

    bool have = false;
    long long best = 0;
    std::uint64_t best_mask = 0;
    for_each_subset(n, [&](std::uint64_t mask) {
        long long fs = 0;
        for (std::uint64_t s = mask; s != 0; s &= s - 1) fs += f.value(std::countr_zero(s));
        const long long value = odd_components_fast(g, mask, all) - fs;
        if (!have || value > best) { // first maximizer in canonical order wins
            have = true;
            best = value;
            best_mask = mask;
        }
        return false;
    });
    return {VertexSet::from_mask(best_mask), best};
}

HAssignment sufficiency_h(const FSpec& f, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("sufficiency_h: S must be nonempty");
    for (int v : s)
        if (v >= f.size()) throw std::invalid_argument("sufficiency_h: S out of range");
    std::vector<DegreeSet> sets;
    std::vector<SetTag> tags;
    sets.reserve(static_cast<std::size_t>(f.size()));
    tags.reserve(static_cast<std::size_t>(f.size()));
    for (int v = 0; v < f.size(); ++v) {
        if (s.contains(v)) {
            sets.push_back(j_set(f.value(v)));
            tags.push_back(SetTag::JF);
        } else {
            sets.push_back(j_plus_set(f.value(v)));
            tags.push_back(SetTag::JFPLUS);
        }
    }
    return HAssignment(std::move(sets), std::move(tags));
}

FSpec necessity_fprime(const FSpec& f, const HAssignment& h) {
    if (h.size() != f.size()) throw std::invalid_argument("necessity_fprime: length mismatch");
    std::vector<int> values(static_cast<std::size_t>(f.size()));
    for (int v = 0; v < f.size(); ++v) {
        const int fv = f.value(v);
        const SetTag tag = h.tag(v);
        const DegreeSet expected = (tag == SetTag::JF)       ? j_set(fv)
                                   : (tag == SetTag::JFPLUS) ? j_plus_set(fv)
                                                             : DegreeSet::parity_interval(0, 0);
        if ((tag != SetTag::JF && tag != SetTag::JFPLUS) || !(h.at(v) == expected))
            throw std::invalid_argument("necessity_fprime: H is not a member of h_family(f) at vertex " +
                                        std::to_string(v));
        values[static_cast<std::size_t>(v)] = h.at(v).max_degree();
    }
    return FSpec(std::move(values));
}

} // namespace graphfactor
