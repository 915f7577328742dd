#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "graphfactor/assignment.hpp"
#include "graphfactor/graph.hpp"

namespace graphfactor {

struct TutteViolation {
    VertexSet s;
    int odd_count = 0;
    long long f_sum = 0;
};

struct TutteVerdict {
    bool holds = false;
    std::optional<TutteViolation> violation;
    std::uint64_t subsets_checked = 0;
};

/// Decide o(G-S) <= f(S) for every nonempty S by exhaustive enumeration in
/// (size, lexicographic) order; the first violating S is the canonical
/// witness. Requires n <= 24. S = V(G) is included; it never violates.
TutteVerdict check_tutte(const Multigraph& g, const FSpec& f);

/// Maximize o(G-S) - f(S) over nonempty S; canonical-order tie-break.
/// The value is <= 0 iff the Tutte condition holds. Requires n <= 24.
std::pair<VertexSet, long long> worst_deficiency(const Multigraph& g, const FSpec& f);

/// The sufficiency-direction assignment: J_f(v) inside S, J_f^+(v) outside.
/// Always a member of h_family(f). S must be nonempty.
HAssignment sufficiency_h(const FSpec& f, const VertexSet& s);

/// The necessity-direction weight: f'(v) = max H(v), i.e. f(v)+1 exactly when
/// H(v) = J_f^+(v) with f(v) even. H must belong to the family (tags checked).
FSpec necessity_fprime(const FSpec& f, const HAssignment& h);

} // namespace graphfactor
