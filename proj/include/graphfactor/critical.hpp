#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "graphfactor/factor.hpp"

namespace graphfactor {

/// Extend H to G^x: the pendant vertex x' = n gets exactly {1}.
HAssignment h_pendant(const HAssignment& h, int x_prime);

/// The assignment actually solved on G^x: h_pendant, with an ODD_ALL-tagged
/// set at x re-derived from deg_{G^x}(x) (the stored truncation is only valid
/// for the host graph). gx must be add_pendant(g, x).first.
HAssignment pendant_assignment(const Multigraph& gx, const HAssignment& h, int x);

enum class CriticalityMode {
    Full, // all n pendant results, even after an early disqualification
    Fast, // short-circuit on the first missing pendant factor
};

struct CriticalityReport {
    bool has_factor = false;
    bool is_critical = false;
    /// Indexed by x. In Fast mode only the first pendants_solved entries were
    /// computed; an early failure stops the scan.
    std::vector<std::optional<FactorCertificate>> per_vertex;
    int pendants_solved = 0;
};

/// Pluggable solver, so harnesses can count and cross-validate every solve
/// (host and pendants alike). Empty means plain find_h_factor.
using FactorSolver = std::function<FactorResult(const Multigraph&, const HAssignment&)>;

/// G is H-critical when it has no H-factor yet every G^x has an H^x-factor.
/// ODD_ALL-tagged sets (truncated odd sets from the colored theorems) are
/// re-derived at x from deg_{G^x}(x); the stored truncation is only valid for
/// the host graph and would under-approximate at the attachment vertex.
CriticalityReport is_h_critical(const Multigraph& g, const HAssignment& h,
                                CriticalityMode mode = CriticalityMode::Full,
                                const SolverLimits& limits = {},
                                const FactorSolver& solver = {});

} // namespace graphfactor
