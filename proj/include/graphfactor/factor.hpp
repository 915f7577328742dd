#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphfactor/assignment.hpp"
#include "graphfactor/graph.hpp"
#include "graphfactor/matching.hpp"

namespace graphfactor {

/// A spanning subgraph presented as an edge sub-multiset plus the per-vertex
/// degrees it induces (loops count 2). Degrees are redundant but recorded so
/// certificates are self-checking.
struct FactorCertificate {
    std::vector<EdgeInstance> edges; // canonical (u, v, k) order
    std::vector<int> degrees;

    bool operator==(const FactorCertificate&) const = default;
};

/// Auxiliary simple graph of the parity-interval reduction. Vertex v with
/// allowed set {g, g+2, ..., h} and degree d contributes d slot nodes and
/// d - g core nodes, joined complete-bipartite, plus floor((h-g)/2) disjoint
/// core-core edges. Each original edge copy contributes its slot-slot edge;
/// a loop's two slots are adjacent, so choosing that edge adds 2 to the
/// decoded degree.
struct GadgetGraph {
    Multigraph graph{0};                                 // the auxiliary simple graph
    std::vector<EdgeInstance> instances;                 // original edge copies, canonical order
    std::vector<std::pair<int, int>> slot_nodes;         // per instance: (slot at u, slot at v)
    std::vector<std::vector<int>> core_nodes;            // per original vertex
    std::vector<std::vector<std::pair<int, int>>> core_pairs; // per original vertex
    std::vector<int> interval_lo;                        // g_v per original vertex
};

using GadgetResult = std::variant<GadgetGraph, InfeasibleAt>;

/// Build the reduction. Every set must classify as ParityInterval or
/// Singleton (plus-top and explicit sets are the caller's contract
/// violation). Infeasible when some deg_G(v) < lo(H(v)).
GadgetResult build_gadget(const Multigraph& g, const HAssignment& h);

/// Map a perfect matching of the gadget back to a factor: the original edge
/// copies whose two slots are matched to each other. deg_F(v) always equals
/// lo(H(v)) + 2 * (core-core edges of v used).
FactorCertificate decode_matching(const GadgetGraph& gg, const Matching& m);

enum class NoFactorReason : std::uint8_t {
    None,        // a certificate was found
    Infeasible,  // truncation emptied some vertex's set
    Exhausted,   // every branch reported no perfect matching
};

struct SolverLimits {
    std::uint64_t branch_cap = kDefaultBranchCap;
};

struct FactorResult {
    std::optional<FactorCertificate> certificate;
    NoFactorReason reason = NoFactorReason::None;
    int infeasible_vertex = -1;      // when reason == Infeasible
    std::uint64_t branches_tried = 0;
    std::uint64_t branch_index = 0;  // winning branch when found

    bool found() const { return certificate.has_value(); }
};

/// Decide H-factor existence and produce a certificate. Sets must classify
/// (after truncation) as ParityInterval, Singleton, or PlusTop; each plus-top
/// set branches into its odd interval versus its even top, binary counter
/// order with the odd interval first, and the lowest succeeding branch wins.
FactorResult find_h_factor(const Multigraph& g, const HAssignment& h, const SolverLimits& limits = {});

/// Exhaustive scan over all edge sub-multisets in canonical bitmask order;
/// accepts arbitrary explicit sets. Requires total multiplicity <= 16.
std::optional<FactorCertificate> brute_force_h_factor(const Multigraph& g, const HAssignment& h);

/// True iff F's recomputed degrees all lie in their sets. Throws on edge
/// copies that do not exist in g.
bool verify_factor(const Multigraph& g, const HAssignment& h, const FactorCertificate& f);

} // namespace graphfactor
