#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphfactor/critical.hpp"
#include "graphfactor/factor.hpp"
#include "graphfactor/rng.hpp"
#include "graphfactor/tutte.hpp"

namespace graphfactor {

enum class TheoremId : std::uint8_t {
    CK,               // odd-valued f, even order: Tutte <=> J_f-factor
    EKY,              // even order, simple: Tutte => J_f-factor (implication)
    LW_EVEN_COLORED,  // even order: Tutte <=> factor for every 2-coloring
    LW_ODD_COLORED,   // any order: Tutte <=> factor-or-critical for every 2-coloring
    MAIN_EVEN,        // even order: Tutte <=> factor for every H in H_f
    MAIN_ODD,         // odd order: Tutte <=> factor-or-critical for every H in H_f
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

/// Knobs shared by the theorem checks.
struct HarnessOptions {
    std::uint64_t family_cap = kDefaultFamilyCap;
    std::uint64_t branch_cap = kDefaultBranchCap;
    /// Colored theorems quantify over all 2^n colorings; refusal boundary.
    int coloring_cap_n = 12;
    /// Cross-validate every solver call against the brute-force oracle when
    /// the graph's total multiplicity is <= this bound (0 disables).
    int crosscheck_max_mult = 0;
    /// Run the proof-direction internals (necessity chain, sufficiency cut
    /// argument) where their hypotheses apply.
    bool deep = false;
    /// Copy replay inputs into the verdict (sweeps rebuild them on demand).
    bool with_instance = true;
    CriticalityMode criticality = CriticalityMode::Fast;
};

/// Counters plus failure records for the cross-validation and
/// proof-direction checks. All empty/zero in a correct build.
struct HarnessStats {
    std::uint64_t solver_calls = 0;
    std::uint64_t crosschecks = 0;
    std::uint64_t crosscheck_failures = 0;
    std::uint64_t certificate_checks = 0;
    std::uint64_t certificate_failures = 0;
    std::uint64_t necessity_checks = 0;
    std::uint64_t necessity_failures = 0;
    std::uint64_t sufficiency_checks = 0;
    std::uint64_t sufficiency_failures = 0;
    std::vector<std::string> failure_details;

    void merge(const HarnessStats& o);
    bool clean() const {
        return crosscheck_failures == 0 && certificate_failures == 0 &&
               necessity_failures == 0 && sufficiency_failures == 0;
    }
};

struct TheoremVerdict {
    TheoremId id = TheoremId::MAIN_EVEN;
    bool left_side = false;   // Tutte condition w.r.t. f
    bool right_side = false;  // the factor-side statement
    bool agrees = false;
    std::string detail;       // failing member / coloring / pendant, if any
    // replay inputs, present when HarnessOptions.with_instance
    int n = 0;
    std::vector<int> f;
    std::string graph;
};

TheoremVerdict check_main_even(const Multigraph& g, const FSpec& f,
                               const HarnessOptions& opts = {}, HarnessStats* stats = nullptr);
TheoremVerdict check_main_odd(const Multigraph& g, const FSpec& f,
                              const HarnessOptions& opts = {}, HarnessStats* stats = nullptr);
TheoremVerdict check_ck(const Multigraph& g, const FSpec& f,
                        const HarnessOptions& opts = {}, HarnessStats* stats = nullptr);
TheoremVerdict check_eky(const Multigraph& g, const FSpec& f,
                         const HarnessOptions& opts = {}, HarnessStats* stats = nullptr);
TheoremVerdict check_colored_even(const Multigraph& g, const FSpec& f,
                                  const HarnessOptions& opts = {}, HarnessStats* stats = nullptr);
TheoremVerdict check_colored_general(const Multigraph& g, const FSpec& f,
                                     const HarnessOptions& opts = {}, HarnessStats* stats = nullptr);

/// All 2^(n(n-1)/2) labeled simple graphs filtered to connected ones, in
/// bitmask order. Exhaustive labeled enumeration, no isomorphism reduction.
/// Requires 1 <= n <= 7.
class ConnectedGraphEnumerator {
public:
    explicit ConnectedGraphEnumerator(int n);
    std::optional<Multigraph> next();
    std::uint64_t last_mask() const { return mask_ - 1; }

private:
    int n_;
    std::uint64_t mask_ = 0;
    std::uint64_t mask_end_;
};

/// Seeded uniform edge-mask sampling, rejecting disconnected graphs.
class ConnectedGraphSampler {
public:
    ConnectedGraphSampler(int n, std::uint64_t seed);
    Multigraph next();

private:
    int n_;
    SplitMix64 rng_;
};

/// Reproducible connected multigraphs: a random spanning tree plus extra
/// edges that may duplicate existing pairs; loops optional.
class MultigraphSampler {
public:
    MultigraphSampler(int n, int extra_edges, bool loops, std::uint64_t seed);
    Multigraph next();

private:
    int n_;
    int extra_edges_;
    bool loops_;
    SplitMix64 rng_;
};

/// Labeled connected graph counts by inclusion-exclusion; the independent
/// oracle for the enumerator's totals.
std::uint64_t connected_graph_count(int n);

struct Discrepancy {
    std::string kind;    // "theorem" | "crosscheck" | "certificate" | "necessity" | "sufficiency"
    TheoremId theorem = TheoremId::MAIN_EVEN;
    int n = 0;
    std::string graph;   // replay edge-list text
    std::vector<int> f;
    std::string detail;

    auto tie() const { return std::tie(kind, theorem, n, graph, f, detail); }
    bool operator<(const Discrepancy& o) const { return tie() < o.tie(); }
    bool operator==(const Discrepancy& o) const { return tie() == o.tie(); }
};

struct SweepConfig {
    std::vector<int> orders;
    std::vector<std::string> f_patterns = {"const:1"};  // "const:K" | "random:K" | "values:a,b,..."
    std::vector<TheoremId> theorems;
    std::uint64_t seed = 1;
    /// n -> sampled graph count; listed orders not present here are
    /// enumerated exhaustively (n <= 7 required for that).
    std::map<int, std::uint64_t> sample_counts;
    std::uint64_t family_cap = kDefaultFamilyCap;
    std::uint64_t branch_cap = kDefaultBranchCap;
    int coloring_cap_n = 12;
    int crosscheck_max_mult = 12;
    bool deep = true;
    /// Optional multigraph phase: sampled general graphs with parallel edges
    /// and loops, checked with MAIN_EVEN/MAIN_ODD by parity.
    std::uint64_t multigraph_count = 0;
    std::vector<int> multigraph_orders = {4, 5, 6};
    int multigraph_extra_edges = 3;
    bool multigraph_loops = true;
    int jobs = 1;
};

struct TheoremCounts {
    std::uint64_t instances = 0;
    std::uint64_t agreements = 0;
};

struct SweepReport {
    SweepConfig config;
    std::map<TheoremId, TheoremCounts> by_theorem;
    std::uint64_t graphs = 0;
    std::uint64_t instances = 0;
    HarnessStats stats;
    std::uint64_t cap_refusals = 0;
    std::vector<std::string> cap_events;
    std::vector<Discrepancy> discrepancies; // sorted canonically; empty on success
    double wall_ms = 0;                     // excluded from canonical JSON

    bool clean() const { return discrepancies.empty() && cap_refusals == 0; }
};

/// Check every applicable theorem on every enumerated/sampled instance.
/// Deterministic given the seed, independent of the jobs degree.
SweepReport run_sweep(const SweepConfig& cfg);

} // namespace graphfactor
