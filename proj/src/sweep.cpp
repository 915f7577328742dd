#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <thread>

#include "graphfactor/theorems.hpp"

namespace graphfactor {

namespace {

struct FPattern {
    enum class Kind { Constant, Random, Literal } kind = Kind::Constant;
    int constant = 1;
    int random_count = 0;
    std::vector<int> literal;
    std::string text;
};

FPattern parse_pattern(const std::string& text) {
    auto to_int = [&](std::string_view tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("sweep: bad f pattern '" + text + "'");
        return value;
    };
    FPattern p;
    p.text = text;
    if (text.starts_with("const:")) {
        p.kind = FPattern::Kind::Constant;
        p.constant = to_int(std::string_view(text).substr(6));
        if (p.constant < 1) throw ParseError("sweep: f constant must be >= 1");
    } else if (text.starts_with("random:")) {
        p.kind = FPattern::Kind::Random;
        p.random_count = to_int(std::string_view(text).substr(7));
        if (p.random_count < 1) throw ParseError("sweep: random count must be >= 1");
    } else if (text.starts_with("values:")) {
        p.kind = FPattern::Kind::Literal;
        std::string_view rest = std::string_view(text).substr(7);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const std::size_t comma = std::min(rest.find(',', pos), rest.size());
            p.literal.push_back(to_int(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        for (int v : p.literal)
            if (v < 1) throw ParseError("sweep: f values must be >= 1");
    } else {
        throw ParseError("sweep: bad f pattern '" + text + "'");
    }
    return p;
}

/// Per-graph sweep output, merged in graph order so the report is
/// independent of the jobs degree.
struct WorkResult {
    std::array<TheoremCounts, 6> counts{};
    HarnessStats stats;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> cap_events;
    std::uint64_t instances = 0;
};

bool applicable(TheoremId id, const Multigraph& g, const FSpec& f, int coloring_cap_n) {
    const bool even = g.order() % 2 == 0;
    switch (id) {
    case TheoremId::MAIN_EVEN: return even;
    case TheoremId::MAIN_ODD: return !even;
    case TheoremId::CK: return even && f.all_odd();
    case TheoremId::EKY: return even && g.is_simple();
    case TheoremId::LW_EVEN_COLORED: return even && g.order() <= coloring_cap_n;
    case TheoremId::LW_ODD_COLORED: return g.order() <= coloring_cap_n;
    }
    return false;
}

TheoremVerdict dispatch(TheoremId id, const Multigraph& g, const FSpec& f,
                        const HarnessOptions& opts, HarnessStats* stats) {
    switch (id) {
    case TheoremId::MAIN_EVEN: return check_main_even(g, f, opts, stats);
    case TheoremId::MAIN_ODD: return check_main_odd(g, f, opts, stats);
    case TheoremId::CK: return check_ck(g, f, opts, stats);
    case TheoremId::EKY: return check_eky(g, f, opts, stats);
    case TheoremId::LW_EVEN_COLORED: return check_colored_even(g, f, opts, stats);
    case TheoremId::LW_ODD_COLORED: return check_colored_general(g, f, opts, stats);
    }
    throw std::logic_error("dispatch: unknown theorem");
}

void process_graph(const SweepConfig& cfg, const std::vector<FPattern>& patterns,
                   const Multigraph& g, std::uint64_t graph_seed, WorkResult& out) {
    HarnessOptions opts;
    opts.family_cap = cfg.family_cap;
    opts.branch_cap = cfg.branch_cap;
    opts.coloring_cap_n = cfg.coloring_cap_n;
    opts.crosscheck_max_mult = cfg.crosscheck_max_mult;
    opts.deep = cfg.deep;
    opts.with_instance = false;
    opts.criticality = CriticalityMode::Fast;

    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        const FPattern& pattern = patterns[pi];
        std::vector<FSpec> fs;
        switch (pattern.kind) {
        case FPattern::Kind::Constant:
            fs.push_back(FSpec::constant(g.order(), pattern.constant));
            break;
        case FPattern::Kind::Literal:
            if (static_cast<int>(pattern.literal.size()) != g.order()) continue;
            fs.push_back(FSpec(pattern.literal));
            break;
        case FPattern::Kind::Random:
            for (int k = 0; k < pattern.random_count; ++k) {
                SplitMix64 rng(mix_seed(graph_seed, (pi << 16) | static_cast<std::uint64_t>(k)));
                std::vector<int> values(static_cast<std::size_t>(g.order()));
                for (auto& v : values) v = 1 + static_cast<int>(rng.bounded(4));
                fs.emplace_back(std::move(values));
            }
            break;
        }

        for (const FSpec& f : fs) {
            for (TheoremId id : cfg.theorems) {
                if (!applicable(id, g, f, cfg.coloring_cap_n)) continue;
                HarnessStats local;
                try {
                    const TheoremVerdict verdict = dispatch(id, g, f, opts, &local);
                    ++out.instances;
                    auto& counts = out.counts[static_cast<std::size_t>(id)];
                    ++counts.instances;
                    if (verdict.agrees) {
                        ++counts.agreements;
                    } else {
                        out.discrepancies.push_back({"theorem", id, g.order(), g.replay_text(),
                                                     f.values(), verdict.detail});
                    }
                } catch (const CapError& e) {
                    out.cap_events.push_back(std::string(theorem_name(id)) + " " +
                                             g.replay_text() + ": " + e.what());
                }
                for (const std::string& detail : local.failure_details) {
                    const std::size_t colon = detail.find(':');
                    out.discrepancies.push_back(
                        {detail.substr(0, colon), id, g.order(), g.replay_text(), f.values(),
                         colon == std::string::npos ? detail : detail.substr(colon + 2)});
                }
                local.failure_details.clear();
                out.stats.merge(local);
            }
        }
    }
}

void merge_result(SweepReport& report, WorkResult& wr) {
    for (std::size_t i = 0; i < wr.counts.size(); ++i) {
        if (wr.counts[i].instances == 0) continue;
        auto& slot = report.by_theorem[static_cast<TheoremId>(i)];
        slot.instances += wr.counts[i].instances;
        slot.agreements += wr.counts[i].agreements;
    }
    report.instances += wr.instances;
    report.stats.merge(wr.stats);
    report.cap_refusals += wr.cap_events.size();
    for (auto& e : wr.cap_events) report.cap_events.push_back(std::move(e));
    for (auto& d : wr.discrepancies) report.discrepancies.push_back(std::move(d));
    ++report.graphs;
}

/// Process a batch of graphs with cfg.jobs workers; results merge in batch
/// order, so the report does not depend on scheduling.
void process_batch(const SweepConfig& cfg, const std::vector<FPattern>& patterns,
                   const std::vector<std::pair<Multigraph, std::uint64_t>>& batch,
                   SweepReport& report) {
    std::vector<WorkResult> results(batch.size());
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || batch.size() == 1) {
        for (std::size_t i = 0; i < batch.size(); ++i)
            process_graph(cfg, patterns, batch[i].first, batch[i].second, results[i]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&, t] {
                for (std::size_t i = static_cast<std::size_t>(t); i < batch.size();
                     i += static_cast<std::size_t>(jobs))
                    process_graph(cfg, patterns, batch[i].first, batch[i].second, results[i]);
            });
        for (auto& w : workers) w.join();
    }
    for (auto& r : results) merge_result(report, r);
}

void validate(const SweepConfig& cfg, const std::vector<FPattern>& patterns) {
    if (cfg.orders.empty() && cfg.multigraph_count == 0)
        throw ParseError("sweep: no orders and no multigraph phase configured");
    for (int n : cfg.orders) {
        if (n < 1) throw ParseError("sweep: order must be >= 1");
        if (!cfg.sample_counts.count(n) && n > 7)
            throw ParseError("sweep: n = " + std::to_string(n) +
                             " needs a sample count (exhaustive enumeration stops at 7)");
    }
    if (cfg.theorems.empty()) return; // zero instances, trivially clean
    const bool wants_ck = std::find(cfg.theorems.begin(), cfg.theorems.end(), TheoremId::CK) !=
                          cfg.theorems.end();
    if (wants_ck) {
        bool possible = false;
        for (const FPattern& p : patterns) {
            if (p.kind == FPattern::Kind::Constant && (p.constant & 1)) possible = true;
            if (p.kind == FPattern::Kind::Random) possible = true;
            if (p.kind == FPattern::Kind::Literal &&
                std::all_of(p.literal.begin(), p.literal.end(), [](int v) { return v & 1; }))
                possible = true;
        }
        if (!possible)
            throw ParseError("sweep: CK requires odd-valued f, but no pattern can produce one");
    }
}

} // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();

    std::vector<FPattern> patterns;
    patterns.reserve(cfg.f_patterns.size());
    for (const std::string& text : cfg.f_patterns) patterns.push_back(parse_pattern(text));
    validate(cfg, patterns);

    SweepReport report;
    report.config = cfg;

    constexpr std::size_t kBatch = 64;
    std::vector<std::pair<Multigraph, std::uint64_t>> batch;
    auto flush = [&] {
        if (!batch.empty()) {
            process_batch(cfg, patterns, batch, report);
            batch.clear();
        }
    };

    if (!cfg.theorems.empty()) {
        for (int n : cfg.orders) {
            std::uint64_t index = 0;
            auto push = [&](Multigraph&& g) {
                const std::uint64_t graph_seed =
                    mix_seed(cfg.seed, (static_cast<std::uint64_t>(n) << 32) | index);
                batch.emplace_back(std::move(g), graph_seed);
                ++index;
                if (batch.size() >= kBatch) flush();
            };
            if (auto it = cfg.sample_counts.find(n); it != cfg.sample_counts.end()) {
                ConnectedGraphSampler sampler(
                    n, mix_seed(cfg.seed, 0xA11CE5ULL ^ static_cast<std::uint64_t>(n)));
                for (std::uint64_t i = 0; i < it->second; ++i) push(sampler.next());
            } else {
                ConnectedGraphEnumerator en(n);
                while (auto g = en.next()) push(std::move(*g));
            }
            flush();
        }

        if (cfg.multigraph_count > 0 && !cfg.multigraph_orders.empty()) {
            std::vector<MultigraphSampler> samplers;
            for (int n : cfg.multigraph_orders)
                samplers.emplace_back(n, cfg.multigraph_extra_edges, cfg.multigraph_loops,
                                      mix_seed(cfg.seed, 0x3A3A3AULL ^ static_cast<std::uint64_t>(n)));
            for (std::uint64_t i = 0; i < cfg.multigraph_count; ++i) {
                Multigraph g = samplers[i % samplers.size()].next();
                const std::uint64_t graph_seed = mix_seed(cfg.seed, 0x5EEDBA5EULL ^ i);
                batch.emplace_back(std::move(g), graph_seed);
                if (batch.size() >= kBatch) flush();
            }
            flush();
        }
    }

    std::sort(report.discrepancies.begin(), report.discrepancies.end());
    std::sort(report.cap_events.begin(), report.cap_events.end());
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

} // namespace graphfactor
