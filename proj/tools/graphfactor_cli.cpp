#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphfactor/formats.hpp"
#include "graphfactor/json_io.hpp"

namespace gf = graphfactor;

namespace {

struct GraphSource {
    std::string graph6;
    std::string graph6_file;
    std::string edges_file;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gf::ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

gf::Multigraph load_graph(const GraphSource& src) {
    const int provided = (src.graph6.empty() ? 0 : 1) + (src.graph6_file.empty() ? 0 : 1) +
                         (src.edges_file.empty() ? 0 : 1);
    if (provided != 1)
        throw gf::ParseError("exactly one graph source required: --graph6, --graph6-file or --edges");
    if (!src.graph6.empty()) return gf::parse_graph6(src.graph6);
    if (!src.graph6_file.empty()) {
        std::string text = read_file(src.graph6_file);
        const std::size_t eol = text.find('\n');
        return gf::parse_graph6(eol == std::string::npos ? text : text.substr(0, eol));
    }
    return gf::parse_edge_list(read_file(src.edges_file));
}

void add_graph_flags(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--graph6", src.graph6, "inline graph6 line");
    cmd->add_option("--graph6-file", src.graph6_file, "file whose first line is graph6");
    cmd->add_option("--edges", src.edges_file, "edge-list file (n, then 'u v [mult]' lines)");
}

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    return std::strtoull(value, nullptr, 10);
}

gf::HAssignment resolve_h(const std::string& selector, const gf::FSpec& f,
                          std::uint64_t family_cap) {
    const gf::HFamily family(f, family_cap);
    if (selector == "jf") return family.member(0);
    if (selector == "jfplus") return family.member(family.size() - 1);
    const auto parse_index = [&](std::string_view text) {
        std::uint64_t index = 0;
        try {
            index = std::stoull(std::string(text));
        } catch (const std::exception&) {
            throw gf::ParseError("bad family index '" + std::string(text) + "'");
        }
        if (index >= family.size())
            throw gf::ParseError("family index " + std::to_string(index) + " out of range (size " +
                                 std::to_string(family.size()) + ")");
        return family.member(index);
    };
    if (selector.starts_with("family-index:")) return parse_index(std::string_view(selector).substr(13));
    if (selector.starts_with("family:")) return parse_index(std::string_view(selector).substr(7));
    if (selector.starts_with("explicit:")) {
        // per-vertex comma lists separated by '|': "1,3|2|1"
        std::string_view rest = std::string_view(selector).substr(9);
        std::vector<gf::DegreeSet> sets;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const std::size_t bar = std::min(rest.find('|', pos), rest.size());
            std::vector<int> values;
            std::string_view part = rest.substr(pos, bar - pos);
            std::size_t vpos = 0;
            while (vpos <= part.size()) {
                const std::size_t comma = std::min(part.find(',', vpos), part.size());
                try {
                    values.push_back(std::stoi(std::string(part.substr(vpos, comma - vpos))));
                } catch (const std::exception&) {
                    throw gf::ParseError("bad explicit degree set '" + std::string(part) + "'");
                }
                vpos = comma + 1;
            }
            sets.push_back(gf::DegreeSet::explicit_set(std::move(values)));
            pos = bar + 1;
        }
        if (static_cast<int>(sets.size()) != f.size())
            throw gf::ParseError("explicit selector needs one set per vertex");
        return gf::HAssignment(std::move(sets),
                               std::vector<gf::SetTag>(sets.size(), gf::SetTag::OTHER));
    }
    throw gf::ParseError("unknown H selector '" + selector +
                         "' (jf | jfplus | family-index:K | explicit:SETS)");
}

void emit(const gf::Json& doc, const std::string& output, const std::string& text_form) {
    if (output == "json") std::cout << gf::dump(doc);
    else std::cout << text_form;
}

std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> orders;
    const std::size_t dots = text.find("..");
    try {
        if (dots != std::string::npos) {
            const int lo = std::stoi(text.substr(0, dots));
            const int hi = std::stoi(text.substr(dots + 2));
            for (int n = lo; n <= hi; ++n) orders.push_back(n);
        } else {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                const std::size_t comma = std::min(text.find(',', pos), text.size());
                orders.push_back(std::stoi(text.substr(pos, comma - pos)));
                pos = comma + 1;
            }
        }
    } catch (const std::exception&) {
        throw gf::ParseError("bad order spec '" + text + "' (use A..B or a,b,c)");
    }
    return orders;
}

void apply_config_file(const std::string& path, std::map<std::string, std::string>& kv) {
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Tutte-condition and H-factor toolkit"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help"); // leave --h free for the H selector

    const std::uint64_t default_family_cap = env_cap("GF_FAMILY_CAP", gf::kDefaultFamilyCap);
    const std::uint64_t default_branch_cap = env_cap("GF_BRANCH_CAP", gf::kDefaultBranchCap);

    std::string output = "json";
    app.add_option("--output", output, "json | text | dot")->capture_default_str();

    // --- check-tutte ---
    auto* tutte_cmd = app.add_subcommand("check-tutte", "decide o(G-S) <= f(S) for all nonempty S");
    tutte_cmd->fallthrough();
    GraphSource tutte_src;
    std::string tutte_f;
    add_graph_flags(tutte_cmd, tutte_src);
    tutte_cmd->add_option("--f", tutte_f, "f-spec: '1,2,3' or 'const:2'")->required();

    // --- factor ---
    auto* factor_cmd = app.add_subcommand("factor", "find an H-factor");
    factor_cmd->set_help_flag("--help", "print help");
    factor_cmd->fallthrough();
    GraphSource factor_src;
    std::string factor_f, factor_h = "jf";
    bool factor_verify = false;
    add_graph_flags(factor_cmd, factor_src);
    factor_cmd->add_option("--f", factor_f, "f-spec")->required();
    factor_cmd->add_option("--h", factor_h, "jf | jfplus | family-index:K | explicit:1,3|2|...")
        ->capture_default_str();
    factor_cmd->add_flag("--verify", factor_verify, "re-check the certificate before emission");

    // --- critical ---
    auto* critical_cmd = app.add_subcommand("critical", "decide H-criticality via pendants");
    critical_cmd->set_help_flag("--help", "print help");
    critical_cmd->fallthrough();
    GraphSource critical_src;
    std::string critical_f, critical_h = "jf", critical_mode = "full";
    add_graph_flags(critical_cmd, critical_src);
    critical_cmd->add_option("--f", critical_f, "f-spec")->required();
    critical_cmd->add_option("--h", critical_h, "H selector")->capture_default_str();
    critical_cmd->add_option("--mode", critical_mode, "full | fast")->capture_default_str();

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "verify the theorems over enumerated instances");
    sweep_cmd->fallthrough();
    std::string sweep_n, sweep_config_file;
    std::vector<std::string> sweep_f, sweep_thm, sweep_samples;
    std::uint64_t sweep_seed = 1, sweep_multigraphs = 0;
    std::string sweep_multi_n = "4,5,6";
    int sweep_multi_extra = 3, sweep_crosscheck = 12, sweep_jobs = 1, sweep_coloring_cap = 12;
    bool sweep_multi_loops = true, sweep_deep = true, sweep_timing = false;
    std::uint64_t sweep_family_cap = default_family_cap, sweep_branch_cap = default_branch_cap;
    sweep_cmd->add_option("--n", sweep_n, "orders: 2..6 or 2,4,6");
    sweep_cmd->add_option("--f", sweep_f, "f pattern (repeatable): const:K | random:K | values:a,b");
    sweep_cmd->add_option("--thm", sweep_thm,
                          "theorem id (repeatable): MAIN_EVEN MAIN_ODD CK EKY "
                          "LW_EVEN_COLORED LW_ODD_COLORED");
    sweep_cmd->add_option("--seed", sweep_seed, "PRNG seed")->capture_default_str();
    sweep_cmd->add_option("--sample", sweep_samples, "n:count sampling override (repeatable)");
    sweep_cmd->add_option("--multigraphs", sweep_multigraphs, "sampled multigraph count");
    sweep_cmd->add_option("--multi-n", sweep_multi_n, "multigraph orders")->capture_default_str();
    sweep_cmd->add_option("--multi-extra", sweep_multi_extra, "extra edges beyond the tree")
        ->capture_default_str();
    sweep_cmd->add_flag("--multi-loops,!--no-multi-loops", sweep_multi_loops, "allow loops");
    sweep_cmd->add_option("--crosscheck", sweep_crosscheck,
                          "oracle cross-check up to this total multiplicity (0 = off)")
        ->capture_default_str();
    sweep_cmd->add_flag("--deep,!--no-deep", sweep_deep, "proof-direction internals");
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads")->capture_default_str();
    sweep_cmd->add_option("--family-cap", sweep_family_cap, "|H_f| refusal bound");
    sweep_cmd->add_option("--branch-cap", sweep_branch_cap, "plus-top branch refusal bound");
    sweep_cmd->add_option("--coloring-cap", sweep_coloring_cap, "colored-theorem n bound");
    sweep_cmd->add_flag("--timing", sweep_timing, "include wall-clock in the JSON report");
    sweep_cmd->add_option("--config", sweep_config_file, "flat key=value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (output != "json" && output != "text" && output != "dot") {
        std::cerr << "error: unknown output mode '" << output << "'\n";
        return 2;
    }

    if (tutte_cmd->parsed()) {
        const gf::Multigraph g = load_graph(tutte_src);
        const gf::FSpec f = gf::FSpec::parse(tutte_f, g.order());
        const gf::TutteVerdict verdict = gf::check_tutte(g, f);
        if (output == "dot") {
            std::cout << gf::emit_dot(g);
        } else {
            std::ostringstream text;
            text << (verdict.holds ? "holds" : "violated");
            if (verdict.violation) {
                text << "  S={";
                for (std::size_t i = 0; i < verdict.violation->s.ids().size(); ++i)
                    text << (i ? "," : "") << verdict.violation->s.ids()[i];
                text << "}  o=" << verdict.violation->odd_count
                     << "  f(S)=" << verdict.violation->f_sum;
            }
            text << "  checked=" << verdict.subsets_checked << "\n";
            emit(gf::tutte_verdict_json(verdict), output, text.str());
        }
        return verdict.holds ? 0 : 1;
    }

    if (factor_cmd->parsed()) {
        const gf::Multigraph g = load_graph(factor_src);
        const gf::FSpec f = gf::FSpec::parse(factor_f, g.order());
        const gf::HAssignment h = resolve_h(factor_h, f, default_family_cap);
        const gf::FactorResult r = gf::find_h_factor(g, h, gf::SolverLimits{default_branch_cap});
        if (r.found() && factor_verify && !gf::verify_factor(g, h, *r.certificate))
            throw std::logic_error("certificate failed verification");

        gf::Json doc;
        if (r.found()) {
            doc["factor"] = gf::certificate_json(*r.certificate, h);
            doc["branch"] = r.branch_index;
        } else {
            doc["factor"] = nullptr;
            doc["reason"] = r.reason == gf::NoFactorReason::Infeasible ? "infeasible" : "exhausted";
            if (r.reason == gf::NoFactorReason::Infeasible)
                doc["infeasibleVertex"] = r.infeasible_vertex;
        }
        doc["branchesTried"] = r.branches_tried;
        if (factor_verify && r.found()) doc["verified"] = true;

        if (output == "dot") {
            if (r.found()) {
                std::vector<std::tuple<int, int, int>> edges;
                for (const gf::EdgeInstance& e : r.certificate->edges)
                    edges.emplace_back(e.u, e.v, 1);
                std::cout << gf::emit_dot(gf::Multigraph(g.order(), edges));
            } else {
                std::cout << gf::emit_dot(g);
            }
        } else {
            std::ostringstream text;
            if (r.found()) {
                text << "factor with degrees";
                for (int d : r.certificate->degrees) text << ' ' << d;
                text << "\n";
            } else {
                text << "no factor (" << doc["reason"].get<std::string>() << ")\n";
            }
            emit(doc, output, text.str());
        }
        return r.found() ? 0 : 1;
    }

    if (critical_cmd->parsed()) {
        const gf::Multigraph g = load_graph(critical_src);
        const gf::FSpec f = gf::FSpec::parse(critical_f, g.order());
        const gf::HAssignment h = resolve_h(critical_h, f, default_family_cap);
        if (critical_mode != "full" && critical_mode != "fast")
            throw gf::ParseError("bad --mode '" + critical_mode + "'");
        const gf::CriticalityReport report = gf::is_h_critical(
            g, h, critical_mode == "full" ? gf::CriticalityMode::Full : gf::CriticalityMode::Fast,
            gf::SolverLimits{default_branch_cap});
        if (output == "dot") {
            std::cout << gf::emit_dot(g);
        } else {
            std::ostringstream text;
            text << (report.is_critical ? "critical"
                     : report.has_factor ? "not critical (has a factor)"
                                         : "not critical (some pendant has no factor)")
                 << "\n";
            emit(gf::criticality_json(report, g, h), output, text.str());
        }
        return report.is_critical ? 0 : 1;
    }

    // sweep
    std::map<std::string, std::string> kv;
    if (!sweep_config_file.empty()) apply_config_file(sweep_config_file, kv);
    auto file_or = [&](const char* key, const std::string& current, bool given) {
        auto it = kv.find(key);
        return (!given && it != kv.end()) ? it->second : current;
    };

    gf::SweepConfig cfg;
    sweep_n = file_or("n", sweep_n, sweep_cmd->count("--n") > 0);
    if (!sweep_n.empty()) cfg.orders = parse_orders(sweep_n);
    if (sweep_f.empty() && kv.count("f")) {
        std::string all = kv["f"];
        std::size_t pos = 0;
        while (pos <= all.size()) {
            const std::size_t space = std::min(all.find(' ', pos), all.size());
            if (space > pos) sweep_f.push_back(all.substr(pos, space - pos));
            pos = space + 1;
        }
    }
    if (!sweep_f.empty()) cfg.f_patterns = sweep_f;
    if (sweep_thm.empty() && kv.count("thm")) {
        std::string all = kv["thm"];
        std::size_t pos = 0;
        while (pos <= all.size()) {
            const std::size_t space = std::min(all.find_first_of(", ", pos), all.size());
            if (space > pos) sweep_thm.push_back(all.substr(pos, space - pos));
            pos = space + 1;
        }
    }
    for (const std::string& name : sweep_thm) {
        const auto id = gf::theorem_from_name(name);
        if (!id) throw gf::ParseError("unknown theorem id '" + name + "'");
        cfg.theorems.push_back(*id);
    }
    if (kv.count("seed") && sweep_cmd->count("--seed") == 0) sweep_seed = std::stoull(kv["seed"]);
    cfg.seed = sweep_seed;
    for (const std::string& s : sweep_samples) {
        const std::size_t colon = s.find(':');
        if (colon == std::string::npos) throw gf::ParseError("bad --sample '" + s + "' (use n:count)");
        cfg.sample_counts[std::stoi(s.substr(0, colon))] = std::stoull(s.substr(colon + 1));
    }
    cfg.family_cap = sweep_family_cap;
    cfg.branch_cap = sweep_branch_cap;
    cfg.coloring_cap_n = sweep_coloring_cap;
    cfg.crosscheck_max_mult = sweep_crosscheck;
    cfg.deep = sweep_deep;
    cfg.multigraph_count = sweep_multigraphs;
    cfg.multigraph_orders = parse_orders(sweep_multi_n);
    cfg.multigraph_extra_edges = sweep_multi_extra;
    cfg.multigraph_loops = sweep_multi_loops;
    cfg.jobs = sweep_jobs;

    const gf::SweepReport report = gf::run_sweep(cfg);
    if (sweep_timing) std::cerr << "wall_ms " << report.wall_ms << "\n";
    std::ostringstream text;
    text << "graphs " << report.graphs << ", instances " << report.instances << ", discrepancies "
         << report.discrepancies.size() << ", cap refusals " << report.cap_refusals << "\n";
    emit(gf::sweep_report_json(report, sweep_timing && output == "json"), output, text.str());
    return report.clean() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gf::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
