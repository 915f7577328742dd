#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphfactor/formats.hpp"
#include "graphfactor/json_io.hpp"

namespace py = pybind11;
using namespace graphfactor;

namespace {

Multigraph make_graph(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    return Multigraph(n, edges);
}

std::vector<std::tuple<int, int, int>> instance_tuples(const std::vector<EdgeInstance>& edges) {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(edges.size());
    for (const EdgeInstance& e : edges) out.emplace_back(e.u, e.v, e.k);
    return out;
}

std::vector<EdgeInstance> instances_from(const std::vector<std::tuple<int, int, int>>& tuples) {
    std::vector<EdgeInstance> out;
    out.reserve(tuples.size());
    for (const auto& [u, v, k] : tuples) out.push_back({u, v, k});
    return out;
}

std::vector<Color> colors_from(const std::string& text) {
    std::vector<Color> out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == 'R' || c == 'r') out.push_back(Color::R);
        else if (c == 'B' || c == 'b') out.push_back(Color::B);
        else throw ParseError("coloring must be a string over {R,B}");
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tutte-condition and H-factor toolkit (C++ core)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);
    py::register_exception<IsolatedBlueVertex>(m, "IsolatedBlueVertexError", PyExc_ValueError);

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::tuple<int, int, int>>{})
        .def_property_readonly("n", &Multigraph::order)
        .def_property_readonly("total_multiplicity", &Multigraph::total_multiplicity)
        .def_property_readonly("simple", &Multigraph::is_simple)
        .def("degree", &Multigraph::degree, py::arg("v"))
        .def("multiplicity", &Multigraph::multiplicity, py::arg("u"), py::arg("v"))
        .def("edges",
             [](const Multigraph& g) {
                 std::vector<std::tuple<int, int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.mult);
                 return out;
             })
        .def("edge_instances", [](const Multigraph& g) { return instance_tuples(g.edge_instances()); })
        .def("replay_text", &Multigraph::replay_text)
        .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
        .def("__repr__", [](const Multigraph& g) {
            return "Multigraph(n=" + std::to_string(g.order()) + ", m=" +
                   std::to_string(g.total_multiplicity()) + ")";
        });

    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("emit_graph6", &emit_graph6, py::arg("graph"));
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("emit_edge_list", &emit_edge_list, py::arg("graph"));
    m.def("emit_dot", &emit_dot, py::arg("graph"));
    m.def("components", &components, py::arg("graph"));
    m.def(
        "odd_components",
        [](const Multigraph& g, const std::vector<int>& s) {
            return odd_components(g, VertexSet(s));
        },
        py::arg("graph"), py::arg("s"));
    m.def("add_pendant", &add_pendant, py::arg("graph"), py::arg("x"));

    py::class_<DegreeSet>(m, "DegreeSet")
        .def_static("parity_interval", &DegreeSet::parity_interval, py::arg("lo"), py::arg("hi"))
        .def_static("plus_top", &DegreeSet::plus_top, py::arg("lo"), py::arg("hi_odd"))
        .def_static("explicit_set", &DegreeSet::explicit_set, py::arg("values"))
        .def("contains", &DegreeSet::contains, py::arg("d"))
        .def("elements", &DegreeSet::elements)
        .def("display", &DegreeSet::display)
        .def("truncated", &DegreeSet::truncated, py::arg("max_degree"))
        .def("__eq__", [](const DegreeSet& a, const DegreeSet& b) { return a == b; })
        .def("__repr__", [](const DegreeSet& d) { return d.display(); });

    py::enum_<SetClass>(m, "SetClass")
        .value("PARITY_INTERVAL", SetClass::ParityInterval)
        .value("PARITY_INTERVAL_PLUS_TOP", SetClass::ParityIntervalPlusTop)
        .value("SINGLETON", SetClass::Singleton)
        .value("OTHER", SetClass::Other);
    m.def("classify", &classify, py::arg("degree_set"));
    m.def("j_set", &j_set, py::arg("m"));
    m.def("j_plus_set", &j_plus_set, py::arg("m"));

    py::class_<FSpec>(m, "FSpec")
        .def(py::init<std::vector<int>>(), py::arg("values"))
        .def_static("constant", &FSpec::constant, py::arg("n"), py::arg("value"))
        .def_static(
            "parse", [](const std::string& text, int n) { return FSpec::parse(text, n); },
            py::arg("text"), py::arg("n"))
        .def_property_readonly("values", [](const FSpec& f) { return f.values(); })
        .def("all_odd", &FSpec::all_odd)
        .def("sum", [](const FSpec& f, const std::vector<int>& s) { return f.sum(VertexSet(s)); })
        .def("__repr__", [](const FSpec& f) {
            std::string out = "FSpec([";
            for (std::size_t i = 0; i < f.values().size(); ++i)
                out += (i ? "," : "") + std::to_string(f.values()[i]);
            return out + "])";
        });

    py::class_<HAssignment>(m, "HAssignment")
        .def("__len__", &HAssignment::size)
        .def("at", &HAssignment::at, py::arg("v"))
        .def("display", &HAssignment::display)
        .def("__eq__", [](const HAssignment& a, const HAssignment& b) { return a == b; });

    py::class_<HFamily>(m, "HFamily")
        .def(py::init<FSpec, std::uint64_t>(), py::arg("f"), py::arg("cap") = kDefaultFamilyCap)
        .def("__len__", &HFamily::size)
        .def("__getitem__",
             [](const HFamily& fam, std::uint64_t i) {
                 if (i >= fam.size()) throw py::index_error();
                 return fam.member(i);
             })
        .def("member", &HFamily::member, py::arg("index"))
        .def_property_readonly("even_vertices", &HFamily::even_vertices);

    m.def(
        "colored_h",
        [](const FSpec& f, const std::string& coloring, const Multigraph& g) {
            return colored_h(f, colors_from(coloring), g);
        },
        py::arg("f"), py::arg("coloring"), py::arg("graph"));
    m.def(
        "truncate",
        [](const HAssignment& h, const Multigraph& g) -> py::object {
            TruncateResult r = truncate(h, g);
            if (auto* inf = std::get_if<InfeasibleAt>(&r))
                return py::make_tuple(py::none(), inf->vertex);
            return py::make_tuple(std::get<HAssignment>(std::move(r)), py::none());
        },
        py::arg("h"), py::arg("graph"),
        "returns (assignment, None) or (None, infeasible_vertex)");

    py::class_<Matching>(m, "Matching")
        .def("__len__", &Matching::size)
        .def_property_readonly("edges", [](const Matching& m_) { return instance_tuples(m_.edges); });
    m.def("max_matching", &max_matching, py::arg("graph"));
    m.def("has_perfect_matching", &has_perfect_matching, py::arg("graph"));
    m.def("brute_force_max_matching", &brute_force_max_matching, py::arg("graph"));

    py::class_<FactorCertificate>(m, "FactorCertificate")
        .def_property_readonly("edges",
                               [](const FactorCertificate& c) { return instance_tuples(c.edges); })
        .def_property_readonly("degrees", [](const FactorCertificate& c) { return c.degrees; })
        .def("to_json", [](const FactorCertificate& c, const HAssignment& h) {
            return dump(certificate_json(c, h));
        });

    py::class_<FactorResult>(m, "FactorResult")
        .def_property_readonly("found", &FactorResult::found)
        .def_property_readonly("certificate",
                               [](const FactorResult& r) { return r.certificate; })
        .def_property_readonly("reason",
                               [](const FactorResult& r) {
                                   switch (r.reason) {
                                   case NoFactorReason::None: return "none";
                                   case NoFactorReason::Infeasible: return "infeasible";
                                   case NoFactorReason::Exhausted: return "exhausted";
                                   }
                                   return "?";
                               })
        .def_readonly("infeasible_vertex", &FactorResult::infeasible_vertex)
        .def_readonly("branches_tried", &FactorResult::branches_tried)
        .def_readonly("branch_index", &FactorResult::branch_index);

    m.def(
        "find_h_factor",
        [](const Multigraph& g, const HAssignment& h, std::uint64_t branch_cap) {
            return find_h_factor(g, h, SolverLimits{branch_cap});
        },
        py::arg("graph"), py::arg("h"), py::arg("branch_cap") = kDefaultBranchCap);
    m.def("brute_force_h_factor", &brute_force_h_factor, py::arg("graph"), py::arg("h"));
    m.def(
        "verify_factor",
        [](const Multigraph& g, const HAssignment& h,
           const std::vector<std::tuple<int, int, int>>& edges) {
            FactorCertificate cert;
            cert.edges = instances_from(edges);
            return verify_factor(g, h, cert);
        },
        py::arg("graph"), py::arg("h"), py::arg("edges"));

    py::class_<TutteVerdict>(m, "TutteVerdict")
        .def_readonly("holds", &TutteVerdict::holds)
        .def_readonly("subsets_checked", &TutteVerdict::subsets_checked)
        .def_property_readonly("violation",
                               [](const TutteVerdict& v) -> py::object {
                                   if (!v.violation) return py::none();
                                   return py::make_tuple(v.violation->s.ids(),
                                                         v.violation->odd_count,
                                                         v.violation->f_sum);
                               })
        .def("to_json", [](const TutteVerdict& v) { return dump(tutte_verdict_json(v)); });
    m.def("check_tutte", &check_tutte, py::arg("graph"), py::arg("f"));
    m.def(
        "worst_deficiency",
        [](const Multigraph& g, const FSpec& f) {
            auto [s, value] = worst_deficiency(g, f);
            return py::make_tuple(s.ids(), value);
        },
        py::arg("graph"), py::arg("f"));
    m.def(
        "sufficiency_h",
        [](const FSpec& f, const std::vector<int>& s) { return sufficiency_h(f, VertexSet(s)); },
        py::arg("f"), py::arg("s"));
    m.def("necessity_fprime", &necessity_fprime, py::arg("f"), py::arg("h"));

    m.def("h_pendant", &h_pendant, py::arg("h"), py::arg("x_prime"));
    py::class_<CriticalityReport>(m, "CriticalityReport")
        .def_readonly("has_factor", &CriticalityReport::has_factor)
        .def_readonly("is_critical", &CriticalityReport::is_critical)
        .def_readonly("pendants_solved", &CriticalityReport::pendants_solved)
        .def_property_readonly("per_vertex",
                               [](const CriticalityReport& r) { return r.per_vertex; });
    m.def(
        "is_h_critical",
        [](const Multigraph& g, const HAssignment& h, bool fast) {
            return is_h_critical(g, h, fast ? CriticalityMode::Fast : CriticalityMode::Full);
        },
        py::arg("graph"), py::arg("h"), py::arg("fast") = false);

    py::class_<TheoremVerdict>(m, "TheoremVerdict")
        .def_property_readonly("theorem", [](const TheoremVerdict& v) { return theorem_name(v.id); })
        .def_readonly("left_side", &TheoremVerdict::left_side)
        .def_readonly("right_side", &TheoremVerdict::right_side)
        .def_readonly("agrees", &TheoremVerdict::agrees)
        .def_readonly("detail", &TheoremVerdict::detail)
        .def("to_json", [](const TheoremVerdict& v) { return dump(theorem_verdict_json(v)); });

    auto check = [](TheoremVerdict (*fn)(const Multigraph&, const FSpec&, const HarnessOptions&,
                                         HarnessStats*)) {
        return [fn](const Multigraph& g, const FSpec& f, bool deep, int crosscheck_max_mult) {
            HarnessOptions opts;
            opts.deep = deep;
            opts.crosscheck_max_mult = crosscheck_max_mult;
            HarnessStats stats;
            TheoremVerdict v = fn(g, f, opts, &stats);
            if (!stats.clean())
                throw std::runtime_error("internal check failed: " + stats.failure_details.front());
            return v;
        };
    };
    m.def("check_main_even", check(&check_main_even), py::arg("graph"), py::arg("f"),
          py::arg("deep") = false, py::arg("crosscheck_max_mult") = 0);
    m.def("check_main_odd", check(&check_main_odd), py::arg("graph"), py::arg("f"),
          py::arg("deep") = false, py::arg("crosscheck_max_mult") = 0);
    m.def("check_ck", check(&check_ck), py::arg("graph"), py::arg("f"), py::arg("deep") = false,
          py::arg("crosscheck_max_mult") = 0);
    m.def("check_eky", check(&check_eky), py::arg("graph"), py::arg("f"), py::arg("deep") = false,
          py::arg("crosscheck_max_mult") = 0);
    m.def("check_colored_even", check(&check_colored_even), py::arg("graph"), py::arg("f"),
          py::arg("deep") = false, py::arg("crosscheck_max_mult") = 0);
    m.def("check_colored_general", check(&check_colored_general), py::arg("graph"), py::arg("f"),
          py::arg("deep") = false, py::arg("crosscheck_max_mult") = 0);

    m.def(
        "enumerate_connected_graphs",
        [](int n) {
            std::vector<Multigraph> out;
            ConnectedGraphEnumerator en(n);
            while (auto g = en.next()) out.push_back(std::move(*g));
            return out;
        },
        py::arg("n"));
    m.def(
        "sample_multigraphs",
        [](int n, int extra_edges, bool loops, std::uint64_t seed, std::uint64_t count) {
            MultigraphSampler sampler(n, extra_edges, loops, seed);
            std::vector<Multigraph> out;
            for (std::uint64_t i = 0; i < count; ++i) out.push_back(sampler.next());
            return out;
        },
        py::arg("n"), py::arg("extra_edges"), py::arg("loops"), py::arg("seed"),
        py::arg("count") = 1);
    m.def("connected_graph_count", &connected_graph_count, py::arg("n"));

    py::class_<SweepReport>(m, "SweepReport")
        .def_property_readonly("clean", &SweepReport::clean)
        .def_readonly("graphs", &SweepReport::graphs)
        .def_readonly("instances", &SweepReport::instances)
        .def_readonly("cap_refusals", &SweepReport::cap_refusals)
        .def_property_readonly("discrepancy_count",
                               [](const SweepReport& r) { return r.discrepancies.size(); })
        .def(
            "to_json",
            [](const SweepReport& r, bool timing) { return dump(sweep_report_json(r, timing)); },
            py::arg("timing") = false);
    m.def(
        "run_sweep",
        [](const std::vector<int>& orders, const std::vector<std::string>& f_patterns,
           const std::vector<std::string>& theorems, std::uint64_t seed,
           const std::map<int, std::uint64_t>& sample_counts, int crosscheck_max_mult, bool deep,
           std::uint64_t multigraph_count, int jobs) {
            SweepConfig cfg;
            cfg.orders = orders;
            cfg.f_patterns = f_patterns;
            for (const std::string& name : theorems) {
                const auto id = theorem_from_name(name);
                if (!id) throw ParseError("unknown theorem id '" + name + "'");
                cfg.theorems.push_back(*id);
            }
            cfg.seed = seed;
            cfg.sample_counts = sample_counts;
            cfg.crosscheck_max_mult = crosscheck_max_mult;
            cfg.deep = deep;
            cfg.multigraph_count = multigraph_count;
            cfg.jobs = jobs;
            return run_sweep(cfg);
        },
        py::arg("orders"), py::arg("f_patterns"), py::arg("theorems"), py::arg("seed") = 1,
        py::arg("sample_counts") = std::map<int, std::uint64_t>{},
        py::arg("crosscheck_max_mult") = 12, py::arg("deep") = true,
        py::arg("multigraph_count") = 0, py::arg("jobs") = 1);

#ifdef GRAPHFACTOR_VERSION
    m.attr("__version__") = GRAPHFACTOR_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
