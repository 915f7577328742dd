#include "graphfactor/json_io.hpp"

namespace graphfactor {

namespace {

Json instance_array(const std::vector<EdgeInstance>& edges) {
    Json arr = Json::array();
    for (const EdgeInstance& e : edges) arr.push_back(Json::array({e.u, e.v, e.k}));
    return arr;
}

} // namespace

Json matching_json(const Matching& m) { return instance_array(m.edges); }

Json certificate_json(const FactorCertificate& cert, const HAssignment& h) {
    Json j;
    j["edges"] = instance_array(cert.edges);
    j["degrees"] = cert.degrees;
    Json assignment = Json::array();
    for (const std::string& s : h.display()) assignment.push_back(s);
    j["assignment"] = assignment;
    return j;
}

Json tutte_verdict_json(const TutteVerdict& v) {
    Json j;
    j["holds"] = v.holds;
    if (v.violation) {
        Json w;
        w["S"] = v.violation->s.ids();
        w["odd"] = v.violation->odd_count;
        w["fS"] = v.violation->f_sum;
        j["violation"] = w;
    } else {
        j["violation"] = nullptr;
    }
    j["checked"] = v.subsets_checked;
    return j;
}

Json criticality_json(const CriticalityReport& r, const Multigraph& g, const HAssignment& h) {
    Json j;
    j["hasFactor"] = r.has_factor;
    j["isCritical"] = r.is_critical;
    Json per = Json::array();
    for (int x = 0; x < static_cast<int>(r.per_vertex.size()); ++x) {
        const auto& cert = r.per_vertex[static_cast<std::size_t>(x)];
        if (!cert) {
            per.push_back(nullptr);
            continue;
        }
        // pendant assignments are implied by H; rebuild for the display strings
        auto [gx, x_prime] = add_pendant(g, x);
        per.push_back(certificate_json(*cert, pendant_assignment(gx, h, x)));
    }
    j["perVertex"] = per;
    return j;
}

Json theorem_verdict_json(const TheoremVerdict& v) {
    Json j;
    j["theorem"] = theorem_name(v.id);
    j["left"] = v.left_side;
    j["right"] = v.right_side;
    j["agrees"] = v.agrees;
    j["detail"] = v.detail;
    j["n"] = v.n;
    j["f"] = v.f;
    j["graph"] = v.graph;
    return j;
}

Json sweep_report_json(const SweepReport& r, bool with_timing) {
    Json j;
    Json cfg;
    cfg["orders"] = r.config.orders;
    cfg["fPatterns"] = r.config.f_patterns;
    Json thms = Json::array();
    for (TheoremId id : r.config.theorems) thms.push_back(theorem_name(id));
    cfg["theorems"] = thms;
    cfg["seed"] = r.config.seed;
    Json samples = Json::object();
    for (const auto& [n, count] : r.config.sample_counts) samples[std::to_string(n)] = count;
    cfg["sampleCounts"] = samples;
    cfg["familyCap"] = r.config.family_cap;
    cfg["branchCap"] = r.config.branch_cap;
    cfg["coloringCapN"] = r.config.coloring_cap_n;
    cfg["crosscheckMaxMult"] = r.config.crosscheck_max_mult;
    cfg["deep"] = r.config.deep;
    cfg["multigraphCount"] = r.config.multigraph_count;
    cfg["multigraphOrders"] = r.config.multigraph_orders;
    cfg["multigraphExtraEdges"] = r.config.multigraph_extra_edges;
    cfg["multigraphLoops"] = r.config.multigraph_loops;
    j["config"] = cfg;

    j["graphs"] = r.graphs;
    j["instances"] = r.instances;
    Json by = Json::object();
    for (const auto& [id, counts] : r.by_theorem) {
        Json c;
        c["instances"] = counts.instances;
        c["agreements"] = counts.agreements;
        by[theorem_name(id)] = c;
    }
    j["byTheorem"] = by;

    Json checks;
    checks["solverCalls"] = r.stats.solver_calls;
    checks["crosschecks"] = r.stats.crosschecks;
    checks["crosscheckFailures"] = r.stats.crosscheck_failures;
    checks["certificateChecks"] = r.stats.certificate_checks;
    checks["certificateFailures"] = r.stats.certificate_failures;
    checks["necessityChecks"] = r.stats.necessity_checks;
    checks["necessityFailures"] = r.stats.necessity_failures;
    checks["sufficiencyChecks"] = r.stats.sufficiency_checks;
    checks["sufficiencyFailures"] = r.stats.sufficiency_failures;
    j["checks"] = checks;

    j["capRefusals"] = r.cap_refusals;
    j["capEvents"] = r.cap_events;

    Json discrepancies = Json::array();
    for (const Discrepancy& d : r.discrepancies) {
        Json item;
        item["kind"] = d.kind;
        item["theorem"] = theorem_name(d.theorem);
        item["n"] = d.n;
        item["graph"] = d.graph;
        item["f"] = d.f;
        item["detail"] = d.detail;
        discrepancies.push_back(item);
    }
    j["discrepancies"] = discrepancies;
    j["clean"] = r.clean();
    if (with_timing) j["wallMs"] = r.wall_ms;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace graphfactor
