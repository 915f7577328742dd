#include <doctest.h>

#include "graphfactor/json_io.hpp"
#include "helpers.hpp"

using namespace graphfactor;
using namespace testutil;

TEST_SUITE_BEGIN("json");

TEST_CASE("matching schema") {
    CHECK(matching_json(max_matching(path(2))) == Json::array({Json::array({0, 1, 0})}));
}

TEST_CASE("certificate schema") {
    const HAssignment h = HAssignment::uniform(2, j_set(1));
    const FactorResult r = find_h_factor(path(2), h);
    REQUIRE(r.found());
    const Json j = certificate_json(*r.certificate, h);
    CHECK(j["edges"] == Json::array({Json::array({0, 1, 0})}));
    CHECK(j["degrees"] == Json::array({1, 1}));
    CHECK(j["assignment"] == Json::array({"{1}", "{1}"}));
}

TEST_CASE("tutte verdict schema") {
    const Json bad = tutte_verdict_json(check_tutte(star(3), FSpec::constant(4, 1)));
    CHECK(bad["holds"] == false);
    CHECK(bad["violation"]["S"] == Json::array({0}));
    CHECK(bad["violation"]["odd"] == 3);
    CHECK(bad["violation"]["fS"] == 1);

    const Json ok = tutte_verdict_json(check_tutte(cycle(4), FSpec::constant(4, 1)));
    CHECK(ok["holds"] == true);
    CHECK(ok["violation"].is_null());
    CHECK(ok["checked"] == 15);
}

TEST_CASE("criticality report embeds pendant certificates") {
    const HAssignment h = HAssignment::uniform(3, j_set(1));
    const Json j =
        criticality_json(is_h_critical(complete(3), h), complete(3), h);
    CHECK(j["hasFactor"] == false);
    CHECK(j["isCritical"] == true);
    REQUIRE(j["perVertex"].size() == 3);
    CHECK(j["perVertex"][0]["assignment"].size() == 4); // host sets plus {1} at x'
    CHECK(j["perVertex"][0]["assignment"][3] == "{1}");
}

TEST_CASE("discrepancies serialize as full replay bundles") {
    SweepReport r;
    r.config.orders = {4};
    r.config.theorems = {TheoremId::MAIN_EVEN};
    r.discrepancies.push_back(
        {"theorem", TheoremId::MAIN_EVEN, 4, "4; 0 1; 1 2", {1, 1, 1, 1}, "family member 0"});
    const Json j = sweep_report_json(r);
    CHECK(j["clean"] == false);
    REQUIRE(j["discrepancies"].size() == 1);
    const Json& d = j["discrepancies"][0];
    CHECK(d["kind"] == "theorem");
    CHECK(d["theorem"] == "MAIN_EVEN");
    CHECK(d["graph"] == "4; 0 1; 1 2");
    CHECK(d["f"] == Json::array({1, 1, 1, 1}));
    CHECK(d["detail"] == "family member 0");
}

TEST_CASE("sweep report serialization is stable and excludes timing by default") {
    SweepConfig cfg;
    cfg.orders = {2, 3};
    cfg.theorems = {TheoremId::MAIN_EVEN, TheoremId::MAIN_ODD};
    const SweepReport r = run_sweep(cfg);
    const std::string text = dump(sweep_report_json(r));
    CHECK(text.find("wallMs") == std::string::npos);
    CHECK(text.find("\"clean\": true") != std::string::npos);
    const std::string timed = dump(sweep_report_json(r, true));
    CHECK(timed.find("wallMs") != std::string::npos);
}

TEST_SUITE_END();
