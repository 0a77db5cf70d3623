#include <algorithm>

#include "doctest.h"
#include "setlogic/harness.hpp"

using namespace setlogic;

TEST_CASE("the registry declares the documented generator cardinalities") {
    auto find = [](const std::string& name) -> const Campaign& {
        for (const auto& c : campaign_registry())
            if (c.name == name) return c;
        FAIL("campaign not registered: ", name);
        static Campaign none;
        return none;
    };
    CHECK(find("prop1").cardinality == 256);
    CHECK(find("thm2-roundtrip-relations").cardinality == 16 + 512);
    CHECK(find("thm4-exhaustive-n2").cardinality == 65536);
    CHECK(find("lemma2-frames").cardinality == 2 + 49 + 91125);
    CHECK(find("lewis-finite").cardinality == 2 + 49 + 91125);
}

TEST_CASE("identical seed and config produce byte-identical reports") {
    HarnessConfig config;
    config.samples = 200;
    config.jobs = 4;
    Report a = run_campaign("thm4-sampled-n3", config);
    Report b = run_campaign("thm4-sampled-n3", config);
    CHECK(a.to_records() == b.to_records());
    CHECK(a.candidates == 200);

    // the merge order is by candidate index, so worker count cannot leak in
    config.jobs = 1;
    Report c = run_campaign("thm4-sampled-n3", config);
    CHECK(c.to_records() == a.to_records());
}

TEST_CASE("small campaigns run clean") {
    CHECK(run_campaign("prop1", {}).ok());
    CHECK(run_campaign("example1-negative", {}).ok());
    CHECK(run_campaign("thm2-roundtrip-operators", {}).ok());
    HarnessConfig quick;
    quick.samples = 100;
    CHECK(run_campaign("thm4-sampled-n3", quick).ok());
}

TEST_CASE("unknown campaigns and suites are rejected") {
    CHECK_THROWS_AS(run_campaign("nope", {}), DomainError);
    CHECK_THROWS_AS(suite_campaigns("nope"), DomainError);
}

TEST_CASE("suites bundle the registered campaigns") {
    const auto& thm2 = suite_campaigns("thm2");
    CHECK(std::find(thm2.begin(), thm2.end(), "thm2-correspondence") != thm2.end());
    const auto& cx = suite_campaigns("counterexamples");
    CHECK(cx.size() == 5);
    auto names = theorem_suite_names();
    for (const char* expected :
         {"thm2", "thm4", "thm6", "prop1", "lemma2", "lewis-finite", "counterexamples", "all"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    // every suite member resolves
    for (const auto& suite : names)
        for (const auto& campaign : suite_campaigns(suite))
            (void)campaign;
}

TEST_CASE("violation records carry replay data") {
    Report r;
    r.campaign = "demo";
    r.candidates = 1;
    r.seed = 42;
    Json cand;
    cand["table"] = Json::array();
    r.violations.push_back(Violation{0, cand, "some-property", Json("why")});
    std::string records = r.to_records();
    CHECK(records.find("\"property\":\"some-property\"") != std::string::npos);
    CHECK(records.find("\"candidates\":1") != std::string::npos);
    CHECK(records.find("\"ok\":false") != std::string::npos);
    CHECK(records.find("\"seed\":42") != std::string::npos);
    // timing never reaches the records
    CHECK(records.find("wall") == std::string::npos);
}
