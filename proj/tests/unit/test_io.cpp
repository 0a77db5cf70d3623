#include "doctest.h"
#include "setlogic/harness.hpp"
#include "setlogic/io.hpp"

using namespace setlogic;

TEST_CASE("relation files round trip") {
    Json j = Json::parse(R"({"worlds":["a","b"],"edges":[["a","b"],["b","b"]]})");
    KripkeRelation rel = relation_from_json(j);
    CHECK(rel.relates(0, 1));
    CHECK_FALSE(rel.relates(0, 0));
    CHECK(relation_from_json(relation_to_json(rel)) == rel);
    CHECK(detect_file_kind(j) == FileKind::Relation);
}

TEST_CASE("operator files demand all rows exactly once") {
    Json good = Json::parse(
        R"({"worlds":["a"],"table":[{"in":[],"out":[]},{"in":["a"],"out":["a"]}]})");
    KnowledgeOperator op = operator_from_json(good);
    CHECK(operator_from_json(operator_to_json(op)) == op);
    CHECK(detect_file_kind(good) == FileKind::Operator);

    Json missing = Json::parse(R"({"worlds":["a"],"table":[{"in":[],"out":[]}]})");
    CHECK_THROWS_AS(operator_from_json(missing), FormatError);
    Json dup = Json::parse(
        R"({"worlds":["a"],"table":[{"in":[],"out":[]},{"in":[],"out":["a"]}]})");
    CHECK_THROWS_AS(operator_from_json(dup), FormatError);
}

TEST_CASE("selection and conditional files round trip via seeded samples") {
    Universe u({"a", "b"});
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint32_t> sel_table(8), cond_table(16);
        for (auto& v : sel_table) v = rng.bits(2);
        for (auto& v : cond_table) v = rng.bits(2);
        SelectionFunction f(u, sel_table);
        ConditionalOperator op(u, cond_table);
        CHECK(selection_from_json(selection_to_json(f)) == f);
        CHECK(conditional_from_json(conditional_to_json(op)) == op);
        CHECK(detect_file_kind(selection_to_json(f)) == FileKind::Selection);
        CHECK(detect_file_kind(conditional_to_json(op)) == FileKind::ConditionalOp);
    }
}

TEST_CASE("frame files round trip and reject domain violations") {
    Json good = Json::parse(R"({
        "worlds": ["a", "b"],
        "orders": [
            {"w": "a", "domain": ["a","b"], "leq": [["a","a"],["a","b"],["b","b"]]},
            {"w": "b", "domain": ["b"], "leq": [["b","b"]]}
        ]})");
    PreferentialFrame frame = frame_from_json(good);
    CHECK(frame_from_json(frame_to_json(frame)) == frame);
    CHECK(detect_file_kind(good) == FileKind::Frame);
    CHECK(frame.strictly_less(0, 0, 1));

    Json stray = good;
    stray["orders"][1]["leq"].push_back(Json::array({"b", "a"}));
    CHECK_THROWS_AS(frame_from_json(stray), DomainError);
}

TEST_CASE("structure files extend frame files with pi") {
    Json j = Json::parse(R"({
        "worlds": ["a","b"],
        "edges": [["a","a"],["b","b"]],
        "pi": [{"atom":"p","worlds":["a"]}]})");
    Structure s = structure_from_json(j);
    CHECK(std::holds_alternative<KripkeStructure>(s));
    CHECK(model_check(s, "a", parse_formula("K(p)")));
    CHECK_FALSE(model_check(s, "b", parse_formula("p")));

    Json no_pi = Json::parse(R"({"worlds":["a"],"edges":[]})");
    CHECK_THROWS_AS(structure_from_json(no_pi), FormatError);
}

TEST_CASE("malformed documents report format errors") {
    CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), FormatError);
    CHECK_THROWS_AS(detect_file_kind(Json::parse(R"({"nope":1})")), FormatError);
    CHECK_THROWS_AS(relation_from_json(Json::parse(R"({"worlds":["a"],"edges":[["a"]]})")),
                    FormatError);
    CHECK_THROWS_AS(relation_from_json(Json::parse(R"({"worlds":["a"],"edges":[["a","z"]]})")),
                    DomainError);
    CHECK_THROWS_AS(fincof_from_json(Json::parse(R"({"kind":"odd","support":[]})")),
                    FormatError);
    CHECK_THROWS_AS(fincof_from_json(Json::parse(R"({"kind":"finite","support":[-1]})")),
                    FormatError);
}
