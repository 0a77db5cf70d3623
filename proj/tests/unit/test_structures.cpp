#include "doctest.h"
#include "setlogic/structures.hpp"

using namespace setlogic;

namespace {

Event ev(const Universe& u, std::initializer_list<const char*> names) {
    std::vector<std::string> v(names.begin(), names.end());
    return Event::from_names(u, v);
}

KripkeStructure two_world_kripke() {
    Universe u({"a", "b"});
    KripkeRelation rel = KripkeRelation::from_edges(u, {{"a", "a"}, {"a", "b"}, {"b", "b"}});
    Interpretation pi({{"p", ev(u, {"a", "b"})}, {"q", ev(u, {"a"})}});
    return KripkeStructure{rel, pi};
}

CounterfactualStructure two_world_counterfactual() {
    Universe u({"a", "b"});
    // f(a,{a,b}) = {a}; selection follows the antecedent elsewhere
    std::vector<std::uint32_t> table = {0b00, 0b01, 0b10, 0b01, 0b00, 0b01, 0b10, 0b11};
    Interpretation pi({{"p", ev(u, {"a", "b"})}, {"q", ev(u, {"a"})}});
    return CounterfactualStructure{SelectionFunction(u, table), pi};
}

}  // namespace

TEST_CASE("model_check base and boolean clauses") {
    Structure s = two_world_kripke();
    CHECK(model_check(s, "a", Formula::atom("p")));
    CHECK(model_check(s, "b", Formula::atom("p")));
    CHECK_FALSE(model_check(s, "b", Formula::atom("q")));
    CHECK(model_check(s, "b", Formula::negation(Formula::atom("q"))));
    CHECK(model_check(s, "a", Formula::truth()));
    CHECK_FALSE(model_check(s, "a", Formula::falsity()));
    CHECK(model_check(s, "a", Formula::implication(Formula::atom("q"), Formula::atom("p"))));
}

TEST_CASE("K over an empty adjacency row is vacuously true") {
    Universe u({"a"});
    Structure s = KripkeStructure{KripkeRelation::empty(u),
                                  Interpretation({{"p", Event::empty(u)}})};
    CHECK(model_check(s, "a", Formula::knows(Formula::falsity())));
}

TEST_CASE("the conditional clause follows the selection applied to intensions") {
    Structure s = two_world_counterfactual();
    CHECK(model_check(s, "a", Formula::conditional(Formula::atom("p"), Formula::atom("q"))));
    CHECK_FALSE(model_check(s, "b", Formula::conditional(Formula::atom("p"), Formula::atom("q"))));
}

TEST_CASE("intension_of on the documented examples") {
    Structure s = two_world_kripke();
    const Universe& u = universe_of(s);
    CHECK(intension_of(s, Formula::truth()) == Event::full(u));
    // K through the clause agrees with the operator route
    Formula phi = Formula::atom("q");
    Event lhs = intension_of(s, Formula::knows(phi));
    Event rhs = derive_knowledge_operator(std::get<KripkeStructure>(s).relation)
                    .apply(intension_of(s, phi));
    CHECK(lhs == rhs);

    Structure c = two_world_counterfactual();
    Formula psi = Formula::atom("q");
    Event cl = intension_of(c, Formula::conditional(Formula::atom("p"), psi));
    Event op = derive_conditional_operator(std::get<CounterfactualStructure>(c).selection)
                   .apply(intension_of(c, Formula::atom("p")), intension_of(c, psi));
    CHECK(cl == op);
}

TEST_CASE("model_check error paths") {
    Structure s = two_world_kripke();
    CHECK_THROWS_AS(model_check(s, "a", Formula::atom("r")), DomainError);
    CHECK_THROWS_AS(model_check(s, "zz", Formula::atom("p")), DomainError);
    CHECK_THROWS_AS(
        model_check(s, "a", Formula::conditional(Formula::atom("p"), Formula::atom("q"))),
        DomainError);
    Structure c = two_world_counterfactual();
    CHECK_THROWS_AS(model_check(c, "a", Formula::knows(Formula::atom("p"))), DomainError);
}

TEST_CASE("scheme_validity on the documented examples") {
    // reflexive relation validates K2
    CHECK(scheme_validity(two_world_kripke(), Scheme::K2).ok);
    CHECK(scheme_validity(two_world_kripke(), Scheme::K1).ok);

    // a non-reflexive relation fails K2 with an event witness
    Universe u({"a", "b"});
    Structure bad = KripkeStructure{KripkeRelation::from_edges(u, {{"a", "b"}}),
                                    Interpretation({{"p", Event::empty(u)}})};
    CheckResult k2 = scheme_validity(bad, Scheme::K2);
    CHECK_FALSE(k2.ok);
    CHECK_FALSE(k2.witness.is_null());

    // a selection satisfying S1' validates C1; one violating it does not
    std::vector<std::uint32_t> s1_table(8);
    for (int w = 0; w < 2; ++w)
        for (std::uint32_t h = 0; h < 4; ++h) s1_table[(w << 2) | h] = h;
    Structure ok_c1 = CounterfactualStructure{SelectionFunction(u, s1_table),
                                              Interpretation({{"p", Event::empty(u)}})};
    CHECK(scheme_validity(ok_c1, Scheme::C1).ok);

    std::vector<std::uint32_t> bad_table(8, 0u);
    bad_table[(0 << 2) | 0b10] = 0b01;  // f(a,{b}) = {a}, outside the antecedent
    Structure bad_c1 = CounterfactualStructure{SelectionFunction(u, bad_table),
                                               Interpretation({{"p", Event::empty(u)}})};
    CheckResult c1 = scheme_validity(bad_c1, Scheme::C1);
    CHECK_FALSE(c1.ok);
    CHECK(c1.witness["H"] == Json::array({"b"}));

    CHECK_THROWS_AS(scheme_validity(two_world_kripke(), Scheme::C1), DomainError);
    CHECK_THROWS_AS(scheme_validity(ok_c1, Scheme::K2), DomainError);
}

TEST_CASE("frozen counterexample: C8 fails under S8' when S1' is absent") {
    Universe u({"a", "b"});
    // f(a,{}) = {a}, f(b,{}) = {}, f(w,H) = H for nonempty H: S8' holds,
    // S1' fails only on the empty antecedent, and diamond-false is {a}.
    std::vector<std::uint32_t> table = {0b01, 0b01, 0b10, 0b11, 0b00, 0b01, 0b10, 0b11};
    SelectionFunction f(u, table);
    CHECK(check_selection_condition(f, SelectionCondition::S8).ok);
    CHECK_FALSE(check_selection_condition(f, SelectionCondition::S1).ok);
    Structure s = CounterfactualStructure{f, Interpretation({{"p", Event::empty(u)}})};
    CheckResult c8 = scheme_validity(s, Scheme::C8);
    CHECK_FALSE(c8.ok);
    CHECK(c8.witness["part"] == "b");
}

TEST_CASE("preferential structures evaluate the conditional through the frame") {
    Universe u({"a", "b"});
    std::vector<std::uint32_t> leq_a = {0b11, 0b10};
    std::vector<std::uint32_t> leq_b = {0b01, 0b11};
    PreferentialFrame frame(
        u, {WorldOrder{Event::full(u), leq_a}, WorldOrder{Event::full(u), leq_b}});
    Structure s = PreferentialStructure(
        frame, Interpretation({{"p", Event::full(u)}, {"q", ev(u, {"a"})}}));
    CHECK(model_check(s, "a", Formula::conditional(Formula::atom("p"), Formula::atom("q"))));
    CHECK_FALSE(model_check(s, "b", Formula::conditional(Formula::atom("p"), Formula::atom("q"))));
    CHECK(scheme_validity(s, Scheme::C0).ok);
    CHECK(scheme_validity(s, Scheme::C1).ok);
    CHECK(scheme_validity(s, Scheme::C8).ok);
}

TEST_CASE("left logical equivalence holds by construction") {
    Structure c = two_world_counterfactual();
    Formula phi = Formula::atom("p");
    Formula phi2 = Formula::negation(Formula::negation(Formula::atom("p")));
    Formula psi = Formula::atom("q");
    REQUIRE(intension_of(c, phi) == intension_of(c, phi2));
    CHECK(intension_of(c, Formula::conditional(phi, psi)) ==
          intension_of(c, Formula::conditional(phi2, psi)));
}

TEST_CASE("interpretations reject duplicate atoms") {
    Universe u({"a"});
    CHECK_THROWS_AS(Interpretation({{"p", Event::empty(u)}, {"p", Event::full(u)}}), DomainError);
}
