#include "doctest.h"
#include "oracles.hpp"
#include "setlogic/harness.hpp"
#include "setlogic/io.hpp"
#include "setlogic/sets.hpp"

using namespace setlogic;

namespace {

Event ev(const Universe& u, std::initializer_list<const char*> names) {
    std::vector<std::string> v(names.begin(), names.end());
    return Event::from_names(u, v);
}

}  // namespace

TEST_CASE("universe construction enforces the documented caps") {
    CHECK_THROWS_AS(Universe({}), DomainError);
    CHECK_THROWS_AS(Universe({"a", "a"}), DomainError);
    std::vector<std::string> big;
    for (int i = 0; i < 25; ++i) big.push_back("w" + std::to_string(i));
    CHECK_THROWS_AS(Universe{big}, DomainError);
    big.pop_back();
    CHECK(Universe(big).size() == 24);
}

TEST_CASE("evaluate_set_expr on the documented examples") {
    Universe u({"1", "2", "3"});
    Event a = ev(u, {"1", "3"});
    std::vector<SetBinding> bind = {{"A", a}};

    // double complement
    CHECK(evaluate_set_expr(SetExpr::neg(SetExpr::neg(SetExpr::name("A"))), bind) == a);
    // excluded middle on sets
    CHECK(evaluate_set_expr(SetExpr::union_of(SetExpr::name("A"), SetExpr::neg(SetExpr::name("A"))),
                            bind) == Event::full(u));

    // intersect, cross-checked by the elementwise membership oracle
    Event a2 = ev(u, {"1", "2"});
    Event b2 = ev(u, {"2", "3"});
    Event got = evaluate_set_expr(SetExpr::intersect_of(SetExpr::name("A"), SetExpr::name("B")),
                                  {{"A", a2}, {"B", b2}});
    oracle::NamedSet omega = {"1", "2", "3"};
    oracle::NamedSet expected = oracle::intersect_of({"1", "2"}, {"2", "3"});
    for (const auto& w : omega)
        CHECK(got.contains(u.require_index(w)) == (expected.count(w) > 0));
    CHECK(got == ev(u, {"2"}));
}

TEST_CASE("evaluate_set_expr error paths") {
    Universe u({"1", "2"});
    CHECK_THROWS_AS(evaluate_set_expr(SetExpr::name("missing"), {}), DomainError);
    Universe other({"x", "y"});
    CHECK_THROWS_AS(
        evaluate_set_expr(SetExpr::union_of(SetExpr::name("A"), SetExpr::name("B")),
                          {{"A", Event::full(u)}, {"B", Event::full(other)}}),
        DomainError);
}

TEST_CASE("event algebra invariants over seeded random events") {
    Universe u({"a", "b", "c", "d", "e"});
    Rng rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        Event a(u, rng.bits(5));
        Event b(u, rng.bits(5));
        CHECK(a.complement().complement() == a);
        CHECK(a.intersect(b).is_subset_of(a));
        CHECK(a.is_subset_of(a.unite(b)));
        CHECK(a.is_subset_of(b) == (a.intersect(b) == a));
    }
}

TEST_CASE("fincof_op on the documented examples") {
    CHECK(fincof_op(FinCofOp::Complement, {FinCofEvent::finite({1})}) ==
          FinCofEvent::cofinite({1}));

    // De Morgan on finite supports, checked by membership sampling on 0..10
    FinCofEvent meet =
        fincof_op(FinCofOp::Intersect, {FinCofEvent::cofinite({1}), FinCofEvent::cofinite({2})});
    CHECK(meet == FinCofEvent::cofinite({1, 2}));
    for (std::uint64_t k = 0; k <= 10; ++k)
        CHECK(meet.contains(k) == (k != 1 && k != 2));

    FinCofEvent join =
        fincof_op(FinCofOp::Union, {FinCofEvent::finite({1, 2}), FinCofEvent::cofinite({2, 3})});
    CHECK(join == FinCofEvent::cofinite({3}));
    for (std::uint64_t k = 0; k <= 10; ++k)
        CHECK(join.contains(k) == (k != 3));
}

TEST_CASE("fincof algebra is a boolean-algebra homomorphic image on 0..50") {
    Rng rng(7);
    auto random_fincof = [&] {
        std::vector<std::uint64_t> support;
        for (std::uint64_t k = 0; k <= 12; ++k)
            if (rng.below(3) == 0) support.push_back(k);
        return rng.below(2) == 0 ? FinCofEvent::finite(support) : FinCofEvent::cofinite(support);
    };
    for (int trial = 0; trial < 300; ++trial) {
        FinCofEvent a = random_fincof(), b = random_fincof();
        FinCofEvent u_ = unite(a, b), i_ = intersect(a, b), c_ = complement(a);
        FinCofEvent d_ = difference(a, b);
        for (std::uint64_t k = 0; k <= 50; ++k) {
            CHECK(u_.contains(k) == (a.contains(k) || b.contains(k)));
            CHECK(i_.contains(k) == (a.contains(k) && b.contains(k)));
            CHECK(c_.contains(k) == !a.contains(k));
            CHECK(d_.contains(k) == (a.contains(k) && !b.contains(k)));
        }
        CHECK(is_subset_of(a, b) == (intersect(a, b) == a));
        CHECK(complement(complement(a)) == a);
    }
}

TEST_CASE("fincof canonical representation") {
    CHECK(FinCofEvent::finite({2, 1, 2, 1}).support() == std::vector<std::uint64_t>{1, 2});
    CHECK(FinCofEvent::naturals() == FinCofEvent::cofinite({}));
    CHECK(FinCofEvent::empty().is_empty());
    CHECK(FinCofEvent::naturals().is_naturals());
    CHECK_FALSE(FinCofEvent::finite({1}).is_cofinite());
}

TEST_CASE("serialization round trips for both event kinds") {
    Universe u({"w1", "w2", "w3"});
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        Event e(u, bits);
        CHECK(event_from_json(u, event_to_json(e)) == e);
    }
    for (const auto& e : {FinCofEvent::finite({0, 4, 9}), FinCofEvent::cofinite({2}),
                          FinCofEvent::empty(), FinCofEvent::naturals()})
        CHECK(fincof_from_json(fincof_to_json(e)) == e);
}

TEST_CASE("canonical event serialization lists names in universe order") {
    Universe u({"w2", "w1"});
    CHECK(Event::full(u).names() == std::vector<std::string>{"w2", "w1"});
}
