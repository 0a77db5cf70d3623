#include "doctest.h"
#include "setlogic/formula.hpp"
#include "setlogic/harness.hpp"

using namespace setlogic;

TEST_CASE("parse_formula on the documented examples") {
    Formula expected = Formula::knows(Formula::negation(
        Formula::knows(Formula::conjunction(Formula::atom("p"), Formula::atom("q")))));
    CHECK(parse_formula("K(!K(p & q))") == expected);

    // box and diamond are abbreviations and never survive parsing
    CHECK(parse_formula("[](p)") ==
          Formula::conditional(Formula::negation(Formula::atom("p")), Formula::falsity()));
    CHECK(parse_formula("<>(p)") ==
          Formula::negation(Formula::conditional(Formula::atom("p"), Formula::falsity())));
}

TEST_CASE("the conditional is non-associative with a located diagnostic") {
    try {
        parse_formula("p ~> q ~> r");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 8);
        CHECK(std::string(e.what()).find("non-associative") != std::string::npos);
    }
    // parenthesized nesting is fine on either side
    CHECK_NOTHROW(parse_formula("(p ~> q) ~> r"));
    CHECK_NOTHROW(parse_formula("p ~> (q ~> r)"));
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_formula("p & q | r") ==
          Formula::disjunction(Formula::conjunction(Formula::atom("p"), Formula::atom("q")),
                               Formula::atom("r")));
    CHECK(parse_formula("p => q => r") ==
          Formula::implication(Formula::atom("p"),
                               Formula::implication(Formula::atom("q"), Formula::atom("r"))));
    CHECK(parse_formula("p ~> q & r") ==
          Formula::conditional(Formula::atom("p"),
                               Formula::conjunction(Formula::atom("q"), Formula::atom("r"))));
    CHECK(parse_formula("!p & q") ==
          Formula::conjunction(Formula::negation(Formula::atom("p")), Formula::atom("q")));
    CHECK(parse_formula("p ~> q => r") ==
          Formula::implication(Formula::conditional(Formula::atom("p"), Formula::atom("q")),
                               Formula::atom("r")));
    CHECK(parse_formula("p <=> q <=> r") ==
          Formula::biconditional(
              Formula::atom("p"),
              Formula::biconditional(Formula::atom("q"), Formula::atom("r"))));
}

TEST_CASE("lexer corner cases") {
    CHECK(parse_formula("true").kind() == Formula::Kind::True);
    CHECK(parse_formula("false").kind() == Formula::Kind::False);
    CHECK(parse_formula("p1_x") == Formula::atom("p1_x"));
    CHECK(parse_formula("truet") == Formula::atom("truet"));
    CHECK_THROWS_AS(parse_formula("K p"), ParseError);
    CHECK_THROWS_AS(parse_formula("(p"), ParseError);
    CHECK_THROWS_AS(parse_formula("p P"), ParseError);
    CHECK_THROWS_AS(parse_formula("~p"), ParseError);
    CHECK_THROWS_AS(parse_formula(""), ParseError);
}

TEST_CASE("parse errors carry line and column across lines") {
    try {
        parse_formula("p &\n  & q");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 3);
    }
}

TEST_CASE("printer renders minimal parentheses") {
    CHECK(to_string(parse_formula("(p & q) | r")) == "p & q | r");
    CHECK(to_string(parse_formula("p & (q | r)")) == "p & (q | r)");
    CHECK(to_string(parse_formula("(p ~> q) ~> r")) == "(p ~> q) ~> r");
    CHECK(to_string(parse_formula("K(!K(p & q))")) == "K(!K(p & q))");
    CHECK(to_string(parse_formula("!(p & q)")) == "!(p & q)");
}

TEST_CASE("print-parse identity over seeded random formulas") {
    Rng rng(0xF0);
    auto gen = [&](auto&& self, int depth) -> Formula {
        if (depth == 0) {
            switch (rng.below(4)) {
                case 0: return Formula::atom("p");
                case 1: return Formula::atom("q");
                case 2: return Formula::truth();
                default: return Formula::falsity();
            }
        }
        switch (rng.below(8)) {
            case 0: return Formula::negation(self(self, depth - 1));
            case 1: return Formula::conjunction(self(self, depth - 1), self(self, depth - 1));
            case 2: return Formula::disjunction(self(self, depth - 1), self(self, depth - 1));
            case 3: return Formula::implication(self(self, depth - 1), self(self, depth - 1));
            case 4: return Formula::biconditional(self(self, depth - 1), self(self, depth - 1));
            case 5: return Formula::knows(self(self, depth - 1));
            case 6: return Formula::conditional(self(self, depth - 1), self(self, depth - 1));
            default: return self(self, 0);
        }
    };
    for (int trial = 0; trial < 2000; ++trial) {
        Formula f = gen(gen, 1 + static_cast<int>(rng.below(5)));
        CHECK(parse_formula(to_string(f)) == f);
    }
}

TEST_CASE("atoms are collected sorted and unique") {
    CHECK(parse_formula("q & p | q").atoms() == std::vector<std::string>{"p", "q"});
}
