#pragma once

// Concrete syntax and ASTs for the modal languages. Box and diamond are
// parse-time abbreviations; normalized ASTs contain neither.

#include <string>
#include <vector>

#include "setlogic/sets.hpp"

namespace setlogic {

struct ParseError : FormatError {
    ParseError(int line_, int col_, const std::string& message)
        : FormatError(std::to_string(line_) + ":" + std::to_string(col_) + ": " + message),
          line(line_),
          col(col_) {}

    int line;
    int col;
};

class Formula {
public:
    enum class Kind { Atom, True, False, Not, And, Or, Implies, Iff, Knows, Cond };

    static Formula atom(std::string name);
    static Formula truth();
    static Formula falsity();
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula implication(Formula a, Formula b);
    static Formula biconditional(Formula a, Formula b);
    static Formula knows(Formula f);
    static Formula conditional(Formula a, Formula b);
    // Abbreviations: box(f) = cond(!f, false), dia(f) = !cond(f, false).
    static Formula box(Formula f);
    static Formula diamond(Formula f);

    Kind kind() const { return kind_; }
    const std::string& atom_name() const { return atom_; }
    const Formula& child(int i) const { return children_.at(i); }
    int arity() const { return static_cast<int>(children_.size()); }

    // Atoms occurring in the formula, sorted and unique.
    std::vector<std::string> atoms() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

private:
    Formula() = default;

    Kind kind_ = Kind::True;
    std::string atom_;
    std::vector<Formula> children_;
};

// Grammar (tightest first): `!` `K(...)` `[](...)` `<>(...)`, `&`, `|`,
// `~>` (non-associative), `=>` (right-assoc), `<=>` (right-assoc).
Formula parse_formula(const std::string& text);

// Minimal-parenthesis rendering; parse(to_string(f)) == f on normalized ASTs.
std::string to_string(const Formula& f);

}  // namespace setlogic
