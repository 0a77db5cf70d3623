#pragma once

// Structures pair a frame with an interpretation; model checking follows the
// inductive truth clauses, conditionals are keyed by intension, and axiom
// schemes are decided by quantifying over event tuples.

#include <variant>
#include <vector>

#include "setlogic/formula.hpp"
#include "setlogic/preferential.hpp"

namespace setlogic {

// Total assignment of events to declared atoms.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::vector<std::pair<std::string, Event>> atoms);

    const Event& require(const std::string& atom) const;
    bool declares(const std::string& atom) const;
    const std::vector<std::pair<std::string, Event>>& atoms() const { return atoms_; }

private:
    std::vector<std::pair<std::string, Event>> atoms_;
};

struct KripkeStructure {
    KripkeRelation relation;
    Interpretation pi;
};

struct CounterfactualStructure {
    SelectionFunction selection;
    Interpretation pi;
};

struct PreferentialStructure {
    PreferentialStructure(PreferentialFrame frame_, Interpretation pi_);

    PreferentialFrame frame;
    Interpretation pi;
    SelectionFunction selection;  // f_<= derived once at construction
};

using Structure = std::variant<KripkeStructure, CounterfactualStructure, PreferentialStructure>;

const Universe& universe_of(const Structure& s);
const Interpretation& interpretation_of(const Structure& s);

bool model_check(const Structure& s, int world, const Formula& f);
bool model_check(const Structure& s, const std::string& world, const Formula& f);

Event intension_of(const Structure& s, const Formula& f);

enum class Scheme { K1, K2, K3, K4, C0, C1, C2, C3, C4, C5, C6, C7, C8 };

// Validity of the scheme in `s`, decided over all event instantiations
// (satisfaction factors through intensions). Witness carries the violating
// event tuple and world.
CheckResult scheme_validity(const Structure& s, Scheme scheme);

const char* to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

}  // namespace setlogic
