#pragma once

// The event-description language over a fixed finite domain W0: subset
// literals, union, complement, K-application, equalities between
// descriptions, and boolean combinations thereof.

#include <optional>
#include <string>
#include <vector>

#include "setlogic/epistemic.hpp"

namespace setlogic {

class EventDescription {
public:
    enum class Kind { Literal, Complement, Union, KApp };

    static EventDescription literal(std::vector<std::string> worlds);
    static EventDescription complement_of(EventDescription d);
    static EventDescription union_of(EventDescription a, EventDescription b);
    static EventDescription k_app(EventDescription d);

    Kind kind() const { return kind_; }
    const std::vector<std::string>& worlds() const { return worlds_; }
    const EventDescription& child(int i) const { return children_.at(i); }

private:
    EventDescription() = default;

    Kind kind_ = Kind::Literal;
    std::vector<std::string> worlds_;
    std::vector<EventDescription> children_;
};

class EventFormula {
public:
    enum class Kind { Equal, Not, And, Or };

    static EventFormula equal(EventDescription a, EventDescription b);
    static EventFormula negation(EventFormula f);
    static EventFormula conjunction(EventFormula a, EventFormula b);
    static EventFormula disjunction(EventFormula a, EventFormula b);

    Kind kind() const { return kind_; }
    const EventDescription& description(int i) const { return descriptions_.at(i); }
    const EventFormula& child(int i) const { return children_.at(i); }

private:
    EventFormula() = default;

    Kind kind_ = Kind::Equal;
    std::vector<EventDescription> descriptions_;
    std::vector<EventFormula> children_;
};

// Grammar: literals `{w1,w2}`, complement `~D`, union `D + D`, application
// `Kop(D)`; basic formulas `D1 == D2`; connectives `!`, `&&`, `||`.
EventFormula parse_event_formula(const std::string& text);

// Evaluates descriptions through v (literals denote themselves, K through
// `interp`) and the formula's equalities and connectives literally.
bool eval_event_formula(const EventFormula& ef, const KnowledgeOperator& interp);

struct SatResult {
    bool satisfiable = false;
    std::optional<KripkeRelation> model;
};

// Decides whether some operator over `w0` derived from a relation with the
// properties matching `axioms` (A2 reflexive, A3 transitive, A4 Euclidean)
// makes `ef` true, by enumerating all relations on w0. |w0| <= 2.
SatResult event_formula_satisfiable(const EventFormula& ef, const Universe& w0,
                                    const std::vector<EpistemicAxiom>& axioms);

}  // namespace setlogic
