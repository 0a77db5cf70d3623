#include "setlogic/event_formula.hpp"

#include <cctype>

#include "setlogic/formula.hpp"

namespace setlogic {

EventDescription EventDescription::literal(std::vector<std::string> worlds) {
    EventDescription d;
    d.kind_ = Kind::Literal;
    d.worlds_ = std::move(worlds);
    return d;
}

EventDescription EventDescription::complement_of(EventDescription child) {
    EventDescription d;
    d.kind_ = Kind::Complement;
    d.children_.push_back(std::move(child));
    return d;
}

EventDescription EventDescription::union_of(EventDescription a, EventDescription b) {
    EventDescription d;
    d.kind_ = Kind::Union;
    d.children_.push_back(std::move(a));
    d.children_.push_back(std::move(b));
    return d;
}

EventDescription EventDescription::k_app(EventDescription child) {
    EventDescription d;
    d.kind_ = Kind::KApp;
    d.children_.push_back(std::move(child));
    return d;
}

EventFormula EventFormula::equal(EventDescription a, EventDescription b) {
    EventFormula f;
    f.kind_ = Kind::Equal;
    f.descriptions_.push_back(std::move(a));
    f.descriptions_.push_back(std::move(b));
    return f;
}

EventFormula EventFormula::negation(EventFormula child) {
    EventFormula f;
    f.kind_ = Kind::Not;
    f.children_.push_back(std::move(child));
    return f;
}

EventFormula EventFormula::conjunction(EventFormula a, EventFormula b) {
    EventFormula f;
    f.kind_ = Kind::And;
    f.children_.push_back(std::move(a));
    f.children_.push_back(std::move(b));
    return f;
}

EventFormula EventFormula::disjunction(EventFormula a, EventFormula b) {
    EventFormula f;
    f.kind_ = Kind::Or;
    f.children_.push_back(std::move(a));
    f.children_.push_back(std::move(b));
    return f;
}

namespace {

class EfParser {
public:
    explicit EfParser(const std::string& text) : text_(text) {}

    EventFormula parse() {
        EventFormula f = parse_or();
        skip_space();
        if (pos_ < text_.size()) fail("trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(line_, col_, message);
    }

    void bump() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
    }

    bool eat(const std::string& token) {
        skip_space();
        if (text_.compare(pos_, token.size(), token) == 0) {
            for (std::size_t i = 0; i < token.size(); ++i) bump();
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string word() {
        skip_space();
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            ++end;
        if (end == pos_) fail("expected a world name");
        std::string w = text_.substr(pos_, end - pos_);
        while (pos_ < end) bump();
        return w;
    }

    EventFormula parse_or() {
        EventFormula lhs = parse_and();
        while (eat("||")) lhs = EventFormula::disjunction(std::move(lhs), parse_and());
        return lhs;
    }

    EventFormula parse_and() {
        EventFormula lhs = parse_atomic();
        while (eat("&&")) lhs = EventFormula::conjunction(std::move(lhs), parse_atomic());
        return lhs;
    }

    EventFormula parse_atomic() {
        skip_space();
        if (eat("!")) return EventFormula::negation(parse_atomic());
        if (peek() == '(') {
            // Could open a grouped formula or a parenthesized description;
            // decide by what follows the balanced group.
            std::size_t save_pos = pos_;
            int save_line = line_, save_col = col_;
            bump();
            int depth = 1;
            while (pos_ < text_.size() && depth > 0) {
                if (text_[pos_] == '(') ++depth;
                if (text_[pos_] == ')') --depth;
                bump();
            }
            skip_space();
            bool is_description = pos_ < text_.size() &&
                                  (text_[pos_] == '=' || text_[pos_] == '+');
            pos_ = save_pos;
            line_ = save_line;
            col_ = save_col;
            if (!is_description) {
                eat("(");
                EventFormula f = parse_or();
                if (!eat(")")) fail("expected ')'");
                return f;
            }
        }
        EventDescription lhs = parse_union();
        if (!eat("==")) fail("expected '==' between event descriptions");
        EventDescription rhs = parse_union();
        return EventFormula::equal(std::move(lhs), std::move(rhs));
    }

    EventDescription parse_union() {
        EventDescription lhs = parse_unary_description();
        while (true) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                bump();
                lhs = EventDescription::union_of(std::move(lhs), parse_unary_description());
            } else {
                break;
            }
        }
        return lhs;
    }

    EventDescription parse_unary_description() {
        skip_space();
        if (eat("~")) return EventDescription::complement_of(parse_unary_description());
        if (eat("Kop(") || eat("K(")) {
            EventDescription d = parse_union();
            if (!eat(")")) fail("expected ')'");
            return EventDescription::k_app(std::move(d));
        }
        if (eat("(")) {
            EventDescription d = parse_union();
            if (!eat(")")) fail("expected ')'");
            return d;
        }
        if (eat("{")) {
            std::vector<std::string> worlds;
            skip_space();
            if (!eat("}")) {
                worlds.push_back(word());
                while (eat(",")) worlds.push_back(word());
                if (!eat("}")) fail("expected '}'");
            }
            return EventDescription::literal(std::move(worlds));
        }
        fail("expected an event description");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

Event eval_description(const EventDescription& d, const KnowledgeOperator& interp) {
    switch (d.kind()) {
        case EventDescription::Kind::Literal:
            return Event::from_names(interp.universe(), d.worlds());
        case EventDescription::Kind::Complement:
            return eval_description(d.child(0), interp).complement();
        case EventDescription::Kind::Union:
            return eval_description(d.child(0), interp).unite(eval_description(d.child(1), interp));
        case EventDescription::Kind::KApp:
            return interp.apply(eval_description(d.child(0), interp));
    }
    throw DomainError("unknown event description kind");
}

}  // namespace

EventFormula parse_event_formula(const std::string& text) { return EfParser(text).parse(); }

bool eval_event_formula(const EventFormula& ef, const KnowledgeOperator& interp) {
    switch (ef.kind()) {
        case EventFormula::Kind::Equal:
            return eval_description(ef.description(0), interp) ==
                   eval_description(ef.description(1), interp);
        case EventFormula::Kind::Not: return !eval_event_formula(ef.child(0), interp);
        case EventFormula::Kind::And:
            return eval_event_formula(ef.child(0), interp) &&
                   eval_event_formula(ef.child(1), interp);
        case EventFormula::Kind::Or:
            return eval_event_formula(ef.child(0), interp) ||
                   eval_event_formula(ef.child(1), interp);
    }
    throw DomainError("unknown event formula kind");
}

SatResult event_formula_satisfiable(const EventFormula& ef, const Universe& w0,
                                    const std::vector<EpistemicAxiom>& axioms) {
    if (w0.size() > 2)
        throw DomainError("event-formula satisfiability is decided only for |W0| <= 2");
    std::vector<RelationProperty> props;
    for (EpistemicAxiom a : axioms) {
        switch (a) {
            case EpistemicAxiom::A2: props.push_back(RelationProperty::Reflexive); break;
            case EpistemicAxiom::A3: props.push_back(RelationProperty::Transitive); break;
            case EpistemicAxiom::A4: props.push_back(RelationProperty::Euclidean); break;
            default:
                throw DomainError(std::string("axiom ") + to_string(a) +
                                  " has no frame class here; use A2, A3, A4");
        }
    }
    const int n = w0.size();
    const std::uint64_t relations = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < relations; ++code) {
        std::vector<Event> adjacency;
        for (int w = 0; w < n; ++w) {
            std::uint32_t row = static_cast<std::uint32_t>((code >> (w * n)) & ((1u << n) - 1u));
            adjacency.emplace_back(w0, row);
        }
        KripkeRelation rel(w0, std::move(adjacency));
        bool class_ok = true;
        for (RelationProperty p : props)
            if (!check_relation_property(rel, p).ok) {
                class_ok = false;
                break;
            }
        if (!class_ok) continue;
        if (eval_event_formula(ef, derive_knowledge_operator(rel)))
            return SatResult{true, rel};
    }
    return SatResult{false, std::nullopt};
}

}  // namespace setlogic
