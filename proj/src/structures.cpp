#include "setlogic/structures.hpp"

#include "setlogic/json_util.hpp"

namespace setlogic {

Interpretation::Interpretation(std::vector<std::pair<std::string, Event>> atoms)
    : atoms_(std::move(atoms)) {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        for (std::size_t j = i + 1; j < atoms_.size(); ++j)
            if (atoms_[i].first == atoms_[j].first)
                throw DomainError("atom declared twice: " + atoms_[i].first);
}

const Event& Interpretation::require(const std::string& atom) const {
    for (const auto& [name, event] : atoms_)
        if (name == atom) return event;
    throw DomainError("undeclared atom: " + atom);
}

bool Interpretation::declares(const std::string& atom) const {
    for (const auto& [name, event] : atoms_)
        if (name == atom) return true;
    return false;
}

PreferentialStructure::PreferentialStructure(PreferentialFrame frame_, Interpretation pi_)
    : frame(std::move(frame_)),
      pi(std::move(pi_)),
      selection(derive_preferential_selection(frame)) {}

const Universe& universe_of(const Structure& s) {
    return std::visit(
        [](const auto& m) -> const Universe& {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, KripkeStructure>) return m.relation.universe();
            else if constexpr (std::is_same_v<T, CounterfactualStructure>)
                return m.selection.universe();
            else return m.frame.universe();
        },
        s);
}

const Interpretation& interpretation_of(const Structure& s) {
    return std::visit([](const auto& m) -> const Interpretation& { return m.pi; }, s);
}

namespace {

// The literal inductive clauses; conditionals compute the antecedent's and
// consequent's intensions and apply the structure's selection mechanism.
bool mc(const Structure& s, int world, const Formula& f) {
    const Universe& u = universe_of(s);
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return interpretation_of(s).require(f.atom_name()).contains(world);
        case Formula::Kind::True: return true;
        case Formula::Kind::False: return false;
        case Formula::Kind::Not: return !mc(s, world, f.child(0));
        case Formula::Kind::And: return mc(s, world, f.child(0)) && mc(s, world, f.child(1));
        case Formula::Kind::Or: return mc(s, world, f.child(0)) || mc(s, world, f.child(1));
        case Formula::Kind::Implies:
            return !mc(s, world, f.child(0)) || mc(s, world, f.child(1));
        case Formula::Kind::Iff: return mc(s, world, f.child(0)) == mc(s, world, f.child(1));
        case Formula::Kind::Knows: {
            const auto* ks = std::get_if<KripkeStructure>(&s);
            if (!ks) throw DomainError("K formulas require a Kripke structure");
            const Event& adj = ks->relation.adjacency(world);
            for (int w = 0; w < u.size(); ++w)
                if (adj.contains(w) && !mc(s, w, f.child(0))) return false;
            return true;
        }
        case Formula::Kind::Cond: {
            if (std::holds_alternative<KripkeStructure>(s))
                throw DomainError("'~>' formulas require a counterfactual or preferential "
                                  "structure");
            std::uint32_t ih = 0, ie = 0;
            for (int w = 0; w < u.size(); ++w) {
                if (mc(s, w, f.child(0))) ih |= 1u << w;
                if (mc(s, w, f.child(1))) ie |= 1u << w;
            }
            const SelectionFunction& sel = std::holds_alternative<CounterfactualStructure>(s)
                                               ? std::get<CounterfactualStructure>(s).selection
                                               : std::get<PreferentialStructure>(s).selection;
            return (sel.apply_bits(world, ih) & ~ie) == 0;
        }
    }
    throw DomainError("unknown formula kind");
}

}  // namespace

bool model_check(const Structure& s, int world, const Formula& f) {
    const Universe& u = universe_of(s);
    if (world < 0 || world >= u.size()) throw DomainError("world index out of range");
    return mc(s, world, f);
}

bool model_check(const Structure& s, const std::string& world, const Formula& f) {
    return model_check(s, universe_of(s).require_index(world), f);
}

Event intension_of(const Structure& s, const Formula& f) {
    const Universe& u = universe_of(s);
    std::uint32_t bits = 0;
    for (int w = 0; w < u.size(); ++w)
        if (mc(s, w, f)) bits |= 1u << w;
    return Event(u, bits);
}

namespace {

Json scheme_witness(const Universe& u,
                    std::initializer_list<std::pair<const char*, std::uint32_t>> events,
                    std::uint32_t violating) {
    Json j;
    for (const auto& [k, bits] : events) j[k] = event_to_json(Event(u, bits));
    for (int w = 0; w < u.size(); ++w)
        if ((violating >> w) & 1u) {
            j["world"] = u.world_name(w);
            break;
        }
    return j;
}

CheckResult kripke_scheme(const KripkeStructure& ks, Scheme scheme) {
    KnowledgeOperator op = derive_knowledge_operator(ks.relation);
    const Universe& u = op.universe();
    const std::uint32_t events = 1u << u.size();
    const std::uint32_t full = u.full_mask();
    switch (scheme) {
        case Scheme::K1:
            for (std::uint32_t e = 0; e < events; ++e)
                for (std::uint32_t f = 0; f < events; ++f) {
                    std::uint32_t lhs = op.apply_bits(e) & op.apply_bits((~e & full) | f);
                    std::uint32_t bad = lhs & ~op.apply_bits(f);
                    if (bad)
                        return CheckResult::fail(scheme_witness(u, {{"E", e}, {"F", f}}, bad));
                }
            return CheckResult::pass();
        case Scheme::K2: return check_epistemic_axiom(op, EpistemicAxiom::A2);
        case Scheme::K3: return check_epistemic_axiom(op, EpistemicAxiom::A3);
        case Scheme::K4: return check_epistemic_axiom(op, EpistemicAxiom::A4);
        default: throw DomainError("conditional schemes require a conditional structure");
    }
}

CheckResult conditional_scheme(const SelectionFunction& sel, Scheme scheme) {
    ConditionalOperator op = derive_conditional_operator(sel);
    const Universe& u = op.universe();
    const std::uint32_t events = 1u << u.size();
    const std::uint32_t full = u.full_mask();
    switch (scheme) {
        case Scheme::C0:
            for (std::uint32_t h = 0; h < events; ++h)
                for (std::uint32_t e1 = 0; e1 < events; ++e1)
                    for (std::uint32_t e2 = 0; e2 < events; ++e2) {
                        std::uint32_t bad = (op.apply_bits(h, e1) & op.apply_bits(h, e2)) &
                                            ~op.apply_bits(h, e1 & e2);
                        if (bad)
                            return CheckResult::fail(scheme_witness(
                                u, {{"H", h}, {"E1", e1}, {"E2", e2}}, bad));
                    }
            return CheckResult::pass();
        case Scheme::C1: return check_conditional_axiom(op, ConditionalAxiom::C1);
        case Scheme::C2: return check_conditional_axiom(op, ConditionalAxiom::C2);
        case Scheme::C3: return check_conditional_axiom(op, ConditionalAxiom::C3);
        case Scheme::C4: return check_conditional_axiom(op, ConditionalAxiom::C4);
        case Scheme::C5: return check_conditional_axiom(op, ConditionalAxiom::C5);
        case Scheme::C6: return check_conditional_axiom(op, ConditionalAxiom::C6);
        case Scheme::C7: return check_conditional_axiom(op, ConditionalAxiom::C7);
        case Scheme::C8: {
            // box(H) = ~H ~> {}, dia(H) = ~(H ~> {}).
            auto box = [&](std::uint32_t h) { return op.apply_bits(~h & full, 0u); };
            auto dia = [&](std::uint32_t h) { return ~op.apply_bits(h, 0u) & full; };
            for (std::uint32_t h = 0; h < events; ++h)
                for (std::uint32_t h2 = 0; h2 < events; ++h2) {
                    std::uint32_t b = box(h);
                    std::uint32_t bad = b & ~(h & op.apply_bits(h2, b));
                    if (bad) {
                        Json j = scheme_witness(u, {{"H", h}, {"H'", h2}}, bad);
                        j["part"] = "a";
                        return CheckResult::fail(j);
                    }
                    std::uint32_t d = dia(h);
                    bad = d & ~op.apply_bits(h2, d);
                    if (bad) {
                        Json j = scheme_witness(u, {{"H", h}, {"H'", h2}}, bad);
                        j["part"] = "b";
                        return CheckResult::fail(j);
                    }
                }
            return CheckResult::pass();
        }
        default: throw DomainError("K schemes require a Kripke structure");
    }
}

}  // namespace

CheckResult scheme_validity(const Structure& s, Scheme scheme) {
    if (const auto* ks = std::get_if<KripkeStructure>(&s)) return kripke_scheme(*ks, scheme);
    if (const auto* cs = std::get_if<CounterfactualStructure>(&s))
        return conditional_scheme(cs->selection, scheme);
    return conditional_scheme(std::get<PreferentialStructure>(s).selection, scheme);
}

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::K1: return "K1";
        case Scheme::K2: return "K2";
        case Scheme::K3: return "K3";
        case Scheme::K4: return "K4";
        case Scheme::C0: return "C0";
        case Scheme::C1: return "C1";
        case Scheme::C2: return "C2";
        case Scheme::C3: return "C3";
        case Scheme::C4: return "C4";
        case Scheme::C5: return "C5";
        case Scheme::C6: return "C6";
        case Scheme::C7: return "C7";
        case Scheme::C8: return "C8";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& s) {
    for (auto sc : {Scheme::K1, Scheme::K2, Scheme::K3, Scheme::K4, Scheme::C0, Scheme::C1,
                    Scheme::C2, Scheme::C3, Scheme::C4, Scheme::C5, Scheme::C6, Scheme::C7,
                    Scheme::C8})
        if (s == to_string(sc)) return sc;
    throw FormatError("unknown scheme: " + s);
}

}  // namespace setlogic
