#include "setlogic/epistemic.hpp"

#include <algorithm>

#include "setlogic/json_util.hpp"

namespace setlogic {

KripkeRelation::KripkeRelation(Universe universe, std::vector<Event> adjacency)
    : universe_(std::move(universe)), adjacency_(std::move(adjacency)) {
    if (static_cast<int>(adjacency_.size()) != universe_.size())
        throw DomainError("adjacency must define one row per world");
    for (const auto& row : adjacency_)
        if (row.universe() != universe_) throw DomainError("adjacency row universe mismatch");
}

KripkeRelation KripkeRelation::from_edges(
    const Universe& u, const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::uint32_t> rows(u.size(), 0u);
    for (const auto& [from, to] : edges) rows[u.require_index(from)] |= 1u << u.require_index(to);
    std::vector<Event> adjacency;
    for (int w = 0; w < u.size(); ++w) adjacency.emplace_back(u, rows[w]);
    return KripkeRelation(u, std::move(adjacency));
}

KripkeRelation KripkeRelation::identity(const Universe& u) {
    std::vector<Event> adjacency;
    for (int w = 0; w < u.size(); ++w) adjacency.emplace_back(u, 1u << w);
    return KripkeRelation(u, std::move(adjacency));
}

KripkeRelation KripkeRelation::empty(const Universe& u) {
    std::vector<Event> adjacency(u.size(), Event::empty(u));
    return KripkeRelation(u, std::move(adjacency));
}

bool KripkeRelation::operator==(const KripkeRelation& other) const {
    return universe_ == other.universe_ && adjacency_ == other.adjacency_;
}

KnowledgeOperator::KnowledgeOperator(Universe universe, std::vector<std::uint32_t> table,
                                     Provenance provenance)
    : universe_(std::move(universe)), table_(std::move(table)), provenance_(provenance) {
    if (universe_.size() > kMaxKnowledgeTableSize)
        throw DomainError("universe too large for a knowledge-operator table (cap " +
                          std::to_string(kMaxKnowledgeTableSize) + ")");
    if (table_.size() != (std::size_t{1} << universe_.size()))
        throw DomainError("knowledge-operator table must have 2^n rows");
    for (std::uint32_t out : table_)
        if (out & ~universe_.full_mask()) throw DomainError("operator output outside universe");
}

Event KnowledgeOperator::apply(const Event& e) const {
    if (e.universe() != universe_) throw DomainError("event universe mismatch");
    return Event(universe_, table_[e.bits()]);
}

bool KnowledgeOperator::operator==(const KnowledgeOperator& other) const {
    return universe_ == other.universe_ && table_ == other.table_;
}

std::string SymbolicKnowledgeOperator::rule_name() const {
    return rule_ == Rule::K1Cofinite ? "K1-cofinite" : "K2-cofinite";
}

FinCofEvent SymbolicKnowledgeOperator::apply(const FinCofEvent& e) const {
    if (!e.is_cofinite()) return FinCofEvent::empty();
    return rule_ == Rule::K1Cofinite ? e : FinCofEvent::naturals();
}

FinCofEvent SymbolicKnowledgeOperator::intersect_over_cosingletons(
    const FinCofEvent& index_set) const {
    if (index_set.is_empty()) return FinCofEvent::naturals();  // empty intersection
    // Every ~{j} is cofinite, so K1 maps each to itself and K2 maps each to N.
    if (rule_ == Rule::K2Cofinite) return FinCofEvent::naturals();
    return complement(index_set);  // /\_{j in J} ~{j} = ~J
}

WitnessFamily WitnessFamily::paper_default() {
    WitnessFamily f;
    for (std::uint64_t j = 1; j <= 10; ++j) f.probes.push_back(FinCofEvent::cofinite({j}));
    f.cosingleton_index = FinCofEvent::cofinite({1});
    return f;
}

KnowledgeOperator derive_knowledge_operator(const KripkeRelation& rel) {
    const Universe& u = rel.universe();
    if (u.size() > kMaxKnowledgeTableSize)
        throw DomainError("universe too large to materialize an operator table");
    const int n = u.size();
    const std::uint32_t events = 1u << n;
    std::vector<std::uint32_t> table(events, 0u);
    for (std::uint32_t e = 0; e < events; ++e) {
        std::uint32_t out = 0;
        for (int w = 0; w < n; ++w)
            if ((rel.adjacency(w).bits() & ~e) == 0) out |= 1u << w;
        table[e] = out;
    }
    return KnowledgeOperator(u, std::move(table), Provenance::DerivedFromRelation);
}

namespace {

Json world_witness(const Universe& u, std::initializer_list<int> worlds) {
    Json names = Json::array();
    for (int w : worlds) names.push_back(u.world_name(w));
    Json j;
    j["worlds"] = names;
    return j;
}

CheckResult check_reflexive(const KripkeRelation& rel) {
    const Universe& u = rel.universe();
    for (int w = 0; w < u.size(); ++w)
        if (!rel.relates(w, w)) return CheckResult::fail(world_witness(u, {w}));
    return CheckResult::pass();
}

CheckResult check_symmetric(const KripkeRelation& rel) {
    const Universe& u = rel.universe();
    for (int a = 0; a < u.size(); ++a)
        for (int b = 0; b < u.size(); ++b)
            if (rel.relates(a, b) && !rel.relates(b, a))
                return CheckResult::fail(world_witness(u, {a, b}));
    return CheckResult::pass();
}

CheckResult check_transitive(const KripkeRelation& rel) {
    const Universe& u = rel.universe();
    for (int a = 0; a < u.size(); ++a)
        for (int b = 0; b < u.size(); ++b) {
            if (!rel.relates(a, b)) continue;
            for (int c = 0; c < u.size(); ++c)
                if (rel.relates(b, c) && !rel.relates(a, c))
                    return CheckResult::fail(world_witness(u, {a, b, c}));
        }
    return CheckResult::pass();
}

CheckResult check_euclidean(const KripkeRelation& rel) {
    const Universe& u = rel.universe();
    for (int a = 0; a < u.size(); ++a)
        for (int b = 0; b < u.size(); ++b) {
            if (!rel.relates(a, b)) continue;
            for (int c = 0; c < u.size(); ++c)
                if (rel.relates(a, c) && !rel.relates(b, c)) {
                    Json j = world_witness(u, {a, b, c});
                    j["missing"] = Json::array({u.world_name(b), u.world_name(c)});
                    return CheckResult::fail(j);
                }
        }
    return CheckResult::pass();
}

}  // namespace

CheckResult check_relation_property(const KripkeRelation& rel, RelationProperty prop) {
    switch (prop) {
        case RelationProperty::Reflexive: return check_reflexive(rel);
        case RelationProperty::Transitive: return check_transitive(rel);
        case RelationProperty::Symmetric: return check_symmetric(rel);
        case RelationProperty::Euclidean: return check_euclidean(rel);
        case RelationProperty::Equivalence: {
            for (auto sub : {RelationProperty::Reflexive, RelationProperty::Symmetric,
                             RelationProperty::Transitive}) {
                CheckResult r = check_relation_property(rel, sub);
                if (!r.ok) {
                    Json j;
                    j["failed"] = to_string(sub);
                    j["witness"] = r.witness;
                    return CheckResult::fail(j);
                }
            }
            return CheckResult::pass();
        }
    }
    throw DomainError("unknown relation property");
}

namespace {

Json table_pair_witness(const Universe& u, std::uint32_t e, std::uint32_t f,
                        const KnowledgeOperator& op) {
    Json j;
    j["E"] = event_to_json(Event(u, e));
    j["F"] = event_to_json(Event(u, f));
    j["op(E)"] = event_to_json(Event(u, op.apply_bits(e)));
    j["op(F)"] = event_to_json(Event(u, op.apply_bits(f)));
    return j;
}

Json table_single_witness(const Universe& u, std::uint32_t e, const KnowledgeOperator& op) {
    Json j;
    j["E"] = event_to_json(Event(u, e));
    j["op(E)"] = event_to_json(Event(u, op.apply_bits(e)));
    return j;
}

// A1': E <= F implies op(E) <= op(F). Pairs enumerated as F ascending with
// E running over submasks of F.
CheckResult check_a1_prime(const KnowledgeOperator& op) {
    const std::uint32_t events = 1u << op.universe().size();
    for (std::uint32_t f = 0; f < events; ++f) {
        std::uint32_t e = f;
        while (true) {
            if ((op.apply_bits(e) & ~op.apply_bits(f)) != 0)
                return CheckResult::fail(table_pair_witness(op.universe(), e, f, op));
            if (e == 0) break;
            e = (e - 1) & f;
        }
    }
    return CheckResult::pass();
}

CheckResult check_a1(const KnowledgeOperator& op) {
    const std::uint32_t events = 1u << op.universe().size();
    for (std::uint32_t e = 0; e < events; ++e)
        for (std::uint32_t f = 0; f < events; ++f)
            if ((op.apply_bits(e) & op.apply_bits(f)) != op.apply_bits(e & f)) {
                Json j = table_pair_witness(op.universe(), e, f, op);
                j["op(E&F)"] = event_to_json(Event(op.universe(), op.apply_bits(e & f)));
                return CheckResult::fail(j);
            }
    return CheckResult::pass();
}

CheckResult check_a2(const KnowledgeOperator& op) {
    const std::uint32_t events = 1u << op.universe().size();
    for (std::uint32_t e = 0; e < events; ++e)
        if ((op.apply_bits(e) & ~e) != 0)
            return CheckResult::fail(table_single_witness(op.universe(), e, op));
    return CheckResult::pass();
}

CheckResult check_a3(const KnowledgeOperator& op) {
    const std::uint32_t events = 1u << op.universe().size();
    for (std::uint32_t e = 0; e < events; ++e)
        if ((op.apply_bits(e) & ~op.apply_bits(op.apply_bits(e))) != 0)
            return CheckResult::fail(table_single_witness(op.universe(), e, op));
    return CheckResult::pass();
}

CheckResult check_a4(const KnowledgeOperator& op) {
    const Universe& u = op.universe();
    const std::uint32_t events = 1u << u.size();
    const std::uint32_t full = u.full_mask();
    for (std::uint32_t e = 0; e < events; ++e) {
        std::uint32_t not_ke = ~op.apply_bits(e) & full;
        if ((not_ke & ~op.apply_bits(not_ke)) != 0) {
            Json j = table_single_witness(u, e, op);
            j["~op(E)"] = event_to_json(Event(u, not_ke));
            j["op(~op(E))"] = event_to_json(Event(u, op.apply_bits(not_ke)));
            return CheckResult::fail(j);
        }
    }
    return CheckResult::pass();
}

// A5 on a finite universe: A1 plus op(Omega) = Omega (the empty-family case).
CheckResult check_a5_fin(const KnowledgeOperator& op) {
    const std::uint32_t full = op.universe().full_mask();
    if (op.apply_bits(full) != full) {
        Json j = table_single_witness(op.universe(), full, op);
        j["reason"] = "op(Omega) != Omega";
        return CheckResult::fail(j);
    }
    CheckResult a1 = check_a1(op);
    if (!a1.ok) return a1;
    return CheckResult::pass();
}

}  // namespace

CheckResult check_epistemic_axiom(const KnowledgeOperator& op, EpistemicAxiom axiom) {
    switch (axiom) {
        case EpistemicAxiom::A1Prime: return check_a1_prime(op);
        case EpistemicAxiom::A1: return check_a1(op);
        case EpistemicAxiom::A2: return check_a2(op);
        case EpistemicAxiom::A3: return check_a3(op);
        case EpistemicAxiom::A4: return check_a4(op);
        case EpistemicAxiom::A5Fin: return check_a5_fin(op);
    }
    throw DomainError("unknown epistemic axiom");
}

namespace {

Json symbolic_witness(std::initializer_list<std::pair<const char*, FinCofEvent>> fields) {
    Json j;
    for (const auto& [k, v] : fields) j[k] = fincof_to_json(v);
    return j;
}

}  // namespace

CheckResult check_epistemic_axiom(const SymbolicKnowledgeOperator& op, EpistemicAxiom axiom,
                                  const std::optional<WitnessFamily>& family) {
    WitnessFamily fam = family.value_or(WitnessFamily::paper_default());
    const bool family_quantified = axiom == EpistemicAxiom::A1Prime ||
                                   axiom == EpistemicAxiom::A1 || axiom == EpistemicAxiom::A5Fin;
    if (fam.probes.empty() && !(axiom == EpistemicAxiom::A5Fin && fam.cosingleton_index))
        throw DomainError(family_quantified
                              ? "symbolic operator needs a witness family for this axiom"
                              : "symbolic operator needs probe events for this axiom");

    switch (axiom) {
        case EpistemicAxiom::A1Prime:
            for (const auto& e : fam.probes)
                for (const auto& f : fam.probes) {
                    if (!is_subset_of(e, f)) continue;
                    if (!is_subset_of(op.apply(e), op.apply(f)))
                        return CheckResult::fail(symbolic_witness(
                            {{"E", e}, {"F", f}, {"op(E)", op.apply(e)}, {"op(F)", op.apply(f)}}));
                }
            return CheckResult::pass();
        case EpistemicAxiom::A1:
            for (const auto& e : fam.probes)
                for (const auto& f : fam.probes) {
                    FinCofEvent lhs = intersect(op.apply(e), op.apply(f));
                    FinCofEvent rhs = op.apply(intersect(e, f));
                    if (lhs != rhs)
                        return CheckResult::fail(symbolic_witness(
                            {{"E", e}, {"F", f}, {"op(E)&op(F)", lhs}, {"op(E&F)", rhs}}));
                }
            return CheckResult::pass();
        case EpistemicAxiom::A2:
            for (const auto& e : fam.probes)
                if (!is_subset_of(op.apply(e), e))
                    return CheckResult::fail(symbolic_witness({{"E", e}, {"op(E)", op.apply(e)}}));
            return CheckResult::pass();
        case EpistemicAxiom::A3:
            for (const auto& e : fam.probes)
                if (!is_subset_of(op.apply(e), op.apply(op.apply(e))))
                    return CheckResult::fail(symbolic_witness({{"E", e}, {"op(E)", op.apply(e)}}));
            return CheckResult::pass();
        case EpistemicAxiom::A4:
            for (const auto& e : fam.probes) {
                FinCofEvent not_ke = complement(op.apply(e));
                if (!is_subset_of(not_ke, op.apply(not_ke)))
                    return CheckResult::fail(symbolic_witness(
                        {{"E", e}, {"~op(E)", not_ke}, {"op(~op(E))", op.apply(not_ke)}}));
            }
            return CheckResult::pass();
        case EpistemicAxiom::A5Fin: {
            // op(N) = N is A5's empty-family instance.
            if (op.apply(FinCofEvent::naturals()) != FinCofEvent::naturals())
                return CheckResult::fail(symbolic_witness(
                    {{"E", FinCofEvent::naturals()},
                     {"op(E)", op.apply(FinCofEvent::naturals())}}));
            FinCofEvent lhs = FinCofEvent::naturals();
            FinCofEvent family_meet = FinCofEvent::naturals();
            Json desc;
            if (fam.cosingleton_index) {
                const FinCofEvent& index = *fam.cosingleton_index;
                lhs = op.intersect_over_cosingletons(index);
                family_meet = index.is_empty() ? FinCofEvent::naturals() : complement(index);
                desc["family"] = "cosingletons";
                desc["index_set"] = fincof_to_json(index);
            } else {
                for (const auto& e : fam.probes) {
                    lhs = intersect(lhs, op.apply(e));
                    family_meet = intersect(family_meet, e);
                }
                desc["family"] = "explicit";
            }
            FinCofEvent rhs = op.apply(family_meet);
            if (lhs != rhs) {
                desc["meet(E_j)"] = fincof_to_json(family_meet);
                desc["meet(op(E_j))"] = fincof_to_json(lhs);
                desc["op(meet(E_j))"] = fincof_to_json(rhs);
                return CheckResult::fail(desc);
            }
            return CheckResult::pass();
        }
    }
    throw DomainError("unknown epistemic axiom");
}

KripkeRelation synthesize_relation(const KnowledgeOperator& op) {
    const Universe& u = op.universe();
    const std::uint32_t events = 1u << u.size();
    std::vector<Event> adjacency;
    for (int w = 0; w < u.size(); ++w) {
        std::uint32_t meet = u.full_mask();  // intersection over the empty family is Omega
        for (std::uint32_t e = 0; e < events; ++e)
            if (op.apply_bits(e) & (1u << w)) meet &= e;
        adjacency.emplace_back(u, meet);
    }
    return KripkeRelation(u, std::move(adjacency));
}

std::vector<Event> fixed_points(const KnowledgeOperator& op) {
    const std::uint32_t events = 1u << op.universe().size();
    std::vector<Event> out;
    for (std::uint32_t e = 0; e < events; ++e)
        if (op.apply_bits(e) == e) out.emplace_back(op.universe(), e);
    return out;
}

EpistemicOperator builtin_epistemic_example(const std::string& name) {
    if (name == "K0") {
        Universe u({"1", "2", "3"});
        const std::uint32_t one = 0b001, two_three = 0b110;
        std::vector<std::uint32_t> table(8);
        for (std::uint32_t e = 0; e < 8; ++e) table[e] = (e == one || e == two_three) ? 0u : e;
        return KnowledgeOperator(u, std::move(table), Provenance::BuiltinExample);
    }
    if (name == "K1") return SymbolicKnowledgeOperator(SymbolicKnowledgeOperator::Rule::K1Cofinite);
    if (name == "K2") return SymbolicKnowledgeOperator(SymbolicKnowledgeOperator::Rule::K2Cofinite);
    throw DomainError("unknown builtin epistemic example: " + name);
}

const char* to_string(RelationProperty p) {
    switch (p) {
        case RelationProperty::Reflexive: return "reflexive";
        case RelationProperty::Transitive: return "transitive";
        case RelationProperty::Symmetric: return "symmetric";
        case RelationProperty::Euclidean: return "euclidean";
        case RelationProperty::Equivalence: return "equivalence";
    }
    return "?";
}

const char* to_string(EpistemicAxiom a) {
    switch (a) {
        case EpistemicAxiom::A1Prime: return "A1'";
        case EpistemicAxiom::A1: return "A1";
        case EpistemicAxiom::A2: return "A2";
        case EpistemicAxiom::A3: return "A3";
        case EpistemicAxiom::A4: return "A4";
        case EpistemicAxiom::A5Fin: return "A5fin";
    }
    return "?";
}

RelationProperty relation_property_from_string(const std::string& s) {
    for (auto p : {RelationProperty::Reflexive, RelationProperty::Transitive,
                   RelationProperty::Symmetric, RelationProperty::Euclidean,
                   RelationProperty::Equivalence})
        if (s == to_string(p)) return p;
    throw FormatError("unknown relation property: " + s);
}

EpistemicAxiom epistemic_axiom_from_string(const std::string& s) {
    for (auto a : {EpistemicAxiom::A1Prime, EpistemicAxiom::A1, EpistemicAxiom::A2,
                   EpistemicAxiom::A3, EpistemicAxiom::A4, EpistemicAxiom::A5Fin})
        if (s == to_string(a)) return a;
    if (s == "A1p") return EpistemicAxiom::A1Prime;
    throw FormatError("unknown epistemic axiom: " + s);
}

}  // namespace setlogic
