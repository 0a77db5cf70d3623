#pragma once

// Kripke relations, the induced knowledge operator K(E) = {w : K(w) <= E},
// the A-axiom checkers, fixed points, and the relation synthesis
// K(w) = /\ {E : w in K'(E)}.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "setlogic/sets.hpp"

namespace setlogic {

using Json = nlohmann::ordered_json;

// Shared result shape for every property/axiom check: ok, or a first
// violating witness in canonical enumeration order.
struct CheckResult {
    bool ok = true;
    Json witness;  // null when ok

    static CheckResult pass() { return CheckResult{true, Json()}; }
    static CheckResult fail(Json w) { return CheckResult{false, std::move(w)}; }
};

class KripkeRelation {
public:
    KripkeRelation(Universe universe, std::vector<Event> adjacency);

    static KripkeRelation from_edges(const Universe& u,
                                     const std::vector<std::pair<std::string, std::string>>& edges);
    static KripkeRelation identity(const Universe& u);
    static KripkeRelation empty(const Universe& u);

    const Universe& universe() const { return universe_; }
    const Event& adjacency(int world) const { return adjacency_.at(world); }
    bool relates(int from, int to) const { return adjacency_.at(from).contains(to); }

    bool operator==(const KripkeRelation& other) const;
    bool operator!=(const KripkeRelation& other) const { return !(*this == other); }

private:
    Universe universe_;
    std::vector<Event> adjacency_;  // one row per world, possibly empty
};

enum class RelationProperty { Reflexive, Transitive, Symmetric, Euclidean, Equivalence };

enum class Provenance { DerivedFromRelation, User, BuiltinExample };

// Total table from each of the 2^n events to an event. Equality is table
// equality; universes capped at kMaxKnowledgeTableSize worlds.
class KnowledgeOperator {
public:
    KnowledgeOperator(Universe universe, std::vector<std::uint32_t> table,
                      Provenance provenance = Provenance::User);

    const Universe& universe() const { return universe_; }
    const std::vector<std::uint32_t>& table() const { return table_; }
    Provenance provenance() const { return provenance_; }

    Event apply(const Event& e) const;
    std::uint32_t apply_bits(std::uint32_t bits) const { return table_[bits]; }

    bool operator==(const KnowledgeOperator& other) const;
    bool operator!=(const KnowledgeOperator& other) const { return !(*this == other); }

private:
    Universe universe_;
    std::vector<std::uint32_t> table_;
    Provenance provenance_;
};

// The paper's two infinite-universe operators over fin/cof events:
//   K1-cofinite: E -> E  if E cofinite, else {}
//   K2-cofinite: E -> N  if E cofinite, else {}
class SymbolicKnowledgeOperator {
public:
    enum class Rule { K1Cofinite, K2Cofinite };

    explicit SymbolicKnowledgeOperator(Rule rule) : rule_(rule) {}

    Rule rule() const { return rule_; }
    std::string rule_name() const;

    FinCofEvent apply(const FinCofEvent& e) const;

    // Closed form of /\_{j in J} apply(~{j}), the family intersection used by
    // the A5 witness-family check; J may be cofinite (an infinite family).
    FinCofEvent intersect_over_cosingletons(const FinCofEvent& index_set) const;

private:
    Rule rule_;
};

enum class EpistemicAxiom { A1Prime, A1, A2, A3, A4, A5Fin };

// Probe family for symbolic checks. `probes` drive A1'/A1/A2/A3/A4; the
// A5 family check uses the co-singleton family {~{j} : j in cosingleton_index}
// when present, else treats `probes` as the (finite) family.
struct WitnessFamily {
    std::vector<FinCofEvent> probes;
    std::optional<FinCofEvent> cosingleton_index;

    // The paper's family E_j = ~{j}: probes j = 1..10 plus the infinite
    // co-singleton family over every j except 1 (whose intersection is {1}).
    static WitnessFamily paper_default();
};

KnowledgeOperator derive_knowledge_operator(const KripkeRelation& rel);

CheckResult check_relation_property(const KripkeRelation& rel, RelationProperty prop);

CheckResult check_epistemic_axiom(const KnowledgeOperator& op, EpistemicAxiom axiom);
CheckResult check_epistemic_axiom(const SymbolicKnowledgeOperator& op, EpistemicAxiom axiom,
                                  const std::optional<WitnessFamily>& family = std::nullopt);

KripkeRelation synthesize_relation(const KnowledgeOperator& op);

// { E : op(E) = E }, in canonical (increasing bit pattern) order.
std::vector<Event> fixed_points(const KnowledgeOperator& op);

using EpistemicOperator = std::variant<KnowledgeOperator, SymbolicKnowledgeOperator>;

// K0 (table on {1,2,3}), K1, K2 exactly as in the paper's examples.
EpistemicOperator builtin_epistemic_example(const std::string& name);

const char* to_string(RelationProperty p);
const char* to_string(EpistemicAxiom a);
RelationProperty relation_property_from_string(const std::string& s);
EpistemicAxiom epistemic_axiom_from_string(const std::string& s);

}  // namespace setlogic
