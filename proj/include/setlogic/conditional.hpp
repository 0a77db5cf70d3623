#pragma once

// Set-theoretic selection functions, the induced binary operator
// H ~> E = {w : f(w,H) <= E}, the S'/C' checkers, the selection synthesis
// f(w,H) = /\ {E : w in H ~> E}, set-level reachability, and the two
// symbolic counterexample operators over fin/cof events.

#include <optional>
#include <variant>
#include <vector>

#include "setlogic/epistemic.hpp"
#include "setlogic/sets.hpp"

namespace setlogic {

// Total table over Omega x 2^Omega. Row index is (world << n) | H.
class SelectionFunction {
public:
    SelectionFunction(Universe universe, std::vector<std::uint32_t> table);

    const Universe& universe() const { return universe_; }
    const std::vector<std::uint32_t>& table() const { return table_; }
    Event apply(int world, const Event& h) const;
    std::uint32_t apply_bits(int world, std::uint32_t h) const {
        return table_[(static_cast<std::size_t>(world) << universe_.size()) | h];
    }

    bool operator==(const SelectionFunction& other) const;
    bool operator!=(const SelectionFunction& other) const { return !(*this == other); }

private:
    Universe universe_;
    std::vector<std::uint32_t> table_;
};

// Total table over 2^Omega x 2^Omega. Row index is (H << n) | E.
class ConditionalOperator {
public:
    ConditionalOperator(Universe universe, std::vector<std::uint32_t> table,
                        Provenance provenance = Provenance::User);

    const Universe& universe() const { return universe_; }
    const std::vector<std::uint32_t>& table() const { return table_; }
    Provenance provenance() const { return provenance_; }
    Event apply(const Event& h, const Event& e) const;
    std::uint32_t apply_bits(std::uint32_t h, std::uint32_t e) const {
        return table_[(static_cast<std::size_t>(h) << universe_.size()) | e];
    }

    bool operator==(const ConditionalOperator& other) const;
    bool operator!=(const ConditionalOperator& other) const { return !(*this == other); }

private:
    Universe universe_;
    std::vector<std::uint32_t> table_;
    Provenance provenance_;
};

enum class SelectionCondition { S1, S2, S3, S4, S5, S6, S7, S8, S9 };

enum class ConditionalAxiom { C0Fin, C0Family, C1, C2, C3, C4, C5, C6, C7, C8, C9, C10 };

namespace detail {

// Example-5 semantics, shared between the public fin/cof operator and the
// compact bitmask representation used by exhaustive probe grids.
// For w in H membership follows E; for w outside H it requires
// H & ~E empty, or H infinite with H & ~E finite.
template <class FC>
bool example5_outside_member(const FC& h, const FC& e) {
    FC h_not_e = intersect(h, complement(e));
    return h_not_e.is_empty() || (h.is_cofinite() && !h_not_e.is_cofinite());
}

template <class FC>
FC example5_apply(const FC& h, const FC& e) {
    FC inside = intersect(h, e);
    return example5_outside_member(h, e) ? unite(inside, complement(h)) : inside;
}

}  // namespace detail

// The paper's two infinite-universe conditional operators.
//   example5:    evaluable at any natural-number world, with closed-form
//                event results.
//   omega-lewis: Lewis evaluation on the frame {0,1,2,...,infinity} ordered
//                by i+1 closer to infinity than i; only the designated world
//                infinity is queryable.
class SymbolicConditionalOperator {
public:
    enum class Rule { Example5, OmegaLewis };

    explicit SymbolicConditionalOperator(Rule rule) : rule_(rule) {}

    Rule rule() const { return rule_; }
    std::string rule_name() const;

    // example5 only.
    FinCofEvent apply(const FinCofEvent& h, const FinCofEvent& e) const;
    bool member(std::uint64_t world, const FinCofEvent& h, const FinCofEvent& e) const;
    // /\_{j in J} (H ~> ~{j}) in closed form; J may be cofinite.
    FinCofEvent intersect_over_cosingleton_consequents(const FinCofEvent& h,
                                                       const FinCofEvent& index_set) const;

    // omega-lewis only; all evaluation happens at the designated world.
    bool member_at_infinity(const FinCofEvent& h, const FinCofEvent& e) const;
    // The order-minimality reading of the same frame (selects the closest
    // H-world when one exists); diverges from Lewis evaluation on cofinite H.
    bool order_member_at_infinity(const FinCofEvent& h, const FinCofEvent& e) const;
    bool forall_cosingleton_at_infinity(const FinCofEvent& h,
                                        const FinCofEvent& index_set) const;

private:
    void require_rule(Rule r, const char* what) const;

    Rule rule_;
};

// Probes for symbolic conditional axiom checks: event tuples are drawn from
// `events`; the C0' family check uses the co-singleton family over
// `cosingleton_index` with antecedent `antecedent`.
struct ConditionalProbes {
    std::vector<FinCofEvent> events;
    std::optional<FinCofEvent> cosingleton_index;
    std::optional<FinCofEvent> antecedent;

    static ConditionalProbes paper_default();
};

ConditionalOperator derive_conditional_operator(const SelectionFunction& f);

CheckResult check_selection_condition(const SelectionFunction& f, SelectionCondition cond);

CheckResult check_conditional_axiom(const ConditionalOperator& op, ConditionalAxiom axiom);
CheckResult check_conditional_axiom(const SymbolicConditionalOperator& op, ConditionalAxiom axiom,
                                    const std::optional<ConditionalProbes>& probes = std::nullopt);

SelectionFunction synthesize_selection_function(const ConditionalOperator& op);

// Least fixed point of R = {start} u { w' : w' in f(w'', H), w'' in R, any H }.
Event reachable_worlds(const SelectionFunction& f, int start_world);

using ConditionalOperatorAny = std::variant<ConditionalOperator, SymbolicConditionalOperator>;

SymbolicConditionalOperator builtin_conditional_example(const std::string& name);

const char* to_string(SelectionCondition c);
const char* to_string(ConditionalAxiom a);
SelectionCondition selection_condition_from_string(const std::string& s);
ConditionalAxiom conditional_axiom_from_string(const std::string& s);

}  // namespace setlogic
