#pragma once

// Preferential frames: a per-world preorder over a per-world domain, the
// induced minimal-world selection function, the P-property checkers, the
// order synthesis from a conditional operator, modular-order completion,
// and Lewis's alternative evaluation on finite frames.

#include <vector>

#include "setlogic/conditional.hpp"

namespace setlogic {

// Per-world order data: `leq` row x holds the mask {y : x <= y}.
struct WorldOrder {
    Event domain;
    std::vector<std::uint32_t> leq;
};

class PreferentialFrame {
public:
    // Validates at construction: pairs must stay inside the stored domain,
    // the domain must equal the relation's left projection, and the relation
    // must be reflexive and transitive on it.
    PreferentialFrame(Universe universe, std::vector<WorldOrder> orders);

    const Universe& universe() const { return universe_; }
    const Event& domain(int world) const { return orders_.at(world).domain; }
    const WorldOrder& order(int world) const { return orders_.at(world); }
    bool leq(int world, int x, int y) const { return (orders_[world].leq[x] >> y) & 1u; }
    bool strictly_less(int world, int x, int y) const {
        return leq(world, x, y) && !leq(world, y, x);
    }

    bool operator==(const PreferentialFrame& other) const;
    bool operator!=(const PreferentialFrame& other) const { return !(*this == other); }

private:
    Universe universe_;
    std::vector<WorldOrder> orders_;
};

enum class PreferentialProperty { P1, P2, P3, P4, Modular };

// Thrown when an operation's asserted axiom or precondition fails; carries
// the first violating witness.
struct AxiomFailure : Error {
    AxiomFailure(std::string which, Json witness_json)
        : Error("asserted property failed: " + which),
          axiom(std::move(which)),
          witness(std::move(witness_json)) {}

    std::string axiom;
    Json witness;
};

// f(w,H) = { x in H & domain(w) : no y strictly closer to w lies in H }.
SelectionFunction derive_preferential_selection(const PreferentialFrame& frame);

CheckResult check_preferential_property(const PreferentialFrame& frame,
                                        PreferentialProperty prop);

// Theorem-6 style synthesis: x <= y at w iff w in {x,y} ~> {x} and
// w not in {x,y} ~> {} , with domains per W_w = {x : w not in {x} ~> {}}.
// The base axioms C1', C2', C5', C6', C9', C10' are always validated first;
// `extra_axioms` asserts any of C3', C4', C7', C8' in addition. When C7' is
// asserted the modular strict order is completed to a total preorder.
PreferentialFrame synthesize_preorder(const ConditionalOperator& op,
                                      const std::vector<ConditionalAxiom>& extra_axioms = {});

// W_w per the synthesis lemma.
Event domain_of_world(const ConditionalOperator& op, int world);

// Totalizes each world's order around its strict part: x <= y iff not y < x.
// Requires every strict part to be modular (witness triple otherwise).
PreferentialFrame complete_modular_order(const PreferentialFrame& frame);

// True iff every H-world in w's domain is matched by a weakly-closer world
// w2 in H & E such that every H-world weakly closer than w2 satisfies E.
// On finite frames this agrees with f(w,H) <= E.
bool lewis_evaluate(const PreferentialFrame& frame, int world, const Event& h, const Event& e);

const char* to_string(PreferentialProperty p);
PreferentialProperty preferential_property_from_string(const std::string& s);

}  // namespace setlogic
