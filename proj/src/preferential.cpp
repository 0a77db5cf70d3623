#include "setlogic/preferential.hpp"

#include "setlogic/json_util.hpp"

namespace setlogic {

PreferentialFrame::PreferentialFrame(Universe universe, std::vector<WorldOrder> orders)
    : universe_(std::move(universe)), orders_(std::move(orders)) {
    const int n = universe_.size();
    if (static_cast<int>(orders_.size()) != n)
        throw DomainError("frame must define an order for every world");
    for (int w = 0; w < n; ++w) {
        const WorldOrder& ord = orders_[w];
        if (ord.domain.universe() != universe_)
            throw DomainError("order domain universe mismatch");
        if (static_cast<int>(ord.leq.size()) != n)
            throw DomainError("order relation must have one row per world");
        const std::uint32_t dom = ord.domain.bits();
        std::uint32_t left = 0;
        for (int x = 0; x < n; ++x) {
            if (ord.leq[x] & ~universe_.full_mask())
                throw DomainError("order row outside universe");
            if (ord.leq[x] != 0) left |= 1u << x;
            if (ord.leq[x] & ~dom)
                throw DomainError("order pair leaves the domain at world " +
                                  universe_.world_name(w));
            if (ord.leq[x] != 0 && !((dom >> x) & 1u))
                throw DomainError("order pair leaves the domain at world " +
                                  universe_.world_name(w));
        }
        if (left != dom)
            throw DomainError("stored domain disagrees with the relation's domain at world " +
                              universe_.world_name(w));
        for (int x = 0; x < n; ++x) {
            if (((dom >> x) & 1u) && !((ord.leq[x] >> x) & 1u))
                throw DomainError("order not reflexive at world " + universe_.world_name(w));
            for (int y = 0; y < n; ++y) {
                if (!((ord.leq[x] >> y) & 1u)) continue;
                if (ord.leq[y] & ~ord.leq[x])  // some z with y<=z but not x<=z
                    throw DomainError("order not transitive at world " + universe_.world_name(w));
            }
        }
    }
}

bool PreferentialFrame::operator==(const PreferentialFrame& other) const {
    if (universe_ != other.universe_ || orders_.size() != other.orders_.size()) return false;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i].domain != other.orders_[i].domain || orders_[i].leq != other.orders_[i].leq)
            return false;
    return true;
}

SelectionFunction derive_preferential_selection(const PreferentialFrame& frame) {
    const Universe& u = frame.universe();
    const int n = u.size();
    const std::uint32_t events = 1u << n;
    std::vector<std::uint32_t> table(static_cast<std::size_t>(n) << n, 0u);
    for (int w = 0; w < n; ++w) {
        const std::uint32_t dom = frame.domain(w).bits();
        for (std::uint32_t h = 0; h < events; ++h) {
            std::uint32_t candidates = h & dom;
            std::uint32_t minimal = 0;
            for (int x = 0; x < n; ++x) {
                if (!((candidates >> x) & 1u)) continue;
                bool dominated = false;
                for (int y = 0; y < n && !dominated; ++y)
                    if (((h >> y) & 1u) && frame.strictly_less(w, y, x)) dominated = true;
                if (!dominated) minimal |= 1u << x;
            }
            table[(static_cast<std::size_t>(w) << n) | h] = minimal;
        }
    }
    return SelectionFunction(u, std::move(table));
}

namespace {

Json frame_witness(const Universe& u, int world,
                   std::initializer_list<std::pair<const char*, int>> worlds) {
    Json j;
    j["world"] = u.world_name(world);
    for (const auto& [k, w] : worlds) j[k] = u.world_name(w);
    return j;
}

}  // namespace

CheckResult check_preferential_property(const PreferentialFrame& frame,
                                        PreferentialProperty prop) {
    const Universe& u = frame.universe();
    const int n = u.size();
    switch (prop) {
        case PreferentialProperty::P1:
            for (int w = 0; w < n; ++w) {
                if (!frame.domain(w).contains(w)) {
                    Json j;
                    j["world"] = u.world_name(w);
                    j["reason"] = "world outside its own domain";
                    return CheckResult::fail(j);
                }
                for (int x = 0; x < n; ++x)
                    if (x != w && frame.domain(w).contains(x) && !frame.strictly_less(w, w, x))
                        return CheckResult::fail(frame_witness(u, w, {{"other", x}}));
            }
            return CheckResult::pass();
        case PreferentialProperty::P2:
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < n; ++x)
                    for (int y = x + 1; y < n; ++y)
                        if (frame.domain(w).contains(x) && frame.domain(w).contains(y) &&
                            !frame.leq(w, x, y) && !frame.leq(w, y, x))
                            return CheckResult::fail(frame_witness(u, w, {{"x", x}, {"y", y}}));
            return CheckResult::pass();
        case PreferentialProperty::P3:
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < n; ++x)
                    for (int y = x + 1; y < n; ++y) {
                        if (!frame.domain(w).contains(x) || !frame.domain(w).contains(y)) continue;
                        bool xy = frame.leq(w, x, y), yx = frame.leq(w, y, x);
                        if (xy && yx) {
                            Json j = frame_witness(u, w, {{"x", x}, {"y", y}});
                            j["reason"] = "antisymmetry fails";
                            return CheckResult::fail(j);
                        }
                        if (!xy && !yx) {
                            Json j = frame_witness(u, w, {{"x", x}, {"y", y}});
                            j["reason"] = "totality fails";
                            return CheckResult::fail(j);
                        }
                    }
            return CheckResult::pass();
        case PreferentialProperty::P4:
            for (int w = 0; w < n; ++w)
                if (!frame.domain(w).is_full()) {
                    Json j;
                    j["world"] = u.world_name(w);
                    j["domain"] = event_to_json(frame.domain(w));
                    return CheckResult::fail(j);
                }
            return CheckResult::pass();
        case PreferentialProperty::Modular:
            for (int w = 0; w < n; ++w)
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        if (!frame.strictly_less(w, x, y)) continue;
                        for (int z = 0; z < n; ++z)
                            if (frame.domain(w).contains(z) && !frame.strictly_less(w, z, y) &&
                                !frame.strictly_less(w, x, z))
                                return CheckResult::fail(
                                    frame_witness(u, w, {{"x", x}, {"y", y}, {"z", z}}));
                    }
            return CheckResult::pass();
    }
    throw DomainError("unknown preferential property");
}

Event domain_of_world(const ConditionalOperator& op, int world) {
    const Universe& u = op.universe();
    if (world < 0 || world >= u.size()) throw DomainError("world index out of range");
    std::uint32_t dom = 0;
    for (int x = 0; x < u.size(); ++x)
        if (!((op.apply_bits(1u << x, 0u) >> world) & 1u)) dom |= 1u << x;
    return Event(u, dom);
}

PreferentialFrame synthesize_preorder(const ConditionalOperator& op,
                                      const std::vector<ConditionalAxiom>& extra_axioms) {
    std::vector<ConditionalAxiom> asserted = {ConditionalAxiom::C1,  ConditionalAxiom::C2,
                                              ConditionalAxiom::C5,  ConditionalAxiom::C6,
                                              ConditionalAxiom::C9,  ConditionalAxiom::C10};
    bool complete = false;
    for (ConditionalAxiom a : extra_axioms) {
        if (a != ConditionalAxiom::C3 && a != ConditionalAxiom::C4 &&
            a != ConditionalAxiom::C7 && a != ConditionalAxiom::C8)
            throw DomainError(std::string("axiom ") + to_string(a) +
                              " cannot be asserted for order synthesis");
        if (a == ConditionalAxiom::C7) complete = true;
        asserted.push_back(a);
    }
    for (ConditionalAxiom a : asserted) {
        CheckResult r = check_conditional_axiom(op, a);
        if (!r.ok) throw AxiomFailure(to_string(a), r.witness);
    }

    const Universe& u = op.universe();
    const int n = u.size();
    std::vector<WorldOrder> orders;
    orders.reserve(n);
    for (int w = 0; w < n; ++w) {
        const std::uint32_t dom = domain_of_world(op, w).bits();
        std::vector<std::uint32_t> leq(n, 0u);
        for (int x = 0; x < n; ++x) {
            if (!((dom >> x) & 1u)) continue;
            for (int y = 0; y < n; ++y) {
                if (!((dom >> y) & 1u)) continue;
                const std::uint32_t pair = (1u << x) | (1u << y);
                if (((op.apply_bits(pair, 1u << x) >> w) & 1u) &&
                    !((op.apply_bits(pair, 0u) >> w) & 1u))
                    leq[x] |= 1u << y;
            }
        }
        if (complete) {
            // Totalize: x <= y iff not y < x, preserving the strict part.
            std::vector<std::uint32_t> strict(n, 0u);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (((leq[x] >> y) & 1u) && !((leq[y] >> x) & 1u)) strict[x] |= 1u << y;
            for (int x = 0; x < n; ++x) {
                if (!((dom >> x) & 1u)) continue;
                std::uint32_t row = 0;
                for (int y = 0; y < n; ++y)
                    if (((dom >> y) & 1u) && !((strict[y] >> x) & 1u)) row |= 1u << y;
                leq[x] = row;
            }
        }
        orders.push_back(WorldOrder{Event(u, dom), std::move(leq)});
    }
    return PreferentialFrame(u, std::move(orders));
}

PreferentialFrame complete_modular_order(const PreferentialFrame& frame) {
    CheckResult mod = check_preferential_property(frame, PreferentialProperty::Modular);
    if (!mod.ok) throw AxiomFailure("modular", mod.witness);
    const Universe& u = frame.universe();
    const int n = u.size();
    std::vector<WorldOrder> orders;
    orders.reserve(n);
    for (int w = 0; w < n; ++w) {
        const std::uint32_t dom = frame.domain(w).bits();
        std::vector<std::uint32_t> leq(n, 0u);
        for (int x = 0; x < n; ++x) {
            if (!((dom >> x) & 1u)) continue;
            for (int y = 0; y < n; ++y)
                if (((dom >> y) & 1u) && !frame.strictly_less(w, y, x)) leq[x] |= 1u << y;
        }
        orders.push_back(WorldOrder{Event(u, dom), std::move(leq)});
    }
    return PreferentialFrame(u, std::move(orders));
}

bool lewis_evaluate(const PreferentialFrame& frame, int world, const Event& h, const Event& e) {
    const Universe& u = frame.universe();
    if (h.universe() != u || e.universe() != u) throw DomainError("event universe mismatch");
    if (world < 0 || world >= u.size()) throw DomainError("world index out of range");
    const int n = u.size();
    const std::uint32_t dom = frame.domain(world).bits();
    const std::uint32_t hd = h.bits() & dom;
    for (int w1 = 0; w1 < n; ++w1) {
        if (!((hd >> w1) & 1u)) continue;
        bool matched = false;
        for (int w2 = 0; w2 < n && !matched; ++w2) {
            if (!frame.leq(world, w2, w1)) continue;
            if (!((h.bits() >> w2) & 1u) || !((e.bits() >> w2) & 1u)) continue;
            // Weak comparison: worlds tied with w2 count as "sufficiently
            // close", which is what makes this agree with minimal-world
            // selection on finite frames.
            bool tail_ok = true;
            for (int w3 = 0; w3 < n && tail_ok; ++w3)
                if (frame.leq(world, w3, w2) && ((h.bits() >> w3) & 1u) &&
                    !((e.bits() >> w3) & 1u))
                    tail_ok = false;
            matched = tail_ok;
        }
        if (!matched) return false;
    }
    return true;
}

const char* to_string(PreferentialProperty p) {
    switch (p) {
        case PreferentialProperty::P1: return "P1";
        case PreferentialProperty::P2: return "P2";
        case PreferentialProperty::P3: return "P3";
        case PreferentialProperty::P4: return "P4";
        case PreferentialProperty::Modular: return "modular";
    }
    return "?";
}

PreferentialProperty preferential_property_from_string(const std::string& s) {
    for (auto p : {PreferentialProperty::P1, PreferentialProperty::P2, PreferentialProperty::P3,
                   PreferentialProperty::P4, PreferentialProperty::Modular})
        if (s == to_string(p)) return p;
    throw FormatError("unknown preferential property: " + s);
}

}  // namespace setlogic
