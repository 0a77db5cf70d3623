#include "setlogic/sets.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace setlogic {

Universe::Universe(std::vector<std::string> worlds) {
    if (worlds.empty()) throw DomainError("universe must contain at least one world");
    if (static_cast<int>(worlds.size()) > kMaxUniverseSize)
        throw DomainError("universe too large: " + std::to_string(worlds.size()) +
                          " worlds exceeds cap of " + std::to_string(kMaxUniverseSize));
    std::unordered_set<std::string> seen;
    for (const auto& w : worlds) {
        if (w.empty()) throw DomainError("world names must be nonempty");
        if (!seen.insert(w).second) throw DomainError("duplicate world name: " + w);
    }
    data_ = std::make_shared<const Data>(Data{std::move(worlds)});
}

std::optional<int> Universe::index_of(const std::string& name) const {
    const auto& names = data_->names;
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

int Universe::require_index(const std::string& name) const {
    if (auto i = index_of(name)) return *i;
    throw DomainError("unknown world name: " + name);
}

bool Universe::operator==(const Universe& other) const {
    return data_ == other.data_ || data_->names == other.data_->names;
}

Event::Event(Universe universe, std::uint32_t bits) : universe_(std::move(universe)), bits_(bits) {
    if (bits_ & ~universe_.full_mask())
        throw DomainError("event bits outside universe");
}

Event Event::from_names(const Universe& u, const std::vector<std::string>& names) {
    std::uint32_t bits = 0;
    for (const auto& n : names) bits |= 1u << u.require_index(n);
    return Event(u, bits);
}

int Event::count() const { return std::popcount(bits_); }

std::vector<std::string> Event::names() const {
    std::vector<std::string> out;
    for (int i = 0; i < universe_.size(); ++i)
        if (contains(i)) out.push_back(universe_.world_name(i));
    return out;
}

void Event::require_same_universe(const Event& other) const {
    if (universe_ != other.universe_) throw DomainError("events belong to different universes");
}

Event Event::unite(const Event& other) const {
    require_same_universe(other);
    return Event(universe_, bits_ | other.bits_);
}

Event Event::intersect(const Event& other) const {
    require_same_universe(other);
    return Event(universe_, bits_ & other.bits_);
}

Event Event::difference(const Event& other) const {
    require_same_universe(other);
    return Event(universe_, bits_ & ~other.bits_);
}

bool Event::is_subset_of(const Event& other) const {
    require_same_universe(other);
    return (bits_ & ~other.bits_) == 0;
}

bool Event::operator==(const Event& other) const {
    return universe_ == other.universe_ && bits_ == other.bits_;
}

namespace {

std::vector<std::uint64_t> canonical_support(std::vector<std::uint64_t> support) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return support;
}

std::vector<std::uint64_t> support_union(const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::uint64_t> support_intersection(const std::vector<std::uint64_t>& a,
                                                const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::uint64_t> support_difference(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

FinCofEvent::FinCofEvent(Kind kind, std::vector<std::uint64_t> support)
    : kind_(kind), support_(canonical_support(std::move(support))) {}

FinCofEvent FinCofEvent::finite(std::vector<std::uint64_t> support) {
    return FinCofEvent(Kind::Finite, std::move(support));
}

FinCofEvent FinCofEvent::cofinite(std::vector<std::uint64_t> support) {
    return FinCofEvent(Kind::Cofinite, std::move(support));
}

bool FinCofEvent::contains(std::uint64_t k) const {
    bool in_support = std::binary_search(support_.begin(), support_.end(), k);
    return kind_ == Kind::Finite ? in_support : !in_support;
}

std::uint64_t FinCofEvent::max_element() const {
    if (!is_finite() || support_.empty())
        throw DomainError("max_element requires a finite nonempty set");
    return support_.back();
}

bool FinCofEvent::operator==(const FinCofEvent& other) const {
    return kind_ == other.kind_ && support_ == other.support_;
}

FinCofEvent complement(const FinCofEvent& e) {
    return e.is_finite() ? FinCofEvent::cofinite(e.support()) : FinCofEvent::finite(e.support());
}

FinCofEvent unite(const FinCofEvent& a, const FinCofEvent& b) {
    if (a.is_finite() && b.is_finite())
        return FinCofEvent::finite(support_union(a.support(), b.support()));
    if (a.is_cofinite() && b.is_cofinite())
        return FinCofEvent::cofinite(support_intersection(a.support(), b.support()));
    // finite F with cofinite ~S: the union misses exactly S \ F.
    const FinCofEvent& fin = a.is_finite() ? a : b;
    const FinCofEvent& cof = a.is_finite() ? b : a;
    return FinCofEvent::cofinite(support_difference(cof.support(), fin.support()));
}

FinCofEvent intersect(const FinCofEvent& a, const FinCofEvent& b) {
    return complement(unite(complement(a), complement(b)));
}

FinCofEvent difference(const FinCofEvent& a, const FinCofEvent& b) {
    return intersect(a, complement(b));
}

bool is_subset_of(const FinCofEvent& a, const FinCofEvent& b) {
    if (a.is_finite() && b.is_finite())
        return std::includes(b.support().begin(), b.support().end(),
                             a.support().begin(), a.support().end());
    if (a.is_finite())  // a finite, b cofinite: no member of a may be excluded from b.
        return support_intersection(a.support(), b.support()).empty();
    if (b.is_finite()) return false;  // infinite sets never fit inside finite ones.
    return std::includes(a.support().begin(), a.support().end(),
                         b.support().begin(), b.support().end());
}

FinCofEvent fincof_op(FinCofOp op, const std::vector<FinCofEvent>& args) {
    if (args.empty()) throw DomainError("fincof_op requires at least one argument");
    switch (op) {
        case FinCofOp::Complement:
            if (args.size() != 1) throw DomainError("complement takes exactly one argument");
            return complement(args[0]);
        case FinCofOp::Union: {
            FinCofEvent acc = args[0];
            for (std::size_t i = 1; i < args.size(); ++i) acc = unite(acc, args[i]);
            return acc;
        }
        case FinCofOp::Intersect: {
            FinCofEvent acc = args[0];
            for (std::size_t i = 1; i < args.size(); ++i) acc = intersect(acc, args[i]);
            return acc;
        }
    }
    throw DomainError("unknown fincof op");
}

SetExpr SetExpr::name(std::string n) {
    SetExpr e;
    e.kind_ = Kind::Name;
    e.name_ = std::move(n);
    return e;
}

SetExpr SetExpr::neg(SetExpr child) {
    SetExpr e;
    e.kind_ = Kind::Neg;
    e.children_.push_back(std::move(child));
    return e;
}

SetExpr SetExpr::union_of(SetExpr a, SetExpr b) {
    SetExpr e;
    e.kind_ = Kind::Union;
    e.children_.push_back(std::move(a));
    e.children_.push_back(std::move(b));
    return e;
}

SetExpr SetExpr::intersect_of(SetExpr a, SetExpr b) {
    SetExpr e;
    e.kind_ = Kind::Intersect;
    e.children_.push_back(std::move(a));
    e.children_.push_back(std::move(b));
    return e;
}

Event evaluate_set_expr(const SetExpr& expr, const std::vector<SetBinding>& bindings) {
    switch (expr.kind()) {
        case SetExpr::Kind::Name:
            for (const auto& b : bindings)
                if (b.name == expr.event_name()) return b.event;
            throw DomainError("unbound event name: " + expr.event_name());
        case SetExpr::Kind::Neg:
            return evaluate_set_expr(expr.children()[0], bindings).complement();
        case SetExpr::Kind::Union:
            return evaluate_set_expr(expr.children()[0], bindings)
                .unite(evaluate_set_expr(expr.children()[1], bindings));
        case SetExpr::Kind::Intersect:
            return evaluate_set_expr(expr.children()[0], bindings)
                .intersect(evaluate_set_expr(expr.children()[1], bindings));
    }
    throw DomainError("unknown set expression kind");
}

}  // namespace setlogic
