#pragma once

// Event algebra over small finite universes (bit-vector events) plus a
// symbolic finite/cofinite event algebra over the naturals.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace setlogic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files / texts.
struct FormatError : Error {
    using Error::Error;
};

// Violated preconditions: caps, unknown names, universe mismatches.
struct DomainError : Error {
    using Error::Error;
};

// Caps. Universe size is bounded so that 2^n event enumeration stays feasible;
// full operator tables carry stricter bounds (see epistemic/conditional).
inline constexpr int kMaxUniverseSize = 24;
inline constexpr int kMaxKnowledgeTableSize = 16;
inline constexpr int kMaxSelectionTableSize = 8;

class Universe {
public:
    explicit Universe(std::vector<std::string> worlds);

    int size() const { return static_cast<int>(data_->names.size()); }
    const std::vector<std::string>& world_names() const { return data_->names; }
    const std::string& world_name(int index) const { return data_->names.at(index); }
    // Index of a world name, or nullopt when unknown.
    std::optional<int> index_of(const std::string& name) const;
    int require_index(const std::string& name) const;
    std::uint32_t full_mask() const { return size() == 32 ? ~0u : ((1u << size()) - 1u); }

    bool operator==(const Universe& other) const;
    bool operator!=(const Universe& other) const { return !(*this == other); }

private:
    struct Data {
        std::vector<std::string> names;
    };
    std::shared_ptr<const Data> data_;
};

// A subset of a Universe. Bit i corresponds to world i in universe order;
// that order is also the canonical serialization order. Pure value type.
class Event {
public:
    Event(Universe universe, std::uint32_t bits);

    static Event empty(const Universe& u) { return Event(u, 0u); }
    static Event full(const Universe& u) { return Event(u, u.full_mask()); }
    static Event from_names(const Universe& u, const std::vector<std::string>& names);

    const Universe& universe() const { return universe_; }
    std::uint32_t bits() const { return bits_; }
    bool contains(int world_index) const { return (bits_ >> world_index) & 1u; }
    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == universe_.full_mask(); }
    int count() const;
    std::vector<std::string> names() const;

    Event complement() const { return Event(universe_, ~bits_ & universe_.full_mask()); }
    Event unite(const Event& other) const;
    Event intersect(const Event& other) const;
    Event difference(const Event& other) const;
    bool is_subset_of(const Event& other) const;

    bool operator==(const Event& other) const;
    bool operator!=(const Event& other) const { return !(*this == other); }

private:
    void require_same_universe(const Event& other) const;

    Universe universe_;
    std::uint32_t bits_;
};

inline Event operator~(const Event& e) { return e.complement(); }
inline Event operator|(const Event& a, const Event& b) { return a.unite(b); }
inline Event operator&(const Event& a, const Event& b) { return a.intersect(b); }
inline Event operator-(const Event& a, const Event& b) { return a.difference(b); }

// A subset of the naturals that is either finite or cofinite, kept canonical:
// Finite(S) denotes S, Cofinite(S) denotes N \ S, support sorted and unique.
class FinCofEvent {
public:
    enum class Kind { Finite, Cofinite };

    static FinCofEvent finite(std::vector<std::uint64_t> support);
    static FinCofEvent cofinite(std::vector<std::uint64_t> support);
    static FinCofEvent empty() { return finite({}); }
    static FinCofEvent naturals() { return cofinite({}); }

    Kind kind() const { return kind_; }
    const std::vector<std::uint64_t>& support() const { return support_; }

    bool contains(std::uint64_t k) const;
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_cofinite() const { return kind_ == Kind::Cofinite; }
    bool is_empty() const { return kind_ == Kind::Finite && support_.empty(); }
    bool is_naturals() const { return kind_ == Kind::Cofinite && support_.empty(); }
    // Largest member of a finite, nonempty set.
    std::uint64_t max_element() const;

    bool operator==(const FinCofEvent& other) const;
    bool operator!=(const FinCofEvent& other) const { return !(*this == other); }

private:
    FinCofEvent(Kind kind, std::vector<std::uint64_t> support);

    Kind kind_;
    std::vector<std::uint64_t> support_;
};

FinCofEvent complement(const FinCofEvent& e);
FinCofEvent unite(const FinCofEvent& a, const FinCofEvent& b);
FinCofEvent intersect(const FinCofEvent& a, const FinCofEvent& b);
FinCofEvent difference(const FinCofEvent& a, const FinCofEvent& b);
bool is_subset_of(const FinCofEvent& a, const FinCofEvent& b);

enum class FinCofOp { Complement, Union, Intersect };

// Enum-dispatched form of the algebra. Complement is unary; union and
// intersection fold over one or more arguments.
FinCofEvent fincof_op(FinCofOp op, const std::vector<FinCofEvent>& args);

// Set-expression trees over named events, shared by the axiom checkers'
// tests and the CLI. Pure structural value type.
class SetExpr {
public:
    enum class Kind { Name, Neg, Union, Intersect };

    static SetExpr name(std::string n);
    static SetExpr neg(SetExpr e);
    static SetExpr union_of(SetExpr a, SetExpr b);
    static SetExpr intersect_of(SetExpr a, SetExpr b);

    Kind kind() const { return kind_; }
    const std::string& event_name() const { return name_; }
    const std::vector<SetExpr>& children() const { return children_; }

private:
    SetExpr() = default;

    Kind kind_ = Kind::Name;
    std::string name_;
    std::vector<SetExpr> children_;
};

struct SetBinding {
    std::string name;
    Event event;
};

// Evaluates `expr` with every name bound; all events must share one universe.
Event evaluate_set_expr(const SetExpr& expr, const std::vector<SetBinding>& bindings);

}  // namespace setlogic
