#pragma once

// Independent test oracles built on name sets instead of bit vectors; these
// deliberately share no machinery with the library implementation.

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using NamedSet = std::set<std::string>;
using Relation = std::set<std::pair<std::string, std::string>>;

inline NamedSet complement_of(const NamedSet& s, const NamedSet& omega) {
    NamedSet out;
    for (const auto& w : omega)
        if (!s.count(w)) out.insert(w);
    return out;
}

inline NamedSet union_of(const NamedSet& a, const NamedSet& b) {
    NamedSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

inline NamedSet intersect_of(const NamedSet& a, const NamedSet& b) {
    NamedSet out;
    for (const auto& w : a)
        if (b.count(w)) out.insert(w);
    return out;
}

inline bool subset(const NamedSet& a, const NamedSet& b) {
    for (const auto& w : a)
        if (!b.count(w)) return false;
    return true;
}

// K(E) = { w : every successor of w lies in E }, evaluated per world.
inline NamedSet knows(const Relation& rel, const NamedSet& e, const NamedSet& omega) {
    NamedSet out;
    for (const auto& w : omega) {
        bool all_in = true;
        for (const auto& [from, to] : rel)
            if (from == w && !e.count(to)) all_in = false;
        if (all_in) out.insert(w);
    }
    return out;
}

// All subsets of omega, by repeated doubling.
inline std::vector<NamedSet> power_set(const NamedSet& omega) {
    std::vector<NamedSet> out = {NamedSet{}};
    for (const auto& w : omega) {
        std::size_t size = out.size();
        for (std::size_t i = 0; i < size; ++i) {
            NamedSet with = out[i];
            with.insert(w);
            out.push_back(with);
        }
    }
    return out;
}

inline bool reflexive(const Relation& rel, const NamedSet& omega) {
    for (const auto& w : omega)
        if (!rel.count({w, w})) return false;
    return true;
}

inline bool transitive(const Relation& rel) {
    for (const auto& [a, b] : rel)
        for (const auto& [c, d] : rel)
            if (b == c && !rel.count({a, d})) return false;
    return true;
}

inline bool euclidean(const Relation& rel) {
    for (const auto& [a, b] : rel)
        for (const auto& [c, d] : rel)
            if (a == c && !rel.count({b, d})) return false;
    return true;
}

}  // namespace oracle
