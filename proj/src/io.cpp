#include "setlogic/io.hpp"

#include <fstream>
#include <set>

namespace setlogic {

namespace {

const Json& require_member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing \"") + key + "\" member");
    return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw FormatError(std::string(what) + " must contain strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

Event event_from_json(const Universe& u, const Json& j) {
    return Event::from_names(u, string_list(j, "event"));
}

FinCofEvent fincof_from_json(const Json& j) {
    std::string kind = require_member(j, "kind").get<std::string>();
    const Json& support_json = require_member(j, "support");
    if (!support_json.is_array()) throw FormatError("support must be an array");
    std::vector<std::uint64_t> support;
    for (const auto& item : support_json) {
        if (!item.is_number_unsigned()) throw FormatError("support must contain naturals");
        support.push_back(item.get<std::uint64_t>());
    }
    if (kind == "finite") return FinCofEvent::finite(std::move(support));
    if (kind == "cofinite") return FinCofEvent::cofinite(std::move(support));
    throw FormatError("event kind must be \"finite\" or \"cofinite\"");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw FormatError("invalid JSON in file: " + path);
    return j;
}

FileKind detect_file_kind(const Json& j) {
    if (!j.is_object()) throw FormatError("expected a JSON object");
    if (j.contains("edges")) return FileKind::Relation;
    if (j.contains("table")) return FileKind::Operator;
    if (j.contains("orders")) return FileKind::Frame;
    if (j.contains("rows")) {
        const Json& rows = j.at("rows");
        if (rows.is_array() && !rows.empty() && rows[0].is_object() && rows[0].contains("out"))
            return FileKind::ConditionalOp;
        return FileKind::Selection;
    }
    throw FormatError("unrecognized file: expected edges, table, rows, or orders");
}

Universe universe_from_json(const Json& j) {
    return Universe(string_list(require_member(j, "worlds"), "worlds"));
}

Json universe_to_json(const Universe& u) { return Json(u.world_names()); }

KripkeRelation relation_from_json(const Json& j) {
    Universe u = universe_from_json(j);
    const Json& edges = require_member(j, "edges");
    if (!edges.is_array()) throw FormatError("edges must be an array");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw FormatError("each edge must be a [from, to] pair");
        pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return KripkeRelation::from_edges(u, pairs);
}

Json relation_to_json(const KripkeRelation& rel) {
    Json j;
    j["worlds"] = universe_to_json(rel.universe());
    Json edges = Json::array();
    for (int w = 0; w < rel.universe().size(); ++w)
        for (int v = 0; v < rel.universe().size(); ++v)
            if (rel.relates(w, v))
                edges.push_back(Json::array(
                    {rel.universe().world_name(w), rel.universe().world_name(v)}));
    j["edges"] = edges;
    return j;
}

KnowledgeOperator operator_from_json(const Json& j) {
    Universe u = universe_from_json(j);
    const Json& rows = require_member(j, "table");
    const std::size_t expected = std::size_t{1} << u.size();
    if (!rows.is_array() || rows.size() != expected)
        throw FormatError("operator table must list all " + std::to_string(expected) + " rows");
    std::vector<std::uint32_t> table(expected, 0u);
    std::vector<bool> seen(expected, false);
    for (const auto& row : rows) {
        Event in = event_from_json(u, require_member(row, "in"));
        Event out = event_from_json(u, require_member(row, "out"));
        if (seen[in.bits()]) throw FormatError("duplicate table row for one event");
        seen[in.bits()] = true;
        table[in.bits()] = out.bits();
    }
    return KnowledgeOperator(u, std::move(table));
}

Json operator_to_json(const KnowledgeOperator& op) {
    const Universe& u = op.universe();
    Json j;
    j["worlds"] = universe_to_json(u);
    Json rows = Json::array();
    for (std::uint32_t e = 0; e < (1u << u.size()); ++e) {
        Json row;
        row["in"] = event_to_json(Event(u, e));
        row["out"] = event_to_json(Event(u, op.apply_bits(e)));
        rows.push_back(row);
    }
    j["table"] = rows;
    return j;
}

SelectionFunction selection_from_json(const Json& j) {
    Universe u = universe_from_json(j);
    const Json& rows = require_member(j, "rows");
    const int n = u.size();
    const std::size_t expected = static_cast<std::size_t>(n) << n;
    if (!rows.is_array() || rows.size() != expected)
        throw FormatError("selection table must list all " + std::to_string(expected) + " rows");
    std::vector<std::uint32_t> table(expected, 0u);
    std::vector<bool> seen(expected, false);
    for (const auto& row : rows) {
        int w = u.require_index(require_member(row, "w").get<std::string>());
        Event h = event_from_json(u, require_member(row, "h"));
        Event f = event_from_json(u, require_member(row, "f"));
        std::size_t idx = (static_cast<std::size_t>(w) << n) | h.bits();
        if (seen[idx]) throw FormatError("duplicate selection row for one (world, event)");
        seen[idx] = true;
        table[idx] = f.bits();
    }
    return SelectionFunction(u, std::move(table));
}

Json selection_to_json(const SelectionFunction& f) {
    const Universe& u = f.universe();
    Json j;
    j["worlds"] = universe_to_json(u);
    Json rows = Json::array();
    for (int w = 0; w < u.size(); ++w)
        for (std::uint32_t h = 0; h < (1u << u.size()); ++h) {
            Json row;
            row["w"] = u.world_name(w);
            row["h"] = event_to_json(Event(u, h));
            row["f"] = event_to_json(Event(u, f.apply_bits(w, h)));
            rows.push_back(row);
        }
    j["rows"] = rows;
    return j;
}

ConditionalOperator conditional_from_json(const Json& j) {
    Universe u = universe_from_json(j);
    const Json& rows = require_member(j, "rows");
    const int n = u.size();
    const std::size_t expected = std::size_t{1} << (2 * n);
    if (!rows.is_array() || rows.size() != expected)
        throw FormatError("conditional table must list all " + std::to_string(expected) +
                          " rows");
    std::vector<std::uint32_t> table(expected, 0u);
    std::vector<bool> seen(expected, false);
    for (const auto& row : rows) {
        Event h = event_from_json(u, require_member(row, "h"));
        Event e = event_from_json(u, require_member(row, "e"));
        Event out = event_from_json(u, require_member(row, "out"));
        std::size_t idx = (static_cast<std::size_t>(h.bits()) << n) | e.bits();
        if (seen[idx]) throw FormatError("duplicate conditional row for one (h, e)");
        seen[idx] = true;
        table[idx] = out.bits();
    }
    return ConditionalOperator(u, std::move(table));
}

Json conditional_to_json(const ConditionalOperator& op) {
    const Universe& u = op.universe();
    Json j;
    j["worlds"] = universe_to_json(u);
    Json rows = Json::array();
    for (std::uint32_t h = 0; h < (1u << u.size()); ++h)
        for (std::uint32_t e = 0; e < (1u << u.size()); ++e) {
            Json row;
            row["h"] = event_to_json(Event(u, h));
            row["e"] = event_to_json(Event(u, e));
            row["out"] = event_to_json(Event(u, op.apply_bits(h, e)));
            rows.push_back(row);
        }
    j["rows"] = rows;
    return j;
}

PreferentialFrame frame_from_json(const Json& j) {
    Universe u = universe_from_json(j);
    const Json& orders = require_member(j, "orders");
    if (!orders.is_array() || orders.size() != static_cast<std::size_t>(u.size()))
        throw FormatError("frame must list one order per world");
    std::vector<WorldOrder> world_orders(u.size(),
                                         WorldOrder{Event::empty(u),
                                                    std::vector<std::uint32_t>(u.size(), 0u)});
    std::vector<bool> seen(u.size(), false);
    for (const auto& ord : orders) {
        int w = u.require_index(require_member(ord, "w").get<std::string>());
        if (seen[w]) throw FormatError("duplicate order for one world");
        seen[w] = true;
        Event domain = event_from_json(u, require_member(ord, "domain"));
        std::vector<std::uint32_t> leq(u.size(), 0u);
        const Json& pairs = require_member(ord, "leq");
        if (!pairs.is_array()) throw FormatError("leq must be an array of pairs");
        for (const auto& p : pairs) {
            if (!p.is_array() || p.size() != 2)
                throw FormatError("each leq entry must be an [x, y] pair");
            leq[u.require_index(p[0].get<std::string>())] |=
                1u << u.require_index(p[1].get<std::string>());
        }
        world_orders[w] = WorldOrder{domain, std::move(leq)};
    }
    return PreferentialFrame(u, std::move(world_orders));
}

Json frame_to_json(const PreferentialFrame& frame) {
    const Universe& u = frame.universe();
    Json j;
    j["worlds"] = universe_to_json(u);
    Json orders = Json::array();
    for (int w = 0; w < u.size(); ++w) {
        Json ord;
        ord["w"] = u.world_name(w);
        ord["domain"] = event_to_json(frame.domain(w));
        Json pairs = Json::array();
        for (int x = 0; x < u.size(); ++x)
            for (int y = 0; y < u.size(); ++y)
                if (frame.leq(w, x, y))
                    pairs.push_back(Json::array({u.world_name(x), u.world_name(y)}));
        ord["leq"] = pairs;
        orders.push_back(ord);
    }
    j["orders"] = orders;
    return j;
}

Interpretation interpretation_from_json(const Universe& u, const Json& j) {
    if (!j.is_array()) throw FormatError("pi must be an array");
    std::vector<std::pair<std::string, Event>> atoms;
    for (const auto& entry : j) {
        std::string atom = require_member(entry, "atom").get<std::string>();
        atoms.emplace_back(atom, event_from_json(u, require_member(entry, "worlds")));
    }
    return Interpretation(std::move(atoms));
}

Json interpretation_to_json(const Interpretation& pi) {
    Json j = Json::array();
    for (const auto& [atom, event] : pi.atoms()) {
        Json entry;
        entry["atom"] = atom;
        entry["worlds"] = event_to_json(event);
        j.push_back(entry);
    }
    return j;
}

Structure structure_from_json(const Json& j) {
    const Json& pi_json = require_member(j, "pi");
    switch (detect_file_kind(j)) {
        case FileKind::Relation: {
            KripkeRelation rel = relation_from_json(j);
            Interpretation pi = interpretation_from_json(rel.universe(), pi_json);
            return KripkeStructure{std::move(rel), std::move(pi)};
        }
        case FileKind::Selection: {
            SelectionFunction f = selection_from_json(j);
            Interpretation pi = interpretation_from_json(f.universe(), pi_json);
            return CounterfactualStructure{std::move(f), std::move(pi)};
        }
        case FileKind::Frame: {
            PreferentialFrame frame = frame_from_json(j);
            Interpretation pi = interpretation_from_json(frame.universe(), pi_json);
            return PreferentialStructure(std::move(frame), std::move(pi));
        }
        default:
            throw FormatError("structure files pair a relation, selection, or frame with pi");
    }
}

}  // namespace setlogic
