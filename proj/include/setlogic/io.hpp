#pragma once

// JSON file formats: relations, operator tables, selection functions,
// conditional operators, preferential frames, and structures (any of the
// former plus an interpretation).

#include <string>

#include "setlogic/json_util.hpp"
#include "setlogic/structures.hpp"

namespace setlogic {

Json load_json_file(const std::string& path);

enum class FileKind { Relation, Operator, Selection, ConditionalOp, Frame };

// Detected from the top-level keys: edges -> relation, table -> operator,
// rows with f -> selection, rows with out -> conditional operator,
// orders -> frame.
FileKind detect_file_kind(const Json& j);

Universe universe_from_json(const Json& j);
Json universe_to_json(const Universe& u);

KripkeRelation relation_from_json(const Json& j);
Json relation_to_json(const KripkeRelation& rel);

KnowledgeOperator operator_from_json(const Json& j);
Json operator_to_json(const KnowledgeOperator& op);

SelectionFunction selection_from_json(const Json& j);
Json selection_to_json(const SelectionFunction& f);

ConditionalOperator conditional_from_json(const Json& j);
Json conditional_to_json(const ConditionalOperator& op);

PreferentialFrame frame_from_json(const Json& j);
Json frame_to_json(const PreferentialFrame& frame);

Interpretation interpretation_from_json(const Universe& u, const Json& j);
Json interpretation_to_json(const Interpretation& pi);

// A structure file is a frame-bearing file with a "pi" member.
Structure structure_from_json(const Json& j);

}  // namespace setlogic
