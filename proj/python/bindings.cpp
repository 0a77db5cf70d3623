#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "setlogic/event_formula.hpp"
#include "setlogic/harness.hpp"
#include "setlogic/io.hpp"

namespace py = pybind11;
using namespace setlogic;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw FormatError("invalid JSON");
    return j;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "set-theoretic semantics for epistemic and conditional logic";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Universe>(m, "Universe")
        .def(py::init<std::vector<std::string>>())
        .def_property_readonly("size", &Universe::size)
        .def_property_readonly("worlds", &Universe::world_names)
        .def("__eq__", [](const Universe& a, const Universe& b) { return a == b; })
        .def("__repr__", [](const Universe& u) { return "Universe(" + Json(u.world_names()).dump() + ")"; });

    py::class_<Event>(m, "Event")
        .def_static("from_names", &Event::from_names)
        .def_static("empty", &Event::empty)
        .def_static("full", &Event::full)
        .def_property_readonly("names", &Event::names)
        .def_property_readonly("bits", &Event::bits)
        .def("complement", &Event::complement)
        .def("unite", &Event::unite)
        .def("intersect", &Event::intersect)
        .def("difference", &Event::difference)
        .def("is_subset_of", &Event::is_subset_of)
        .def("__eq__", [](const Event& a, const Event& b) { return a == b; })
        .def("__repr__", [](const Event& e) { return event_to_json(e).dump(); });

    py::class_<FinCofEvent>(m, "FinCofEvent")
        .def_static("finite", &FinCofEvent::finite)
        .def_static("cofinite", &FinCofEvent::cofinite)
        .def_static("naturals", &FinCofEvent::naturals)
        .def_static("empty", &FinCofEvent::empty)
        .def_property_readonly("support", &FinCofEvent::support)
        .def_property_readonly("is_finite", &FinCofEvent::is_finite)
        .def_property_readonly("is_cofinite", &FinCofEvent::is_cofinite)
        .def("contains", &FinCofEvent::contains)
        .def("__eq__", [](const FinCofEvent& a, const FinCofEvent& b) { return a == b; })
        .def("__repr__", [](const FinCofEvent& e) { return fincof_to_json(e).dump(); });
    m.def("fincof_complement", [](const FinCofEvent& e) { return complement(e); });
    m.def("fincof_unite", [](const FinCofEvent& a, const FinCofEvent& b) { return unite(a, b); });
    m.def("fincof_intersect",
          [](const FinCofEvent& a, const FinCofEvent& b) { return intersect(a, b); });

    py::class_<CheckResult>(m, "CheckResult")
        .def_property_readonly("ok", [](const CheckResult& r) { return r.ok; })
        .def_property_readonly("witness", [](const CheckResult& r) { return json_to_py(r.witness); })
        .def("__bool__", [](const CheckResult& r) { return r.ok; })
        .def("__repr__", [](const CheckResult& r) {
            return std::string("CheckResult(ok=") + (r.ok ? "True" : "False") + ")";
        });

    py::class_<KripkeRelation>(m, "KripkeRelation")
        .def_static("from_edges", &KripkeRelation::from_edges)
        .def_static("identity", &KripkeRelation::identity)
        .def_property_readonly("universe", &KripkeRelation::universe)
        .def("adjacency", &KripkeRelation::adjacency)
        .def("__eq__", [](const KripkeRelation& a, const KripkeRelation& b) { return a == b; })
        .def("__repr__", [](const KripkeRelation& r) { return relation_to_json(r).dump(); });

    py::class_<KnowledgeOperator>(m, "KnowledgeOperator")
        .def_property_readonly("universe", &KnowledgeOperator::universe)
        .def("apply", &KnowledgeOperator::apply)
        .def("__eq__",
             [](const KnowledgeOperator& a, const KnowledgeOperator& b) { return a == b; })
        .def("__repr__", [](const KnowledgeOperator& op) { return operator_to_json(op).dump(); });

    py::class_<SymbolicKnowledgeOperator>(m, "SymbolicKnowledgeOperator")
        .def("apply", &SymbolicKnowledgeOperator::apply)
        .def_property_readonly("rule", &SymbolicKnowledgeOperator::rule_name);

    m.def("derive_knowledge_operator", &derive_knowledge_operator);
    m.def("synthesize_relation", &synthesize_relation);
    m.def("fixed_points", &fixed_points);
    m.def("check_relation_property", [](const KripkeRelation& rel, const std::string& prop) {
        return check_relation_property(rel, relation_property_from_string(prop));
    });
    m.def("check_epistemic_axiom", [](const KnowledgeOperator& op, const std::string& axiom) {
        return check_epistemic_axiom(op, epistemic_axiom_from_string(axiom));
    });
    m.def("check_epistemic_axiom",
          [](const SymbolicKnowledgeOperator& op, const std::string& axiom) {
              return check_epistemic_axiom(op, epistemic_axiom_from_string(axiom));
          });
    m.def("builtin_epistemic_example", &builtin_epistemic_example);

    py::class_<SelectionFunction>(m, "SelectionFunction")
        .def_property_readonly("universe", &SelectionFunction::universe)
        .def("apply", &SelectionFunction::apply)
        .def("__eq__",
             [](const SelectionFunction& a, const SelectionFunction& b) { return a == b; })
        .def("__repr__", [](const SelectionFunction& f) { return selection_to_json(f).dump(); });

    py::class_<ConditionalOperator>(m, "ConditionalOperator")
        .def_property_readonly("universe", &ConditionalOperator::universe)
        .def("apply", &ConditionalOperator::apply)
        .def("__eq__",
             [](const ConditionalOperator& a, const ConditionalOperator& b) { return a == b; })
        .def("__repr__", [](const ConditionalOperator& o) { return conditional_to_json(o).dump(); });

    py::class_<SymbolicConditionalOperator>(m, "SymbolicConditionalOperator")
        .def_property_readonly("rule", &SymbolicConditionalOperator::rule_name)
        .def("apply", &SymbolicConditionalOperator::apply)
        .def("member", &SymbolicConditionalOperator::member)
        .def("member_at_infinity", &SymbolicConditionalOperator::member_at_infinity)
        .def("order_member_at_infinity", &SymbolicConditionalOperator::order_member_at_infinity);

    m.def("derive_conditional_operator", &derive_conditional_operator);
    m.def("synthesize_selection_function", &synthesize_selection_function);
    m.def("reachable_worlds", &reachable_worlds);
    m.def("check_selection_condition", [](const SelectionFunction& f, const std::string& cond) {
        return check_selection_condition(f, selection_condition_from_string(cond));
    });
    m.def("check_conditional_axiom", [](const ConditionalOperator& op, const std::string& axiom) {
        return check_conditional_axiom(op, conditional_axiom_from_string(axiom));
    });
    m.def("check_conditional_axiom",
          [](const SymbolicConditionalOperator& op, const std::string& axiom) {
              return check_conditional_axiom(op, conditional_axiom_from_string(axiom));
          });
    m.def("builtin_conditional_example", &builtin_conditional_example);

    py::class_<PreferentialFrame>(m, "PreferentialFrame")
        .def_property_readonly("universe", &PreferentialFrame::universe)
        .def("domain", &PreferentialFrame::domain)
        .def("leq", &PreferentialFrame::leq)
        .def("__eq__",
             [](const PreferentialFrame& a, const PreferentialFrame& b) { return a == b; })
        .def("__repr__", [](const PreferentialFrame& f) { return frame_to_json(f).dump(); });

    m.def("derive_preferential_selection", &derive_preferential_selection);
    m.def("check_preferential_property", [](const PreferentialFrame& f, const std::string& prop) {
        return check_preferential_property(f, preferential_property_from_string(prop));
    });
    m.def("synthesize_preorder",
          [](const ConditionalOperator& op, const std::vector<std::string>& extras) {
              std::vector<ConditionalAxiom> axioms;
              for (const auto& a : extras) axioms.push_back(conditional_axiom_from_string(a));
              return synthesize_preorder(op, axioms);
          },
          py::arg("op"), py::arg("extra_axioms") = std::vector<std::string>{});
    m.def("domain_of_world", &domain_of_world);
    m.def("complete_modular_order", &complete_modular_order);
    m.def("lewis_evaluate", &lewis_evaluate);

    py::class_<Formula>(m, "Formula")
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
        .def("__repr__", [](const Formula& f) { return to_string(f); });
    m.def("parse_formula", &parse_formula);
    m.def("format_formula", [](const Formula& f) { return to_string(f); });

    py::class_<Interpretation>(m, "Interpretation")
        .def(py::init<std::vector<std::pair<std::string, Event>>>());
    py::class_<KripkeStructure>(m, "KripkeStructure")
        .def(py::init([](KripkeRelation rel, Interpretation pi) {
            return KripkeStructure{std::move(rel), std::move(pi)};
        }))
        .def("__repr__", [](const KripkeStructure&) { return std::string("KripkeStructure"); });
    py::class_<CounterfactualStructure>(m, "CounterfactualStructure")
        .def(py::init([](SelectionFunction f, Interpretation pi) {
            return CounterfactualStructure{std::move(f), std::move(pi)};
        }))
        .def("__repr__",
             [](const CounterfactualStructure&) { return std::string("CounterfactualStructure"); });
    py::class_<PreferentialStructure>(m, "PreferentialStructure")
        .def(py::init<PreferentialFrame, Interpretation>())
        .def("__repr__",
             [](const PreferentialStructure&) { return std::string("PreferentialStructure"); });
    m.def("load_structure", [](const std::string& text) {
        return structure_from_json(parse_json_text(text));
    });
    m.def("load_relation", [](const std::string& text) {
        return relation_from_json(parse_json_text(text));
    });
    m.def("load_selection", [](const std::string& text) {
        return selection_from_json(parse_json_text(text));
    });
    m.def("load_frame", [](const std::string& text) {
        return frame_from_json(parse_json_text(text));
    });
    auto bind_structure_ops = [&m]<typename S>() {
        m.def("model_check", [](const S& s, const std::string& world, const Formula& f) {
            return model_check(Structure(s), world, f);
        });
        m.def("intension_of",
              [](const S& s, const Formula& f) { return intension_of(Structure(s), f); });
        m.def("scheme_validity", [](const S& s, const std::string& scheme) {
            return scheme_validity(Structure(s), scheme_from_string(scheme));
        });
    };
    bind_structure_ops.template operator()<KripkeStructure>();
    bind_structure_ops.template operator()<CounterfactualStructure>();
    bind_structure_ops.template operator()<PreferentialStructure>();

    m.def("parse_event_formula", &parse_event_formula);
    py::class_<EventFormula>(m, "EventFormula");
    m.def("eval_event_formula", &eval_event_formula);
    m.def("event_formula_satisfiable",
          [](const EventFormula& ef, const Universe& w0, const std::vector<std::string>& axioms) {
              std::vector<EpistemicAxiom> parsed;
              for (const auto& a : axioms) parsed.push_back(epistemic_axiom_from_string(a));
              SatResult r = event_formula_satisfiable(ef, w0, parsed);
              py::dict out;
              out["satisfiable"] = r.satisfiable;
              out["model"] = r.model ? py::cast(*r.model) : py::object(py::none());
              return out;
          });

    py::class_<HarnessConfig>(m, "HarnessConfig")
        .def(py::init<>())
        .def_readwrite("seed", &HarnessConfig::seed)
        .def_readwrite("samples", &HarnessConfig::samples)
        .def_readwrite("jobs", &HarnessConfig::jobs);

    py::class_<Report>(m, "Report")
        .def_property_readonly("campaign", [](const Report& r) { return r.campaign; })
        .def_property_readonly("candidates", [](const Report& r) { return r.candidates; })
        .def_property_readonly("violations",
                               [](const Report& r) { return r.violations.size(); })
        .def_property_readonly("ok", &Report::ok)
        .def_property_readonly("seconds", [](const Report& r) { return r.wall_clock_seconds; })
        .def("records", &Report::to_records)
        .def("__repr__", [](const Report& r) {
            return "Report(" + r.campaign + ", candidates=" + std::to_string(r.candidates) +
                   ", violations=" + std::to_string(r.violations.size()) + ")";
        });

    m.def("campaigns", [] {
        py::list out;
        for (const auto& c : campaign_registry()) out.append(c.name);
        return out;
    });
    m.def("run_campaign", &run_campaign, py::arg("name"),
          py::arg("config") = HarnessConfig{},
          py::call_guard<py::gil_scoped_release>());
    m.def("run_theorem_suite", &run_theorem_suite, py::arg("name"),
          py::arg("config") = HarnessConfig{},
          py::call_guard<py::gil_scoped_release>());
    m.def("theorem_suites", &theorem_suite_names);
}
