// setlogic: batch verification of set-theoretic epistemic and conditional
// semantics. Every command writes line-delimited JSON records to stdout;
// exit codes: 0 holds, 1 a checked property fails, 2 usage/format error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "setlogic/event_formula.hpp"
#include "setlogic/harness.hpp"
#include "setlogic/io.hpp"

namespace {

using setlogic::Json;

void emit(const Json& record) { std::cout << record.dump() << "\n"; }

Json record(const std::string& campaign, Json candidate, const std::string& property, bool ok,
            Json witness) {
    Json r;
    r["campaign"] = campaign;
    r["candidate"] = std::move(candidate);
    r["property"] = property;
    r["ok"] = ok;
    r["witness"] = std::move(witness);
    return r;
}

void emit_summary(const std::string& campaign, std::uint64_t candidates,
                  std::uint64_t violations, std::uint64_t seed, bool ok) {
    Json s;
    s["campaign"] = campaign;
    s["property"] = "summary";
    s["candidates"] = candidates;
    s["violations"] = violations;
    s["seed"] = seed;
    s["ok"] = ok;
    emit(s);
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos) {
            if (start < csv.size()) out.push_back(csv.substr(start));
            break;
        }
        if (comma > start) out.push_back(csv.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

// Probe events over the naturals: `{1,2}` finite, `~{1}` cofinite,
// `Ej` shorthand for ~{j}.
setlogic::FinCofEvent parse_fincof_text(const std::string& text, std::size_t& pos) {
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos < text.size() && text[pos] == 'E') {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw setlogic::FormatError("expected an index after 'E'");
        return setlogic::FinCofEvent::cofinite({std::stoull(text.substr(start, pos - start))});
    }
    bool cof = false;
    if (pos < text.size() && text[pos] == '~') {
        cof = true;
        ++pos;
        skip();
    }
    if (pos >= text.size() || text[pos] != '{')
        throw setlogic::FormatError("expected '{' in event probe");
    ++pos;
    std::vector<std::uint64_t> support;
    skip();
    while (pos < text.size() && text[pos] != '}') {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw setlogic::FormatError("expected a natural number in event probe");
        support.push_back(std::stoull(text.substr(start, pos - start)));
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip();
        }
    }
    if (pos >= text.size()) throw setlogic::FormatError("expected '}' in event probe");
    ++pos;
    return cof ? setlogic::FinCofEvent::cofinite(std::move(support))
               : setlogic::FinCofEvent::finite(std::move(support));
}

setlogic::FinCofEvent parse_fincof_text(const std::string& text) {
    std::size_t pos = 0;
    setlogic::FinCofEvent e = parse_fincof_text(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw setlogic::FormatError("trailing input in event probe");
    return e;
}

int cmd_check(const std::string& kind, const std::vector<std::string>& props,
              const std::string& path) {
    Json j = setlogic::load_json_file(path);
    std::uint64_t failures = 0;
    auto report = [&](const std::string& prop, const setlogic::CheckResult& r) {
        if (!r.ok) ++failures;
        emit(record("check", path, prop, r.ok, r.witness));
    };
    if (kind == "relation") {
        setlogic::KripkeRelation rel = setlogic::relation_from_json(j);
        for (const auto& p : props) {
            auto prop = setlogic::relation_property_from_string(p);
            report(setlogic::to_string(prop), check_relation_property(rel, prop));
        }
    } else if (kind == "operator") {
        setlogic::KnowledgeOperator op = setlogic::operator_from_json(j);
        for (const auto& p : props) {
            auto axiom = setlogic::epistemic_axiom_from_string(p);
            report(setlogic::to_string(axiom), check_epistemic_axiom(op, axiom));
        }
    } else if (kind == "selection") {
        setlogic::SelectionFunction f = setlogic::selection_from_json(j);
        for (const auto& p : props) {
            auto cond = setlogic::selection_condition_from_string(p);
            report(setlogic::to_string(cond), check_selection_condition(f, cond));
        }
    } else if (kind == "conditional") {
        setlogic::ConditionalOperator op = setlogic::conditional_from_json(j);
        for (const auto& p : props) {
            auto axiom = setlogic::conditional_axiom_from_string(p);
            report(setlogic::to_string(axiom), check_conditional_axiom(op, axiom));
        }
    } else if (kind == "frame") {
        setlogic::PreferentialFrame frame = setlogic::frame_from_json(j);
        for (const auto& p : props) {
            auto prop = setlogic::preferential_property_from_string(p);
            report(setlogic::to_string(prop), check_preferential_property(frame, prop));
        }
    } else {
        throw setlogic::FormatError("unknown kind: " + kind);
    }
    emit_summary("check", 1, failures, 0, failures == 0);
    return failures == 0 ? 0 : 1;
}

int cmd_synth(const std::string& from, const std::string& target,
              const std::vector<std::string>& asserted, const std::string& path) {
    Json j = setlogic::load_json_file(path);
    Json result;
    if (from == "operator") {
        result = relation_to_json(synthesize_relation(setlogic::operator_from_json(j)));
    } else if (from == "conditional") {
        setlogic::ConditionalOperator op = setlogic::conditional_from_json(j);
        if (target == "selection") {
            result = selection_to_json(synthesize_selection_function(op));
        } else if (target == "frame") {
            std::vector<setlogic::ConditionalAxiom> extras;
            for (const auto& a : asserted)
                extras.push_back(setlogic::conditional_axiom_from_string(a));
            result = frame_to_json(synthesize_preorder(op, extras));
        } else {
            throw setlogic::FormatError("unknown synth target: " + target);
        }
    } else {
        throw setlogic::FormatError("unknown synth source: " + from);
    }
    emit(record("synth", path, "synthesize:" + from + ":" + target, true, result));
    emit_summary("synth", 1, 0, 0, true);
    return 0;
}

int cmd_roundtrip(const std::string& path) {
    Json j = setlogic::load_json_file(path);
    bool ok = true;
    Json witness;
    std::string property;
    switch (setlogic::detect_file_kind(j)) {
        case setlogic::FileKind::Relation: {
            auto rel = setlogic::relation_from_json(j);
            auto back = synthesize_relation(derive_knowledge_operator(rel));
            property = "synthesize-derive-identity";
            ok = back == rel;
            if (!ok) witness = relation_to_json(back);
            break;
        }
        case setlogic::FileKind::Operator: {
            auto op = setlogic::operator_from_json(j);
            auto back = derive_knowledge_operator(synthesize_relation(op));
            property = "derive-synthesize-identity";
            ok = back == op;
            if (!ok) witness = operator_to_json(back);
            break;
        }
        case setlogic::FileKind::Selection: {
            auto f = setlogic::selection_from_json(j);
            auto back = synthesize_selection_function(derive_conditional_operator(f));
            property = "synthesize-derive-identity";
            ok = back == f;
            if (!ok) witness = selection_to_json(back);
            break;
        }
        case setlogic::FileKind::ConditionalOp: {
            auto op = setlogic::conditional_from_json(j);
            auto back = derive_conditional_operator(synthesize_selection_function(op));
            property = "derive-synthesize-identity";
            ok = back == op;
            if (!ok) witness = conditional_to_json(back);
            break;
        }
        case setlogic::FileKind::Frame: {
            auto frame = setlogic::frame_from_json(j);
            auto op = derive_conditional_operator(derive_preferential_selection(frame));
            property = "induced-operator-identity";
            const std::pair<setlogic::PreferentialProperty, setlogic::ConditionalAxiom> pmap[] = {
                {setlogic::PreferentialProperty::P1, setlogic::ConditionalAxiom::C3},
                {setlogic::PreferentialProperty::P2, setlogic::ConditionalAxiom::C7},
                {setlogic::PreferentialProperty::P3, setlogic::ConditionalAxiom::C4},
                {setlogic::PreferentialProperty::P4, setlogic::ConditionalAxiom::C8}};
            std::vector<setlogic::ConditionalAxiom> extras;
            for (const auto& [p, c] : pmap)
                if (check_preferential_property(frame, p).ok) extras.push_back(c);
            auto back = synthesize_preorder(op, extras);
            auto op2 = derive_conditional_operator(derive_preferential_selection(back));
            ok = op2 == op;
            if (!ok) witness = frame_to_json(back);
            break;
        }
    }
    emit(record("roundtrip", path, property, ok, witness));
    emit_summary("roundtrip", 1, ok ? 0 : 1, 0, ok);
    return ok ? 0 : 1;
}

int cmd_mc(const std::string& path, const std::string& world, const std::string& formula_text,
           bool intension_only) {
    setlogic::Structure s = setlogic::structure_from_json(setlogic::load_json_file(path));
    setlogic::Formula f = setlogic::parse_formula(formula_text);
    if (intension_only) {
        setlogic::Event e = intension_of(s, f);
        Json cand;
        cand["structure"] = path;
        cand["formula"] = to_string(f);
        Json w;
        w["worlds"] = setlogic::event_to_json(e);
        emit(record("intension", cand, "intension", true, w));
        emit_summary("intension", 1, 0, 0, true);
        return 0;
    }
    bool holds = model_check(s, world, f);
    Json cand;
    cand["structure"] = path;
    cand["world"] = world;
    cand["formula"] = to_string(f);
    emit(record("mc", cand, "model-check", holds, Json()));
    emit_summary("mc", 1, holds ? 0 : 1, 0, holds);
    return holds ? 0 : 1;
}

int cmd_scheme(const std::string& path, const std::string& name) {
    setlogic::Structure s = setlogic::structure_from_json(setlogic::load_json_file(path));
    setlogic::CheckResult r = scheme_validity(s, setlogic::scheme_from_string(name));
    emit(record("scheme", path, "scheme:" + name, r.ok, r.witness));
    emit_summary("scheme", 1, r.ok ? 0 : 1, 0, r.ok);
    return r.ok ? 0 : 1;
}

int cmd_evsat(int w0, const std::vector<std::string>& axioms, const std::string& formula_text) {
    std::vector<std::string> names;
    for (int i = 1; i <= w0; ++i) names.push_back("w" + std::to_string(i));
    setlogic::Universe u(names);
    std::vector<setlogic::EpistemicAxiom> parsed;
    for (const auto& a : axioms) parsed.push_back(setlogic::epistemic_axiom_from_string(a));
    setlogic::EventFormula ef = setlogic::parse_event_formula(formula_text);
    setlogic::SatResult r = event_formula_satisfiable(ef, u, parsed);
    Json cand;
    cand["w0"] = w0;
    cand["formula"] = formula_text;
    Json witness;
    if (r.model) witness = relation_to_json(*r.model);
    emit(record("evsat", cand, "satisfiable", r.satisfiable, witness));
    emit_summary("evsat", 1, r.satisfiable ? 0 : 1, 0, r.satisfiable);
    return r.satisfiable ? 0 : 1;
}

int cmd_suite(const std::string& name, const setlogic::HarnessConfig& config) {
    std::vector<setlogic::Report> reports = run_theorem_suite(name, config);
    std::uint64_t candidates = 0, violations = 0;
    double elapsed = 0.0;
    for (const auto& r : reports) {
        std::cout << r.to_records();
        candidates += r.candidates;
        violations += r.violations.size();
        elapsed += r.wall_clock_seconds;
    }
    emit_summary("suite:" + name, candidates, violations, config.seed, violations == 0);
    std::cerr << "suite " << name << ": " << candidates << " candidates, " << violations
              << " violations, " << elapsed << "s\n";
    return violations == 0 ? 0 : 1;
}

int cmd_examples(const std::string& name, const std::string& probe) {
    Json cand;
    cand["name"] = name;
    cand["probe"] = probe;
    if (name == "K0") {
        setlogic::EpistemicOperator builtin = setlogic::builtin_epistemic_example(name);
        const auto& op = std::get<setlogic::KnowledgeOperator>(builtin);
        std::size_t pos = 0;
        setlogic::FinCofEvent fc = parse_fincof_text(probe, pos);
        if (!fc.is_finite()) throw setlogic::FormatError("K0 probes are subsets of {1,2,3}");
        std::vector<std::string> worlds;
        for (std::uint64_t v : fc.support()) worlds.push_back(std::to_string(v));
        setlogic::Event in = setlogic::Event::from_names(op.universe(), worlds);
        Json w;
        w["in"] = setlogic::event_to_json(in);
        w["out"] = setlogic::event_to_json(op.apply(in));
        emit(record("examples", cand, "apply", true, w));
    } else if (name == "K1" || name == "K2") {
        setlogic::EpistemicOperator builtin = setlogic::builtin_epistemic_example(name);
        const auto& op = std::get<setlogic::SymbolicKnowledgeOperator>(builtin);
        setlogic::FinCofEvent in = parse_fincof_text(probe);
        Json w;
        w["in"] = setlogic::fincof_to_json(in);
        w["out"] = setlogic::fincof_to_json(op.apply(in));
        emit(record("examples", cand, "apply", true, w));
    } else {
        setlogic::SymbolicConditionalOperator op = setlogic::builtin_conditional_example(name);
        std::size_t pos = 0;
        setlogic::FinCofEvent h = parse_fincof_text(probe, pos);
        while (pos < probe.size() && std::isspace(static_cast<unsigned char>(probe[pos]))) ++pos;
        if (probe.compare(pos, 2, "~>") != 0)
            throw setlogic::FormatError("conditional probes look like \"H ~> E\"");
        pos += 2;
        setlogic::FinCofEvent e = parse_fincof_text(probe.substr(pos));
        Json w;
        w["H"] = setlogic::fincof_to_json(h);
        w["E"] = setlogic::fincof_to_json(e);
        if (name == "example5") {
            w["result"] = setlogic::fincof_to_json(op.apply(h, e));
        } else {
            w["holds_at_infinity"] = op.member_at_infinity(h, e);
            w["order_minimality_holds"] = op.order_member_at_infinity(h, e);
        }
        emit(record("examples", cand, "apply", true, w));
    }
    emit_summary("examples", 1, 0, 0, true);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model toolkit for set-theoretic epistemic and conditional semantics"};
    app.require_subcommand(1);
    app.fallthrough();
    setlogic::HarnessConfig config;
    app.add_option("--seed", config.seed, "seed for sampled campaigns");
    app.add_option("--samples", config.samples, "sample count for sampled campaigns");
    app.add_option("--jobs", config.jobs, "worker threads (0 = hardware)");

    std::string kind, path, props_csv;
    auto* check = app.add_subcommand("check", "check properties of a frame-like file");
    check->add_option("--kind", kind, "relation|operator|selection|conditional|frame")
        ->required();
    check->add_option("--props", props_csv, "comma-separated property list")->required();
    check->add_option("file", path, "input file")->required();

    std::string synth_from, synth_target = "selection", synth_assert;
    std::string synth_path;
    auto* synth = app.add_subcommand("synth", "synthesize a frame-level object from an operator");
    synth->add_option("--from", synth_from, "operator|conditional")->required();
    synth->add_option("--target", synth_target, "selection|frame (conditional source only)");
    synth->add_option("--assert", synth_assert,
                      "extra axioms to assert for frame synthesis, e.g. C3',C7'");
    synth->add_option("file", synth_path, "input file")->required();

    std::string rt_path;
    auto* roundtrip = app.add_subcommand("roundtrip", "derive/synthesize round-trip equality");
    roundtrip->add_option("file", rt_path, "input file")->required();

    std::string mc_path, mc_world, mc_formula;
    auto* mc = app.add_subcommand("mc", "model-check a formula at a world");
    mc->add_option("--structure", mc_path, "structure file")->required();
    mc->add_option("--world", mc_world, "world name")->required();
    mc->add_option("--formula", mc_formula, "formula text")->required();

    std::string int_path, int_formula;
    auto* intension = app.add_subcommand("intension", "compute the worlds satisfying a formula");
    intension->add_option("--structure", int_path, "structure file")->required();
    intension->add_option("--formula", int_formula, "formula text")->required();

    std::string scheme_path, scheme_name;
    auto* scheme = app.add_subcommand("scheme", "decide axiom-scheme validity in a structure");
    scheme->add_option("--structure", scheme_path, "structure file")->required();
    scheme->add_option("--name", scheme_name, "K1..K4 or C0..C8")->required();

    int evsat_w0 = 2;
    std::string evsat_axioms, evsat_formula;
    auto* evsat = app.add_subcommand("evsat", "event-formula satisfiability over W0");
    evsat->add_option("--w0", evsat_w0, "domain size (at most 2)")->required();
    evsat->add_option("--axioms", evsat_axioms, "subset of A2,A3,A4");
    evsat->add_option("--formula", evsat_formula, "event formula text")->required();

    std::string suite_name;
    auto* suite = app.add_subcommand("suite", "run a pre-registered verification suite");
    suite->add_option("--name", suite_name,
                      "thm2|thm4|thm6|prop1|lemma2|lewis-finite|counterexamples|logic|all")
        ->required();

    std::string ex_name, ex_probe;
    auto* examples = app.add_subcommand("examples", "query a builtin counterexample operator");
    examples->add_option("--name", ex_name, "K0|K1|K2|example5|omega-lewis")->required();
    examples->add_option("--probe", ex_probe, "event probe, e.g. {2,3} or E1~>E5")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.exit(e) == 0) return 0;
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(kind, split_csv(props_csv), path);
        if (synth->parsed())
            return cmd_synth(synth_from, synth_target, split_csv(synth_assert), synth_path);
        if (roundtrip->parsed()) return cmd_roundtrip(rt_path);
        if (mc->parsed()) return cmd_mc(mc_path, mc_world, mc_formula, false);
        if (intension->parsed()) return cmd_mc(int_path, "", int_formula, true);
        if (scheme->parsed()) return cmd_scheme(scheme_path, scheme_name);
        if (evsat->parsed()) return cmd_evsat(evsat_w0, split_csv(evsat_axioms), evsat_formula);
        if (suite->parsed()) return cmd_suite(suite_name, config);
        if (examples->parsed()) return cmd_examples(ex_name, ex_probe);
    } catch (const setlogic::AxiomFailure& e) {
        emit(record("error", Json(), "asserted-axiom:" + e.axiom, false, e.witness));
        return 1;
    } catch (const setlogic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
