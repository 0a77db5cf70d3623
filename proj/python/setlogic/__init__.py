"""Finite-model toolkit for set-theoretic epistemic and conditional semantics."""

from setlogic._core import (  # noqa: F401
    CheckResult,
    ConditionalOperator,
    Event,
    EventFormula,
    FinCofEvent,
    Formula,
    HarnessConfig,
    KnowledgeOperator,
    KripkeRelation,
    PreferentialFrame,
    Report,
    SelectionFunction,
    CounterfactualStructure,
    Interpretation,
    KripkeStructure,
    PreferentialStructure,
    SymbolicConditionalOperator,
    SymbolicKnowledgeOperator,
    Universe,
    builtin_conditional_example,
    builtin_epistemic_example,
    campaigns,
    check_conditional_axiom,
    check_epistemic_axiom,
    check_preferential_property,
    check_relation_property,
    check_selection_condition,
    complete_modular_order,
    derive_conditional_operator,
    derive_knowledge_operator,
    derive_preferential_selection,
    domain_of_world,
    eval_event_formula,
    event_formula_satisfiable,
    fincof_complement,
    fincof_intersect,
    fincof_unite,
    fixed_points,
    format_formula,
    intension_of,
    lewis_evaluate,
    load_frame,
    load_relation,
    load_selection,
    load_structure,
    model_check,
    parse_event_formula,
    parse_formula,
    reachable_worlds,
    run_campaign,
    run_theorem_suite,
    scheme_validity,
    synthesize_preorder,
    synthesize_relation,
    synthesize_selection_function,
    theorem_suites,
)

__all__ = [name for name in dir() if not name.startswith("_")]
