"""Exact probabilistic favouring, paradox search and normal default logic."""

from ._core import (
    BoundExceeded,
    CellTable,
    Error,
    Extension,
    Formula,
    FormulaSyntaxError,
    InvalidInput,
    Theory,
    UnknownAtomError,
    World,
    ZeroMassCondition,
    build_conjunctive_world,
    build_disjunctive_world,
    build_two_class_world,
    check_disjunction_identity,
    check_disjunction_principle,
    chung_check,
    compute_extensions,
    consistent,
    entails,
    favours,
    nine_antecedent_profile,
    proposition1_check,
    proposition2_audit,
    query,
    search_counterexamples,
    simpson_check,
    to_consequent_form,
)

__all__ = [name for name in dir() if not name.startswith("_")]
