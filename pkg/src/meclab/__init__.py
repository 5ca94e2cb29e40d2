"""Counting Markov equivalence classes and choosing intervention targets on chordal chain graphs."""
from . import _backend
from .counting import CountMemo, mec_count, mec_count_uccg
from .design import (CostModel, Objective, active_best_target, parse_costs, passive_best_set,
                     passive_value)
from .errors import (ContractError, CycleError, GraphParseError, InvariantViolation, MeclabError,
                     NotChordalError, OracleCapError)
from .generate import GenSpec, gen_chordal, gen_tree
from .graph import PdGraph, format_graph, parse_graph
from .lazyiter import InterventionResult, check_invariants, derive_next, lazy_iter
from .orientation import (MeekTrace, dag_with_parent_clique, eager_intervention_result,
                          meek_closure, orient_root)

__version__ = "0.1.0"
BACKEND = _backend.kernels.NAME

__all__ = [
    "BACKEND", "ContractError", "CostModel", "CountMemo", "CycleError", "GenSpec",
    "GraphParseError", "InterventionResult", "InvariantViolation", "MeclabError", "MeekTrace",
    "NotChordalError", "Objective", "OracleCapError", "PdGraph", "active_best_target",
    "check_invariants", "dag_with_parent_clique", "derive_next", "eager_intervention_result",
    "format_graph", "gen_chordal", "gen_tree", "lazy_iter", "mec_count", "mec_count_uccg",
    "meek_closure", "orient_root", "parse_costs", "parse_graph", "passive_best_set",
    "passive_value",
]
