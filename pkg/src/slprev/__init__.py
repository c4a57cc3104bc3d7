"""Belief base revision of ground disjunctive logic programs under answer sets."""
from .estimator import SLPRevision
from .program import (Alphabet, AlphabetTooLarge, EditSet, Program, Rule, canonicalize,
                      edit_apply, sym_diff)
from .revision import (CompatibleSet, RevisionResult, RuleUniverse, SelectionStrategy,
                       expansion_compatible, removal_compatible, s_compatible, select,
                       slp_revise)
from .semantics import (SEInterpretation, answer_sets, classical_models, is_consistent,
                        is_m_consistent, reduct, satisfies, se_models, strongly_equivalent)
from .syntax import parse_program, parse_rule, serialize_program

__all__ = [
    "Alphabet", "AlphabetTooLarge", "CompatibleSet", "EditSet", "Program", "RevisionResult",
    "Rule", "RuleUniverse", "SEInterpretation", "SLPRevision", "SelectionStrategy",
    "answer_sets", "canonicalize", "classical_models", "edit_apply", "expansion_compatible",
    "is_consistent", "is_m_consistent", "parse_program", "parse_rule", "reduct",
    "removal_compatible", "s_compatible", "satisfies", "se_models", "select",
    "serialize_program", "slp_revise", "strongly_equivalent", "sym_diff",
]
__version__ = "0.1.0"
