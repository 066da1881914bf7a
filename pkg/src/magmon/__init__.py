"""Evaluation arrays and translation monoids of finite binary algebras.

Given a finite binary algebra as a Cayley table, this package computes
the evaluation words of all Catalan bracketings of a given arity, the
translation monoid generated by the left and right translations (with
shortest generator words, rank ideals, Green's J-classes and the minimal
ideal), and the context maps induced by subterm occurrences, including
the constructive realization of any monoid element as a context map.
A check suite verifies the structural laws tying these together on any
concrete algebra.
"""

from .algebra import Algebra
from .bracketings import (
    Bracketing,
    Leaf,
    Node,
    OccurrencePath,
    catalan,
    enumerate_bracketings,
    parse_path,
    path_str,
    relabel,
    subterm_occurrences,
    subtree_at,
    variables_inside,
)
from .checks import CHECK_NAMES, CheckResult, run_checks
from .contexts import (
    BlockCheck,
    BlockLawReport,
    ContextSpec,
    Realization,
    context_factors,
    context_map,
    context_map_direct,
    external_positions,
    extract_block,
    format_assignment,
    realization_horizon,
    realize,
    realized_context_maps,
    verify_block_law,
)
from .errors import (
    ArityError,
    CarrierMismatchError,
    InvalidElementError,
    MagmonError,
    MembershipError,
    ParseError,
    PathError,
    RankRangeError,
    SizeCapError,
    SpecError,
)
from .evaluation import (
    DEFAULT_SIZE_CAP,
    EvaluationArray,
    EvaluationWord,
    apply_map_to_word,
    eval_term,
    evaluation_array,
    evaluation_word,
    lex_tuples,
)
from .monoid import (
    JClass,
    MonoidClosure,
    RankIdeal,
    compose_word,
    generate,
    j_classes,
    j_order_dot,
    j_order_edges,
    minimal_ideal,
    principal_ideal,
    rank_ideal,
)
from .randomgen import SplitMix64, random_algebra, random_algebras, random_table
from .transformations import Transformation, canonical_compare, compose, identity

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "ArityError",
    "BlockCheck",
    "BlockLawReport",
    "Bracketing",
    "CHECK_NAMES",
    "CarrierMismatchError",
    "CheckResult",
    "ContextSpec",
    "DEFAULT_SIZE_CAP",
    "EvaluationArray",
    "EvaluationWord",
    "InvalidElementError",
    "JClass",
    "Leaf",
    "MagmonError",
    "MembershipError",
    "MonoidClosure",
    "Node",
    "OccurrencePath",
    "ParseError",
    "PathError",
    "RankIdeal",
    "RankRangeError",
    "Realization",
    "SizeCapError",
    "SpecError",
    "SplitMix64",
    "Transformation",
    "apply_map_to_word",
    "canonical_compare",
    "catalan",
    "compose",
    "compose_word",
    "context_factors",
    "context_map",
    "context_map_direct",
    "enumerate_bracketings",
    "eval_term",
    "evaluation_array",
    "evaluation_word",
    "external_positions",
    "extract_block",
    "format_assignment",
    "generate",
    "identity",
    "j_classes",
    "j_order_dot",
    "j_order_edges",
    "lex_tuples",
    "minimal_ideal",
    "parse_path",
    "path_str",
    "principal_ideal",
    "random_algebra",
    "random_algebras",
    "random_table",
    "rank_ideal",
    "realization_horizon",
    "realize",
    "realized_context_maps",
    "relabel",
    "run_checks",
    "subterm_occurrences",
    "subtree_at",
    "variables_inside",
    "verify_block_law",
]
