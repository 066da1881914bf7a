"""Context maps of subterm occurrences, block extraction, and realization.

Fixing values for every leaf outside a chosen subterm occurrence turns
the whole term into a unary map of the occurrence's value: its context
map. Walking from the occurrence to the root contributes one left or
right translation per enclosing node, so context maps always land in the
translation monoid; conversely every monoid element is realized by the
one-hole term built from any generator word for it. This module computes
context maps two independent ways, extracts the matching blocks of
evaluation words, and checks the block law exhaustively at a given arity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Algebra
from .bracketings import (
    Bracketing,
    Leaf,
    Node,
    OccurrencePath,
    enumerate_bracketings,
    path_str,
    relabel,
    subterm_occurrences,
    subtree_at,
    variables_inside,
)
from .errors import ArityError, PathError, SpecError
from .evaluation import (
    DEFAULT_SIZE_CAP,
    EvaluationWord,
    apply_map_to_word,
    evaluation_word,
)
from .monoid import MonoidClosure, compose_word
from .transformations import Transformation, compose, identity


@dataclass
class ContextSpec:
    """A subterm occurrence in a term plus values for the outside leaves.

    The assignment maps every external leaf position (those not inside
    the occurrence) to an element; internal leaves stay free.
    """

    term: Bracketing
    occurrence: OccurrencePath
    assignment: dict[int, int]


@dataclass
class Realization:
    """A context spec whose context map equals a requested transformation."""

    spec: ContextSpec
    word: tuple[str, ...]
    hole_position: int


def external_positions(term: Bracketing, occurrence: OccurrencePath) -> list[int]:
    inside = set(variables_inside(term, occurrence))
    return [p for p in range(1, term.n + 1) if p not in inside]


def _validate_spec(alg: Algebra, spec: ContextSpec) -> None:
    term = spec.term
    try:
        subtree_at(term, spec.occurrence)
    except PathError as e:
        raise SpecError(str(e)) from e
    if variables_inside(term, ()) != list(range(1, term.n + 1)):
        raise SpecError("term leaves are not numbered 1..n left to right")
    external = set(external_positions(term, spec.occurrence))
    keys = set(spec.assignment)
    if keys != external:
        missing = sorted(external - keys)
        extra = sorted(keys - external)
        raise SpecError(
            f"assignment domain mismatch: missing {missing}, unexpected {extra}"
        )
    for pos, value in spec.assignment.items():
        if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < alg.m:
            raise SpecError(f"assignment x{pos}={value!r} outside carrier [0, {alg.m})")


def _occurrence_chain(term: Bracketing, occurrence: OccurrencePath):
    """(descent side, sibling subterm) pairs from the occurrence up to the root.

    Returned innermost first: the first entry belongs to the occurrence's
    parent node.
    """
    node = term
    enclosing = []
    for step in occurrence:
        if not isinstance(node, Node):
            raise PathError(f"path {path_str(occurrence)} descends past a leaf")
        if step == "L":
            enclosing.append(("L", node.right))
            node = node.left
        else:
            enclosing.append(("R", node.left))
            node = node.right
    enclosing.reverse()
    return enclosing


def _eval_assigned(alg: Algebra, node: Bracketing, assignment) -> int:
    table = alg.table
    values: list[int] = []
    work: list[tuple[Bracketing, bool]] = [(node, False)]
    while work:
        cur, ready = work.pop()
        if isinstance(cur, Leaf):
            values.append(assignment[cur.position])
        elif ready:
            right = values.pop()
            left = values.pop()
            values.append(table[left][right])
        else:
            work.append((cur, True))
            work.append((cur.right, False))
            work.append((cur.left, False))
    return values[0]


def context_factors(alg: Algebra, spec: ContextSpec) -> list[str]:
    """Generator tags of the context map, in application order.

    One factor per enclosing node: a sibling on the left contributes L{c},
    a sibling on the right contributes R{c}, where c is the sibling's
    value under the assignment. The list length always equals the length
    of the occurrence path.
    """
    _validate_spec(alg, spec)
    factors = []
    for side, sibling in _occurrence_chain(spec.term, spec.occurrence):
        value = _eval_assigned(alg, sibling, spec.assignment)
        factors.append(f"L{value}" if side == "R" else f"R{value}")
    return factors


def context_map(alg: Algebra, spec: ContextSpec) -> Transformation:
    """The unary map sending the occurrence's value to the term's value,
    composed from one translation per enclosing node."""
    return compose_word(alg, context_factors(alg, spec))


def _map_from_chain(alg: Algebra, chain, assignment) -> Transformation:
    # Same walk as context_factors/compose_word, without revalidating;
    # used by the bulk enumeration loops.
    acc = identity(alg.m)
    for side, sibling in chain:
        value = _eval_assigned(alg, sibling, assignment)
        gen = alg.left_translation(value) if side == "R" else alg.right_translation(value)
        acc = compose(gen, acc)
    return acc


def context_map_direct(alg: Algebra, spec: ContextSpec) -> Transformation:
    """Independent recomputation of the context map, with no translation
    composition: substitute each x for the whole occurrence and evaluate
    the term bottom-up under the assignment."""
    _validate_spec(alg, spec)
    assignment = spec.assignment

    def eval_sub(node, hole, x):
        # hole: remaining path to the replaced subterm, None outside it
        if hole == ():
            return x
        if isinstance(node, Leaf):
            return assignment[node.position]
        if hole is None:
            left = eval_sub(node.left, None, x)
            right = eval_sub(node.right, None, x)
        elif hole[0] == "L":
            left = eval_sub(node.left, hole[1:], x)
            right = eval_sub(node.right, None, x)
        else:
            left = eval_sub(node.left, None, x)
            right = eval_sub(node.right, hole[1:], x)
        return alg.table[left][right]

    return Transformation(
        tuple(eval_sub(spec.term, spec.occurrence, x) for x in range(alg.m))
    )


def extract_block(
    alg: Algebra,
    term: Bracketing,
    occurrence: OccurrencePath,
    assignment,
    cap: int = DEFAULT_SIZE_CAP,
) -> EvaluationWord:
    """The block of the term's evaluation word selected by the assignment.

    External leaves are pinned to their assigned values and the internal
    leaves run lexicographically; the matching positions in the full word
    follow from its mixed-radix index structure.
    """
    spec = ContextSpec(term, occurrence, dict(assignment))
    _validate_spec(alg, spec)
    word = evaluation_word(alg, term, cap=cap)
    internal = variables_inside(term, occurrence)
    return _block_from_word(word, alg.m, internal, spec.assignment)


def _block_from_word(word: EvaluationWord, m: int, internal, assignment) -> EvaluationWord:
    n = word.n
    weight = [m ** (n - p) for p in range(n + 1)]  # weight[p] for position p
    base = sum(value * weight[pos] for pos, value in assignment.items())
    symbols = []
    syms = word.symbols
    for combo in itertools.product(range(m), repeat=len(internal)):
        idx = base + sum(v * weight[p] for v, p in zip(combo, internal))
        symbols.append(syms[idx])
    return EvaluationWord(tuple(symbols), len(internal), m)


@dataclass(frozen=True)
class BlockCheck:
    n: int
    bracketing_index: int
    occurrence: OccurrencePath
    assignment: tuple[tuple[int, int], ...]
    ok: bool
    expected: str
    actual: str

    def line(self) -> str:
        status = "ok" if self.ok else f"FAIL expected={self.expected} actual={self.actual}"
        return (
            f"n={self.n} t={self.bracketing_index} u={path_str(self.occurrence)}"
            f" a={format_assignment(self.assignment)} status={status}"
        )


@dataclass
class BlockLawReport:
    n: int
    m: int
    checks: list[BlockCheck]

    @property
    def violations(self) -> list[BlockCheck]:
        return [c for c in self.checks if not c.ok]

    def text(self, verbose: bool = True) -> str:
        shown = self.checks if verbose else self.violations
        lines = [c.line() for c in shown]
        lines.append(f"checked={len(self.checks)} violations={len(self.violations)}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        def as_obj(c: BlockCheck) -> dict:
            return {
                "n": c.n,
                "bracketing": c.bracketing_index,
                "occurrence": path_str(c.occurrence),
                "assignment": [list(pair) for pair in c.assignment],
                "ok": c.ok,
                "expected": c.expected,
                "actual": c.actual,
            }

        return {
            "n": self.n,
            "m": self.m,
            "checked": len(self.checks),
            "violations": [as_obj(c) for c in self.violations],
            "checks": [as_obj(c) for c in self.checks],
        }


def format_assignment(pairs) -> str:
    items = [f"x{pos}={value}" for pos, value in pairs]
    return ",".join(items) if items else "-"


def verify_block_law(alg: Algebra, n: int, cap: int = DEFAULT_SIZE_CAP) -> BlockLawReport:
    """Exhaustively compare extracted blocks with mapped subterm words.

    For every bracketing of arity n, every occurrence, every external
    assignment: the block of the term's word must equal the context map
    applied coordinatewise to the occurrence's own word. Check order is
    deterministic (bracketing index, then occurrence, then assignment).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArityError(f"arity must be >= 1, got {n!r}")
    m = alg.m
    checks = []
    for index, term in enumerate(enumerate_bracketings(n)):
        term_word = evaluation_word(alg, term, cap=cap)
        for occ in subterm_occurrences(term):
            chain = _occurrence_chain(term, occ)
            internal = variables_inside(term, occ)
            internal_set = set(internal)
            external = [p for p in range(1, n + 1) if p not in internal_set]
            sub_word = evaluation_word(alg, relabel(term, occ), cap=cap)
            for combo in itertools.product(range(m), repeat=len(external)):
                assignment = dict(zip(external, combo))
                kappa = _map_from_chain(alg, chain, assignment)
                block = _block_from_word(term_word, m, internal, assignment)
                mapped = apply_map_to_word(kappa, sub_word)
                checks.append(
                    BlockCheck(
                        n,
                        index,
                        occ,
                        tuple(zip(external, combo)),
                        block.symbols == mapped.symbols,
                        block.render(),
                        mapped.render(),
                    )
                )
    return BlockLawReport(n, m, checks)


def realize(alg: Algebra, M: MonoidClosure, f: Transformation) -> Realization:
    """Build a one-hole term whose context map is exactly f.

    Starting from a bare hole, each tag of f's stored generator word
    wraps the current term with the matching constant: L{a} puts the
    constant on the left, R{a} on the right. Constants then become fresh
    external leaves (numbered left to right together with the hole) and
    the assignment pins them back to their values.
    """
    word = M.word(f)
    shape = ("hole",)
    for tag in word:
        const = ("const", int(tag[1:]))
        shape = ("node", const, shape) if tag[0] == "L" else ("node", shape, const)

    assignment: dict[int, int] = {}
    counter = itertools.count(1)
    hole_position = 0

    def build(s):
        nonlocal hole_position
        if s[0] == "node":
            left, left_path = build(s[1])
            right, right_path = build(s[2])
            if left_path is not None:
                path = ("L",) + left_path
            elif right_path is not None:
                path = ("R",) + right_path
            else:
                path = None
            return Node(left, right), path
        pos = next(counter)
        if s[0] == "const":
            assignment[pos] = s[1]
            return Leaf(pos), None
        hole_position = pos
        return Leaf(pos), ()

    term, hole_path = build(shape)
    spec = ContextSpec(term, hole_path, assignment)
    return Realization(spec, word, hole_position)


def realization_horizon(M: MonoidClosure) -> int:
    """Smallest arity at which every monoid element appears as a context map.

    One leaf for the hole plus one per factor of the longest stored word.
    """
    return 1 + M.max_word_length


def realized_context_maps(alg: Algebra, n_max: int) -> frozenset[Transformation]:
    """All context maps over all terms of arity at most n_max.

    The set ranges over every bracketing, every occurrence and every
    external assignment. Since the leaves of distinct siblings along the
    occurrence's chain are disjoint, the assignments reach exactly the
    product of each sibling's attainable value set, so the enumeration
    folds over those sets instead of visiting every assignment; the
    resulting set is identical.
    """
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 1:
        raise ArityError(f"arity bound must be >= 1, got {n_max!r}")
    m = alg.m
    ident = identity(m)
    left = [alg.left_translation(a) for a in range(m)]
    right = [alg.right_translation(a) for a in range(m)]
    found = {ident}
    for n in range(1, n_max + 1):
        for term in enumerate_bracketings(n):
            values = _attainable_values(alg, term)
            for occ in subterm_occurrences(term):
                maps = {ident}
                for depth in range(len(occ) - 1, -1, -1):
                    side = occ[depth]
                    sibling = occ[:depth] + (("L",) if side == "R" else ("R",))
                    gens = left if side == "R" else right
                    maps = {
                        compose(gens[c], g) for g in maps for c in values[sibling]
                    }
                found.update(maps)
    return frozenset(found)


def _attainable_values(alg: Algebra, term: Bracketing) -> dict[OccurrencePath, tuple[int, ...]]:
    """Per-node sets of values the subterm can take, keyed by path.

    A leaf takes every element; a node takes exactly the products of its
    children's sets (child leaf sets are disjoint, so the sides vary
    independently).
    """
    table = alg.table
    out: dict[OccurrencePath, tuple[int, ...]] = {}

    def walk(node, path):
        if isinstance(node, Leaf):
            vals = tuple(range(alg.m))
        else:
            lv = walk(node.left, path + ("L",))
            rv = walk(node.right, path + ("R",))
            vals = tuple(sorted({table[x][y] for x in lv for y in rv}))
        out[path] = vals
        return vals

    walk(term, ())
    return out
