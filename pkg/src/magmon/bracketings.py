"""Full binary bracketings on ordered leaves, with subterm addressing.

A bracketing on n leaves is a full binary tree whose leaves, read left to
right, carry the positions 1..n. There are catalan(n-1) of them. Nodes
are addressed by occurrence paths: tuples over {"L", "R"} descending from
the root, the empty tuple being the whole term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import ArityError, PathError


@dataclass(frozen=True)
class Leaf:
    position: int

    @property
    def n(self) -> int:
        return 1

    def __str__(self):
        return f"x{self.position}"


@dataclass(frozen=True)
class Node:
    left: "Bracketing"
    right: "Bracketing"
    n: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "n", self.left.n + self.right.n)

    def __str__(self):
        return f"({self.left}*{self.right})"


Bracketing = Leaf | Node

OccurrencePath = tuple[str, ...]


def catalan(k: int) -> int:
    """The kth Catalan number: 1, 1, 2, 5, 14, 42, ..."""
    if k < 0:
        raise ArityError(f"Catalan index must be >= 0, got {k}")
    return comb(2 * k, k) // (k + 1)


def enumerate_bracketings(n: int) -> list[Bracketing]:
    """All bracketings on leaves 1..n, in canonical order.

    The order is recursive: for left-subtree size k = 1..n-1 in increasing
    order, emit every (left, right) pair with the left index varying
    slower. For n=3 this lists x1*(x2*x3) before (x1*x2)*x3.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArityError(f"arity must be a positive integer, got {n!r}")
    return _span(1, n)


def _span(lo: int, hi: int) -> list[Bracketing]:
    if lo == hi:
        return [Leaf(lo)]
    out = []
    for k in range(lo, hi):
        for left in _span(lo, k):
            for right in _span(k + 1, hi):
                out.append(Node(left, right))
    return out


def subterm_occurrences(term: Bracketing) -> list[OccurrencePath]:
    """All node paths of the term in preorder; 2n-1 of them."""
    out = []
    stack: list[tuple[OccurrencePath, Bracketing]] = [((), term)]
    while stack:
        path, node = stack.pop()
        out.append(path)
        if isinstance(node, Node):
            stack.append((path + ("R",), node.right))
            stack.append((path + ("L",), node.left))
    return out


def subtree_at(term: Bracketing, path: OccurrencePath) -> Bracketing:
    node = term
    for i, step in enumerate(path):
        if not isinstance(node, Node):
            raise PathError(f"path {path_str(path)} descends past a leaf at step {i}")
        if step == "L":
            node = node.left
        elif step == "R":
            node = node.right
        else:
            raise PathError(f"bad path step {step!r}; expected 'L' or 'R'")
    return node


def variables_inside(term: Bracketing, path: OccurrencePath) -> list[int]:
    """Leaf positions of the subtree at path, in left-to-right order.

    Leaves of a subtree of an ordered tree always form a contiguous run.
    """
    sub = subtree_at(term, path)
    out = []
    stack = [sub]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node.position)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return out


def relabel(term: Bracketing, path: OccurrencePath) -> Bracketing:
    """The subtree at path with its leaves renumbered 1..k in order."""
    sub = subtree_at(term, path)
    remap = {pos: i for i, pos in enumerate(variables_inside(term, path), start=1)}

    def rebuild(node):
        if isinstance(node, Leaf):
            return Leaf(remap[node.position])
        return Node(rebuild(node.left), rebuild(node.right))

    return rebuild(sub)


def path_str(path: OccurrencePath) -> str:
    return "".join(path) if path else "e"


def parse_path(text: str) -> OccurrencePath:
    if text == "e":
        return ()
    steps = tuple(text)
    for step in steps:
        if step not in ("L", "R"):
            raise PathError(f"bad path character {step!r} in {text!r}")
    return steps
