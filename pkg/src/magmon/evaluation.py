"""Term evaluation, evaluation words, and bracketing-evaluation arrays.

The evaluation word of a bracketing lists the values of its induced term
operation on all input tuples in lexicographic order (leftmost coordinate
most significant), so its length is m**n. Collecting the words of every
bracketing of one arity, in canonical column order, gives the evaluation
array for that arity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Algebra
from .bracketings import Bracketing, Leaf, Node, catalan, enumerate_bracketings
from .errors import ArityError, CarrierMismatchError, InvalidElementError, SizeCapError
from .transformations import Transformation

# Upper bound on symbols materialized by a single word or array request.
# This is a desk-scale verification tool; the cap exists to fail fast on
# accidental m**n blow-ups, and every caller can override it.
DEFAULT_SIZE_CAP = 10_000_000


@dataclass(frozen=True)
class EvaluationWord:
    symbols: tuple[int, ...]
    n: int
    m: int

    def render(self) -> str:
        """Digit string for m <= 10, comma-separated indices otherwise."""
        if self.m <= 10:
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)

    def __len__(self):
        return len(self.symbols)


@dataclass(frozen=True)
class EvaluationArray:
    n: int
    m: int
    columns: tuple[tuple[Bracketing, EvaluationWord], ...]

    def bracketings(self) -> list[Bracketing]:
        return [b for b, _ in self.columns]

    def words(self) -> list[EvaluationWord]:
        return [w for _, w in self.columns]

    def to_csv(self) -> str:
        header = [f"x{i}" for i in range(1, self.n + 1)]
        header += [str(b) for b, _ in self.columns]
        lines = [",".join(header)]
        words = [w.symbols for _, w in self.columns]
        for idx, tup in enumerate(itertools.product(range(self.m), repeat=self.n)):
            row = [str(v) for v in tup] + [str(w[idx]) for w in words]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "bracketings": [str(b) for b, _ in self.columns],
            "inputs": [list(t) for t in itertools.product(range(self.m), repeat=self.n)],
            "columns": [list(w.symbols) for _, w in self.columns],
        }


def eval_term(alg: Algebra, term: Bracketing, inputs) -> int:
    """Fold the algebra operation over the tree, inputs at the leaves.

    Uses an explicit post-order stack so deep comb-shaped trees cannot
    hit the recursion limit.
    """
    inputs = tuple(inputs)
    if len(inputs) != term.n:
        raise ArityError(f"term has {term.n} leaves, got {len(inputs)} inputs")
    for x in inputs:
        alg.check_element(x)
    table = alg.table
    values: list[int] = []
    work: list[tuple[Bracketing, bool]] = [(term, False)]
    while work:
        node, ready = work.pop()
        if isinstance(node, Leaf):
            values.append(inputs[node.position - 1])
        elif ready:
            right = values.pop()
            left = values.pop()
            values.append(table[left][right])
        else:
            work.append((node, True))
            work.append((node.right, False))
            work.append((node.left, False))
    return values[0]


def lex_tuples(m: int, n: int, cap: int = DEFAULT_SIZE_CAP):
    """All m**n input tuples in lexicographic order.

    Refuses to start when m**n exceeds the cap.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InvalidElementError(f"carrier size must be >= 1, got {m!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArityError(f"arity must be >= 1, got {n!r}")
    total = m**n
    if total > cap:
        raise SizeCapError(f"{m}**{n} = {total} tuples exceeds cap {cap}")
    return itertools.product(range(m), repeat=n)


def evaluation_word(alg: Algebra, term: Bracketing, cap: int = DEFAULT_SIZE_CAP) -> EvaluationWord:
    """Values of the term on all input tuples, in lexicographic order."""
    symbols = tuple(eval_term(alg, term, tup) for tup in lex_tuples(alg.m, term.n, cap))
    return EvaluationWord(symbols, term.n, alg.m)


def evaluation_array(alg: Algebra, n: int, cap: int = DEFAULT_SIZE_CAP) -> EvaluationArray:
    """One evaluation-word column per bracketing of arity n, canonical order."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArityError(f"arity must be >= 1, got {n!r}")
    total = catalan(n - 1) * alg.m**n
    if total > cap:
        raise SizeCapError(
            f"array of {catalan(n - 1)} columns x {alg.m}**{n} symbols = {total} exceeds cap {cap}"
        )
    columns = tuple(
        (term, evaluation_word(alg, term, cap)) for term in enumerate_bracketings(n)
    )
    return EvaluationArray(n, alg.m, columns)


def apply_map_to_word(f: Transformation, word: EvaluationWord) -> EvaluationWord:
    """Apply f to every symbol of the word."""
    if f.m != word.m:
        raise CarrierMismatchError(f"map over {f.m} elements, word over {word.m}")
    images = f.images
    return EvaluationWord(tuple(images[s] for s in word.symbols), word.n, word.m)
