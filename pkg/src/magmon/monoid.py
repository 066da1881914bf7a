"""The translation monoid of an algebra and its ideal structure.

The monoid is generated inside the full transformation monoid by all left
and right translations. Closure is computed by breadth-first search from
the identity, which also yields a shortest generator word for every
element. On top of the closure this module computes principal two-sided
ideals, Green's J-classes (equal principal ideals), the rank filtration,
the minimal ideal, and a DOT rendering of the J-class order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .algebra import Algebra
from .errors import MembershipError, ParseError, RankRangeError
from .transformations import Transformation, compose, identity


@dataclass(frozen=True)
class JClass:
    members: tuple[Transformation, ...]  # canonically sorted
    rank: int


@dataclass(frozen=True)
class RankIdeal:
    r: int
    members: tuple[Transformation, ...]  # canonically sorted


class MonoidClosure:
    """The generated monoid, with one shortest generator word per element.

    Words are tag sequences over L0..L{m-1}, R0..R{m-1}, applied first to
    last: the word (t1, ..., tk) denotes gen(tk) o ... o gen(t1). The
    identity is always present under the empty word; whether some
    nonempty word also reaches it is recorded separately.
    """

    __slots__ = ("algebra", "elements", "generators", "word_of", "identity_nonempty_word", "_index")

    def __init__(self, algebra, elements, generators, word_of, identity_nonempty_word):
        self.algebra: Algebra = algebra
        self.elements: tuple[Transformation, ...] = elements
        self.generators: tuple[tuple[str, Transformation], ...] = generators
        self.word_of: dict[Transformation, tuple[str, ...]] = word_of
        self.identity_nonempty_word: bool = identity_nonempty_word
        self._index = {f: i for i, f in enumerate(elements)}

    @property
    def m(self) -> int:
        return self.algebra.m

    @property
    def contains_identity(self) -> bool:
        return True

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, f):
        return f in self._index

    def index(self, f: Transformation) -> int:
        try:
            return self._index[f]
        except KeyError:
            raise MembershipError(f"{f} is not in the translation monoid") from None

    def word(self, f: Transformation) -> tuple[str, ...]:
        try:
            return self.word_of[f]
        except KeyError:
            raise MembershipError(f"{f} is not in the translation monoid") from None

    @property
    def max_word_length(self) -> int:
        return max(len(w) for w in self.word_of.values())

    def compose_word(self, word) -> Transformation:
        return compose_word(self.algebra, word)

    def to_json_obj(self) -> dict:
        classes = j_classes(self)
        edges = j_order_edges(self, classes)
        return {
            "m": self.m,
            "size": len(self.elements),
            "latin_square": self.algebra.is_latin_square(),
            "generators": [
                {"tag": tag, "images": list(g.images)} for tag, g in self.generators
            ],
            "identity_nonempty_word": self.identity_nonempty_word,
            "elements": [
                {
                    "images": list(f.images),
                    "rank": f.rank(),
                    "word": list(self.word_of[f]),
                }
                for f in self.elements
            ],
            "j_classes": [
                {"rank": c.rank, "members": [list(f.images) for f in c.members]}
                for c in classes
            ],
            "ideal_edges": [list(e) for e in edges],
        }


def generate(alg: Algebra) -> MonoidClosure:
    """Breadth-first closure of the translations, from the identity.

    Each popped element is extended by every generator (applied after it)
    in tag order L0..L{m-1}, R0..R{m-1}; first discovery wins, so every
    stored word is shortest with ties broken by tag order. Termination is
    guaranteed: there are at most m**m transformations.
    """
    gens = alg.translations()
    ident = identity(alg.m)
    word_of: dict[Transformation, tuple[str, ...]] = {ident: ()}
    queue = deque([ident])
    identity_nonempty_word = False
    while queue:
        f = queue.popleft()
        word = word_of[f]
        for tag, g in gens:
            h = compose(g, f)
            if h == ident:
                identity_nonempty_word = True
            if h not in word_of:
                word_of[h] = word + (tag,)
                queue.append(h)
    elements = tuple(sorted(word_of, key=lambda t: t.images))
    return MonoidClosure(alg, elements, tuple(gens), word_of, identity_nonempty_word)


def compose_word(alg: Algebra, word) -> Transformation:
    """Compose generator tags in application order (first tag acts first)."""
    gens = dict(alg.translations())
    acc = identity(alg.m)
    for tag in word:
        try:
            g = gens[tag]
        except KeyError:
            raise ParseError(f"unknown generator tag {tag!r}") from None
        acc = compose(g, acc)
    return acc


def principal_ideal(M: MonoidClosure, f: Transformation) -> frozenset[Transformation]:
    """The two-sided principal ideal {g o f o h : g, h in M}.

    Computed by closing {f} under composition with the generators on both
    sides; since M contains the identity, this equals the full set of
    two-sided products.
    """
    if f not in M:
        raise MembershipError(f"{f} is not in the translation monoid")
    gens = [g for _, g in M.generators]
    seen = {f}
    stack = [f]
    while stack:
        s = stack.pop()
        for g in gens:
            for h in (compose(g, s), compose(s, g)):
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
    return frozenset(seen)


def j_classes(M: MonoidClosure) -> list[JClass]:
    """Partition of M by equality of principal ideals.

    Classes are sorted by (rank, canonical order of least member); the
    members inside each class are in canonical order.
    """
    by_ideal: dict[frozenset[Transformation], list[Transformation]] = {}
    for f in M.elements:
        by_ideal.setdefault(principal_ideal(M, f), []).append(f)
    classes = [JClass(tuple(ms), ms[0].rank()) for ms in by_ideal.values()]
    classes.sort(key=lambda c: (c.rank, c.members[0].images))
    return classes


def rank_ideal(M: MonoidClosure, r: int) -> RankIdeal:
    """The ideal of all elements of rank at most r; may be empty."""
    if not isinstance(r, int) or isinstance(r, bool) or not 1 <= r <= M.m:
        raise RankRangeError(f"rank bound {r!r} outside [1, {M.m}]")
    return RankIdeal(r, tuple(f for f in M.elements if f.rank() <= r))


def minimal_ideal(M: MonoidClosure) -> RankIdeal:
    """The minimum-rank layer, which is the minimal nonempty two-sided ideal."""
    r_min = min(f.rank() for f in M.elements)
    return RankIdeal(r_min, tuple(f for f in M.elements if f.rank() == r_min))


def j_order_edges(M: MonoidClosure, classes: list[JClass] | None = None) -> list[tuple[int, int]]:
    """Covering edges of ideal containment between J-classes.

    An edge (i, j) means class i's principal ideal properly contains
    class j's, with no class strictly between. Indices refer to the
    j_classes ordering.
    """
    if classes is None:
        classes = j_classes(M)
    ideals = [principal_ideal(M, c.members[0]) for c in classes]
    k = len(classes)
    above = [[ideals[j] < ideals[i] for j in range(k)] for i in range(k)]
    edges = []
    for i in range(k):
        for j in range(k):
            if above[i][j] and not any(above[i][x] and above[x][j] for x in range(k)):
                edges.append((i, j))
    return edges


def j_order_dot(M: MonoidClosure) -> str:
    """DOT digraph of the J-class order, larger ideals drawn above."""
    classes = j_classes(M)
    edges = j_order_edges(M, classes)
    lines = ["digraph jorder {", "  rankdir=TB;", "  node [shape=box];"]
    for i, c in enumerate(classes):
        members = " ".join(str(f) for f in c.members)
        lines.append(f'  c{i} [label="rank {c.rank}\\n{members}"];')
    for i, j in edges:
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
