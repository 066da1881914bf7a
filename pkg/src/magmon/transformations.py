"""Unary self-maps of a finite carrier, stored as image tuples."""

from __future__ import annotations

from .errors import CarrierMismatchError, InvalidElementError


class Transformation:
    """A map f on {0, ..., m-1}, stored as the tuple (f(0), ..., f(m-1)).

    Transformations are immutable values: equality, hashing and the
    canonical order all go through the image tuple.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if not images:
            raise InvalidElementError("a transformation needs a carrier of size >= 1")
        m = len(images)
        for v in images:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < m:
                raise InvalidElementError(f"image {v!r} outside carrier [0, {m})")
        self.images: tuple[int, ...] = images

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < len(self.images):
            raise InvalidElementError(f"element {x!r} outside carrier [0, {len(self.images)})")
        return self.images[x]

    def rank(self) -> int:
        """Number of distinct values in the image; between 1 and m."""
        return len(set(self.images))

    def is_bijection(self) -> bool:
        return self.rank() == len(self.images)

    def _require_same_carrier(self, other: "Transformation") -> None:
        if len(self.images) != len(other.images):
            raise CarrierMismatchError(
                f"carrier sizes differ: {len(self.images)} vs {len(other.images)}"
            )

    def __eq__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        self._require_same_carrier(other)
        return self.images < other.images

    def __le__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        self._require_same_carrier(other)
        return self.images <= other.images

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.images) + ")"

    def __repr__(self):
        return f"Transformation({self.images!r})"


def identity(m: int) -> Transformation:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InvalidElementError(f"carrier size must be a positive integer, got {m!r}")
    return Transformation(range(m))


def compose(g: Transformation, f: Transformation) -> Transformation:
    """g after f: the right factor applies first, (g o f)(x) = g(f(x))."""
    g._require_same_carrier(f)
    gi = g.images
    return Transformation(tuple(gi[v] for v in f.images))


def canonical_compare(f: Transformation, g: Transformation) -> int:
    """-1, 0 or 1 by lexicographic comparison of image tuples."""
    f._require_same_carrier(g)
    if f.images < g.images:
        return -1
    if f.images > g.images:
        return 1
    return 0
