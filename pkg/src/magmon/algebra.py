"""Finite binary algebras presented as Cayley tables.

An algebra is a set {0, ..., m-1} with one binary operation given by an
m x m table: ``table[x][y]`` is the product x*y (row = left operand).
The element order 0 < 1 < ... < m-1 is fixed at construction and is the
order used whenever tuples are listed lexicographically.
"""

from __future__ import annotations

from .errors import InvalidElementError, ParseError
from .transformations import Transformation


class Algebra:
    __slots__ = ("m", "table", "labels")

    def __init__(self, table, labels=None):
        rows = tuple(tuple(row) for row in table)
        m = len(rows)
        if m == 0:
            raise InvalidElementError("a Cayley table needs at least one row")
        for i, row in enumerate(rows):
            if len(row) != m:
                raise InvalidElementError(f"row {i} has {len(row)} entries, expected {m}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < m:
                    raise InvalidElementError(f"entry {v!r} at ({i},{j}) outside [0, {m})")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != m:
                raise InvalidElementError(f"{len(labels)} labels for {m} elements")
            if len(set(labels)) != m:
                raise InvalidElementError("labels must be pairwise distinct")
        self.m: int = m
        self.table: tuple[tuple[int, ...], ...] = rows
        self.labels: tuple[str, ...] | None = labels

    def check_element(self, x: int) -> None:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.m:
            raise InvalidElementError(f"element {x!r} outside carrier [0, {self.m})")

    def star(self, x: int, y: int) -> int:
        """The product x*y read from the table."""
        self.check_element(x)
        self.check_element(y)
        return self.table[x][y]

    def left_translation(self, a: int) -> Transformation:
        """The map x -> a*x, i.e. row a of the table."""
        self.check_element(a)
        return Transformation(self.table[a])

    def right_translation(self, a: int) -> Transformation:
        """The map x -> x*a, i.e. column a of the table."""
        self.check_element(a)
        return Transformation(tuple(self.table[x][a] for x in range(self.m)))

    def translations(self) -> list[tuple[str, Transformation]]:
        """All generator translations, tagged L0..L{m-1} then R0..R{m-1}."""
        out = [(f"L{a}", self.left_translation(a)) for a in range(self.m)]
        out += [(f"R{a}", self.right_translation(a)) for a in range(self.m)]
        return out

    def is_latin_square(self) -> bool:
        """True iff every row and every column is a permutation of [0, m)."""
        full = set(range(self.m))
        for row in self.table:
            if set(row) != full:
                return False
        for j in range(self.m):
            if {row[j] for row in self.table} != full:
                return False
        return True

    def label(self, x: int) -> str:
        self.check_element(x)
        return self.labels[x] if self.labels is not None else str(x)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.table == other.table and self.labels == other.labels

    def __hash__(self):
        return hash((self.table, self.labels))

    def __repr__(self):
        return f"Algebra(m={self.m})"

    # -- text format ---------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: size line, m table rows, optional labels line."""
        lines = [str(self.m)]
        for row in self.table:
            lines.append(" ".join(str(v) for v in row))
        if self.labels is not None:
            lines.append("labels: " + " ".join(self.labels))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Algebra":
        """Parse the table format written by to_text.

        Lines starting with '#' are comments; blank lines are ignored.
        The first substantive line is the carrier size m, followed by m
        rows of m whitespace-separated integers, then an optional
        "labels: ..." line.
        """
        lines = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            lines.append((lineno, stripped))
        if not lines:
            raise ParseError("no content: expected a carrier size line")
        lineno, head = lines[0]
        try:
            m = int(head)
        except ValueError:
            raise ParseError(f"line {lineno}: expected carrier size, got {head!r}") from None
        if m < 1:
            raise ParseError(f"line {lineno}: carrier size must be >= 1, got {m}")
        if len(lines) < 1 + m:
            raise ParseError(f"expected {m} table rows, found {len(lines) - 1}")
        rows = []
        for lineno, line in lines[1 : 1 + m]:
            parts = line.split()
            if len(parts) != m:
                raise ParseError(f"line {lineno}: expected {m} entries, got {len(parts)}")
            row = []
            for part in parts:
                try:
                    v = int(part)
                except ValueError:
                    raise ParseError(f"line {lineno}: bad entry {part!r}") from None
                if not 0 <= v < m:
                    raise ParseError(f"line {lineno}: entry {v} outside [0, {m})")
                row.append(v)
            rows.append(tuple(row))
        labels = None
        rest = lines[1 + m :]
        if rest:
            lineno, line = rest[0]
            if not line.startswith("labels:"):
                raise ParseError(f"line {lineno}: unexpected content {line!r}")
            labels = line[len("labels:") :].split()
            if len(labels) != m:
                raise ParseError(f"line {lineno}: expected {m} labels, got {len(labels)}")
            if len(set(labels)) != m:
                raise ParseError(f"line {lineno}: labels must be pairwise distinct")
            if len(rest) > 1:
                raise ParseError(f"line {rest[1][0]}: unexpected content after labels")
        return cls(rows, labels)
