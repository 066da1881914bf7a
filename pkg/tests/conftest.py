import itertools

import pytest

from magmon import Algebra

# 2-element sample: x*y = NAND(x, y). Both ternary bracketings induce
# different term operations, which makes it a good smoke table.
NAND_TABLE = ((1, 1), (1, 0))

# 3-element sample whose translation monoid has 7 elements and four
# J-classes, two of them sharing rank 2.
SAMPLE3_TABLE = ((1, 0, 0), (1, 1, 1), (0, 1, 2))


def nand_algebra():
    return Algebra(NAND_TABLE)


def sample3_algebra():
    return Algebra(SAMPLE3_TABLE)


def cyclic_algebra(n):
    """The cyclic group Z_n as a Cayley table."""
    return Algebra(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def sym3_algebra():
    """The symmetric group on 3 letters, elements ordered lexicographically
    as one-line permutations, (p*q)(x) = p(q(x))."""
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[x]] for x in range(3))] for q in perms) for p in perms
    )
    return Algebra(table)


def all_two_element_algebras():
    """All 16 binary operations on a 2-element set."""
    out = []
    for cells in itertools.product(range(2), repeat=4):
        out.append(Algebra((cells[0:2], cells[2:4])))
    return out


@pytest.fixture
def nand():
    return nand_algebra()


@pytest.fixture
def sample3():
    return sample3_algebra()
