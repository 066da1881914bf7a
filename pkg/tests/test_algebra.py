import pytest

from magmon import Algebra, InvalidElementError, ParseError, Transformation

from conftest import cyclic_algebra, nand_algebra, sample3_algebra


def test_star_reads_the_table():
    alg = nand_algebra()
    assert alg.star(0, 0) == 1
    assert alg.star(1, 1) == 0
    alg3 = sample3_algebra()
    assert alg3.star(2, 2) == 2
    assert alg3.star(0, 2) == 0


def test_star_left_projection_table():
    alg = Algebra(tuple(tuple(x for _ in range(3)) for x in range(3)))
    for x in range(3):
        for y in range(3):
            assert alg.star(x, y) == x


def test_star_rejects_out_of_range():
    alg = nand_algebra()
    with pytest.raises(InvalidElementError):
        alg.star(2, 0)
    with pytest.raises(InvalidElementError):
        alg.star(0, -1)


def test_left_translation_values():
    alg3 = sample3_algebra()
    assert alg3.left_translation(0) == Transformation((1, 0, 0))
    assert alg3.left_translation(2) == Transformation((0, 1, 2))
    assert nand_algebra().left_translation(0) == Transformation((1, 1))


def test_right_translation_values():
    alg3 = sample3_algebra()
    assert alg3.right_translation(0) == Transformation((1, 1, 0))
    assert alg3.right_translation(1) == Transformation((0, 1, 1))
    assert nand_algebra().right_translation(1) == Transformation((1, 0))


def test_right_translation_of_right_projection_is_constant():
    alg = Algebra(tuple(tuple(y for y in range(3)) for _ in range(3)))
    for a in range(3):
        assert alg.right_translation(a) == Transformation((a, a, a))


def test_translations_agree_with_star_pointwise():
    alg = sample3_algebra()
    for a in range(alg.m):
        left = alg.left_translation(a)
        right = alg.right_translation(a)
        for x in range(alg.m):
            assert left(x) == alg.star(a, x)
            assert right(x) == alg.star(x, a)


def test_translation_tags_are_in_fixed_order():
    alg = nand_algebra()
    assert [tag for tag, _ in alg.translations()] == ["L0", "L1", "R0", "R1"]


def test_is_latin_square():
    assert cyclic_algebra(2).is_latin_square()
    assert not sample3_algebra().is_latin_square()  # row 1 is (1,1,1)
    assert not nand_algebra().is_latin_square()  # row 0 is (1,1)


def test_latin_square_generators_are_bijections():
    alg = cyclic_algebra(4)
    for _, g in alg.translations():
        assert g.is_bijection()


def test_construction_validates_entries():
    with pytest.raises(InvalidElementError):
        Algebra(((0, 1), (2, 0)))
    with pytest.raises(InvalidElementError):
        Algebra(((0, 1), (0,)))
    with pytest.raises(InvalidElementError):
        Algebra(())


def test_construction_validates_labels():
    with pytest.raises(InvalidElementError):
        Algebra(((0, 0), (0, 0)), labels=("a",))
    with pytest.raises(InvalidElementError):
        Algebra(((0, 0), (0, 0)), labels=("a", "a"))
    alg = Algebra(((0, 0), (0, 0)), labels=("a", "b"))
    assert alg.label(1) == "b"
    assert Algebra(((0, 0), (0, 0))).label(1) == "1"


def test_text_round_trip():
    for alg in (nand_algebra(), sample3_algebra(), Algebra(((0,),), labels=("z",))):
        assert Algebra.from_text(alg.to_text()) == alg


def test_from_text_comments_and_blanks():
    text = """
# a 2-element table
2
# rows follow
1 1
1 0
"""
    assert Algebra.from_text(text) == nand_algebra()


def test_from_text_labels_line():
    alg = Algebra.from_text("2\n0 1\n1 0\nlabels: e g\n")
    assert alg.labels == ("e", "g")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "x\n0\n",
        "2\n0 1\n",
        "2\n0 1\n1 2\n",
        "2\n0 1 0\n1 0\n",
        "2\n0 1\n1 0\nextra\n",
        "2\n0 1\n1 0\nlabels: a\n",
        "0\n",
    ],
)
def test_from_text_rejects_malformed(text):
    with pytest.raises(ParseError):
        Algebra.from_text(text)
