import itertools
import json
import random

import pytest

from magmon import (
    Algebra,
    ArityError,
    CarrierMismatchError,
    EvaluationWord,
    SizeCapError,
    Transformation,
    apply_map_to_word,
    enumerate_bracketings,
    eval_term,
    evaluation_array,
    evaluation_word,
    lex_tuples,
)

from conftest import nand_algebra, sample3_algebra


def test_lex_tuples_order_m2_n3():
    assert list(lex_tuples(2, 3)) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1),
        (1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1),
    ]


def test_lex_tuples_degenerate_and_base3():
    assert list(lex_tuples(1, 4)) == [(0, 0, 0, 0)]
    nine = list(lex_tuples(3, 2))
    assert len(nine) == 9
    assert nine[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]


def test_lex_tuples_cap():
    with pytest.raises(SizeCapError):
        lex_tuples(10, 9, cap=10**8)
    with pytest.raises(ArityError):
        lex_tuples(2, 0)


def test_eval_term_values():
    alg = nand_algebra()
    t1 = enumerate_bracketings(3)[0]
    assert eval_term(alg, t1, (1, 1, 1)) == 1
    leaf = enumerate_bracketings(1)[0]
    for a in range(2):
        assert eval_term(alg, leaf, (a,)) == a
    alg3 = sample3_algebra()
    t2 = enumerate_bracketings(3)[1]
    assert eval_term(alg3, t2, (0, 1, 2)) == alg3.star(alg3.star(0, 1), 2) == 0


def test_eval_term_arity_mismatch():
    alg = nand_algebra()
    with pytest.raises(ArityError):
        eval_term(alg, enumerate_bracketings(3)[0], (0, 1))


def test_eval_term_total_and_in_range():
    for alg in (nand_algebra(), sample3_algebra()):
        for n in (1, 2, 3):
            for t in enumerate_bracketings(n):
                for tup in lex_tuples(alg.m, n):
                    assert 0 <= eval_term(alg, t, tup) < alg.m


def test_eval_term_handles_deep_combs():
    # left and right combs with 600 leaves would break naive recursion
    from magmon import Leaf, Node

    alg = nand_algebra()
    left = Leaf(1)
    for i in range(2, 601):
        left = Node(left, Leaf(i))
    right = Leaf(600)
    for i in range(599, 0, -1):
        right = Node(Leaf(i), right)
    assert eval_term(alg, left, (0,) * 600) in (0, 1)
    assert eval_term(alg, right, (0,) * 600) in (0, 1)


def test_evaluation_words_of_nand_sample():
    alg = nand_algebra()
    t1, t2 = enumerate_bracketings(3)
    assert evaluation_word(alg, t1).render() == "11110001"
    assert evaluation_word(alg, t2).render() == "10101011"


def test_evaluation_word_identity_listing():
    leaf = enumerate_bracketings(1)[0]
    for alg in (nand_algebra(), sample3_algebra()):
        assert evaluation_word(alg, leaf).symbols == tuple(range(alg.m))


def test_evaluation_word_lengths():
    for alg in (nand_algebra(), sample3_algebra()):
        for n in (1, 2, 3, 4):
            for t in enumerate_bracketings(n):
                assert len(evaluation_word(alg, t)) == alg.m**n


def test_array_of_nand_sample():
    alg = nand_algebra()
    array = evaluation_array(alg, 3)
    assert [w.render() for w in array.words()] == ["11110001", "10101011"]


def test_array_n2_is_row_major_table():
    for alg in (nand_algebra(), sample3_algebra()):
        array = evaluation_array(alg, 2)
        assert len(array.columns) == 1
        flat = tuple(v for row in alg.table for v in row)
        assert array.words()[0].symbols == flat


def test_array_column_count_and_cap():
    alg = sample3_algebra()
    array = evaluation_array(alg, 4)
    assert len(array.columns) == 5
    assert all(len(w) == 81 for w in array.words())
    with pytest.raises(SizeCapError):
        evaluation_array(alg, 4, cap=100)


def test_apply_map_to_word():
    word = EvaluationWord((0, 1), 1, 2)
    assert apply_map_to_word(Transformation((1, 1)), word).render() == "11"
    assert apply_map_to_word(Transformation((0, 0)), word).render() == "00"
    assert apply_map_to_word(Transformation((0, 1)), word) == word


def test_apply_map_compose_property():
    rng = random.Random(7)
    for _ in range(100):
        m = rng.randint(1, 4)
        f = Transformation(tuple(rng.randrange(m) for _ in range(m)))
        g = Transformation(tuple(rng.randrange(m) for _ in range(m)))
        word = EvaluationWord(tuple(rng.randrange(m) for _ in range(6)), 1, m)
        from magmon import compose

        assert apply_map_to_word(compose(g, f), word) == apply_map_to_word(
            g, apply_map_to_word(f, word)
        )


def test_apply_map_carrier_mismatch():
    with pytest.raises(CarrierMismatchError):
        apply_map_to_word(Transformation((0, 1, 2)), EvaluationWord((0, 1), 1, 2))


def test_render_wide_carrier_uses_commas():
    word = EvaluationWord((0, 10, 3), 1, 11)
    assert word.render() == "0,10,3"


def test_csv_export_shape():
    alg = nand_algebra()
    array = evaluation_array(alg, 3)
    lines = array.to_csv().splitlines()
    assert lines[0] == "x1,x2,x3,(x1*(x2*x3)),((x1*x2)*x3)"
    assert len(lines) == 1 + 8
    assert lines[1] == "0,0,0,1,1"
    assert lines[-1] == "1,1,1,1,1"


def test_json_export_matches_words():
    alg = sample3_algebra()
    array = evaluation_array(alg, 2)
    obj = json.loads(json.dumps(array.to_json_obj()))
    assert obj["n"] == 2 and obj["m"] == 3
    assert obj["bracketings"] == ["(x1*x2)"]
    assert obj["inputs"] == [list(t) for t in itertools.product(range(3), repeat=2)]
    assert tuple(obj["columns"][0]) == array.words()[0].symbols
