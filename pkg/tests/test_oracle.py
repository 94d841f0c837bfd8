import itertools

import numpy as np
import pytest

from wsnga import EQ2, EQ3, FitnessKind, RadioModel, exhaustive_best, fitness
from wsnga.oracle import all_chromosomes

from conftest import line_deployment


def test_single_node():
    dep = line_deployment([(3, 4)])
    best, b = exhaustive_best(dep, RadioModel(), EQ3)
    assert str(best) == "1" and b.TCH == 1
    assert b.F == fitness([True], dep, RadioModel(), EQ3).F


def test_two_nodes_hand_enumeration():
    # TD = 11. "10": RCSD 9+1 -> 1/11 + 1/2; "01": RCSD 9+10 -> -8/11 + 1/2; "11": 0
    dep = line_deployment([(1, 0), (10, 0)])
    best, b = exhaustive_best(dep, RadioModel(), FitnessKind.generalized(0, 1, 1))
    assert str(best) == "10"
    assert b.F == pytest.approx(1 / 11 + 1 / 2, rel=1e-12)


def test_cap():
    dep = line_deployment([(i, 0) for i in range(1, 22)])
    with pytest.raises(ValueError):
        exhaustive_best(dep, RadioModel())


def test_enumeration_covers_every_nonzero_vector():
    rows = all_chromosomes(4)
    assert len(rows) == 15
    assert len({r.tobytes() for r in rows}) == 15
    assert not (~rows.any(axis=1)).any()


def test_lexicographic_tie_break():
    # weights (0,0,1) make every single-head chromosome tie
    dep = line_deployment([(1, 0), (2, 0), (3, 0), (4, 0)])
    best, _ = exhaustive_best(dep, RadioModel(), FitnessKind.generalized(0, 0, 1))
    assert str(best) == "0001"


@pytest.mark.parametrize("kind", [EQ2, EQ3])
def test_matches_plain_loop(field12, kind):
    r = RadioModel()
    scored = []
    for bits in itertools.product([False, True], repeat=12):
        if any(bits):
            s = "".join("1" if b else "0" for b in bits)
            scored.append((fitness(list(bits), field12, r, kind).F, s))
    top = max(f for f, _ in scored)
    expected = min(s for f, s in scored if f == top)
    best, b = exhaustive_best(field12, r, kind)
    assert str(best) == expected
    assert b.F == top


def test_seed_independent(field12):
    a = exhaustive_best(field12, RadioModel())
    np.random.seed(123)
    b = exhaustive_best(field12, RadioModel())
    assert str(a[0]) == str(b[0]) and a[1] == b[1]
