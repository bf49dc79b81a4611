import random

import pytest

from typec_brauer.algebra import generator_diagram, nested_arc_diagram
from typec_brauer.diagrams import (
    BrauerDiagram,
    arc_count,
    compose,
    enumerate_symmetric_diagrams,
    flip,
    is_symmetric,
    mirror,
)
from typec_brauer.errors import RankMismatchError, ResourceLimitError

from oracles import all_matchings, is_mirror_fixed, oracle_compose


def crossing_12_n2():
    # single crossing at positions (1,2), everything else vertical: asymmetric
    return BrauerDiagram(2, [(1, 6), (2, 5), (3, 7), (4, 8)])


def test_compose_examples():
    e1 = generator_diagram("E", 1, 1)
    d, loops = compose(e1, e1)
    assert d == e1 and loops == 1
    e2 = generator_diagram("E", 2, 2)
    d, loops = compose(e2, e2)
    assert d == e2 and loops == 2
    rng = random.Random(3)
    for n in (1, 2, 3):
        diagrams = enumerate_symmetric_diagrams(n)
        for d in rng.sample(diagrams, min(10, len(diagrams))):
            out, loops = compose(BrauerDiagram.identity(n), d)
            assert out == d and loops == 0


def test_compose_rank_mismatch():
    with pytest.raises(RankMismatchError):
        compose(BrauerDiagram.identity(1), BrauerDiagram.identity(2))


def test_mirror_examples():
    assert mirror(generator_diagram("E", 1, 2)) == generator_diagram("E", 1, 2)
    assert mirror(BrauerDiagram.identity(3)) == BrauerDiagram.identity(3)
    # crossing at (1,2) reflects to the crossing at (3,4)
    expected = BrauerDiagram(2, [(1, 5), (2, 6), (3, 8), (4, 7)])
    assert mirror(crossing_12_n2()) == expected


def test_flip_examples():
    assert flip(generator_diagram("E", 1, 2)) == generator_diagram("E", 1, 2)
    assert flip(generator_diagram("R", 1, 2)) == generator_diagram("R", 1, 2)
    rng = random.Random(5)
    points = list(range(1, 13))
    for pairs in rng.sample(list(all_matchings(points)), 20):
        d = BrauerDiagram(3, pairs)
        assert flip(flip(d)) == d


def test_is_symmetric():
    assert is_symmetric(generator_diagram("E", 1, 2))
    assert not is_symmetric(crossing_12_n2())
    assert is_symmetric(nested_arc_diagram(2, 2))


def test_enumerate_counts_against_matching_oracle():
    for n, expected in ((1, 3), (2, 25)):
        brute = [
            m
            for m in all_matchings(range(1, 4 * n + 1))
            if is_mirror_fixed(m, n)
        ]
        found = enumerate_symmetric_diagrams(n)
        assert len(found) == expected == len(brute)
        assert {BrauerDiagram(n, m) for m in brute} == set(found)


def test_enumerate_is_canonical_and_symmetric():
    found = enumerate_symmetric_diagrams(2)
    assert found == sorted(found)
    assert len(set(found)) == len(found)
    assert all(is_symmetric(d) for d in found)


def test_enumerate_resource_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_symmetric_diagrams(3, bound=2)


def test_compose_matches_independent_oracle():
    rng = random.Random(11)
    for n in (1, 2, 3):
        matchings = list(all_matchings(range(1, 4 * n + 1)))
        for _ in range(40):
            p1 = rng.choice(matchings)
            p2 = rng.choice(matchings)
            d, loops = compose(BrauerDiagram(n, p1), BrauerDiagram(n, p2))
            expected_pairs, expected_loops = oracle_compose(p1, p2, n)
            assert set(d.pairs) == expected_pairs
            assert loops == expected_loops


def test_associativity_with_loops():
    def total(d1, d2, d3):
        a, l1 = compose(d1, d2)
        b, l2 = compose(a, d3)
        return b, l1 + l2

    def total_right(d1, d2, d3):
        a, l1 = compose(d2, d3)
        b, l2 = compose(d1, a)
        return b, l1 + l2

    diagrams = enumerate_symmetric_diagrams(2)
    for d1 in diagrams:
        for d2 in diagrams:
            for d3 in diagrams:
                assert total(d1, d2, d3) == total_right(d1, d2, d3)
    rng = random.Random(17)
    for n in (3, 4):
        pool = enumerate_symmetric_diagrams(n)
        for _ in range(150):
            d1, d2, d3 = (rng.choice(pool) for _ in range(3))
            assert total(d1, d2, d3) == total_right(d1, d2, d3)


def test_mirror_is_monoid_automorphism():
    diagrams = enumerate_symmetric_diagrams(1)
    rng = random.Random(23)
    pool = list(all_matchings(range(1, 9)))
    for _ in range(120):
        d1 = BrauerDiagram(2, rng.choice(pool))
        d2 = BrauerDiagram(2, rng.choice(pool))
        prod, loops = compose(d1, d2)
        mprod, mloops = compose(mirror(d1), mirror(d2))
        assert mirror(prod) == mprod and loops == mloops


def test_flip_is_anti_automorphism():
    rng = random.Random(29)
    pool = list(all_matchings(range(1, 9)))
    for _ in range(120):
        d1 = BrauerDiagram(2, rng.choice(pool))
        d2 = BrauerDiagram(2, rng.choice(pool))
        prod, loops = compose(d1, d2)
        fprod, floops = compose(flip(d2), flip(d1))
        assert flip(prod) == fprod and loops == floops


def test_symmetric_products_stay_symmetric():
    diagrams = enumerate_symmetric_diagrams(2)
    for d1 in diagrams:
        for d2 in diagrams:
            prod, _ = compose(d1, d2)
            assert is_symmetric(prod)


def test_arc_count_filtration():
    for n in (1, 2, 3):
        diagrams = enumerate_symmetric_diagrams(n)
        for d1 in diagrams:
            for d2 in diagrams:
                prod, _ = compose(d1, d2)
                assert arc_count(prod) >= max(arc_count(d1), arc_count(d2))


def test_arc_count_examples():
    assert arc_count(BrauerDiagram.identity(2)) == 0
    assert arc_count(generator_diagram("E", 1, 2)) == 1
    assert arc_count(generator_diagram("E", 2, 2)) == 2


def test_through_strands_pair_up():
    for n in (1, 2, 3):
        for d in enumerate_symmetric_diagrams(n):
            assert len(d.through_pairs()) % 2 == 0


def test_json_encoding_exact():
    e1 = generator_diagram("E", 1, 2)
    assert e1.to_json() == {
        "n": 2,
        "pairs": [["T1", "B1"], ["T2", "T3"], ["T4", "B4"], ["B2", "B3"]],
    }
    assert BrauerDiagram.from_json(e1.to_json()) == e1
