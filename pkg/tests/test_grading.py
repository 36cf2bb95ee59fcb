import pytest

import oracles
from zgrass.grading import (PRESETS, GradedAlgebra, GradingSpec, parse_blocks, parse_preset, pq_class,
                            pq_decompose, preset, quotient)
from zgrass.grassmann import Element

ALL = [preset("can"), preset("k", k=2), preset("k_star", k=2), preset("infinity"), preset("r_infinity", r=2),
       preset("pq_1_infinity", p=3, q=5), preset("pq_k_infinity", p=3, q=5, k=2), preset("index")]


def test_preset_names():
    assert {g.name for g in ALL} == set(PRESETS)


@pytest.mark.parametrize(("g", "degs"), [
    (preset("can"), (1, 1, 1, 1)),
    (preset("k", k=2), (0, 0, 1, 1)),
    (preset("k_star", k=2), (1, 1, 0, 0)),
    (preset("infinity"), (1, 0, 1, 0)),
    (preset("r_infinity", r=3), (3, 3, 3, 3)),
    (preset("pq_1_infinity", p=3, q=5), (3, 5, 5, 5)),
    (preset("pq_k_infinity", p=3, q=5, k=2), (3, 3, 5, 5)),
    (preset("index"), (1, 2, 3, 4)),
])
def test_generator_degrees(g, degs):
    assert g.degrees(4) == degs


@pytest.mark.parametrize("g", ALL + [quotient(preset("k", k=2), 2), quotient(preset("infinity"), 2)],
                         ids=lambda g: g.describe())
def test_components_match_brute_force(g):
    rank = 8
    A = GradedAlgebra(g, rank)
    lo, hi = (0, 2) if g.modulus else (-2, 12)
    for d in range(lo, hi):
        got = sorted(A.component_basis(d, max_len=rank))
        ref = sorted(oracles.tuple_to_mask(t)
                     for t in oracles.words_of_degree(g.generator_degree, rank, d, rank, g.modulus))
        assert got == ref, d


def test_degree_of_elements():
    A = GradedAlgebra(preset("can"), 6)
    x = Element.from_indices([1, 2], 1, A.field, 6) + Element.from_indices([3, 4], 1, A.field, 6)
    assert A.degree(x) == 2
    assert A.is_homogeneous_of(x, 2)
    assert A.degree(x + Element.gen(5, A.field, 6)) is None


def test_parse_preset_and_blocks():
    assert parse_preset("k_star(2)") == preset("k_star", k=2)
    assert parse_preset("pq_k_infinity(p=3, q=5, k=2)") == preset("pq_k_infinity", p=3, q=5, k=2)
    assert parse_blocks("(0,inf);(1,2)").blocks == ((0, None), (1, 2))
    with pytest.raises(ValueError):
        parse_preset("nope")
    with pytest.raises(ValueError):
        parse_blocks("0,1")


@pytest.mark.parametrize("kw", [dict(name="pq_k_infinity", p=3, q=5, k=3), dict(name="pq_1_infinity", p=5, q=3),
                                dict(name="pq_1_infinity", p=4, q=5), dict(name="k", k=-1),
                                dict(name="r_infinity", r=0)])
def test_preset_preconditions(kw):
    with pytest.raises(ValueError):
        preset(**kw)


def test_block_validation():
    with pytest.raises(ValueError):
        GradingSpec(((1, 2),))          # no infinite block
    with pytest.raises(ValueError):
        GradingSpec(((1, None), (0, None)))  # degrees not increasing
    with pytest.raises(ValueError):
        quotient(preset("can"), 1)


def test_pq_decomposition():
    assert pq_decompose(8, 3, 5) == (1, 1)
    assert pq_class(8, 3, 5) == "C4"
    assert pq_class(1, 3, 5) is None
    assert pq_decompose(10, 3, 5, 2) == (0, 2)


def test_rank_for():
    g = preset("k_star", k=2)
    assert g.rank_for({0: 1, 1: 2}) == 3
    assert g.rank_for({0: 3}) == 5          # e3, e4, e5 follow the finite block
    assert preset("infinity").rank_for({0: 2, 1: 1}) == 4
