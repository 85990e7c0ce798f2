import pytest
from hypothesis import given, strategies as st

from strategies import classes
from vcmax.cube import ConceptClass, complement
from vcmax.errors import PreconditionError
from vcmax.liftshift import closed_below_maximum
from vcmax.vc import (
    complement_cube_bound,
    complete_collection_in,
    count_k_cubes_in_complement,
    deficiency,
    greedy_maximal_extension,
    is_maximal,
    is_maximum,
    phi,
    sauer_bound,
    shatter_witness,
    shattered_sets,
    vc_dim_via_complement,
    vc_dimension,
)
import oracles

# the two maximal VC-2 classes of the 4-cube, up to symmetry
STAR_PLUS_EDGE = ConceptClass.from_strings(
    ["0000", "0001", "0010", "0011", "0100", "0101", "0110", "1011", "1101", "1110"]
)
TWO_PATHS = ConceptClass.from_strings(
    ["0000", "0001", "0010", "0011", "0100", "0101", "1000", "1010", "1100", "1111"]
)


def test_vc_examples():
    assert vc_dimension(ConceptClass.full(3)) == 3
    assert vc_dimension(ConceptClass.from_strings(["010"])) == 0
    assert vc_dimension(closed_below_maximum(4, 2)) == 2
    assert vc_dimension(ConceptClass.empty(3)) == -1


@given(classes(max_n=6))
def test_vc_matches_oracle(c):
    assert vc_dimension(c) == oracles.vc(c.n, c.vertices)


@given(classes(max_n=5, nonempty=True))
def test_sauer_inequality(c):
    assert len(c) <= phi(c.n, vc_dimension(c))
    assert deficiency(c).deficiency >= 0


@given(classes(max_n=6, nonempty=True))
def test_vc_via_complement_agrees(c):
    assert vc_dim_via_complement(c) == vc_dimension(c)


def test_vc_via_complement_examples():
    assert vc_dim_via_complement(complement(ConceptClass.from_vertices(4, [5]))) == 3
    assert vc_dim_via_complement(closed_below_maximum(3, 1)) == 1


def test_shatter_witness():
    w = shatter_witness(closed_below_maximum(3, 1), (0, 1))
    assert w.achieved_patterns == frozenset({0, 1, 2}) and not w.shattered
    assert shattered_sets(closed_below_maximum(3, 2), 2) == [(0, 1), (0, 2), (1, 2)]


def test_sauer_examples():
    assert sauer_bound(4, 2) == 11
    assert sauer_bound(5, 5) == 32
    assert sauer_bound(6, 2) == 22
    with pytest.raises(PreconditionError):
        sauer_bound(3, 4)
    assert phi(3, -1) == 0 and phi(3, 7) == 8


def test_deficiency_examples():
    assert deficiency(closed_below_maximum(5, 2)).deficiency == 0
    assert deficiency(STAR_PLUS_EDGE).deficiency == 1
    assert deficiency(TWO_PATHS).deficiency == 1
    r = deficiency(complement(ConceptClass.from_vertices(4, [0, 15])))
    assert (r.d, r.deficiency) == (3, 1)
    with pytest.raises(PreconditionError):
        deficiency(ConceptClass.empty(2))


def test_complete_collection_in():
    cc = complete_collection_in(complement(closed_below_maximum(4, 2)), 1)
    assert cc is not None and len(cc) == 4 and cc.is_complete()
    full = complete_collection_in(ConceptClass.full(3), 2)
    assert all(c.anchor_bits == 0 for c in full)
    assert complete_collection_in(ConceptClass.empty(3), 0) is None


def test_maximum_and_maximal_examples():
    assert is_maximum(closed_below_maximum(5, 3))
    assert is_maximum(complement(ConceptClass.from_vertices(4, [6])))
    for c in (STAR_PLUS_EDGE, TWO_PATHS):
        assert not is_maximum(c)
        assert is_maximal(c)
    assert is_maximal(closed_below_maximum(4, 2))
    assert not is_maximal(closed_below_maximum(4, 1).remove(1))
    assert is_maximal(ConceptClass.full(3))


@given(classes(max_n=4, nonempty=True))
def test_maximal_matches_oracle(c):
    assert is_maximal(c) == oracles.is_maximal(c.n, c.vertices)
    assert is_maximum(c) == oracles.is_maximum(c.n, c.vertices)


def test_complement_cube_counts():
    r = count_k_cubes_in_complement(closed_below_maximum(4, 2), 0)
    assert (r.actual, r.bound) == (5, 5) and r.meets_bound
    for c in (STAR_PLUS_EDGE, TWO_PATHS):
        r = count_k_cubes_in_complement(c, 0)
        assert (r.actual, r.bound) == (6, 5)
    assert count_k_cubes_in_complement(closed_below_maximum(6, 2), 1).actual == 96
    assert complement_cube_bound(6, 2, 1) == 96
    with pytest.raises(PreconditionError):
        count_k_cubes_in_complement(closed_below_maximum(4, 1).remove(1), 0)


@given(classes(max_n=5, nonempty=True), st.randoms(use_true_random=False))
def test_greedy_extension_is_maximal_and_keeps_vc(c, rnd):
    order = list(range(1 << c.n))
    rnd.shuffle(order)
    big = greedy_maximal_extension(c, order)
    assert c <= big
    assert vc_dimension(big) == vc_dimension(c)
    assert is_maximal(big)
