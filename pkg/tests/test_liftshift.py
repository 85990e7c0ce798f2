import random

import pytest
from hypothesis import given, strategies as st

from strategies import classes
from vcmax.cube import ConceptClass, CubeCollection, Subcube, closed_below, count_k_cubes
from vcmax.errors import BudgetExceeded
from vcmax.liftshift import (
    closed_below_maximum,
    enumerate_maximum_classes,
    enumeration_stats,
    lift_plan,
    random_maximum_class,
    shift_down,
    shift_to_closed_below,
    split_components,
)
from vcmax.reductions import unique_complete_collection
from vcmax.vc import is_maximum, vc_dimension
import oracles


def test_shift_examples():
    assert shift_down(ConceptClass.from_strings(["11"]), 0).strings() == ["01"]
    assert shift_to_closed_below(ConceptClass.from_strings(["11", "10"])).strings() == ["00", "01"]
    cb = closed_below_maximum(4, 2)
    assert all(shift_down(cb, x) == cb for x in range(4))
    assert shift_to_closed_below(cb) == cb


@given(classes(max_n=6), st.data())
def test_shift_keeps_size_and_never_raises_vc(c, data):
    x = data.draw(st.integers(0, c.n - 1))
    s = shift_down(c, x)
    assert len(s) == len(c)
    assert oracles.vc(c.n, s.vertices) <= oracles.vc(c.n, c.vertices)


@given(classes(max_n=6))
def test_shift_to_closed_below(c):
    s = shift_to_closed_below(c)
    assert closed_below(s) and len(s) == len(c)
    assert vc_dimension(s) <= vc_dimension(c)


def test_shifting_a_maximum_class_reaches_the_weight_class():
    rng = random.Random(3)
    for _ in range(10):
        c = random_maximum_class(4, 2, rng)
        assert shift_to_closed_below(c) == closed_below_maximum(4, 2)


def test_closed_below_maximum_examples():
    assert len(closed_below_maximum(4, 2)) == 11
    assert closed_below_maximum(3, 0).strings() == ["000"]
    assert closed_below_maximum(3, 1).strings() == ["000", "001", "010", "100"]


def test_split_components_examples():
    no_cross = CubeCollection.from_cubes([Subcube.from_string(s) for s in ("0*0", "1*1")])
    crossing, comps, red = split_components(no_cross, 0)
    assert len(crossing) == 0 and len(comps) == 2 and len(red) == 0

    cc = unique_complete_collection(closed_below_maximum(4, 2))
    crossing, comps, red = split_components(cc, 3)
    assert len(crossing) == 3
    assert red == closed_below_maximum(3, 1)
    # each remaining square keeps one weight-2 vertex of its own outside
    # the reduction, so no two of them are linked
    assert len(comps) == 3
    assert sorted(len(c.vertex_support) for c in comps) == [1, 1, 1]


@pytest.mark.parametrize("n,d,expected", [(2, 1, 4), (3, 1, 32), (3, 2, 8), (4, 3, 16)])
def test_enumeration_matches_brute_force(n, d, expected):
    got = {frozenset(c.vertices) for c in enumerate_maximum_classes(n, d)}
    assert got == oracles.maximum_classes(n, d)
    assert len(got) == expected


def test_enumeration_4_2_against_subset_sweep():
    got = {frozenset(c.vertices) for c in enumerate_maximum_classes(4, 2)}
    assert got == oracles.maximum_classes(4, 2)


def test_enumeration_full_cube_minus_vertex():
    for n in (2, 3, 4):
        got = enumerate_maximum_classes(n, n - 1)
        assert len(got) == 2**n and all(len(c) == 2**n - 1 for c in got)


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (5, 3)])
def test_lifting_keeps_cube_counts(n, d):
    base = [count_k_cubes(closed_below_maximum(n, d), k) for k in range(d + 1)]
    for c in enumerate_maximum_classes(n, d):
        assert [count_k_cubes(c, k) for k in range(d + 1)] == base


@pytest.mark.parametrize("n,d", [(3, 1), (4, 2), (5, 2)])
def test_every_lift_candidate_is_maximum(n, d):
    enumerate_maximum_classes(n, d)
    assert enumeration_stats(n, d).rejected == 0


def test_enumeration_cap():
    with pytest.raises(BudgetExceeded):
        enumerate_maximum_classes(6, 2)


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n), st.integers(0, 2**32))))
def test_random_maximum_class(args):
    n, d, seed = args
    c = random_maximum_class(n, d, random.Random(seed))
    assert is_maximum(c) and vc_dimension(c) == d


def test_lift_plan_rebuilds_the_class():
    rng = random.Random(1)
    for _ in range(10):
        c = random_maximum_class(5, 2, rng)
        for x in range(5):
            plan = lift_plan(c, x, 2)
            lifts = plan.all_lifts()
            assert c in lifts
            assert all(is_maximum(m) and vc_dimension(m) == 2 for m in lifts)
