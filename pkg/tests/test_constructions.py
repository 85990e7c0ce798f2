import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from vcmax.constructions import (
    GeneratingSet,
    MonomialOrdering,
    boolean_sum_class,
    classify_maximal,
    forest_degrees,
    generating_set,
    gf2_rank,
    inembeddable_class,
    inembeddable_witness,
    majority_sides,
    maximal_class_masks,
    side_intersection_cubes,
    side_split,
    symmetric_extension_cubes,
    symmetric_function_class,
    symmetric_maximum_extension,
    two_cube_tree_embedding,
)
from vcmax.cube import ConceptClass, CubeCollection, complement
from vcmax.reductions import is_maximum_via_trees
from vcmax.errors import BudgetExceeded, PreconditionError
from vcmax.vc import deficiency, greedy_maximal_extension, is_maximal, is_maximum, phi, vc_dimension
import oracles


def test_inembeddable_class_small_parameters():
    for d, n in [(0, 3), (0, 4), (2, 7)]:
        ic = inembeddable_class(d, n)
        assert vc_dimension(ic.cls) == d
        a, b = majority_sides(d, n)
        assert complement(ic.cls) == a | b
        w = inembeddable_witness(d, n)
        assert ic.cls <= w and is_maximum(w) and vc_dimension(w) == 2 * d


def test_inembeddable_preconditions():
    for d, n in [(1, 7), (2, 6), (-2, 5)]:
        with pytest.raises(PreconditionError):
            inembeddable_class(d, n)


def test_side_split_counts():
    s = side_split(2, 7, 4)
    assert (s.total, s.in_a, s.in_b, len(s.mixed)) == (80, 22, 13, 45)
    assert not s.all_one_sided
    assert len(side_split(2, 7, 3).mixed) == 72
    assert side_intersection_cubes(2, 7, 2) == 0


def test_classify_maximal_4_2():
    reps = classify_maximal(4, 2)
    assert len(reps) == 2
    assert all(deficiency(c).deficiency == 1 for c in reps)
    # a degree-3 star plus an edge, and two paths with two edges each
    shapes = sorted(forest_degrees(c) for c in reps)
    assert shapes == [((1, 1), (3, 1, 1, 1)), ((2, 1, 1), (2, 1, 1))]
    for c in reps:
        assert is_maximal(c) and not is_maximum(c)
        assert len(complement(c)) == 6


def test_maximal_masks_match_oracle_at_n3():
    for d in (0, 1):
        masks = {int(m) for m in maximal_class_masks(3, d)}
        brute = set()
        for mask in range(1, 256):
            vs = [v for v in range(8) if mask >> v & 1]
            if oracles.vc(3, vs) == d and oracles.is_maximal(3, vs) and not oracles.is_maximum(3, vs):
                brute.add(mask)
        assert masks == brute


def test_classification_cap():
    with pytest.raises(BudgetExceeded):
        classify_maximal(6, 2)


def test_monomial_ordering():
    mo = MonomialOrdering.build(3)
    assert mo.check() and len(mo.order) == 8 and mo.degree(7) == 3


@pytest.mark.parametrize("n", [2, 3])
def test_symmetric_classes(n):
    f = symmetric_function_class(n)
    assert len(f) == 2 ** (n + 1) and vc_dimension(f) == n + 1
    ext = symmetric_maximum_extension(n)
    assert f <= ext and is_maximum(ext) and vc_dimension(ext) == n + 1
    cubes = symmetric_extension_cubes(n)
    assert len(cubes) == comb(2**n, n + 2)
    cc = CubeCollection(2**n, 2**n - n - 2, tuple(cubes))
    assert cc.is_complete() and is_maximum_via_trees(cc)


def test_gf2_rank():
    assert gf2_rank([0b11, 0b01, 0b10]) == 2
    assert gf2_rank([1, 2, 4, 8]) == 4


def test_generating_set_validation():
    g = generating_set(2)
    assert g.sums == (0b1000, 0b1100, 0b1110, 0b1111)
    with pytest.raises(PreconditionError):
        GeneratingSet.from_tree(2, 0, [(0, 1), (0, 1), (2, 2)])
    with pytest.raises(PreconditionError):
        GeneratingSet.from_tree(2, 0, [(0, 1), (1, 2)])


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_boolean_sum_class_is_maximum(k):
    c = boolean_sum_class(generating_set(2), k)
    assert len(c) == phi(4, k)
    assert is_maximum(c) and vc_dimension(c) == k


def test_boolean_sums_are_injective():
    g = generating_set(3)
    seen = set()
    for size in range(4):
        for combo in itertools.combinations(g.sums, size):
            v = 0
            for x in combo:
                v ^= x
            assert v not in seen
            seen.add(v)


def test_boolean_sum_with_branching_tree():
    # s1={m1}, s2=s1+m2, s3=s1+m3, s4=s2+m4
    g = GeneratingSet.from_tree(2, 0, [(0, 1), (0, 2), (1, 3)])
    for k in range(4):
        c = boolean_sum_class(g, k)
        assert is_maximum(c) and vc_dimension(c) == k


def _random_maximal(n, d, rng):
    while True:
        order = list(range(1 << n))
        rng.shuffle(order)
        seed = ConceptClass.from_vertices(n, order[: d + 2])
        if vc_dimension(seed) == d:
            return greedy_maximal_extension(seed, order)


@given(st.integers(0, 10**6))
@settings(max_examples=20)
def test_two_cube_tree_embedding(seed):
    c = _random_maximal(6, 2, random.Random(seed))
    sup = two_cube_tree_embedding(c)
    assert c <= sup and is_maximum(sup) and vc_dimension(sup) == 4


def test_two_cube_tree_embedding_needs_n_2d_plus_2():
    with pytest.raises(PreconditionError):
        two_cube_tree_embedding(ConceptClass.from_vertices(5, [0, 1, 2]))
