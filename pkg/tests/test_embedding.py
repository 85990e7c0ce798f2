import random

import pytest
from hypothesis import given, settings, strategies as st

from strategies import classes
from vcmax.cube import ConceptClass
from vcmax.embedding import (
    embed_by_deficiency,
    embed_over_maximum_projection,
    find_deficiency_reducing_coordinate,
    maximum_embeddings,
    maximum_subclass,
    maximum_superclasses,
)
from vcmax.errors import BudgetExceeded, PreconditionError
from vcmax.liftshift import closed_below_maximum, random_maximum_class
from vcmax.reductions import project_drop
from vcmax.vc import deficiency, is_maximum, vc_dimension
import oracles
from test_vc import STAR_PLUS_EDGE, TWO_PATHS


def _sets(cs):
    return {frozenset(c.vertices) for c in cs}


@pytest.mark.parametrize("c", [STAR_PLUS_EDGE, TWO_PATHS])
def test_n4_maximal_classes_embed_with_k1(c):
    r = maximum_embeddings(c, 1)
    assert r.target_vc == 3 and len(r) > 0
    assert r.enlarged == c
    assert _sets(r.classes) == oracles.maximum_superclasses(4, c.vertices, 3)


@given(classes(min_n=4, max_n=4, nonempty=True), st.data())
@settings(max_examples=40)
def test_lifting_search_matches_brute_force(c, data):
    d = vc_dimension(c)
    if d + 1 >= c.n:
        return
    k = data.draw(st.integers(1, c.n - d - 1))
    r = maximum_embeddings(c, k)
    assert _sets(r.classes) == oracles.maximum_superclasses(c.n, r.enlarged.vertices, d + k)


@given(classes(min_n=3, max_n=4, nonempty=True), st.data())
@settings(max_examples=40)
def test_sat_superclasses_match_brute_force(c, data):
    vc = data.draw(st.integers(0, c.n - 1))
    got = maximum_superclasses(c, vc)
    assert _sets(got) == oracles.maximum_superclasses(c.n, c.vertices, vc)


def test_sat_limit_and_impossible_targets():
    c = closed_below_maximum(5, 1)
    assert len(maximum_superclasses(c, 3, limit=2)) == 2
    assert maximum_superclasses(closed_below_maximum(5, 3), 2) == []


def test_embedding_preconditions():
    with pytest.raises(PreconditionError):
        maximum_embeddings(closed_below_maximum(4, 2), 2)
    with pytest.raises(PreconditionError):
        maximum_embeddings(ConceptClass.empty(4), 1)
    with pytest.raises(PreconditionError):
        maximum_embeddings(closed_below_maximum(4, 1), 0)


def test_embedding_budget_reports_stats():
    c = closed_below_maximum(6, 1)
    with pytest.raises(BudgetExceeded) as info:
        maximum_embeddings(c, 1, max_queue=1)
    assert info.value.stats.pushed >= 2


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n), st.integers(0, 999))))
def test_maximum_subclass(args):
    n, m, seed = args
    q = random_maximum_class(n, m, random.Random(seed))
    r = maximum_subclass(q)
    assert r <= q
    if m:
        assert is_maximum(r) and vc_dimension(r) == m - 1


def test_embed_over_maximum_projection():
    for c in (STAR_PLUS_EDGE, TWO_PATHS):
        x = next(x for x in range(4) if is_maximum(project_drop(c, [x])) and vc_dimension(project_drop(c, [x])) == 2)
        sup = embed_over_maximum_projection(c, [x])
        assert c <= sup and is_maximum(sup) and vc_dimension(sup) == 3
    with pytest.raises(PreconditionError):
        embed_over_maximum_projection(closed_below_maximum(4, 2), [0, 0])


@given(classes(min_n=3, max_n=6, nonempty=True))
@settings(max_examples=80)
def test_embed_by_deficiency(c):
    rep = deficiency(c)
    r = embed_by_deficiency(c)
    assert c <= r.superclass and is_maximum(r.superclass)
    assert r.vc <= rep.d + rep.deficiency
    assert len(r.chain) <= rep.deficiency


def test_deficiency_reducing_coordinate():
    x = find_deficiency_reducing_coordinate(STAR_PLUS_EDGE)
    image = project_drop(STAR_PLUS_EDGE, [x])
    assert deficiency(image).deficiency == 0
    with pytest.raises(PreconditionError):
        find_deficiency_reducing_coordinate(closed_below_maximum(4, 2))
