"""Shifting towards closed-below form, and its inverse, lifting.

A maximum class C is recovered from its image J and reduction R along a
coordinate x by placing R at both levels of x and each connected component
of the tail J \\ R at one level. Components are formed from the top-dimensional
cubes of J: two tail vertices are joined when some cube of J contains both.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .cube import (
    ConceptClass,
    CubeCollection,
    Subcube,
    coord_bit,
    enumerate_k_cubes,
    mask_to_array,
)
from .errors import BudgetExceeded, PreconditionError
from .reductions import UnionFind, insert_coordinate, project_drop, reduction
from .vc import phi, vc_dimension

MAX_ENUM_N = 5


def shift_down(c: ConceptClass, x: int) -> ConceptClass:
    """Move every point with x=1 down to x=0 unless the target is taken."""
    if not 0 <= x < c.n:
        raise PreconditionError(f"x={x} outside 0..{c.n - 1}")
    t = c.tensor()
    lo = np.take(t, 0, axis=x)
    hi = np.take(t, 1, axis=x)
    return ConceptClass.from_array(c.n, np.stack([lo | hi, lo & hi], axis=x))


def shift_to_closed_below(c: ConceptClass) -> ConceptClass:
    """Round-robin shifting over coordinates until a full pass is idle."""
    while True:
        before = c
        for x in range(c.n):
            c = shift_down(c, x)
        if c == before:
            return c


def closed_below_maximum(n: int, d: int) -> ConceptClass:
    """All vertices of weight at most d."""
    if not 0 <= d <= n:
        raise PreconditionError(f"need 0 <= d <= n, got n={n}, d={d}")
    v = np.arange(1 << n, dtype=np.int64)
    w = np.zeros_like(v)
    for i in range(n):
        w += (v >> i) & 1
    return ConceptClass.from_array(n, w <= d)


@dataclass(frozen=True)
class LiftComponent:
    cubes: tuple[Subcube, ...]
    vertex_support: ConceptClass


def _drop_bit(n: int, v: int, x: int) -> int:
    """Delete coordinate x from an n-bit vertex."""
    hi_len = x
    lo_len = n - 1 - x
    hi = v >> (lo_len + 1)
    lo = v & ((1 << lo_len) - 1)
    return (hi << lo_len) | lo if hi_len else lo


def _project_cube(c: Subcube, x: int) -> Subcube:
    return Subcube(c.n - 1, _drop_bit(c.n, c.free_bits, x), _drop_bit(c.n, c.anchor_bits, x))


def split_components(cc: CubeCollection, x: int) -> tuple[CubeCollection, list[LiftComponent], ConceptClass]:
    """Separate the cubes free in ``x`` from the rest and group the rest.

    Returns the crossing cubes, the components of the remaining cubes after
    projection along ``x`` (two cubes are linked when they share a vertex
    outside the reduction), and the reduction: the union of the projected
    crossing cubes.
    """
    n = cc.n
    if not 0 <= x < n:
        raise PreconditionError(f"x={x} outside 0..{n - 1}")
    if n < 2:
        raise PreconditionError("need n >= 2")
    xb = coord_bit(n, x)
    crossing = [c for c in cc.cubes if c.free_bits & xb]
    rest = [_project_cube(c, x) for c in cc.cubes if not c.free_bits & xb]
    red_mask = 0
    for c in crossing:
        for v in _project_cube(c, x).vertex_list():
            red_mask |= 1 << v
    red = ConceptClass(n - 1, red_mask)

    uf = UnionFind(range(len(rest)))
    owner: dict[int, int] = {}
    for i, c in enumerate(rest):
        for v in c.vertex_list():
            if v in red:
                continue
            if v in owner:
                uf.union(owner[v], i)
            else:
                owner[v] = i
    comps = []
    for members in sorted(uf.groups().values()):
        cubes = tuple(rest[i] for i in sorted(members))
        support = 0
        for c in cubes:
            for v in c.vertex_list():
                if v not in red:
                    support |= 1 << v
        comps.append(LiftComponent(cubes, ConceptClass(n - 1, support)))
    return CubeCollection(n, cc.k, tuple(crossing)), comps, red


@dataclass(frozen=True)
class LiftPlan:
    """Everything needed to re-lift a class along coordinate ``x``."""

    n: int
    x: int
    image: ConceptClass
    reduction: ConceptClass
    components: tuple[ConceptClass, ...]

    def build(self, levels: Sequence[int]) -> ConceptClass:
        if len(levels) != len(self.components):
            raise PreconditionError("one level per component required")
        out = insert_coordinate(self.reduction, self.x, None).mask
        for comp, lv in zip(self.components, levels):
            out |= insert_coordinate(comp, self.x, lv).mask
        return ConceptClass(self.n, out)

    def all_lifts(self) -> list[ConceptClass]:
        return [self.build(lv) for lv in itertools.product((0, 1), repeat=len(self.components))]


def tail_components(image: ConceptClass, red: ConceptClass, k: int) -> list[ConceptClass]:
    """Connected pieces of image \\ red, linked through the k-cubes of image."""
    uf = UnionFind()
    tail = image - red
    for v in tail.vertices:
        uf.add(v)
    for cube in enumerate_k_cubes(image, k):
        verts = [v for v in cube.vertex_list() if v in tail]
        for v in verts[1:]:
            uf.union(verts[0], v)
    groups = sorted(uf.groups().values(), key=min)
    return [ConceptClass.from_vertices(image.n, g) for g in groups]


def lift_plan(c: ConceptClass, x: int, k: int | None = None) -> LiftPlan:
    """Projection, reduction and tail components of ``c`` along ``x``.

    ``k`` is the cube dimension used to link tail vertices; it defaults to
    the VC dimension of the image.
    """
    if c.n < 2:
        raise PreconditionError("need n >= 2")
    image = project_drop(c, [x])
    red = reduction(c, x)
    if k is None:
        k = max(vc_dimension(image), 0)
    return LiftPlan(c.n, x, image, red, tuple(tail_components(image, red, k)))


def random_maximum_class(n: int, d: int, rng: random.Random, rounds: int = 2) -> ConceptClass:
    """A maximum VC-d class reached from the closed-below one by random lifts."""
    c = closed_below_maximum(n, d)
    if d in (0, n):
        flips = rng.getrandbits(n)
        return ConceptClass.from_vertices(n, [v ^ flips for v in c.vertices])
    for _ in range(rounds):
        for x in rng.sample(range(n), n):
            plan = lift_plan(c, x, d)
            c = plan.build([rng.randint(0, 1) for _ in plan.components])
    return c


# -- exhaustive enumeration -------------------------------------------------


def _max_shattered(arr: np.ndarray, n: int, s: int) -> bool:
    """Does the class (flat bool array) shatter some s-set?"""
    if s > n:
        return False
    t = arr.reshape((2,) * n) if n else arr
    for T in itertools.combinations(range(n), s):
        others = tuple(i for i in range(n) if i not in T)
        if t.any(axis=others).all() if others else t.all():
            return True
    return False


def _cubes_tail_groups(p_arr: np.ndarray, r_arr: np.ndarray, n: int, k: int) -> list[list[int]]:
    """Tail components (vertex lists) for image ``p_arr`` and reduction
    ``r_arr`` in the n-cube, linked by the k-cubes of the image."""
    tail = p_arr & ~r_arr
    idx = np.flatnonzero(tail)
    uf = UnionFind(int(v) for v in idx)
    if n == 0:
        return [list(map(int, idx))] if idx.size else []
    t = p_arr.reshape((2,) * n)
    for free in itertools.combinations(range(n), k):
        inside = t.all(axis=free) if free else t
        fixed = [i for i in range(n) if i not in free]
        offsets = [0]
        for i in free:
            b = 1 << (n - 1 - i)
            offsets += [o | b for o in offsets]
        for a in np.flatnonzero(inside.ravel()):
            base = 0
            for pos, i in enumerate(fixed):
                if int(a) >> (len(fixed) - 1 - pos) & 1:
                    base |= 1 << (n - 1 - i)
            verts = [base | o for o in offsets if tail[base | o]]
            for v in verts[1:]:
                uf.union(verts[0], v)
    return sorted(uf.groups().values(), key=min)


@dataclass
class EnumerationStats:
    pairs: int = 0
    candidates: int = 0
    rejected: int = 0
    rejected_examples: list = field(default_factory=list)


_STATS: dict[tuple[int, int], EnumerationStats] = {}


@lru_cache(maxsize=None)
def _maximum_masks(n: int, d: int) -> tuple[int, ...]:
    """Characteristic masks of every maximum VC-d class of the n-cube,
    built by lifting along the last coordinate."""
    full = (1 << (1 << n)) - 1
    if d < 0:
        return (0,)
    if d >= n:
        return (full,)
    stats = EnumerationStats()
    pm = _maximum_masks(n - 1, d)
    rm = np.array(_maximum_masks(n - 1, d - 1), dtype=object)
    out = []
    for p in pm:
        p_arr = mask_to_array(n - 1, p) if n - 1 else np.array([bool(p & 1)])
        subs = [int(r) for r in rm if int(r) & ~p == 0]
        for r in subs:
            stats.pairs += 1
            r_arr = mask_to_array(n - 1, r) if n - 1 else np.array([bool(r & 1)])
            groups = _cubes_tail_groups(p_arr, r_arr, n - 1, d)
            base = 0
            for v in np.flatnonzero(r_arr):
                base |= 0b11 << (2 * int(v))
            for levels in itertools.product((0, 1), repeat=len(groups)):
                mask = base
                for g, lv in zip(groups, levels):
                    for v in g:
                        mask |= 1 << ((v << 1) | lv)
                stats.candidates += 1
                if _max_shattered(mask_to_array(n, mask), n, d + 1):
                    stats.rejected += 1
                    if len(stats.rejected_examples) < 5:
                        stats.rejected_examples.append((p, r, levels))
                    continue
                out.append(mask)
    _STATS[(n, d)] = stats
    return tuple(out)


def enumerate_maximum_classes(n: int, d: int) -> list[ConceptClass]:
    """Every maximum VC-d class of the n-cube, sorted by vertex list.

    Each output is produced by a chain of lifts from the closed-below class;
    candidates that fail the VC test are counted in
    :func:`enumeration_stats` rather than returned.
    """
    if n > MAX_ENUM_N:
        raise BudgetExceeded(f"enumeration capped at n <= {MAX_ENUM_N}")
    if not 0 <= d <= n:
        raise PreconditionError(f"need 0 <= d <= n, got n={n}, d={d}")
    masks = set(_maximum_masks(n, d))
    classes = [ConceptClass(n, m) for m in masks]
    for c in classes:
        if len(c) != phi(n, d):
            raise AssertionError("lifted class has the wrong size")
    return sorted(classes, key=ConceptClass.sort_key)


def enumeration_stats(n: int, d: int) -> EnumerationStats:
    _maximum_masks(n, d)
    return _STATS.get((n, d), EnumerationStats())
