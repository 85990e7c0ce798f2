"""Vectorised predicates over many classes of one small cube (n <= 6).

Classes are packed into ``uint64`` characteristic masks, bit v for vertex v,
so a whole family is tested with a handful of numpy operations.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

import numpy as np

from .cube import ConceptClass
from .errors import PreconditionError

MAX_BATCH_N = 6


def _check(n: int) -> None:
    if not 1 <= n <= MAX_BATCH_N:
        raise PreconditionError(f"batch predicates need 1 <= n <= {MAX_BATCH_N}")


def full_mask(n: int) -> np.uint64:
    return np.uint64((1 << (1 << n)) - 1)


def pack(classes: Iterable[ConceptClass | int], n: int) -> np.ndarray:
    _check(n)
    return np.array([c.mask if isinstance(c, ConceptClass) else int(c) for c in classes], dtype=np.uint64)


@lru_cache(maxsize=None)
def pattern_masks(n: int, s: int) -> tuple[tuple[tuple[int, ...], ...], np.ndarray]:
    """For each s-set T (lexicographic), the masks of vertices showing each
    pattern on T. Returns (sets, array of shape (#sets, 2**s))."""
    sets = tuple(itertools.combinations(range(n), s))
    out = np.zeros((len(sets), 1 << s), dtype=np.uint64)
    for row, T in enumerate(sets):
        for v in range(1 << n):
            a = 0
            for i in T:
                a = (a << 1) | (v >> (n - 1 - i) & 1)
            out[row, a] |= np.uint64(1 << v)
    return sets, out


def shatters_some(masks: np.ndarray, n: int, s: int) -> np.ndarray:
    """True where the class shatters at least one s-set."""
    _check(n)
    masks = np.asarray(masks, dtype=np.uint64)
    if s > n:
        return np.zeros(masks.shape, dtype=bool)
    if s <= 0:
        return masks != 0
    _, pm = pattern_masks(n, s)
    zero = np.uint64(0)
    out = np.zeros(masks.shape, dtype=bool)
    for row in pm:
        full = np.ones(masks.shape, dtype=bool)
        for q in row:
            full &= (masks & q) != zero
        out |= full
    return out


def vc_dimension_many(masks: np.ndarray, n: int) -> np.ndarray:
    masks = np.asarray(masks, dtype=np.uint64)
    d = np.where(masks != 0, 0, -1)
    for s in range(1, n + 1):
        hit = shatters_some(masks, n, s)
        if not hit.any():
            break
        d = np.where(hit, s, d)
    return d


def blocked_masks(masks: np.ndarray, n: int, d: int) -> np.ndarray:
    """Mask of vertices whose addition would shatter a (d+1)-set, for
    classes of VC dimension d."""
    masks = np.asarray(masks, dtype=np.uint64)
    s = d + 1
    blocked = np.zeros(masks.shape, dtype=np.uint64)
    if s > n:
        return blocked
    _, pm = pattern_masks(n, s)
    zero = np.uint64(0)
    for row in pm:
        present = np.stack([(masks & q) != zero for q in row])
        missing = (1 << s) - present.sum(axis=0)
        single = missing == 1
        for a, q in enumerate(row):
            blocked |= np.where(single & ~present[a], q, zero)
    return blocked


def is_maximal_many(masks: np.ndarray, n: int, d: int | np.ndarray | None = None) -> np.ndarray:
    """Vectorised maximality test; ``d`` may be given when already known."""
    _check(n)
    masks = np.asarray(masks, dtype=np.uint64)
    if d is None:
        d = vc_dimension_many(masks, n)
    d = np.broadcast_to(np.asarray(d), masks.shape)
    out = np.zeros(masks.shape, dtype=bool)
    full = full_mask(n)
    for dv in np.unique(d):
        sel = d == dv
        if dv < 0:
            continue
        out[sel] = (blocked_masks(masks[sel], n, int(dv)) | masks[sel]) == full
    return out


def popcount(masks: np.ndarray) -> np.ndarray:
    masks = np.asarray(masks, dtype=np.uint64)
    return np.bitwise_count(masks).astype(np.int64) if hasattr(np, "bitwise_count") else _popcount_slow(masks)


def _popcount_slow(masks: np.ndarray) -> np.ndarray:
    return np.array([int(m).bit_count() for m in masks.ravel()], dtype=np.int64).reshape(masks.shape)


def is_maximum_many(masks: np.ndarray, n: int) -> np.ndarray:
    from .vc import phi

    masks = np.asarray(masks, dtype=np.uint64)
    d = vc_dimension_many(masks, n)
    bounds = np.array([phi(n, int(x)) for x in range(-1, n + 1)], dtype=np.int64)
    return popcount(masks) == bounds[d + 1]


@lru_cache(maxsize=None)
def _group_tables(n: int) -> np.ndarray:
    """Vertex maps of all 2**n * n! cube symmetries, one row each."""
    from .cube import _perm_tables

    tables, _ = _perm_tables(n)
    flips = np.arange(1 << n, dtype=np.int64)
    verts = np.arange(1 << n, dtype=np.int64)
    return tables[:, verts[None, :] ^ flips[:, None]].reshape(-1, 1 << n)


def orbit_keys(masks: np.ndarray, n: int) -> np.ndarray:
    """Smallest mask in each class's orbit under the cube's symmetry group;
    equal keys mean isomorphic classes."""
    _check(n)
    masks = np.asarray(masks, dtype=np.uint64)
    one = np.uint64(1)
    bits = [(masks >> np.uint64(v)) & one for v in range(1 << n)]
    best = np.full(masks.shape, np.iinfo(np.uint64).max, dtype=np.uint64)
    for table in _group_tables(n):
        img = np.zeros(masks.shape, dtype=np.uint64)
        for v, w in enumerate(table):
            img |= bits[v] << np.uint64(w)
        np.minimum(best, img, out=best)
    return best
