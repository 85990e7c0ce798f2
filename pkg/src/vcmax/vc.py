"""VC dimension, Sauer's bound, deficiency, and the maximum/maximal tests."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .cube import (
    ConceptClass,
    CubeCollection,
    complement,
    count_cubes_with_free_set,
    count_k_cubes,
    cubes_with_free_set,
    direction_sets,
)
from .errors import PreconditionError


@dataclass(frozen=True)
class ShatterWitness:
    coords: tuple[int, ...]
    achieved_patterns: frozenset[int]

    @property
    def shattered(self) -> bool:
        return len(self.achieved_patterns) == 1 << len(self.coords)


@dataclass(frozen=True)
class DeficiencyReport:
    d: int
    sauer: int
    cardinality: int
    deficiency: int

    @property
    def is_maximum(self) -> bool:
        return self.deficiency == 0


@dataclass(frozen=True)
class CubeCount:
    """Number of k-cubes in the complement of a maximal class, with the
    lower bound it must meet."""

    k: int
    actual: int
    bound: int

    @property
    def meets_bound(self) -> bool:
        return self.actual == self.bound


def vertex_bits(n: int, vertices) -> np.ndarray:
    """(m, n) array of 0/1; column i is coordinate i."""
    v = np.asarray(vertices, dtype=np.int64).reshape(-1, 1)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((v >> shifts) & 1).astype(np.int64)


def _patterns(bits: np.ndarray, combos: np.ndarray) -> np.ndarray:
    s = combos.shape[1]
    w = 1 << np.arange(s - 1, -1, -1, dtype=np.int64)
    return (bits[:, combos] * w).sum(axis=-1)


def _shattered_flags(bits: np.ndarray, combos: np.ndarray) -> np.ndarray:
    m = bits.shape[0]
    k_total, s = combos.shape
    out = np.zeros(k_total, dtype=bool)
    if m == 0:
        return out
    chunk = max(1, 4_000_000 // max(1, m * max(s, 1)))
    for start in range(0, k_total, chunk):
        cb = combos[start:start + chunk]
        pats = _patterns(bits, cb)
        seen = np.zeros((len(cb), 1 << s), dtype=bool)
        seen[np.broadcast_to(np.arange(len(cb)), pats.shape), pats] = True
        out[start:start + len(cb)] = seen.all(axis=1)
    return out


def _combos(n: int, s: int) -> np.ndarray:
    return np.array(direction_sets(n, s), dtype=np.int64).reshape(-1, s)


def shatter_witness(c: ConceptClass, coords) -> ShatterWitness:
    coords = tuple(sorted(coords))
    bits = vertex_bits(c.n, c.vertices)
    pats = _patterns(bits, np.array([coords], dtype=np.int64).reshape(1, -1))[:, 0] if c.vertices else []
    return ShatterWitness(coords, frozenset(int(p) for p in pats))


def shattered_sets(c: ConceptClass, s: int) -> list[tuple[int, ...]]:
    """All s-subsets of coordinates shattered by ``c``."""
    combos = _combos(c.n, s)
    flags = _shattered_flags(vertex_bits(c.n, c.vertices), combos)
    return [tuple(int(i) for i in row) for row in combos[flags]]


def vc_dimension(c: ConceptClass) -> int:
    """Largest size of a shattered coordinate set; -1 for the empty class.

    Sizes are tried upward and the search stops at the first size with no
    shattered set.
    """
    m = len(c)
    if m == 0:
        return -1
    bits = vertex_bits(c.n, c.vertices)
    d = 0
    for s in range(1, c.n + 1):
        if 1 << s > m:
            break
        if not _shattered_flags(bits, _combos(c.n, s)).any():
            break
        d = s
    return d


def sauer_bound(n: int, d: int) -> int:
    """Sum of C(n, i) for i = 0..d."""
    if n < 0 or d < 0 or d > n:
        raise PreconditionError(f"need 0 <= d <= n, got n={n}, d={d}")
    return phi(n, d)


def phi(n: int, d: int) -> int:
    """Sauer's bound extended to all d: 0 for d < 0 and 2**n for d >= n."""
    if d < 0:
        return 0
    return sum(comb(n, i) for i in range(min(d, n) + 1))


def deficiency(c: ConceptClass) -> DeficiencyReport:
    if len(c) == 0:
        raise PreconditionError("deficiency is undefined for the empty class")
    d = vc_dimension(c)
    bound = phi(c.n, d)
    return DeficiencyReport(d, bound, len(c), bound - len(c))


def complete_collection_in(c: ConceptClass, k: int) -> CubeCollection | None:
    """One k-cube inside ``c`` per direction set of size k, or None.

    Each direction set is searched independently; the lexicographically least
    anchor wins.
    """
    if not 0 <= k <= c.n:
        raise PreconditionError(f"k={k} outside 0..{c.n}")
    cubes = []
    for free in direction_sets(c.n, k):
        found = cubes_with_free_set(c, free)
        if not found:
            return None
        cubes.append(found[0])
    return CubeCollection(c.n, k, tuple(cubes))


def has_complete_collection(c: ConceptClass, k: int) -> bool:
    return all(count_cubes_with_free_set(c, free) for free in direction_sets(c.n, k))


def vc_dim_via_complement(c: ConceptClass) -> int:
    """VC dimension read off the complement: the least d such that the
    complement holds an (n-d-1)-complete collection of subcubes."""
    if len(c) == 0:
        raise PreconditionError("class is empty")
    if len(c) == 1 << c.n:
        return c.n
    u = complement(c)
    for d in range(c.n):
        if has_complete_collection(u, c.n - d - 1):
            return d
    raise AssertionError("unreachable: a nonempty complement holds a 0-complete collection")


def is_maximum(c: ConceptClass) -> bool:
    """Sauer's bound met with equality.

    The empty class counts as maximum of dimension -1, which keeps
    complement identities total (the complement of the full cube).
    """
    return len(c) == phi(c.n, vc_dimension(c))


def blocked_vertices(c: ConceptClass, d: int | None = None) -> np.ndarray:
    """Boolean array over all vertices: True where adding the vertex to ``c``
    would shatter some (d+1)-set, d being the VC dimension of ``c``."""
    n = c.n
    if d is None:
        d = vc_dimension(c)
    s = d + 1
    blocked = np.zeros(1 << n, dtype=bool)
    if s > n:
        return blocked
    combos = _combos(n, s)
    members = vertex_bits(n, c.vertices)
    every = vertex_bits(n, np.arange(1 << n))
    chunk = max(1, 2_000_000 // (1 << n))
    for start in range(0, len(combos), chunk):
        cb = combos[start:start + chunk]
        present = np.zeros((len(cb), 1 << s), dtype=bool)
        pats = _patterns(members, cb)
        present[np.broadcast_to(np.arange(len(cb)), pats.shape), pats] = True
        single = present.sum(axis=1) == (1 << s) - 1
        if not single.any():
            continue
        missing = np.argmin(present[single], axis=1)
        all_pats = _patterns(every, cb[single])
        blocked |= (all_pats == missing[None, :]).any(axis=1)
    return blocked


def is_maximal(c: ConceptClass) -> bool:
    """No vertex can be added without raising the VC dimension."""
    if len(c) == 0:
        raise PreconditionError("class is empty")
    if len(c) == 1 << c.n:
        return True
    outside = ~c.array
    return bool(np.all(blocked_vertices(c)[outside]))


def complement_cube_bound(n: int, d: int, k: int) -> int:
    """Least number of k-cubes in the complement of a maximal VC-d class."""
    return sum(comb(i, k) * comb(n, i) for i in range(k, n - d))


def count_k_cubes_in_complement(c: ConceptClass, k: int) -> CubeCount:
    if len(c) == 0:
        raise PreconditionError("class is empty")
    d = vc_dimension(c)
    if not 0 <= k < c.n - d - 1:
        raise PreconditionError(f"need 0 <= k < n-d-1 = {c.n - d - 1}, got k={k}")
    if not is_maximal(c):
        raise PreconditionError("class is not maximal")
    return CubeCount(k, count_k_cubes(complement(c), k), complement_cube_bound(c.n, d, k))


def greedy_maximal_extension(c: ConceptClass, order=None) -> ConceptClass:
    """Add vertices (ascending, or in ``order``) whenever the VC dimension
    stays put. The result is maximal."""
    if len(c) == 0:
        raise PreconditionError("class is empty")
    d = vc_dimension(c)
    vertices = range(1 << c.n) if order is None else order
    for v in vertices:
        v = int(v)
        if v in c:
            continue
        if not blocked_vertices(c, d)[v]:
            c = c.add(v)
    return c


__all__ = [
    "ShatterWitness",
    "DeficiencyReport",
    "CubeCount",
    "shatter_witness",
    "shattered_sets",
    "vc_dimension",
    "sauer_bound",
    "phi",
    "deficiency",
    "complete_collection_in",
    "has_complete_collection",
    "vc_dim_via_complement",
    "is_maximum",
    "is_maximal",
    "blocked_vertices",
    "complement_cube_bound",
    "count_k_cubes_in_complement",
    "greedy_maximal_extension",
]
