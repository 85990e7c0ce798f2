"""Concrete class families.

* Majority-anchored classes of even VC dimension d whose complements are
  unions of (n-d-1)-cubes anchored all-0 or all-1, with their 2d-maximum
  witnesses.
* Classification of maximal non-maximum classes in small cubes.
* Symmetric Boolean functions and a maximum class of the same VC dimension
  containing them.
* Boolean sum classes built from a generating set of degree-n monomials.
* The two-cube star embedding for n = 2d + 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import ceil, comb
from typing import NamedTuple, Sequence

import numpy as np

from . import batch
from .cube import (
    ConceptClass,
    Subcube,
    canonical_form,
    coord_bit,
    coords_mask,
    cube_vertices,
    cubes_with_free_set,
    direction_sets,
    enumerate_k_cubes,
)
from .errors import BudgetExceeded, PreconditionError
from .vc import phi, vc_dimension

# -- majority-anchored classes ----------------------------------------------


class InembeddableClass(NamedTuple):
    cls: ConceptClass
    A: tuple[int, ...]
    B: tuple[int, ...]


def _split(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    h = ceil(n / 2)
    return tuple(range(h)), tuple(range(h, n))


def _check_majority_args(d: int, n: int) -> None:
    if d < 0 or d % 2:
        raise PreconditionError(f"d must be even and non-negative, got {d}")
    if n <= 2 * d + 2:
        raise PreconditionError(f"n must exceed 2d+2 = {2 * d + 2}, got {n}")


def _anchored(n: int, anchor: Sequence[int], value: int) -> int:
    """Characteristic mask of the cube fixing ``anchor`` to ``value``."""
    free = [i for i in range(n) if i not in anchor]
    cube = Subcube(n, coords_mask(n, free), coords_mask(n, anchor) if value else 0)
    return cube_vertices(cube).mask


def majority_sides(d: int, n: int) -> tuple[ConceptClass, ConceptClass]:
    """The two halves of the complement: unions of the all-0 cubes (anchor
    mostly in A) and of the all-1 cubes (anchor mostly in B)."""
    _check_majority_args(d, n)
    A, _ = _split(n)
    a_mask = b_mask = 0
    for T in itertools.combinations(range(n), d + 1):
        in_a = sum(1 for t in T if t in A)
        if 2 * in_a > len(T):
            a_mask |= _anchored(n, T, 0)
        else:
            b_mask |= _anchored(n, T, 1)
    return ConceptClass(n, a_mask), ConceptClass(n, b_mask)


def inembeddable_class(d: int, n: int) -> InembeddableClass:
    """Class whose complement is the union of both majority sides; A is the
    first ceil(n/2) coordinates."""
    a_side, b_side = majority_sides(d, n)
    full = (1 << (1 << n)) - 1
    A, B = _split(n)
    return InembeddableClass(ConceptClass(n, full & ~(a_side | b_side).mask), A, B)


def inembeddable_witness(d: int, n: int) -> ConceptClass:
    """Complement of the (n-2d-1)-cubes anchored 0 on A and 1 on B over all
    (2d+1)-sets of coordinates: a 2d-maximum superclass."""
    _check_majority_args(d, n)
    A, _ = _split(n)
    mask = 0
    for T in itertools.combinations(range(n), 2 * d + 1):
        free = [i for i in range(n) if i not in T]
        anchor = coords_mask(n, [t for t in T if t not in A])
        mask |= cube_vertices(Subcube(n, coords_mask(n, free), anchor)).mask
    return ConceptClass(n, ((1 << (1 << n)) - 1) & ~mask)


@dataclass(frozen=True)
class SideSplit:
    """How the k-cubes of the complement sit relative to the two sides."""

    k: int
    total: int
    in_a: int
    in_b: int
    mixed: tuple[Subcube, ...]

    @property
    def all_one_sided(self) -> bool:
        return not self.mixed


def side_split(d: int, n: int, k: int) -> SideSplit:
    a_side, b_side = majority_sides(d, n)
    cubes = enumerate_k_cubes(a_side | b_side, k)
    in_a = in_b = 0
    mixed = []
    for c in cubes:
        verts = cube_vertices(c)
        a, b = verts <= a_side, verts <= b_side
        in_a += a
        in_b += b
        if not (a or b):
            mixed.append(c)
    return SideSplit(k, len(cubes), in_a, in_b, tuple(mixed))


def side_intersection_cubes(d: int, n: int, k: int) -> int:
    """Number of k-cubes inside the overlap of the two sides."""
    from .cube import count_k_cubes

    a_side, b_side = majority_sides(d, n)
    return count_k_cubes(a_side & b_side, k)


# -- classification of maximal classes -------------------------------------

MAX_CLASSIFY_N = 5


def _complement_unions(n: int, k: int) -> np.ndarray:
    """Distinct unions of complete k-collections, up to flips: an anchor
    coordinate whose flip leaves every earlier cube alone is fixed to 0."""
    unions = np.zeros(1, dtype=np.uint64)
    used = 0
    everything = ConceptClass.full(n)
    for free in direction_sets(n, k):
        fixed = [i for i in range(n) if i not in free]
        cubes = []
        for c in cubes_with_free_set(everything, free):
            if any(coord_bit(n, i) & c.anchor_bits and not coord_bit(n, i) & used for i in fixed):
                continue
            cubes.append(cube_vertices(c).mask)
        used |= coords_mask(n, fixed)
        q = np.array(cubes, dtype=np.uint64)
        unions = np.unique((unions[:, None] | q[None, :]).ravel())
    return unions


def maximal_class_masks(n: int, d: int) -> np.ndarray:
    """Masks of maximal, non-maximum VC-d classes covering every orbit
    (several members of an orbit may appear)."""
    if not 1 <= n <= MAX_CLASSIFY_N:
        raise BudgetExceeded(f"classification needs 1 <= n <= {MAX_CLASSIFY_N}")
    if not 0 <= d < n:
        raise PreconditionError(f"need 0 <= d < n, got n={n}, d={d}")
    k = n - d - 1
    full = batch.full_mask(n)
    classes = full & ~_complement_unions(n, k)
    dims = batch.vc_dimension_many(classes, n)
    classes = classes[dims == d]
    classes = classes[batch.is_maximal_many(classes, n, d)]
    return classes[batch.popcount(classes) != phi(n, d)]


def classify_maximal(n: int, d: int) -> list[ConceptClass]:
    """Canonical representatives of the maximal but not maximum VC-d
    classes of the n-cube, one per symmetry orbit."""
    masks = maximal_class_masks(n, d)
    keys, first = np.unique(batch.orbit_keys(masks, n), return_index=True)
    reps = [canonical_form(ConceptClass(n, int(masks[i]))) for i in first]
    return sorted(reps, key=ConceptClass.sort_key)


def forest_degrees(c: ConceptClass) -> tuple[tuple[int, ...], ...]:
    """Sorted degree sequences of the components of the graph the
    complement induces on the cube (edges join vertices at distance one)."""
    from .reductions import UnionFind

    n = c.n
    comp = [v for v in range(1 << n) if v not in c]
    members = set(comp)
    uf = UnionFind(comp)
    deg = {v: 0 for v in comp}
    for v in comp:
        for i in range(n):
            w = v ^ (1 << i)
            if w in members and v < w:
                deg[v] += 1
                deg[w] += 1
                uf.union(v, w)
    groups = uf.groups().values()
    return tuple(sorted(tuple(sorted((deg[v] for v in g), reverse=True)) for g in groups))


# -- symmetric Boolean functions -------------------------------------------


@dataclass(frozen=True)
class MonomialOrdering:
    """Monomials over n variables (as sorted variable tuples), by degree
    and then lexicographically; ``classes[i]`` lists the positions of the
    degree-i monomials."""

    n: int
    order: tuple[tuple[int, ...], ...]
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n: int) -> "MonomialOrdering":
        if n < 0:
            raise PreconditionError("n must be non-negative")
        order = tuple(m for deg in range(n + 1) for m in itertools.combinations(range(n), deg))
        classes = tuple(tuple(p for p, m in enumerate(order) if len(m) == deg) for deg in range(n + 1))
        return cls(n, order, classes)

    def degree(self, position: int) -> int:
        return len(self.order[position])

    def check(self) -> bool:
        degs = [len(m) for m in self.order]
        return degs == sorted(degs) and all(len(s) == comb(self.n, i) for i, s in enumerate(self.classes))


def _check_symmetric_n(n: int, hi: int) -> None:
    if not 2 <= n <= hi:
        raise PreconditionError(f"need 2 <= n <= {hi}, got {n}")


def symmetric_function_class(n: int) -> ConceptClass:
    """Symmetric functions of n variables as vertices of the 2**n-cube whose
    coordinates are the monomials in degree order."""
    _check_symmetric_n(n, 4)
    mo = MonomialOrdering.build(n)
    N = 1 << n
    out = []
    for values in itertools.product((0, 1), repeat=n + 1):
        v = 0
        for deg, val in enumerate(values):
            if val:
                v |= coords_mask(N, mo.classes[deg])
        out.append(v)
    return ConceptClass.from_vertices(N, out)


def symmetric_extension_cubes(n: int) -> list[Subcube]:
    """Complement cubes of the extension, one per (n+2)-set of monomials:
    inside the first degree class holding two anchor coordinates, the
    earlier one is set to 1; every other anchor coordinate is 0."""
    _check_symmetric_n(n, 3)
    mo = MonomialOrdering.build(n)
    N = 1 << n
    cubes = []
    for Y in itertools.combinations(range(N), n + 2):
        special = None
        for cls in mo.classes:
            hit = [p for p in Y if p in cls]
            if len(hit) >= 2:
                special = hit[0]
                break
        if special is None:
            raise AssertionError("an (n+2)-set always meets some degree class twice")
        free = [p for p in range(N) if p not in Y]
        cubes.append(Subcube(N, coords_mask(N, free), coord_bit(N, special)))
    return cubes


def symmetric_maximum_extension(n: int) -> ConceptClass:
    """A maximum class of VC dimension n+1 containing the symmetric
    functions."""
    N = 1 << n
    mask = 0
    for c in symmetric_extension_cubes(n):
        mask |= cube_vertices(c).mask
    return ConceptClass(N, ((1 << (1 << N)) - 1) & ~mask)


# -- Boolean sums over a generating set ------------------------------------


def gf2_rank(vectors: Sequence[int]) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


@dataclass(frozen=True)
class GeneratingSet:
    """Ordered sums s_1..s_{2^n} of degree-n monomials.

    Each sum is a vertex of the 2**n-cube: coordinate p is set when the
    monomial that is true exactly at the point p of {0,1}^n occurs in it.
    ``parents[i]`` is the j < i with s_i = s_j + one monomial (None for s_1).
    """

    n: int
    sums: tuple[int, ...]
    parents: tuple[int | None, ...]

    @property
    def dim(self) -> int:
        return 1 << self.n

    def validate(self) -> None:
        N = self.dim
        if len(self.sums) != N:
            raise PreconditionError(f"need {N} sums, got {len(self.sums)}")
        if self.sums[0].bit_count() != 1:
            raise PreconditionError("s_1 must be a single monomial")
        for i in range(1, N):
            near = [j for j in range(i) if (self.sums[i] ^ self.sums[j]).bit_count() == 1]
            if len(near) != 1:
                raise PreconditionError(
                    f"s_{i + 1} is one monomial away from {len(near)} earlier sums; exactly one is required"
                )
            if self.parents[i] is not None and self.parents[i] != near[0]:
                raise PreconditionError(f"s_{i + 1} does not extend its declared parent")
        if gf2_rank(self.sums) != N:
            raise PreconditionError("sums are linearly dependent over GF(2)")

    @classmethod
    def from_tree(cls, n: int, first: int, steps: Sequence[tuple[int, int]]) -> "GeneratingSet":
        """Build from s_1 = {first} and steps (j, p): s_i = s_j + monomial p,
        with j a 0-based index of an earlier sum."""
        _check_gen_n(n)
        N = 1 << n
        if not 0 <= first < N:
            raise PreconditionError(f"monomial {first} outside 0..{N - 1}")
        sums = [coord_bit(N, first)]
        parents: list[int | None] = [None]
        for i, (j, p) in enumerate(steps, start=1):
            if not 0 <= j < i or not 0 <= p < N:
                raise PreconditionError(f"step {i}: parent must precede and monomial lie in 0..{N - 1}")
            sums.append(sums[j] ^ coord_bit(N, p))
            parents.append(j)
        g = cls(n, tuple(sums), tuple(parents))
        g.validate()
        return g

    def as_class(self) -> ConceptClass:
        """The sums together with the zero function."""
        return ConceptClass.from_vertices(self.dim, (0, *self.sums))


def _check_gen_n(n: int) -> None:
    if not 1 <= n <= 4:
        raise PreconditionError(f"need 1 <= n <= 4, got {n}")


def generating_set(n: int) -> GeneratingSet:
    """Nested chain s_i = {m_1, ..., m_i}."""
    _check_gen_n(n)
    return GeneratingSet.from_tree(n, 0, [(i - 1, i) for i in range(1, 1 << n)])


def boolean_sum_class(g: GeneratingSet, k: int) -> ConceptClass:
    """All sums of at most k distinct members of ``g``."""
    N = g.dim
    if not 0 <= k <= N:
        raise PreconditionError(f"need 0 <= k <= {N}, got {k}")
    mask = 0
    for size in range(k + 1):
        for combo in itertools.combinations(g.sums, size):
            v = 0
            for s in combo:
                v ^= s
            mask |= 1 << v
    return ConceptClass(N, mask)


# -- two-cube star embedding -----------------------------------------------


def two_cube_tree_embedding(c: ConceptClass) -> ConceptClass:
    """For n = 2d+2: a 2d-maximum class containing ``c``.

    The complement holds a cube on the first n/2 directions and one on the
    rest; they share the vertex v built from both anchors, and the star of
    all n edges at v lies in their union. The star is a VC-1 tree, so its
    complement is maximum.
    """
    n = c.n
    if len(c) == 0:
        raise PreconditionError("class is empty")
    d = vc_dimension(c)
    if n != 2 * d + 2:
        raise PreconditionError(f"need n = 2d+2, got n={n}, d={d}")
    h = n // 2
    rest = 1 << n
    u = ConceptClass(n, ((1 << rest) - 1) & ~c.mask)
    first = cubes_with_free_set(u, tuple(range(h)))
    second = cubes_with_free_set(u, tuple(range(h, n)))
    if not first or not second:
        raise AssertionError("a VC-d complement holds every (n-d-1)-cube direction")
    v = first[0].anchor_bits | second[0].anchor_bits
    star = [v] + [v ^ (1 << i) for i in range(n)]
    return ConceptClass(n, ((1 << rest) - 1) & ~sum(1 << w for w in star))
