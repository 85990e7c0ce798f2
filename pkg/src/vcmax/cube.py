"""The binary n-cube: vertices, concept classes, subcubes and symmetries.

Coordinates are 0-based in the Python API. Coordinate ``i`` of an ``n``-bit
vertex is character ``i`` of its string form, i.e. the leftmost character is
coordinate 0, and it is stored as bit ``n - 1 - i`` of the vertex integer.
A concept class is held as its characteristic vector: a Python ``int`` whose
bit ``v`` is set iff vertex ``v`` belongs to the class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, PreconditionError

MAX_N = 24
MAX_CANONICAL_N = 8


def coord_bit(n: int, i: int) -> int:
    """Bit mask of coordinate ``i`` inside an ``n``-bit vertex integer."""
    return 1 << (n - 1 - i)


def coords_mask(n: int, coords: Iterable[int]) -> int:
    m = 0
    for i in coords:
        m |= coord_bit(n, i)
    return m


def mask_coords(n: int, mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if mask & coord_bit(n, i))


def vertex_from_string(s: str) -> int:
    if not s or any(ch not in "01" for ch in s):
        raise ValueError(f"not a 0/1 string: {s!r}")
    return int(s, 2)


def vertex_to_string(n: int, v: int) -> str:
    return format(v, f"0{n}b") if n else ""


def weight(v: int) -> int:
    return bin(v).count("1")


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise PreconditionError(f"dimension n={n} outside 1..{MAX_N}")


def mask_to_array(n: int, mask: int) -> np.ndarray:
    """Characteristic vector as a boolean array of length 2**n."""
    size = 1 << n
    nbytes = max(1, (size + 7) // 8)
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def array_to_mask(arr: np.ndarray) -> int:
    packed = np.packbits(np.asarray(arr, dtype=bool).ravel(), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass(frozen=True)
class ConceptClass:
    """A subset of {0,1}^n, immutable.

    Build one with :meth:`from_vertices`, :meth:`from_strings`,
    :meth:`from_array` or the ``full``/``empty`` helpers rather than passing a
    raw mask.
    """

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.mask < 0 or self.mask >> (1 << self.n):
            raise PreconditionError("mask has bits outside the n-cube")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int | str]) -> "ConceptClass":
        mask = 0
        for v in vertices:
            if isinstance(v, str):
                if len(v) != n:
                    raise PreconditionError(f"vertex {v!r} is not of length {n}")
                v = vertex_from_string(v)
            if not 0 <= v < (1 << n):
                raise PreconditionError(f"vertex {v} outside the {n}-cube")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> "ConceptClass":
        if not strings:
            raise PreconditionError("cannot infer n from an empty list")
        return cls.from_vertices(len(strings[0]), strings)

    @classmethod
    def from_array(cls, n: int, arr: np.ndarray) -> "ConceptClass":
        arr = np.asarray(arr, dtype=bool).ravel()
        if arr.size != 1 << n:
            raise PreconditionError("array length must be 2**n")
        return cls(n, array_to_mask(arr))

    @classmethod
    def full(cls, n: int) -> "ConceptClass":
        return cls(n, (1 << (1 << n)) - 1)

    @classmethod
    def empty(cls, n: int) -> "ConceptClass":
        return cls(n, 0)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        if isinstance(v, str):
            if len(v) != self.n:
                return False
            v = vertex_from_string(v)
        if not isinstance(v, (int, np.integer)) or not 0 <= v < (1 << self.n):
            return False
        return bool(self.mask >> int(v) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __or__(self, other: "ConceptClass") -> "ConceptClass":
        self._same_n(other)
        return ConceptClass(self.n, self.mask | other.mask)

    def __and__(self, other: "ConceptClass") -> "ConceptClass":
        self._same_n(other)
        return ConceptClass(self.n, self.mask & other.mask)

    def __sub__(self, other: "ConceptClass") -> "ConceptClass":
        self._same_n(other)
        return ConceptClass(self.n, self.mask & ~other.mask)

    def __le__(self, other: "ConceptClass") -> bool:
        return self.issubset(other)

    def issubset(self, other: "ConceptClass") -> bool:
        self._same_n(other)
        return self.mask & ~other.mask == 0

    def _same_n(self, other: "ConceptClass") -> None:
        if self.n != other.n:
            raise PreconditionError(f"dimension mismatch: {self.n} vs {other.n}")

    def add(self, v: int) -> "ConceptClass":
        return ConceptClass(self.n, self.mask | (1 << v))

    def remove(self, v: int) -> "ConceptClass":
        return ConceptClass(self.n, self.mask & ~(1 << v))

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Members in ascending order."""
        return tuple(int(v) for v in np.flatnonzero(self.array))

    @cached_property
    def array(self) -> np.ndarray:
        arr = mask_to_array(self.n, self.mask)
        arr.flags.writeable = False
        return arr

    def tensor(self) -> np.ndarray:
        """Boolean array of shape (2,)*n; axis i is coordinate i."""
        return self.array.reshape((2,) * self.n)

    def strings(self) -> list[str]:
        return [vertex_to_string(self.n, v) for v in self.vertices]

    def sort_key(self) -> tuple:
        return (self.n, len(self), self.vertices)

    def __repr__(self) -> str:
        if len(self) <= 8:
            return f"ConceptClass(n={self.n}, {{{', '.join(self.strings())}}})"
        return f"ConceptClass(n={self.n}, |C|={len(self)})"


def complement(c: ConceptClass) -> ConceptClass:
    """{0,1}^n minus ``c``."""
    return ConceptClass(c.n, ((1 << (1 << c.n)) - 1) & ~c.mask)


@dataclass(frozen=True)
class Subcube:
    """Axis-aligned subcube of the n-cube.

    ``free_bits`` and ``anchor_bits`` are masks in vertex-bit space: the
    free coordinates, and the values taken on the fixed (anchor) coordinates.
    """

    n: int
    free_bits: int
    anchor_bits: int

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if self.free_bits & ~full or self.anchor_bits & ~full:
            raise PreconditionError("subcube bits outside the n-cube")
        if self.anchor_bits & self.free_bits:
            raise PreconditionError("anchor sets a free coordinate")

    @classmethod
    def from_coords(cls, n: int, free: Iterable[int], anchor: dict[int, int] | None = None) -> "Subcube":
        free = set(free)
        anchor = anchor or {}
        if set(anchor) | free != set(range(n)) or set(anchor) & free:
            raise PreconditionError("anchor and free coordinates must partition range(n)")
        bits = 0
        for i, b in anchor.items():
            if b not in (0, 1):
                raise PreconditionError("anchor values must be 0 or 1")
            if b:
                bits |= coord_bit(n, i)
        return cls(n, coords_mask(n, free), bits)

    @classmethod
    def from_string(cls, s: str) -> "Subcube":
        if any(ch not in "01*" for ch in s):
            raise ValueError(f"not a 0/1/* string: {s!r}")
        n = len(s)
        free = anchor = 0
        for i, ch in enumerate(s):
            if ch == "*":
                free |= coord_bit(n, i)
            elif ch == "1":
                anchor |= coord_bit(n, i)
        return cls(n, free, anchor)

    def __str__(self) -> str:
        out = []
        for i in range(self.n):
            b = coord_bit(self.n, i)
            out.append("*" if self.free_bits & b else ("1" if self.anchor_bits & b else "0"))
        return "".join(out)

    @property
    def dim(self) -> int:
        return self.free_bits.bit_count()

    @property
    def free(self) -> tuple[int, ...]:
        return mask_coords(self.n, self.free_bits)

    @property
    def anchor(self) -> dict[int, int]:
        fixed = ((1 << self.n) - 1) & ~self.free_bits
        return {i: int(bool(self.anchor_bits & coord_bit(self.n, i))) for i in mask_coords(self.n, fixed)}

    def __contains__(self, v: int) -> bool:
        return v & ~self.free_bits == self.anchor_bits

    def vertex_list(self) -> list[int]:
        """Vertices in ascending order."""
        return [self.anchor_bits | s for s in _submasks(self.free_bits)]

    def to_class(self) -> ConceptClass:
        return ConceptClass.from_vertices(self.n, self.vertex_list())

    def sort_key(self) -> tuple:
        return (self.dim, self.free, self.anchor_value())

    def anchor_value(self) -> int:
        """The anchor read as a binary number over the fixed coordinates only."""
        v = 0
        for i in range(self.n):
            b = coord_bit(self.n, i)
            if not self.free_bits & b:
                v = (v << 1) | bool(self.anchor_bits & b)
        return v


def _submasks(mask: int) -> list[int]:
    """All submasks of ``mask`` in ascending order."""
    bits = [1 << i for i in range(mask.bit_length()) if mask >> i & 1]
    out = [0]
    for b in bits:
        out += [s | b for s in out]
    return sorted(out)


def cube_vertices(c: Subcube) -> ConceptClass:
    """The 2**dim vertices of ``c`` as a class."""
    return c.to_class()


@dataclass(frozen=True)
class CubeCollection:
    """An ordered list of ``k``-dimensional subcubes of the n-cube."""

    n: int
    k: int
    cubes: tuple[Subcube, ...]

    def __post_init__(self) -> None:
        for c in self.cubes:
            if c.n != self.n or c.dim != self.k:
                raise PreconditionError(f"cube {c} is not a {self.k}-cube of the {self.n}-cube")

    @classmethod
    def from_cubes(cls, cubes: Sequence[Subcube], n: int | None = None, k: int | None = None) -> "CubeCollection":
        cubes = tuple(cubes)
        if n is None or k is None:
            if not cubes:
                raise PreconditionError("n and k are required for an empty collection")
            n, k = cubes[0].n, cubes[0].dim
        return cls(n, k, cubes)

    def __len__(self) -> int:
        return len(self.cubes)

    def __iter__(self) -> Iterator[Subcube]:
        return iter(self.cubes)

    def is_complete(self) -> bool:
        """One cube for every direction set of size k, and nothing else."""
        from math import comb

        if len(self.cubes) != comb(self.n, self.k):
            return False
        return len({c.free_bits for c in self.cubes}) == len(self.cubes)

    def union(self) -> ConceptClass:
        mask = 0
        for c in self.cubes:
            for v in c.vertex_list():
                mask |= 1 << v
        return ConceptClass(self.n, mask)

    def sorted(self) -> "CubeCollection":
        return CubeCollection(self.n, self.k, tuple(sorted(self.cubes, key=Subcube.sort_key)))


def direction_sets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of range(n) in lexicographic order."""
    return list(itertools.combinations(range(n), k))


def cubes_with_free_set(c: ConceptClass, free: Sequence[int]) -> list[Subcube]:
    """Subcubes with exactly the free set ``free`` lying inside ``c``, by
    ascending anchor value."""
    n = c.n
    fixed = [i for i in range(n) if i not in free]
    inside = c.tensor().all(axis=tuple(free)) if free else c.tensor()
    out = []
    for idx in np.flatnonzero(inside.ravel()):
        bits = 0
        for pos, i in enumerate(fixed):
            if int(idx) >> (len(fixed) - 1 - pos) & 1:
                bits |= coord_bit(n, i)
        out.append(Subcube(n, coords_mask(n, free), bits))
    return out


def count_cubes_with_free_set(c: ConceptClass, free: Sequence[int]) -> int:
    if not free:
        return len(c)
    return int(np.count_nonzero(c.tensor().all(axis=tuple(free))))


def enumerate_k_cubes(c: ConceptClass, k: int) -> list[Subcube]:
    """All k-subcubes contained in ``c``.

    Ordered by free set (lexicographic on sorted coordinates), then by anchor
    value.
    """
    if not 0 <= k <= c.n:
        raise PreconditionError(f"k={k} outside 0..{c.n}")
    out = []
    for free in direction_sets(c.n, k):
        out.extend(cubes_with_free_set(c, free))
    return out


def count_k_cubes(c: ConceptClass, k: int) -> int:
    if not 0 <= k <= c.n:
        raise PreconditionError(f"k={k} outside 0..{c.n}")
    return sum(count_cubes_with_free_set(c, free) for free in direction_sets(c.n, k))


@dataclass(frozen=True)
class CubeSymmetry:
    """Element of the hyperoctahedral group of the n-cube.

    Acting on a vertex: complement the coordinates in ``flips``, then move the
    bit at coordinate ``i`` to coordinate ``perm[i]``.
    """

    perm: tuple[int, ...]
    flips: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(len(self.perm))):
            raise PreconditionError(f"not a permutation: {self.perm}")
        if any(not 0 <= i < len(self.perm) for i in self.flips):
            raise PreconditionError("flip coordinate out of range")
        object.__setattr__(self, "flips", frozenset(self.flips))

    @classmethod
    def identity(cls, n: int) -> "CubeSymmetry":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.perm)

    def __call__(self, v: int) -> int:
        n = self.n
        v ^= coords_mask(n, self.flips)
        w = 0
        for i in range(n):
            if v & coord_bit(n, i):
                w |= coord_bit(n, self.perm[i])
        return w

    def compose(self, other: "CubeSymmetry") -> "CubeSymmetry":
        """``self`` after ``other``."""
        if other.n != self.n:
            raise PreconditionError("dimension mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        flips = frozenset(i for i in range(self.n) if (i in other.flips) ^ (other.perm[i] in self.flips))
        return CubeSymmetry(perm, flips)

    def inverse(self) -> "CubeSymmetry":
        inv = [0] * self.n
        for i, j in enumerate(self.perm):
            inv[j] = i
        return CubeSymmetry(tuple(inv), frozenset(self.perm[i] for i in self.flips))

    def vertex_map(self) -> np.ndarray:
        return np.array([self(v) for v in range(1 << self.n)], dtype=np.int64)


def apply_symmetry(g: CubeSymmetry, c: ConceptClass) -> ConceptClass:
    if g.n != c.n:
        raise PreconditionError("dimension mismatch")
    table = g.vertex_map()
    out = np.zeros(1 << c.n, dtype=bool)
    out[table[np.asarray(c.vertices, dtype=np.int64)]] = True
    return ConceptClass.from_array(c.n, out)


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    """Vertex maps of every coordinate permutation (no flips)."""
    perms = list(itertools.permutations(range(n)))
    verts = np.arange(1 << n, dtype=np.int64)
    tables = np.zeros((len(perms), 1 << n), dtype=np.int64)
    for row, p in enumerate(perms):
        img = np.zeros_like(verts)
        for i in range(n):
            img |= ((verts >> (n - 1 - i)) & 1) << (n - 1 - p[i])
        tables[row] = img
    return tables, perms


def _lexmin_row(rows: np.ndarray) -> int:
    return int(np.lexsort(rows.T[::-1])[0])


def canonical_form(c: ConceptClass) -> ConceptClass:
    """Least member of the orbit of ``c`` under the hyperoctahedral group.

    Classes are compared by their ascending vertex lists, lexicographically.
    """
    return canonical_form_with_symmetry(c)[0]


def canonical_form_with_symmetry(c: ConceptClass) -> tuple[ConceptClass, CubeSymmetry]:
    """Canonical form together with a group element mapping ``c`` onto it."""
    n = c.n
    if n > MAX_CANONICAL_N:
        raise BudgetExceeded(f"canonical form needs n <= {MAX_CANONICAL_N}, got {n}")
    if len(c) == 0:
        return c, CubeSymmetry.identity(n)
    tables, perms = _perm_tables(n)
    verts = np.asarray(c.vertices, dtype=np.int64)
    flipped = verts[None, :] ^ np.arange(1 << n, dtype=np.int64)[:, None]
    m = verts.size
    chunk = max(1, 2_000_000 // ((1 << n) * m))
    best_row = None
    best = (0, 0)
    for start in range(0, len(perms), chunk):
        imgs = tables[start:start + chunk][:, flipped]
        imgs = np.sort(imgs.reshape(-1, m), axis=1)
        i = _lexmin_row(imgs)
        row = imgs[i]
        if best_row is None or tuple(row) < tuple(best_row):
            best_row = row.copy()
            best = (start + i // (1 << n), i % (1 << n))
        if best_row[0] == 0 and m == 1:
            break
    p_idx, flip_mask = best
    g = CubeSymmetry(perms[p_idx], frozenset(mask_coords(n, flip_mask)))
    return ConceptClass.from_vertices(n, best_row.tolist()), g


def closed_below(c: ConceptClass) -> bool:
    """True when every member's downward shadow lies in ``c``."""
    t = c.tensor()
    for axis in range(c.n):
        hi = np.take(t, 1, axis=axis)
        lo = np.take(t, 0, axis=axis)
        if np.any(hi & ~lo):
            return False
    return True
