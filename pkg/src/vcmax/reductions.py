"""Projections, tails and reductions, iterated reductions and the face graph.

Iterated reductions give a connectivity test for maximality: a complete
collection of d-cubes is a maximum class exactly when every one of its
(d-1)-iterated reductions is a tree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .cube import (
    ConceptClass,
    CubeCollection,
    Subcube,
    coord_bit,
    coords_mask,
    cubes_with_free_set,
    direction_sets,
    vertex_to_string,
)
from .errors import NotMaximumError, PreconditionError, StructuralError
from .vc import phi, vc_dimension


def _check_coords(n: int, coords: Iterable[int]) -> tuple[int, ...]:
    coords = tuple(sorted(set(coords)))
    if any(not 0 <= i < n for i in coords):
        raise PreconditionError(f"coordinates {coords} outside 0..{n - 1}")
    return coords


def project_drop(c: ConceptClass, coords: Iterable[int]) -> ConceptClass:
    """Image of ``c`` after deleting ``coords``; the kept coordinates keep
    their relative order."""
    coords = _check_coords(c.n, coords)
    if not coords:
        return c
    if len(coords) >= c.n:
        raise PreconditionError("cannot drop every coordinate")
    return ConceptClass.from_array(c.n - len(coords), c.tensor().any(axis=coords))


def project_onto(c: ConceptClass, coords: Iterable[int]) -> ConceptClass:
    keep = _check_coords(c.n, coords)
    return project_drop(c, [i for i in range(c.n) if i not in keep])


def reduction(c: ConceptClass, x: int) -> ConceptClass:
    """Points of the (n-1)-cube both of whose lifts along ``x`` lie in ``c``."""
    _check_coords(c.n, [x])
    if c.n == 1:
        raise PreconditionError("no reduction of a 1-cube class")
    return ConceptClass.from_array(c.n - 1, c.tensor().all(axis=x))


def insert_coordinate(c: ConceptClass, x: int, level: int | None) -> ConceptClass:
    """Lift ``c`` into the (n+1)-cube with new coordinate ``x`` fixed at
    ``level``; ``level=None`` takes both values (the product with {0,1})."""
    n = c.n + 1
    if not 0 <= x < n:
        raise PreconditionError(f"x={x} outside 0..{n - 1}")
    t = np.asarray(c.tensor()) if c.n else np.asarray(c.array)
    lo = t if level in (0, None) else np.zeros_like(t)
    hi = t if level in (1, None) else np.zeros_like(t)
    return ConceptClass.from_array(n, np.stack([lo, hi], axis=x))


@dataclass(frozen=True)
class ProjectionSplit:
    x: int
    image: ConceptClass
    reduction: ConceptClass
    tail: ConceptClass

    def check(self, c: ConceptClass) -> bool:
        """Cardinality identity plus reduction x {0,1} inside ``c``."""
        if len(c) != len(self.image) + len(self.reduction):
            return False
        return insert_coordinate(self.reduction, self.x, None).issubset(c)


def split_along(c: ConceptClass, x: int) -> ProjectionSplit:
    """Image, reduction and tail of ``c`` under deletion of coordinate ``x``."""
    _check_coords(c.n, [x])
    t = c.tensor()
    red = ConceptClass.from_array(c.n - 1, t.all(axis=x))
    image = ConceptClass.from_array(c.n - 1, t.any(axis=x))
    partner = np.flip(t, axis=x)
    tail = ConceptClass.from_array(c.n, t & ~partner)
    return ProjectionSplit(x, image, red, tail)


class UnionFind:
    def __init__(self, items: Iterable = ()):
        self.parent = {}
        for it in items:
            self.add(it)

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def groups(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def _compress(n: int, v: int, keep: Sequence[int]) -> int:
    """Read the bits of ``v`` at coordinates ``keep`` as a len(keep)-bit vertex."""
    w = 0
    for i in keep:
        w = (w << 1) | bool(v & coord_bit(n, i))
    return w


@dataclass(frozen=True)
class IteratedReductionGraph:
    """Multigraph of one iterated reduction.

    Nodes are the S-faces of the cubes, named by their image in the cube on
    the coordinates outside S; each edge is a d-cube whose free set contains
    S, labelled by its extra direction.
    """

    n: int
    d: int
    S: tuple[int, ...]
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    component_count: int

    @property
    def is_forest(self) -> bool:
        return len(self.nodes) - len(self.edges) == self.component_count

    @property
    def is_tree(self) -> bool:
        return self.is_forest and self.component_count == 1

    def to_dot(self) -> str:
        width = self.n - len(self.S)
        name = "IR_" + ("_".join(str(i + 1) for i in self.S) or "empty")
        lines = [f"graph {name} {{"]
        for v in self.nodes:
            lines.append(f'  "{vertex_to_string(width, v)}";')
        for u, w, e in self.edges:
            lines.append(f'  "{vertex_to_string(width, u)}" -- "{vertex_to_string(width, w)}" [label="{e + 1}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def iterated_reduction(cc: CubeCollection, S: Iterable[int]) -> IteratedReductionGraph:
    """The (d-1)-iterated reduction of ``cc`` along direction set ``S``.

    Non-complete collections are accepted for diagnostics; parallel edges are
    kept, so a repeated edge counts as a cycle.
    """
    S = _check_coords(cc.n, S)
    d = cc.k
    if len(S) != d - 1:
        raise PreconditionError(f"|S| must be d-1 = {d - 1}, got {len(S)}")
    n = cc.n
    s_bits = coords_mask(n, S)
    keep = [i for i in range(n) if i not in S]
    uf = UnionFind()
    edges = []
    for cube in cc.cubes:
        if cube.free_bits & s_bits != s_bits:
            continue
        e_bits = cube.free_bits & ~s_bits
        e = next(i for i in range(n) if e_bits == coord_bit(n, i))
        u = _compress(n, cube.anchor_bits, keep)
        w = _compress(n, cube.anchor_bits | e_bits, keep)
        uf.add(u)
        uf.add(w)
        uf.union(u, w)
        edges.append((u, w, e))
    nodes = tuple(sorted(uf.parent))
    return IteratedReductionGraph(n, d, S, nodes, tuple(edges), len(uf.groups()))


def is_maximum_via_trees(cc: CubeCollection) -> bool:
    """Maximum test for a complete collection: every iterated reduction
    must be connected."""
    if not cc.is_complete():
        raise PreconditionError("collection is not complete")
    if cc.k == 0:
        return True
    for S in direction_sets(cc.n, cc.k - 1):
        g = iterated_reduction(cc, S)
        if not g.is_forest:
            raise StructuralError(f"iterated reduction along {S} has a cycle")
        if not g.is_tree:
            return False
    return True


def unique_complete_collection(c: ConceptClass) -> CubeCollection:
    """The d-complete collection whose union is the maximum class ``c``."""
    if len(c) == 0:
        raise NotMaximumError("class is empty")
    d = vc_dimension(c)
    if len(c) != phi(c.n, d):
        raise NotMaximumError(f"|C|={len(c)} but a maximum VC-{d} class has {phi(c.n, d)} points")
    cubes = []
    for free in direction_sets(c.n, d):
        found = cubes_with_free_set(c, free)
        if len(found) != 1:
            raise NotMaximumError(f"{len(found)} {d}-cubes with directions {free}; expected exactly one")
        cubes.append(found[0])
    cc = CubeCollection(c.n, d, tuple(cubes))
    if cc.union() != c:
        raise NotMaximumError("complete collection does not cover the class")
    return cc


def faces(cube: Subcube) -> list[Subcube]:
    """Codimension-one faces, by free direction then side."""
    out = []
    for e in cube.free:
        b = coord_bit(cube.n, e)
        free = cube.free_bits & ~b
        out.append(Subcube(cube.n, free, cube.anchor_bits))
        out.append(Subcube(cube.n, free, cube.anchor_bits | b))
    return out


@dataclass(frozen=True)
class FaceGraph:
    """Bipartite cube/face incidence graph of a collection."""

    cubes: tuple[Subcube, ...]
    faces: tuple[Subcube, ...]
    edges: tuple[tuple[int, int], ...]

    def induced(self, S: Iterable[int]) -> tuple[list[int], list[int], list[tuple[int, int]]]:
        """Cube indices, face indices and edges of the subgraph on cubes
        whose directions contain S."""
        if not self.cubes:
            return [], [], []
        n = self.cubes[0].n
        s_bits = coords_mask(n, S)
        cs = [i for i, c in enumerate(self.cubes) if c.free_bits & s_bits == s_bits]
        fs = [j for j, f in enumerate(self.faces) if f.free_bits & s_bits == s_bits]
        cset, fset = set(cs), set(fs)
        es = [(i, j) for i, j in self.edges if i in cset and j in fset]
        return cs, fs, es

    def to_dot(self) -> str:
        lines = ["graph face_graph {"]
        for i, c in enumerate(self.cubes):
            lines.append(f'  c{i} [label="{c}", shape=box];')
        for j, f in enumerate(self.faces):
            lines.append(f'  f{j} [label="{f}"];')
        for i, j in self.edges:
            lines.append(f"  c{i} -- f{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def face_graph(cc: CubeCollection) -> FaceGraph:
    index: dict[Subcube, int] = {}
    face_list: list[Subcube] = []
    edges = []
    for i, cube in enumerate(cc.cubes):
        for f in faces(cube):
            if f not in index:
                index[f] = len(face_list)
                face_list.append(f)
            edges.append((i, index[f]))
    return FaceGraph(tuple(cc.cubes), tuple(face_list), tuple(edges))


def euler_face_count(n: int, d: int) -> int:
    """(d-1)-cubes of a maximum VC-d class of the n-cube."""
    return comb(n, d - 1) + d * comb(n, d)


def all_iterated_reductions(cc: CubeCollection) -> list[IteratedReductionGraph]:
    if cc.k == 0:
        return []
    return [iterated_reduction(cc, S) for S in itertools.combinations(range(cc.n), cc.k - 1)]
