"""Embedding concept classes into maximum classes.

Three routes are provided:

* :func:`maximum_embeddings` lists every maximum class of a requested VC
  dimension containing a class, by re-lifting the closed-below class along
  each coordinate in turn on the complement side and pruning as soon as a
  prefix projection leaves the complement of the input.
* :func:`embed_over_maximum_projection` builds one (d+k)-maximum superclass
  when deleting k coordinates leaves a d-maximum image.
* :func:`embed_by_deficiency` chains deficiency-reducing projections and then
  unwinds them, giving a maximum superclass of VC dimension at most d + D.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Sequence

from .cube import ConceptClass, complement, coord_bit
from .errors import BudgetExceeded, InvariantViolation, PreconditionError
from .liftshift import closed_below_maximum, lift_plan
from .reductions import insert_coordinate, project_drop, project_onto, reduction
from .vc import deficiency, greedy_maximal_extension, is_maximum, phi, vc_dimension


@dataclass
class SearchStats:
    popped: int = 0
    pushed: int = 0
    pruned: int = 0
    duplicates: int = 0
    queue_sizes: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class EmbeddingResult:
    target_vc: int
    classes: tuple[ConceptClass, ...]
    search_stats: SearchStats
    enlarged: ConceptClass

    def __len__(self) -> int:
        return len(self.classes)


def maximum_embeddings(
    c: ConceptClass,
    k: int,
    *,
    max_queue: int | None = None,
    time_budget: float | None = None,
) -> EmbeddingResult:
    """All maximum classes of VC dimension d+k containing ``c`` (d its VC
    dimension), after greedily enlarging ``c`` to a maximal class.

    ``max_queue`` (entries in one round) and ``time_budget`` (seconds) abort
    the search with :class:`BudgetExceeded`, whose ``stats`` attribute holds
    the partial :class:`SearchStats`.
    """
    if len(c) == 0:
        raise PreconditionError("class is empty")
    n = c.n
    d = vc_dimension(c)
    if k <= 0:
        raise PreconditionError(f"k must be positive, got {k}")
    if d + k >= n:
        raise PreconditionError(f"need d+k < n, got d={d}, k={k}, n={n}")
    enlarged = greedy_maximal_extension(c)
    if vc_dimension(enlarged) != d:
        raise InvariantViolation("maximal enlargement changed the VC dimension")
    target = complement(enlarged)
    m = n - d - k - 1
    stats = SearchStats()
    start = time.monotonic()

    def check_budget(size: int, i: int) -> None:
        msg = None
        if max_queue is not None and size > max_queue:
            msg = f"queue exceeded {max_queue} entries at coordinate {i}"
        elif time_budget is not None and time.monotonic() - start > time_budget:
            msg = f"time budget of {time_budget}s exceeded at coordinate {i}"
        if msg:
            err = BudgetExceeded(msg)
            err.stats = stats
            raise err

    queue = [closed_below_maximum(n, m)]
    for i in range(n):
        prefix = list(range(i + 1))
        allowed = project_onto(target, prefix)
        nxt: dict[int, ConceptClass] = {}
        for cls in queue:
            stats.popped += 1
            plan = lift_plan(cls, i, m)
            if not project_onto(insert_coordinate(plan.reduction, i, None), prefix).issubset(allowed):
                stats.pruned += 1
                continue
            options = []
            for comp in plan.components:
                ok = [lv for lv in (0, 1) if project_onto(insert_coordinate(comp, i, lv), prefix).issubset(allowed)]
                if not ok:
                    break
                options.append(ok)
            else:
                for levels in itertools.product(*options):
                    lifted = plan.build(levels)
                    if lifted.mask in nxt:
                        stats.duplicates += 1
                        continue
                    nxt[lifted.mask] = lifted
                    stats.pushed += 1
                    if stats.pushed % 1024 == 0:
                        check_budget(len(nxt), i)
                check_budget(len(nxt), i)
                continue
            stats.pruned += 1
        queue = list(nxt.values())
        stats.queue_sizes.append(len(queue))

    out = []
    for cls in queue:
        sup = complement(cls)
        if not c.issubset(sup) or not is_maximum(sup) or vc_dimension(sup) != d + k:
            raise InvariantViolation("lifting produced a class that is not a maximum superclass")
        out.append(sup)
    out.sort(key=ConceptClass.sort_key)
    return EmbeddingResult(d + k, tuple(out), stats, enlarged)


def maximum_superclasses(c: ConceptClass, vc: int, *, limit: int | None = None) -> list[ConceptClass]:
    """Every maximum class of VC dimension ``vc`` containing ``c``, with no
    maximal enlargement.

    Solved as a SAT instance: one variable per vertex outside ``c``, exactly
    phi(n, vc) - |c| of them chosen, and for every (vc+1)-set some pattern
    absent from the chosen class. Solutions are enumerated with blocking
    clauses; ``limit`` stops early.
    """
    from pysat.card import CardEnc, EncType
    from pysat.formula import IDPool
    from pysat.solvers import Cadical153

    n = c.n
    if not 0 <= vc < n:
        raise PreconditionError(f"need 0 <= vc < n, got vc={vc}, n={n}")
    if len(c) == 0:
        raise PreconditionError("class is empty")
    need = phi(n, vc) - len(c)
    if need < 0 or vc_dimension(c) > vc:
        return []
    outside = [v for v in range(1 << n) if v not in c]
    pool = IDPool()
    x = {v: pool.id(("x", v)) for v in outside}
    clauses: list[list[int]] = []
    s = vc + 1
    for T in itertools.combinations(range(n), s):
        bits = [coord_bit(n, i) for i in T]

        def pattern(v: int) -> int:
            p = 0
            for b in bits:
                p = (p << 1) | bool(v & b)
            return p

        present = {pattern(v) for v in c.vertices}
        absent = [p for p in range(1 << s) if p not in present]
        if not absent:
            return []
        lits = []
        for p in absent:
            y = pool.id(("y", T, p))
            lits.append(y)
            clauses.extend([-y, -x[v]] for v in outside if pattern(v) == p)
        clauses.append(lits)
    card = CardEnc.equals(lits=list(x.values()), bound=need, vpool=pool, encoding=EncType.seqcounter)
    out = []
    with Cadical153(bootstrap_with=clauses + card.clauses) as solver:
        while solver.solve():
            model = set(solver.get_model())
            chosen = [v for v in outside if x[v] in model]
            cls = ConceptClass(n, c.mask | sum(1 << v for v in chosen))
            if not is_maximum(cls) or vc_dimension(cls) != vc:
                raise InvariantViolation("SAT model is not a maximum class")
            out.append(cls)
            if limit is not None and len(out) >= limit:
                break
            solver.add_clause([-x[v] for v in chosen] + [x[v] for v in outside if x[v] not in model])
    return sorted(out, key=ConceptClass.sort_key)


def maximum_subclass(q: ConceptClass) -> ConceptClass:
    """A maximum VC-(m-1) class inside the maximum VC-m class ``q``.

    Built recursively: with y the first coordinate, take the reduction Q^y at
    y=0 and a maximum subclass of Q^y at y=1. Both pieces lie in ``q``
    because Q^y x {0,1} does.
    """
    m = vc_dimension(q)
    if m <= 0:
        return ConceptClass.empty(q.n)
    if q.n == 1:
        return ConceptClass.from_vertices(1, [0])
    red = reduction(q, 0)
    lower = insert_coordinate(red, 0, 0)
    upper = insert_coordinate(maximum_subclass(red), 0, 1)
    return lower | upper


def _embed(c: ConceptClass, drop: list[int]) -> ConceptClass:
    if not drop:
        return c
    x = drop[0]
    rest = [j - (j > x) for j in drop[1:]]
    inner = _embed(project_drop(c, [x]), rest)
    q = complement(inner)
    r = maximum_subclass(q) if len(q) else ConceptClass.empty(q.n)
    m = insert_coordinate(q, x, 0) | insert_coordinate(r, x, 1)
    return complement(m)


def embed_over_maximum_projection(c: ConceptClass, drop: Sequence[int]) -> ConceptClass:
    """A (d+k)-maximum class containing ``c``, given k coordinates (in
    original numbering) whose deletion leaves a d-maximum image."""
    drop = list(drop)
    if len(set(drop)) != len(drop) or any(not 0 <= x < c.n for x in drop):
        raise PreconditionError(f"drop must be distinct coordinates in 0..{c.n - 1}")
    if len(drop) >= c.n:
        raise PreconditionError("cannot drop every coordinate")
    if len(c) == 0:
        raise PreconditionError("class is empty")
    d = vc_dimension(c)
    image = project_drop(c, drop)
    if vc_dimension(image) != d or not is_maximum(image):
        raise PreconditionError("projection is not a maximum class of the same VC dimension")
    return _embed(c, drop)


def find_deficiency_reducing_coordinate(c: ConceptClass) -> int:
    """Least coordinate whose deletion keeps the VC dimension and strictly
    lowers the deficiency."""
    rep = deficiency(c)
    if rep.deficiency == 0:
        raise PreconditionError("class is already maximum")
    for x in range(c.n):
        image = project_drop(c, [x])
        if vc_dimension(image) != rep.d:
            continue
        if deficiency(image).deficiency < rep.deficiency:
            return x
    raise InvariantViolation("no coordinate reduces the deficiency of a non-maximum class")


@dataclass(frozen=True)
class DeficiencyEmbedding:
    superclass: ConceptClass
    vc: int
    chain: tuple[int, ...]
    deficiency: int


def embed_by_deficiency(c: ConceptClass) -> DeficiencyEmbedding:
    """Maximum superclass of VC dimension at most d + D.

    ``chain`` lists the deleted coordinates in original numbering.
    """
    rep = deficiency(c)
    remaining = list(range(c.n))
    chain = []
    cur = c
    while deficiency(cur).deficiency:
        x = find_deficiency_reducing_coordinate(cur)
        chain.append(remaining.pop(x))
        cur = project_drop(cur, [x])
        if len(chain) > rep.deficiency:
            raise InvariantViolation("more projections than the deficiency allows")
    sup = embed_over_maximum_projection(c, chain)
    vc = vc_dimension(sup)
    if not c.issubset(sup) or not is_maximum(sup) or vc != rep.d + len(chain):
        raise InvariantViolation("deficiency embedding produced an invalid superclass")
    return DeficiencyEmbedding(sup, vc, tuple(chain), rep.deficiency)
