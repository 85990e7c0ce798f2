"""Command-line interface.

Coordinates on the command line are 1-based. Exit codes: 0 success, 1 usage,
parse or precondition errors, 2 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Callable, Sequence

from . import constructions as cons
from .cube import ConceptClass, CubeCollection, complement
from .embedding import embed_by_deficiency, maximum_embeddings
from .errors import BudgetExceeded, InvariantViolation, ParseError, PreconditionError, StructuralError
from .formats import format_cc, parse_cc, parse_cubes
from .liftshift import closed_below_maximum, enumerate_maximum_classes, random_maximum_class, shift_down, shift_to_closed_below
from .reductions import face_graph, iterated_reduction, is_maximum_via_trees, project_drop, reduction, unique_complete_collection
from .vc import (
    complement_cube_bound,
    count_k_cubes,
    deficiency,
    is_maximal,
    is_maximum,
    sauer_bound,
    vc_dimension,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        raise UsageError(message)


# -- payloads --------------------------------------------------------------
# Every handler returns a payload: a dict with "kind" and data. The text and
# JSON renderers both read the same payload.


def _class_payload(c: ConceptClass) -> dict:
    return {"n": c.n, "vertices": c.strings()}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _read_cc(path: str) -> ConceptClass:
    return parse_cc(_read(path))


def _coords(text: str | None, n: int) -> list[int]:
    """Comma-separated 1-based coordinates to 0-based."""
    if not text:
        return []
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad coordinate list {text!r}") from exc
    if any(not 1 <= v <= n for v in vals):
        raise PreconditionError(f"coordinates must lie in 1..{n}")
    if len(set(vals)) != len(vals):
        raise PreconditionError("coordinates must be distinct")
    return [v - 1 for v in vals]


def _read_collection(path: str) -> CubeCollection:
    text = _read(path)
    if any(ch == "*" for ch in text) or path.endswith(".cubes"):
        return parse_cubes(text)
    return unique_complete_collection(parse_cc(text))


def cmd_vcdim(a) -> dict:
    return {"kind": "int", "value": vc_dimension(_read_cc(a.file))}


def cmd_sauer(a) -> dict:
    return {"kind": "int", "value": sauer_bound(a.n, a.d)}


def cmd_deficiency(a) -> dict:
    r = deficiency(_read_cc(a.file))
    return {"kind": "record", "value": {"d": r.d, "sauer": r.sauer, "size": r.cardinality, "deficiency": r.deficiency}}


def cmd_is_maximum(a) -> dict:
    if a.trees:
        return {"kind": "bool", "value": is_maximum_via_trees(_read_collection(a.file))}
    return {"kind": "bool", "value": is_maximum(_read_cc(a.file))}


def cmd_is_maximal(a) -> dict:
    return {"kind": "bool", "value": is_maximal(_read_cc(a.file))}


def cmd_count_cubes(a) -> dict:
    c = _read_cc(a.file)
    if not a.complement:
        return {"kind": "int", "value": count_k_cubes(c, a.k)}
    actual = count_k_cubes(complement(c), a.k)
    rec = {"k": a.k, "count": actual}
    if len(c) and is_maximal(c):
        d = vc_dimension(c)
        if 0 <= a.k < c.n - d - 1:
            rec["bound"] = complement_cube_bound(c.n, d, a.k)
    return {"kind": "record", "value": rec}


def cmd_complement(a) -> dict:
    return {"kind": "class", "value": complement(_read_cc(a.file))}


def cmd_project(a) -> dict:
    c = _read_cc(a.file)
    return {"kind": "class", "value": project_drop(c, _coords(a.drop, c.n))}


def cmd_reduce(a) -> dict:
    c = _read_cc(a.file)
    (x,) = _coords(str(a.x), c.n)
    return {"kind": "class", "value": reduction(c, x)}


def cmd_ir(a) -> dict:
    cc = _read_collection(a.file)
    g = iterated_reduction(cc, _coords(a.S, cc.n))
    return {
        "kind": "dot",
        "value": g.to_dot(),
        "data": {
            "S": [i + 1 for i in g.S],
            "nodes": len(g.nodes),
            "edges": [[u, w, e + 1] for u, w, e in g.edges],
            "components": g.component_count,
            "is_tree": g.is_tree,
        },
    }


def cmd_face_graph(a) -> dict:
    fg = face_graph(_read_collection(a.file))
    return {
        "kind": "dot",
        "value": fg.to_dot(),
        "data": {"cubes": [str(c) for c in fg.cubes], "faces": [str(f) for f in fg.faces], "edges": [list(e) for e in fg.edges]},
    }


def cmd_shift(a) -> dict:
    c = _read_cc(a.file)
    if a.x is None:
        return {"kind": "class", "value": shift_to_closed_below(c)}
    (x,) = _coords(str(a.x), c.n)
    return {"kind": "class", "value": shift_down(c, x)}


def cmd_enum_max(a) -> dict:
    classes = enumerate_maximum_classes(a.n, a.d)
    if a.count:
        return {"kind": "int", "value": len(classes)}
    return {"kind": "classes", "value": classes}


def cmd_embed(a) -> dict:
    c = _read_cc(a.file)
    try:
        r = maximum_embeddings(c, a.k, time_budget=a.budget)
    except BudgetExceeded as exc:
        raise BudgetExceeded(f"{exc} (search stats: {_stats(exc.stats)})") from exc
    return {
        "kind": "classes",
        "value": list(r.classes),
        "summary": f"{len(r.classes)} classes found",
        "meta": {"target_vc": r.target_vc, "enlarged_added": len(r.enlarged) - len(c), "search": _stats(r.search_stats)},
    }


def _stats(s) -> dict:
    return {"popped": s.popped, "pushed": s.pushed, "pruned": s.pruned, "duplicates": s.duplicates, "queue_sizes": list(s.queue_sizes)}


def cmd_embed_deficiency(a) -> dict:
    r = embed_by_deficiency(_read_cc(a.file))
    return {
        "kind": "class",
        "value": r.superclass,
        "meta": {"vc": r.vc, "deficiency": r.deficiency, "chain": [x + 1 for x in r.chain]},
    }


def cmd_gen(a) -> dict:
    if a.family == "theorem6":
        c = cons.inembeddable_witness(a.d, a.n) if a.witness else cons.inembeddable_class(a.d, a.n).cls
        return {"kind": "class", "value": c}
    if a.family == "closed-below":
        return {"kind": "class", "value": closed_below_maximum(a.n, a.d)}
    if a.family == "symmetric":
        fn = cons.symmetric_maximum_extension if a.extension else cons.symmetric_function_class
        return {"kind": "class", "value": fn(a.n)}
    if a.family == "boolsum":
        g = _read_tree(a.tree, a.n) if a.tree else cons.generating_set(a.n)
        return {"kind": "class", "value": cons.boolean_sum_class(g, a.k)}
    if a.family == "random":
        return {"kind": "class", "value": random_maximum_class(a.n, a.d, random.Random(a.seed))}
    raise UsageError(f"unknown family {a.family}")


def _read_tree(path: str, n: int) -> cons.GeneratingSet:
    """Tree file: first line the monomial of s_1, then one 'j p' line per
    later sum meaning s_i = s_j + monomial p (all 1-based)."""
    rows = [line.split() for line in _read(path).splitlines() if line.strip() and not line.lstrip().startswith("#")]
    try:
        first = int(rows[0][0]) - 1
        steps = [(int(j) - 1, int(p) - 1) for j, p in rows[1:]]
    except (IndexError, ValueError) as exc:
        raise ParseError(f"{path}: malformed generating-set tree") from exc
    return cons.GeneratingSet.from_tree(n, first, steps)


def cmd_classify_maximal(a) -> dict:
    return {"kind": "classes", "value": cons.classify_maximal(a.n, a.d)}


# -- rendering -------------------------------------------------------------


def render_text(p: dict) -> str:
    kind, val = p["kind"], p["value"]
    if kind == "bool":
        return "true\n" if val else "false\n"
    if kind == "int":
        return f"{val}\n"
    if kind == "record":
        return "".join(f"{k}: {_text_value(v)}\n" for k, v in val.items())
    if kind == "dot":
        return val
    out = []
    for k, v in p.get("meta", {}).items():
        out.append(f"# {k}: {_text_value(v)}\n")
    if kind == "class":
        out.append(format_cc(val))
    elif kind == "classes":
        out.append("\n".join(format_cc(c) for c in val))
        if "summary" in p:
            out.append(("\n" if val else "") + p["summary"] + "\n")
    return "".join(out)


def _text_value(v: Any) -> str:
    if isinstance(v, dict):
        return " ".join(f"{k}={_text_value(x)}" for k, x in v.items())
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    return str(v).lower() if isinstance(v, bool) else str(v)


def to_json(p: dict) -> dict:
    kind, val = p["kind"], p["value"]
    if kind == "class":
        out = {"class": _class_payload(val)}
    elif kind == "classes":
        out = {"classes": [_class_payload(c) for c in val], "count": len(val)}
    elif kind == "dot":
        out = {"dot": val, **p.get("data", {})}
    else:
        out = {"result": val}
    if "meta" in p:
        out.update(p["meta"])
    return out


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="accepted; work is single-threaded")

    p = _Parser(prog="vcmax", description="Concept classes in the binary n-cube.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(fn=fn)
        return sp

    add("vcdim", cmd_vcdim, "VC dimension").add_argument("file")
    sp = add("sauer", cmd_sauer, "Sauer bound")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    add("deficiency", cmd_deficiency, "Sauer bound minus size").add_argument("file")
    sp = add("is-maximum", cmd_is_maximum, "Sauer bound met with equality")
    sp.add_argument("file")
    sp.add_argument("--trees", action="store_true", help="use the iterated-reduction test on the cube collection")
    add("is-maximal", cmd_is_maximal, "no vertex can be added").add_argument("file")
    sp = add("count-cubes", cmd_count_cubes, "number of k-subcubes")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--complement", action="store_true", help="count in the complement and report the lower bound")
    add("complement", cmd_complement, "complement class").add_argument("file")
    sp = add("project", cmd_project, "delete coordinates")
    sp.add_argument("file")
    sp.add_argument("--drop", required=True, help="comma-separated coordinates")
    sp = add("reduce", cmd_reduce, "reduction along a coordinate")
    sp.add_argument("file")
    sp.add_argument("--x", type=int, required=True)
    sp = add("ir", cmd_ir, "iterated reduction as DOT")
    sp.add_argument("file", help=".cc of a maximum class or a .cubes collection")
    sp.add_argument("--S", default="", help="comma-separated direction set of size d-1")
    add("face-graph", cmd_face_graph, "cube/face incidence graph as DOT").add_argument("file")
    sp = add("shift", cmd_shift, "shift down along x, or to closed-below form")
    sp.add_argument("file")
    sp.add_argument("--x", type=int)
    sp = add("enum-max", cmd_enum_max, "all maximum classes (n <= 5)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--count", action="store_true")
    sp = add("embed", cmd_embed, "all (d+k)-maximum superclasses")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--budget", type=float, default=None, help="time limit in seconds")
    add("embed-deficiency", cmd_embed_deficiency, "maximum superclass via projections").add_argument("file")

    sp = add("gen", cmd_gen, "generate a class family")
    sp.add_argument("family", choices=["theorem6", "closed-below", "symmetric", "boolsum", "random"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--extension", action="store_true")
    sp.add_argument("--tree")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("classify-maximal", cmd_classify_maximal, "maximal non-maximum classes up to symmetry")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    return p


_REQUIRED = {
    "theorem6": ("d",),
    "closed-below": ("d",),
    "boolsum": ("k",),
    "random": ("d",),
}


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command; returns (exit code, stdout text, stderr text)."""
    try:
        args = build_parser().parse_args(list(argv))
        if args.command == "gen":
            for name in _REQUIRED.get(args.family, ()):
                if getattr(args, name) is None:
                    raise UsageError(f"gen {args.family} needs --{name}")
        payload = args.fn(args)
        if getattr(args, "json", False):
            return 0, json.dumps(to_json(payload), sort_keys=True) + "\n", ""
        return 0, render_text(payload), ""
    except UsageError as exc:
        return 1, "", f"usage error: {exc}\n"
    except (ParseError, PreconditionError) as exc:
        return 1, "", f"error: {exc}\n"
    except (InvariantViolation, StructuralError) as exc:
        return 2, "", f"invariant violated: {exc}\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
