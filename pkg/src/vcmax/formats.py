"""Text formats: ``.cc`` concept-class files and ``.cubes`` cube collections.

Both start with optional ``#`` comment lines and a header ``n=<int>``. A
``.cc`` body lists one 0/1 vertex string per line; a ``.cubes`` body lists
one 0/1/* string per line, ``*`` marking a free coordinate.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .cube import ConceptClass, CubeCollection, Subcube, vertex_from_string
from .errors import ParseError, PreconditionError


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _header(lines: list[tuple[int, str]]) -> int:
    if not lines:
        raise ParseError("missing header line 'n=<int>'")
    lineno, head = lines[0]
    key, _, val = head.partition("=")
    if key.strip() != "n" or not val.strip().isdigit():
        raise ParseError(f"line {lineno}: expected 'n=<int>', got {head!r}")
    return int(val)


def parse_cc(text: str) -> ConceptClass:
    lines = list(_content_lines(text))
    n = _header(lines)
    seen: set[int] = set()
    for lineno, line in lines[1:]:
        if len(line) != n or any(ch not in "01" for ch in line):
            raise ParseError(f"line {lineno}: expected a length-{n} 0/1 string, got {line!r}")
        v = vertex_from_string(line)
        if v in seen:
            raise ParseError(f"line {lineno}: duplicate vertex {line}")
        seen.add(v)
    try:
        return ConceptClass.from_vertices(n, seen)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from exc


def parse_cc_stream(text: str) -> list[ConceptClass]:
    """Several ``.cc`` records separated by blank lines."""
    out, block = [], []
    for raw in text.splitlines() + [""]:
        if raw.strip():
            block.append(raw)
        elif block:
            if any(line.strip() and not line.strip().startswith("#") for line in block):
                out.append(parse_cc("\n".join(block)))
            block = []
    return out


def format_cc(c: ConceptClass, comments: Iterable[str] = ()) -> str:
    lines = [f"# {line}" for line in comments]
    lines.append(f"n={c.n}")
    lines.extend(c.strings())
    return "\n".join(lines) + "\n"


def format_cc_stream(classes: Iterable[ConceptClass]) -> str:
    return "\n".join(format_cc(c) for c in classes)


def parse_cubes(text: str) -> CubeCollection:
    lines = list(_content_lines(text))
    n = _header(lines)
    cubes = []
    for lineno, line in lines[1:]:
        if len(line) != n or any(ch not in "01*" for ch in line):
            raise ParseError(f"line {lineno}: expected a length-{n} 0/1/* string, got {line!r}")
        cubes.append(Subcube.from_string(line))
    if not cubes:
        raise ParseError("a .cubes file needs at least one cube")
    dims = {c.dim for c in cubes}
    if len(dims) != 1:
        raise ParseError(f"cubes of mixed dimensions {sorted(dims)}")
    if len({str(c) for c in cubes}) != len(cubes):
        raise ParseError("duplicate cube")
    return CubeCollection(n, dims.pop(), tuple(cubes))


def format_cubes(cc: CubeCollection, comments: Iterable[str] = ()) -> str:
    lines = [f"# {line}" for line in comments]
    lines.append(f"n={cc.n}")
    lines.extend(str(c) for c in cc.cubes)
    return "\n".join(lines) + "\n"


def read_cc(path: str) -> ConceptClass:
    with open(path, encoding="utf-8") as fh:
        return parse_cc(fh.read())


def read_cubes(path: str) -> CubeCollection:
    with open(path, encoding="utf-8") as fh:
        return parse_cubes(fh.read())


__all__ = [
    "parse_cc",
    "parse_cc_stream",
    "format_cc",
    "format_cc_stream",
    "parse_cubes",
    "format_cubes",
    "read_cc",
    "read_cubes",
    "vertex_from_string",
]
