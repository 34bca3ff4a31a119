"""Line-oriented graph files.

::

    # comment
    n 5
    e 0 3
    e 1 3

Vertices are 0-based; edges are written with u < v.  The bipartition is
never stored, it is recomputed on load.
"""

from __future__ import annotations

from pathlib import Path

from .errors import IdOutOfRange, ParseError
from .graph import Graph, build_graph


def parse_graph(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "n":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(lineno, f"bad header {line!r}")
            n = int(parts[1])
        elif tag == "e":
            if n is None:
                raise ParseError(lineno, "edge before header")
            if len(parts) != 3:
                raise ParseError(lineno, f"bad edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, f"non-integer vertex in {line!r}") from None
            if u == v:
                raise ParseError(lineno, f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IdOutOfRange(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
            edges.append((u, v))
        else:
            raise ParseError(lineno, f"unknown line tag {tag!r}")
    if n is None:
        raise ParseError(0, "missing 'n <count>' header")
    return build_graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")
