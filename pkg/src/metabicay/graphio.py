"""Graph file formats: graph6, edge lists and DOT.

All three use the package's vertex numbering (``W_0`` then ``W_1``).  Edge
lists carry a ``# vertices N`` comment so isolated vertices survive a round
trip; files without it get ``max label + 1`` vertices.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import GraphFormatError
from .graph import Graph

FORMATS = ("graph6", "edgelist", "dot")
_SUFFIXES = {".g6": "graph6", ".graph6": "graph6", ".edges": "edgelist", ".el": "edgelist",
             ".txt": "edgelist", ".dot": "dot", ".gv": "dot"}
G6_HEADER = ">>graph6<<"


# -- graph6 ---------------------------------------------------------------

def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphFormatError(f"graph6 cannot encode {n} vertices")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Vertex count and the offset where the adjacency bits start."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start:start + width]
    if len(chunk) < width:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, start + width


def to_graph6(graph: Graph) -> str:
    n = graph.n
    bits = []
    for j in range(1, n):
        row = graph.adjacency[j]
        bits.extend(1 if i in row else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return _encode_size(n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    data = s.encode("ascii")
    if any(not 63 <= c <= 126 for c in data):
        raise GraphFormatError("graph6 characters must lie in range 63..126")
    n, pos = _decode_size(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# -- edge list ------------------------------------------------------------

def to_edgelist(graph: Graph) -> str:
    lines = [f"# vertices {graph.n}"]
    lines += [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.fullmatch(r"#\s*vertices\s+(\d+)", line)
            if m:
                n = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    top = max((max(e) for e in edges), default=-1) + 1
    n = top if n is None else n
    if top > n:
        raise GraphFormatError(f"edge endpoint {top - 1} exceeds declared vertex count {n}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


# -- DOT ------------------------------------------------------------------

def to_dot(graph: Graph, name: str = "G", labels=None) -> str:
    """Undirected DOT.  ``labels`` maps vertex index to a display string;
    for bi-Cayley graphs the default is ``b^j a^i`` with the part as a
    subscript and parts distinguished by shape."""
    if labels is None and hasattr(graph, "vertex"):
        def labels(v):
            g, part = graph.vertex(v)
            return f"{g!r}_{part}"
    out = [f"graph {name} {{"]
    for v in range(graph.n):
        attrs = []
        if labels is not None:
            attrs.append(f'label="{labels(v)}"')
        if hasattr(graph, "part"):
            attrs.append("shape=" + ("circle" if graph.part(v) == 0 else "box"))
        out.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    out += [f"  {u} -- {v};" for u, v in graph.edges()]
    out.append("}")
    return "\n".join(out) + "\n"


_DOT_NODE = re.compile(r"^\s*(\d+)\s*(\[.*\])?\s*;?\s*$")
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*(\[.*\])?\s*;?\s*$")


def from_dot(text: str) -> Graph:
    """Reads the subset of DOT written by :func:`to_dot`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not re.match(r"^\s*(strict\s+)?graph\b.*\{\s*$", lines[0]) or lines[-1].strip() != "}":
        raise GraphFormatError("expected an undirected 'graph NAME { ... }' block")
    nodes, edges = set(), []
    for line in lines[1:-1]:
        if m := _DOT_EDGE.match(line):
            edges.append((int(m.group(1)), int(m.group(2))))
        elif m := _DOT_NODE.match(line):
            nodes.add(int(m.group(1)))
        else:
            raise GraphFormatError(f"unsupported DOT statement: {line.strip()!r}")
    n = max(nodes | {x for e in edges for x in e}, default=-1) + 1
    return Graph(n, edges)


# -- files ----------------------------------------------------------------

_WRITERS = {"graph6": lambda g: to_graph6(g) + "\n", "edgelist": to_edgelist, "dot": to_dot}
_READERS = {"graph6": from_graph6, "edgelist": from_edgelist, "dot": from_dot}


def format_for(path: str | Path, fmt: str | None = None) -> str:
    if fmt is not None:
        if fmt not in FORMATS:
            raise GraphFormatError(f"unknown format {fmt!r}")
        return fmt
    suffix = Path(path).suffix.lower()
    if suffix not in _SUFFIXES:
        raise GraphFormatError(f"cannot infer a graph format from {str(path)!r}")
    return _SUFFIXES[suffix]


def dumps(graph: Graph, fmt: str) -> str:
    return _WRITERS[format_for("", fmt)](graph)


def loads(text: str, fmt: str) -> Graph:
    return _READERS[format_for("", fmt)](text)


def write_graph(graph: Graph, path: str | Path, fmt: str | None = None) -> None:
    Path(path).write_text(dumps(graph, format_for(path, fmt)))


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    fmt = format_for(path, fmt)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {str(path)!r}: {exc.strerror}") from exc
    return loads(text, fmt)
