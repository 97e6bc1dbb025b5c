"""Graph automorphism groups by individualization-refinement.

The search follows the classic scheme: an ordered partition of the vertices
is refined to an equitable one (iterated neighbour-colour counting), a vertex
of the first smallest non-singleton cell is individualized, and the process
repeats until the partition is discrete.  The leftmost such path fixes a
base ``v_1, ..., v_d``.  Working from the deepest level up, every vertex of
the level-``i`` target cell that is not already in the orbit of ``v_i`` under
the automorphisms found so far is tried: a subtree search for a leaf that
differs from the first leaf by an automorphism either succeeds (new strong
generator) or proves the vertex is in a different orbit.  The generators
found this way form a strong generating set relative to the base, so the
group order is the product of the basic orbit sizes.

Refinement records a trace (cell splits and the neighbour-count signatures
that caused them).  Traces are label-invariant, so a subtree whose trace
differs from the first path at the same depth cannot contain an automorphic
leaf and is pruned.
"""

from __future__ import annotations

import os
from collections import Counter
from typing import Sequence

from ..errors import TooLarge
from .permgroup import PermGroup

MAX_VERTICES = 5000


def vertex_guard() -> int:
    return int(os.environ.get("BICAYLEY_MAX_VERTICES", MAX_VERTICES))


Partition = list[list[int]]


def _refine(adj: Sequence[Sequence[int]], cells: Partition) -> tuple[Partition, tuple]:
    """Equitable refinement of an ordered partition.

    Each round splits every cell by the multiset of neighbour colours (colour =
    current cell position).  Split parts replace the cell in place, ordered by
    signature, so positions of untouched cells never move.
    """
    n = len(adj)
    color = [0] * n
    cells = [list(c) for c in cells]
    trace = []
    while True:
        for pos, cell in enumerate(cells):
            for v in cell:
                color[v] = pos
        new_cells: Partition = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(sorted(Counter(color[w] for w in adj[v]).items()))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            keys = sorted(groups)
            trace.append((len(new_cells), tuple((k, len(groups[k])) for k in keys)))
            new_cells.extend(groups[k] for k in keys)
        cells = new_cells
        if not changed:
            return cells, tuple(trace)


def _target_cell(cells: Partition) -> int | None:
    best = None
    for pos, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = pos
    return best


def _individualize(cells: Partition, pos: int, v: int) -> Partition:
    cell = cells[pos]
    rest = [w for w in cell if w != v]
    return cells[:pos] + [[v], rest] + cells[pos + 1:]


class _Search:
    def __init__(self, adj: Sequence[Sequence[int]], colors: Sequence | None):
        self.adj = [tuple(a) for a in adj]
        self.adj_sets = [frozenset(a) for a in adj]
        self.n = len(adj)
        key = (lambda v: (colors[v], len(self.adj[v]))) if colors is not None else (lambda v: len(self.adj[v]))
        buckets: dict = {}
        for v in range(self.n):
            buckets.setdefault(key(v), []).append(v)
        self.initial = [buckets[k] for k in sorted(buckets)]
        self.nodes = 0

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        for u in range(self.n):
            pu = perm[u]
            if len(self.adj[u]) != len(self.adj[pu]):
                return False
            target = self.adj_sets[pu]
            for w in self.adj[u]:
                if perm[w] not in target:
                    return False
        return True

    def first_path(self):
        """Leftmost root-to-leaf path: per-level (partition, trace, target, chosen vertex)."""
        cells, trace = _refine(self.adj, self.initial)
        path = []
        while True:
            pos = _target_cell(cells)
            if pos is None:
                return path, trace, [c[0] for c in cells]
            v = min(cells[pos])
            path.append((cells, trace, pos, v))
            cells, trace = _refine(self.adj, _individualize(cells, pos, v))

    def find_leaf(self, cells: Partition, depth: int, path, leaf_trace, first_leaf) -> tuple | None:
        """Search the subtree rooted at ``cells`` (depth ``depth``) for a leaf
        whose labelling maps the first leaf onto it by an automorphism."""
        self.nodes += 1
        pos = _target_cell(cells)
        if pos is None:
            if depth != len(path):
                return None
            leaf = [c[0] for c in cells]
            perm = [0] * self.n
            for a, b in zip(first_leaf, leaf):
                perm[a] = b
            return tuple(perm) if self.is_automorphism(perm) else None
        if depth >= len(path) or pos != path[depth][2] or len(cells[pos]) != len(path[depth][0][pos]):
            return None
        expected = path[depth + 1][1] if depth + 1 < len(path) else leaf_trace
        for w in sorted(cells[pos]):
            child, trace = _refine(self.adj, _individualize(cells, pos, w))
            if trace != expected:
                continue
            found = self.find_leaf(child, depth + 1, path, leaf_trace, first_leaf)
            if found is not None:
                return found
        return None


def _orbit(gens: list[tuple], x: int) -> set[int]:
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g in gens:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen


def automorphism_group(graph, colors: Sequence | None = None, guard: int | None = None) -> PermGroup:
    """Full automorphism group of a simple undirected graph.

    ``graph`` is anything with an ``adjacency`` attribute (a sequence of
    neighbour lists indexed by vertex) or such a sequence itself.  Optional
    ``colors`` restricts to colour-preserving automorphisms.
    """
    adj = getattr(graph, "adjacency", graph)
    n = len(adj)
    guard = vertex_guard() if guard is None else guard
    if n > guard:
        raise TooLarge(f"{n} vertices exceeds the automorphism-search guard {guard}")
    if n == 0:
        return PermGroup([], 0)
    search = _Search(adj, colors)
    path, leaf_trace, first_leaf = search.first_path()
    base = [v for (_, _, _, v) in path]
    gens: list[tuple] = []

    for depth in range(len(path) - 1, -1, -1):
        cells, _, pos, v = path[depth]
        level_gens = [g for g in gens if all(g[b] == b for b in base[:depth])]
        orbit = _orbit(level_gens, v)
        rejected: set[int] = set()
        for w in sorted(cells[pos]):
            if w in orbit or w in rejected:
                continue
            child, trace = _refine(search.adj, _individualize(cells, pos, w))
            expected = path[depth + 1][1] if depth + 1 < len(path) else leaf_trace
            found = None
            if trace == expected:
                found = search.find_leaf(child, depth + 1, path, leaf_trace, first_leaf)
            if found is None:
                rejected |= _orbit(level_gens, w)
            else:
                gens.append(found)
                level_gens.append(found)
                orbit = _orbit(level_gens, v)

    group = PermGroup.from_strong_generators(base, gens, n)
    for g in group.generators:
        if not search.is_automorphism(g):
            raise AssertionError("search produced a non-automorphism")
    return group


def is_automorphism(graph, perm: Sequence[int]) -> bool:
    adj = getattr(graph, "adjacency", graph)
    n = len(adj)
    if len(perm) != n or sorted(perm) != list(range(n)):
        return False
    sets = [frozenset(a) for a in adj]
    return all(frozenset(perm[w] for w in adj[u]) == sets[perm[u]] for u in range(n))
