"""Simple undirected graphs on ``range(n)``."""

from __future__ import annotations

from typing import Iterable, Sequence


class Graph:
    """Adjacency-list graph.  Neighbour lists are sorted tuples."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> Graph:
        g = cls.__new__(cls)
        g.adjacency = tuple(tuple(sorted(set(a))) for a in adjacency)
        for u, a in enumerate(g.adjacency):
            if u in a or any(u not in g.adjacency[w] for w in a):
                raise ValueError("adjacency is not simple and symmetric")
        return g

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def __len__(self):
        return self.n

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> set[int]:
        return {len(a) for a in self.adjacency}

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in sorted order."""
        return [(u, v) for u, a in enumerate(self.adjacency) for v in a if u < v]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, a in enumerate(self.adjacency) for v in a]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.num_edges()})"
