"""Orbits, transitivity classification, normality and the connection-set survey."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ..bicayley import BiCayleyGraph, BiCayleySpec
from ..errors import InvalidParams, NotASubgroup, TooLarge
from ..metacyclic import GroupElem, GroupParams, enumerate_automorphisms, generates
from .permgroup import PermGroup
from .search import automorphism_group

DOMAINS = ("vertices", "edges", "arcs")
NORMALIZER_ENUMERATION_LIMIT = 10**6
SURVEY_GUARD = 5**3

LABELS = (
    "arc-transitive",
    "half-arc-transitive",
    "semisymmetric-per-paper",
    "vertex-transitive-only",
    "edge-intransitive",
)


def _orbit_partition(gens, points: list, act) -> list[list]:
    index = {x: i for i, x in enumerate(points)}
    seen = [False] * len(points)
    out = []
    for s, x in enumerate(points):
        if seen[s]:
            continue
        seen[s] = True
        orb, frontier = [x], [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = act(y, g)
                    k = index[z]
                    if not seen[k]:
                        seen[k] = True
                        orb.append(z)
                        nxt.append(z)
            frontier = nxt
        out.append(sorted(orb))
    return out


def orbits_on(graph, group: PermGroup, domain: str = "vertices") -> list[list]:
    """Orbit partition of the vertices, edges (sorted pairs) or arcs (ordered
    pairs) under ``group``, each orbit sorted, orbits ordered by first member."""
    if domain == "vertices":
        return _orbit_partition(group.generators, list(range(graph.n)), lambda v, g: g[v])
    if domain == "edges":
        return _orbit_partition(group.generators, graph.edges(),
                                lambda e, g: tuple(sorted((g[e[0]], g[e[1]]))))
    if domain == "arcs":
        return _orbit_partition(group.generators, graph.arcs(), lambda a, g: (g[a[0]], g[a[1]]))
    raise ValueError(f"domain must be one of {DOMAINS}")


def transitivity_label(vertex_transitive: bool, edge_transitive: bool, arc_transitive: bool) -> str:
    if arc_transitive:
        return "arc-transitive"
    if vertex_transitive and edge_transitive:
        return "half-arc-transitive"
    if edge_transitive:
        return "semisymmetric-per-paper"
    if vertex_transitive:
        return "vertex-transitive-only"
    return "edge-intransitive"


@dataclass(frozen=True)
class SymmetryReport:
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    label: str
    aut_order: int
    stabilizer_order: int
    stabilizer_is_cyclic: bool
    vertex_orbits: int
    edge_orbits: int
    arc_orbits: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def classify_symmetry(graph, A: PermGroup | None = None) -> SymmetryReport:
    """Transitivity flags from orbit counts.

    A graph with no edges counts as edge- and arc-transitive.  Arc
    transitivity also requires vertex transitivity, so isolated vertices
    cannot make a graph arc-transitive.  The stabilizer reported is that of
    vertex 0.
    """
    A = automorphism_group(graph) if A is None else A
    nv = len(orbits_on(graph, A, "vertices"))
    ne = len(orbits_on(graph, A, "edges"))
    na = len(orbits_on(graph, A, "arcs"))
    vt, et = nv <= 1, ne <= 1
    at = vt and na <= 1
    stab = A.stabilizer(0) if graph.n else A
    return SymmetryReport(vt, et, at, transitivity_label(vt, et, at), A.order(), stab.order(),
                          stab.is_cyclic(), nv, ne, na)


def is_normal_subgroup(H: PermGroup, A: PermGroup) -> bool:
    if H.degree != A.degree or not H.is_subgroup_of(A):
        raise NotASubgroup("H is not contained in A")
    return all(h.conjugate(a) in H for h in H.generators for a in A.generators)


def normalizer(H: PermGroup, A: PermGroup, limit: int = NORMALIZER_ENUMERATION_LIMIT) -> PermGroup:
    """N_A(H) by running through every element of A."""
    if A.order() > limit:
        raise TooLarge(f"|A| = {A.order()} exceeds the enumeration limit {limit}")
    if not H.is_subgroup_of(A):
        raise NotASubgroup("H is not contained in A")
    N = PermGroup([], A.degree)
    for a in A.elements():
        if a not in N and all(h.conjugate(a) in H for h in H.generators):
            N = PermGroup([*N.generators, a], A.degree)
    return N


def sylow_condition_holds(graph, A: PermGroup) -> bool:
    """Whether ``|G|`` exactly divides ``|A|``, i.e. the translation group of
    a bi-Cayley graph is a Sylow p-subgroup."""
    G = graph.G
    order = A.order()
    return order % G.order == 0 and (order // G.order) % G.p != 0


def locally_transitive(graph, A: PermGroup | None = None) -> bool:
    """Every vertex stabilizer is transitive on the neighbourhood (checked on
    one representative per vertex orbit)."""
    A = automorphism_group(graph) if A is None else A
    for orb in orbits_on(graph, A, "vertices"):
        u = orb[0]
        nbrs = graph.neighbors(u)
        if nbrs and set(nbrs) - set(A.stabilizer(u).orbit(nbrs[0])):
            return False
    return True


# -- survey ---------------------------------------------------------------

@dataclass(frozen=True)
class SurveyEntry:
    S: tuple[GroupElem, ...]
    class_size: int
    report: SymmetryReport
    locally_transitive: bool


@dataclass
class SurveyReport:
    G: GroupParams
    max_size: int
    generating_sets: int = 0
    entries: list[SurveyEntry] = field(default_factory=list)

    @property
    def hits(self) -> list[SurveyEntry]:
        return [e for e in self.entries if e.locally_transitive]


def connection_set_classes(G: GroupParams, max_size: int, auts=None) -> list[tuple[tuple[int, ...], int]]:
    """Generating sets ``S`` with ``1 in S`` and ``|S| <= max_size``, one
    representative (the lexicographically least index tuple) per orbit of
    Aut(G), with the orbit size."""
    auts = enumerate_automorphisms(G) if auts is None else auts
    tables = np.stack([t.table for t in auts])
    seen: set[tuple[int, ...]] = set()
    out = []
    for size in range(1, max_size + 1):
        for rest in combinations(range(1, G.order), size - 1):
            S = (0, *rest)
            if S in seen:
                continue
            images = {tuple(sorted(row)) for row in tables[:, list(S)].tolist()}
            seen |= images
            if generates([G.from_index(i) for i in S], G):
                out.append((min(images), len(images)))
    return out


def survey_small_connection_sets(G: GroupParams, max_size: int, guard: int = SURVEY_GUARD) -> SurveyReport:
    """Classify BiCay(G, {}, {}, S) for every generating ``S`` up to
    Aut(G)-equivalence and record which are locally transitive."""
    if G.order > guard:
        raise TooLarge(f"|G| = {G.order} exceeds the survey guard {guard}")
    if max_size >= G.p:
        raise InvalidParams(f"max_size must be below p = {G.p}")
    report = SurveyReport(G, max_size)
    for S_idx, size in connection_set_classes(G, max_size):
        S = tuple(G.from_index(i) for i in S_idx)
        graph = BiCayleyGraph(BiCayleySpec(G, S=S))
        A = automorphism_group(graph)
        report.generating_sets += size
        report.entries.append(SurveyEntry(S, size, classify_symmetry(graph, A), locally_transitive(graph, A)))
    return report
