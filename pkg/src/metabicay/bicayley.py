"""Bi-Cayley graphs BiCay(G, R, L, S) over the split metacyclic groups.

Vertices are ``g_0`` (part 0, ``W_0``) and ``g_1`` (part 1, ``W_1``) for
``g`` in G.  Adjacency:

* ``h_0 ~ g_0`` iff ``g h^-1`` in R      (right edges)
* ``h_1 ~ g_1`` iff ``g h^-1`` in L      (left edges)
* ``h_0 ~ g_1`` iff ``g h^-1`` in S      (spokes)

Vertex ``g_i`` has index ``i * |G| + G.index(g)``: all of ``W_0`` first, each
part in lexicographic normal-form order.

The normalizer of the translation group in Aut is built from three kinds of
maps, all acting on the right:

* ``right_translation(g)``:  ``h_i -> (h g)_i``
* ``sigma_map(theta, g)``:  ``h_0 -> (h^theta)_0``, ``h_1 -> (g h^theta)_1``
* ``delta_map(theta, x, y)``:  ``h_0 -> (x h^theta)_1``, ``h_1 -> (y h^theta)_0``
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ConditionFailed, NotAnAutomorphism, ParamsMismatch, SpecViolation
from .graph import Graph
from .metacyclic import (
    TABLE_LIMIT,
    GroupAut,
    GroupElem,
    GroupParams,
    enumerate_automorphisms,
    generates,
)
from .symmetry.perm import Permutation
from .symmetry.permgroup import PermGroup
from .symmetry.search import is_automorphism


@dataclass(frozen=True)
class BiCayleySpec:
    G: GroupParams
    R: frozenset[GroupElem]
    L: frozenset[GroupElem]
    S: frozenset[GroupElem]

    def __init__(self, G: GroupParams, R: Iterable[GroupElem] = (), L: Iterable[GroupElem] = (),
                 S: Iterable[GroupElem] = ()):
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "R", frozenset(R))
        object.__setattr__(self, "L", frozenset(L))
        object.__setattr__(self, "S", frozenset(S))
        self._validate()

    def _validate(self):
        for name in ("R", "L", "S"):
            if any(x.group != self.G for x in getattr(self, name)):
                raise ParamsMismatch(f"{name} contains elements of another group")
        one = self.G.identity
        if frozenset(x.inverse() for x in self.R) != self.R:
            raise SpecViolation("R is not closed under inverses")
        if frozenset(x.inverse() for x in self.L) != self.L:
            raise SpecViolation("L is not closed under inverses")
        if one in self.R or one in self.L:
            raise SpecViolation("R and L must not contain the identity")
        if one not in self.S:
            raise SpecViolation("S must contain the identity")


class BiCayleyGraph(Graph):
    """The graph BiCay(G, R, L, S)."""

    def __init__(self, spec: BiCayleySpec):
        self.spec = spec
        G = spec.G
        N = G.order
        elems = list(G.elements())
        edges = []
        for h in elems:
            hi = G.index(h)
            for r in spec.R:
                edges.append((hi, G.index(r * h)))
            for ell in spec.L:
                edges.append((N + hi, N + G.index(ell * h)))
            for s in spec.S:
                edges.append((hi, N + G.index(s * h)))
        super().__init__(2 * N, edges)

    @property
    def G(self) -> GroupParams:
        return self.spec.G

    def vertex(self, idx: int) -> tuple[GroupElem, int]:
        part, k = divmod(idx, self.G.order)
        return self.G.from_index(k), part

    def index(self, g: GroupElem, part: int) -> int:
        return part * self.G.order + self.G.index(g)

    def vertices(self) -> list[tuple[GroupElem, int]]:
        return [self.vertex(v) for v in range(self.n)]

    def part(self, idx: int) -> int:
        return idx // self.G.order

    @property
    def connected(self) -> bool:
        """Connectivity, computed on the graph and from the group side
        (``<R u L u S> == G``); the two must agree."""
        by_graph = self.is_connected()
        sp = self.spec
        by_group = generates(sp.R | sp.L | sp.S, self.G)
        if by_graph != by_group:
            raise AssertionError("graph connectivity disagrees with generation of G")
        return by_graph


def build_bicayley(spec: BiCayleySpec) -> BiCayleyGraph:
    return BiCayleyGraph(spec)


# -- index-level helpers --------------------------------------------------

def _aut_table(theta: GroupAut) -> list[int]:
    G = theta.group
    if G.order <= TABLE_LIMIT:
        return theta.table.tolist()
    return [G.index(theta(x)) for x in G.elements()]


def _left_mult(g: GroupElem) -> list[int]:
    """Index table of ``h -> g h``."""
    G = g.group
    if G.order <= TABLE_LIMIT:
        return G.mul_table[G.index(g)].tolist()
    return [G.index(g * h) for h in G.elements()]


def _checked(graph: BiCayleyGraph, images: list[int]) -> Permutation:
    perm = Permutation(images)
    if not is_automorphism(graph, perm):
        raise NotAnAutomorphism("constructed map does not preserve adjacency")
    return perm


def _image(theta: GroupAut, X: Iterable[GroupElem]) -> frozenset[GroupElem]:
    return frozenset(theta(x) for x in X)


def _left(g: GroupElem, X: Iterable[GroupElem]) -> frozenset[GroupElem]:
    return frozenset(g * x for x in X)


def _conj(X: Iterable[GroupElem], g: GroupElem) -> frozenset[GroupElem]:
    gi = g.inverse()
    return frozenset(gi * x * g for x in X)


# -- the maps -------------------------------------------------------------

def right_translation(g: GroupElem, graph: BiCayleyGraph) -> Permutation:
    G = graph.G
    N = G.order
    if G.order <= TABLE_LIMIT:
        col = G.mul_table[:, G.index(g)].tolist()
    else:
        col = [G.index(h * g) for h in G.elements()]
    return _checked(graph, col + [N + c for c in col])


def translation_group(graph: BiCayleyGraph) -> PermGroup:
    """The semiregular copy of G acting by right translations."""
    G = graph.G
    return PermGroup([right_translation(G.a, graph), right_translation(G.b, graph)], graph.n)


def sigma_conditions(theta: GroupAut, g: GroupElem, spec: BiCayleySpec) -> list[str]:
    """Names of the violated equations among R^t = R, L^t = g^-1 L g, S^t = g^-1 S."""
    failed = []
    if _image(theta, spec.R) != spec.R:
        failed.append("R^theta = R")
    if _image(theta, spec.L) != _conj(spec.L, g):
        failed.append("L^theta = g^-1 L g")
    if _image(theta, spec.S) != _left(g.inverse(), spec.S):
        failed.append("S^theta = g^-1 S")
    return failed


def sigma_map(theta: GroupAut, g: GroupElem, graph: BiCayleyGraph) -> Permutation:
    failed = sigma_conditions(theta, g, graph.spec)
    if failed:
        raise ConditionFailed("sigma map condition(s) violated: " + ", ".join(failed))
    N = graph.G.order
    t = _aut_table(theta)
    lg = _left_mult(g)
    return _checked(graph, t + [N + lg[x] for x in t])


def delta_conditions(theta: GroupAut, x: GroupElem, y: GroupElem, spec: BiCayleySpec) -> list[str]:
    failed = []
    if _image(theta, spec.R) != _conj(spec.L, x):
        failed.append("R^theta = x^-1 L x")
    if _image(theta, spec.L) != _conj(spec.R, y):
        failed.append("L^theta = y^-1 R y")
    s_inv = frozenset(s.inverse() for s in spec.S)
    if _image(theta, spec.S) != frozenset(y.inverse() * s * x for s in s_inv):
        failed.append("S^theta = y^-1 S^-1 x")
    return failed


def delta_map(theta: GroupAut, x: GroupElem, y: GroupElem, graph: BiCayleyGraph) -> Permutation:
    failed = delta_conditions(theta, x, y, graph.spec)
    if failed:
        raise ConditionFailed("delta map condition(s) violated: " + ", ".join(failed))
    N = graph.G.order
    t = _aut_table(theta)
    lx, ly = _left_mult(x), _left_mult(y)
    return _checked(graph, [N + lx[h] for h in t] + [ly[h] for h in t])


# -- F, I and the normalizer ----------------------------------------------

@dataclass
class FSet:
    """The part-preserving normalizing maps sigma_{theta,g} fixing 1_0."""

    pairs: list[tuple[GroupAut, GroupElem]]
    maps: list[Permutation]
    group: PermGroup

    def order(self) -> int:
        return self.group.order()

    def __len__(self):
        return len(self.pairs)


def _sorted_rows(a: np.ndarray) -> np.ndarray:
    return np.sort(a, axis=-1)


def compute_F(graph: BiCayleyGraph, auts: list[GroupAut] | None = None) -> FSet:
    """All sigma_{theta,g} that are automorphisms.

    Since 1 is in S, ``S^theta = g^-1 S`` forces ``g`` in S, so candidates
    are limited to ``g`` in S.
    """
    spec = graph.spec
    G = spec.G
    auts = enumerate_automorphisms(G) if auts is None else auts
    mul, inv = G.mul_table, G.inv_table
    S_idx = np.array(sorted(G.index(s) for s in spec.S))
    R_idx = np.array(sorted(G.index(r) for r in spec.R), dtype=np.int64)
    L_idx = np.array(sorted(G.index(ell) for ell in spec.L), dtype=np.int64)
    shifted = {int(s): np.sort(mul[inv[s], S_idx]) for s in S_idx}
    conj_L = {int(s): np.sort(mul[mul[inv[s], L_idx], s]) for s in S_idx}
    pairs = []
    for theta in auts:
        t = theta.table
        St = np.sort(t[S_idx])
        if not np.array_equal(np.sort(t[R_idx]), R_idx):
            continue
        Lt = np.sort(t[L_idx])
        for s in S_idx:
            s = int(s)
            if np.array_equal(St, shifted[s]) and np.array_equal(Lt, conj_L[s]):
                pairs.append((theta, G.from_index(s)))
    maps = [sigma_map(theta, g, graph) for theta, g in pairs]
    return FSet(pairs, maps, PermGroup(maps, graph.n))


def compute_I(graph: BiCayleyGraph, auts: list[GroupAut] | None = None) -> list[tuple[GroupAut, GroupElem, GroupElem]]:
    """All (theta, x, y) for which delta_{theta,x,y} is an automorphism.

    Because 1 is in S, ``S^theta = y^-1 S^-1 x`` forces ``x = s y`` for some
    ``s`` in S; the S-condition is screened for all ``y`` at once and the
    survivors are checked against the R and L conditions.
    """
    spec = graph.spec
    G = spec.G
    auts = enumerate_automorphisms(G) if auts is None else auts
    mul, inv = G.mul_table, G.inv_table
    Y = np.arange(G.order)
    S_idx = np.array(sorted(G.index(s) for s in spec.S))
    S_inv = inv[S_idx]
    # prefix[y, k] = y^-1 (s_k)^-1
    prefix = mul[inv[Y][:, None], S_inv[None, :]]
    out = []
    for theta in auts:
        St = np.sort(theta.table[S_idx])
        hits = []
        for s in S_idx:
            X = mul[s, Y]
            cand = np.sort(mul[prefix, X[:, None]], axis=1)
            for y in np.nonzero((cand == St).all(axis=1))[0]:
                hits.append((int(X[y]), int(y)))
        for xi, yi in sorted(hits):
            x, y = G.from_index(xi), G.from_index(yi)
            if not delta_conditions(theta, x, y, spec):
                out.append((theta, x, y))
    return out


def normalizer_decomposition(graph: BiCayleyGraph, auts: list[GroupAut] | None = None) -> PermGroup:
    """The group generated by the translations, F, and one delta map from I
    (when I is non-empty)."""
    G = graph.G
    auts = enumerate_automorphisms(G) if auts is None else auts
    F = compute_F(graph, auts)
    gens = [right_translation(G.a, graph), right_translation(G.b, graph), *F.group.generators]
    I = compute_I(graph, auts)
    if I:
        theta, x, y = I[0]
        gens.append(delta_map(theta, x, y, graph))
    return PermGroup(gens, graph.n)


def relabel(graph: BiCayleyGraph, theta: GroupAut) -> tuple[BiCayleyGraph, Permutation]:
    """BiCay(G, R^t, L^t, S^t) together with the isomorphism ``h_i -> (h^t)_i``."""
    sp = graph.spec
    image = BiCayleyGraph(BiCayleySpec(sp.G, _image(theta, sp.R), _image(theta, sp.L), _image(theta, sp.S)))
    N = sp.G.order
    t = _aut_table(theta)
    return image, Permutation(t + [N + x for x in t])
