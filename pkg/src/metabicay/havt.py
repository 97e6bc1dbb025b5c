"""Half-arc-transitive bi-Cayley graphs over split metacyclic p-groups.

For ``k | p-1`` (``k >= 2``), ``e`` the canonical unit of order ``k`` modulo
``p^alpha`` and ``r = 1 + p^gamma``, a solution ``n`` of

    e^l r^m = (r^m - n (1 - e))^2     (mod p^alpha)

gives the exponent sets

    T  = {(e-1)^-1 (e^i - 1)}                    i = 0..k-1
    T' = {(e-1)^-1 (e^i - 1) r^m + e^i n}        i = 0..k-1

and the connection set ``S = U | V`` with ``U = {a^t : t in T}`` and
``V = {b^m a^t : t in T'}``.  The graph is BiCay(G, {}, {}, S).

The equation has a solution iff ``k / gcd(k, l)`` divides ``(p-1)/2``, and then
exactly two: ``(1-e)^-1 (r^m +- u)`` with ``u^2 = e^l r^m``.  The ``+``
solution is the one built from the root ``u`` in ``[1, (p^alpha - 1)/2]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from sympy import nextprime

from .bicayley import BiCayleyGraph, BiCayleySpec, delta_map, right_translation, sigma_map
from .errors import (
    ConditionFailed,
    InternalMismatch,
    InvalidParams,
    MetabicayError,
    NotAnAutomorphism,
    Unsolvable,
    WitnessInvalid,
)
from .metacyclic import GroupAut, GroupElem, GroupParams, aut_from_images, canonical_theta
from .residue import Residue, element_of_order, inverse, sqrt_unit
from .symmetry.perm import Permutation

SIGNS = ("+", "-")


@dataclass(frozen=True)
class HavtParams:
    G: GroupParams
    m: int
    k: int
    l: int
    sign: str = "+"

    def __post_init__(self):
        G, p = self.G, self.G.p
        if not 1 <= self.m < p ** (G.alpha - G.gamma) or self.m % p == 0:
            raise InvalidParams(f"m={self.m} must be a unit in Z_{p}^{G.alpha - G.gamma}")
        if self.k < 2 or (p - 1) % self.k:
            raise InvalidParams(f"k={self.k} must satisfy k >= 2 and k | p-1 = {p - 1}")
        if not 0 <= self.l < self.k:
            raise InvalidParams(f"l={self.l} must lie in [0, k)")
        if self.sign not in SIGNS:
            raise InvalidParams(f"sign must be '+' or '-', got {self.sign!r}")


def eq3_solvable(k: int, l: int, p: int) -> bool:
    """Whether ``k / gcd(k, l)`` divides ``(p-1)/2``."""
    return ((p - 1) // 2) % (k // gcd(k, l)) == 0


def _r_to_m(G: GroupParams, m: int) -> Residue:
    return Residue(pow(G.r, m, G.pa), G.a_modulus)


def eq3_root(G: GroupParams, m: int, k: int, l: int) -> Residue | None:
    """The square root ``u`` of ``e^l r^m`` with ``1 <= u <= (p^alpha-1)/2``."""
    e = element_of_order(k, G.a_modulus)
    roots = sqrt_unit(e**l * _r_to_m(G, m))
    return roots[0] if roots else None


def solve_eq3(G: GroupParams, m: int, k: int, l: int) -> tuple[Residue, ...]:
    """``(n_plus, n_minus)``, or ``()`` when the equation has no solution."""
    HavtParams(G, m, k, l)
    u = eq3_root(G, m, k, l)
    if u is None:
        return ()
    e = element_of_order(k, G.a_modulus)
    rm = _r_to_m(G, m)
    c = inverse(1 - e)
    return (c * (rm + u), c * (rm - u))


def build_T(k: int, e: Residue) -> tuple[Residue, ...]:
    """``T`` in index order, by the closed form and by partial sums of powers
    of ``e``; the two must agree."""
    c = inverse(e - 1)
    closed = tuple(c * (e**i - 1) for i in range(k))
    partial, acc = [], e * 0
    for i in range(k):
        partial.append(acc)
        acc = acc + e**i
    if tuple(partial) != closed:
        raise InternalMismatch("partial sums of powers of e disagree with (e-1)^-1 (e^i - 1)")
    return closed


def build_Tprime(T: tuple[Residue, ...], m: int, n: Residue, e: Residue, G: GroupParams) -> tuple[Residue, ...]:
    """``T'`` in index order, by the direct formula, cross-checked against the
    affine image ``T * (r^m + n(e-1)) + n``."""
    rm = _r_to_m(G, m)
    direct = tuple(t * rm + e**i * n for i, t in enumerate(T))
    scale = rm + n * (e - 1)
    affine = tuple(t * scale + n for t in T)
    if direct != affine:
        raise InternalMismatch("direct and affine formulas for T' disagree")
    return direct


def affine_symmetries(k: int, e: Residue) -> list[tuple[Residue, Residue]]:
    """The pairs ``(x, y)`` with ``T x + y = T``: exactly ``x = e^j`` and
    ``y = (e-1)^-1 (e^j - 1)`` for ``j`` in ``Z_k``."""
    c = inverse(e - 1)
    return [(e**j, c * (e**j - 1)) for j in range(k)]


@dataclass(frozen=True)
class HavtConstruction:
    params: HavtParams
    e: Residue
    n: Residue
    u: Residue
    T: tuple[Residue, ...]
    Tprime: tuple[Residue, ...]
    U: frozenset[GroupElem]
    V: frozenset[GroupElem]
    graph: BiCayleyGraph

    @property
    def G(self) -> GroupParams:
        return self.params.G

    @property
    def S(self) -> frozenset[GroupElem]:
        return self.U | self.V

    @property
    def valency(self) -> int:
        return 2 * self.params.k


def construct_havt(params: HavtParams) -> HavtConstruction:
    G, m, k, l = params.G, params.m, params.k, params.l
    if not eq3_solvable(k, l, G.p):
        raise Unsolvable(f"k/gcd(k,l) = {k // gcd(k, l)} does not divide (p-1)/2 = {(G.p - 1) // 2}")
    sols = solve_eq3(G, m, k, l)
    if not sols:
        raise InternalMismatch("solvability criterion holds but no square root was found")
    n = sols[SIGNS.index(params.sign)]
    u = eq3_root(G, m, k, l)
    e = element_of_order(k, G.a_modulus)
    rm = _r_to_m(G, m)
    if e**l * rm != (rm - n * (1 - e)) ** 2:
        raise InternalMismatch(f"n={n.value} does not satisfy the quadratic")
    T = build_T(k, e)
    Tp = build_Tprime(T, m, n, e, G)
    U = frozenset(G.a ** t.value for t in T)
    V = frozenset(G.b**m * G.a ** t.value for t in Tp)
    if len(U) != k or len(V) != k or U & V:
        raise InternalMismatch("U and V must be disjoint k-sets")
    graph = BiCayleyGraph(BiCayleySpec(G, S=U | V))
    if not graph.connected:
        raise InternalMismatch("constructed graph is disconnected")
    return HavtConstruction(params, e, n, u, T, Tp, U, V, graph)


@dataclass(frozen=True)
class HavtWitnesses:
    """The part-preserving witness ``sigma_{tau, a}`` and the part-swapping
    witness ``delta_{lam, b^m a^n, 1}`` with their ingredients."""

    sigma: Permutation
    delta: Permutation
    tau: GroupAut
    lam: GroupAut
    mu: Residue
    nu: Residue
    x: GroupElem

    def __iter__(self) -> Iterator[Permutation]:
        return iter((self.sigma, self.delta))


def lambda_parameters(c: HavtConstruction) -> tuple[Residue, Residue]:
    """``mu = -r^m - n(e-1)`` and ``nu = -(e-1)^-1 (mu^2 + mu)``."""
    e, n = c.e, c.n
    mu = -_r_to_m(c.G, c.params.m) - n * (e - 1)
    nu = -inverse(e - 1) * (mu * mu + mu)
    return mu, nu


def havt_witnesses(c: HavtConstruction) -> HavtWitnesses:
    G, m = c.G, c.params.m
    tau = canonical_theta(c.params.k, G)
    mu, nu = lambda_parameters(c)
    m_inv = pow(m, -1, G.pb)
    try:
        lam = aut_from_images(G.a**mu.value, (G.b**m * G.a ** (nu - mu * c.n).value) ** m_inv, G)
    except MetabicayError as exc:
        raise WitnessInvalid(f"lambda is not an automorphism of G: {exc}") from exc
    x = G.b**m * G.a**c.n.value
    try:
        sigma = sigma_map(tau, G.a, c.graph)
        delta = delta_map(lam, x, G.identity, c.graph)
    except (ConditionFailed, NotAnAutomorphism) as exc:
        raise WitnessInvalid(str(exc)) from exc
    return HavtWitnesses(sigma, delta, tau, lam, mu, nu, x)


def _orbits(gens: list[Permutation], domain: list, act) -> list[list]:
    index = {d: i for i, d in enumerate(domain)}
    seen = [False] * len(domain)
    out = []
    for s, d in enumerate(domain):
        if seen[s]:
            continue
        seen[s] = True
        orb, frontier = [d], [d]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = act(y, g)
                    zi = index[z]
                    if not seen[zi]:
                        seen[zi] = True
                        orb.append(z)
                        nxt.append(z)
            frontier = nxt
        out.append(orb)
    return out


@dataclass(frozen=True)
class WitnessCertificate:
    """What the witnesses prove without computing the full automorphism group."""

    sigma_order: int
    sigma_orbits_on_spokes: int
    delta_swaps_parts: bool
    reverses_cross_arc: bool
    vertex_orbits: int
    edge_orbits: int

    @property
    def ok(self) -> bool:
        return (self.delta_swaps_parts and self.reverses_cross_arc
                and self.vertex_orbits == 1 and self.edge_orbits == 1)


def certify_with_witnesses(c: HavtConstruction, w: HavtWitnesses | None = None) -> WitnessCertificate:
    """Vertex- and edge-transitivity of the group generated by the
    translations and both witnesses.

    The sigma witness fixes ``1_0`` and permutes the spokes ``S_1`` in two
    orbits (``U_1`` and ``V_1``); the delta witness sends the arc
    ``(1_0, 1_1)`` to ``(x_1, 1_0)``, the reverse of an arc into ``V_1``.
    """
    w = w or havt_witnesses(c)
    graph, G = c.graph, c.G
    one0, one1 = graph.index(G.identity, 0), graph.index(G.identity, 1)
    x1 = graph.index(w.x, 1)
    N = G.order
    spokes = [graph.index(s, 1) for s in c.S]
    sigma_orbits = _orbits([w.sigma], spokes, lambda v, g: g[v])
    swaps = all((w.delta[v] >= N) == (v < N) for v in range(graph.n))
    reverses = (w.delta[one0], w.delta[one1]) == (x1, one0) and graph.has_edge(one0, x1)
    gens = [right_translation(G.a, graph), right_translation(G.b, graph), w.sigma, w.delta]
    v_orbits = _orbits(gens, list(range(graph.n)), lambda v, g: g[v])
    e_orbits = _orbits(gens, graph.edges(), lambda e, g: tuple(sorted((g[e[0]], g[e[1]]))))
    return WitnessCertificate(w.sigma.order(), len(sigma_orbits), swaps, reverses,
                              len(v_orbits), len(e_orbits))


def constructible_params(max_vertices: int, primes: tuple[int, ...] | None = None) -> Iterator[HavtParams]:
    """Every parameter tuple (both signs) whose graph has at most
    ``max_vertices`` vertices, in a fixed order."""
    p = 3
    while 2 * p**3 <= max_vertices:
        if primes is None or p in primes:
            yield from _params_for_prime(p, max_vertices)
        p = int(nextprime(p))


def _params_for_prime(p: int, max_vertices: int) -> Iterator[HavtParams]:
    total = 3
    while 2 * p**total <= max_vertices:
        for alpha in range(2, total):
            beta = total - alpha
            for gamma in range(1, alpha):
                if alpha > beta + gamma:
                    continue
                G = GroupParams(p, alpha, beta, gamma)
                for k in range(2, p):
                    if (p - 1) % k:
                        continue
                    for m in range(1, p ** (alpha - gamma)):
                        if m % p == 0:
                            continue
                        for l in range(k):
                            if eq3_solvable(k, l, p):
                                for sign in SIGNS:
                                    yield HavtParams(G, m, k, l, sign)
        total += 1
