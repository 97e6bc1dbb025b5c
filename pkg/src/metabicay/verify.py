"""Self-check suites run by ``metabicay verify``.

Each suite compares a fast routine against a slow, direct computation on
exhaustive small inputs.  ``small=True`` trims the ranges so the full run
takes seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable

from .bicayley import (
    BiCayleySpec,
    build_bicayley,
    compute_F,
    normalizer_decomposition,
    relabel,
    sigma_map,
    translation_group,
)
from .graph import Graph
from .graphio import FORMATS, dumps, loads
from .havt import (
    affine_symmetries,
    build_T,
    certify_with_witnesses,
    constructible_params,
    construct_havt,
    eq3_solvable,
    solve_eq3,
)
from .metacyclic import (
    GroupParams,
    aut_order_formula,
    element_order,
    enumerate_automorphisms,
    power,
)
from .residue import PrimePowerModulus, Residue, element_of_order, inverse, sqrt_unit, unit_order
from .symmetry.analysis import (
    classify_symmetry,
    is_normal_subgroup,
    normalizer,
    sylow_condition_holds,
)
from .symmetry.search import automorphism_group


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.suite}: {self.name}" + (f" ({self.detail})" if self.detail else "")


def _moduli(small: bool):
    primes = (3, 5, 7) if small else (3, 5, 7, 11, 13)
    for p in primes:
        for alpha in range(1, 3 if small else 4):
            yield PrimePowerModulus(p, alpha)


def suite_residue(small: bool) -> list[Check]:
    out = []
    bad_sqrt = bad_order = 0
    for mod in _moduli(small):
        n = mod.value
        squares: dict[int, set[int]] = {}
        for x in range(n):
            if x % mod.p:
                squares.setdefault(x * x % n, set()).add(x)
        for v in range(n):
            if v % mod.p == 0:
                continue
            got = {r.value for r in sqrt_unit(Residue(v, mod))}
            bad_sqrt += got != squares.get(v, set())
            k = 1
            while pow(v, k, n) != 1:
                k += 1
            bad_order += unit_order(Residue(v, mod)) != k
    out.append(Check("residue", "square roots match exhaustive search", bad_sqrt == 0, f"{bad_sqrt} mismatches"))
    out.append(Check("residue", "unit orders match repeated multiplication", bad_order == 0))
    ok = all(unit_order(element_of_order(k, m)) == k
             for m in _moduli(small) for k in range(1, m.unit_group_order + 1) if m.unit_group_order % k == 0)
    out.append(Check("residue", "element_of_order has the requested order", ok))
    return out


def suite_metacyclic(small: bool) -> list[Check]:
    out = []
    groups = [GroupParams(3, 2, 1, 1), GroupParams(3, 2, 2, 1)]
    for G in groups:
        ok = True
        for x in G.elements():
            acc = G.identity
            for k in range(1, G.order + 1):
                acc = acc * x
                if power(x, k) != acc:
                    ok = False
        out.append(Check("metacyclic", f"closed-form powers in {G}", ok))
    cases = [(3, 2, 1, 1), (3, 2, 2, 1)] + ([] if small else [(3, 3, 1, 2)])
    for params in cases:
        G = GroupParams(*params)
        got, want = len(enumerate_automorphisms(G)), aut_order_formula(G)
        out.append(Check("metacyclic", f"|Aut({G})| matches the order formula", got == want, f"{got} vs {want}"))
    G = groups[0]
    ok = all(element_order(x) == next(k for k in range(1, G.order + 1) if (x**k).is_identity) for x in G.elements())
    out.append(Check("metacyclic", "element orders by repeated multiplication", ok))
    return out


def _small_instances(small: bool):
    return [construct_havt(P) for P in constructible_params(54 if small else 250)]


def suite_bicayley(small: bool) -> list[Check]:
    out = []
    G = GroupParams(3, 2, 1, 1)
    a, b, one = G.a, G.b, G.identity
    auts = enumerate_automorphisms(G)
    specs = [BiCayleySpec(G, S=[one, a, b * a, b * a**3]), BiCayleySpec(G, S=[one]),
             BiCayleySpec(G, R=[a, a**-1], L=[b, b**-1], S=[one, b * a])]
    for spec in specs:
        graph = build_bicayley(spec)
        Gh = translation_group(graph)
        semireg = Gh.order() == G.order and sorted(map(len, Gh.orbits())) == [G.order, G.order]
        out.append(Check("bicayley", f"translations are semiregular with two orbits (|S|={len(spec.S)})", semireg))
        ok = all(image.adjacency == _permute(graph, iso) for image, iso in (relabel(graph, t) for t in auts[:20]))
        out.append(Check("bicayley", "h_i -> (h^theta)_i is an isomorphism", ok))
        F = compute_F(graph, auts)
        law = all(sigma_map(t1 * t2, g2 * t2(g1), graph) == s1 * s2
                  for (t1, g1), s1 in zip(F.pairs, F.maps) for (t2, g2), s2 in zip(F.pairs[:8], F.maps[:8]))
        out.append(Check("bicayley", "sigma maps compose by the group law", law))
        out.append(Check("bicayley", "F fixes 1_0", all(s[0] == 0 for s in F.maps)))
    for c in _small_instances(small):
        A = automorphism_group(c.graph)
        N = normalizer(translation_group(c.graph), A)
        out.append(Check("bicayley", f"decomposition equals brute-force normalizer for {c.params}",
                         normalizer_decomposition(c.graph, enumerate_automorphisms(c.G)) == N))
    return out


def _permute(graph: Graph, perm) -> tuple:
    adj = [None] * graph.n
    for v, nbrs in enumerate(graph.adjacency):
        adj[perm[v]] = tuple(sorted(perm[w] for w in nbrs))
    return tuple(adj)


def suite_havt(small: bool) -> list[Check]:
    out = []
    bad = 0
    for p in (3, 5, 7):
        G = GroupParams(p, 2, 1, 1)
        for k in range(2, p):
            if (p - 1) % k:
                continue
            for m in range(1, p):
                for l in range(k):
                    e = element_of_order(k, G.a_modulus)
                    rm = pow(G.r, m, G.pa)
                    brute = {x for x in range(G.pa)
                             if pow(e.value, l, G.pa) * rm % G.pa == (rm - x * (1 - e.value)) ** 2 % G.pa}
                    got = {n.value for n in solve_eq3(G, m, k, l)}
                    bad += got != brute or bool(brute) != eq3_solvable(k, l, p)
    out.append(Check("havt", "quadratic solutions match exhaustive search", bad == 0, f"{bad} mismatches"))
    bad = 0
    for mod in _moduli(small):
        for k in range(2, mod.p):
            if (mod.p - 1) % k:
                continue
            e = element_of_order(k, mod)
            T = build_T(k, e)
            Tset = {t.value for t in T}
            bad += not all((e**i - 1).is_unit for i in range(1, k))
            bad += sum((e**i for i in range(k)), Residue(0, mod)).value != 0
            total = sum(T, Residue(0, mod))
            bad += total != -inverse(e - 1) * k or not total.is_unit
            if mod.value <= (49 if small else 343):
                brute = {(x, y) for x, y in product(range(mod.value), repeat=2)
                         if {(t * x + y) % mod.value for t in Tset} == Tset}
                bad += brute != {(x.value, y.value) for x, y in affine_symmetries(k, e)}
                bad += {x for x, y in brute if y == 0} != {1}
    out.append(Check("havt", "exponent-set identities and affine stabilizers", bad == 0, f"{bad} mismatches"))
    certs = [certify_with_witnesses(construct_havt(P)) for P in constructible_params(250 if small else 1250)]
    out.append(Check("havt", "witnesses certify vertex and edge transitivity",
                     all(c.ok for c in certs), f"{len(certs)} instances"))
    for c in _small_instances(small):
        r = classify_symmetry(c.graph)
        ok = (r.label == "half-arc-transitive" and r.stabilizer_order == c.params.k
              and r.stabilizer_is_cyclic and r.aut_order == 2 * c.params.k * c.G.order)
        out.append(Check("havt", f"{c.params} is half-arc-transitive with cyclic stabilizer", ok))
    return out


def _brute_aut_count(graph: Graph) -> int:
    edges = set(graph.edges())
    return sum(all(tuple(sorted((p[u], p[v]))) in edges for u, v in edges) for p in permutations(range(graph.n)))


def suite_symmetry(small: bool) -> list[Check]:
    out = []
    named = {
        "6-cycle": (Graph(6, [(i, (i + 1) % 6) for i in range(6)]), 12),
        "K_{3,3}": (Graph(6, [(i, j) for i in range(3) for j in range(3, 6)]), 72),
        "Petersen": (Graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                           + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]), 120),
    }
    for name, (graph, order) in named.items():
        got = automorphism_group(graph).order()
        out.append(Check("symmetry", f"|Aut({name})| = {order}", got == order, str(got)))
    bad = 0
    n = 6 if small else 7
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(0, 1 << len(pairs), 97 if small else 4093):
        graph = Graph(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
        bad += automorphism_group(graph).order() != _brute_aut_count(graph)
    out.append(Check("symmetry", f"group orders match brute-force counts on {n}-vertex graphs", bad == 0))
    for c in _small_instances(small):
        A = automorphism_group(c.graph)
        ok = sylow_condition_holds(c.graph, A) and is_normal_subgroup(translation_group(c.graph), A)
        out.append(Check("symmetry", f"translations are normal in Aut for {c.params}", ok))
    return out


def suite_io(small: bool) -> list[Check]:
    graphs = [Graph(0), Graph(1), Graph(5, [(0, 1), (3, 4)])] + [c.graph for c in _small_instances(small)]
    graphs.append(Graph(70, [(i, i + 1) for i in range(69)]))
    ok = all(loads(dumps(g, fmt), fmt).adjacency == g.adjacency for g in graphs for fmt in FORMATS)
    ok6 = all(dumps(loads(dumps(g, "graph6"), "graph6"), "graph6") == dumps(g, "graph6") for g in graphs)
    return [Check("io", "every format round-trips the adjacency", ok),
            Check("io", "graph6 round-trips bit-exactly", ok6)]


SUITES: dict[str, Callable[[bool], list[Check]]] = {
    "residue": suite_residue,
    "metacyclic": suite_metacyclic,
    "bicayley": suite_bicayley,
    "havt": suite_havt,
    "symmetry": suite_symmetry,
    "io": suite_io,
}


def run(suite: str = "all", small: bool = True) -> list[Check]:
    names = list(SUITES) if suite == "all" else [suite]
    return [c for name in names for c in SUITES[name](small)]
