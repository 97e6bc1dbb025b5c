"""One test per acceptance criterion.  Each prints a single PASS/FAIL line
(collected again in the terminal summary) before asserting."""

from __future__ import annotations

import time
from itertools import product

import pynauty
import pytest
from conftest import ACCEPTANCE_LINES
from oracles import (
    PermModel,
    brute_eq3,
    brute_group_automorphisms,
    brute_unit_order,
    enumerate_automorphisms_bt,
    partial_sums,
)

from metabicay.bicayley import normalizer_decomposition, translation_group
from metabicay.havt import (
    HavtParams,
    affine_symmetries,
    build_T,
    certify_with_witnesses,
    construct_havt,
    constructible_params,
    eq3_solvable,
    havt_witnesses,
    solve_eq3,
)
from metabicay.metacyclic import (
    GroupParams,
    aut_order_formula,
    enumerate_automorphisms,
    power,
)
from metabicay.residue import PrimePowerModulus, element_of_order
from metabicay.symmetry.analysis import (
    classify_symmetry,
    is_normal_subgroup,
    normalizer,
    survey_small_connection_sets,
    sylow_condition_holds,
)
from metabicay.symmetry.permgroup import PermGroup
from metabicay.symmetry.search import automorphism_group


def report(number: int, title: str, ok: bool, detail: str, started: float) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} ({detail}; {time.perf_counter() - started:.1f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def nauty_order(graph) -> int:
    g = pynauty.Graph(graph.n, adjacency_dict={v: list(graph.neighbors(v)) for v in range(graph.n)})
    _, mantissa, exponent, _, _ = pynauty.autgrp(g)
    return round(mantissa * 10**exponent)


def preserves_edges(graph, perm) -> bool:
    edges = set(graph.edges())
    return all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in edges)


G27 = GroupParams(3, 2, 1, 1)
G125 = GroupParams(5, 2, 1, 1)


def test_criterion_01_smallest_instance():
    t0 = time.perf_counter()
    c = construct_havt(HavtParams(G27, 1, 2, 0, "+"))
    g = c.graph
    brute = enumerate_automorphisms_bt(g.adjacency)
    A = automorphism_group(g)
    r = classify_symmetry(g, A)
    ok = (g.n == 54 and g.degrees() == {4} and g.is_connected() and len(brute) == 108
          and A.order() == 108 and all(x in A for x in brute) and r.label == "half-arc-transitive"
          and r.stabilizer_order == 2 and r.stabilizer_is_cyclic)
    report(1, "smallest instance", ok,
           f"n={g.n}, |Aut| backtracking={len(brute)}, engine={A.order()}, {r.label}, |A_v|={r.stabilizer_order}", t0)


def test_criterion_02_normalizer_decomposition():
    t0 = time.perf_counter()
    c = construct_havt(HavtParams(G27, 1, 2, 0, "+"))
    D = normalizer_decomposition(c.graph)
    A = PermGroup(enumerate_automorphisms_bt(c.graph.adjacency), c.graph.n)
    N = normalizer(translation_group(c.graph), A)
    Gh = translation_group(c.graph)
    brute_N = {a for a in A.elements() if all(h.conjugate(a) in Gh for h in Gh.generators)}
    ok = D.order() == 108 and D == N and len(brute_N) == 108 and all(a in D for a in brute_N)
    report(2, "normalizer decomposition", ok, f"|decomposition|={D.order()}, |N_A(G)|={len(brute_N)}", t0)


def test_criterion_03_normality_under_sylow_condition():
    t0 = time.perf_counter()
    checked = skipped = 0
    ok = True
    for P in constructible_params(250):
        c = construct_havt(P)
        A = automorphism_group(c.graph)
        if not sylow_condition_holds(c.graph, A):
            skipped += 1
            continue
        checked += 1
        ok &= is_normal_subgroup(translation_group(c.graph), A)
    ok &= checked > 0
    report(3, "translations normal when Sylow", ok, f"{checked} instances, {skipped} without the Sylow condition", t0)


@pytest.mark.parametrize("params, count", [((3, 2, 1, 1), 54), ((3, 2, 2, 1), 486), ((3, 3, 1, 2), 162)])
def test_criterion_04_group_automorphism_count(params, count):
    t0 = time.perf_counter()
    G = GroupParams(*params)
    got = len(enumerate_automorphisms(G))
    brute = brute_group_automorphisms(PermModel(*params))
    ok = got == aut_order_formula(G) == brute == count
    report(4, f"|Aut(G)| for {params}", ok, f"enumerated={got}, formula={aut_order_formula(G)}, brute={brute}", t0)


def test_criterion_05_closed_form_powers():
    t0 = time.perf_counter()
    bad = 0
    for params in ((3, 2, 1, 1), (3, 2, 2, 1)):
        G = GroupParams(*params)
        model = PermModel(*params)
        for x in G.elements():
            xp = model.word(x.j, x.i)
            acc = model.identity()
            for k in range(1, G.order + 1):
                acc = model.mul(acc, xp)
                y = power(x, k)
                bad += (y.j, y.i) != model.normal_form(acc)
    report(5, "closed-form powers", bad == 0, f"{bad} mismatches", t0)


def test_criterion_06_quadratic_solver():
    t0 = time.perf_counter()
    bad = cases = 0
    for p in (3, 5, 7):
        G = GroupParams(p, 2, 1, 1)
        for k in range(2, p):
            if (p - 1) % k:
                continue
            e = element_of_order(k, G.a_modulus).value
            for m, l in product(range(1, p), range(k)):
                cases += 1
                brute = brute_eq3(p, 2, 1, e, m, l)
                got = {n.value for n in solve_eq3(G, m, k, l)}
                bad += got != brute or bool(brute) != eq3_solvable(k, l, p)
    report(6, "quadratic solver vs exhaustive roots", bad == 0, f"{cases} cases, {bad} mismatches", t0)


def test_criterion_07_exponent_set_identities():
    t0 = time.perf_counter()
    bad = cases = 0
    for p, alpha in product((3, 5, 7, 11, 13), (1, 2, 3)):
        n = p**alpha
        mod = PrimePowerModulus(p, alpha)
        for k in range(2, p):
            if (p - 1) % k:
                continue
            cases += 1
            e = element_of_order(k, mod)
            ev = e.value
            bad += brute_unit_order(ev, n) != k
            bad += any((pow(ev, i, n) - 1) % p == 0 for i in range(1, k))
            bad += sum(pow(ev, i, n) for i in range(k)) % n != 0
            T = [t.value for t in build_T(k, e)]
            bad += T != partial_sums(ev, k, n)
            inv = pow(ev - 1, -1, n)
            bad += sum(T) % n != -k * inv % n or sum(T) % p == 0
            if n <= 343:
                Tset = set(T)
                brute = {(x, y) for x, y in product(range(n), repeat=2)
                         if {(t * x + y) % n for t in Tset} == Tset}
                bad += brute != {(pow(ev, j, n), (pow(ev, j, n) - 1) * inv % n) for j in range(k)}
                bad += brute != {(x.value, y.value) for x, y in affine_symmetries(k, e)}
                bad += {x for x, y in brute if y == 0} != {1}
    report(7, "exponent-set identities", bad == 0, f"{cases} (p^alpha, k) cases, {bad} failures", t0)


def test_criterion_08_no_locally_transitive_small_valency():
    t0 = time.perf_counter()
    rep = survey_small_connection_sets(G125, 3)
    ok = rep.generating_sets > 0 and not rep.hits
    report(8, "survey up to |S|=3 over G_{2,1,1}(5)", ok,
            f"{len(rep.entries)} classes covering {rep.generating_sets} sets, {len(rep.hits)} hits", t0)


@pytest.mark.slow
def test_criterion_08_long_tier():
    t0 = time.perf_counter()
    rep = survey_small_connection_sets(G125, 4)
    report(8, "survey up to |S|=4 over G_{2,1,1}(5)", not rep.hits,
           f"{len(rep.entries)} classes, {len(rep.hits)} hits", t0)


def test_criterion_09_witness_fast_path():
    t0 = time.perf_counter()
    ok, count = True, 0
    for P in constructible_params(2 * 5**4):
        c = construct_havt(P)
        w = havt_witnesses(c)
        cert = certify_with_witnesses(c, w)
        ok &= preserves_edges(c.graph, w.sigma) and preserves_edges(c.graph, w.delta)
        ok &= cert.ok and cert.sigma_orbits_on_spokes == 2
        count += 1
    report(9, "witness certificates", ok and count > 0, f"{count} instances", t0)


@pytest.mark.parametrize("sign", ["+", "-"])
def test_criterion_10_p5_k4(sign):
    t0 = time.perf_counter()
    c = construct_havt(HavtParams(G125, 1, 4, 0, sign))
    g = c.graph
    A = automorphism_group(g)
    r = classify_symmetry(g, A)
    nauty = nauty_order(g)
    ok = (g.n == 250 and g.degrees() == {8} and A.order() == nauty == 1000
          and r.label == "half-arc-transitive" and r.stabilizer_order == 4 and r.stabilizer_is_cyclic)
    report(10, f"p=5, k=4 instance ({sign})", ok,
           f"|Aut| engine={A.order()}, nauty={nauty}, {r.label}, |A_v|={r.stabilizer_order} cyclic={r.stabilizer_is_cyclic}", t0)
