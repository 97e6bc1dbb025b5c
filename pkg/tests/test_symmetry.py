from __future__ import annotations

import random
from itertools import combinations
from math import factorial

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher
from oracles import brute_aut_count_small, enumerate_automorphisms_bt, orbit_count

from metabicay.bicayley import BiCayleySpec, build_bicayley, translation_group
from metabicay.errors import InvalidParams, NotASubgroup, TooLarge
from metabicay.graph import Graph
from metabicay.havt import HavtParams, construct_havt
from metabicay.metacyclic import GroupParams, generates
from metabicay.symmetry.analysis import (
    LABELS,
    classify_symmetry,
    connection_set_classes,
    is_normal_subgroup,
    locally_transitive,
    normalizer,
    orbits_on,
    survey_small_connection_sets,
    sylow_condition_holds,
    transitivity_label,
)
from metabicay.symmetry.permgroup import PermGroup
from metabicay.symmetry.search import automorphism_group, is_automorphism


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


PETERSEN = Graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                 + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])


def nx_count(graph: Graph) -> int:
    H = nx.Graph()
    H.add_nodes_from(range(graph.n))
    H.add_edges_from(graph.edges())
    return sum(1 for _ in GraphMatcher(H, H).isomorphisms_iter())


@pytest.fixture(scope="module")
def havt54():
    return construct_havt(HavtParams(GroupParams(3, 2, 1, 1), 1, 2, 0, "+"))


@pytest.mark.parametrize("graph, order", [
    (cycle(6), 12),
    (complete_bipartite(3, 3), 72),
    (PETERSEN, 120),
    (Graph(4), 24),
    (Graph(1), 1),
    (Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]), 2),
])
def test_named_orders(graph, order):
    assert automorphism_group(graph).order() == order


def test_empty_graph():
    assert automorphism_group(Graph(0)).order() == 1


def test_matches_factorial_oracle_on_all_5_vertex_graphs():
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    for mask in range(0, 1 << len(pairs), 3):
        g = Graph(5, [e for k, e in enumerate(pairs) if mask >> k & 1])
        assert automorphism_group(g).order() == brute_aut_count_small(g.adjacency)


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@settings(max_examples=40, deadline=None)
@given(st.integers(6, 16), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_matches_backtracking_oracle_up_to_16_vertices(n, p, seed):
    g = random_graph(n, p, seed)
    autos = enumerate_automorphisms_bt(g.adjacency)
    A = automorphism_group(g)
    assert A.order() == len(autos)
    assert all(a in A for a in autos[:50])


def test_matches_networkx_on_regular_graphs():
    for g in (PETERSEN, cycle(12), complete_bipartite(4, 4),
              Graph(12, [(i, (i + d) % 12) for i in range(12) for d in (1, 5)])):
        assert automorphism_group(g).order() == nx_count(g)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_order_invariant_under_relabelling(seed):
    g = random_graph(12, 0.4, seed)
    perm = list(range(12))
    random.Random(seed).shuffle(perm)
    h = Graph(12, [(perm[u], perm[v]) for u, v in g.edges()])
    assert automorphism_group(g).order() == automorphism_group(h).order()


def test_generators_are_automorphisms(havt54):
    A = automorphism_group(havt54.graph)
    assert all(is_automorphism(havt54.graph, g) for g in A.generators)
    assert A.order() == 108


def test_large_symmetric_graph():
    G = GroupParams(3, 2, 1, 1)
    matching = build_bicayley(BiCayleySpec(G, S=[G.identity]))
    A = automorphism_group(matching)
    assert A.order() == 2**27 * factorial(27)
    assert not sylow_condition_holds(matching, A)


def test_guard():
    with pytest.raises(TooLarge):
        automorphism_group(Graph(10), guard=5)


def test_colours_restrict():
    assert automorphism_group(cycle(6), colors=[0, 1, 0, 1, 0, 1]).order() == 6


# -- orbits and classification ------------------------------------------------

def test_identity_group_orbits():
    g = cycle(5)
    trivial = PermGroup([], 5)
    assert orbits_on(g, trivial, "vertices") == [[v] for v in range(5)]
    assert len(orbits_on(g, trivial, "arcs")) == 10


def test_arc_orbits(havt54):
    A = automorphism_group(havt54.graph)
    arcs = orbits_on(havt54.graph, A, "arcs")
    assert sorted(map(len, arcs)) == [108, 108]
    assert len(orbits_on(complete_bipartite(3, 3), automorphism_group(complete_bipartite(3, 3)), "arcs")) == 1
    assert len(arcs) == orbit_count(A.generators, havt54.graph.arcs(), lambda a, g: (g[a[0]], g[a[1]]))


@pytest.mark.parametrize("graph, label", [
    (complete_bipartite(3, 3), "arc-transitive"),
    (Graph(3, [(0, 1), (1, 2)]), "semisymmetric-per-paper"),
    (complete_bipartite(1, 3), "semisymmetric-per-paper"),
    (Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]), "vertex-transitive-only"),
    (Graph(4, [(0, 1), (1, 2), (2, 3)]), "edge-intransitive"),
    (PETERSEN, "arc-transitive"),
])
def test_labels(graph, label):
    assert classify_symmetry(graph).label == label


def test_havt_report(havt54):
    r = classify_symmetry(havt54.graph)
    assert (r.vertex_transitive, r.edge_transitive, r.arc_transitive) == (True, True, False)
    assert r.label == "half-arc-transitive"
    assert (r.aut_order, r.stabilizer_order, r.stabilizer_is_cyclic) == (108, 2, True)


@given(st.booleans(), st.booleans(), st.booleans())
def test_label_is_a_function_of_flags(vt, et, at):
    label = transitivity_label(vt, et, at)
    assert label in LABELS
    if at:
        assert label == "arc-transitive"


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_flags_consistent(seed):
    r = classify_symmetry(random_graph(8, 0.5, seed))
    assert not r.arc_transitive or (r.vertex_transitive and r.edge_transitive)
    assert r.vertex_transitive == (r.vertex_orbits <= 1)
    assert r.edge_transitive == (r.edge_orbits <= 1)
    assert r.label == transitivity_label(r.vertex_transitive, r.edge_transitive, r.arc_transitive)


# -- normality ----------------------------------------------------------------

def test_normality_examples(havt54):
    A = automorphism_group(havt54.graph)
    Gh = translation_group(havt54.graph)
    assert is_normal_subgroup(Gh, A)
    assert is_normal_subgroup(PermGroup([], A.degree), A)
    assert sylow_condition_holds(havt54.graph, A)
    D = automorphism_group(cycle(6))
    assert not is_normal_subgroup(D.stabilizer(0), D)


def test_not_a_subgroup():
    D = automorphism_group(cycle(6))
    with pytest.raises(NotASubgroup):
        is_normal_subgroup(PermGroup([(1, 0, 2, 3, 4, 5)], 6), D)


def test_normalizer_brute_force():
    D = automorphism_group(cycle(6))
    S = D.stabilizer(0)
    N = normalizer(S, D)
    brute = [a for a in D.elements() if all(h.conjugate(a) in S for h in S.generators)]
    assert N.order() == len(brute) == 4
    rotations = PermGroup([(1, 2, 3, 4, 5, 0)], 6)
    assert normalizer(rotations, D) == D


# -- locally transitive survey -----------------------------------------------

def test_locally_transitive_examples(havt54):
    assert locally_transitive(complete_bipartite(2, 3))
    assert not locally_transitive(Graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)]))
    assert not locally_transitive(havt54.graph)


def test_survey_over_order_27_group_has_nothing_to_classify():
    rep = survey_small_connection_sets(GroupParams(3, 2, 1, 1), 2)
    assert rep.entries == [] and rep.hits == []


def test_survey_guards():
    with pytest.raises(InvalidParams):
        survey_small_connection_sets(GroupParams(3, 2, 1, 1), 3)
    with pytest.raises(TooLarge):
        survey_small_connection_sets(GroupParams(5, 2, 2, 1), 2)


def test_connection_set_classes_cover_all_generating_sets():
    G = GroupParams(5, 2, 1, 1)
    classes = connection_set_classes(G, 3)
    total = sum(1 for rest in combinations(range(1, G.order), 2)
                if generates([G.from_index(i) for i in (0, *rest)], G))
    assert sum(size for _, size in classes) == total
