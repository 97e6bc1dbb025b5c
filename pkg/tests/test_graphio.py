from __future__ import annotations

import random

import networkx as nx
from networkx.readwrite.graph6 import n_to_data
import pytest
from hypothesis import given, settings, strategies as st

from metabicay.errors import GraphFormatError
from metabicay.graph import Graph
from metabicay.graphio import (
    _decode_size,
    _encode_size,
    FORMATS,
    dumps,
    format_for,
    from_graph6,
    loads,
    read_graph,
    to_dot,
    to_edgelist,
    to_graph6,
    write_graph,
)
from metabicay.havt import HavtParams, construct_havt
from metabicay.metacyclic import GroupParams


def random_graph(n, seed, p=0.3):
    rng = random.Random(seed)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def as_nx(g: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(g.n))
    H.add_edges_from(g.edges())
    return H


@pytest.mark.parametrize("n", [0, 1, 2, 5, 62, 63, 100, 300])
def test_graph6_matches_networkx(n):
    g = random_graph(n, n)
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(as_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert from_graph6(theirs).adjacency == g.adjacency


@pytest.mark.parametrize("n", [0, 62, 63, 258047, 258048, 300000, 68719476735])
def test_graph6_size_field_matches_networkx(n):
    field = _encode_size(n)
    assert [ord(c) - 63 for c in field] == n_to_data(n)
    assert _decode_size(field.encode()) == (n, len(field))


def test_graph6_header_and_errors():
    assert from_graph6(">>graph6<<" + to_graph6(Graph(3, [(0, 1)]))).num_edges() == 1
    for bad in ("", "B", "C~~~~~", "A\x01"):
        with pytest.raises(GraphFormatError):
            from_graph6(bad)


def test_edgelist_format():
    g = Graph(4, [(2, 1), (0, 3)])
    text = to_edgelist(g)
    assert text.splitlines() == ["# vertices 4", "0 3", "1 2"]
    with pytest.raises(GraphFormatError):
        loads("0 1 2\n", "edgelist")
    with pytest.raises(GraphFormatError):
        loads("0 0\n", "edgelist")


def test_dot_labels():
    c = construct_havt(HavtParams(GroupParams(3, 2, 1, 1), 1, 2, 0))
    text = to_dot(c.graph)
    assert text.count(" -- ") == 108 and "b^0 a^0_0" in text


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 80), st.integers(0, 10**6), st.sampled_from(FORMATS))
def test_round_trip(n, seed, fmt):
    g = random_graph(n, seed)
    assert loads(dumps(g, fmt), fmt).adjacency == g.adjacency


def test_bit_exact_graph6():
    c = construct_havt(HavtParams(GroupParams(5, 2, 1, 1), 1, 4, 0))
    s = to_graph6(c.graph)
    assert to_graph6(from_graph6(s)) == s


def test_files(tmp_path):
    g = random_graph(20, 3)
    for suffix in (".g6", ".edges", ".dot"):
        path = tmp_path / f"x{suffix}"
        write_graph(g, path)
        assert read_graph(path).adjacency == g.adjacency
    assert format_for("a.txt", "graph6") == "graph6"
    with pytest.raises(GraphFormatError):
        format_for("a.unknown")
    with pytest.raises(GraphFormatError):
        read_graph(tmp_path / "missing.g6")
