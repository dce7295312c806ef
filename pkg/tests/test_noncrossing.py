import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fkalg.graph_core import Graph, GraphError, iter_graphs
from fkalg.noncrossing import (
    NoncrossingTree,
    clockwise_order,
    crosses,
    enumerate_G_reduced,
    enumerate_noncrossing_trees,
    is_G_reduced,
    is_noncrossing,
    signature,
    terminal_edges,
    trees_inside,
)


def tree(n, *edges):
    return NoncrossingTree(n, tuple((int(e[0]), int(e[1])) for e in edges))


def _is_spanning_tree(n, edges):
    parent = list(range(n + 1))

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return len(edges) == n - 1


def _brute_noncrossing_trees(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for es in itertools.combinations(pairs, n - 1):
        if _is_spanning_tree(n, es) and not any(crosses(e, f) for e, f in itertools.combinations(es, 2)):
            out.append(es)
    return out


def test_example_tree_is_noncrossing(example_tree):
    assert is_noncrossing(example_tree)
    assert not is_noncrossing(Graph(4, ((1, 3), (2, 4))))
    assert is_noncrossing(Graph(4, ((1, 2), (1, 3), (1, 4))))


def test_tree_validation():
    with pytest.raises(GraphError):
        tree(4, "13", "24", "12")
    with pytest.raises(GraphError):
        tree(4, "12", "23")
    with pytest.raises(GraphError):
        tree(3, "12", "23", "13")


@pytest.mark.parametrize("v,expected", [(6, [(3, 6), (1, 6), (6, 8)]), (1, [(1, 6), (1, 2)]), (3, [(3, 6), (3, 5)])])
def test_clockwise_orders(example_tree, v, expected):
    assert clockwise_order(example_tree, v) == expected


def test_terminal_edges(example_tree):
    assert set(terminal_edges(example_tree)) == {(1, 2), (3, 5), (6, 8)}
    assert terminal_edges(tree(3, "12", "23")) == [(2, 3)]
    assert terminal_edges(tree(3, "12", "13")) == [(1, 2)]


def test_signature_examples(example_tree):
    assert signature(example_tree) == (1, 1, 2, 3, 2, 1, 2, 1)
    assert signature(NoncrossingTree(6, tuple((i, i + 1) for i in range(1, 6)))) == (1,) * 6
    assert signature(tree(3, "13", "23")) == (1, 2, 1)


def test_is_G_reduced_examples():
    k3 = Graph.complete(3)
    assert not is_G_reduced(tree(3, "12", "13"), k3)
    assert is_G_reduced(tree(3, "13", "23"), k3)
    assert is_G_reduced(tree(3, "12", "23"), Graph.path(3))
    with pytest.raises(GraphError):
        is_G_reduced(tree(3, "13", "23"), Graph.path(3))


def test_enumeration_counts():
    # noncrossing trees on [n]: binom(3n-3, n-1) / (2n-1)
    for n in range(1, 9):
        expected = comb(3 * n - 3, n - 1) // (2 * n - 1)
        assert sum(1 for _ in enumerate_noncrossing_trees(n)) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_brute_force(n):
    got = [t.edges for t in enumerate_noncrossing_trees(n)]
    assert got == sorted(got)
    assert got == _brute_noncrossing_trees(n)


def test_enumeration_cap():
    with pytest.raises(ValueError):
        next(enumerate_noncrossing_trees(11))


def test_reduced_examples():
    assert [t.edges for t in enumerate_G_reduced(Graph.complete(3))] == [((1, 2), (2, 3)), ((1, 3), (2, 3))]
    assert sum(1 for _ in enumerate_G_reduced(Graph.complete(4))) == 5
    assert [t.edges for t in enumerate_G_reduced(Graph.path(4))] == [((1, 2), (2, 3), (3, 4))]


def test_kn_reduced_characterisation():
    # K_n-reduced exactly when no vertex has two edges going to larger vertices
    for n in range(2, 8):
        kn = Graph.complete(n)
        for t in enumerate_noncrossing_trees(n):
            left_heavy = any(sum(1 for a, b in t.edges if a == v) > 1 for v in range(1, n + 1))
            assert is_G_reduced(t, kn) == (not left_heavy)


@pytest.mark.parametrize("n", range(2, 6))
def test_trees_inside_filters_universe(n):
    universe = list(enumerate_noncrossing_trees(n))
    for g in iter_graphs(n):
        assert list(trees_inside(g)) == [t for t in universe if set(t.edges) <= g.edge_set]


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 10**6))))
def test_signature_properties(case):
    n, k = case
    trees = list(enumerate_noncrossing_trees(n))
    t = trees[k % len(trees)]
    s = signature(t)
    assert len(s) == n and s[0] == 1
    assert all(1 <= x <= n for x in s)
    # consecutive increments never exceed one
    assert all(b <= a + 1 for a, b in zip(s, s[1:]))
