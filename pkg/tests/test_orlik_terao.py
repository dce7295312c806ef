import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fkalg.fk_words import Monomial, Permutation
from fkalg.graph_core import EdgeOrder, Graph, GraphError, broken_circuits, iter_graphs, random_graph
from fkalg.noncrossing import NoncrossingTree
from fkalg.oracle import Echelon, enumerate_words, relation_span
from fkalg.orlik_terao import (
    CircuitDependence,
    HilbertMismatch,
    OTElement,
    abelianize,
    circuit_relation,
    hilbert_series,
    multiply,
    nbc_basis,
    nbc_counts,
    nbc_sets,
    reduce_monomial,
)
from fkalg.reduction import TreeElement

K3, K4 = Graph.complete(3), Graph.complete(4)


def el(g, *sets, coeffs=None):
    coeffs = coeffs or [1] * len(sets)
    return OTElement(g, {tuple(sorted((int(e[0]), int(e[1])) for e in s)): c for s, c in zip(sets, coeffs)})


def test_circuit_relation_triangle():
    rel = circuit_relation(CircuitDependence.from_cycle((1, 2, 3)))
    assert rel == {((1, 3), (2, 3)): 1, ((1, 2), (1, 3)): 1, ((1, 2), (2, 3)): -1}


def test_circuit_relation_four_cycle():
    dep = CircuitDependence.from_cycle((1, 2, 3, 4))
    assert dep.coeffs == {(1, 2): 1, (2, 3): 1, (3, 4): 1, (1, 4): -1}
    assert len(circuit_relation(dep)) == 4


def test_circuit_dependence_validation():
    with pytest.raises(ValueError):
        CircuitDependence.from_cycle((1, 2))
    with pytest.raises(ValueError):
        CircuitDependence((1, 2, 3), {(1, 2): 1, (2, 3): 1, (1, 3): 1})


def test_reduce_monomial_examples():
    assert reduce_monomial([(1, 3), (2, 3)], K3) == el(K3, ["12", "23"], ["12", "13"], coeffs=[1, -1])
    assert reduce_monomial([(1, 2), (2, 3), (1, 3)], K3).is_zero()
    assert reduce_monomial([(1, 2), (2, 3)], K3) == el(K3, ["12", "23"])
    assert reduce_monomial([(1, 2), (1, 2)], K3).is_zero()
    with pytest.raises(GraphError):
        reduce_monomial([(1, 3)], Graph.path(3))


def test_str_format():
    assert str(reduce_monomial([(1, 3), (2, 3)], K3)) == "-u12*u13 + u12*u23"


def test_multiply_examples():
    u13, u23, u12 = el(K3, ["13"]), el(K3, ["23"]), el(K3, ["12"])
    assert multiply(u13, u23, K3) == el(K3, ["12", "23"], ["12", "13"], coeffs=[1, -1])
    assert multiply(u12, u12, K3).is_zero()
    assert multiply(OTElement.one(K3), u13, K3) == u13


def test_nbc_basis_examples():
    assert list(nbc_basis(K3)) == [(), ((1, 2),), ((1, 3),), ((2, 3),), ((1, 2), (1, 3)), ((1, 2), (2, 3))]
    assert nbc_counts(Graph.path(5)) == [1, 4, 6, 4, 1]
    assert nbc_counts(Graph.cycle(4)) == [1, 4, 6, 3]


def _brute_nbc(g, order):
    bcs = broken_circuits(g, order)
    out = []
    for k in range(len(g.edges) + 1):
        for s in itertools.combinations(g.edges, k):
            if not any(b <= set(s) for b in bcs):
                out.append(s)
    return sorted(out, key=lambda s: (len(s), s))


@pytest.mark.parametrize("n", [3, 4])
def test_nbc_matches_broken_circuit_definition(n):
    for g in iter_graphs(n):
        assert nbc_sets(g) == _brute_nbc(g, EdgeOrder())


def test_nbc_with_custom_orders():
    rng = random.Random(2)
    for _ in range(20):
        g = random_graph(5, rng, p=0.7)
        edges = list(g.edges)
        rng.shuffle(edges)
        order = EdgeOrder(edges)
        assert nbc_sets(g, order) == _brute_nbc(g, order)
        assert nbc_counts(g, order) == nbc_counts(g)


def test_hilbert_series_examples():
    assert hilbert_series(K3).int_coeffs() == [1, 3, 2]
    assert hilbert_series(K4).int_coeffs() == [1, 6, 11, 6]
    assert hilbert_series(Graph.cycle(4)).int_coeffs() == [1, 4, 6, 3]
    assert issubclass(HilbertMismatch, AssertionError)


def test_abelianize_examples():
    t = NoncrossingTree(3, ((1, 2), (1, 3)))
    assert abelianize(TreeElement.of(t), K3) == el(K3, ["12", "13"])
    s = NoncrossingTree(3, ((1, 3), (2, 3)))
    assert abelianize(TreeElement.of(s), K3) == el(K3, ["12", "23"], ["12", "13"], coeffs=[1, -1])
    assert abelianize(Monomial.parse(3, [(1, 2), (2, 3), (1, 3)]), K3).is_zero()
    assert abelianize(Monomial.parse(3, [(2, 1)]), K3) == -el(K3, ["12"])


def test_json_round_trip_and_reduction():
    x = el(K4, ["12", "23"], ["14"], coeffs=[Fraction(1, 2), -2])
    assert OTElement.from_json(x.to_json(), K4) == x
    raw = {"n": 3, "ot_terms": [{"coeff": "1", "edges": [[1, 3], [2, 3]]}]}
    assert OTElement.from_json(raw, K3) == reduce_monomial([(1, 3), (2, 3)], K3)


def _random_element(g, rng):
    basis = nbc_sets(g)
    return OTElement(g, {s: Fraction(rng.randint(-3, 3), rng.choice([1, 2])) for s in rng.sample(basis, min(3, len(basis)))})


def test_ring_axioms():
    rng = random.Random(8)
    for g in (K4, Graph.cycle(5).with_edges([(1, 3)]), Graph.complete(5)):
        for _ in range(30):
            a, b, c = (_random_element(g, rng) for _ in range(3))
            assert multiply(a, b, g) == multiply(b, a, g)
            assert multiply(multiply(a, b, g), c, g) == multiply(a, multiply(b, c, g), g)
            assert multiply(a, b + c, g) == multiply(a, b, g) + multiply(a, c, g)
            assert multiply(OTElement.one(g), a, g) == a


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 6), st.integers(0, 2**20), st.integers(0, 2**20))
def test_random_elimination_order_agrees(n, gseed, rseed):
    rng = random.Random(gseed)
    g = random_graph(n, rng, p=0.8)
    k = rng.randint(0, len(g.edges))
    s = rng.sample(list(g.edges), k)
    assert reduce_monomial(s, g, rng=random.Random(rseed)) == reduce_monomial(s, g)


def _embed(x, g):
    total = OTElement(g)
    for s, c in x.terms.items():
        total = total + c * reduce_monomial(s, g)
    return total


def _rank(vectors):
    cols = {}
    ech = Echelon()
    for v in vectors:
        den = 1
        for c in v.terms.values():
            den = den * c.denominator
        ech.insert({cols.setdefault(k, len(cols)): int(c * den) for k, c in v.terms.items()})
    return ech.rank


def test_subgraph_embeds():
    # U_H -> U_G is an injective ring map for every H inside K_4
    subsets = [e for k in range(len(K4.edges) + 1) for e in itertools.combinations(K4.edges, k)]
    for es in subsets:
        h = Graph(4, es)
        for s in itertools.combinations(h.edges, min(3, len(h.edges))):
            assert _embed(reduce_monomial(s, h), K4) == reduce_monomial(s, K4)
        basis = nbc_sets(h)
        assert _rank([_embed(OTElement(h, {b: 1}), K4) for b in basis]) == len(basis)


def test_cycle_relation_vanishes():
    for cyc in [(1, 2, 3), (1, 2, 3, 4), (1, 3, 2, 4), (1, 2, 4, 5, 3)]:
        g = Graph.complete(max(cyc))
        total = OTElement(g)
        for s, c in circuit_relation(CircuitDependence.from_cycle(cyc)).items():
            total = total + c * reduce_monomial(s, g)
        assert total.is_zero()


def test_noncommutative_relations_vanish_after_abelianising():
    for n, sigma, d in [(3, Permutation.long_cycle(3), 2), (4, Permutation.long_cycle(4), 3), (4, Permutation.parse("(1 2 3)", 4), 2)]:
        ws = enumerate_words(n, sigma, d)
        g = Graph.complete(n)
        for row in relation_span(ws).rows:
            total = OTElement(g)
            for col, c in row.items():
                total = total + c * abelianize(Monomial(n, ws.words[col]), g)
            assert total.is_zero()


def test_different_graphs_rejected():
    with pytest.raises(GraphError):
        el(K3, ["12"]) + el(Graph.path(3), ["12"])
