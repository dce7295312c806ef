"""Invariant suites shared by the ``verify`` command and the acceptance tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .fk_words import Permutation
from .graph_core import (
    Graph,
    chromatic_polynomial,
    hilbert_from_chromatic,
    iter_graphs,
    random_graph,
)
from .noncrossing import (
    NoncrossingTree,
    crosses,
    enumerate_G_reduced,
    enumerate_noncrossing_trees,
    signature,
    trees_inside,
)
from .oracle import ab_component_dimension, component_dimension
from .orlik_terao import abelianize, nbc_counts
from .reduction import Rewriter, TreeElement, dimension, expand_Kn, leading_term, reduce

EXAMPLE_TREE = NoncrossingTree(8, ((1, 2), (1, 6), (3, 5), (3, 6), (4, 5), (6, 8), (7, 8)))
EXAMPLE_SIGNATURE = (1, 1, 2, 3, 2, 1, 2, 1)

SUITES = ("catalan", "confluence", "signature", "oracle", "abelian")


@dataclass
class Check:
    check: str
    expected: object
    got: object

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def to_json(self) -> dict:
        return {"check": self.check, "expected": self.expected, "got": self.got, "pass": self.passed}


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def catalan_checks(n: int, oracle_max: int = 6) -> list[Check]:
    out = [Check(f"catalan/reduced_trees/n={n}", catalan(n - 1), dimension(Graph.complete(n)))]
    if n <= oracle_max:
        got = component_dimension(Graph.complete(n), Permutation.long_cycle(n))
        out.append(Check(f"catalan/oracle/n={n}", catalan(n - 1), got))
    return out


def confluence_checks(n: int, seed: int, strategies: int = 20) -> list[Check]:
    """Every noncrossing tree inside every graph on [n]: random strategies vs lex-first.

    Graphs containing a given spanning tree are exactly its edge supersets,
    so pairs (T, G) are enumerated tree by tree.
    """
    rng = random.Random(seed)
    all_edges = list(itertools.combinations(range(1, n + 1), 2))
    pairs = agree = 0
    for t in enumerate_noncrossing_trees(n):
        rest = [e for e in all_edges if e not in t.edges]
        start = {t.edges: 1}
        for mask in range(1 << len(rest)):
            g = Graph(n, t.edges + tuple(e for k, e in enumerate(rest) if mask >> k & 1))
            rw = Rewriter(g)
            ref = rw.normal_form(start)
            ok = all(rw.normal_form(start, rng) == ref for _ in range(strategies))
            pairs += 1
            agree += ok
    return [Check(f"confluence/n={n}/strategies={strategies}", pairs, agree)]


def leading_term_checks(n: int) -> list[Check]:
    total = good = 0
    for t in enumerate_noncrossing_trees(n):
        lead, coeff = leading_term(expand_Kn(t))
        total += 1
        good += coeff == 1 and signature(lead) == signature(t)
    return [Check(f"leading_term/n={n}", total, good)]


def _graphs_for_signature(n: int, rng: random.Random, samples: int = 200):
    if n <= 5:
        return list(iter_graphs(n))
    return [random_graph(n, rng) for _ in range(samples)]


def _path_avoids(t: NoncrossingTree, j: int, k: int, avoid: int) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in range(1, t.n + 1)}
    for a, b in t.edges:
        if avoid not in (a, b):
            adj[a].append(b)
            adj[b].append(a)
    seen, stack = {j}, [j]
    while stack:
        v = stack.pop()
        if v == k:
            return True
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return False


def signature_bound_violations(t: NoncrossingTree) -> int:
    """Count failures of s_j >= s_i (and >= s_i + 1 when j is nearer k) under edges (i, k)."""
    s = (0,) + signature(t)
    bad = 0
    for i, k in t.edges:
        for j in range(i + 1, k):
            if s[j] < s[i]:
                bad += 1
            elif _path_avoids(t, j, k, i) and s[j] < s[i] + 1:
                bad += 1
    return bad


def _all_ones_ok(g: Graph, reduced: list[NoncrossingTree]) -> bool:
    ones = [t for t in reduced if set(signature(t)) == {1}]
    if len(ones) > 1:
        return False
    for t in ones:
        for i in range(2, g.n + 1):
            left = [a for a, b in t.edges if b == i]
            if len(left) != 1:
                return False
            prior = [e for e in t.edges if e[1] < i]
            feasible = [
                j for j in range(1, i)
                if g.has_edge(j, i) and not any(crosses((j, i), e) for e in prior)
            ]
            if left[0] != max(feasible):
                return False
    return True


def signature_checks(n: int, seed: int) -> list[Check]:
    rng = random.Random(seed)
    out = [Check("signature/example_tree", list(EXAMPLE_SIGNATURE), list(signature(EXAMPLE_TREE)))]
    graphs = _graphs_for_signature(n, rng)
    injective = ones_ok = 0
    for g in graphs:
        reduced = list(enumerate_G_reduced(g))
        sigs = {signature(t) for t in reduced}
        injective += len(sigs) == len(reduced)
        ones_ok += _all_ones_ok(g, reduced)
    out.append(Check(f"signature/injective/n={n}", len(graphs), injective))
    out.append(Check(f"signature/all_ones_unique/n={n}", len(graphs), ones_ok))
    violations = sum(signature_bound_violations(t) for t in enumerate_noncrossing_trees(n))
    out.append(Check(f"signature/monotone_bounds/n={n}", 0, violations))
    return out


def oracle_checks(n: int) -> list[Check]:
    sigma = Permutation.long_cycle(n)
    out = [Check(f"oracle/complete/n={n}", dimension(Graph.complete(n)),
                 component_dimension(Graph.complete(n), sigma))]
    graphs = list(iter_graphs(n, connected=True))
    agree = sum(component_dimension(g, sigma) == dimension(g) for g in graphs)
    out.append(Check(f"oracle/connected_graphs/n={n}", len(graphs), agree))
    return out


def ab_dimension_checks(n: int, graphs: list[Graph] | None = None) -> list[Check]:
    if graphs is None:
        graphs = list(iter_graphs(n, connected=True))
    agree = 0
    for g in graphs:
        counts = nbc_counts(g) + [0]
        agree += all(ab_component_dimension(g, d) == counts[d] for d in range(len(counts)))
    return [Check(f"abelian/ab_dimension/n={n}", len(graphs), agree)]


def hilbert_checks(seed: int, random_graphs: int = 50, max_n: int = 6) -> list[Check]:
    out = []
    for n in range(3, max_n + 1):
        product = [1]
        for k in range(1, n):
            product = [a + k * b for a, b in zip(product + [0], [0] + product)]
        counts = nbc_counts(Graph.complete(n))
        out.append(Check(f"hilbert/complete/n={n}", product, counts))
        out.append(Check(f"hilbert/complete_total/n={n}", factorial(n), sum(counts)))
    rng = random.Random(seed)
    agree = 0
    for _ in range(random_graphs):
        g = random_graph(rng.randint(2, max_n), rng, connected=True)
        formula = hilbert_from_chromatic(chromatic_polynomial(g), g.n).int_coeffs()
        agree += formula == nbc_counts(g)
    out.append(Check(f"hilbert/random_connected/max_n={max_n}", random_graphs, agree))
    return out


def random_tree_element(rng: random.Random, max_n: int = 6) -> tuple[TreeElement, Graph]:
    while True:
        n = rng.randint(2, max_n)
        g = random_graph(n, rng, p=rng.choice([0.5, 0.7, 1.0]), connected=True)
        trees = list(trees_inside(g))
        if trees:
            break
    terms: dict[NoncrossingTree, Fraction] = {}
    for t in rng.sample(trees, min(len(trees), rng.randint(1, 4))):
        num = rng.choice([-3, -2, -1, 1, 2, 3])
        terms[t] = Fraction(num, rng.choice([1, 1, 1, 2, 3]))
    return TreeElement(n, terms), g


def abelian_compat_checks(count: int, seed: int, max_n: int = 6) -> list[Check]:
    rng = random.Random(seed)
    agree = 0
    for k in range(count):
        e, g = random_tree_element(rng, max_n)
        nf = reduce(e, g, "random", rng.randrange(1 << 30)) if k % 2 else reduce(e, g)
        agree += abelianize(nf, g) == abelianize(e, g)
    return [Check(f"abelian/compatibility/count={count}", count, agree)]


def abelian_checks(n: int, seed: int) -> list[Check]:
    if n <= 5:
        graphs = None
    else:
        rng = random.Random(seed)
        graphs = [random_graph(n, rng, connected=True) for _ in range(20)]
    out = ab_dimension_checks(n, graphs)
    out += hilbert_checks(seed, max_n=min(max(n, 3), 6))
    out += abelian_compat_checks(1000, seed, max_n=min(max(n, 2), 6))
    return out


def run_suite(suite: str, n: int, seed: int) -> list[Check]:
    if suite == "catalan":
        return catalan_checks(n)
    if suite == "confluence":
        return confluence_checks(n, seed)
    if suite == "signature":
        return signature_checks(n, seed)
    if suite == "oracle":
        return oracle_checks(n)
    if suite == "abelian":
        return abelian_checks(n, seed)
    raise ValueError(f"unknown suite {suite!r}")

