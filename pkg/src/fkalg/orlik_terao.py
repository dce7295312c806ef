"""The Orlik-Terao algebra U_G of a graph, in its no-broken-circuit basis."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .fk_words import Monomial
from .graph_core import (
    LEX,
    Edge,
    EdgeOrder,
    Graph,
    GraphError,
    Polynomial,
    broken_circuit_table,
    chromatic_polynomial,
    cycle_edges,
    hilbert_from_chromatic,
    is_forest_edges,
    norm_edge,
)
from .reduction import TreeElement, format_coeff, parse_coeff

MAX_NBC_N = 10


@dataclass(frozen=True)
class OTElement:
    """Rational combination of NBC monomials u_S, keyed by sorted edge tuples."""

    graph: Graph
    terms: Mapping[tuple[Edge, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for s, c in self.terms.items():
            c = Fraction(c)
            if c:
                clean[tuple(sorted(s))] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, g: Graph) -> OTElement:
        return cls(g, {(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[tuple[Edge, ...], Fraction]]:
        return sorted(self.terms.items())

    def __add__(self, other: OTElement) -> OTElement:
        _same_graph(self, other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, 0) + c
        return OTElement(self.graph, out)

    def __neg__(self) -> OTElement:
        return OTElement(self.graph, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: OTElement) -> OTElement:
        return self + (-other)

    def __rmul__(self, scalar) -> OTElement:
        k = Fraction(scalar)
        return OTElement(self.graph, {s: k * c for s, c in self.terms.items()})

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "ot_terms": [
                {"coeff": format_coeff(c), "edges": [list(e) for e in s]} for s, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict | str, g: Graph, order: EdgeOrder = LEX) -> OTElement:
        """Parse and NBC-reduce; input terms need not be NBC already."""
        if isinstance(data, str):
            data = json.loads(data)
        if data["n"] != g.n:
            raise GraphError("element and graph have different vertex counts")
        start: dict[tuple[Edge, ...], Fraction] = {}
        for term in data["ot_terms"]:
            edges = [tuple(e) for e in term["edges"]]
            if any(e[0] >= e[1] for e in edges):
                raise GraphError("OT edges must be written with i < j")
            if len(set(edges)) != len(edges):
                continue
            key = tuple(sorted(edges))
            start[key] = start.get(key, 0) + parse_coeff(term["coeff"])
        return _reduce(g, order, start, None)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.items():
            name = "*".join(f"u{i}{j}" for i, j in s) or "1"
            mag = abs(c)
            parts.append(("- " if c < 0 else "+ ") + ("" if mag == 1 else f"{format_coeff(mag)}*") + name)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _same_graph(a: OTElement, b: OTElement) -> None:
    if a.graph != b.graph:
        raise GraphError("elements live over different graphs")


@dataclass(frozen=True)
class CircuitDependence:
    """Signed edges of a cycle with sum_p c_p (e_i - e_j) = 0 for edges (i, j), i < j."""

    cycle: tuple[int, ...]
    coeffs: Mapping[Edge, int]

    def __post_init__(self) -> None:
        if len(self.cycle) < 3 or len(set(self.cycle)) != len(self.cycle):
            raise ValueError(f"{self.cycle} is not a cycle of length >= 3")
        edges = cycle_edges(self.cycle)
        if set(edges) != set(self.coeffs) or len(edges) != len(self.coeffs):
            raise ValueError("coefficients must be given for exactly the cycle edges")
        total: dict[int, int] = {}
        for (i, j), c in self.coeffs.items():
            if c not in (1, -1):
                raise ValueError("circuit coefficients are +1 or -1")
            total[i] = total.get(i, 0) + c
            total[j] = total.get(j, 0) - c
        if any(total.values()):
            raise ValueError("coefficients do not give a linear dependence")

    @classmethod
    def from_cycle(cls, cycle: Sequence[int]) -> CircuitDependence:
        """Orient the cycle along its listed order: +1 where it runs i -> j with i < j."""
        cycle = tuple(cycle)
        coeffs = {}
        for k, a in enumerate(cycle):
            b = cycle[(k + 1) % len(cycle)]
            coeffs[norm_edge(a, b)] = 1 if a < b else -1
        return cls(cycle, coeffs)


def circuit_relation(c: CircuitDependence) -> dict[tuple[Edge, ...], int]:
    """The relation sum_p c_p prod_{q != p} u_q = 0, as ``{edge set: coefficient}``."""
    edges = sorted(c.coeffs)
    return {tuple(f for f in edges if f != e): c.coeffs[e] for e in edges}


@lru_cache(maxsize=256)
def _broken_circuit_data(g: Graph, order: EdgeOrder):
    table = broken_circuit_table(g, order)
    bcs = sorted(table, key=lambda b: sorted(order.key(e) for e in b))
    return bcs, {b: CircuitDependence.from_cycle(table[b]) for b in bcs}


def _reduce(
    g: Graph, order: EdgeOrder, start: Mapping, rng: random.Random | None
) -> OTElement:
    bcs, deps = _broken_circuit_data(g, order)

    def height(s):
        return sorted((order.key(e) for e in s), reverse=True)

    work: dict[frozenset[Edge], Fraction] = {}
    for s, c in start.items():
        fs = frozenset(s)
        if len(fs) == len(s) and is_forest_edges(fs, g.n) and c:
            work[fs] = work.get(fs, 0) + c
    result: dict[tuple[Edge, ...], Fraction] = {}
    while work:
        # substitutions only lower the height, so the highest set is final
        s = max(work, key=height)
        c = work.pop(s)
        if not c:
            continue
        inside = [b for b in bcs if b <= s]
        if not inside:
            result[tuple(sorted(s))] = c
            continue
        b = rng.choice(inside) if rng is not None else inside[0]
        dep = deps[b]
        (low,) = set(dep.coeffs) - b
        c_low = dep.coeffs[low]
        for e in b:
            assert order.key(low) < order.key(e)
            new = (s - {e}) | {low}
            if not is_forest_edges(new, g.n):
                continue
            work[new] = work.get(new, 0) - c * dep.coeffs[e] * c_low  # 1/c_low == c_low
    return OTElement(g, result)


def reduce_monomial(
    s: Sequence[Edge],
    g: Graph,
    order: EdgeOrder = LEX,
    rng: random.Random | None = None,
) -> OTElement:
    """Expand the monomial prod_{e in s} u_e in the NBC basis.

    Repeated edges or a cycle in ``s`` give zero.  The lex-least contained
    broken circuit is eliminated first unless ``rng`` picks one at random.
    """
    s = [norm_edge(*e) for e in s]
    if not set(s) <= g.edge_set:
        raise GraphError("monomial uses edges outside the graph")
    if len(set(s)) != len(s):
        return OTElement(g)
    return _reduce(g, order, {tuple(sorted(s)): Fraction(1)}, rng)


def multiply(a: OTElement, b: OTElement, g: Graph, order: EdgeOrder = LEX) -> OTElement:
    if a.graph != g or b.graph != g:
        raise GraphError("elements live over different graphs")
    start: dict[tuple[Edge, ...], Fraction] = {}
    for s, x in a.terms.items():
        for t, y in b.terms.items():
            if set(s) & set(t):
                continue
            key = tuple(sorted(s + t))
            start[key] = start.get(key, 0) + x * y
    return _reduce(g, order, start, None)


def nbc_sets(g: Graph, order: EdgeOrder = LEX) -> list[tuple[Edge, ...]]:
    """All NBC edge sets, sorted by size and then lexicographically.

    Edges are decided from largest to smallest; a set is NBC exactly when no
    edge has its endpoints already joined by chosen edges larger than it.
    """
    if g.n > MAX_NBC_N:
        raise ValueError(f"NBC enumeration is limited to n <= {MAX_NBC_N}")
    if not order.covers(g):
        raise ValueError("edge order does not cover the graph")
    desc = sorted(g.edges, key=order.key, reverse=True)
    out: list[tuple[Edge, ...]] = []
    chosen: list[Edge] = []

    def rec(k: int, comp: list[int]) -> None:
        if k == len(desc):
            out.append(tuple(sorted(chosen)))
            return
        a, b = desc[k]
        if comp[a] == comp[b]:
            return
        rec(k + 1, comp)
        old, new = comp[b], comp[a]
        chosen.append(desc[k])
        rec(k + 1, [new if x == old else x for x in comp])
        chosen.pop()

    rec(0, list(range(g.n + 1)))
    out.sort(key=lambda s: (len(s), s))
    return out


def nbc_basis(g: Graph, order: EdgeOrder = LEX) -> Iterator[tuple[Edge, ...]]:
    return iter(nbc_sets(g, order))


def nbc_counts(g: Graph, order: EdgeOrder = LEX) -> list[int]:
    counts = [0] * g.n
    for s in nbc_sets(g, order):
        counts[len(s)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def abelianize(e: TreeElement | Monomial, g: Graph, order: EdgeOrder = LEX) -> OTElement:
    """Image in U_G under x_ij -> u_ij."""
    if e.n != g.n:
        raise GraphError("element and graph have different vertex counts")
    if isinstance(e, Monomial):
        if len(set(e.word)) != len(e.word):
            return OTElement(g)
        return e.sign * reduce_monomial(e.word, g, order)
    start: dict[tuple[Edge, ...], Fraction] = {}
    for t, c in e.terms.items():
        if not set(t.edges) <= g.edge_set:
            raise GraphError("tree is not contained in the graph")
        start[t.edges] = start.get(t.edges, 0) + c
    return _reduce(g, order, start, None)


class HilbertMismatch(AssertionError):
    """NBC counts and the chromatic formula disagree (an implementation bug)."""


def hilbert_series(g: Graph, order: EdgeOrder = LEX) -> Polynomial:
    counts = nbc_counts(g, order)
    via_chi = hilbert_from_chromatic(chromatic_polynomial(g), g.n)
    via_nbc = Polynomial(tuple(counts))
    if via_chi != via_nbc:
        raise HilbertMismatch(f"NBC counts {counts} vs chromatic formula {via_chi}")
    return via_nbc
