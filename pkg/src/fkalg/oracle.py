"""Brute-force graded dimensions by exact linear algebra over word spaces.

Nothing here touches the rewrite engine.  The component of E_n of degree d
and permutation degree sigma is the span of all such words modulo the
two-letter relations applied at every position; because the defining
relations are homogeneous for the permutation grading, those local rewrites
span the ideal's intersection with the component.  E_G is a subalgebra, so
its component is measured as a rank difference inside the K_n word space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

from .fk_words import Permutation
from .graph_core import Edge, Graph, cycles, is_forest_edges, norm_edge

MAX_DEGREE = 8
MAX_WORDS = 10**6
MAX_AB_N = 6

Word = tuple[Edge, ...]


class OracleCapExceeded(ValueError):
    pass


@dataclass
class WordSpace:
    n: int
    sigma: Permutation
    d: int
    words: list[Word]
    index: dict[Word, int] = field(init=False)

    def __post_init__(self) -> None:
        self.index = {w: k for k, w in enumerate(self.words)}

    def __len__(self) -> int:
        return len(self.words)


# Permutations here are plain 0-padded tuples, composed locally so the
# oracle shares no arithmetic with the word module.


def _swap(p: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
    # p * (i j): precompose with a transposition
    q = list(p)
    q[i], q[j] = p[j], p[i]
    return tuple(q)


def _n_cycles(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    count = 0
    for s in range(1, len(p)):
        if not seen[s]:
            count += 1
            v = s
            while not seen[v]:
                seen[v] = True
                v = p[v]
    return count


def _inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[x] for x in q)


def enumerate_words(n: int, sigma: Permutation, d: int, restrict: Graph | None = None) -> WordSpace:
    """All length-``d`` words (over K_n or ``restrict``) whose product is ``sigma``."""
    if d > MAX_DEGREE:
        raise OracleCapExceeded(f"degree {d} exceeds {MAX_DEGREE}")
    if sigma.n != n:
        raise ValueError("permutation acts on the wrong set")
    gens = list(restrict.edges) if restrict is not None else list(itertools.combinations(range(1, n + 1), 2))
    target = (0,) + sigma.images
    words: list[Word] = []
    prefix: list[Edge] = []

    def rec(prod: tuple[int, ...], left: int) -> None:
        # remaining letters must multiply to prod^-1 * sigma
        rest = _compose(_inverse(prod), target)
        dist = n - _n_cycles(rest)
        if dist > left or (left - dist) % 2:
            return
        if left == 0:
            words.append(tuple(prefix))
            if len(words) > MAX_WORDS:
                raise OracleCapExceeded(f"more than {MAX_WORDS} words")
            return
        for e in gens:
            prefix.append(e)
            rec(_swap(prod, *e), left - 1)
            prefix.pop()

    rec(tuple(range(n + 1)), d)
    return WordSpace(n, sigma, d, words)


def _triangle_relations(a: Edge, b: Edge) -> list[tuple[int, Edge, Edge]]:
    """The quadratic triangle relation containing the product ``a b``."""
    i, j, k = sorted(set(a) | set(b))
    ij, jk, ik = (i, j), (j, k), (i, k)
    r1 = [(1, ij, jk), (-1, jk, ik), (-1, ik, ij)]
    r2 = [(1, jk, ij), (-1, ik, jk), (-1, ij, ik)]
    return r1 if any((x, y) == (a, b) for _, x, y in r1) else r2


@dataclass
class SparseMatrix:
    """Rows of ``{column: integer}``; exact arithmetic only."""

    ncols: int
    rows: list[dict[int, int]] = field(default_factory=list)

    def add_row(self, row: Mapping[int, int]) -> None:
        clean = {c: v for c, v in row.items() if v}
        if any(not isinstance(v, int) for v in clean.values()):
            raise TypeError("sparse rows hold integers only")
        if clean:
            self.rows.append(clean)

    def rank(self) -> int:
        ech = Echelon()
        for row in _pivot_order(self.rows):
            ech.insert(row)
        return ech.rank


def _pivot_order(rows: Iterable[dict[int, int]]) -> list[dict[int, int]]:
    return sorted(rows, key=lambda r: (len(r), sorted(r.items())))


class Echelon:
    """Incremental fraction-free row echelon form.

    Rows are reduced at their smallest column against stored pivots by
    ``a*row - b*pivot`` and then divided by their content, so entries stay
    integral throughout.
    """

    def __init__(self, pivots: dict[int, dict[int, int]] | None = None):
        self.pivots: dict[int, dict[int, int]] = dict(pivots or {})
        self.pivot_sequence: list[int] = sorted(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def copy(self) -> Echelon:
        return Echelon(self.pivots)

    def insert(self, row: Mapping[int, int]) -> bool:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if row[lead] < 0:
                    g = -g
                self.pivots[lead] = {c: v // g for c, v in row.items()}
                self.pivot_sequence.append(lead)
                return True
            a, b = piv[lead], row[lead]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                x = new.get(c, 0) - b * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {c: v // g for c, v in new.items()} if g > 1 else new
        return False


def relation_span(ws: WordSpace) -> SparseMatrix:
    """Square, commutation and triangle relations placed at every position."""
    m = SparseMatrix(len(ws))
    seen: set[tuple] = set()
    for w in ws.words:
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a == b:
                row = {ws.index[w]: 1}
            elif not set(a) & set(b):
                row = {ws.index[w]: 1}
                other = ws.index[w[:k] + (b, a) + w[k + 2 :]]
                row[other] = row.get(other, 0) - 1
            else:
                row = {}
                for c, x, y in _triangle_relations(a, b):
                    col = ws.index[w[:k] + (x, y) + w[k + 2 :]]
                    row[col] = row.get(col, 0) + c
            key = tuple(sorted(row.items()))
            if key not in seen:
                seen.add(key)
                m.add_row(row)
    return m


@lru_cache(maxsize=64)
def _relation_echelon(n: int, sigma: Permutation) -> tuple[WordSpace, Echelon]:
    d = n - len(sigma.cycles())
    ws = enumerate_words(n, sigma, d)
    ech = Echelon()
    for row in _pivot_order(relation_span(ws).rows):
        ech.insert(row)
    return ws, ech


def component_dimension(g: Graph, sigma: Permutation) -> int:
    """dim of the sigma-component of E_G spanned by simple words.

    rank(relations + G-words) - rank(relations), inside the K_n word space of
    degree n - #cycles(sigma).
    """
    if sigma.n != g.n:
        raise ValueError("permutation acts on the wrong set")
    ws, base = _relation_echelon(g.n, sigma)
    ech = base.copy()
    allowed = g.edge_set
    for w in ws.words:
        if all(e in allowed for e in w):
            ech.insert({ws.index[w]: 1})
    assert ech.rank >= base.rank
    return ech.rank - base.rank


def _oriented_cycle_relation(cycle: tuple[int, ...]) -> list[tuple[int, tuple[Edge, ...]]]:
    """Abelianised cyclic relation: each term omits one oriented edge of the cycle."""
    m = len(cycle)
    oriented = [(cycle[k], cycle[(k + 1) % m]) for k in range(m)]
    out = []
    for p in range(m):
        sign = 1
        edges = []
        for q, (a, b) in enumerate(oriented):
            if q == p:
                continue
            if a > b:
                sign = -sign
            edges.append(norm_edge(a, b))
        out.append((sign, tuple(sorted(edges))))
    return out


def ab_component_dimension(g: Graph, d: int) -> int:
    """Degree-``d`` dimension of the commutative quotient, by direct linear algebra.

    Spanning set: ``d``-edge forests of ``g``.  Relations: every abelianised
    cycle relation times every square-free monomial of the right degree, with
    terms that repeat an edge or contain a cycle dropped.
    """
    if g.n > MAX_AB_N:
        raise OracleCapExceeded(f"n = {g.n} exceeds {MAX_AB_N}")
    if d < 0:
        return 0
    forests = [s for s in itertools.combinations(g.edges, d) if is_forest_edges(s, g.n)]
    col = {s: k for k, s in enumerate(forests)}
    ech = Echelon()
    rows = []
    for cyc in cycles(g):
        m = len(cyc)
        if m - 1 > d:
            continue
        rel = _oriented_cycle_relation(cyc)
        cyc_edges = set(rel[0][1]) | set(rel[1][1])
        others = [e for e in g.edges if e not in cyc_edges]
        for extra in itertools.combinations(others, d - (m - 1)):
            row: dict[int, int] = {}
            for c, es in rel:
                key = tuple(sorted(es + extra))
                k = col.get(key)
                if k is not None:
                    row[k] = row.get(k, 0) + c
            row = {k: v for k, v in row.items() if v}
            if row:
                rows.append(row)
    for row in _pivot_order(rows):
        ech.insert(row)
    return len(forests) - ech.rank
