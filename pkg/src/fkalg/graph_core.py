"""Graphs on [n], edge orders, cycles, partitions, chromatic polynomials.

Vertices are 1-indexed and edges are stored as pairs ``(i, j)`` with ``i < j``.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]

MAX_CYCLE_N = 12


class GraphError(ValueError):
    """Malformed graph input."""


def norm_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        edges = [tuple(e) for e in self.edges]
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            i, j = e
            if not (1 <= i < j <= self.n):
                raise GraphError(f"edge {e!r} must satisfy 1 <= i < j <= {self.n}")
        if len(set(edges)) != len(edges):
            raise GraphError("duplicate edges")
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple(itertools.combinations(range(1, n + 1), 2)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, ())

    @classmethod
    def from_json(cls, data: dict | str) -> Graph:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = data["n"]
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"graph JSON needs 'n' and 'edges': {exc}") from exc
        if isinstance(n, bool) or not isinstance(n, int):
            raise GraphError("'n' must be an integer")
        for e in edges:
            if len(e) != 2 or not all(isinstance(x, int) and not isinstance(x, bool) for x in e):
                raise GraphError(f"edge {list(e)!r} must be a pair of integers")
        return cls(n, tuple(edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def has_edge(self, a: int, b: int) -> bool:
        return norm_edge(a, b) in self.edge_set

    def is_subgraph_of(self, other: Graph) -> bool:
        return self.n == other.n and self.edge_set <= other.edge_set

    def with_edges(self, edges: Iterable[Edge]) -> Graph:
        return Graph(self.n, tuple(edges))


class EdgeOrder:
    """A total order on a set of edges, given by listing them smallest first.

    ``EdgeOrder()`` with no argument is the lexicographic order on ``(i, j)``.
    """

    def __init__(self, edges: Sequence[Edge] | None = None):
        self._rank: dict[Edge, int] | None = None
        if edges is not None:
            edges = [norm_edge(*e) for e in edges]
            if len(set(edges)) != len(edges):
                raise ValueError("edge order lists an edge twice")
            self._rank = {e: k for k, e in enumerate(edges)}

    @property
    def is_lex(self) -> bool:
        return self._rank is None

    def key(self, e: Edge):
        if self._rank is None:
            return e
        try:
            return self._rank[e]
        except KeyError:
            raise ValueError(f"edge {e} is not ordered") from None

    def sorted(self, edges: Iterable[Edge]) -> list[Edge]:
        return sorted(edges, key=self.key)

    def covers(self, g: Graph) -> bool:
        return self._rank is None or all(e in self._rank for e in g.edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgeOrder) and self._rank == other._rank

    def __hash__(self) -> int:
        if self._rank is None:
            return hash(None)
        return hash(tuple(sorted(self._rank.items())))

    def __repr__(self) -> str:
        if self._rank is None:
            return "EdgeOrder(lex)"
        return f"EdgeOrder({sorted(self._rank, key=self._rank.__getitem__)})"


LEX = EdgeOrder()


@dataclass(frozen=True)
class SetPartition:
    """A set partition of [n]; blocks are sorted tuples, sorted by minimum."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        seen = [v for b in blocks for v in b]
        if any(not b for b in blocks):
            raise ValueError("empty block")
        if len(set(seen)) != len(seen) or sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError("blocks must be disjoint and cover [n]")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_of(self, v: int) -> tuple[int, ...]:
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)

    def join(self, other: SetPartition) -> SetPartition:
        """Finest common coarsening."""
        if self.n != other.n:
            raise ValueError("partitions of different sets")
        uf = _UnionFind(self.n)
        for b in self.blocks + other.blocks:
            for v in b[1:]:
                uf.union(b[0], v)
        return SetPartition(uf.groups())

    @classmethod
    def parse(cls, text: str) -> SetPartition:
        return cls(tuple(tuple(int(c) for c in block) for block in text.split("|")))

    def __str__(self) -> str:
        sep = "," if self.n >= 10 else ""
        return "|".join(sep.join(map(str, b)) for b in self.blocks)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True

    def groups(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for v in range(1, len(self.parent)):
            out.setdefault(self.find(v), []).append(v)
        return [tuple(b) for b in out.values()]


def connected_components(g: Graph) -> SetPartition:
    uf = _UnionFind(g.n)
    for i, j in g.edges:
        uf.union(i, j)
    return SetPartition(tuple(uf.groups()))


def is_connected(g: Graph) -> bool:
    return len(connected_components(g).blocks) == 1


def has_cycle(g: Graph) -> bool:
    uf = _UnionFind(g.n)
    return any(not uf.union(i, j) for i, j in g.edges)


def is_forest_edges(edges: Iterable[Edge], n: int) -> bool:
    uf = _UnionFind(n)
    return all(uf.union(i, j) for i, j in edges)


def cycles(g: Graph) -> list[tuple[int, ...]]:
    """All simple cycles of ``g``, each listed once.

    A cycle ``(v1, ..., vk)`` starts at its minimal vertex and ``v2 < vk``.
    """
    return list(_cycles(g))


@lru_cache(maxsize=256)
def _cycles(g: Graph) -> tuple[tuple[int, ...], ...]:
    if g.n > MAX_CYCLE_N:
        raise ValueError(f"cycle enumeration is capped at n <= {MAX_CYCLE_N}")
    adj = g.adjacency
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        start, last = path[0], path[-1]
        for v in adj[last]:
            if v == start and len(path) >= 3 and path[1] < last:
                found.append(tuple(path))
            elif v > start and v not in on_path:
                path.append(v)
                on_path.add(v)
                extend(path, on_path)
                path.pop()
                on_path.discard(v)

    for s in range(1, g.n + 1):
        extend([s], {s})
    found.sort(key=lambda c: (len(c), c))
    return tuple(found)


def cycle_edges(cycle: Sequence[int]) -> list[Edge]:
    """Edges of a cyclically ordered vertex list, in traversal order."""
    return [norm_edge(cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle))]


def broken_circuits(g: Graph, order: EdgeOrder = LEX) -> set[frozenset[Edge]]:
    return set(broken_circuit_table(g, order))


@lru_cache(maxsize=256)
def broken_circuit_table(g: Graph, order: EdgeOrder = LEX) -> dict[frozenset[Edge], tuple[int, ...]]:
    """Map each broken circuit to the cycle it came from."""
    if not order.covers(g):
        raise ValueError("edge order does not cover the graph")
    table: dict[frozenset[Edge], tuple[int, ...]] = {}
    for c in _cycles(g):
        es = cycle_edges(c)
        lo = min(es, key=order.key)
        table[frozenset(e for e in es if e != lo)] = c
    return table


# -- polynomials --------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in t with exact rational coefficients; ``coeffs[k]`` multiplies t^k."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs) -> Polynomial:
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(k) + other.coeff(k) for k in range(size)))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, x in enumerate(self.coeffs):
            for b, y in enumerate(other.coeffs):
                out[a + b] += x * y
        return Polynomial(tuple(out))

    def int_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError(f"non-integer coefficients in {self}")
        return [int(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            if body and mono:
                body += "*"
            parts.append(("-" if c < 0 else "+") + " " + body + mono)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def chromatic_polynomial(g: Graph) -> Polynomial:
    """Chromatic polynomial by deletion-contraction on simple graphs."""
    coeffs = _chromatic(_canonical_key(g.n, g.edges))
    return Polynomial(tuple(coeffs))


def _canonical_key(n: int, edges: Iterable[Edge]) -> tuple[int, tuple[Edge, ...]]:
    # Any relabelling gives an isomorphic graph, so this key is always sound;
    # ordering by degree data just raises the cache hit rate.
    edges = list(edges)
    verts = sorted({v for e in edges for v in e})
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    deg = {v: len(adj[v]) for v in verts}
    sig = {v: (deg[v], tuple(sorted(deg[u] for u in adj[v]))) for v in verts}
    ranked = sorted(verts, key=lambda v: (sig[v], v))
    relabel = {v: k + 1 for k, v in enumerate(ranked)}
    return n, tuple(sorted(norm_edge(relabel[a], relabel[b]) for a, b in edges))


@lru_cache(maxsize=None)
def _chromatic(key: tuple[int, tuple[Edge, ...]]) -> tuple[int, ...]:
    n, edges = key
    if is_forest_edges(edges, n):
        # t^(n - m) (t - 1)^m
        m = len(edges)
        out = [0] * (n + 1)
        for k in range(m + 1):
            out[n - m + k] = comb(m, k) * (-1) ** (m - k)
        return tuple(out)
    a, b = edges[-1]
    rest = edges[:-1]
    deleted = _chromatic(_canonical_key(n, rest))
    merged = set()
    for x, y in rest:
        x = a if x == b else x
        y = a if y == b else y
        if x == y:
            continue
        # shift labels above b down by one to keep vertices in [n-1]
        x = x - 1 if x > b else x
        y = y - 1 if y > b else y
        merged.add(norm_edge(x, y))
    contracted = _chromatic(_canonical_key(n - 1, merged))
    out = list(deleted)
    for k, c in enumerate(contracted):
        out[k] -= c
    return tuple(out)


def hilbert_from_chromatic(chi: Polynomial, n: int) -> Polynomial:
    """The polynomial (-t)^n chi(-1/t); coefficient of t^d is (-1)^d chi_{n-d}."""
    if chi.degree != n:
        raise ValueError(f"chromatic polynomial must have degree {n}, got {chi.degree}")
    out = [(-1) ** d * chi.coeff(n - d) for d in range(n + 1)]
    for d, c in enumerate(out):
        if c < 0 or c.denominator != 1:
            raise ValueError(f"coefficient {c} of t^{d} is not a nonnegative integer")
    return Polynomial(tuple(out))


# -- graph families used by the verification suites ---------------------------


def iter_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """All labelled graphs on [n] (optionally only the connected ones)."""
    all_edges = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(all_edges)):
        g = Graph(n, tuple(e for k, e in enumerate(all_edges) if mask >> k & 1))
        if not connected or is_connected(g):
            yield g


def random_graph(n: int, rng: random.Random, p: float = 0.5, connected: bool = False) -> Graph:
    all_edges = list(itertools.combinations(range(1, n + 1), 2))
    while True:
        g = Graph(n, tuple(e for e in all_edges if rng.random() < p))
        if not connected or is_connected(g):
            return g
