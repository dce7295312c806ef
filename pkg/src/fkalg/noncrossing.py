"""Noncrossing trees: clockwise order, terminal edges, signatures, G-reduced trees.

Vertices 1..n sit left to right on a line and edges are arcs above it; a graph
is noncrossing when no two arcs ``(a, c)``, ``(b, d)`` satisfy ``a < b < c < d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .graph_core import Edge, Graph, GraphError, has_cycle, is_connected

MAX_ENUM_N = 10


def crosses(e: Edge, f: Edge) -> bool:
    (a, c), (b, d) = e, f
    return a < b < c < d or b < a < d < c


def _edges_noncrossing(edges: Sequence[Edge]) -> bool:
    return not any(
        crosses(edges[x], edges[y]) for x in range(len(edges)) for y in range(x + 1, len(edges))
    )


def is_noncrossing(g: Graph) -> bool:
    return _edges_noncrossing(g.edges)


@dataclass(frozen=True)
class NoncrossingTree(Graph):
    """A spanning tree of [n] whose arcs do not cross."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.edges) != self.n - 1 or has_cycle(self) or not is_connected(self):
            raise GraphError(f"{list(self.edges)} is not a spanning tree on [{self.n}]")
        if not _edges_noncrossing(self.edges):
            raise GraphError(f"{list(self.edges)} has crossing edges")

    @classmethod
    def _trusted(cls, n: int, edges: tuple[Edge, ...]) -> NoncrossingTree:
        # edges must already be a sorted noncrossing spanning tree
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "edges", edges)
        return t

    @classmethod
    def from_graph(cls, g: Graph) -> NoncrossingTree:
        return cls(g.n, g.edges)

    def as_graph(self) -> Graph:
        return Graph(self.n, self.edges)


def _clockwise(edges: Iterable[Edge], v: int) -> list[Edge]:
    left = sorted((e for e in edges if e[1] == v), key=lambda e: -e[0])
    right = sorted((e for e in edges if e[0] == v), key=lambda e: -e[1])
    return left + right


def clockwise_order(t: Graph, v: int) -> list[Edge]:
    """Edges at ``v`` in clockwise order.

    Left edges ``(j, v)`` come first, nearest ``j`` first; then right edges
    ``(v, j)``, farthest ``j`` first.
    """
    if not 1 <= v <= t.n:
        raise ValueError(f"vertex {v} outside [1, {t.n}]")
    return _clockwise(t.edges, v)


def _terminal(edges: Sequence[Edge]) -> list[Edge]:
    last: dict[int, Edge] = {}
    for v in {x for e in edges for x in e}:
        last[v] = _clockwise(edges, v)[-1]
    return sorted(e for e in edges if last[e[0]] == e and last[e[1]] == e)


def terminal_edges(t: Graph) -> list[Edge]:
    """Edges that are furthest clockwise at both of their endpoints (lex sorted).

    Works for any noncrossing forest, not only spanning trees.
    """
    return _terminal(t.edges)


def signature(t: NoncrossingTree) -> tuple[int, ...]:
    return _signature(t.n, t.edges)


def _signature(n: int, edges: Sequence[Edge]) -> tuple[int, ...]:
    leftmost: dict[int, int] = {}
    for i, j in edges:
        if j not in leftmost or i < leftmost[j]:
            leftmost[j] = i
    s = [0] * (n + 1)
    s[1] = 1
    for i in range(2, n + 1):
        s[i] = s[leftmost[i]] if i in leftmost else s[i - 1] + 1
    return tuple(s[1:])


@lru_cache(maxsize=1 << 16)
def kn_sites(n: int, edges: tuple[Edge, ...]) -> tuple[tuple[int, ...], ...]:
    """Vertex sequences ``(i_1, ..., i_m)`` of all reduction sites inside K_n.

    ``(i_1, i_m)`` is a tree edge, ``i_1 < ... < i_{m-1}`` is an increasing tree
    path below ``i_m``, and adding ``(i_{m-1}, i_m)`` keeps the tree noncrossing.
    Sorted by ``(i_m, i_{m-1}, m)``.
    """
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    found = []
    for a, b in edges:
        stack = [(a,)]
        while stack:
            path = stack.pop()
            last = path[-1]
            for v in adj[last]:
                if last < v < b:
                    ext = path + (v,)
                    new = (v, b)
                    if not any(crosses(new, e) for e in edges):
                        found.append(ext + (b,))
                    stack.append(ext)
    found.sort(key=lambda s: (s[-1], s[-2], len(s), s))
    return tuple(found)


def is_G_reduced(t: NoncrossingTree, g: Graph) -> bool:
    if t.n != g.n or not set(t.edges) <= g.edge_set:
        raise GraphError("tree is not contained in the graph")
    es = g.edge_set
    return not any((s[-2], s[-1]) in es for s in kn_sites(t.n, t.edges))


def enumerate_noncrossing_trees(n: int) -> Iterator[NoncrossingTree]:
    """Every noncrossing tree on [n], in lexicographic order of edge sets."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    return trees_inside(Graph.complete(n))


def trees_inside(g: Graph) -> Iterator[NoncrossingTree]:
    """Noncrossing spanning trees using only edges of ``g``, lex order."""
    if g.n > MAX_ENUM_N:
        raise ValueError(f"enumeration supports n <= {MAX_ENUM_N}, got {g.n}")
    for edges in _noncrossing_spanning_trees(g.n, g.edges):
        yield NoncrossingTree._trusted(g.n, edges)


def _noncrossing_spanning_trees(n: int, allowed: tuple[Edge, ...]) -> Iterator[tuple[Edge, ...]]:
    if n == 1:
        yield ()
        return
    need = n - 1
    total = len(allowed)
    # a vertex is closed once every allowed edge at it has been decided
    last_index = [-1] * (n + 1)
    for k, (i, j) in enumerate(allowed):
        last_index[i] = last_index[j] = k
    if min(last_index[1:]) < 0:
        return
    closing: list[list[int]] = [[] for _ in range(total + 1)]
    for v in range(1, n + 1):
        closing[last_index[v] + 1].append(v)
    comp = list(range(n + 1))
    chosen: list[Edge] = []

    def stranded(k: int) -> bool:
        for v in closing[k]:
            c = comp[v]
            if not any(comp[u] == c and last_index[u] >= k for u in range(1, n + 1)):
                return True
        return False

    def rec(k: int) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if total - k < need - len(chosen) or stranded(k):
            return
        e = allowed[k]
        i, j = e
        if comp[i] != comp[j] and not any(crosses(e, f) for f in chosen):
            saved = comp[:]
            old, new = comp[j], comp[i]
            for u in range(1, n + 1):
                if comp[u] == old:
                    comp[u] = new
            chosen.append(e)
            yield from rec(k + 1)
            chosen.pop()
            comp[:] = saved
        yield from rec(k + 1)

    yield from rec(0)


def enumerate_G_reduced(g: Graph) -> Iterator[NoncrossingTree]:
    for t in trees_inside(g):
        if is_G_reduced(t, g):
            yield t
