"""Rewriting linear combinations of noncrossing trees to the G-reduced basis.

A tree ``T`` with a reduction site ``(i_1, ..., i_m)`` is replaced by

    x_{T_1} - x_{T_2} - ... - x_{T_{m-1}}

where ``H = T + (i_{m-1}, i_m)`` and ``T_j`` drops the j-th edge of the cycle
of ``H``.  Each rewrite trades a cycle edge for the larger edge
``(i_{m-1}, i_m)``, so edge sets grow and the process terminates.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .graph_core import Edge, Graph, GraphError
from .noncrossing import (
    MAX_ENUM_N,
    NoncrossingTree,
    enumerate_G_reduced,
    kn_sites,
    signature,
    trees_inside,
)


def parse_coeff(text) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"coefficient {text!r} must be an exact integer or p/q string")
    return Fraction(text)


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class TreeElement:
    """Exact rational combination of noncrossing trees on [n]."""

    n: int
    terms: Mapping[NoncrossingTree, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[NoncrossingTree, Fraction] = {}
        for t, c in self.terms.items():
            if t.n != self.n:
                raise ValueError(f"tree on [{t.n}] in an element over [{self.n}]")
            c = Fraction(c)
            if c:
                clean[t] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def of(cls, t: NoncrossingTree, coeff=1) -> TreeElement:
        return cls(t.n, {t: Fraction(coeff)})

    @classmethod
    def from_edge_map(cls, n: int, terms: Mapping[tuple[Edge, ...], object]) -> TreeElement:
        return cls(n, {NoncrossingTree._trusted(n, k): Fraction(c) for k, c in terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[NoncrossingTree, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].edges)

    def __add__(self, other: TreeElement) -> TreeElement:
        if self.n != other.n:
            raise ValueError("elements over different n")
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return TreeElement(self.n, out)

    def __neg__(self) -> TreeElement:
        return TreeElement(self.n, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other: TreeElement) -> TreeElement:
        return self + (-other)

    def __rmul__(self, scalar) -> TreeElement:
        s = Fraction(scalar)
        return TreeElement(self.n, {t: s * c for t, c in self.terms.items()})

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"coeff": format_coeff(c), "edges": [list(e) for e in t.edges]}
                for t, c in self.items()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict | str) -> TreeElement:
        if isinstance(data, str):
            data = json.loads(data)
        n = data["n"]
        out: dict[NoncrossingTree, Fraction] = {}
        for term in data["terms"]:
            t = NoncrossingTree(n, tuple(tuple(e) for e in term["edges"]))
            out[t] = out.get(t, Fraction(0)) + parse_coeff(term["coeff"])
        return cls(n, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t, c in self.items():
            name = "x{" + ",".join(f"{i}{j}" for i, j in t.edges) + "}"
            mag = abs(c)
            parts.append(("- " if c < 0 else "+ ") + ("" if mag == 1 else f"{format_coeff(mag)}*") + name)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class ReductionSite:
    """Vertices ``i_1 < ... < i_m`` of the cycle closed by the new edge."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        v = self.vertices
        if len(v) < 3 or any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError(f"site vertices {v} must be increasing with m >= 3")

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def tree_edge(self) -> Edge:
        return (self.vertices[0], self.vertices[-1])

    @property
    def path_edges(self) -> list[Edge]:
        v = self.vertices
        return [(v[k - 1], v[k]) for k in range(1, len(v) - 1)]

    @property
    def new_edge(self) -> Edge:
        return (self.vertices[-2], self.vertices[-1])


def _check_inside(edges: Iterable[Edge], g: Graph) -> None:
    if not set(edges) <= g.edge_set:
        raise GraphError("tree is not contained in the graph")


def find_sites(t: NoncrossingTree, g: Graph) -> list[ReductionSite]:
    """All reduction sites of ``t`` in ``g``, sorted by ``(i_m, i_{m-1}, m)``."""
    if t.n != g.n:
        raise GraphError("tree and graph have different vertex counts")
    _check_inside(t.edges, g)
    es = g.edge_set
    return [ReductionSite(s) for s in kn_sites(t.n, t.edges) if (s[-2], s[-1]) in es]


def _descending(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted(edges, reverse=True))


@lru_cache(maxsize=1 << 18)
def _relation_terms(
    edges: tuple[Edge, ...], site: tuple[int, ...]
) -> tuple[tuple[int, tuple[Edge, ...]], ...]:
    m = len(site)
    new = (site[-2], site[-1])
    hull = set(edges)
    hull.add(new)
    dropped = [(site[0], site[-1])] + [(site[k - 1], site[k]) for k in range(1, m - 1)]
    before = _descending(edges)
    out = []
    for k, e in enumerate(dropped):
        tree = tuple(sorted(hull - {e}))
        # termination measure: the edge set strictly increases
        assert _descending(tree) > before, (edges, site)
        out.append((1 if k == 0 else -1, tree))
    return tuple(out)


def apply_relation(t: NoncrossingTree, site: ReductionSite) -> TreeElement:
    if site.vertices not in kn_sites(t.n, t.edges):
        raise ValueError(f"{site.vertices} is not a reduction site of {list(t.edges)}")
    return TreeElement.from_edge_map(
        t.n, {tree: c for c, tree in _relation_terms(t.edges, site.vertices)}
    )


def _as_exact(c: Fraction):
    return c.numerator if c.denominator == 1 else c


def reduce(
    e: TreeElement, g: Graph, strategy: str = "lex", seed: int | None = None
) -> TreeElement:
    """Rewrite ``e`` until every tree is G-reduced.

    ``strategy="lex"`` always rewrites the lex-least reducible tree at its
    first site; ``strategy="random"`` picks tree and site with a seeded RNG.
    """
    if e.n != g.n:
        raise GraphError("element and graph have different vertex counts")
    for t in e.terms:
        _check_inside(t.edges, g)
    if strategy == "lex":
        rng = None
    elif strategy == "random":
        if seed is None:
            raise ValueError("random strategy needs a seed")
        rng = random.Random(seed)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    start = {t.edges: _as_exact(c) for t, c in e.terms.items()}
    result = Rewriter(g).normal_form(start, rng)
    if all(isinstance(c, int) for c in start.values()):
        assert all(isinstance(c, int) for c in result.values())
    return TreeElement.from_edge_map(e.n, result)


class Rewriter:
    """Rewrite loop over plain ``{edge tuple: coefficient}`` dicts for one graph.

    Site lists are cached per tree, so reusing one instance across many
    reductions in the same graph is cheap.
    """

    def __init__(self, g: Graph):
        self.n = g.n
        self.allowed = g.edge_set
        self._sites: dict[tuple[Edge, ...], list[tuple[int, ...]]] = {}

    def sites_of(self, edges: tuple[Edge, ...]) -> list[tuple[int, ...]]:
        found = self._sites.get(edges)
        if found is None:
            allowed = self.allowed
            found = [s for s in kn_sites(self.n, edges) if (s[-2], s[-1]) in allowed]
            self._sites[edges] = found
        return found

    def normal_form(self, work: Mapping, rng: random.Random | None = None) -> dict:
        """Lex-first when ``rng`` is None, else uniformly random tree and site."""
        sites_of = self.sites_of
        work = dict(work)
        pending = {k for k in work if sites_of(k)}
        while pending:
            if rng is None:
                tree = min(pending)
                site = sites_of(tree)[0]
            else:
                tree = rng.choice(sorted(pending))
                site = rng.choice(sites_of(tree))
            c = work.pop(tree)
            pending.discard(tree)
            for sign, out in _relation_terms(tree, site):
                v = work.get(out, 0) + sign * c
                if v:
                    work[out] = v
                    if sites_of(out):
                        pending.add(out)
                else:
                    work.pop(out, None)
                    pending.discard(out)
        return work


def expand_Kn(t: NoncrossingTree) -> TreeElement:
    """``x_t`` written in the basis of K_n-reduced trees."""
    return reduce(TreeElement.of(t), Graph.complete(t.n))


class SignatureOrder:
    """Trees compared by signature (lexicographic), ties by sorted edge list."""

    def key(self, t: NoncrossingTree):
        return (signature(t), t.edges)

    def less(self, a: NoncrossingTree, b: NoncrossingTree) -> bool:
        return self.key(a) < self.key(b)


SIGNATURE_ORDER = SignatureOrder()


def leading_term(
    e: TreeElement, order: SignatureOrder = SIGNATURE_ORDER
) -> tuple[NoncrossingTree, Fraction]:
    if e.is_zero():
        raise ValueError("the zero element has no leading term")
    t = min(e.terms, key=order.key)
    return t, e.terms[t]


@dataclass
class ConfluenceReport:
    graph: Graph
    trials: int
    seed: int
    checked: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def confluence_fuzz(g: Graph, trials: int, seed: int) -> ConfluenceReport:
    """Reduce random trees of ``g`` under two random strategies and compare."""
    if g.n > 8:
        raise ValueError("confluence fuzzing is limited to n <= 8")
    report = ConfluenceReport(g, trials, seed)
    trees = list(trees_inside(g))
    if not trees:
        return report
    rng = random.Random(seed)
    for _ in range(trials):
        t = rng.choice(trees)
        x = TreeElement.of(t)
        sa = rng.randrange(1 << 30)
        first = reduce(x, g, "random", sa)
        if rng.random() < 0.5:
            sb, second = None, reduce(x, g, "lex")
        else:
            sb = rng.randrange(1 << 30)
            second = reduce(x, g, "random", sb)
        report.checked += 1
        if first != second:
            report.counterexample = {
                "tree": [list(e) for e in t.edges],
                "seeds": [sa, sb],
                "results": [first.to_json(), second.to_json()],
            }
            break
    return report


def dimension(g: Graph) -> int:
    """dim of the n-cycle component of E_G: the number of G-reduced trees."""
    if g.n > MAX_ENUM_N:
        raise ValueError(f"dimension is limited to n <= {MAX_ENUM_N}")
    return sum(1 for _ in enumerate_G_reduced(g))


def normal_form_table(g: Graph, strategy: str = "lex", seed: int | None = None) -> dict:
    """Normal forms of every noncrossing tree inside ``g``, keyed by edge tuple."""
    return {t.edges: reduce(TreeElement.of(t), g, strategy, seed) for t in trees_inside(g)}

