"""Words in the generators x_ij and their three gradings.

A word is read left to right; its permutation degree multiplies the
transpositions so that the rightmost letter acts first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph_core import Edge, Graph, SetPartition, connected_components, has_cycle, norm_edge
from .noncrossing import NoncrossingTree, _clockwise, _edges_noncrossing, _terminal


@dataclass(frozen=True)
class Permutation:
    """Bijection of [n]; ``images[k - 1]`` is the image of ``k``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for c in cycles:
            for k, v in enumerate(c):
                images[v - 1] = c[(k + 1) % len(c)]
        return cls(tuple(images))

    @classmethod
    def long_cycle(cls, n: int) -> Permutation:
        return cls.from_cycles(n, [tuple(range(1, n + 1))])

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation such as ``"(1 2 3)(4 5)"``; ``"()"`` is the identity."""
        groups = re.findall(r"\(([^()]*)\)", text)
        if re.sub(r"\([^()]*\)", "", text).strip():
            raise ValueError(f"bad cycle notation {text!r}")
        cycles = [tuple(int(x) for x in re.split(r"[\s,]+", g.strip())) for g in groups if g.strip()]
        return cls.from_cycles(n, cycles)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(x) = self(other(x))
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles, fixed points included, each starting at its minimum."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            v = self(start)
            while v != start:
                cyc.append(v)
                seen.add(v)
                v = self(v)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cs = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"


@dataclass(frozen=True)
class Monomial:
    """A word in the x_ij with every letter written as i < j.

    ``sign`` records the -1 factors picked up when x_ji was rewritten as -x_ij.
    """

    n: int
    word: tuple[Edge, ...]
    sign: int = 1

    def __post_init__(self) -> None:
        for i, j in self.word:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"letter x_{i}{j} is not a generator for n = {self.n}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def parse(cls, n: int, pairs: Sequence[Sequence[int]]) -> Monomial:
        """Build from unordered index pairs, normalising x_ji to -x_ij."""
        sign = 1
        word = []
        for pair in pairs:
            i, j = pair
            if i == j:
                raise ValueError(f"x_{i}{j} is not a generator")
            if i > j:
                sign = -sign
            word.append(norm_edge(i, j))
        return cls(n, tuple(word), sign)

    @classmethod
    def from_json(cls, data: dict) -> Monomial:
        m = cls.parse(data["n"], data["word"])
        return cls(m.n, m.word, m.sign * data.get("sign", 1))

    def to_json(self) -> dict:
        return {"n": self.n, "word": [list(e) for e in self.word], "sign": self.sign}

    def __mul__(self, other: Monomial) -> Monomial:
        if self.n != other.n:
            raise ValueError("monomials over different n")
        return Monomial(self.n, self.word + other.word, self.sign * other.sign)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        body = "".join(f"x_{i}{j}" if self.n < 10 else f"x_{{{i},{j}}}" for i, j in self.word) or "1"
        return ("-" if self.sign < 0 else "") + body


def degree(p: Monomial) -> int:
    return len(p.word)


def sn_degree(p: Monomial) -> Permutation:
    images = list(range(1, p.n + 1))
    for i, j in reversed(p.word):
        images = [j if v == i else i if v == j else v for v in images]
    return Permutation(tuple(images))


def support(p: Monomial) -> Graph:
    return Graph(p.n, tuple(set(p.word)))


def pi_degree(p: Monomial) -> SetPartition:
    return connected_components(support(p))


def is_simple(p: Monomial) -> bool:
    return len(set(p.word)) == len(p.word) and not has_cycle(support(p))


def respects(p: Monomial, t: NoncrossingTree) -> bool:
    """Whether the letters at each vertex appear in the tree's clockwise order."""
    letters = set(p.word)
    if len(letters) != len(p.word):
        raise ValueError("respects() needs a word without repeated letters")
    if p.n != t.n or not letters <= set(t.edges):
        raise ValueError("support of the word is not contained in the tree")
    for v in range(1, p.n + 1):
        seen = [e for e in p.word if v in e]
        expected = [e for e in _clockwise(t.edges, v) if e in letters]
        if seen != expected:
            return False
    return True


def canonical_monomial(t: NoncrossingTree) -> Monomial:
    """The word obtained by peeling lex-least terminal edges from the right."""
    remaining = list(t.edges)
    word: list[Edge] = []
    while remaining:
        e = _terminal(remaining)[0]
        word.append(e)
        remaining.remove(e)
    return Monomial(t.n, tuple(reversed(word)))


def foata_normal_form(p: Monomial) -> tuple[tuple[Edge, ...], ...]:
    """Layered normal form under commutation of letters with disjoint indices."""
    layer_of: list[int] = []
    for k, e in enumerate(p.word):
        depth = 0
        for m in range(k):
            f = p.word[m]
            if (e[0] in f or e[1] in f) and layer_of[m] + 1 > depth:
                depth = layer_of[m] + 1
        layer_of.append(depth)
    layers: list[list[Edge]] = [[] for _ in range(max(layer_of, default=-1) + 1)]
    for e, d in zip(p.word, layer_of):
        layers[d].append(e)
    return tuple(tuple(sorted(layer)) for layer in layers)


def commutation_equivalent(p: Monomial, q: Monomial) -> bool:
    if p.n != q.n:
        raise ValueError("monomials over different n")
    return foata_normal_form(p) == foata_normal_form(q)


class ComponentTree(NamedTuple):
    tree: NoncrossingTree
    relabel: dict[int, int]


def tree_of_simple_monomial(p: Monomial) -> dict[tuple[int, ...], ComponentTree]:
    """Split a simple word along the cycles of its permutation degree.

    Each cycle ``(c1, c2, ..., ck)`` (starting at its minimum) is relabelled
    ``c_r -> r``; the letters inside it then form a noncrossing tree on [k].
    Fixed points give one-vertex trees.
    """
    if not is_simple(p):
        raise ValueError(f"{p} is not simple")
    out: dict[tuple[int, ...], ComponentTree] = {}
    for cyc in sn_degree(p).cycles():
        relabel = {v: r for r, v in enumerate(cyc, start=1)}
        edges = tuple(
            sorted(norm_edge(relabel[a], relabel[b]) for a, b in p.word if a in relabel)
        )
        if not _edges_noncrossing(edges):
            raise AssertionError(f"support of {p} on cycle {cyc} is crossing after relabelling")
        out[cyc] = ComponentTree(NoncrossingTree(len(cyc), edges), relabel)
    return out
