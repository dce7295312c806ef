import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fkalg.graph_core import Graph, SetPartition
from fkalg.fk_words import (
    Monomial,
    Permutation,
    canonical_monomial,
    commutation_equivalent,
    degree,
    foata_normal_form,
    is_simple,
    pi_degree,
    respects,
    sn_degree,
    support,
    tree_of_simple_monomial,
)
from fkalg.noncrossing import NoncrossingTree, enumerate_noncrossing_trees


def word(n, *letters):
    return Monomial.parse(n, [(int(a[0]), int(a[1])) for a in letters])


FIRST = word(8, "36", "45", "35", "16", "12", "78", "68")
SECOND = word(8, "45", "78", "36", "16", "35", "68", "12")


@st.composite
def monomials(draw, n=5, max_len=6):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    letters = draw(st.lists(st.sampled_from(pairs), max_size=max_len))
    return Monomial(n, tuple(letters))


class TestPermutation:
    def test_parse_and_str(self):
        p = Permutation.parse("(1 2 3)(4 5)", 5)
        assert p.images == (2, 3, 1, 5, 4)
        assert str(p) == "(1 2 3)(4 5)"
        assert str(Permutation.identity(3)) == "()"

    def test_composition_right_to_left(self):
        a = Permutation.transposition(3, 1, 2)
        b = Permutation.transposition(3, 2, 3)
        assert (a * b)(3) == 1

    def test_inverse(self):
        p = Permutation.long_cycle(5)
        assert p * p.inverse() == Permutation.identity(5)

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))


class TestMonomial:
    def test_sign_normalisation(self):
        m = Monomial.parse(3, [(2, 1), (2, 3)])
        assert m.word == ((1, 2), (2, 3)) and m.sign == -1
        assert str(m) == "-x_12x_23"

    def test_json_round_trip(self):
        m = Monomial.parse(4, [(3, 1), (2, 4)])
        assert Monomial.from_json(m.to_json()) == m

    def test_rejects_bad_letters(self):
        with pytest.raises(ValueError):
            Monomial.parse(3, [(1, 1)])
        with pytest.raises(ValueError):
            Monomial(3, ((1, 4),))


def test_degree_examples():
    assert degree(word(3, "12", "23")) == 2
    assert degree(Monomial(3, ())) == 0
    assert degree(FIRST) == 7


def test_sn_degree_examples():
    assert sn_degree(word(3, "12", "23")) == Permutation.parse("(1 2 3)", 3)
    assert sn_degree(Monomial(4, ())) == Permutation.identity(4)
    assert sn_degree(word(2, "12", "12")) == Permutation.identity(2)


def test_pi_degree_examples():
    assert str(pi_degree(Monomial.parse(5, [(1, 2), (2, 3), (4, 5), (3, 1)]))) == "123|45"
    assert str(pi_degree(Monomial(3, ()))) == "1|2|3"
    assert str(pi_degree(word(2, "12"))) == "12"


def test_support_examples(example_tree):
    assert support(word(3, "12", "23")).edges == ((1, 2), (2, 3))
    assert support(word(2, "12", "12")).edges == ((1, 2),)
    assert support(FIRST).edges == example_tree.edges


def test_is_simple_examples():
    assert is_simple(word(3, "12", "23"))
    assert not is_simple(word(2, "12", "12"))
    assert not is_simple(word(3, "12", "23", "13"))


@settings(max_examples=300, deadline=None)
@given(monomials())
def test_simple_iff_cycle_count(p):
    # simple exactly when sigma has n - d cycles
    assert is_simple(p) == (len(sn_degree(p).cycles()) == p.n - degree(p))


def test_gradings_multiplicative():
    rng = random.Random(11)
    pairs = list(itertools.combinations(range(1, 7), 2))
    for _ in range(10_000):
        p = Monomial(6, tuple(rng.choice(pairs) for _ in range(rng.randint(0, 4))))
        q = Monomial(6, tuple(rng.choice(pairs) for _ in range(rng.randint(0, 4))))
        pq = p * q
        assert degree(pq) == degree(p) + degree(q)
        assert sn_degree(pq) == sn_degree(p) * sn_degree(q)
        assert pi_degree(pq) == pi_degree(p).join(pi_degree(q))


def test_respects_examples(example_tree):
    assert respects(FIRST, example_tree)
    assert respects(SECOND, example_tree)
    swapped = word(8, "36", "45", "35", "12", "16", "78", "68")
    assert not respects(swapped, example_tree)


def test_respects_rejects_bad_input(example_tree):
    with pytest.raises(ValueError):
        respects(word(8, "12", "12"), example_tree)
    with pytest.raises(ValueError):
        respects(word(8, "13"), example_tree)


def test_canonical_monomial_examples(example_tree):
    assert canonical_monomial(NoncrossingTree(3, ((1, 2), (2, 3)))).word == ((1, 2), (2, 3))
    m = canonical_monomial(NoncrossingTree(3, ((1, 3), (2, 3))))
    assert m.word == ((2, 3), (1, 3))
    assert sn_degree(m) == Permutation.long_cycle(3)
    assert commutation_equivalent(canonical_monomial(example_tree), FIRST)


def test_commutation_examples():
    assert commutation_equivalent(FIRST, SECOND)
    assert not commutation_equivalent(word(3, "12", "23"), word(3, "23", "12"))
    assert commutation_equivalent(word(4, "12", "34"), word(4, "34", "12"))


@settings(max_examples=200, deadline=None)
@given(monomials(n=5, max_len=5), st.randoms(use_true_random=False))
def test_foata_invariant_under_adjacent_commutation(p, rnd):
    w = list(p.word)
    for _ in range(10):
        k = rnd.randrange(len(w) - 1) if len(w) > 1 else None
        if k is not None and not set(w[k]) & set(w[k + 1]):
            w[k], w[k + 1] = w[k + 1], w[k]
    assert foata_normal_form(Monomial(p.n, tuple(w))) == foata_normal_form(p)


def test_tree_of_simple_monomial_examples():
    out = tree_of_simple_monomial(word(5, "12", "23", "45"))
    assert set(out) == {(1, 2, 3), (4, 5)}
    assert out[(1, 2, 3)].tree.edges == ((1, 2), (2, 3))
    assert out[(4, 5)].tree.edges == ((1, 2),) and out[(4, 5)].tree.n == 2
    assert tree_of_simple_monomial(word(2, "12"))[(1, 2)].tree.edges == ((1, 2),)
    assert tree_of_simple_monomial(word(3, "23", "13"))[(1, 2, 3)].tree.edges == ((1, 3), (2, 3))
    with pytest.raises(ValueError):
        tree_of_simple_monomial(word(3, "12", "12"))


def _classes(n):
    """Commutation classes of simple words with permutation degree the long cycle."""
    sigma = Permutation.long_cycle(n)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    classes = {}
    for letters in itertools.permutations(pairs, n - 1) if n <= 4 else ():
        p = Monomial(n, letters)
        if is_simple(p) and sn_degree(p) == sigma:
            classes.setdefault(foata_normal_form(p), p)
    return classes


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_long_cycle_words_biject_with_noncrossing_trees(n):
    sigma = Permutation.long_cycle(n)
    trees = list(enumerate_noncrossing_trees(n))
    seen_supports = set()
    for t in trees:
        # every order of the tree's letters that respects it has degree sigma
        for letters in itertools.permutations(t.edges):
            p = Monomial(n, letters)
            if respects(p, t):
                assert sn_degree(p) == sigma
                assert commutation_equivalent(p, canonical_monomial(t))
        m = canonical_monomial(t)
        assert respects(m, t) and sn_degree(m) == sigma
        assert tree_of_simple_monomial(m)[tuple(range(1, n + 1))].tree == t
        seen_supports.add(t.edges)
    if n <= 4:
        # and every simple word of that degree comes from one of them
        classes = _classes(n)
        assert len(classes) == len(trees)
        assert {tuple(sorted(p.word)) for p in classes.values()} == seen_supports


@pytest.mark.parametrize("n", [3, 4, 5])
def test_simple_words_split_into_noncrossing_trees(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for d in range(n):
        for letters in itertools.permutations(pairs, d):
            p = Monomial(n, letters)
            if not is_simple(p):
                continue
            parts = tree_of_simple_monomial(p)
            assert sum(len(c.tree.edges) for c in parts.values()) == d
            assert SetPartition(tuple(sorted(parts))) == pi_degree(p)
