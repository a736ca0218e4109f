import random

import pytest

from oracles import all_lassos, lasso_accepts, nfa_accepts, nfa_universal_brute
from omegamon import (
    BOTTOM, NFA, Lasso, family_anb, family_bab, family_fig1, family_intro, gadget_b1, gadget_b2,
    infinitely_many, is_live, is_monitorable, is_monitorable_boundary, lasso_member,
    nba_equivalent, nba_is_universal, nfa_is_universal,
)
from omegamon.gadgets import nfa_complete, random_monitor, random_nba, random_nfa

G = ("a0", "a1")


def universal_nfa():
    return NFA(G, ["q"], "q", ["q"], {("q", x, "q") for x in G})


def even_length_nfa():
    return NFA(G, ["e", "o"], "e", ["e"],
               {("e", x, "o") for x in G} | {("o", x, "e") for x in G})


# -- NFA universality ----------------------------------------------------------------


def test_nfa_universality_examples():
    assert nfa_is_universal(universal_nfa())
    assert not nfa_is_universal(even_length_nfa())
    assert not nfa_is_universal(NFA(G, ["q"], "q", [], []))


def test_nfa_universality_against_brute_force():
    rng = random.Random(41)
    for _ in range(300):
        N = random_nfa(rng, 3)
        # a counterexample to universality has length < 2^|Q|
        assert nfa_is_universal(N) == nfa_universal_brute(N, 2 ** len(N.states))


def test_nfa_completion_keeps_language():
    rng = random.Random(42)
    for _ in range(100):
        N = random_nfa(rng, 3)
        C = nfa_complete(N)
        assert all((p, x) in {(s, y) for s, y, _ in C.transitions}
                   for p in C.states for x in G)
        for m in range(6):
            for w in random_words(rng, m, 3):
                assert nfa_accepts(C, w) == nfa_accepts(N, w) == N.accepts(w)


def random_words(rng, length, count):
    return [tuple(rng.choice(G) for _ in range(length)) for _ in range(count)]


def test_nfa_rejects_bad_input():
    with pytest.raises(ValueError):
        NFA(G, ["q"], "r", [], [])
    with pytest.raises(ValueError):
        NFA(G, ["q"], "q", [], [("q", "zz", "q")])


# -- gadgets -------------------------------------------------------------------------------


def test_gadget_alphabet_and_names():
    B = gadget_b1(universal_nfa(), "b")
    assert tuple(B.alphabet) == G + ("b",)
    assert {"@d", "@e", "@f"} <= set(B.states)
    with pytest.raises(ValueError):
        gadget_b1(universal_nfa(), "a0")
    with pytest.raises(ValueError):
        gadget_b2(NFA(G, ["@d"], "@d", [], []))


def test_gadgets_for_universal_nfa():
    N = universal_nfa()
    B1, B2 = gadget_b1(N), gadget_b2(N)
    assert nba_equivalent(B1, B2)
    for B in (B1, B2):
        assert is_live(B) and is_monitorable(B)
        assert not lasso_member(B, Lasso("", ("a0",)))
        assert lasso_member(B, Lasso(("a0", "b"), ("a1",)))
    # L(B2) is Γ*bΣ^ω here, not every word
    assert not nba_is_universal(B2)


def test_gadgets_for_non_universal_nfa():
    N = even_length_nfa()
    B1, B2 = gadget_b1(N), gadget_b2(N)
    assert is_monitorable(B1) and not is_live(B1)
    assert is_live(B2) and not is_monitorable(B2)
    # an odd prefix then b leads to d, where only B2 can still accept
    w = Lasso(("a0", "b"), ("a1", "b"))
    assert not lasso_member(B1, w) and lasso_member(B2, w)


def test_gadget_theorems_on_random_nfas():
    rng = random.Random(7)
    kinds = set()
    for _ in range(100):
        N = random_nfa(rng, 4)
        universal = nfa_is_universal(N)
        kinds.add(universal)
        B1, B2 = gadget_b1(N), gadget_b2(N)
        assert is_monitorable(B1)
        assert is_live(B1) == universal
        assert is_live(B2)
        assert is_monitorable(B2) == universal
        assert is_monitorable_boundary(B2) == universal
    assert kinds == {True, False}


# -- example families ------------------------------------------------------------------------


def test_anb_membership():
    A = family_anb(2)
    assert lasso_member(A, Lasso("aaba", "ab"))
    assert not lasso_member(A, Lasso("aab", "b"))
    assert not lasso_member(A, Lasso("ab", "a"))
    assert lasso_member(family_anb(0), Lasso("b", "a"))


def test_intro_membership():
    A = family_intro(2)
    assert lasso_member(A, Lasso("aaba", "a"))
    assert not lasso_member(A, Lasso("aab", "b"))
    assert not lasso_member(A, Lasso("aaba", "bba"))


def test_fig1_membership():
    B = family_fig1()
    A = B.to_dba().to_nba()
    assert lasso_member(A, Lasso("ba", "ba"))
    assert not lasso_member(A, Lasso("b", "b"))
    assert lasso_member(A, Lasso("abc", "ab"))
    assert not lasso_member(A, Lasso("c", "d"))
    assert B.run("abd") == BOTTOM


def test_bab_membership():
    A = family_bab()
    for u, v in all_lassos("ab", 4, 3):
        word = "".join(u) + "".join(v) * 4
        assert lasso_member(A, Lasso(u, v)) == ("bab" in word or "bbb" in word)


def test_infinitely_many_alphabet():
    A = infinitely_many("c", "abc")
    assert lasso_member(A, Lasso("", "ac")) and not lasso_member(A, Lasso("c", "ab"))


def test_random_generators_are_seeded():
    def draw(seed):
        rng = random.Random(seed)
        return random_nba(rng, 4), random_nfa(rng, 3), random_monitor(rng, 5)

    assert draw(3) == draw(3)
    for seed in range(50):
        A = random_nba(random.Random(seed), 3)
        assert 1 <= len(A.states) <= 3
        for u, v in all_lassos("ab", 1, 1):
            assert lasso_accepts(A, u, v) == lasso_member(A, Lasso(u, v))
