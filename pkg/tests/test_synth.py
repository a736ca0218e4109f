import random

import pytest
from hypothesis import given, settings

from conftest import nbas
from oracles import all_lassos, lasso_accepts, monitor_unsound_word, naive_factor_progress
from omegamon import (
    BOTTOM, DBA, NBA, TOP, Lasso, NotMonitorable, NotTotal, NotWeak, Polarity,
    congruential_monitor, dba_state_empty, dba_state_universal, dbm_from_dba, dwa_to_monitor,
    empty_nba, factor_monitor, family_anb, family_fig1, infinitely_many, is_monitorable,
    lasso_member, standard_monitor, universal_nba, verify_monitor,
)
from omegamon.gadgets import random_nba

AB = "ab"


def fig1_nba():
    return family_fig1().to_dba().to_nba()


def random_total_dba(rng, n):
    states = [str(i) for i in range(n)]
    delta = {(s, a): rng.choice(states) for s in states for a in AB}
    final = [s for s in states if rng.random() < 0.5]
    return DBA(AB, states, "0", final, delta)


# -- worked examples ----------------------------------------------------------


def test_fig1_sizes():
    A = fig1_nba()
    assert len(dbm_from_dba(family_fig1().to_dba())) == 4
    assert len(congruential_monitor(A)[0]) == 3
    assert len(standard_monitor(A)) == 2


def test_fig1_congruential_merges_0_and_1():
    R, table = congruential_monitor(fig1_nba())
    assert table.class_of["{0}"] == table.class_of["{1}"]
    assert table.class_of["{2}"] != table.class_of["{0}"]
    assert table.bottom == BOTTOM and table.top is None
    assert table.representatives[table.class_of["{2}"]] == ("c",)
    assert R.run("d") == BOTTOM


def test_fig1_dbm_is_itself():
    B = dbm_from_dba(family_fig1().to_dba())
    assert set(B.states) == {"0", "1", "2", BOTTOM}
    assert B.final == {"1", "2"}
    assert B.top is None


@pytest.mark.parametrize("n", range(6))
def test_anb_sizes_coincide(n):
    A = family_anb(n)
    R, _ = congruential_monitor(A)
    assert len(R) == n + 4
    assert len(dbm_from_dba(A.to_dba())) == n + 4
    assert len(standard_monitor(A)) == n + 4


def test_degenerate_languages_give_one_state():
    for A, verdict in ((empty_nba(AB), BOTTOM), (universal_nba(AB), TOP)):
        M = standard_monitor(A)
        R, table = congruential_monitor(A)
        assert M.states == (verdict,) and R.states == (verdict,)
        assert len(table) == 1
    D = DBA(AB, ["x"], "x", ["x"], {("x", "a"): "x", ("x", "b"): "x"})
    B = dbm_from_dba(D)
    assert B.states == (TOP,) and B.final == {TOP}


def test_not_monitorable_raises():
    with pytest.raises(NotMonitorable):
        standard_monitor(infinitely_many("a", AB))
    with pytest.raises(NotMonitorable):
        congruential_monitor(infinitely_many("a", AB))
    with pytest.raises(NotMonitorable):
        dbm_from_dba(infinitely_many("a", AB).to_dba())


def test_dbm_completes_partial_dba():
    # a^ω, partial on b
    D = DBA(AB, ["x"], "x", ["x"], {("x", "a"): "x"})
    B = dbm_from_dba(D)
    assert B.run("b") == BOTTOM and B.run("aaa") == "x"


# -- residual predicates on DBA states -------------------------------------------


def test_dba_state_predicates():
    D = family_fig1().to_dba()
    assert dba_state_empty(D, BOTTOM)
    assert not dba_state_empty(D, "2") and not dba_state_universal(D, "2")
    loop = DBA(AB, ["x"], "x", ["x"], {("x", "a"): "x", ("x", "b"): "x"})
    assert dba_state_universal(loop, "x")
    with pytest.raises(KeyError):
        dba_state_empty(D, "nope")


def test_dba_state_predicates_match_lassos():
    rng = random.Random(4)
    for _ in range(60):
        D = random_total_dba(rng, rng.randint(1, 4))
        for p in D.states:
            A = D.to_nba().with_initial([p])
            outcomes = {lasso_accepts(A, u, v) for u, v in all_lassos(AB, 3, 3)}
            if dba_state_empty(D, p):
                assert outcomes == {False}
            if dba_state_universal(D, p):
                assert outcomes == {True}
            if outcomes == {True, False}:
                assert not dba_state_empty(D, p) and not dba_state_universal(D, p)


# -- factor monitors --------------------------------------------------------------


def test_factor_monitor_sizes():
    bb = factor_monitor("bb", Polarity.FORBIDDEN, AB)
    assert bb.states == ("0", "1", BOTTOM)
    a = factor_monitor("a", "guaranteed", AB)
    assert a.states == ("0", TOP) and a.top == TOP and a.bottom is None
    assert len(factor_monitor("abab", "forbidden", AB)) == 5


def test_factor_monitor_border_progress():
    M = factor_monitor("aba", Polarity.FORBIDDEN, AB)
    assert M.run("ab") == "2"
    assert M.run("abab") == BOTTOM  # aba occurred
    assert M.run("abb") == "0"
    assert M.run("aab") == "2"


def test_factor_monitor_matches_naive_scan():
    rng = random.Random(2)
    f = "aba"
    M = factor_monitor(f, Polarity.FORBIDDEN, AB)
    for _ in range(500):
        u = "".join(rng.choice(AB) for _ in range(rng.randint(0, 12)))
        k = naive_factor_progress(f, u)
        assert M.run(u) == (BOTTOM if k == len(f) else str(k))


def test_factor_monitor_errors():
    with pytest.raises(ValueError):
        factor_monitor("", "forbidden", AB)
    with pytest.raises(ValueError):
        factor_monitor("ac", "forbidden", AB)


def test_factor_monitor_is_a_monitor_for_its_language():
    # never bb: state c is a non-final sink
    never_bb = NBA(AB, ["0", "1", "c"], ["0"], ["0", "1"],
                   {("0", "a", "0"), ("0", "b", "1"), ("1", "a", "0"), ("1", "b", "c"),
                    ("c", "a", "c"), ("c", "b", "c")})
    assert verify_monitor(factor_monitor("bb", "forbidden", AB), never_bb)
    some_a = NBA(AB, ["0", "1"], ["0"], ["1"],
                 {("0", "b", "0"), ("0", "a", "1"), ("1", "a", "1"), ("1", "b", "1")})
    assert verify_monitor(factor_monitor("a", "guaranteed", AB), some_a)


# -- weak DBA collapse --------------------------------------------------------------


def test_dwa_examples():
    single = DBA("a", ["0"], "0", ["0"], {("0", "a"): "0"})
    assert dwa_to_monitor(single).states == (TOP,)
    two = DBA("a", ["0", "1"], "0", ["1"], {("0", "a"): "1", ("1", "a"): "1"})
    M = dwa_to_monitor(two)
    assert M.states == ("0", TOP)


def a_before_b():
    return DBA(AB, ["0", "y", "n"], "0", ["y"],
               {("0", "a"): "y", ("0", "b"): "n", ("y", "a"): "y", ("y", "b"): "y",
                ("n", "a"): "n", ("n", "b"): "n"})


def test_dwa_clopen_verdicts_on_random_prefixes():
    D = a_before_b()
    M = dwa_to_monitor(D)
    A = D.to_nba()
    assert verify_monitor(M, A)
    rng = random.Random(6)
    for _ in range(100):
        u = "".join(rng.choice(AB) for _ in range(rng.randint(1, 6)))
        x, y = rng.choice(AB), rng.choice(AB) + rng.choice(AB)
        state = M.run(u)
        assert state in (BOTTOM, TOP)
        assert lasso_accepts(A, u + x, y) == (state == TOP)


def test_dwa_errors():
    mixed = DBA("a", ["0", "1"], "0", ["0"], {("0", "a"): "1", ("1", "a"): "0"})
    with pytest.raises(NotWeak):
        dwa_to_monitor(mixed)
    with pytest.raises(NotTotal):
        dwa_to_monitor(DBA(AB, ["0"], "0", ["0"], {("0", "a"): "0"}))


# -- properties over random instances -------------------------------------------------


def test_size_chain_on_random_dbas():
    rng = random.Random(12)
    checked = 0
    for _ in range(300):
        D = random_total_dba(rng, rng.randint(1, 5))
        A = D.to_nba()
        if not is_monitorable(A):
            continue
        n = len(D.states)
        B = dbm_from_dba(D)
        R, _ = congruential_monitor(A)
        M = standard_monitor(A)
        assert n >= len(B) >= len(R) >= len(M)
        checked += 1
    assert checked > 50


@given(nbas(max_states=4))
@settings(max_examples=40)
def test_synthesized_monitors_are_sound(A):
    if not is_monitorable(A):
        return
    n = len(A.states)
    for M in (standard_monitor(A), congruential_monitor(A)[0]):
        assert len(M) <= 2 ** n
        assert M.reachable() == set(M.states)
        assert verify_monitor(M, A)
        assert monitor_unsound_word(M, A, 3) is None


def test_dbm_preserves_language():
    rng = random.Random(13)
    checked = 0
    for _ in range(200):
        D = random_total_dba(rng, rng.randint(1, 4))
        try:
            B = dbm_from_dba(D)
        except NotMonitorable:
            continue
        checked += 1
        A, C = D.to_nba(), B.to_dba().to_nba()
        for u, v in all_lassos(AB, 3, 3):
            assert lasso_member(C, Lasso(u, v)) == lasso_member(A, Lasso(u, v))
        assert verify_monitor(B, A)
    assert checked > 50


def test_congruential_classes_are_a_right_congruence():
    rng = random.Random(14)
    for _ in range(60):
        A = random_nba(rng, 4)
        if not is_monitorable(A):
            continue
        R, table = congruential_monitor(A)
        for c, rep in table.representatives.items():
            assert R.run(rep) == c
