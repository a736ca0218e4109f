import os
import random

import pytest
from hypothesis import given

from conftest import nbas
from omegamon import (
    DBA, DBM, NBA, NFA, AutFormatError, Monitor, emit_aut, factor_monitor, family_bab,
    family_fig1, parse_aut, read_autfile, standard_monitor,
)
from omegamon.autfile import bfs_order, kind_of
from omegamon.gadgets import random_monitor, random_nfa

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def golden(name):
    with open(os.path.join(GOLDEN, name), encoding="utf-8") as fh:
        return fh.read()


def same(x, y) -> bool:
    """Equal up to the order in which states are listed."""
    return type(x) is type(y) and set(x.states) == set(y.states) and emit_aut(x) == emit_aut(y)


def test_golden_fig1():
    assert emit_aut(family_fig1()) == golden("fig1.aut")
    assert parse_aut(golden("fig1.aut")) == family_fig1()


def test_golden_bb_monitor():
    M = factor_monitor("bb", "forbidden", "ab")
    assert emit_aut(M) == golden("bb_monitor.aut")


def test_round_trips():
    samples = [family_fig1(), family_bab(), factor_monitor("aba", "guaranteed", "ab"),
               standard_monitor(family_fig1().to_dba().to_nba()),
               DBA("ab", ["x", "y"], "x", ["y"], {("x", "a"): "y"}),
               NFA(("a0", "a1"), ["q"], "q", ["q"], {("q", "a0", "q")})]
    for value in samples:
        assert same(parse_aut(emit_aut(value)), value)


@given(nbas(max_states=5))
def test_nba_round_trip(A):
    back = parse_aut(emit_aut(A))
    assert same(back, A)
    assert (back.initial, back.final, back.transitions) == (A.initial, A.final, A.transitions)


def test_random_round_trips():
    rng = random.Random(51)
    for _ in range(50):
        for value in (random_monitor(rng, 6), random_nfa(rng, 4)):
            assert same(parse_aut(emit_aut(value)), value)


def test_dwa_kind():
    D = DBA("a", ["0"], "0", ["0"], {("0", "a"): "0"})
    text = emit_aut(D, "dwa")
    assert text.startswith("type: dwa\n")
    assert read_autfile(text).kind == "dwa"
    assert parse_aut(text) == D
    with pytest.raises(ValueError):
        emit_aut(D, "monitor")


def test_kind_of():
    assert kind_of(family_fig1()) == "dbm"
    assert kind_of(family_fig1().to_monitor()) == "monitor"
    assert kind_of(family_bab()) == "nba"
    with pytest.raises(TypeError):
        kind_of("nope")


def test_bfs_order_puts_unreachable_last():
    A = NBA("ab", ["z", "y", "x"], ["x"], [], {("x", "b", "y"), ("x", "a", "x")})
    assert bfs_order(A) == ["x", "y", "z"]


def test_comments_and_blank_lines():
    text = """
    # a comment
    type: nba   # trailing comment
    alphabet: a b

    states: 0 1
    initial: 0
    final: 1
    trans:
    0 a 1  # edge
    1 b 1
    """
    A = parse_aut(text)
    assert A.transitions == {("0", "a", "1"), ("1", "b", "1")}


def test_header_after_transitions():
    text = "type: nba\nalphabet: a\nstates: 0\ntrans:\n0 a 0\ninitial: 0\nfinal: 0\n"
    A = parse_aut(text)
    assert A.initial == {"0"} and A.final == {"0"}


@pytest.mark.parametrize("text, line, fragment", [
    ("type: nba\nalphabet: a\n", None, "missing key 'states'"),
    ("type: xyz\nalphabet: a\nstates: 0\n", 1, "unknown type"),
    ("type: nba\nalphabet: a a\nstates: 0\n", 2, "without repeats"),
    ("type: nba\nalphabet: a\nstates: 0 0\n", 3, "duplicate state"),
    ("type: nba\nalphabet: a\nstates: 0\ncolour: red\n", 4, "unknown key"),
    ("type: nba\nalphabet: a\nstates: 0\nstates: 1\n", 4, "duplicate key"),
    ("type: nba\nalphabet: a\nstates: 0\ninitial: 1\n", 4, "not declared"),
    ("type: nba\nalphabet: a\nstates: 0\ntrans:\n0 a\n", 5, "src letter dst"),
    ("type: nba\nalphabet: a\nstates: 0\ntrans:\n0 b 0\n", 5, "not in the alphabet"),
    ("type: nba\nalphabet: a\nstates: 0\ntrans:\n0 a 9\n", 5, "not declared"),
    ("type: dba\nalphabet: a\nstates: 0 1\ninitial: 0\ntrans:\n0 a 0\n0 a 1\n", 7,
     "second target"),
    ("type: dba\nalphabet: a\nstates: 0 1\ninitial: 0 1\n", 4, "exactly one initial"),
    ("type: monitor\nalphabet: a\nstates: 0\ninitial: 0\n", 1, "bottom or a top"),
    ("type: nba\nalphabet: a\nstates: 0\nbottom: 0\n", 4, "no verdict states"),
    ("type: nba\nalphabet: a\nstates: 0\njunk\n", 4, "key: value"),
    ("type: nba\nalphabet: a\nstates: 0\ntrans: 0 a 0\n", 4, "lines after"),
])
def test_format_errors(text, line, fragment):
    with pytest.raises(AutFormatError) as info:
        parse_aut(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_semantic_errors_become_format_errors():
    # the monitor invariants fail: ⊥ is not absorbing
    text = ("type: monitor\nalphabet: a\nstates: 0 B\ninitial: 0\nbottom: B\n"
            "trans:\n0 a B\nB a 0\n")
    with pytest.raises(AutFormatError):
        parse_aut(text)


def test_unwritable_names():
    A = NBA("ab", ["has space"], ["has space"], [], [])
    with pytest.raises(ValueError):
        emit_aut(A)
    with pytest.raises(ValueError):
        emit_aut(NBA(("a:b",), ["0"], ["0"], [], []))


def test_dbm_final_set_survives():
    text = emit_aut(family_fig1())
    assert "final: 1 2" in text
    B = parse_aut(text)
    assert isinstance(B, DBM) and isinstance(B, Monitor)
