"""Fixture automata: the NFA-universality gadgets, the worked example
families, and seeded random generators for property suites."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .automata import BOTTOM, DBM, NBA, Alphabet, Monitor, TOP, _check_alphabet, _reaches


@dataclass(frozen=True)
class NFA:
    """Finite-word automaton with one initial state."""

    alphabet: Alphabet
    states: tuple
    initial: str
    final: frozenset
    transitions: frozenset

    def __post_init__(self):
        object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "final", frozenset(self.final))
        object.__setattr__(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        declared = set(self.states)
        if len(declared) != len(self.states):
            raise ValueError("duplicate state names")
        if self.initial not in declared or not self.final <= declared:
            raise ValueError("initial/final states must be declared")
        for p, a, q in self.transitions:
            if p not in declared or q not in declared:
                raise ValueError(f"transition ({p}, {a}, {q}) uses an undeclared state")
            _check_alphabet(self.alphabet, (a,))

    def post(self, states: frozenset, letter: str) -> frozenset:
        return frozenset(q for p, a, q in self.transitions if a == letter and p in states)

    def accepts(self, word) -> bool:
        current = frozenset([self.initial])
        for a in word:
            current = self.post(current, a)
        return bool(current & self.final)


def nfa_is_universal(A: NFA) -> bool:
    """Whether every finite word is accepted: all reachable subsets meet F."""
    start = frozenset([A.initial])
    seen = {start}
    todo = deque([start])
    while todo:
        S = todo.popleft()
        if not S & A.final:
            return False
        for a in A.alphabet:
            T = A.post(S, a)
            if T not in seen:
                seen.add(T)
                todo.append(T)
    return True


GADGET_D, GADGET_E, GADGET_F, GADGET_SINK = "@d", "@e", "@f", "@sink"


def nfa_complete(A: NFA) -> NFA:
    """Same language with a successor on every letter from every state; a
    non-final sink is added only if some transition is missing."""
    have = {(p, a) for p, a, _ in A.transitions}
    missing = [(p, a) for p in A.states for a in A.alphabet if (p, a) not in have]
    if not missing:
        return A
    if GADGET_SINK in A.states:
        raise ValueError(f"NFA state name {GADGET_SINK!r} clashes with the completion sink")
    trans = set(A.transitions) | {(p, a, GADGET_SINK) for p, a in missing}
    trans |= {(GADGET_SINK, a, GADGET_SINK) for a in A.alphabet}
    return NFA(A.alphabet, A.states + (GADGET_SINK,), A.initial, A.final, trans)


def _gadget(A: NFA, fresh: str, final: Sequence[str]) -> NBA:
    if fresh in A.alphabet:
        raise ValueError(f"fresh letter {fresh!r} already in the NFA alphabet")
    for s in (GADGET_D, GADGET_E, GADGET_F):
        if s in A.states:
            raise ValueError(f"NFA state name {s!r} clashes with a gadget state")
    # a prefix without any run would make every extension fail
    A = nfa_complete(A)
    gamma = tuple(A.alphabet)
    sigma = gamma + (fresh,)
    d, e, f = GADGET_D, GADGET_E, GADGET_F
    trans = set(A.transitions)
    for q in A.states:
        trans.add((q, fresh, f if q in A.final else d))
    for a in gamma:
        trans.add((d, a, e))
        trans.add((e, a, e))
    trans.add((e, fresh, d))
    trans.add((d, fresh, d))
    for c in sigma:
        trans.add((f, c, f))
    return NBA(sigma, A.states + (d, e, f), [A.initial], final, trans)


def gadget_b1(A: NFA, fresh: str = "b") -> NBA:
    """Büchi automaton that is always monitorable and is live exactly when
    ``A`` is universal."""
    return _gadget(A, fresh, [GADGET_F])


def gadget_b2(A: NFA, fresh: str = "b") -> NBA:
    """Büchi automaton that is always live and is monitorable exactly when
    ``A`` is universal."""
    return _gadget(A, fresh, [GADGET_D, GADGET_F])


def family_anb(n: int) -> NBA:
    """Deterministic automaton for ``a^n b Σ^ω`` minus ``Σ* bb Σ^ω`` over {a, b}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    states = [f"p{i}" for i in range(n + 1)] + ["s", "t"]
    trans = {(f"p{i}", "a", f"p{i + 1}") for i in range(n)}
    trans |= {(f"p{n}", "b", "s"), ("s", "a", "t"), ("t", "a", "t"), ("t", "b", "s")}
    return NBA("ab", states, ["p0"], states, trans)


def family_intro(n: int) -> NBA:
    """Deterministic automaton for ``a^n ba Σ^ω`` minus ``Σ* bb Σ^ω`` over {a, b}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    states = [f"p{i}" for i in range(n + 1)] + ["b", "ba", "s"]
    trans = {(f"p{i}", "a", f"p{i + 1}") for i in range(n)}
    trans |= {(f"p{n}", "b", "b"), ("b", "a", "ba"), ("ba", "a", "ba"), ("ba", "b", "s"),
              ("s", "a", "ba")}
    return NBA("ab", states, ["p0"], states, trans)


def family_fig1() -> DBM:
    """Four-state deterministic Büchi monitor over {a, b, c, d} accepting
    ``(b*a)^ω ∪ {a,b}* c {a,b,c}^ω``; every d leads to ⊥."""
    delta = {
        ("0", "a"): "1", ("0", "b"): "0", ("0", "c"): "2", ("0", "d"): BOTTOM,
        ("1", "a"): "1", ("1", "b"): "0", ("1", "c"): "2", ("1", "d"): BOTTOM,
        ("2", "a"): "2", ("2", "b"): "2", ("2", "c"): "2", ("2", "d"): BOTTOM,
    }
    delta.update({(BOTTOM, x): BOTTOM for x in "abcd"})
    return DBM("abcd", ["0", "1", "2", BOTTOM], "0", delta, bottom=BOTTOM, final={"1", "2"})


def family_bab() -> NBA:
    """Nondeterministic automaton for ``Σ*(bab ∪ bbb)Σ^ω`` over {a, b}."""
    states = ["w", "b", "ba", "bb", "acc"]
    trans = {("w", "a", "w"), ("w", "b", "w"), ("w", "b", "b"),
             ("b", "a", "ba"), ("b", "b", "bb"), ("ba", "b", "acc"), ("bb", "b", "acc"),
             ("acc", "a", "acc"), ("acc", "b", "acc")}
    return NBA("ab", states, ["w"], ["acc"], trans)


def infinitely_many(letter: str = "a", alphabet: Sequence[str] = "ab") -> NBA:
    """Two-state deterministic automaton for "infinitely many ``letter``"."""
    trans = set()
    for x in alphabet:
        trans.add(("0", x, "1" if x == letter else "0"))
        trans.add(("1", x, "1" if x == letter else "0"))
    return NBA(alphabet, ["0", "1"], ["0"], ["1"], trans)


# -- random generators ------------------------------------------------------


def random_nba(rng: random.Random, max_states: int = 5, alphabet: Sequence[str] = "ab",
               density: Optional[float] = None) -> NBA:
    n = rng.randint(1, max_states)
    states = [str(i) for i in range(n)]
    p = density if density is not None else rng.uniform(0.15, 0.55)
    trans = {(s, a, t) for s in states for a in alphabet for t in states if rng.random() < p}
    initial = [s for s in states if rng.random() < 0.3] or [states[0]]
    final = [s for s in states if rng.random() < 0.4]
    return NBA(alphabet, states, initial, final, trans)


def random_nfa(rng: random.Random, max_states: int = 4, alphabet: Sequence[str] = ("a0", "a1"),
               density: Optional[float] = None) -> NFA:
    n = rng.randint(1, max_states)
    states = [f"q{i}" for i in range(n)]
    p = density if density is not None else rng.uniform(0.2, 0.7)
    trans = {(s, a, t) for s in states for a in alphabet for t in states if rng.random() < p}
    final = [s for s in states if rng.random() < 0.6]
    return NFA(alphabet, states, states[0], final, trans)


def random_monitor(rng: random.Random, max_states: int = 8, alphabet: Sequence[str] = "ab") -> Monitor:
    """Random monitor in which every declared state, reachable or not, can
    reach a verdict."""
    while True:
        n = rng.randint(1, max_states)
        kind = rng.choice(["bottom", "top", "both"]) if n > 1 else rng.choice(["bottom", "top"])
        verdicts = {"bottom": [BOTTOM], "top": [TOP], "both": [BOTTOM, TOP]}[kind]
        if len(verdicts) > n:
            continue
        ordinary = [str(i) for i in range(n - len(verdicts))]
        states = ordinary + verdicts
        delta = {(v, a): v for v in verdicts for a in alphabet}
        for s in ordinary:
            for a in alphabet:
                delta[s, a] = rng.choice(states)
        if _reaches(states, lambda p: [delta[p, a] for a in alphabet], verdicts) != set(states):
            continue
        try:
            return Monitor(alphabet, states, states[0], delta,
                           BOTTOM if BOTTOM in verdicts else None,
                           TOP if TOP in verdicts else None)
        except ValueError:
            continue
