"""Deciders for safety, cosafety, liveness and monitorability, and reset
words for monitors."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automata import (
    BOTTOM, TOP, NBA, Monitor, NotMonitorable, ResidualOracle, _reaches, nba_included, nba_intersect,
    nba_is_empty,
)
from .closure import boundary_dba, closure_dba, complement_closure_dba, safety_nowhere_dense
from .synth import congruential_monitor, standard_monitor, standard_product


def is_safety(A: NBA) -> bool:
    """L(A) is closed: its closure adds nothing."""
    return nba_included(closure_dba(A).to_nba(), A)


def is_cosafety(A: NBA, oracle: Optional[ResidualOracle] = None) -> bool:
    """L(A) is open, i.e. the complement is closed.

    Checked as ``closure(complement) ∩ L = ∅``, which avoids complementing a
    complement.
    """
    return nba_is_empty(nba_intersect(complement_closure_dba(A, oracle).to_nba(), A))


def is_live(A: NBA) -> bool:
    """L(A) is dense: the closure automaton is nonempty and total."""
    C = closure_dba(A)
    return C.initial is not None and C.is_total()


def is_monitorable(A: NBA, oracle: Optional[ResidualOracle] = None) -> bool:
    """Every reachable state of the standard product reaches ⊥ or ⊤."""
    initial, delta = standard_product(A, oracle)
    alphabet = tuple(A.alphabet)
    states = {initial} | set(delta.values())
    verdicts = [v for v in (BOTTOM, TOP) if v in states]
    return _reaches(states, lambda p: [delta[p, a] for a in alphabet], verdicts) >= states


def is_monitorable_boundary(A: NBA, oracle: Optional[ResidualOracle] = None) -> bool:
    """Independent decider: the boundary of L(A) is nowhere dense."""
    return safety_nowhere_dense(boundary_dba(A, oracle))


@dataclass(frozen=True)
class Classification:
    safety: bool
    cosafety: bool
    live: bool
    monitorable: bool
    standard_states: Optional[int] = None
    congruential_states: Optional[int] = None

    def lines(self) -> list:
        out = [f"safety: {str(self.safety).lower()}",
               f"cosafety: {str(self.cosafety).lower()}",
               f"live: {str(self.live).lower()}",
               f"monitorable: {str(self.monitorable).lower()}"]
        if self.standard_states is not None:
            out.append(f"standard-monitor-states: {self.standard_states}")
            out.append(f"congruential-monitor-states: {self.congruential_states}")
        return out


def classify_all(A: NBA) -> Classification:
    oracle = ResidualOracle(A)
    monitorable = is_monitorable(A, oracle)
    sizes = {}
    if monitorable:
        sizes = dict(standard_states=len(standard_monitor(A, oracle)),
                     congruential_states=len(congruential_monitor(A, oracle)[0]))
    return Classification(
        safety=is_safety(A),
        cosafety=is_cosafety(A, oracle),
        live=is_live(A),
        monitorable=monitorable,
        **sizes,
    )


def _shortest_to(M: Monitor, start: str, targets) -> tuple:
    """Shortlex-least word leading from ``start`` into ``targets``."""
    if start in targets:
        return ()
    parent = {start: None}
    todo = deque([start])
    while todo:
        p = todo.popleft()
        for a in M.alphabet:
            q = M.delta[p, a]
            if q in parent:
                continue
            parent[q] = (p, a)
            if q in targets:
                word = []
                while parent[q] is not None:
                    q, a = parent[q]
                    word.append(a)
                return tuple(reversed(word))
            todo.append(q)
    raise NotMonitorable(f"state {start!r} cannot reach a verdict")


def reset_word(M: Monitor) -> tuple:
    """A word sending every state of ``M`` into ⊥ or ⊤.

    ⊥ and ⊤ are treated as one merged state.  States are handled in declared
    order; whenever the word built so far leaves a state undecided, the
    shortest word deciding its image is appended.  The result has length at
    most ``(n-1)^2`` for an n-state monitor.
    """
    targets = set(M.verdicts)
    w = ()
    for q in M.states:
        p = M.run(w, q)
        if p not in targets:
            w = w + _shortest_to(M, p, targets)
    return w
