"""Monitor morphisms, verification of monitors against an NBA, and the
exhaustive search for smallest monitors."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional

from .automata import BOTTOM, NBA, TOP, Monitor, NotMonitorable, ResidualOracle


@dataclass(frozen=True, eq=False)
class MonitorMorphism:
    source: Monitor
    target: Monitor
    mapping: Mapping


def check_morphism(m: MonitorMorphism) -> bool:
    """Initial, ⊥ and ⊤ are preserved and the map commutes with every letter.

    Raises ValueError when the map is not defined on every source state.
    """
    src, dst, phi = m.source, m.target, m.mapping
    missing = [p for p in src.states if p not in phi]
    if missing:
        raise ValueError(f"map undefined on {missing}")
    if tuple(src.alphabet) != tuple(dst.alphabet):
        return False
    if any(q not in dst.states for q in phi.values()):
        return False
    if phi[src.initial] != dst.initial:
        return False
    for v, w in ((src.bottom, dst.bottom), (src.top, dst.top)):
        if v is not None and (w is None or phi[v] != w):
            return False
    return all(phi[src.delta[p, a]] == dst.delta[phi[p], a]
               for p in src.states for a in src.alphabet)


def is_surjective(m: MonitorMorphism) -> bool:
    return set(m.mapping[p] for p in m.source.states) >= set(m.target.states)


def is_epimorphism(m: MonitorMorphism) -> bool:
    return check_morphism(m) and is_surjective(m)


def compose(first: MonitorMorphism, second: MonitorMorphism) -> MonitorMorphism:
    """``second ∘ first``."""
    return MonitorMorphism(first.source, second.target,
                           {p: second.mapping[q] for p, q in first.mapping.items()})


def forced_map(src: Monitor, dst: Monitor) -> Optional[dict]:
    """The only candidate map on the reachable part of ``src``: follow
    transitions from the pair of initial states.  None on a conflict."""
    if tuple(src.alphabet) != tuple(dst.alphabet):
        return None
    phi = {src.initial: dst.initial}
    todo = deque([src.initial])
    while todo:
        p = todo.popleft()
        for a in src.alphabet:
            p2, q2 = src.delta[p, a], dst.delta[phi[p], a]
            got = phi.get(p2)
            if got is None:
                phi[p2] = q2
                todo.append(p2)
            elif got != q2:
                return None
    return phi


def find_epimorphism(src: Monitor, dst: Monitor) -> Optional[MonitorMorphism]:
    """The epimorphism from ``src`` onto ``dst`` if there is one.

    Both monitors are first restricted to their reachable states; a morphism
    from a reachable monitor is determined by its value on the initial state.
    """
    src, dst = src.trimmed(), dst.trimmed()
    phi = forced_map(src, dst)
    if phi is None:
        return None
    m = MonitorMorphism(src, dst, phi)
    return m if is_epimorphism(m) else None


def monitors_isomorphic(M1: Monitor, M2: Monitor) -> bool:
    """A bijective morphism exists between the reachable parts, and its
    inverse is a morphism too."""
    M1, M2 = M1.trimmed(), M2.trimmed()
    if len(M1) != len(M2):
        return False
    phi = forced_map(M1, M2)
    if phi is None or len(set(phi.values())) != len(phi):
        return False
    inv = {q: p for p, q in phi.items()}
    return check_morphism(MonitorMorphism(M1, M2, phi)) and \
        check_morphism(MonitorMorphism(M2, M1, inv))


# -- verification -----------------------------------------------------------


def _residual_flags(A: NBA, oracle: ResidualOracle) -> tuple:
    """Reachable subsets of ``A`` with their transitions and, per subset,
    whether the residual language is empty and whether it is universal."""
    start = A.initial_mask
    order, seen = [start], {start}
    todo = deque(order)
    step = {}
    while todo:
        S = todo.popleft()
        for k in range(len(A.alphabet)):
            T = A.post_mask(S, k)
            step[S, k] = T
            if T not in seen:
                seen.add(T)
                order.append(T)
                todo.append(T)
    empty = {S: oracle.is_empty(S) for S in order}
    universal = {S: (not empty[S]) and oracle.is_universal(S) for S in order}
    return start, step, empty, universal


def verify_monitor(M: Monitor, A: NBA, oracle: Optional[ResidualOracle] = None) -> bool:
    """Whether ``M`` is a monitor for ``L(A)``.

    Runs ``M`` alongside the subset construction of ``A``.  A word u that
    leads to ⊥ must have an empty residual (uΣ^ω ∩ L = ∅); one that leads
    to ⊤ must have a universal residual (uΣ^ω ⊆ L).
    """
    if tuple(M.alphabet) != tuple(A.alphabet):
        raise ValueError("alphabets differ")
    try:
        Monitor(M.alphabet, M.states, M.initial, M.delta, M.bottom, M.top)
    except ValueError:
        return False
    oracle = oracle or ResidualOracle(A)
    start, step, empty, universal = _residual_flags(A, oracle)
    return _pairs_ok(M.initial, M.delta, M.bottom, M.top, M.alphabet, start, step,
                     empty, universal)


def _pairs_ok(initial, delta, bottom, top, alphabet, start, step, empty, universal) -> bool:
    """Check every reachable (monitor state, subset) pair.  Transitions
    missing from ``delta`` are skipped, so partial tables can be pruned."""
    seen = {(initial, start)}
    todo = [(initial, start)]
    while todo:
        m, S = todo.pop()
        if m == bottom and not empty[S]:
            return False
        if m == top and not universal[S]:
            return False
        for k, a in enumerate(alphabet):
            m2 = delta.get((m, a))
            if m2 is None:
                continue
            pair = (m2, step[S, k])
            if pair not in seen:
                seen.add(pair)
                todo.append(pair)
    return True


# -- exhaustive search ------------------------------------------------------

MAX_SEARCH_LETTERS = 3
MAX_SEARCH_STATES = 5


def _candidates(alphabet: tuple, k: int, verdicts: tuple, admissible):
    """Transition tables of monitors with exactly ``k`` states in canonical
    form, as ``(delta, initial)``.

    Ordinary states are named 0, 1, ... in order of discovery; the table is
    filled row by row and each entry tries, in order, the known ordinary
    states, a fresh one, then ⊥ and ⊤.  Every isomorphism class of monitors
    whose ordinary states are all reachable appears once.  Branches whose
    partial table fails ``admissible`` are cut.
    """
    ordinary = k - len(verdicts)
    if ordinary < 0:
        return
    if ordinary == 0:
        if len(verdicts) == 1:
            v = verdicts[0]
            yield {(v, a): v for a in alphabet}, v
        return
    delta = {(v, a): v for v in verdicts for a in alphabet}
    cells = [(str(i), a) for i in range(ordinary) for a in alphabet]

    def rec(pos: int, discovered: int):
        if discovered < ordinary and pos >= discovered * len(alphabet):
            return  # the next row belongs to a state nobody can reach
        if pos == len(cells):
            yield dict(delta), "0"
            return
        cell = cells[pos]
        options = [str(i) for i in range(discovered)]
        if discovered < ordinary:
            options.append(str(discovered))
        options.extend(verdicts)
        for t in options:
            delta[cell] = t
            if admissible(delta):
                yield from rec(pos + 1, discovered + (t == str(discovered)))
        del delta[cell]

    yield from rec(0, 1)


def minimal_monitors(A: NBA, k_max: int, oracle: Optional[ResidualOracle] = None) -> list:
    """All monitors for ``L(A)`` of the least size ``k ≤ k_max``, one per
    isomorphism class; empty if there is none within the bound.

    Candidates are tried with ⊥ only, then ⊤ only, then both.  Partial
    tables are pruned as soon as some word reaches a verdict the language
    does not justify.
    """
    alphabet = tuple(A.alphabet)
    if len(alphabet) > MAX_SEARCH_LETTERS or k_max > MAX_SEARCH_STATES:
        raise ValueError(f"exhaustive search supports at most {MAX_SEARCH_LETTERS} letters "
                         f"and {MAX_SEARCH_STATES} states")
    oracle = oracle or ResidualOracle(A)
    start, step, empty, universal = _residual_flags(A, oracle)
    for k in range(1, k_max + 1):
        found = []
        for verdicts in ((BOTTOM,), (TOP,), (BOTTOM, TOP)):
            bottom = BOTTOM if BOTTOM in verdicts else None
            top = TOP if TOP in verdicts else None

            def admissible(delta, initial="0"):
                return _pairs_ok(initial, delta, bottom, top, alphabet, start, step,
                                 empty, universal)

            for delta, initial in _candidates(alphabet, k, verdicts, admissible):
                if not admissible(delta, initial):
                    continue
                states = sorted({p for p, _ in delta}, key=_state_key)
                try:
                    M = Monitor(alphabet, states, initial, delta, bottom, top)
                except NotMonitorable:
                    continue
                if len(M.reachable()) != k:
                    continue
                if not any(monitors_isomorphic(M, N) for N in found):
                    found.append(M)
        if found:
            return found
    return []


def _state_key(s: str):
    return (1, s) if s in (BOTTOM, TOP) else (0, int(s))
