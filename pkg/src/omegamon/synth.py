"""Monitor constructions: standard, right-congruential, deterministic Büchi
monitor, factor monitor, and the collapse of a weak DBA."""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .automata import (
    BOTTOM, TOP, DBA, DBM, NBA, Monitor, NotMonitorable, ResidualOracle, Alphabet,
    _Graph, _reaches, live_mask, subset_name,
)
from .closure import closure_dba, complement_closure_dba, minimize_closure


class NotWeak(ValueError):
    pass


class NotTotal(ValueError):
    pass


class Polarity(enum.Enum):
    FORBIDDEN = "forbidden"
    GUARANTEED = "guaranteed"


@dataclass(frozen=True)
class QuotientTable:
    """Right-congruence classes of the reachable subsets of an NBA."""

    representatives: dict  # class name -> shortlex-least word reaching it
    class_of: dict  # subset name -> class name
    bottom: Optional[str] = None
    top: Optional[str] = None
    members: dict = field(default_factory=dict)  # class name -> subset names

    def __len__(self):
        return len(self.representatives)


def _bfs_states(initial, alphabet, delta) -> list:
    order, seen = [initial], {initial}
    todo = deque(order)
    while todo:
        p = todo.popleft()
        for a in alphabet:
            q = delta[p, a]
            if q not in seen:
                seen.add(q)
                order.append(q)
                todo.append(q)
    return order


def _finish(alphabet, initial, delta, what: str, cls=Monitor, **extra):
    """Build a monitor from a total table over BFS-ordered states, raising
    NotMonitorable if some state cannot reach a verdict."""
    states = _bfs_states(initial, alphabet, delta)
    delta = {(p, a): delta[p, a] for p in states for a in alphabet}
    verdicts = [v for v in (BOTTOM, TOP) if v in states]
    stuck = set(states) - _reaches(states, lambda p: [delta[p, a] for a in alphabet], verdicts)
    if stuck:
        raise NotMonitorable(f"{what}: states {sorted(stuck)} reach neither ⊥ nor ⊤")
    return cls(alphabet, states, initial, delta,
               BOTTOM if BOTTOM in states else None, TOP if TOP in states else None, **extra)


def standard_product(A: NBA, oracle: Optional[ResidualOracle] = None):
    """Product of the minimal closure automata of L and of its complement.

    Returns ``(initial, delta)`` over the reachable states, with ⊥ where the
    closure of L is undefined and ⊤ where the complement closure is.
    """
    oracle = oracle or ResidualOracle(A)
    alphabet = tuple(A.alphabet)
    left = minimize_closure(closure_dba(A))
    right = minimize_closure(complement_closure_dba(A, oracle))
    if left.initial is None:
        return BOTTOM, {(BOTTOM, a): BOTTOM for a in alphabet}
    if right.initial is None:
        return TOP, {(TOP, a): TOP for a in alphabet}
    name = lambda p, q: f"{p}|{q}"
    initial = name(left.initial, right.initial)
    delta = {}
    todo = deque([(left.initial, right.initial)])
    seen = {initial}
    while todo:
        p, q = todo.popleft()
        src = name(p, q)
        for a in alphabet:
            p2, q2 = left.step(p, a), right.step(q, a)
            if p2 is None:
                dst = BOTTOM
            elif q2 is None:
                dst = TOP
            else:
                dst = name(p2, q2)
                if dst not in seen:
                    seen.add(dst)
                    todo.append((p2, q2))
            delta[src, a] = dst
    for v in (BOTTOM, TOP):
        if any(t == v for t in delta.values()):
            for a in alphabet:
                delta[v, a] = v
    return initial, delta


def standard_monitor(A: NBA, oracle: Optional[ResidualOracle] = None) -> Monitor:
    """Standard monitor: the product of the (minimal) closure automata of
    L and of its complement, with ⊥/⊤ where either side is undefined."""
    initial, delta = standard_product(A, oracle)
    return _finish(A.alphabet, initial, delta, "standard monitor")


def _class_names(classes: list, A: NBA) -> list:
    """Name each class by the union of its subsets, or by its first subset
    when unions collide."""
    names = []
    for subsets in classes:
        union = 0
        for S in subsets:
            union |= S
        names.append(subset_name(A.states, union))
    if len(set(names)) != len(names):
        names = [subset_name(A.states, subsets[0]) for subsets in classes]
    return names


def congruential_monitor(A: NBA, oracle: Optional[ResidualOracle] = None):
    """Monitor whose states are the classes of equal residual languages.

    Returns ``(monitor, table)``.  The class of the empty residual is ⊥, the
    class of the universal residual is ⊤; only reachable classes appear.
    """
    oracle = oracle or ResidualOracle(A)
    alphabet = tuple(A.alphabet)
    start = A.initial_mask
    word = {start: ()}
    order = [start]
    todo = deque(order)
    while todo:
        S = todo.popleft()
        for k, a in enumerate(alphabet):
            T = A.post_mask(S, k)
            if T not in word:
                word[T] = word[S] + (a,)
                order.append(T)
                todo.append(T)

    cls = {}
    classes = []  # subsets per ordinary class, discovery order
    bucket = {}  # fingerprint -> class ids
    for S in order:
        if oracle.is_empty(S):
            cls[S] = BOTTOM
            continue
        if oracle.is_universal(S):
            cls[S] = TOP
            continue
        fp = oracle.fingerprint(S)
        for c in bucket.get(fp, ()):
            if oracle.equivalent(classes[c][0], S):
                cls[S] = c
                classes[c].append(S)
                break
        else:
            cls[S] = len(classes)
            bucket.setdefault(fp, []).append(len(classes))
            classes.append([S])

    names = _class_names(classes, A)
    named = {S: (c if isinstance(c, str) else names[c]) for S, c in cls.items()}
    delta = {}
    for S in order:
        for k, a in enumerate(alphabet):
            delta[named[S], a] = named[A.post_mask(S, k)]
    monitor = _finish(A.alphabet, named[start], delta, "congruential monitor")

    reps = {}
    members = {}
    for S in order:
        c = named[S]
        reps.setdefault(c, word[S])
        members.setdefault(c, []).append(subset_name(A.states, S))
    table = QuotientTable(
        representatives=reps,
        class_of={subset_name(A.states, S): named[S] for S in order},
        bottom=monitor.bottom,
        top=monitor.top,
        members=members,
    )
    return monitor, table


def _reachable_dba(D: DBA) -> list:
    order, seen = [D.initial], {D.initial}
    todo = deque(order)
    while todo:
        p = todo.popleft()
        for a in D.alphabet:
            q = D.step(p, a)
            if q is not None and q not in seen:
                seen.add(q)
                order.append(q)
                todo.append(q)
    return order


def _dba_reachable_from(D: DBA, p: str) -> set:
    seen = {p}
    todo = [p]
    while todo:
        s = todo.pop()
        for a in D.alphabet:
            t = D.step(s, a)
            if t is not None and t not in seen:
                seen.add(t)
                todo.append(t)
    return seen


def dba_state_empty(D: DBA, p: str) -> bool:
    """Whether the residual language of state ``p`` is empty."""
    if p not in D.states:
        raise KeyError(p)
    A = D.to_nba()
    return not live_mask(A) >> A.index[p] & 1


def dba_state_universal(D: DBA, p: str) -> bool:
    """Whether every infinite word is accepted from state ``p``: the part
    reachable from ``p`` is total and every cycle in it meets a final state."""
    if p not in D.states:
        raise KeyError(p)
    part = _dba_reachable_from(D, p)
    if any(D.step(s, a) is None for s in part for a in D.alphabet):
        return False
    nonfinal = [s for s in part if s not in D.final]
    allowed = set(nonfinal)
    index = {s: i for i, s in enumerate(nonfinal)}

    def succ(i):
        s = nonfinal[i]
        for a in D.alphabet:
            t = D.step(s, a)
            if t in allowed:
                yield 0, index[t]

    g = _Graph(range(len(nonfinal)), succ, lambda i: True)
    return not g.good_components()


def dbm_from_dba(D: DBA) -> DBM:
    """Turn a DBA for a monitorable language into a deterministic Büchi
    monitor by merging empty states into ⊥ and universal states into ⊤."""
    alphabet = tuple(D.alphabet)
    states = _reachable_dba(D)
    keep = set(states)
    D = DBA(alphabet, states, D.initial, D.final & keep,
            {k: v for k, v in D.delta.items() if k[0] in keep})
    merged, kept = {}, set()
    for p in states:
        if dba_state_empty(D, p):
            merged[p] = BOTTOM
        elif dba_state_universal(D, p):
            merged[p] = TOP
        else:
            merged[p] = p
            kept.add(p)
    clash = {BOTTOM, TOP} & kept
    if clash:
        raise ValueError(f"state names {sorted(clash)} are reserved for verdicts")
    delta = {}
    for p in states:
        for a in alphabet:
            q = D.step(p, a)
            delta[merged[p], a] = BOTTOM if q is None else merged[q]
    for v in (BOTTOM, TOP):
        if v in delta.values() or v == merged[D.initial]:
            for a in alphabet:
                delta[v, a] = v
    final = {merged[p] for p in D.final if merged[p] != BOTTOM}
    if any(v == TOP for v in delta.values()) or merged[D.initial] == TOP:
        final.add(TOP)
    return _finish(alphabet, merged[D.initial], delta, "DBM", cls=DBM,
                   final=frozenset(final))


def _failure_table(f: Sequence[str]) -> list:
    """``fail[i]`` = length of the longest proper border of ``f[:i]``."""
    fail = [0] * (len(f) + 1)
    k = 0
    for i in range(1, len(f)):
        while k and f[i] != f[k]:
            k = fail[k]
        if f[i] == f[k]:
            k += 1
        fail[i + 1] = k
    return fail


def factor_monitor(f: Sequence[str], polarity, alphabet: Sequence[str]) -> Monitor:
    """Monitor that waits for an occurrence of the factor ``f``.

    States ``0..|f|-1`` record the longest prefix of ``f`` that is a suffix
    of the input; completing ``f`` enters ⊥ (forbidden factor) or ⊤
    (guaranteed factor).  Counting both verdict symbols the size is |f|+2.
    """
    polarity = Polarity(polarity) if not isinstance(polarity, Polarity) else polarity
    alphabet = Alphabet(alphabet)
    f = tuple(f)
    if not f:
        raise ValueError("factor must be nonempty")
    for a in f:
        if a not in alphabet:
            raise ValueError(f"letter {a!r} not in alphabet")
    verdict = BOTTOM if polarity is Polarity.FORBIDDEN else TOP
    m = len(f)
    fail = _failure_table(f)
    names = [str(i) for i in range(m)] + [verdict]
    goto = [{} for _ in range(m)]
    for i in range(m):
        for a in alphabet:
            if f[i] == a:
                goto[i][a] = i + 1
            elif i == 0:
                goto[i][a] = 0
            else:
                goto[i][a] = goto[fail[i]][a]
    delta = {(names[i], a): names[goto[i][a]] for i in range(m) for a in alphabet}
    delta.update({(verdict, a): verdict for a in alphabet})
    kw = {"bottom": verdict} if verdict == BOTTOM else {"top": verdict}
    return Monitor(alphabet, names, names[0], delta, **kw)


def dwa_to_monitor(D: DBA) -> Monitor:
    """Collapse each terminal SCC of a total weak DBA to ⊤ (final) or ⊥."""
    if not D.is_total():
        raise NotTotal("DWA must have a total transition function")
    alphabet = tuple(D.alphabet)
    states = _reachable_dba(D)
    index = {s: i for i, s in enumerate(states)}

    def succ(i):
        for a in alphabet:
            yield 0, index[D.step(states[i], a)]

    g = _Graph(range(len(states)), succ, lambda i: True)
    comp_of = {}
    comps = g.sccs()
    for c, comp in enumerate(comps):
        kinds = {states[g.nodes[v]] in D.final for v in comp}
        if len(kinds) > 1:
            raise NotWeak(f"SCC {sorted(states[g.nodes[v]] for v in comp)} mixes final and non-final")
        for v in comp:
            comp_of[g.nodes[v]] = c
    merged, kept = {}, set()
    for comp in comps:
        terminal = all(comp_of[g.nodes[w]] == comp_of[g.nodes[comp[0]]]
                       for v in comp for _, w in g.edges[v])
        for v in comp:
            s = states[g.nodes[v]]
            if terminal:
                merged[s] = TOP if s in D.final else BOTTOM
            else:
                merged[s] = s
                kept.add(s)
    clash = {BOTTOM, TOP} & kept
    if clash:
        raise ValueError(f"state names {sorted(clash)} are reserved for verdicts")
    delta = {}
    for p in states:
        for a in alphabet:
            delta[merged[p], a] = merged[D.step(p, a)]
    for v in (BOTTOM, TOP):
        if v in merged.values():
            for a in alphabet:
                delta[v, a] = v
    return _finish(alphabet, merged[D.initial], delta, "DWA collapse")
