"""Safety automata for the closure of L, the closure of its complement, and
the boundary of L.

The closure automaton is the subset construction over the live part of the
input; the complement closure is the subset construction over the whole
input with universal subsets removed.  The two are deliberately built from
different automata and must not be merged into one construction.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .automata import NBA, DBA, ResidualOracle, live_mask, subset_name

CLOSURE = "closure"
COMPLEMENT_CLOSURE = "complement-closure"
BOUNDARY = "boundary"


@dataclass(frozen=True)
class ClosureDBA:
    """All-final deterministic automaton with a partial transition function.

    Undefined transitions stand for an implicit rejecting sink.  ``initial``
    is None exactly when the automaton has no states (it then accepts ∅).
    ``members`` records, per state, the subset of input states it stands for.
    """

    alphabet: tuple
    states: tuple
    initial: Optional[str]
    delta: Mapping
    kind: str
    members: Mapping = field(default_factory=dict, compare=False)
    universe: tuple = field(default=(), compare=False)

    def __hash__(self):
        return hash((self.alphabet, self.states, self.initial, self.kind,
                     frozenset(self.delta.items())))

    def __len__(self):
        return len(self.states)

    def step(self, state: Optional[str], letter: str) -> Optional[str]:
        if state is None:
            return None
        return self.delta.get((state, letter))

    def run(self, word) -> Optional[str]:
        state = self.initial
        for a in word:
            state = self.step(state, a)
        return state

    def to_dba(self) -> DBA:
        if self.initial is None:
            raise ValueError("automaton has no states")
        return DBA(self.alphabet, self.states, self.initial, self.states, self.delta)

    def to_nba(self) -> NBA:
        return NBA(self.alphabet, self.states,
                   [] if self.initial is None else [self.initial], self.states,
                   {(p, a, q) for (p, a), q in self.delta.items()})

    def is_total(self) -> bool:
        return all((p, a) in self.delta for p in self.states for a in self.alphabet)


def _subset_dfa(A: NBA, start: int, keep, kind: str) -> ClosureDBA:
    """BFS subset construction from ``start``; subsets failing ``keep`` are
    dropped and transitions into them left undefined."""
    alphabet = tuple(A.alphabet)
    if not keep(start):
        return ClosureDBA(alphabet, (), None, {}, kind)
    order = [start]
    seen = {start}
    todo = deque(order)
    edges = {}
    while todo:
        S = todo.popleft()
        for k, a in enumerate(alphabet):
            T = A.post_mask(S, k)
            if not keep(T):
                continue
            edges[S, a] = T
            if T not in seen:
                seen.add(T)
                order.append(T)
                todo.append(T)
    name = {S: subset_name(A.states, S) for S in order}
    return ClosureDBA(
        alphabet,
        tuple(name[S] for S in order),
        name[start],
        {(name[S], a): name[T] for (S, a), T in edges.items()},
        kind,
        {name[S]: A.unmask(S) for S in order},
        tuple(A.states),
    )


def closure_dba(A: NBA) -> ClosureDBA:
    """Safety automaton for the topological closure of ``L(A)``."""
    live = live_mask(A)
    return _subset_dfa(A, A.initial_mask & live, lambda S: S & live != 0, CLOSURE)


def complement_closure_dba(A: NBA, oracle: Optional[ResidualOracle] = None) -> ClosureDBA:
    """Safety automaton for the closure of the complement of ``L(A)``."""
    oracle = oracle or ResidualOracle(A)
    return _subset_dfa(A, A.initial_mask, lambda S: not oracle.is_universal(S),
                       COMPLEMENT_CLOSURE)


def product_closure(left: ClosureDBA, right: ClosureDBA, kind: str = BOUNDARY) -> ClosureDBA:
    """Intersection of two safety automata, defined where both components are."""
    alphabet = left.alphabet
    if left.initial is None or right.initial is None:
        return ClosureDBA(alphabet, (), None, {}, kind)
    start = (left.initial, right.initial)
    order, seen = [start], {start}
    todo = deque(order)
    edges = {}
    while todo:
        p, q = todo.popleft()
        for a in alphabet:
            p2, q2 = left.step(p, a), right.step(q, a)
            if p2 is None or q2 is None:
                continue
            edges[(p, q), a] = (p2, q2)
            if (p2, q2) not in seen:
                seen.add((p2, q2))
                order.append((p2, q2))
                todo.append((p2, q2))
    name = {pq: f"{pq[0]}|{pq[1]}" for pq in order}
    return ClosureDBA(
        alphabet, tuple(name[pq] for pq in order), name[start],
        {(name[pq], a): name[t] for (pq, a), t in edges.items()}, kind,
    )


def boundary_dba(A: NBA, oracle: Optional[ResidualOracle] = None) -> ClosureDBA:
    """Safety automaton for the boundary: closure(L) ∩ closure(complement)."""
    return product_closure(closure_dba(A), complement_closure_dba(A, oracle), BOUNDARY)


def safety_nowhere_dense(C: ClosureDBA) -> bool:
    """True iff the safety language of ``C`` contains no cone ``uΣ^ω``,
    i.e. every reachable state can still run into an undefined transition."""
    if C.initial is None:
        return True
    partial = {p for p in C.states if any((p, a) not in C.delta for a in C.alphabet)}
    pred = {p: [] for p in C.states}
    for (p, _), q in C.delta.items():
        pred[q].append(p)
    escape = set(partial)
    todo = deque(partial)
    while todo:
        q = todo.popleft()
        for p in pred[q]:
            if p not in escape:
                escape.add(p)
                todo.append(p)
    return escape >= set(C.states)


def minimize_closure(C: ClosureDBA) -> ClosureDBA:
    """Minimal all-final automaton for the same safety language.

    Moore refinement on the automaton completed by the implicit sink.  A
    class is named by the union of its member subsets when that name is
    unique, otherwise by its first member.
    """
    if C.initial is None:
        return C
    block = {p: 0 for p in C.states}
    count = 1
    while True:
        sigs, new = {}, {}
        for p in C.states:
            sig = (block[p],) + tuple(
                None if C.step(p, a) is None else block[C.step(p, a)] for a in C.alphabet)
            new[p] = sigs.setdefault(sig, len(sigs))
        if len(sigs) == count:
            break
        block, count = new, len(sigs)
    classes = {}
    for p in C.states:
        classes.setdefault(block[p], []).append(p)
    # BFS order from the initial class keeps naming deterministic
    order = []
    seen = set()
    todo = deque([block[C.initial]])
    seen.add(block[C.initial])
    while todo:
        b = todo.popleft()
        order.append(b)
        rep = classes[b][0]
        for a in C.alphabet:
            q = C.step(rep, a)
            if q is not None and block[q] not in seen:
                seen.add(block[q])
                todo.append(block[q])
    unions = {b: frozenset().union(*(C.members.get(p, frozenset()) for p in classes[b]))
              for b in order}
    names = {b: "{" + ",".join(s for s in C.universe if s in unions[b]) + "}" for b in order}
    if not C.universe or len(set(names.values())) != len(names):
        names = {b: classes[b][0] for b in order}
    members = {names[b]: unions[b] for b in order}
    delta = {}
    for b in order:
        rep = classes[b][0]
        for a in C.alphabet:
            q = C.step(rep, a)
            if q is not None:
                delta[names[b], a] = names[block[q]]
    return ClosureDBA(C.alphabet, tuple(names[b] for b in order), names[block[C.initial]],
                      delta, C.kind, members, C.universe)

