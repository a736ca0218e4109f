"""Automaton value types and the omega-language oracles built on them.

Every automaton is an immutable value whose states are strings.  Internally
the algorithms index states by their position in ``states`` and encode state
sets as integer bit masks, so emitted automata are named reproducibly.
"""
from __future__ import annotations

import contextlib
import contextvars
import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Optional, Sequence

BOTTOM = "⊥"
TOP = "⊤"

DEFAULT_COMPLEMENT_CAP = 12
_complement_cap = contextvars.ContextVar("complement_cap", default=DEFAULT_COMPLEMENT_CAP)


class ResourceLimitError(RuntimeError):
    """An automaton is too large for an exponential construction."""


class NotMonitorable(ValueError):
    """A construction needs a monitorable language and did not get one."""


def get_complement_cap() -> int:
    return _complement_cap.get()


@contextlib.contextmanager
def complement_cap(limit: int):
    """Temporarily change the state cap for complementation."""
    token = _complement_cap.set(int(limit))
    try:
        yield
    finally:
        _complement_cap.reset(token)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_name(states: Sequence[str], mask: int) -> str:
    return "{" + ",".join(states[i] for i in _bits(mask)) + "}"


class Alphabet(tuple):
    """Ordered, duplicate-free, nonempty tuple of letter names."""

    def __new__(cls, letters: Iterable[str] = ()):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in alphabet {letters}")
        for a in letters:
            if not isinstance(a, str) or not a or any(ch.isspace() for ch in a):
                raise ValueError(f"bad letter name {a!r}")
        return super().__new__(cls, letters)

    @property
    def single_char(self) -> bool:
        return all(len(a) == 1 for a in self)


Word = tuple  # a finite word is a tuple of letter names


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    """Read a finite word: plain concatenation for one-character alphabets,
    otherwise letters separated by dots."""
    text = text.strip()
    if not text:
        return ()
    if "." in text or not all(len(a) == 1 for a in alphabet):
        word = tuple(part for part in text.split(".") if part)
    else:
        word = tuple(text)
    for a in word:
        if a not in alphabet:
            raise ValueError(f"unknown letter {a!r}")
    return word


def format_word(word: Sequence[str], alphabet: Sequence[str]) -> str:
    if all(len(a) == 1 for a in alphabet):
        return "".join(word)
    return ".".join(word)


@dataclass(frozen=True)
class Lasso:
    """The ultimately periodic word ``prefix · period^ω``."""

    prefix: Word
    period: Word

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("lasso period must be nonempty")

    @classmethod
    def parse(cls, text: str, alphabet: Sequence[str]) -> "Lasso":
        if "/" not in text:
            raise ValueError("lasso must be written u/v")
        u, v = text.split("/", 1)
        return cls(parse_word(u, alphabet), parse_word(v, alphabet))

    def letter_at(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def __len__(self):
        return len(self.prefix) + len(self.period)

    def __str__(self):
        return "".join(self.prefix) + "/" + "".join(self.period)


def words(alphabet: Sequence[str], max_len: int, min_len: int = 0) -> Iterator[Word]:
    """All words of length ``min_len..max_len`` in length-lexicographic order."""
    for n in range(min_len, max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def enumerate_lassos(alphabet: Sequence[str], max_prefix: int, max_period: int) -> Iterator[Lasso]:
    for u in words(alphabet, max_prefix):
        for v in words(alphabet, max_period, 1):
            yield Lasso(u, v)


class Verdict(enum.Enum):
    BOTTOM = "bottom"
    TOP = "top"
    INCONCLUSIVE = "inconclusive"

    def __str__(self):
        return self.value


def _check_alphabet(alphabet, letters):
    for a in letters:
        if a not in alphabet:
            raise ValueError(f"letter {a!r} not in alphabet {tuple(alphabet)}")


@dataclass(frozen=True)
class NBA:
    """Nondeterministic Büchi automaton."""

    alphabet: Alphabet
    states: tuple
    initial: frozenset
    final: frozenset
    transitions: frozenset

    def __post_init__(self):
        object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        object.__setattr__(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state names")
        declared = set(self.states)
        if not self.initial <= declared or not self.final <= declared:
            raise ValueError("initial/final states must be declared")
        for p, a, q in self.transitions:
            if p not in declared or q not in declared:
                raise ValueError(f"transition ({p}, {a}, {q}) uses an undeclared state")
            _check_alphabet(self.alphabet, (a,))

    def __len__(self):
        return len(self.states)

    @cached_property
    def index(self) -> dict:
        return {s: i for i, s in enumerate(self.states)}

    @cached_property
    def post(self) -> list:
        """``post[i][k]`` is the mask of successors of state i on letter k."""
        letter = {a: k for k, a in enumerate(self.alphabet)}
        table = [[0] * len(self.alphabet) for _ in self.states]
        for p, a, q in self.transitions:
            table[self.index[p]][letter[a]] |= 1 << self.index[q]
        return table

    @cached_property
    def initial_mask(self) -> int:
        return self.mask(self.initial)

    @cached_property
    def final_mask(self) -> int:
        return self.mask(self.final)

    def mask(self, states: Iterable[str]) -> int:
        m = 0
        for s in states:
            m |= 1 << self.index[s]
        return m

    def unmask(self, mask: int) -> frozenset:
        return frozenset(self.states[i] for i in _bits(mask))

    def post_mask(self, mask: int, k: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= self.post[i][k]
        return out

    def run_mask(self, mask: int, word: Iterable[str]) -> int:
        letter = {a: k for k, a in enumerate(self.alphabet)}
        for a in word:
            mask = self.post_mask(mask, letter[a])
        return mask

    def with_initial(self, initial: Iterable[str]) -> "NBA":
        return NBA(self.alphabet, self.states, initial, self.final, self.transitions)

    def with_final(self, final: Iterable[str]) -> "NBA":
        return NBA(self.alphabet, self.states, self.initial, final, self.transitions)

    def is_deterministic(self) -> bool:
        return len(self.initial) <= 1 and all(
            m & (m - 1) == 0 for row in self.post for m in row
        )

    def to_dba(self) -> "DBA":
        if not self.is_deterministic() or len(self.initial) != 1:
            raise ValueError("automaton is not deterministic with one initial state")
        delta = {(p, a): q for p, a, q in self.transitions}
        return DBA(self.alphabet, self.states, next(iter(self.initial)), self.final, delta)


@dataclass(frozen=True)
class DBA:
    """Deterministic Büchi automaton with a partial transition function."""

    alphabet: Alphabet
    states: tuple
    initial: str
    final: frozenset
    delta: Mapping

    def __post_init__(self):
        object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "final", frozenset(self.final))
        object.__setattr__(self, "delta", dict(self.delta))
        declared = set(self.states)
        if len(declared) != len(self.states):
            raise ValueError("duplicate state names")
        if self.initial not in declared:
            raise ValueError(f"initial state {self.initial!r} is not declared")
        if not self.final <= declared:
            raise ValueError("final states must be declared")
        for (p, a), q in self.delta.items():
            if p not in declared or q not in declared:
                raise ValueError(f"transition ({p}, {a}, {q}) uses an undeclared state")
            _check_alphabet(self.alphabet, (a,))

    def __hash__(self):
        return hash((self.alphabet, self.states, self.initial, self.final,
                     frozenset(self.delta.items())))

    def __len__(self):
        return len(self.states)

    def step(self, state: str, letter: str) -> Optional[str]:
        return self.delta.get((state, letter))

    def run(self, word: Iterable[str], state: Optional[str] = None) -> Optional[str]:
        state = self.initial if state is None else state
        for a in word:
            if state is None:
                return None
            state = self.step(state, a)
        return state

    def is_total(self) -> bool:
        return all((p, a) in self.delta for p in self.states for a in self.alphabet)

    def to_nba(self) -> NBA:
        return NBA(self.alphabet, self.states, {self.initial}, self.final,
                   {(p, a, q) for (p, a), q in self.delta.items()})


def _reaches(states: Sequence[str], succ: Callable[[str], Iterable[str]], targets) -> set:
    """States of ``states`` from which some member of ``targets`` is reachable."""
    pred = {s: [] for s in states}
    for s in states:
        for t in succ(s):
            pred[t].append(s)
    seen = set(t for t in targets if t in pred)
    todo = deque(seen)
    while todo:
        s = todo.popleft()
        for p in pred[s]:
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return seen


@dataclass(frozen=True)
class Monitor:
    """Total deterministic transition system with absorbing verdict states.

    Construction checks totality, that ``bottom``/``top`` are absorbing, that
    at least one of them exists, and that every reachable state can still
    reach a verdict.
    """

    alphabet: Alphabet
    states: tuple
    initial: str
    delta: Mapping
    bottom: Optional[str] = None
    top: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "delta", dict(self.delta))
        declared = set(self.states)
        if len(declared) != len(self.states):
            raise ValueError("duplicate state names")
        if self.initial not in declared:
            raise ValueError(f"initial state {self.initial!r} is not declared")
        if self.bottom is None and self.top is None:
            raise ValueError("a monitor needs a bottom or a top state")
        if self.bottom is not None and self.bottom == self.top:
            raise ValueError("bottom and top must differ")
        for v in (self.bottom, self.top):
            if v is not None and v not in declared:
                raise ValueError(f"verdict state {v!r} is not declared")
        for (p, a), q in self.delta.items():
            if p not in declared or q not in declared:
                raise ValueError(f"transition ({p}, {a}, {q}) uses an undeclared state")
            _check_alphabet(self.alphabet, (a,))
        for p in self.states:
            for a in self.alphabet:
                if (p, a) not in self.delta:
                    raise ValueError(f"transition function undefined on ({p}, {a})")
        for v in self.verdicts:
            if any(self.delta[v, a] != v for a in self.alphabet):
                raise ValueError(f"verdict state {v!r} is not absorbing")
        stuck = self.reachable() - _reaches(self.states, self.successors, self.verdicts)
        if stuck:
            raise NotMonitorable(f"states {sorted(stuck)} cannot reach a verdict")

    def __hash__(self):
        return hash((self.alphabet, self.states, self.initial, self.bottom, self.top,
                     frozenset(self.delta.items())))

    def __len__(self):
        return len(self.states)

    @property
    def verdicts(self) -> tuple:
        return tuple(v for v in (self.bottom, self.top) if v is not None)

    def successors(self, state: str) -> list:
        return [self.delta[state, a] for a in self.alphabet]

    def step(self, state: str, letter: str) -> str:
        return self.delta[state, letter]

    def run(self, word: Iterable[str], state: Optional[str] = None) -> str:
        state = self.initial if state is None else state
        for a in word:
            state = self.delta[state, a]
        return state

    def reachable(self) -> set:
        seen = {self.initial}
        todo = deque(seen)
        while todo:
            p = todo.popleft()
            for q in self.successors(p):
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return seen

    def verdict_of(self, state: str) -> Verdict:
        if state == self.bottom:
            return Verdict.BOTTOM
        if state == self.top:
            return Verdict.TOP
        return Verdict.INCONCLUSIVE

    def trimmed(self) -> "Monitor":
        """Restriction to the states reachable from the initial state."""
        keep = self.reachable()
        return Monitor(
            self.alphabet,
            [s for s in self.states if s in keep],
            self.initial,
            {k: v for k, v in self.delta.items() if k[0] in keep},
            self.bottom if self.bottom in keep else None,
            self.top if self.top in keep else None,
        )

    def verdict_nba(self, verdict: str) -> NBA:
        """NBA for the words that eventually enter ``verdict``."""
        return NBA(self.alphabet, self.states, {self.initial}, {verdict},
                   {(p, a, q) for (p, a), q in self.delta.items()})


@dataclass(frozen=True)
class DBM(Monitor):
    """Deterministic Büchi monitor: one automaton that accepts L and monitors it."""

    final: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "final", frozenset(self.final))
        super().__post_init__()
        if not self.final <= set(self.states):
            raise ValueError("final states must be declared")
        if self.bottom is not None and self.bottom in self.final:
            raise ValueError("bottom must not be final")
        if self.top is not None and self.top not in self.final:
            raise ValueError("top must be final")

    def __hash__(self):
        return hash((Monitor.__hash__(self), self.final))

    def to_dba(self) -> DBA:
        return DBA(self.alphabet, self.states, self.initial, self.final, self.delta)

    def to_monitor(self) -> Monitor:
        return Monitor(self.alphabet, self.states, self.initial, self.delta, self.bottom, self.top)


# ---------------------------------------------------------------------------
# Graph search shared by the oracles.


class _Graph:
    """Explicit graph explored from start nodes; edges carry letter indices."""

    def __init__(self, starts: Iterable[Hashable], succ, accepting: Callable[[Hashable], bool]):
        self.nodes = []
        self.index = {}
        self.edges = []
        self.starts = []
        todo = deque()
        for s in starts:
            if s not in self.index:
                self.index[s] = len(self.nodes)
                self.nodes.append(s)
                self.edges.append(None)
                todo.append(s)
            self.starts.append(self.index[s])
        while todo:
            node = todo.popleft()
            out = []
            for k, t in succ(node):
                j = self.index.get(t)
                if j is None:
                    j = self.index[t] = len(self.nodes)
                    self.nodes.append(t)
                    self.edges.append(None)
                    todo.append(t)
                out.append((k, j))
            self.edges[self.index[node]] = out
        self.accepting = [bool(accepting(n)) for n in self.nodes]

    def sccs(self) -> list:
        """Strongly connected components (iterative Tarjan)."""
        n = len(self.nodes)
        index = [-1] * n
        low = [0] * n
        on_stack = [False] * n
        stack, comps = [], []
        counter = 0
        for root in range(n):
            if index[root] >= 0:
                continue
            work = [(root, 0)]
            index[root] = low[root] = counter
            counter += 1
            stack.append(root)
            on_stack[root] = True
            while work:
                v, i = work[-1]
                edges = self.edges[v]
                if i < len(edges):
                    work[-1] = (v, i + 1)
                    w = edges[i][1]
                    if index[w] < 0:
                        index[w] = low[w] = counter
                        counter += 1
                        stack.append(w)
                        on_stack[w] = True
                        work.append((w, 0))
                    elif on_stack[w]:
                        low[v] = min(low[v], index[w])
                else:
                    work.pop()
                    if work:
                        u = work[-1][0]
                        low[u] = min(low[u], low[v])
                    if low[v] == index[v]:
                        comp = []
                        while True:
                            w = stack.pop()
                            on_stack[w] = False
                            comp.append(w)
                            if w == v:
                                break
                        comps.append(comp)
        return comps

    def good_components(self) -> list:
        """Nontrivial components containing an accepting node."""
        good = []
        for comp in self.sccs():
            if not any(self.accepting[v] for v in comp):
                continue
            if len(comp) > 1 or any(w == comp[0] for _, w in self.edges[comp[0]]):
                good.append(comp)
        return good

    def live_nodes(self) -> set:
        """Nodes from which an accepting cycle is reachable."""
        targets = set()
        for comp in self.good_components():
            targets.update(comp)
        pred = [[] for _ in self.nodes]
        for v, out in enumerate(self.edges):
            for _, w in out:
                pred[w].append(v)
        todo = deque(targets)
        while todo:
            v = todo.popleft()
            for u in pred[v]:
                if u not in targets:
                    targets.add(u)
                    todo.append(u)
        return targets

    def witness(self) -> Optional[tuple]:
        """Letter-index lists ``(u, v)`` of an accepting lasso, if any."""
        good = self.good_components()
        if not good:
            return None
        targets = {}
        for comp in good:
            members = set(comp)
            for v in comp:
                if self.accepting[v]:
                    targets[v] = members
        # shortest stem from a start node to an accepting node on a good cycle
        parent = {}
        todo = deque()
        for s in self.starts:
            if s not in parent:
                parent[s] = None
                todo.append(s)
        hit = None
        while todo:
            v = todo.popleft()
            if v in targets:
                hit = v
                break
            for k, w in self.edges[v]:
                if w not in parent:
                    parent[w] = (v, k)
                    todo.append(w)
        if hit is None:
            return None
        stem = []
        v = hit
        while parent[v] is not None:
            u, k = parent[v]
            stem.append(k)
            v = u
        stem.reverse()
        members = targets[hit]
        back = {}
        todo = deque()
        for k, w in self.edges[hit]:
            if w in members and w not in back:
                back[w] = (hit, k)
                todo.append(w)
        while hit not in back:
            v = todo.popleft()
            for k, w in self.edges[v]:
                if w in members and w not in back:
                    back[w] = (v, k)
                    todo.append(w)
        cycle = []
        v = hit
        while True:
            u, k = back[v]
            cycle.append(k)
            v = u
            if v == hit:
                break
        cycle.reverse()
        return stem, cycle


class _Liveness:
    """Memoized "an accepting cycle is reachable" over a lazily explored graph.

    Each call runs Tarjan over the still unresolved region only.  When a
    component finishes, every edge leaving it ends in a resolved node, so the
    component is live iff it is a good cycle or has an edge into a live node.
    """

    def __init__(self, succ, accepting: Callable[[Hashable], bool]):
        self.succ = succ
        self.accepting = accepting
        self.memo = {}

    def __call__(self, node) -> bool:
        live = self.memo
        if node in live:
            return live[node]
        succ = self.succ
        index, low = {node: 0}, {node: 0}
        stack, on_stack = [node], {node}
        work = [(node, iter(succ(node)))]
        counter = 1
        while work:
            v, it = work[-1]
            advanced = False
            for _, w in it:
                if w in live:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] != index[v]:
                continue
            comp = []
            while True:
                w = stack.pop()
                on_stack.discard(w)
                comp.append(w)
                if w == v:
                    break
            members = set(comp)
            cyclic_accepting = any(self.accepting(w) for w in comp)
            good = False
            for w in comp:
                for _, x in succ(w):
                    if (cyclic_accepting if x in members else live[x]):
                        good = True
                        break
                if good:
                    break
            for w in comp:
                live[w] = good
        return live[node]


def _nba_graph(A: NBA, start_mask: Optional[int] = None) -> _Graph:
    start = A.initial_mask if start_mask is None else start_mask
    post = A.post

    def succ(i):
        for k, m in enumerate(post[i]):
            for j in _bits(m):
                yield k, j

    fm = A.final_mask
    return _Graph(_bits(start), succ, lambda i: fm >> i & 1)


# ---------------------------------------------------------------------------
# Basic operations.


def _restrict(A: NBA, keep: int, initial: Optional[int] = None) -> NBA:
    """Sub-automaton on the states in mask ``keep``."""
    names = [s for i, s in enumerate(A.states) if keep >> i & 1]
    kept = set(names)
    init = A.initial_mask if initial is None else initial
    return NBA(
        A.alphabet,
        names,
        [s for s in A.unmask(init & keep)],
        A.final & kept,
        {t for t in A.transitions if t[0] in kept and t[2] in kept},
    )


def live_mask(A: NBA) -> int:
    """Mask of states from which some accepting lasso is reachable."""
    g = _nba_graph(A, (1 << len(A.states)) - 1)
    m = 0
    for v in g.live_nodes():
        m |= 1 << g.nodes[v]
    return m


def reachable_mask(A: NBA, start: Optional[int] = None) -> int:
    m = A.initial_mask if start is None else start
    todo = list(_bits(m))
    while todo:
        i = todo.pop()
        for row in A.post[i]:
            new = row & ~m
            if new:
                m |= new
                todo.extend(_bits(new))
    return m


def nba_trim_live(A: NBA) -> NBA:
    """Drop every state from which no accepting lasso is reachable."""
    return _restrict(A, live_mask(A))


def nba_trim(A: NBA) -> NBA:
    """Keep the states that are reachable and live."""
    return _restrict(A, live_mask(A) & reachable_mask(A))


def nba_is_empty(A: NBA) -> bool:
    return not _nba_graph(A).good_components()


def find_accepting_lasso(A: NBA) -> Optional[Lasso]:
    """Some ultimately periodic word accepted by ``A``, or None."""
    w = _nba_graph(A).witness()
    if w is None:
        return None
    u, v = w
    return Lasso([A.alphabet[k] for k in u], [A.alphabet[k] for k in v])


def _lasso_mask(A: NBA, w: Lasso) -> int:
    """Mask of states from which ``A`` accepts the lasso word."""
    letter = {a: k for k, a in enumerate(A.alphabet)}
    period = [letter[a] for a in w.period]
    p = len(period)
    post = A.post
    n = len(A.states)

    def succ(node):
        i, j = node
        for t in _bits(post[i][period[j]]):
            yield 0, (t, (j + 1) % p)

    fm = A.final_mask
    g = _Graph(((i, 0) for i in range(n)), succ, lambda node: fm >> node[0] & 1)
    mask = 0
    for v in g.live_nodes():
        i, j = g.nodes[v]
        if j == 0:
            mask |= 1 << i
    for a in reversed(w.prefix):
        k = letter[a]
        mask = sum(1 << i for i in range(n) if post[i][k] & mask)
    return mask


def lasso_member(A: NBA, w: Lasso) -> bool:
    """Whether ``u v^ω`` is accepted by ``A``."""
    _check_alphabet(A.alphabet, w.prefix + w.period)
    return bool(_lasso_mask(A, w) & A.initial_mask)


def nba_intersect(A: NBA, B: NBA) -> NBA:
    """Product automaton; a phase bit waits alternately for A- and B-final states."""
    if tuple(A.alphabet) != tuple(B.alphabet):
        raise ValueError("alphabets differ")
    fa, fb = A.final_mask, B.final_mask

    def succ(node):
        p, q, phase = node
        if phase == 0 and fa >> p & 1:
            nxt = 1
        elif phase == 1 and fb >> q & 1:
            nxt = 0
        else:
            nxt = phase
        for k in range(len(A.alphabet)):
            for p2 in _bits(A.post[p][k]):
                for q2 in _bits(B.post[q][k]):
                    yield k, (p2, q2, nxt)

    starts = [(p, q, 0) for p in _bits(A.initial_mask) for q in _bits(B.initial_mask)]
    g = _Graph(starts, succ, lambda n: n[2] == 0 and fa >> n[0] & 1)
    return _graph_to_nba(g, A.alphabet, lambda n: f"{A.states[n[0]]}|{B.states[n[1]]}|{n[2]}")


def _graph_to_nba(g: _Graph, alphabet, name) -> NBA:
    names = [name(n) for n in g.nodes]
    if len(set(names)) != len(names):
        names = [f"s{i}" for i in range(len(names))]
    trans = {(names[v], alphabet[k], names[w]) for v, out in enumerate(g.edges) for k, w in out}
    return NBA(alphabet, names, {names[s] for s in g.starts},
               {names[v] for v in range(len(names)) if g.accepting[v]}, trans)


# ---------------------------------------------------------------------------
# Rank-based complementation with tight level rankings.
#
# A complement node is either ``(S,)`` -- the subset phase, never accepting --
# or ``(S, O, f)`` where ``f`` is a tight level ranking on S (tuple, -1 off S)
# and O is the breakpoint set of even-ranked states still owing an odd rank.
# Nodes with an empty O are accepting.


def _tight_rankings(members: list, bounds: list, final_mask: int) -> list:
    """All tight rankings of ``members`` with ``rank(q) <= bounds[q]``.

    Final states get even ranks; the maximum rank is odd and every odd rank
    below it is used.
    """
    nonfinal = [q for q in members if not final_mask >> q & 1]
    if not members:
        return [{}]
    if not nonfinal:
        return []
    top = max(bounds[q] for q in nonfinal)
    out = []
    for r in range(1, min(top, 2 * len(nonfinal) - 1) + 1, 2):
        odd_needed = (r + 1) // 2
        choices = []
        for q in members:
            b = min(bounds[q], r)
            if final_mask >> q & 1:
                choices.append(range(0, b + 1, 2))
            else:
                choices.append(range(0, b + 1))
        count = len(members)

        def rec(i, assigned, odds):
            if len(odds) + sum(1 for q in members[i:] if not final_mask >> q & 1) < odd_needed:
                return
            if i == count:
                if len(odds) == odd_needed:
                    out.append(dict(assigned))
                return
            for v in choices[i]:
                assigned[members[i]] = v
                if v % 2:
                    if v in odds:
                        rec(i + 1, assigned, odds)
                    else:
                        rec(i + 1, assigned, odds | {v})
                else:
                    rec(i + 1, assigned, odds)
            del assigned[members[i]]

        rec(0, {}, frozenset())
    return out


class ComplementSpace:
    """Lazily explored rank-based complement of an NBA.

    ``starts(mask)`` gives the initial complement nodes for the residual
    language from the states in ``mask``; successors are memoized so several
    residual queries on the same automaton share work.
    """

    def __init__(self, A: NBA):
        limit = get_complement_cap()
        if len(A.states) > limit:
            raise ResourceLimitError(
                f"complementation of {len(A.states)} states exceeds the cap of {limit}")
        self.A = A
        self.n = len(A.states)
        self.nletters = len(A.alphabet)
        self._succ = {}
        self._jump = {}
        self.is_live = _Liveness(self.succ, self.accepting)

    def _jumps(self, S: int) -> list:
        got = self._jump.get(S)
        if got is None:
            members = list(_bits(S))
            bound = [2 * self.n] * self.n
            got = []
            for f in _tight_rankings(members, bound, self.A.final_mask):
                ranks = tuple(f.get(q, -1) for q in range(self.n))
                got.append((S, 0, ranks))
            self._jump[S] = got
        return got

    def starts(self, mask: int) -> list:
        return [(mask,)] + self._jumps(mask)

    def accepting(self, node) -> bool:
        return len(node) == 3 and node[1] == 0

    def succ(self, node) -> list:
        got = self._succ.get(node)
        if got is not None:
            return got
        A = self.A
        post = A.post
        out = []
        if len(node) == 1:
            S = node[0]
            for k in range(self.nletters):
                S2 = A.post_mask(S, k)
                out.append((k, (S2,)))
                out.extend((k, j) for j in self._jumps(S2))
        else:
            S, O, f = node
            fm = A.final_mask
            for k in range(self.nletters):
                bounds = [-1] * self.n
                S2 = 0
                for q in _bits(S):
                    for q2 in _bits(post[q][k]):
                        if bounds[q2] < 0 or f[q] < bounds[q2]:
                            bounds[q2] = f[q]
                        S2 |= 1 << q2
                for q2 in _bits(S2 & fm):
                    if bounds[q2] % 2:
                        bounds[q2] -= 1
                O_post = A.post_mask(O, k) if O else 0
                for g in _tight_rankings(list(_bits(S2)), bounds, fm):
                    ranks = tuple(g.get(q, -1) for q in range(self.n))
                    even = 0
                    for q, r in g.items():
                        if r % 2 == 0:
                            even |= 1 << q
                    O2 = even if O == 0 else O_post & even
                    out.append((k, (S2, O2, ranks)))
        self._succ[node] = out
        return out


def nba_complement(A: NBA) -> NBA:
    """NBA for ``Σ^ω \\ L(A)``; raises ResourceLimitError above the cap."""
    A = _restrict(A, reachable_mask(A))
    space = ComplementSpace(A)
    g = _Graph(space.starts(A.initial_mask), space.succ, space.accepting)
    return _graph_to_nba(g, A.alphabet, lambda n: f"c{g.index[n]}")


class ResidualOracle:
    """Emptiness, universality and inclusion of residual languages
    ``L(Q, Σ, δ, P, F)`` for state sets P of one fixed NBA.

    Non-live states are dropped before complementing; they never contribute
    to any residual language.  Short lassos refute most false claims before
    the complement is explored.
    """

    def __init__(self, A: NBA, probe_prefix: int = 2, probe_period: int = 2):
        self.A = A
        self.live = live_mask(A)
        keep = [i for i in range(len(A.states)) if self.live >> i & 1]
        self._remap = {i: j for j, i in enumerate(keep)}
        self.core = _restrict(A, self.live, 0)
        self._space = None
        self._product = None
        self._probes = [_lasso_mask(A, w) for w in
                        enumerate_lassos(A.alphabet, probe_prefix, probe_period)]
        self._universal = {}
        self._included = {}

    def _core_mask(self, mask: int) -> int:
        out = 0
        for i in _bits(mask & self.live):
            out |= 1 << self._remap[i]
        return out

    @property
    def space(self) -> ComplementSpace:
        if self._space is None:
            self._space = ComplementSpace(self.core)
        return self._space

    def fingerprint(self, mask: int) -> tuple:
        return tuple(bool(mask & p) for p in self._probes)

    def is_empty(self, mask: int) -> bool:
        return not mask & self.live

    def is_universal(self, mask: int) -> bool:
        got = self._universal.get(mask)
        if got is None:
            if not all(self.fingerprint(mask)):
                got = False
            else:
                space = self.space
                got = not any(space.is_live(c) for c in space.starts(self._core_mask(mask)))
            self._universal[mask] = got
        return got

    def included(self, left: int, right: int) -> bool:
        """Whether ``L(left) ⊆ L(right)``."""
        key = (left, right)
        got = self._included.get(key)
        if got is None:
            if any(a and not b for a, b in zip(self.fingerprint(left), self.fingerprint(right))):
                got = False
            elif self.is_empty(left) or not (left & ~right & self.live):
                got = True
            elif self.is_universal(right):
                got = True
            else:
                if self._product is None:
                    self._product = _ComplementProduct(self.core, self.space)
                got = self._product.empty(self._core_mask(left), self._core_mask(right))
            self._included[key] = got
        return got

    def equivalent(self, left: int, right: int) -> bool:
        return left == right or (self.included(left, right) and self.included(right, left))


class _ComplementProduct:
    """Product of ``A`` with a complement space, with memoized liveness so
    that many inclusion queries over the same pair share one exploration."""

    def __init__(self, A: NBA, space: ComplementSpace):
        self.A = A
        self.space = space
        fa = A.final_mask
        self.is_live = _Liveness(self.succ, lambda n: n[2] == 0 and fa >> n[0] & 1)

    def succ(self, node) -> list:
        A, space = self.A, self.space
        p, c, phase = node
        if phase == 0 and A.final_mask >> p & 1:
            nxt = 1
        elif phase == 1 and space.accepting(c):
            nxt = 0
        else:
            nxt = phase
        post = A.post[p]
        out = []
        for k, c2 in space.succ(c):
            if post[k] and space.is_live(c2):
                out.extend((k, (p2, c2, nxt)) for p2 in _bits(post[k]))
        return out

    def empty(self, start: int, cstart: int) -> bool:
        """Emptiness of ``L(A from start) ∩ complement(L(B from cstart))``."""
        cs = [c for c in self.space.starts(cstart) if self.space.is_live(c)]
        return not any(self.is_live((p, c, 0)) for p in _bits(start) for c in cs)


def nba_is_universal(A: NBA) -> bool:
    """Whether ``L(A) = Σ^ω``."""
    A = _restrict(A, reachable_mask(A))
    return ResidualOracle(A).is_universal(A.initial_mask)


def nba_included(A: NBA, B: NBA) -> bool:
    """Whether ``L(A) ⊆ L(B)``."""
    if tuple(A.alphabet) != tuple(B.alphabet):
        raise ValueError("alphabets differ")
    A = nba_trim(A)
    if not A.states:
        return True
    for w in enumerate_lassos(A.alphabet, 2, 2):
        if lasso_member(A, w) and not lasso_member(B, w):
            return False
    B = nba_trim(B)
    if not B.states:
        return False
    return _ComplementProduct(A, ComplementSpace(B)).empty(A.initial_mask, B.initial_mask)


def nba_equivalent(A: NBA, B: NBA) -> bool:
    return nba_included(A, B) and nba_included(B, A)


def nba_reduce(A: NBA) -> NBA:
    """Trim, then merge bisimilar states of equal finality.

    Bisimilar states accept the same residual language from any position, so
    the quotient is language-equivalent.
    """
    A = nba_trim(A)
    n = len(A.states)
    if n == 0:
        return A
    block = [1 if A.final_mask >> i & 1 else 0 for i in range(n)]
    while True:
        sigs = {}
        new = []
        for i in range(n):
            sig = (block[i],) + tuple(
                frozenset(block[j] for j in _bits(A.post[i][k])) for k in range(len(A.alphabet)))
            new.append(sigs.setdefault(sig, len(sigs)))
        if len(sigs) == len(set(block)):
            break
        block = new
    reps = {}
    for i in range(n):
        reps.setdefault(block[i], i)
    name = {b: A.states[i] for b, i in reps.items()}
    trans = {(name[block[A.index[p]]], a, name[block[A.index[q]]]) for p, a, q in A.transitions}
    states = [A.states[i] for i in sorted(reps.values())]
    return NBA(A.alphabet, states, {name[block[A.index[s]]] for s in A.initial},
               {name[block[A.index[s]]] for s in A.final}, trans)


def universal_nba(alphabet: Sequence[str], name: str = "q") -> NBA:
    return NBA(alphabet, [name], [name], [name], {(name, a, name) for a in alphabet})


def empty_nba(alphabet: Sequence[str]) -> NBA:
    return NBA(alphabet, [], [], [], [])
