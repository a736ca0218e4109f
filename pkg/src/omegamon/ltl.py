"""LTL over an explicit alphabet with next-until as the only temporal operator.

Atoms are letters, so exactly one atom holds at each position.  Derived
operators are expanded into the five core constructors when built.
"""
from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .automata import NBA, Alphabet, Lasso, ResourceLimitError, nba_reduce

DEFAULT_TABLEAU_CAP = 2 ** 14


class Formula:
    """Base class of the core syntax tree."""

    __slots__ = ()

    def __str__(self) -> str:
        return _show(self)


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True)
class Letter(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class NextUntil(Formula):
    """``left XU right``: some strictly later position satisfies ``right`` and
    every position strictly in between satisfies ``left``."""

    left: Formula
    right: Formula


def bottom() -> Formula:
    return Not(Top())


def conj(left: Formula, right: Formula) -> Formula:
    return Not(Or(Not(left), Not(right)))


def implies(left: Formula, right: Formula) -> Formula:
    return Or(Not(left), right)


def next_(arg: Formula) -> Formula:
    return NextUntil(bottom(), arg)


def until(left: Formula, right: Formula) -> Formula:
    return Or(right, conj(left, NextUntil(left, right)))


def eventually(arg: Formula) -> Formula:
    return until(Top(), arg)


def always(arg: Formula) -> Formula:
    return Not(eventually(Not(arg)))


def size(f: Formula) -> int:
    """Number of core nodes (tree count)."""
    if isinstance(f, (Top, Letter)):
        return 1
    if isinstance(f, Not):
        return 1 + size(f.arg)
    return 1 + size(f.left) + size(f.right)


def subformulas(f: Formula) -> list:
    """Distinct subformulas, children before parents."""
    out, seen = [], set()

    def walk(g):
        if g in seen:
            return
        if isinstance(g, Not):
            walk(g.arg)
        elif isinstance(g, (Or, NextUntil)):
            walk(g.left)
            walk(g.right)
        seen.add(g)
        out.append(g)

    walk(f)
    return out


def letters(f: Formula) -> set:
    return {g.name for g in subformulas(f) if isinstance(g, Letter)}


def _show(f: Formula) -> str:
    if isinstance(f, Top):
        return "tt"
    if isinstance(f, Letter):
        return f.name
    if isinstance(f, Not):
        if f.arg == Top():
            return "ff"
        return f"!{_show(f.arg)}"
    op = "|" if isinstance(f, Or) else "XU"
    return f"({_show(f.left)} {op} {_show(f.right)})"


# -- parser -----------------------------------------------------------------

KEYWORDS = {"tt", "ff", "X", "F", "G", "U", "XU"}
_TOKEN = re.compile(r"\s*(?:(->)|([!&|()])|([A-Za-z_][A-Za-z0-9_]*))")


class LTLSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> list:
    tokens, i = [], 0
    while True:
        while i < len(text) and text[i].isspace():
            i += 1
        if i == len(text):
            break
        m = _TOKEN.match(text, i)
        if not m:
            raise LTLSyntaxError(f"unexpected character {text[i]!r}", i)
        tok = m.group(1) or m.group(2) or m.group(3)
        tokens.append((tok, m.start(m.lastindex)))
        i = m.end()
    tokens.append((None, len(text)))
    return tokens


class _Parser:
    # precedence, low to high: ->  |  &  XU/U  unary
    def __init__(self, text: str, alphabet: Alphabet):
        self.tokens = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet

    def peek(self):
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, tok):
        if self.peek() != tok:
            got = self.peek()
            raise LTLSyntaxError(f"expected {tok!r}, found {'end of input' if got is None else repr(got)}",
                                 self.pos())
        self.take()

    def parse(self) -> Formula:
        f = self.implication()
        if self.peek() is not None:
            raise LTLSyntaxError(f"unexpected {self.peek()!r}", self.pos())
        return f

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.take()
            return implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.temporal()
        while self.peek() == "&":
            self.take()
            f = conj(f, self.temporal())
        return f

    def temporal(self) -> Formula:
        left = self.unary()
        op = self.peek()
        if op == "XU":
            self.take()
            return NextUntil(left, self.temporal())
        if op == "U":
            self.take()
            return until(left, self.temporal())
        return left

    def unary(self) -> Formula:
        tok, pos = self.tokens[self.i]
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok in ("X", "F", "G"):
            self.take()
            arg = self.unary()
            return {"X": next_, "F": eventually, "G": always}[tok](arg)
        if tok == "(":
            self.take()
            f = self.implication()
            self.expect(")")
            return f
        if tok == "tt":
            self.take()
            return Top()
        if tok == "ff":
            self.take()
            return bottom()
        if tok is None:
            raise LTLSyntaxError("unexpected end of input", pos)
        if tok in KEYWORDS or not (tok[0].isalpha() or tok[0] == "_"):
            raise LTLSyntaxError(f"unexpected {tok!r}", pos)
        if tok not in self.alphabet:
            raise LTLSyntaxError(f"unknown atom {tok!r}", pos)
        self.take()
        return Letter(tok)


def parse_ltl(text: str, alphabet: Sequence[str]) -> Formula:
    """Parse the concrete syntax into a desugared core formula."""
    alphabet = Alphabet(alphabet)
    clash = KEYWORDS & set(alphabet)
    if clash:
        raise ValueError(f"letters {sorted(clash)} collide with LTL keywords")
    return _Parser(text, alphabet).parse()


# -- semantics --------------------------------------------------------------


def eval_lasso(f: Formula, w: Lasso) -> bool:
    """Truth of ``f`` at position 0 of ``u v^ω``.

    Positions are 0..|u|+|v|-1 with the back edge to |u|.  NextUntil is an
    eventuality and is computed as a least fixpoint.
    """
    n = len(w.prefix) + len(w.period)
    nxt = [i + 1 for i in range(n - 1)] + [len(w.prefix)]
    word = [w.letter_at(i) for i in range(n)]
    val = {}
    for g in subformulas(f):
        if isinstance(g, Top):
            val[g] = [True] * n
        elif isinstance(g, Letter):
            val[g] = [a == g.name for a in word]
        elif isinstance(g, Not):
            val[g] = [not x for x in val[g.arg]]
        elif isinstance(g, Or):
            val[g] = [x or y for x, y in zip(val[g.left], val[g.right])]
        else:
            phi, psi = val[g.left], val[g.right]
            cur = [False] * n
            changed = True
            while changed:
                changed = False
                for i in reversed(range(n)):
                    j = nxt[i]
                    v = psi[j] or (phi[j] and cur[j])
                    if v and not cur[i]:
                        cur[i] = True
                        changed = True
            val[g] = cur
    return val[f][0]


def _holds(f: Formula, letter: str, pending: frozenset) -> bool:
    if isinstance(f, Top):
        return True
    if isinstance(f, Letter):
        return f.name == letter
    if isinstance(f, Not):
        return not _holds(f.arg, letter, pending)
    if isinstance(f, Or):
        return _holds(f.left, letter, pending) or _holds(f.right, letter, pending)
    return f in pending


def ltl_to_nba(f: Formula, alphabet: Sequence[str], cap: int = DEFAULT_TABLEAU_CAP) -> NBA:
    """Tableau translation.

    A tableau state is an atom: the letter at the current position together
    with the set of NextUntil subformulas that hold there.  The successor
    atom fixes which NextUntil formulas must hold in its predecessor, so
    transitions are found by matching that requirement.  Each NextUntil
    contributes one fairness set (not pending, or its right side holds);
    a counter reduces the generalized condition to a single final set.
    """
    alphabet = Alphabet(alphabet)
    unknown = letters(f) - set(alphabet)
    if unknown:
        raise ValueError(f"letters {sorted(unknown)} are not in the alphabet")
    xus = [g for g in subformulas(f) if isinstance(g, NextUntil)]
    m = len(xus)
    if len(alphabet) * 2 ** m > cap:
        raise ResourceLimitError(
            f"tableau needs {len(alphabet) * 2 ** m} atoms, above the cap of {cap}")
    atoms = []
    for a in alphabet:
        for bits in range(2 ** m):
            atoms.append((a, frozenset(x for i, x in enumerate(xus) if bits >> i & 1)))

    def required(atom) -> frozenset:
        a, pending = atom
        return frozenset(x for x in xus
                         if _holds(x.right, a, pending)
                         or (_holds(x.left, a, pending) and x in pending))

    by_pred = {}
    for atom in atoms:
        by_pred.setdefault(required(atom), []).append(atom)
    fair = [[not (x in p) or _holds(x.right, a, p) for x in xus] for a, p in atoms]
    fair = {atom: ok for atom, ok in zip(atoms, fair)}

    # states: "init" or (atom, counter); BFS from the initial pseudo-state
    start = "init"
    first = [t for t in atoms if _holds(f, t[0], t[1])]
    order, ids = [start], {start: 0}
    todo = deque([start])
    trans = []

    def add(node):
        if node not in ids:
            ids[node] = len(order)
            order.append(node)
            todo.append(node)
        return ids[node]

    while todo:
        node = todo.popleft()
        src = ids[node]
        if node == start:
            for t in first:
                trans.append((src, t[0], add((t, 0))))
            continue
        atom, c = node
        c2 = c
        if m and fair[atom][c]:
            c2 = (c + 1) % m
        for t in by_pred.get(atom[1], ()):
            trans.append((src, t[0], add((t, c2))))
    final = [i for i, node in enumerate(order)
             if node != start and node[1] == 0 and (m == 0 or fair[node[0]][0])]
    names = [f"q{i}" for i in range(len(order))]
    A = NBA(alphabet, names, [names[0]], [names[i] for i in final],
            {(names[p], a, names[q]) for p, a, q in trans})
    return _rename(nba_reduce(A))


def _rename(A: NBA) -> NBA:
    """Renumber states q0, q1, ... in BFS order from the initial states."""
    order = []
    seen = set()
    todo = deque(s for s in A.states if s in A.initial)
    seen.update(todo)
    succ = {}
    for p, a, q in A.transitions:
        succ.setdefault(p, []).append((A.alphabet.index(a), A.states.index(q), q))
    while todo:
        p = todo.popleft()
        order.append(p)
        for _, _, q in sorted(succ.get(p, ())):
            if q not in seen:
                seen.add(q)
                todo.append(q)
    order += [s for s in A.states if s not in seen]
    name = {s: f"q{i}" for i, s in enumerate(order)}
    return NBA(A.alphabet, [name[s] for s in order], {name[s] for s in A.initial},
               {name[s] for s in A.final}, {(name[p], a, name[q]) for p, a, q in A.transitions})


def random_formula(rng: random.Random, alphabet: Sequence[str], nodes: int) -> Formula:
    """Random core formula with exactly ``nodes`` nodes."""
    if nodes < 1:
        raise ValueError("a formula has at least one node")
    if nodes == 1:
        pick = rng.randrange(len(alphabet) + 1)
        return Top() if pick == len(alphabet) else Letter(alphabet[pick])
    if nodes == 2:
        return Not(random_formula(rng, alphabet, 1))
    kind = rng.choice(("not", "or", "xu", "xu"))
    if kind == "not":
        return Not(random_formula(rng, alphabet, nodes - 1))
    k = rng.randint(1, nodes - 2)
    left = random_formula(rng, alphabet, k)
    right = random_formula(rng, alphabet, nodes - 1 - k)
    return Or(left, right) if kind == "or" else NextUntil(left, right)
