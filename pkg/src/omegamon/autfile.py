"""Line-oriented text format for automata and monitors.

    # comment
    type: dbm
    alphabet: a b c d
    states: 0 1 2 ⊥
    initial: 0
    final: 1 2
    bottom: ⊥
    trans:
    0 a 1
    ...

Names are whitespace-free tokens.  ``initial`` may list several states for
nba only.  Emitted files list states in BFS order from the initial states.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Union

from .automata import DBA, DBM, NBA, Monitor
from .gadgets import NFA

KINDS = ("nba", "dba", "dwa", "monitor", "dbm", "nfa")
HEADER_KEYS = ("type", "alphabet", "states", "initial", "final", "bottom", "top")
DETERMINISTIC = {"dba", "dwa", "monitor", "dbm"}

Automaton = Union[NBA, DBA, Monitor, DBM, NFA]


class AutFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass
class AutFile:
    """Parsed header and transition list; ``lines`` keeps the source line of
    each header key and transition for diagnostics."""

    kind: str
    alphabet: tuple
    states: tuple
    initial: tuple = ()
    final: tuple = ()
    bottom: Optional[str] = None
    top: Optional[str] = None
    transitions: list = field(default_factory=list)
    lines: dict = field(default_factory=dict)

    def build(self) -> Automaton:
        kind = self.kind
        where = self.lines.get("type")
        try:
            if kind == "nba":
                return NBA(self.alphabet, self.states, self.initial, self.final, self.transitions)
            if kind == "nfa":
                return NFA(self.alphabet, self.states, self._single_initial(), self.final,
                           self.transitions)
            delta = {(p, a): q for p, a, q in self.transitions}
            if kind in ("dba", "dwa"):
                return DBA(self.alphabet, self.states, self._single_initial(), self.final, delta)
            if kind == "monitor":
                return Monitor(self.alphabet, self.states, self._single_initial(), delta,
                               self.bottom, self.top)
            return DBM(self.alphabet, self.states, self._single_initial(), delta,
                       self.bottom, self.top, final=self.final)
        except AutFormatError:
            raise
        except ValueError as e:
            raise AutFormatError(str(e), where) from None

    def _single_initial(self) -> str:
        if len(self.initial) != 1:
            raise AutFormatError(f"type {self.kind} needs exactly one initial state",
                                 self.lines.get("initial"))
        return self.initial[0]


def read_autfile(text: str) -> AutFile:
    """Parse the text into an AutFile, checking names and determinism."""
    header, lines = {}, {}
    trans, trans_lines = [], []
    in_trans = False
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_trans and ":" not in line:
            parts = line.split()
            if len(parts) != 3:
                raise AutFormatError(f"transition needs 'src letter dst', got {line!r}", no)
            trans.append(tuple(parts))
            trans_lines.append(no)
            continue
        in_trans = False
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise AutFormatError(f"expected 'key: value', got {line!r}", no)
        if key == "trans":
            if value.strip():
                raise AutFormatError("transitions go on the lines after 'trans:'", no)
            if "trans" in lines:
                raise AutFormatError("duplicate key 'trans'", no)
            lines["trans"] = no
            in_trans = True
            continue
        if key not in HEADER_KEYS:
            raise AutFormatError(f"unknown key {key!r}", no)
        if key in header:
            raise AutFormatError(f"duplicate key {key!r}", no)
        header[key] = value.split()
        lines[key] = no
    for key in ("type", "alphabet", "states"):
        if key not in header:
            raise AutFormatError(f"missing key {key!r}")
    kind = " ".join(header["type"])
    if kind not in KINDS:
        raise AutFormatError(f"unknown type {kind!r}; expected one of {', '.join(KINDS)}",
                             lines["type"])
    alphabet = tuple(header["alphabet"])
    if not alphabet or len(set(alphabet)) != len(alphabet):
        raise AutFormatError("alphabet must be nonempty without repeats", lines["alphabet"])
    states = tuple(header["states"])
    if len(set(states)) != len(states):
        raise AutFormatError("duplicate state names", lines["states"])
    declared = set(states)

    def one(key):
        got = header.get(key, [])
        if len(got) > 1:
            raise AutFormatError(f"{key} takes a single state", lines[key])
        return got[0] if got else None

    for key in ("initial", "final", "bottom", "top"):
        for s in header.get(key, []):
            if s not in declared:
                raise AutFormatError(f"{key} state {s!r} is not declared", lines[key])
    bottom, top = one("bottom"), one("top")
    if kind in ("monitor", "dbm"):
        if bottom is None and top is None:
            raise AutFormatError(f"type {kind} needs a bottom or a top state", lines["type"])
    elif bottom is not None or top is not None:
        raise AutFormatError(f"type {kind} has no verdict states",
                             lines.get("bottom", lines.get("top")))
    seen = {}
    for (p, a, q), no in zip(trans, trans_lines):
        for s in (p, q):
            if s not in declared:
                raise AutFormatError(f"state {s!r} is not declared", no)
        if a not in alphabet:
            raise AutFormatError(f"letter {a!r} is not in the alphabet", no)
        if kind in DETERMINISTIC:
            if (p, a) in seen and seen[p, a][0] != q:
                raise AutFormatError(
                    f"second target for ({p}, {a}); first given on line {seen[p, a][1]}", no)
            seen[p, a] = (q, no)
    return AutFile(kind, alphabet, states, tuple(header.get("initial", ())),
                   tuple(header.get("final", ())), bottom, top, trans, lines)


def parse_aut(text: str) -> Automaton:
    return read_autfile(text).build()


def kind_of(value: Automaton) -> str:
    if isinstance(value, DBM):
        return "dbm"
    if isinstance(value, Monitor):
        return "monitor"
    if isinstance(value, DBA):
        return "dba"
    if isinstance(value, NFA):
        return "nfa"
    if isinstance(value, NBA):
        return "nba"
    raise TypeError(f"cannot emit {type(value).__name__}")


def _edges(value: Automaton) -> list:
    """Transitions as (src, letter, dst) triples."""
    if isinstance(value, (Monitor, DBA)):
        return [(p, a, q) for (p, a), q in value.delta.items()]
    return list(value.transitions)


def _initials(value: Automaton) -> list:
    if isinstance(value, NBA):
        return [s for s in value.states if s in value.initial]
    return [value.initial]


def bfs_order(value: Automaton) -> list:
    """States in BFS order from the initial states; ties broken by letter
    order, then declared order.  Unreachable states follow in declared order."""
    letter = {a: i for i, a in enumerate(value.alphabet)}
    pos = {s: i for i, s in enumerate(value.states)}
    succ = {}
    for p, a, q in _edges(value):
        succ.setdefault(p, []).append((letter[a], pos[q], q))
    order, seen = [], set()
    todo = deque()
    for s in _initials(value):
        if s not in seen:
            seen.add(s)
            todo.append(s)
    while todo:
        p = todo.popleft()
        order.append(p)
        for _, _, q in sorted(succ.get(p, ())):
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return order + [s for s in value.states if s not in seen]


def emit_aut(value: Automaton, kind: Optional[str] = None) -> str:
    """Text form of ``value``.  ``kind`` may be "dwa" for a DBA."""
    base = kind_of(value)
    kind = kind or base
    if kind != base and not (kind == "dwa" and base == "dba"):
        raise ValueError(f"cannot emit a {base} as type {kind}")
    for name in tuple(value.states) + tuple(value.alphabet):
        if not name or any(ch.isspace() for ch in name) or "#" in name or ":" in name:
            raise ValueError(f"name {name!r} cannot be written in the text format")
    order = bfs_order(value)
    rank = {s: i for i, s in enumerate(order)}
    letter = {a: i for i, a in enumerate(value.alphabet)}
    out = [f"type: {kind}",
           f"alphabet: {' '.join(value.alphabet)}",
           f"states: {' '.join(order)}".rstrip(),
           f"initial: {' '.join(s for s in order if s in _initials(value))}".rstrip()]
    if kind != "monitor":
        out.append(f"final: {' '.join(s for s in order if s in value.final)}".rstrip())
    if isinstance(value, Monitor):
        if value.bottom is not None:
            out.append(f"bottom: {value.bottom}")
        if value.top is not None:
            out.append(f"top: {value.top}")
    out.append("trans:")
    for p, a, q in sorted(_edges(value), key=lambda t: (rank[t[0]], letter[t[1]], rank[t[2]])):
        out.append(f"{p} {a} {q}")
    return "\n".join(out) + "\n"
