"""Command line interface.

Exit codes: 0 success, 1 a boolean query under ``--expect`` came out the
other way, 2 bad input, 3 a resource cap was hit.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .autfile import AutFormatError, emit_aut, parse_aut
from .automata import (
    DBA, DBM, NBA, Alphabet, Monitor, ResourceLimitError, Verdict,
    complement_cap, format_word, parse_word,
)
from .classify import classify_all, is_cosafety, is_live, is_monitorable, is_safety, reset_word
from .gadgets import NFA, family_anb, family_bab, family_fig1, family_intro, gadget_b1, gadget_b2
from .ltl import LTLSyntaxError, ltl_to_nba, parse_ltl
from .morphism import (
    MonitorMorphism, forced_map, check_morphism, is_surjective, minimal_monitors, verify_monitor,
)
from .synth import (
    Polarity, congruential_monitor, dbm_from_dba, dwa_to_monitor, factor_monitor,
    standard_monitor,
)

EXIT_OK, EXIT_EXPECT, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def monitor_run(M: Monitor, word: Sequence[str]) -> tuple:
    """Feed ``word`` to ``M``; returns the verdict and the visited states.

    The trace stops once ⊥ or ⊤ is entered since both are final verdicts.
    """
    for a in word:
        if a not in M.alphabet:
            raise ValueError(f"unknown letter {a!r}")
    state = M.initial
    trace = [state]
    for a in word:
        if state in M.verdicts:
            break
        state = M.delta[state, a]
        trace.append(state)
    return M.verdict_of(state), trace


# -- input helpers ----------------------------------------------------------


def _read(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    try:
        return parse_aut(text)
    except AutFormatError as e:
        raise InputError(f"{path}: {e}") from None


def _as_nba(value, path: str) -> NBA:
    if isinstance(value, DBM):
        return value.to_dba().to_nba()
    if isinstance(value, Monitor) or isinstance(value, NFA):
        raise InputError(f"{path}: expected a Büchi automaton")
    if isinstance(value, DBA):
        return value.to_nba()
    return value


def _as_dba(value, path: str) -> DBA:
    if isinstance(value, DBM):
        return value.to_dba()
    if isinstance(value, DBA):
        return value
    if isinstance(value, NBA) and value.is_deterministic():
        return value.to_dba()
    raise InputError(f"{path}: expected a deterministic automaton")


def _as_monitor(value, path: str) -> Monitor:
    if isinstance(value, Monitor):
        return value
    raise InputError(f"{path}: expected a monitor")


def _alphabet(text: Optional[str]) -> Alphabet:
    if not text:
        raise InputError("--alphabet is required")
    return Alphabet(a.strip() for a in text.split(","))


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _write(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _answer(args, key: str, value: bool) -> int:
    print(f"{key}: {_bool(value)}")
    if args.expect is not None and value != (args.expect == "true"):
        return EXIT_EXPECT
    return EXIT_OK


# -- commands ---------------------------------------------------------------


def cmd_classify(args) -> int:
    if args.ltl is not None:
        A = ltl_to_nba(parse_ltl(args.ltl, _alphabet(args.alphabet)), _alphabet(args.alphabet))
    elif args.input:
        A = _as_nba(_read(args.input), args.input)
    else:
        raise InputError("classify needs an automaton file or --ltl")
    if args.query:
        fn = {"safety": is_safety, "cosafety": is_cosafety, "live": is_live,
              "monitorable": is_monitorable}[args.query]
        return _answer(args, args.query, fn(A))
    if args.expect is not None:
        raise InputError("--expect needs --query")
    print("\n".join(classify_all(A).lines()))
    return EXIT_OK


def cmd_synth(args) -> int:
    if args.kind == "factor":
        if not args.factor:
            raise InputError("--factor is required for --kind factor")
        alphabet = _alphabet(args.alphabet)
        M = factor_monitor(parse_word(args.factor, alphabet), Polarity(args.polarity), alphabet)
        _write(emit_aut(M), args.output)
        return EXIT_OK
    if not args.input:
        raise InputError(f"--kind {args.kind} needs an input automaton")
    value = _read(args.input)
    if args.kind == "standard":
        M = standard_monitor(_as_nba(value, args.input))
    elif args.kind == "congruential":
        M = congruential_monitor(_as_nba(value, args.input))[0]
    elif args.kind == "dbm":
        M = dbm_from_dba(_as_dba(value, args.input))
    else:
        M = dwa_to_monitor(_as_dba(value, args.input))
    _write(emit_aut(M), args.output)
    return EXIT_OK


def cmd_reset(args) -> int:
    M = _as_monitor(_read(args.monitor), args.monitor)
    w = reset_word(M)
    n = len(M.states)
    print(f"reset-word: {format_word(w, M.alphabet)}")
    print(f"length: {len(w)}")
    print(f"bound: {(n - 1) ** 2}")
    return EXIT_OK


def cmd_run(args) -> int:
    M = _as_monitor(_read(args.monitor), args.monitor)
    try:
        word = parse_word(args.word, M.alphabet)
    except ValueError as e:
        raise InputError(str(e)) from None
    verdict, trace = monitor_run(M, word)
    print(f"verdict: {verdict}")
    if verdict is not Verdict.INCONCLUSIVE:
        print(f"decided-after: {len(trace) - 1}")
    print(f"trace: {' '.join(trace)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    M = _as_monitor(_read(args.monitor), args.monitor)
    A = _as_nba(_read(args.nba), args.nba)
    if tuple(M.alphabet) != tuple(A.alphabet):
        raise InputError("monitor and automaton use different alphabets")
    return _answer(args, "monitor-for-language", verify_monitor(M, A))


def cmd_morphism(args) -> int:
    src = _as_monitor(_read(args.source), args.source).trimmed()
    dst = _as_monitor(_read(args.target), args.target).trimmed()
    phi = forced_map(src, dst)
    ok = phi is not None and check_morphism(MonitorMorphism(src, dst, phi))
    onto = ok and is_surjective(MonitorMorphism(src, dst, phi))
    print(f"morphism: {_bool(ok)}")
    code = _answer(args, "epimorphism", onto)
    if ok:
        for p in src.states:
            print(f"map: {p} -> {phi[p]}")
    return code


def cmd_minimal(args) -> int:
    A = _as_nba(_read(args.nba), args.nba)
    found = minimal_monitors(A, args.max)
    print(f"minimal-size: {len(found[0]) if found else 'none'}")
    print(f"count: {len(found)}")
    for M in found:
        print("---")
        sys.stdout.write(emit_aut(M))
    return EXIT_OK


def cmd_gadget(args) -> int:
    value = _read(args.nfa)
    if not isinstance(value, NFA):
        raise InputError(f"{args.nfa}: expected an nfa")
    build = gadget_b1 if args.which == "b1" else gadget_b2
    _write(emit_aut(build(value, args.fresh)), args.output)
    return EXIT_OK


def cmd_family(args) -> int:
    if args.name in ("anb", "intro") and args.n is None:
        raise InputError(f"family {args.name} needs -n")
    value = {"anb": lambda: family_anb(args.n), "intro": lambda: family_intro(args.n),
             "fig1": family_fig1, "bab": family_bab}[args.name]()
    _write(emit_aut(value), args.output)
    return EXIT_OK


def cmd_ltl2ba(args) -> int:
    alphabet = _alphabet(args.alphabet)
    _write(emit_aut(ltl_to_nba(parse_ltl(args.formula, alphabet), alphabet)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, dest="sub_cap",
                        help="state cap for complementation")
    expect = argparse.ArgumentParser(add_help=False)
    expect.add_argument("--expect", choices=("true", "false"),
                        help="exit with 1 unless the answer matches")
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("-o", "--output", help="output file (default: stdout)")

    p = argparse.ArgumentParser(prog="omegamon", description="Monitorability of ω-regular languages.")
    p.add_argument("--cap", type=int, default=None, help="state cap for complementation")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common, expect], help="safety/cosafety/live/monitorable")
    s.add_argument("input", nargs="?")
    s.add_argument("--ltl")
    s.add_argument("--alphabet")
    s.add_argument("--query", choices=("safety", "cosafety", "live", "monitorable"))
    s.set_defaults(run=cmd_classify)

    s = sub.add_parser("synth", parents=[common, output], help="build a monitor")
    s.add_argument("input", nargs="?")
    s.add_argument("--kind", required=True,
                   choices=("standard", "congruential", "dbm", "factor", "dwa"))
    s.add_argument("--factor")
    s.add_argument("--polarity", choices=("forbidden", "guaranteed"), default="forbidden")
    s.add_argument("--alphabet")
    s.set_defaults(run=cmd_synth)

    s = sub.add_parser("reset", parents=[common], help="reset word of a monitor")
    s.add_argument("monitor")
    s.set_defaults(run=cmd_reset)

    s = sub.add_parser("run", parents=[common], help="run a monitor on a finite word")
    s.add_argument("monitor")
    s.add_argument("word")
    s.set_defaults(run=cmd_run)

    s = sub.add_parser("verify-monitor", parents=[common, expect],
                       help="check a monitor against a Büchi automaton")
    s.add_argument("monitor")
    s.add_argument("nba")
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("morphism", parents=[common, expect], help="epimorphism between monitors")
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(run=cmd_morphism)

    s = sub.add_parser("minimal", parents=[common], help="exhaustive search for smallest monitors")
    s.add_argument("nba")
    s.add_argument("--max", type=int, required=True)
    s.set_defaults(run=cmd_minimal)

    s = sub.add_parser("gadget", parents=[common, output], help="hardness gadgets from an NFA")
    s.add_argument("which", choices=("b1", "b2"))
    s.add_argument("nfa")
    s.add_argument("--fresh", default="b")
    s.set_defaults(run=cmd_gadget)

    s = sub.add_parser("family", parents=[common, output], help="example automata")
    s.add_argument("name", choices=("anb", "fig1", "intro", "bab"))
    s.add_argument("-n", type=int)
    s.set_defaults(run=cmd_family)

    s = sub.add_parser("ltl2ba", parents=[common, output], help="translate LTL to a Büchi automaton")
    s.add_argument("formula")
    s.add_argument("--alphabet", required=True)
    s.set_defaults(run=cmd_ltl2ba)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cap = args.sub_cap if args.sub_cap is not None else args.cap
    try:
        if cap is not None:
            if cap < 0:
                raise InputError("--cap must be nonnegative")
            with complement_cap(cap):
                return args.run(args)
        return args.run(args)
    except ResourceLimitError as e:
        print(f"omegamon: {e}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, LTLSyntaxError, ValueError) as e:
        print(f"omegamon: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
