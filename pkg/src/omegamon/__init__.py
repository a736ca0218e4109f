"""ω-regular monitorability: classify Büchi and LTL languages, build
monitors, and check them."""

from .automata import (
    BOTTOM, DEFAULT_COMPLEMENT_CAP, DBA, DBM, NBA, TOP, Alphabet, Lasso, Monitor, NotMonitorable,
    ResidualOracle, ResourceLimitError, Verdict, complement_cap, empty_nba, enumerate_lassos,
    find_accepting_lasso, format_word, get_complement_cap, lasso_member, nba_complement,
    nba_equivalent, nba_included, nba_intersect, nba_is_empty, nba_is_universal, nba_reduce,
    nba_trim, nba_trim_live, parse_word, universal_nba, words,
)
from .closure import (
    ClosureDBA, boundary_dba, closure_dba, complement_closure_dba, minimize_closure,
    product_closure, safety_nowhere_dense,
)
from .synth import (
    NotTotal, NotWeak, Polarity, QuotientTable, congruential_monitor, dba_state_empty,
    dba_state_universal, dbm_from_dba, dwa_to_monitor, factor_monitor, standard_monitor,
)
from .classify import (
    Classification, classify_all, is_cosafety, is_live, is_monitorable, is_monitorable_boundary,
    is_safety, reset_word,
)
from .morphism import (
    MonitorMorphism, check_morphism, compose, find_epimorphism, forced_map, is_epimorphism,
    is_surjective, minimal_monitors, monitors_isomorphic, verify_monitor,
)
from .ltl import (
    Formula, LTLSyntaxError, Letter, NextUntil, Not, Or, Top, always, bottom, conj, eval_lasso,
    eventually, implies, ltl_to_nba, next_, parse_ltl, random_formula, until,
)
from .gadgets import (
    NFA, family_anb, family_bab, family_fig1, family_intro, gadget_b1, gadget_b2,
    infinitely_many, nfa_is_universal,
)
from .autfile import AutFile, AutFormatError, emit_aut, parse_aut, read_autfile
from .cli import monitor_run

__version__ = "0.1.0"
