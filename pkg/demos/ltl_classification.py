"""
Classifying LTL properties
==========================

Formulas are translated to Büchi automata and then sorted into safety,
cosafety, liveness and monitorability.
"""
from omegamon import classify_all, ltl_to_nba, parse_ltl

alphabet = ("a", "b", "c")
formulas = [
    "G (a | b)",          # safety
    "F (b & X b)",        # cosafety, live
    "G F a",              # live, not monitorable
    "a U b",
    "G (a -> X b)",
    "F G c | b",
]

print(f"{'formula':16} {'states':>6}  safety cosafety live monitorable")
for text in formulas:
    A = ltl_to_nba(parse_ltl(text, alphabet), alphabet)
    c = classify_all(A)
    flags = [c.safety, c.cosafety, c.live, c.monitorable]
    print(f"{text:16} {len(A.states):6}  " + "  ".join(f"{str(x):8}" for x in flags))

# the desugared core form uses next-until only
print(parse_ltl("a U b", alphabet))
