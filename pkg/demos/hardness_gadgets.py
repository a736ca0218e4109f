"""
Liveness and monitorability from NFA universality
=================================================

Both gadgets read an NFA over Γ and add a fresh letter.  B1 is live and B2
is monitorable exactly when the NFA accepts every finite word.
"""
from omegamon import NFA, gadget_b1, gadget_b2, is_live, is_monitorable, nfa_is_universal

G = ("a0", "a1")
everything = NFA(G, ["q"], "q", ["q"], {("q", x, "q") for x in G})
even_length = NFA(G, ["e", "o"], "e", ["e"],
                  {("e", x, "o") for x in G} | {("o", x, "e") for x in G})

for name, N in (("all words", everything), ("even length", even_length)):
    B1, B2 = gadget_b1(N), gadget_b2(N)
    print(f"{name}: universal={nfa_is_universal(N)}")
    print(f"  B1 live={is_live(B1)} monitorable={is_monitorable(B1)}")
    print(f"  B2 live={is_live(B2)} monitorable={is_monitorable(B2)}")
