"""
Minimal monitors are not unique
===============================

Exhaustive search over canonical transition tables for Σ*(bab ∪ bbb)Σ^ω.
"""
from omegamon import emit_aut, family_bab, minimal_monitors

A = family_bab()
print("3 states:", len(minimal_monitors(A, 3)), "monitors")
found = minimal_monitors(A, 4)
print("4 states:", len(found), "pairwise non-isomorphic monitors\n")
for M in found:
    rows = [f"{p}:{M.delta[p, 'a']}/{M.delta[p, 'b']}" for p in M.states if p not in M.verdicts]
    print("  ".join(rows))

print()
print(emit_aut(found[0]), end="")
