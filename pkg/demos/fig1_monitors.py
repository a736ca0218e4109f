"""
Three monitors for one language
===============================

L = (b*a)^ω ∪ {a,b}* c {a,b,c}^ω over {a, b, c, d}.  The language is
deterministic and monitorable; only the letter d is ever decisive.
"""
from omegamon import (
    classify_all, congruential_monitor, dbm_from_dba, emit_aut, family_fig1, find_epimorphism,
    reset_word, standard_monitor,
)

B = family_fig1()
A = B.to_dba().to_nba()
print("\n".join(classify_all(A).lines()))

# the deterministic Büchi monitor keeps all four states
dbm = dbm_from_dba(B.to_dba())
# residual classes: states 0 and 1 have the same future
R, table = congruential_monitor(A)
# closures only: everything except d keeps both closures alive
M = standard_monitor(A)
print(f"\nsizes: DBM {len(dbm)}, congruential {len(R)}, standard {len(M)}")
print("classes:", table.members)

# each monitor maps onto the next one
for src, dst in ((dbm, R), (R, M)):
    phi = find_epimorphism(src, dst)
    print(" ".join(f"{p}->{q}" for p, q in phi.mapping.items()))

print("\nstandard monitor:")
print(emit_aut(M), end="")
print("reset word:", "".join(reset_word(M)))
