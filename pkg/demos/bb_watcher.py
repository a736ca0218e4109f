"""
Small monitors for large automata
=================================

a^n ba Σ^ω minus Σ*bbΣ^ω needs a DBA that counts the leading a's, yet a
three-state monitor that only watches for bb is enough.
"""
from omegamon import (
    dbm_from_dba, factor_monitor, family_intro, is_safety, minimal_monitors, monitor_run,
    monitors_isomorphic, verify_monitor,
)

watcher = factor_monitor("bb", "forbidden", "ab")

for n in range(1, 5):
    A = family_intro(n)
    found = minimal_monitors(A, 3)
    print(f"n={n}: safety={is_safety(A)}, DBM states={len(dbm_from_dba(A.to_dba()))}, "
          f"3-state monitors={len(found)}, "
          f"watcher among them={any(monitors_isomorphic(M, watcher) for M in found)}, "
          f"watcher verified={verify_monitor(watcher, A)}")

# the watcher is not exact: a prefix outside L may stay inconclusive
for word in ("abab", "aabaa", "abba"):
    verdict, trace = monitor_run(watcher, word)
    print(f"{word:6} {verdict!s:13} {' '.join(trace)}")
