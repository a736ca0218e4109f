"""Brute-force reference implementations used as test oracles.

They share no code with the library beyond the data types: membership is
decided by direct search over (state, position) pairs, LTL by the
first-order definition of next-until, and so on.
"""
from itertools import product


def lasso_accepts(A, u, v) -> bool:
    """Whether the NBA accepts u v^ω: some reachable (final, loop position)
    pair lies on a cycle of the unrolled product."""
    n = len(u) + len(v)

    def letter(i):
        return u[i] if i < len(u) else v[i - len(u)]

    def nxt(i):
        return i + 1 if i + 1 < n else len(u)

    def step(node):
        q, i = node
        a = letter(i)
        return [(q2, nxt(i)) for (p, b, q2) in A.transitions if p == q and b == a]

    def reach(starts):
        seen, todo = set(), list(starts)
        while todo:
            x = todo.pop()
            for y in step(x):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return seen

    start = [(q, 0) for q in A.initial]
    reachable = set(start) | reach(start)
    for node in reachable:
        q, i = node
        if q in A.final and i >= len(u) and node in reach([node]):
            return True
    return False


def all_lassos(alphabet, max_u, max_v):
    for m in range(max_u + 1):
        for u in product(alphabet, repeat=m):
            for k in range(1, max_v + 1):
                for v in product(alphabet, repeat=k):
                    yield u, v


def brute_nonempty(A) -> bool:
    """An accepting lasso exists with |u|, |v| ≤ |Q| whenever L(A) ≠ ∅."""
    n = max(1, len(A.states))
    return any(lasso_accepts(A, u, v) for u, v in all_lassos(A.alphabet, n, n))


def first_rejected(A, max_u, max_v):
    for u, v in all_lassos(A.alphabet, max_u, max_v):
        if not lasso_accepts(A, u, v):
            return u, v
    return None


def nfa_accepts(N, word) -> bool:
    current = {N.initial}
    for a in word:
        current = {q for (p, b, q) in N.transitions if p in current and b == a}
    return bool(current & set(N.final))


def nfa_universal_brute(N, max_len: int) -> bool:
    return all(nfa_accepts(N, w) for m in range(max_len + 1)
               for w in product(N.alphabet, repeat=m))


def naive_factor_progress(f, word) -> int:
    """Longest prefix of f that is a suffix of word, or len(f) once f has
    occurred anywhere."""
    f, word = tuple(f), tuple(word)
    for end in range(len(word) + 1):
        if end >= len(f) and word[end - len(f):end] == f:
            return len(f)
    for k in range(min(len(f) - 1, len(word)), -1, -1):
        if word[len(word) - k:] == f[:k]:
            return k
    return 0


def ltl_holds(f, u, v, pos: int = 0) -> bool:
    """First-order semantics on u v^ω.  A next-until at x searches z in
    x+1 .. x+|u|+2|v|, after which positions only repeat."""
    from omegamon.ltl import Letter, Not, Or, Top

    def canon(p):
        return p if p < len(u) else len(u) + (p - len(u)) % len(v)

    memo = {}

    def holds(g, p):
        p = canon(p)
        key = (g, p)
        if key in memo:
            return memo[key]
        if isinstance(g, Top):
            r = True
        elif isinstance(g, Letter):
            r = (u[p] if p < len(u) else v[p - len(u)]) == g.name
        elif isinstance(g, Not):
            r = not holds(g.arg, p)
        elif isinstance(g, Or):
            r = holds(g.left, p) or holds(g.right, p)
        else:
            r = False
            for z in range(p + 1, p + len(u) + 2 * len(v) + 1):
                if holds(g.right, z):
                    r = True
                    break
                if not holds(g.left, z):
                    break
        memo[key] = r
        return r

    return holds(f, pos)


def monitor_unsound_word(M, A, max_word: int, max_u: int = 2, max_v: int = 2):
    """A word u of length ≤ max_word whose verdict some lasso u x y^ω
    contradicts, or None."""
    for m in range(max_word + 1):
        for u in product(M.alphabet, repeat=m):
            state = M.initial
            for a in u:
                state = M.delta[state, a]
            if state not in (M.bottom, M.top):
                continue
            want = state == M.top
            for x, y in all_lassos(M.alphabet, max_u, max_v):
                if lasso_accepts(A, u + x, y) != want:
                    return u
    return None


def brute_minimal_monitors(A, k: int, max_word: int = 8):
    """Canonical tables of all monitors with exactly k reachable states that
    are sound for L(A) on words up to ``max_word`` (verdicts justified by
    lassos with |x|, |y| ≤ 2).  Independent of the library search."""
    alphabet = tuple(A.alphabet)
    justified = {}

    def verdict_ok(u, verdict):
        key = (u, verdict)
        if key not in justified:
            outcomes = {lasso_accepts(A, u + x, y) for x, y in all_lassos(alphabet, 2, 2)}
            justified[key] = outcomes == {verdict == "T"}
        return justified[key]

    found = set()
    for verdicts in (("B",), ("T",), ("B", "T")):
        ordinary = [str(i) for i in range(k - len(verdicts))]
        if not ordinary and len(verdicts) > 1:
            continue
        states = ordinary + list(verdicts)
        cells = [(p, a) for p in ordinary for a in alphabet]
        for targets in product(states, repeat=len(cells)):
            delta = dict(zip(cells, targets))
            delta.update({(v, a): v for v in verdicts for a in alphabet})
            for init in ordinary or list(verdicts):
                table = _canonical(delta, init, alphabet, set(verdicts))
                if table is None or len(table[1]) != k * len(alphabet) or table in found:
                    continue
                if _sound(delta, init, alphabet, verdicts, max_word, verdict_ok):
                    found.add(table)
    return found


def _canonical(delta, init, alphabet, verdicts):
    """BFS relabelling; None if some reachable state cannot reach a verdict."""
    order, index = [init], {init: 0}
    i = 0
    while i < len(order):
        for a in alphabet:
            q = delta[order[i], a]
            if q not in index:
                index[q] = len(order)
                order.append(q)
        i += 1
    reach = set(v for v in verdicts if v in index)
    changed = True
    while changed:
        changed = False
        for p in order:
            if p not in reach and any(delta[p, a] in reach for a in alphabet):
                reach.add(p)
                changed = True
    if reach != set(order):
        return None
    label = lambda p: p if p in verdicts else index[p]
    return (label(init), tuple((label(p), a, label(delta[p, a])) for p in order for a in alphabet))


def _sound(delta, init, alphabet, verdicts, max_word, verdict_ok):
    frontier = [((), init)]
    for _ in range(max_word + 1):
        nxt = []
        for u, p in frontier:
            if p in verdicts:
                if not verdict_ok(u, p):
                    return False
                continue
            nxt.extend((u + (a,), delta[p, a]) for a in alphabet)
        frontier = nxt
    return True
