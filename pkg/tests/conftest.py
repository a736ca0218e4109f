import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from omegamon import NBA  # noqa: E402

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@st.composite
def nbas(draw, max_states: int = 4, alphabet: str = "ab"):
    n = draw(st.integers(1, max_states))
    states = [str(i) for i in range(n)]
    triples = [(p, a, q) for p in states for a in alphabet for q in states]
    trans = draw(st.sets(st.sampled_from(triples), max_size=len(triples)))
    initial = draw(st.sets(st.sampled_from(states), min_size=1))
    final = draw(st.sets(st.sampled_from(states)))
    return NBA(alphabet, states, initial, final, trans)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
