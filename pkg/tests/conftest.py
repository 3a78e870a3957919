import sys

import hypothesis.strategies as st
from hypothesis import settings

from argaudit import ArgumentationFramework

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def AF(args, attacks=()):
    """Shorthand used throughout the tests: ``AF("abc", ["ab", "bc"])``."""
    return ArgumentationFramework(set(args), {tuple(p) for p in attacks})


@st.composite
def frameworks(draw, max_args=5, min_args=0, self_attacks=True):
    n = draw(st.integers(min_args, max_args))
    names = [f"x{i}" for i in range(n)]
    pairs = [(a, b) for a in names for b in names if self_attacks or a != b]
    attacks = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return ArgumentationFramework(names, attacks)


@st.composite
def normal_expansions(draw, max_base=4, max_new=2):
    base = draw(frameworks(max_args=max_base))
    k = draw(st.integers(0, max_new))
    new = [f"n{i}" for i in range(k)]
    everyone = sorted(base.arguments) + new
    pairs = [(a, b) for a in everyone for b in everyone if a in new or b in new]
    extra = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return base, ArgumentationFramework(set(everyone), base.attacks | extra)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
