import sys
import random

import pytest
from hypothesis import strategies as st

from pareto_committees.model import Profile, WeakOrder, parse_profile

# letters used in worked examples map alphabetically onto ids
a, b, c, d, e, f = range(1, 7)

EXAMPLE1_TEXT = "4 2 2\n1,2,3,4\n4,3,2,1\n"
EXAMPLE3_TEXT = (
    "6 2 5\n"
    "{1,3},{2,4,5,6}\n"
    "{2,3},{1,4,5,6}\n"
    "{2,4},{1,3,5,6}\n"
    "{4,5},{1,2,3,6}\n"
    "{5,6},{1,2,3,4}\n"
)


def example1():
    return parse_profile(EXAMPLE1_TEXT)


def example2():
    # 1: a,c,b,d  2: a,d,b,c  3: b,c,a,d  4: b,d,a,c
    return Profile.from_rankings(
        [[a, c, b, d], [a, d, b, c], [b, c, a, d], [b, d, a, c]], k=2
    )


def example3():
    return parse_profile(EXAMPLE3_TEXT)


def fair_profile():
    # 1: a,b,c  2: a,c,b
    return Profile.from_rankings([[a, b, c], [a, c, b]], k=2)


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def ex2():
    return example2()


@pytest.fixture
def ex3():
    return example3()


@pytest.fixture
def rng():
    return random.Random(20240917)


@st.composite
def weak_orders(draw, m):
    perm = draw(st.permutations(list(range(1, m + 1))))
    cuts = draw(st.sets(st.integers(1, m - 1), max_size=m - 1)) if m > 1 else set()
    bounds = [0] + sorted(cuts) + [m]
    return WeakOrder(tuple(tuple(perm[x:y]) for x, y in zip(bounds, bounds[1:])))


@st.composite
def profiles(draw, max_m=6, max_n=4, max_k=3):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, min(max_k, m)))
    orders = tuple(draw(weak_orders(m)) for _ in range(n))
    return Profile(m, k, orders)


@st.composite
def profile_and_committees(draw, count=2, **kwargs):
    p = draw(profiles(**kwargs))
    committees = [
        tuple(sorted(draw(st.permutations(list(p.alternatives)))[: p.k]))
        for _ in range(count)
    ]
    return (p, *committees)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
