import random
from itertools import combinations, combinations_with_replacement

import pytest

from conftest import a, b, c, d, example1, example2, example3
from pareto_committees.errors import PreconditionViolated
from pareto_committees.extensions import Extension
from pareto_committees.model import Profile, WeakOrder, is_dichotomous, topwidth
from pareto_committees.oracle import Verdict, pareto_dominates, verify_bruteforce
from pareto_committees.polyalgos import (
    rs_improve_dichotomous_tw2,
    rs_score_elect,
    score_table,
    tw2_decomposition,
    worst_verify,
)
from pareto_committees.reductions import random_dichotomous_tw2, random_profile

E = Extension


def approval_profile(m, k, tops):
    orders = []
    for top in tops:
        rest = tuple(x for x in range(1, m + 1) if x not in top)
        orders.append(WeakOrder((tuple(top), rest)))
    return Profile(m, k, tuple(orders))


class TestTw2:
    def test_example3(self):
        verdict = rs_improve_dichotomous_tw2(example3(), (a, b))
        assert not verdict.efficient
        assert verdict.witness in {(b, c), (c, d)}
        assert pareto_dominates(example3(), E.RS, verdict.witness, (a, b))

    def test_example3_trace(self):
        dec = tw2_decomposition(example3(), (a, b))
        assert dec.fully_served == frozenset() and dec.kept == frozenset()
        assert dec.half_served == {1, 2, 3}
        assert dec.touched == {a, b, c, d}
        assert dec.graph.left == {a, b} and dec.graph.right == {c, d}
        assert dec.graph.edges == {(a, c), (b, c), (b, d)}

    def test_all_tops_inside(self):
        p = approval_profile(5, 3, [(1, 2), (2,), (3,)])
        assert rs_improve_dichotomous_tw2(p, (1, 2, 3)) == Verdict(True)

    def test_slack_adds_the_missing_endpoint(self):
        # one agent approves {1,2}; D = {1,3}; the cover {1} alone gains nothing
        p = approval_profile(3, 2, [(1, 2)])
        verdict = rs_improve_dichotomous_tw2(p, (1, 3))
        assert verdict == Verdict(False, (1, 2))

    def test_preconditions(self):
        with pytest.raises(PreconditionViolated):
            rs_improve_dichotomous_tw2(example1(), (a, b))
        wide = approval_profile(4, 2, [(1, 2, 3)])
        with pytest.raises(PreconditionViolated):
            rs_improve_dichotomous_tw2(wide, (1, 2))

    def test_exhaustive_m4(self):
        # every multiset of up to two top classes, every k and D
        for m in range(2, 5):
            tops = [t for w in (1, 2) for t in combinations(range(1, m + 1), w) if len(t) < m]
            for n in (1, 2):
                for chosen in combinations_with_replacement(tops, n):
                    for k in range(1, m + 1):
                        p = approval_profile(m, k, chosen)
                        for dd in p.committees():
                            got = rs_improve_dichotomous_tw2(p, dd)
                            assert got.efficient == verify_bruteforce(p, E.RS, dd).efficient
                            if not got.efficient:
                                assert pareto_dominates(p, E.RS, got.witness, dd)

    def test_random(self):
        rng = random.Random(11)
        for _ in range(200):
            m = rng.randint(2, 7)
            p = random_dichotomous_tw2(m, rng.randint(1, 5), rng.randint(1, min(3, m)), rng)
            assert is_dichotomous(p) and topwidth(p) <= 2
            dd = tuple(sorted(rng.sample(range(1, m + 1), p.k)))
            dec = tw2_decomposition(p, dd)
            assert dec.kept <= set(dd)
            assert all((u in dd) and (v not in dd) for u, v in dec.graph.edges)
            got = rs_improve_dichotomous_tw2(p, dd)
            assert got.efficient == verify_bruteforce(p, E.RS, dd).efficient


class TestWorstVerify:
    def test_example1(self):
        verdict = worst_verify(example1(), (a, d))
        assert verdict == Verdict(False, (a, b))
        # the oracle finds the same lex-least improvement
        assert verify_bruteforce(example1(), E.WORST, (a, d)) == verdict

    def test_k_equals_m(self):
        p = Profile.from_rankings([[1, 2, 3], [(2, 3), 1]], k=3)
        assert worst_verify(p, (1, 2, 3)).efficient

    def test_random(self):
        rng = random.Random(12)
        for _ in range(300):
            m = rng.randint(1, 7)
            p = random_profile(m, rng.randint(1, 5), rng.randint(1, min(3, m)), rng)
            w = tuple(sorted(rng.sample(range(1, m + 1), p.k)))
            got = worst_verify(p, w)
            assert got.efficient == verify_bruteforce(p, E.WORST, w).efficient
            if not got.efficient:
                assert pareto_dominates(p, E.WORST, got.witness, w)


class TestScoreElect:
    def test_example2(self):
        assert rs_score_elect(example2()) == (a, b)

    def test_single_strict_agent(self):
        p = Profile.from_rankings([[4, 2, 5, 1, 3]], k=3)
        assert rs_score_elect(p) == (2, 4, 5)

    def test_scores(self):
        # m=4, classes {1,2},{3},{4}: 2*4-1=7, 2*(4-2)=4, 2*(4-3)=2
        p = Profile.from_rankings([[(1, 2), 3, 4]], k=1)
        assert score_table(p) == [7, 7, 4, 2]
        assert rs_score_elect(p) == (1,)

    def test_random_is_rs_efficient(self):
        rng = random.Random(13)
        for _ in range(200):
            m = rng.randint(1, 7)
            p = random_profile(m, rng.randint(1, 5), rng.randint(1, min(3, m)), rng)
            assert verify_bruteforce(p, E.RS, rs_score_elect(p)).efficient
