import random
from itertools import permutations, product

import pytest

from conftest import a, b, c, d, example1, fair_profile
from pareto_committees.errors import InstanceTooLarge, PreconditionViolated, ValidationError
from pareto_committees.extensions import Extension
from pareto_committees.mechanisms import (
    MechanismId,
    best_greedy_strict,
    committee_sd,
    fair_sd,
    run_mechanism,
    sp_check,
    worst_sd,
)
from pareto_committees.model import Profile, WeakOrder, all_weak_orders
from pareto_committees.oracle import verify_bruteforce
from pareto_committees.reductions import random_profile

E = Extension


class TestCommitteeSD:
    def test_example1(self):
        assert committee_sd(example1(), (1, 2)) == (a, b)

    def test_single_dictator_ties_break_low(self):
        p = Profile.from_rankings([[5, (2, 4, 3), 1]], k=2)
        assert committee_sd(p) == (2, 5)

    def test_k_equals_m(self):
        p = Profile.from_rankings([[3, 1, 2], [2, 3, 1]], k=3)
        assert committee_sd(p, (2, 1)) == (1, 2, 3)

    def test_later_agent_refines_boundary_class(self):
        p = Profile.from_rankings([[1, (2, 3, 4)], [4, 3, 2, 1]], k=2)
        assert committee_sd(p) == (1, 4)
        assert committee_sd(p, (2, 1)) == (3, 4)

    def test_bad_permutation(self):
        with pytest.raises(ValidationError):
            committee_sd(example1(), (1, 1))


class TestWorstSD:
    def test_example1(self):
        assert worst_sd(example1(), (1, 2)) == (a, b)

    def test_k_equals_m(self):
        p = Profile.from_rankings([[3, 1, 2], [2, 3, 1]], k=3)
        assert worst_sd(p) == (1, 2, 3)

    def test_single_agent_gets_a_best_committee(self):
        # every committee is W-efficient here, the pool choice must still favour c
        p = Profile.from_rankings([[c, (a, b)]], k=2)
        assert c in worst_sd(p)
        assert sp_check(MechanismId.WORST_SD, p) is None

    def test_rs_manipulable(self):
        # agent 1: a > {b,c}; agent 2: c > b > a
        p = Profile.from_rankings([[a, (b, c)], [c, b, a]], k=2)
        assert worst_sd(p) == (b, c)
        found = sp_check(MechanismId.WORST_SD, p)
        assert found is not None and found.agent == 1
        assert found.manipulated == (a, b)
        # no profitable lie under the worst extension itself
        assert sp_check(MechanismId.WORST_SD, p, ext=E.WORST) is None


class TestBestGreedy:
    def test_example1(self):
        assert best_greedy_strict(example1(), (1, 2)) == (a, d)

    def test_single_agent(self):
        p = Profile.from_rankings([[3, 1, 2, 4]], k=2)
        assert 3 in best_greedy_strict(p)

    def test_rejects_ties(self):
        p = Profile.from_rankings([[(1, 2), 3]], k=1)
        with pytest.raises(PreconditionViolated):
            best_greedy_strict(p)


class TestFairSD:
    def test_two_agent_profile(self):
        assert fair_sd(fair_profile(), (1, 2)) == (a, c)

    def test_misreport(self):
        lie = fair_profile().replace(1, WeakOrder.from_ranking([b, a, c]))
        assert fair_sd(lie, (1, 2)) == (a, b)

    def test_single_agent_matches_sd(self):
        rng = random.Random(3)
        for _ in range(50):
            p = random_profile(6, 1, rng.randint(1, 6), rng)
            assert fair_sd(p) == committee_sd(p)

    def test_counterexample(self):
        found = sp_check(MechanismId.FAIR_SD, fair_profile(), (1, 2))
        assert found.agent == 1
        assert found.report.classes == ((b,), (a,), (c,))
        assert (found.honest, found.manipulated) == ((a, c), (a, b))


class TestSpCheck:
    def test_too_large_without_samples(self):
        p = Profile.from_rankings([[1, 2, 3, 4, 5]], k=2)
        with pytest.raises(InstanceTooLarge):
            sp_check(MechanismId.SD, p)

    def test_sampled(self):
        p = Profile.from_rankings([[1, 2, 3, 4, 5], [5, 4, 3, 2, 1]], k=2)
        assert sp_check(MechanismId.SD, p, samples=100, seed=4) is None

    def test_sampled_is_deterministic(self):
        p = fair_profile()
        one = sp_check(MechanismId.FAIR_SD, p, samples=40, seed=9)
        two = sp_check(MechanismId.FAIR_SD, p, samples=40, seed=9)
        assert one == two and one is not None

    def test_sd_exhaustive_small(self):
        for m in (1, 2, 3):
            orders = all_weak_orders(m)
            for n in (1, 2):
                for prof in product(orders, repeat=n):
                    for k in range(1, min(2, m) + 1):
                        p = Profile(m, k, prof)
                        for perm in permutations(range(1, n + 1)):
                            assert sp_check(MechanismId.SD, p, perm) is None


def test_efficiency_all_permutations():
    rng = random.Random(8)
    for _ in range(60):
        m = rng.randint(1, 6)
        n = rng.randint(1, 3)
        k = rng.randint(1, min(3, m))
        p = random_profile(m, n, k, rng)
        strict = random_profile(m, n, k, rng, classes=m)
        for perm in permutations(range(1, n + 1)):
            w = committee_sd(p, perm)
            for ext in (E.RS, E.DL, E.UL):
                assert verify_bruteforce(p, ext, w).efficient
            assert verify_bruteforce(p, E.WORST, worst_sd(p, perm)).efficient
            assert verify_bruteforce(strict, E.BEST, best_greedy_strict(strict, perm)).efficient


def test_run_mechanism_dispatch():
    p = example1()
    # every alternative scores 10; ties go to the smaller ids
    assert run_mechanism(MechanismId.SCORE, p) == (a, b)
    assert run_mechanism(MechanismId.SD, p) == committee_sd(p)
    assert MechanismId("worst-sd") is MechanismId.WORST_SD
