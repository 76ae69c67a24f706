"""Serial-dictatorship style mechanisms and a brute-force manipulation search.

Permutations are sequences of 1-based agent ids. Wherever a mechanism is
free to pick any alternatives from a pool, it takes the smallest ids.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from math import ceil
from typing import Optional

from .errors import InstanceTooLarge, PreconditionViolated, ValidationError
from .extensions import Comparison, Extension, compare
from .model import (
    Profile,
    WeakOrder,
    all_weak_orders,
    is_strict,
    make_committee,
    random_weak_order,
)
from .oracle import improvement_chain
from .polyalgos import rs_score_elect, worst_verify


class MechanismId(enum.Enum):
    SD = "sd"
    WORST_SD = "worst-sd"
    BEST_GREEDY_STRICT = "best-greedy"
    FAIR_SD = "fair-sd"
    SCORE = "score"

    def __str__(self):
        return self.value


def identity(n: int) -> tuple:
    return tuple(range(1, n + 1))


def check_permutation(profile: Profile, perm) -> tuple:
    if perm is None:
        return identity(profile.n)
    perm = tuple(perm)
    if sorted(perm) != list(range(1, profile.n + 1)):
        raise ValidationError(f"{perm} is not a permutation of 1..{profile.n}")
    return perm


def random_permutation(n: int, rng: random.Random) -> tuple:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return tuple(perm)


def committee_sd(profile: Profile, perm=None) -> tuple:
    """Committee serial dictatorship (RS-, DL- and UL-efficient, RS-strategyproof).

    Each agent in turn fixes the alternatives of their best classes that fit
    into the remaining slots and narrows the pool to the boundary class.
    """
    perm = check_permutation(profile, perm)
    pool = set(profile.alternatives)
    needed = profile.k
    fixed = set()
    for agent in perm:
        if needed == 0:
            break
        order = profile.order(agent)
        taken = set()
        for cls in order.classes:
            boundary = pool.intersection(cls)
            if len(taken) + len(boundary) >= needed:
                break
            taken |= boundary
        fixed |= taken
        needed -= len(taken)
        pool = boundary
    fixed.update(sorted(pool)[:needed])
    return make_committee(fixed, profile)


def _demote_outside(profile: Profile, pool) -> Profile:
    """Move every alternative outside ``pool`` into a new bottom class."""
    outside = tuple(x for x in profile.alternatives if x not in pool)
    orders = []
    for order in profile.orders:
        classes = [tuple(x for x in cls if x in pool) for cls in order.classes]
        classes = [cls for cls in classes if cls]
        if outside:
            classes.append(outside)
        orders.append(WeakOrder(tuple(classes)))
    return Profile(profile.m, profile.k, tuple(orders))


def worst_sd(profile: Profile, perm=None) -> tuple:
    """Serial dictatorship for the worst extension.

    Each agent in turn deletes as many of their least preferred classes from
    the pool as possible while keeping at least k alternatives.
    """
    perm = check_permutation(profile, perm)
    pool = set(profile.alternatives)
    for agent in perm:
        for cls in reversed(profile.order(agent).classes):
            remaining = pool.difference(cls)
            if len(remaining) < profile.k:
                break
            pool = remaining
    # the remaining choice inside the pool is made by serial dictatorship, so
    # each agent still gets a best committee among what is left
    start = committee_sd(_demote_outside(profile, pool), perm)

    def step(c):
        return worst_verify(profile, c).witness

    return improvement_chain(profile, Extension.WORST, start, step)[-1]


def best_greedy_strict(profile: Profile, perm=None) -> tuple:
    """Best-efficient committee for strict profiles.

    Agents in turn add their favourite alternative until k are chosen; any
    free seats are then filled with the smallest ids.
    """
    if not is_strict(profile):
        raise PreconditionViolated("best-greedy needs strict preferences")
    perm = check_permutation(profile, perm)
    chosen = []
    for agent in perm:
        if len(chosen) == profile.k:
            break
        favourite = profile.order(agent).top[0]
        if favourite not in chosen:
            chosen.append(favourite)
    # seats left over means every agent already holds their favourite
    chosen.extend(a for a in profile.alternatives if a not in chosen)
    return make_committee(chosen[: profile.k], profile)


def fair_sd(profile: Profile, perm=None) -> tuple:
    """Round-robin dictatorship where each turn fixes at most ceil(k/n) alternatives.

    Not strategyproof.
    """
    perm = check_permutation(profile, perm)
    quota = ceil(profile.k / profile.n)
    chosen = set()
    while len(chosen) < profile.k:
        for agent in perm:
            room = min(quota, profile.k - len(chosen))
            if room == 0:
                break
            ranked = [a for cls in profile.order(agent).classes for a in cls]
            picks = [a for a in ranked if a not in chosen][:room]
            chosen.update(picks)
    return make_committee(chosen, profile)


def run_mechanism(mechanism: MechanismId, profile: Profile, perm=None) -> tuple:
    if mechanism is MechanismId.SD:
        return committee_sd(profile, perm)
    if mechanism is MechanismId.WORST_SD:
        return worst_sd(profile, perm)
    if mechanism is MechanismId.BEST_GREEDY_STRICT:
        return best_greedy_strict(profile, perm)
    if mechanism is MechanismId.FAIR_SD:
        return fair_sd(profile, perm)
    return rs_score_elect(profile)


@dataclass(frozen=True)
class Manipulation:
    agent: int
    report: WeakOrder
    honest: tuple
    manipulated: tuple


EXHAUSTIVE_MAX_M = 4


def sp_check(
    mechanism: MechanismId,
    profile: Profile,
    perm=None,
    samples: Optional[int] = None,
    seed: int = 0,
    ext: Extension = Extension.RS,
) -> Optional[Manipulation]:
    """Search for a profitable misreport.

    A misreport is profitable when the resulting committee is strictly
    preferred under ``ext`` by the agent's true order. With ``samples`` set,
    that many random weak orders are tried per agent; otherwise every weak
    order is tried, which is limited to m <= 4. Agents are tried in id order
    and reports in the order of :func:`all_weak_orders`; the first hit is
    returned.
    """
    perm = check_permutation(profile, perm)
    if samples is None:
        if profile.m > EXHAUSTIVE_MAX_M:
            raise InstanceTooLarge(
                f"exhaustive misreport search needs m <= {EXHAUSTIVE_MAX_M}; pass a sample budget"
            )
        reports = all_weak_orders(profile.m)
    else:
        rng = random.Random(seed)
        reports = sorted(
            {random_weak_order(profile.m, rng) for _ in range(samples)},
            key=lambda o: o.classes,
        )
    honest = run_mechanism(mechanism, profile, perm)
    for agent in range(1, profile.n + 1):
        truth = profile.order(agent)
        for report in reports:
            if report == truth:
                continue
            outcome = run_mechanism(mechanism, profile.replace(agent, report), perm)
            if compare(ext, truth, outcome, honest) is Comparison.BETTER:
                return Manipulation(agent, report, honest, outcome)
    return None
