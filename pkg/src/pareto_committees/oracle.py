"""Exhaustive ground truth over S_k(A).

Everything here enumerates committees in lexicographic order, so witnesses
and efficient sets are deterministic. Sizes are capped; a scan that would
exceed the cap raises :class:`InstanceTooLarge` instead of truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from .errors import InstanceTooLarge, NonImprovingStep, SizeMismatch
from .extensions import Comparison, Extension, compare, rs_weakly_prefers, sort_key
from .model import Committee, Profile, make_committee

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class Verdict:
    efficient: bool
    witness: Optional[Committee] = None

    def __post_init__(self):
        if self.efficient != (self.witness is None):
            raise ValueError("a witness is present exactly when the committee is not efficient")


def pareto_dominates(profile: Profile, ext: Extension, w, v) -> bool:
    """True iff every agent weakly prefers ``w`` to ``v`` and at least one strictly."""
    if len(w) != len(v):
        raise SizeMismatch(f"cannot compare committees of sizes {len(w)} and {len(v)}")
    strict = False
    for order in profile.orders:
        c = compare(ext, order, w, v)
        if c is Comparison.BETTER:
            strict = True
        elif c is not Comparison.EQUAL:
            return False
    return strict


def check_cap(profile: Profile, cap: int = DEFAULT_CAP) -> int:
    size = comb(profile.m, profile.k)
    if size > cap:
        raise InstanceTooLarge(
            f"C({profile.m},{profile.k}) = {size} committees exceeds the cap of {cap}"
        )
    return size


def _dominates(ext: Extension, kw, kv) -> bool:
    """Pareto dominance on per-agent key tuples."""
    strict = False
    if ext is Extension.RS:
        for a, b in zip(kw, kv):
            if a == b:
                continue
            if not rs_weakly_prefers(a, b):
                return False
            strict = True
        return strict
    for a, b in zip(kw, kv):
        if a < b:
            return False
        if a > b:
            strict = True
    return strict


def _agent_keys(profile: Profile, ext: Extension, c) -> tuple:
    return tuple(sort_key(ext, order, c) for order in profile.orders)


def find_improvement(profile: Profile, ext: Extension, w, cap: int = DEFAULT_CAP):
    """Lexicographically least committee Pareto-dominating ``w``, or None."""
    w = make_committee(w, profile)
    check_cap(profile, cap)
    kw = _agent_keys(profile, ext, w)
    for c in profile.committees():
        if _dominates(ext, _agent_keys(profile, ext, c), kw):
            return c
    return None


def verify_bruteforce(profile: Profile, ext: Extension, w, cap: int = DEFAULT_CAP) -> Verdict:
    witness = find_improvement(profile, ext, w, cap)
    return Verdict(witness is None, witness)


def enumerate_efficient(profile: Profile, ext: Extension, cap: int = DEFAULT_CAP) -> list:
    """All ``ext``-efficient committees, lexicographically sorted."""
    check_cap(profile, cap)
    committees = list(profile.committees())
    keys = [_agent_keys(profile, ext, c) for c in committees]
    return [
        c
        for c, kw in zip(committees, keys)
        if not any(_dominates(ext, kv, kw) for kv in keys)
    ]


def improvement_chain(
    profile: Profile,
    ext: Extension,
    w,
    step: Callable | None = None,
    cap: int = DEFAULT_CAP,
) -> list:
    """Follow Pareto improvements from ``w`` until an efficient committee is reached.

    ``step(committee)`` must return a committee dominating its argument, or
    None when the argument is efficient. Defaults to the brute-force search.
    The returned list starts at ``w`` and ends at the efficient committee.
    """
    if step is None:
        def step(c):
            return find_improvement(profile, ext, c, cap)

    current = make_committee(w, profile)
    chain = [current]
    while True:
        nxt = step(current)
        if nxt is None:
            return chain
        nxt = make_committee(nxt, profile)
        if not pareto_dominates(profile, ext, nxt, current):
            raise NonImprovingStep(
                f"step returned {nxt}, which does not {ext.value}-dominate {current}"
            )
        chain.append(nxt)
        current = nxt


def chain_bound(profile: Profile, ext: Extension) -> int | None:
    """Upper bound on the number of committees in an improvement chain, if one is known."""
    if ext in (Extension.BEST, Extension.WORST):
        return profile.m * profile.n
    # an RS improvement is also a DL improvement
    return profile.m * profile.m * profile.n
