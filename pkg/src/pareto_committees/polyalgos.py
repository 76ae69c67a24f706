"""Polynomial-time verification and election.

* :func:`rs_improve_dichotomous_tw2` decides RS-efficiency (and finds an
  improvement) for dichotomous profiles whose top classes have at most two
  alternatives, by reduction to bipartite vertex cover.
* :func:`worst_verify` decides efficiency under the worst extension.
* :func:`rs_score_elect` elects an RS-efficient committee by scoring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .errors import PreconditionViolated
from .graph import BipartiteGraph, cover_number, min_vertex_cover
from .model import Profile, is_dichotomous, make_committee, topwidth
from .oracle import Verdict


@dataclass(frozen=True)
class Tw2Decomposition:
    """Intermediate sets of the top-width-2 algorithm for a status-quo committee ``d``.

    Agents are 1-based. ``fully_served`` are the agents whose whole top class
    lies in ``d``; ``kept`` is the union of those top classes. ``half_served``
    are the agents with one top alternative in ``d - kept`` and one outside
    ``d``; each contributes one edge of ``graph`` on the vertex set
    ``touched`` (the union of their top classes).
    """

    fully_served: frozenset
    kept: frozenset
    half_served: frozenset
    touched: frozenset
    graph: BipartiteGraph

    @property
    def k_kept(self) -> int:
        return len(self.kept)


def _check_tw2(profile: Profile):
    if not is_dichotomous(profile):
        raise PreconditionViolated("profile is not dichotomous")
    if topwidth(profile) > 2:
        raise PreconditionViolated(f"top width is {topwidth(profile)}, must be at most 2")


def tw2_decomposition(profile: Profile, d) -> Tw2Decomposition:
    _check_tw2(profile)
    d = set(make_committee(d, profile))
    fully_served = frozenset(
        i for i, o in enumerate(profile.orders, start=1) if set(o.top) <= d
    )
    kept = frozenset(a for i in fully_served for a in profile.order(i).top)
    free = d - kept
    half_served = frozenset(
        i
        for i, o in enumerate(profile.orders, start=1)
        if i not in fully_served and set(o.top) & free
    )
    edges = set()
    for i in half_served:
        inside, outside = _split_top(profile.order(i).top, d)
        # a top class of size 1 meeting d would be fully served
        edges.add((inside[0], outside[0]))
    touched = frozenset(a for e in edges for a in e)
    graph = BipartiteGraph(touched & d, touched - d, edges)
    return Tw2Decomposition(fully_served, kept, half_served, touched, graph)


def _split_top(top, d):
    return [a for a in top if a in d], [a for a in top if a not in d]


def rs_improve_dichotomous_tw2(profile: Profile, d) -> Verdict:
    """RS-efficiency of ``d`` in polynomial time, for dichotomous profiles of top width <= 2.

    Returns a witness committee that RS-Pareto-dominates ``d`` when one exists.
    """
    _check_tw2(profile)
    d = make_committee(d, profile)
    d_set = set(d)
    if all(set(o.top) <= d_set for o in profile.orders):
        return Verdict(True)

    dec = tw2_decomposition(profile, d)
    slack = profile.k - dec.k_kept
    cover = min_vertex_cover(dec.graph)
    tau = len(cover)
    assert tau <= slack, "d minus the kept set always covers the graph"

    if tau < slack:
        base = set(cover) | dec.kept
        return Verdict(False, _pad_with_strict_gain(profile, dec, d_set, base))

    # tau == slack: some minimum cover must make an agent strictly better off
    m = profile.m
    candidates = []
    for i, o in enumerate(profile.orders, start=1):
        if i in dec.fully_served or i in dec.half_served:
            continue
        for x in o.top:
            if x in dec.touched:
                candidates.append({x: x + m})
    for i in sorted(dec.half_served):
        x, y = profile.order(i).top
        candidates.append({x: x + m, y: y + m})
    for pendants in candidates:
        augmented = dec.graph.with_pendants(pendants)
        if cover_number(augmented) == tau:
            aug_cover = min_vertex_cover(augmented)
            assert set(pendants) <= aug_cover and not (aug_cover - dec.touched)
            return Verdict(False, make_committee(aug_cover | dec.kept))
    return Verdict(True)


def _pad_with_strict_gain(profile, dec, d_set, base):
    """Fill ``base`` to size k so that some agent is strictly better off than under d."""
    base = set(base)

    def gains(extra):
        w = base | {extra}
        for i, o in enumerate(profile.orders, start=1):
            if i in dec.fully_served:
                continue
            top = set(o.top)
            if len(top & w) > len(top & d_set):
                return True
        return False

    def already_strict():
        return any(
            len(set(o.top) & base) > len(set(o.top) & d_set) for o in profile.orders
        )

    if not already_strict():
        pool = sorted(
            {a for o in profile.orders for a in o.top if a not in d_set} - base
        )
        pool += sorted(
            {a for o in profile.orders for a in o.top if a in d_set} - base
        )
        extra = next(a for a in pool if gains(a))
        base.add(extra)
    rest = (a for a in profile.alternatives if a not in base)
    base.update(islice(rest, profile.k - len(base)))
    return make_committee(base, profile)


def worst_verify(profile: Profile, w) -> Verdict:
    """Efficiency under the worst extension, with an improving committee if there is one."""
    w = make_committee(w, profile)
    worst_class = [max(o.rank(a) for a in w) for o in profile.orders]
    for i, order in enumerate(profile.orders):
        allowed = []
        for a in profile.alternatives:
            if order.rank(a) >= worst_class[i]:
                continue
            if any(
                o.rank(a) > worst_class[j]
                for j, o in enumerate(profile.orders)
                if j != i
            ):
                continue
            allowed.append(a)
        if len(allowed) >= profile.k:
            return Verdict(False, tuple(allowed[: profile.k]))
    return Verdict(True)


def score_table(profile: Profile) -> list:
    """Doubled fractional-Borda score of each alternative, indexed 0..m-1.

    An alternative in an agent's class of size s with p alternatives strictly
    above it earns 2*(m - p) - (s - 1) from that agent. The per-agent scores
    strictly decrease from one class to the next.
    """
    m = profile.m
    totals = [0] * m
    for order in profile.orders:
        above = 0
        previous = None
        for cls in order.classes:
            score = 2 * (m - above) - (len(cls) - 1)
            assert previous is None or score < previous
            for a in cls:
                totals[a - 1] += score
            previous = score
            above += len(cls)
    return totals


def rs_score_elect(profile: Profile) -> tuple:
    """The k alternatives with the highest total score, ties to the smaller id."""
    totals = score_table(profile)
    ranked = sorted(profile.alternatives, key=lambda a: (-totals[a - 1], a))
    return make_committee(ranked[: profile.k], profile)
