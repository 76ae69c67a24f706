"""Instance generators: random profiles and the two hardness reductions.

``profile_from_vertex_cover`` builds a dichotomous profile in which a
distinguished committee D fails to be RS-efficient exactly when the graph
has a vertex cover of size at most k. ``profile_from_hitting_set`` builds
a profile in which some committee gives every agent a top alternative
exactly when a hitting set of size at most k exists. The small exact
solvers here exist to cross-check those properties.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import InstanceTooLarge, PreconditionViolated, ParseError
from .model import Profile, WeakOrder, is_dichotomous, random_weak_order, topwidth

BRUTE_MAX = 16


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset  # of (u, v) with u < v

    def __init__(self, vertex_count, edges):
        normalised = set()
        for u, v in edges:
            if u == v:
                raise PreconditionViolated(f"self-loop at {u}")
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise PreconditionViolated(f"edge {(u, v)} outside 1..{vertex_count}")
            normalised.add((min(u, v), max(u, v)))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(normalised))


@dataclass(frozen=True)
class SetSystem:
    ground: frozenset
    family: tuple

    def __init__(self, ground, family):
        ground = frozenset(ground)
        family = tuple(frozenset(c) for c in family)
        for c in family:
            if not c:
                raise PreconditionViolated("empty set in family")
            if not c <= ground:
                raise PreconditionViolated(f"{sorted(c)} is not a subset of the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "family", family)


def profile_from_vertex_cover(g: SimpleGraph, k: int):
    """Profile and committee D with: D not RS-efficient iff g has a vertex cover of size <= k.

    Vertices keep their ids 1..|V|; the extra alternatives d_1..d_k get ids
    |V|+1..|V|+k. Agents come edge by edge (k per edge, in edge order), then
    one agent whose top class is the smallest edge.
    """
    if not g.edges:
        raise PreconditionViolated("graph needs at least one edge")
    if not 1 <= k <= g.vertex_count:
        raise PreconditionViolated(f"k={k} outside 1..{g.vertex_count}")
    q = g.vertex_count
    m = q + k
    dummies = list(range(q + 1, m + 1))
    everything = set(range(1, m + 1))
    orders = []
    for u, v in sorted(g.edges):
        for d in dummies:
            orders.append(_approval_order((u, v, d), everything))
    orders.append(_approval_order(min(g.edges), everything))
    profile = Profile(m, k, tuple(orders))
    # with a single edge on two vertices and k = 1 the edge agents approve everything
    assert topwidth(profile) == 3 and (m == 3 or is_dichotomous(profile))
    return profile, tuple(dummies)


def _approval_order(top, everything) -> WeakOrder:
    rest = tuple(sorted(set(everything) - set(top)))
    return WeakOrder((tuple(top), rest) if rest else (tuple(top),))


def profile_from_hitting_set(s: SetSystem, k: int) -> Profile:
    """One agent per family member, approving exactly that member.

    Ground elements are relabelled 1..|X| in sorted order.
    """
    if not 1 <= k <= len(s.ground):
        raise PreconditionViolated(f"k={k} outside 1..{len(s.ground)}")
    if not s.family:
        raise PreconditionViolated("family is empty")
    label = {x: i for i, x in enumerate(sorted(s.ground), start=1)}
    m = len(label)
    orders = []
    for c in s.family:
        orders.append(_approval_order(sorted(label[x] for x in c), range(1, m + 1)))
    return Profile(m, k, tuple(orders))


def brute_vertex_cover(g: SimpleGraph) -> int:
    if g.vertex_count > BRUTE_MAX:
        raise InstanceTooLarge(f"brute-force cover limited to {BRUTE_MAX} vertices")
    vertices = range(1, g.vertex_count + 1)
    for size in range(g.vertex_count + 1):
        for cover in combinations(vertices, size):
            chosen = set(cover)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return size
    return g.vertex_count


def brute_hitting_set(s: SetSystem) -> int:
    if len(s.ground) > BRUTE_MAX:
        raise InstanceTooLarge(f"brute-force hitting set limited to {BRUTE_MAX} elements")
    ground = sorted(s.ground)
    for size in range(len(ground) + 1):
        for hit in combinations(ground, size):
            chosen = set(hit)
            if all(c & chosen for c in s.family):
                return size
    raise PreconditionViolated("no hitting set exists")


def random_profile(m: int, n: int, k: int, rng: random.Random, classes=None) -> Profile:
    """Impartial culture over weak orders (see :func:`random_weak_order`)."""
    return Profile(m, k, tuple(random_weak_order(m, rng, classes) for _ in range(n)))


def random_dichotomous_tw2(m: int, n: int, k: int, rng: random.Random) -> Profile:
    """Random dichotomous profile whose top classes have one or two alternatives."""
    if m < 2:
        raise PreconditionViolated("dichotomous preferences need m >= 2")
    orders = []
    for _ in range(n):
        width = rng.choice((1, 2)) if m >= 3 else 1
        top = tuple(sorted(rng.sample(range(1, m + 1), width)))
        rest = tuple(a for a in range(1, m + 1) if a not in top)
        orders.append(WeakOrder((top, rest)))
    return Profile(m, k, tuple(orders))


def random_graph(vertex_count: int, p: float, rng: random.Random) -> SimpleGraph:
    edges = [e for e in combinations(range(1, vertex_count + 1), 2) if rng.random() < p]
    return SimpleGraph(vertex_count, edges)


def parse_edge_list(text: str) -> SimpleGraph:
    """One ``u v`` pair per line; the vertex count is the largest id seen."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
    count = max((max(e) for e in edges), default=0)
    return SimpleGraph(count, edges)


def parse_set_system(text: str) -> SetSystem:
    """One comma-separated subset per line; the ground set is their union."""
    family = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            family.append({int(x) for x in line.split(",") if x.strip()})
        except ValueError:
            raise ParseError(f"non-integer element in {line!r}", lineno) from None
    ground = set().union(*family) if family else set()
    return SetSystem(ground, family)
