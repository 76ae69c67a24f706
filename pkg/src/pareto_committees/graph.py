"""Bipartite maximum matching and König vertex covers.

Vertices are arbitrary sortable ids (the callers use ints). Iteration is
always in ascending id order so that matchings and covers are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True)
class BipartiteGraph:
    left: frozenset
    right: frozenset
    edges: frozenset  # (left, right) pairs

    def __init__(self, left, right, edges):
        left, right = frozenset(left), frozenset(right)
        edges = frozenset(tuple(e) for e in edges)
        if left & right:
            raise ValidationError(f"vertices on both sides: {sorted(left & right)}")
        for u, v in edges:
            if u not in left or v not in right:
                raise ValidationError(f"edge {(u, v)} does not go from left to right")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "edges", edges)

    def adjacency(self) -> dict:
        adj = {u: [] for u in sorted(self.left)}
        for u, v in sorted(self.edges):
            adj[u].append(v)
        return adj

    def with_pendants(self, pendants: dict) -> "BipartiteGraph":
        """Copy with a new leaf ``pendants[x]`` attached to each vertex ``x``."""
        left, right, edges = set(self.left), set(self.right), set(self.edges)
        for x, leaf in pendants.items():
            if x in self.left:
                right.add(leaf)
                edges.add((x, leaf))
            elif x in self.right:
                left.add(leaf)
                edges.add((leaf, x))
            else:
                raise ValidationError(f"{x} is not a vertex")
        return BipartiteGraph(left, right, edges)


def _matching_map(g: BipartiteGraph) -> dict:
    """Right vertex -> matched left vertex, via augmenting paths (Kuhn)."""
    adj = g.adjacency()
    match_right = {}

    def augment(u, seen):
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in adj:
        augment(u, set())
    return match_right


def max_matching(g: BipartiteGraph) -> frozenset:
    """A maximum-cardinality matching as a set of (left, right) edges."""
    return frozenset((u, v) for v, u in _matching_map(g).items())


def min_vertex_cover(g: BipartiteGraph) -> frozenset:
    """Minimum vertex cover from a maximum matching (König construction).

    With Z the vertices reachable from unmatched left vertices by
    alternating paths, the cover is (left - Z) | (right & Z).
    """
    adj = g.adjacency()
    match_right = _matching_map(g)
    matched_left = {u: v for v, u in match_right.items()}
    frontier = [u for u in adj if u not in matched_left]
    reached_left = set(frontier)
    reached_right = set()
    while frontier:
        u = frontier.pop()
        for v in adj[u]:
            if v in reached_right:
                continue
            reached_right.add(v)
            w = match_right.get(v)
            if w is not None and w not in reached_left:
                reached_left.add(w)
                frontier.append(w)
    return frozenset((set(g.left) - reached_left) | reached_right)


def cover_number(g: BipartiteGraph) -> int:
    return len(_matching_map(g))


def is_vertex_cover(g: BipartiteGraph, cover) -> bool:
    cover = set(cover)
    return all(u in cover or v in cover for u, v in g.edges)
