"""Lifting one agent's weak order to equal-size committees.

Five set extensions are supported. ``DL``, ``UL``, ``BEST`` and ``WORST``
induce total preorders and are decided by comparing a per-committee key
(larger key = better). ``RS`` is a partial order decided by componentwise
comparison of sorted rank vectors.
"""

from __future__ import annotations

import enum

from .errors import SizeMismatch
from .model import WeakOrder, rank_vector


class Extension(enum.Enum):
    RS = "rs"
    DL = "dl"
    UL = "ul"
    BEST = "best"
    WORST = "worst"

    @classmethod
    def parse(cls, text: str) -> "Extension":
        return cls(text.strip().lower())

    def __str__(self):
        return self.value


class Comparison(enum.Enum):
    BETTER = "BETTER"
    EQUAL = "EQUAL"
    WORSE = "WORSE"
    INCOMPARABLE = "INCOMPARABLE"

    def flipped(self) -> "Comparison":
        if self is Comparison.BETTER:
            return Comparison.WORSE
        if self is Comparison.WORSE:
            return Comparison.BETTER
        return self

    @property
    def weakly_better(self) -> bool:
        return self in (Comparison.BETTER, Comparison.EQUAL)


def signature(order: WeakOrder, w) -> tuple:
    """Number of members of ``w`` in each equivalence class, best class first."""
    counts = [0] * order.num_classes
    for a in w:
        counts[order.rank(a) - 1] += 1
    return tuple(counts)


def sort_key(ext: Extension, order: WeakOrder, w):
    """Key whose ordering realises ``ext`` for the total-preorder extensions.

    For RS the sorted rank vector is returned; it is *not* totally ordered
    and must be compared with :func:`rs_weakly_prefers`.
    """
    if ext is Extension.RS:
        return rank_vector(order, w)
    if ext is Extension.BEST:
        return -min(order.rank(a) for a in w)
    if ext is Extension.WORST:
        return -max(order.rank(a) for a in w)
    sig = signature(order, w)
    if ext is Extension.DL:
        return sig
    return tuple(-c for c in reversed(sig))


def rs_weakly_prefers(ranks_w, ranks_v) -> bool:
    """Sorted-rank dominance: the j-th best of w is at least as good as the j-th best of v."""
    return all(x <= y for x, y in zip(ranks_w, ranks_v))


def compare_keys(ext: Extension, key_w, key_v) -> Comparison:
    if ext is Extension.RS:
        ge = rs_weakly_prefers(key_w, key_v)
        le = rs_weakly_prefers(key_v, key_w)
        if ge and le:
            return Comparison.EQUAL
        if ge:
            return Comparison.BETTER
        if le:
            return Comparison.WORSE
        return Comparison.INCOMPARABLE
    if key_w > key_v:
        return Comparison.BETTER
    if key_w < key_v:
        return Comparison.WORSE
    return Comparison.EQUAL


def compare(ext: Extension, order: WeakOrder, w, v) -> Comparison:
    """How the agent with ``order`` ranks committee ``w`` against ``v`` under ``ext``."""
    if len(w) != len(v):
        raise SizeMismatch(f"cannot compare committees of sizes {len(w)} and {len(v)}")
    return compare_keys(ext, sort_key(ext, order, w), sort_key(ext, order, v))


def weakly_prefers(ext: Extension, order: WeakOrder, w, v) -> bool:
    return compare(ext, order, w, v).weakly_better


def strictly_prefers(ext: Extension, order: WeakOrder, w, v) -> bool:
    return compare(ext, order, w, v) is Comparison.BETTER
