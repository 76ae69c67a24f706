"""Cross-checks between the five efficiency notions on one profile."""

from __future__ import annotations

from dataclasses import dataclass

from .extensions import Extension
from .model import Profile
from .oracle import DEFAULT_CAP, enumerate_efficient

E = Extension

# (label, kind, first, second): "subset" means every first-efficient committee
# is second-efficient, "meet" means some committee is efficient for both.
RELATION_CHECKS = (
    ("DL<=RS", "subset", E.DL, E.RS),
    ("UL<=RS", "subset", E.UL, E.RS),
    ("B&DL", "meet", E.BEST, E.DL),
    ("W&UL", "meet", E.WORST, E.UL),
    ("DL&UL", "meet", E.DL, E.UL),
    ("B&RS", "meet", E.BEST, E.RS),
    ("W&RS", "meet", E.WORST, E.RS),
)


@dataclass(frozen=True)
class RelationsReport:
    efficient: dict  # Extension -> list of committees
    checks: tuple  # (label, passed) pairs

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def run_relations(profile: Profile, cap: int = DEFAULT_CAP) -> RelationsReport:
    sets = {ext: enumerate_efficient(profile, ext, cap) for ext in Extension}
    checks = []
    for label, kind, first, second in RELATION_CHECKS:
        a, b = set(sets[first]), set(sets[second])
        checks.append((label, a <= b if kind == "subset" else bool(a & b)))
    return RelationsReport(sets, tuple(checks))
