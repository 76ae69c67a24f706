"""Profiles of weak orders, committees, and the plain-text profile format.

Alternatives are the integers ``1..m``. A weak order is stored as its
ordered partition into indifference classes, best class first. Committees
are ascending tuples of alternatives.

File format::

    # comment
    m k n
    {1,3},2,{4}
    ...

One agent per line after the header; braces delimit a tie class and a
singleton class may omit them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, ValidationError

Committee = tuple  # ascending tuple of ints


@dataclass(frozen=True)
class WeakOrder:
    """One agent's preferences as an ordered partition of ``1..m``.

    ``classes[0]`` is the most preferred equivalence class. Class indices
    reported by :meth:`rank` are 1-based.
    """

    classes: tuple
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        classes = tuple(tuple(sorted(c)) for c in self.classes)
        if any(not c for c in classes):
            raise ValidationError("empty equivalence class")
        rank = {}
        for index, cls in enumerate(classes, start=1):
            for a in cls:
                if a in rank:
                    raise ValidationError(f"alternative {a} appears twice")
                rank[a] = index
        m = len(rank)
        if set(rank) != set(range(1, m + 1)):
            raise ValidationError(
                f"classes do not partition 1..{m}: got {sorted(rank)}"
            )
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "_rank", rank)

    @classmethod
    def from_ranking(cls, ranking: Iterable) -> "WeakOrder":
        """Build from a list whose items are alternatives or iterables of tied alternatives."""
        classes = []
        for item in ranking:
            if isinstance(item, int):
                classes.append((item,))
            else:
                classes.append(tuple(item))
        return cls(tuple(classes))

    @property
    def m(self) -> int:
        return len(self._rank)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def top(self) -> tuple:
        return self.classes[0]

    def rank(self, a: int) -> int:
        return self._rank[a]

    def prefers(self, a: int, b: int) -> bool:
        """Strict preference of ``a`` over ``b``."""
        return self._rank[a] < self._rank[b]

    def __str__(self):
        return format_order(self)


@dataclass(frozen=True)
class Profile:
    m: int
    k: int
    orders: tuple

    def __post_init__(self):
        orders = tuple(self.orders)
        object.__setattr__(self, "orders", orders)
        if self.m < 1:
            raise ValidationError("need at least one alternative")
        if not orders:
            raise ValidationError("need at least one agent")
        if not 1 <= self.k <= self.m:
            raise ValidationError(f"committee size k={self.k} outside 1..{self.m}")
        for i, order in enumerate(orders, start=1):
            if order.m != self.m:
                raise ValidationError(
                    f"agent {i} ranks {order.m} alternatives, expected {self.m}"
                )

    @classmethod
    def from_rankings(cls, rankings: Sequence, k: int) -> "Profile":
        orders = tuple(WeakOrder.from_ranking(r) for r in rankings)
        return cls(orders[0].m if orders else 0, k, orders)

    @property
    def n(self) -> int:
        return len(self.orders)

    @property
    def alternatives(self) -> range:
        return range(1, self.m + 1)

    def order(self, agent: int) -> WeakOrder:
        """Order of ``agent`` (1-based)."""
        return self.orders[agent - 1]

    def replace(self, agent: int, order: WeakOrder) -> "Profile":
        orders = list(self.orders)
        orders[agent - 1] = order
        return Profile(self.m, self.k, tuple(orders))

    def committees(self) -> Iterator[Committee]:
        """All of S_k(A) in lexicographic order."""
        return combinations(self.alternatives, self.k)

    def __str__(self):
        return format_profile(self)


def make_committee(members: Iterable[int], profile: Profile | None = None) -> Committee:
    """Canonical committee from any iterable; validated against ``profile`` if given."""
    members = tuple(sorted(members))
    if len(set(members)) != len(members):
        raise ValidationError(f"duplicate members in committee {members}")
    if profile is not None:
        if len(members) != profile.k:
            raise ValidationError(
                f"committee {format_committee(members)} has size {len(members)}, expected k={profile.k}"
            )
        if members and (members[0] < 1 or members[-1] > profile.m):
            raise ValidationError(f"committee members must lie in 1..{profile.m}")
    return members


def topwidth(profile: Profile) -> int:
    return max(len(order.top) for order in profile.orders)


def is_dichotomous(profile: Profile) -> bool:
    return all(order.num_classes == 2 for order in profile.orders)


def is_strict(profile: Profile) -> bool:
    return all(order.num_classes == profile.m for order in profile.orders)


def rank_vector(order: WeakOrder, w: Iterable[int]) -> tuple:
    """Sorted class indices of the members of ``w``; first entry is the best class."""
    return tuple(sorted(order.rank(a) for a in w))


def all_weak_orders(m: int) -> list:
    """Every weak order over ``1..m``, sorted by their class tuples.

    There are Fubini-number many (1, 3, 13, 75, 541, ... for m = 1, 2, 3, ...).
    """

    def ordered_partitions(items):
        if not items:
            yield ()
            return
        rest_universe = items
        for size in range(1, len(rest_universe) + 1):
            for first in combinations(rest_universe, size):
                remaining = tuple(x for x in rest_universe if x not in first)
                for tail in ordered_partitions(remaining):
                    yield (first,) + tail

    orders = [WeakOrder(p) for p in ordered_partitions(tuple(range(1, m + 1)))]
    orders.sort(key=lambda o: o.classes)
    return orders


# ---------------------------------------------------------------------------
# text format

_HEADER = re.compile(r"^(\d+) (\d+) (\d+)$")
_TOKEN = re.compile(r"\s*(\{[^{}]*\}|[^,{}]+)\s*(?:,|$)")


def _parse_order_line(line: str, lineno: int) -> tuple:
    classes = []
    pos = 0
    text = line.strip()
    if not text:
        raise ParseError("empty preference line", lineno)
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError(f"cannot parse preference list {text!r}", lineno)
        token = match.group(1).strip()
        if token.startswith("{"):
            body = token[1:-1].strip()
            if not body:
                raise ParseError("empty tie class {}", lineno)
            items = [s.strip() for s in body.split(",")]
        else:
            items = [token]
        try:
            cls = tuple(int(s) for s in items)
        except ValueError:
            raise ParseError(f"non-integer alternative in {token!r}", lineno) from None
        classes.append(cls)
        pos = match.end()
        if text[pos - 1:pos] == "," and pos == len(text):
            raise ParseError("trailing comma", lineno)
    return tuple(classes)


def parse_profile(text: str) -> Profile:
    """Parse profile text; raises ParseError or ValidationError."""
    lines = [
        (lineno, raw.strip())
        for lineno, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing header line 'm k n'", 1)
    lineno, header = lines[0]
    match = _HEADER.match(header)
    if match is None:
        raise ParseError(f"bad header {header!r}, expected 'm k n'", lineno)
    m, k, n = (int(g) for g in match.groups())
    body = lines[1:]
    if len(body) != n:
        last = body[-1][0] if body else lineno
        raise ParseError(f"expected {n} agent lines, found {len(body)}", last)
    orders = []
    for lineno, line in body:
        classes = _parse_order_line(line, lineno)
        seen = [a for cls in classes for a in cls]
        bad = [a for a in seen if not 1 <= a <= m]
        if bad:
            raise ValidationError(f"line {lineno}: alternative {bad[0]} outside 1..{m}")
        if len(set(seen)) != len(seen):
            raise ValidationError(f"line {lineno}: duplicate alternative")
        if len(seen) != m:
            raise ValidationError(f"line {lineno}: classes do not cover all of 1..{m}")
        orders.append(WeakOrder(classes))
    return Profile(m, k, tuple(orders))


def load_profile(path) -> Profile:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read())


def format_order(order: WeakOrder) -> str:
    parts = []
    for cls in order.classes:
        if len(cls) == 1:
            parts.append(str(cls[0]))
        else:
            parts.append("{" + ",".join(map(str, cls)) + "}")
    return ",".join(parts)


def format_profile(profile: Profile) -> str:
    lines = [f"{profile.m} {profile.k} {profile.n}"]
    lines.extend(format_order(o) for o in profile.orders)
    return "\n".join(lines) + "\n"


def format_committee(w: Iterable[int]) -> str:
    return ",".join(str(a) for a in w)


def parse_committee(text: str) -> Committee:
    try:
        return make_committee(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise ValidationError(f"bad committee {text!r}") from None


def random_weak_order(m: int, rng, classes: int | None = None) -> WeakOrder:
    """Uniformly shuffled alternatives cut into ``classes`` non-empty classes.

    Cut points are uniform; with ``classes`` unset the number of classes is
    itself uniform on 1..m.
    """
    items = list(range(1, m + 1))
    rng.shuffle(items)
    if classes is None:
        classes = rng.randint(1, m)
    if not 1 <= classes <= m:
        raise ValidationError(f"cannot split {m} alternatives into {classes} classes")
    cuts = sorted(rng.sample(range(1, m), classes - 1))
    bounds = [0] + cuts + [m]
    return WeakOrder(tuple(tuple(items[a:b]) for a, b in zip(bounds, bounds[1:])))
