"""Degenerate elements, extensions, direct sums and cocircuits.

Four kinds of degenerate element, for ``e`` and a system ``T`` on ``E - e``:

* loop    ``T + o_e``  = T
* coloop  ``T + o*_e`` = {X, X+e : X in T}
* frame   ``T + []_e`` = {X+e : X in T, X nonempty} + {∅}
* star    ``T + *_e``  = {X : X in T} + {X+e : X not in T}

The flags are independent; an element may be both a frame and a star.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import SetSystem, is_powerful_set, rank_table
from .errors import ElementAlreadyPresent, GroundTooLarge, NotFound, NotPowerful
from .subsets import full_mask, insert_bit, popcount

FROM_COCIRCUITS_MAX_ORDER = 4


@dataclass(frozen=True)
class ElementClass:
    element: int
    is_loop: bool
    is_coloop: bool
    is_frame: bool
    is_star: bool


@dataclass(frozen=True)
class CocircuitSet:
    n: int
    cocircuits: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(sorted(set(self.cocircuits)))
        if 0 in cs:
            raise ValueError("the empty set is never a cocircuit")
        for a in cs:
            for b in cs:
                if a != b and a & b == a:
                    raise ValueError(f"cocircuits {a:#b} and {b:#b} are comparable")
        object.__setattr__(self, "cocircuits", cs)

    def __iter__(self):
        return iter(self.cocircuits)

    def __len__(self):
        return len(self.cocircuits)


def is_loop(s: SetSystem, e: int) -> bool:
    bit = 1 << s.bit(e)
    return not any(m & bit for m in s.members)


def _is_coloop_structural(s: SetSystem, bit: int) -> bool:
    return all(m ^ bit in s for m in s.members)


def is_coloop(s: SetSystem, e: int, powerful: bool | None = None) -> bool:
    """Coloop test.

    On powerful systems this is just ``{e} in S``; otherwise the system must be
    closed under toggling ``e``.  ``powerful`` may be passed when already known.
    """
    bit = 1 << s.bit(e)
    if powerful is None:
        powerful = is_powerful_set(s)
    if not powerful:
        return _is_coloop_structural(s, bit)
    fast = bit in s
    assert fast == _is_coloop_structural(s, bit)
    return fast


def is_coloop_by_theorem(s: SetSystem, e: int) -> bool:
    """``{e} in S``; only meaningful on powerful systems."""
    if not is_powerful_set(s):
        raise NotPowerful("the singleton coloop test assumes a powerful set")
    return 1 << s.bit(e) in s


def is_frame(s: SetSystem, e: int) -> bool:
    bit = 1 << s.bit(e)
    return 0 in s and all(m & bit for m in s.members if m)


def _is_star_structural(s: SetSystem, bit: int) -> bool:
    # exactly one of X, X+e is a member for every X avoiding e
    return all((x in s) != (x | bit in s) for x in range(1 << s.n) if not x & bit)


def is_star(s: SetSystem, e: int, ranks=None) -> bool:
    """Star test via ranks: ``r(X) == |X|`` for every ``X`` avoiding ``e``.

    That condition alone also holds in the full power set, which has no star,
    so the rank of ``S`` must additionally be ``n - 1``.  Falls back to the
    structural definition when ``S`` is not powerful.
    """
    bit = 1 << s.bit(e)
    if ranks is None:
        if not is_powerful_set(s):
            return _is_star_structural(s, bit)
        ranks = rank_table(s)
    by_rank = ranks[full_mask(s.n)] == s.n - 1 and all(
        ranks[x] == popcount(x) for x in range(1 << s.n) if not x & bit
    )
    assert by_rank == _is_star_structural(s, bit)
    return by_rank


def classify(s: SetSystem) -> list[ElementClass]:
    powerful = is_powerful_set(s)
    ranks = rank_table(s) if powerful else None
    return [
        ElementClass(
            element=label,
            is_loop=is_loop(s, label),
            is_coloop=is_coloop(s, label, powerful),
            is_frame=is_frame(s, label),
            is_star=is_star(s, label, ranks) if powerful else _is_star_structural(s, 1 << i),
        )
        for i, label in enumerate(s.labels)
    ]


def _extend(t: SetSystem, e: int, build) -> SetSystem:
    if e in t.labels:
        raise ElementAlreadyPresent(f"element {e} already in ground set {list(t.labels)}")
    pos = sum(1 for label in t.labels if label < e)
    labels = t.labels[:pos] + (e,) + t.labels[pos:]
    lifted = [insert_bit(m, pos) for m in t.members]
    bit = 1 << pos
    members = build(lifted, bit, t.n + 1)
    return SetSystem(t.n + 1, tuple(sorted(set(members))), labels)


def add_loop(t: SetSystem, e: int) -> SetSystem:
    return _extend(t, e, lambda ms, bit, n: ms)


def add_coloop(t: SetSystem, e: int) -> SetSystem:
    return _extend(t, e, lambda ms, bit, n: ms + [m | bit for m in ms])


def add_frame(t: SetSystem, e: int) -> SetSystem:
    return _extend(t, e, lambda ms, bit, n: [m | bit for m in ms if m] + [0])


def add_star(t: SetSystem, e: int) -> SetSystem:
    def build(ms, bit, n):
        inside = set(ms)
        outside = [x | bit for x in range(1 << n) if not x & bit and x not in inside]
        return ms + outside

    return _extend(t, e, build)


def direct_sum(s: SetSystem, t: SetSystem) -> SetSystem:
    """``{X | Y}`` with ``T``'s elements placed above ``S``'s."""
    shift = s.n
    top = max(s.labels, default=0)
    labels = s.labels + tuple(top + i + 1 for i in range(t.n))
    members = sorted(x | (y << shift) for x in s.members for y in t.members)
    return SetSystem(s.n + t.n, tuple(members), labels)


def cocircuits(s: SetSystem) -> CocircuitSet:
    nonempty = [m for m in s.members if m]
    minimal = [m for m in nonempty if not any(c != m and c & m == c for c in nonempty)]
    return CocircuitSet(s.n, tuple(minimal))


def from_cocircuits(c: CocircuitSet | Iterable[int], n: int) -> SetSystem:
    """Search the order-``n`` powerful sets for the one with these cocircuits."""
    # local import: enumeration depends on this module's star/linearity helpers
    from .enumeration import enumerate_powerful

    if n > FROM_COCIRCUITS_MAX_ORDER:
        raise GroundTooLarge(f"cocircuit search capped at n={FROM_COCIRCUITS_MAX_ORDER}")
    target = c.cocircuits if isinstance(c, CocircuitSet) else CocircuitSet(n, tuple(c)).cocircuits
    if any(m > full_mask(n) for m in target):
        raise ValueError(f"cocircuit out of range for n={n}")
    for s in enumerate_powerful(n):
        if cocircuits(s).cocircuits == target:
            return s
    raise NotFound("no powerful set has exactly these cocircuits")
