"""Set systems, multisets, powerfulness and the rank function.

Ranks are computed exactly: ``r(X) = log2(z(∅) / z(X))`` where ``z(X)`` is the
mass supported inside the complement of ``X``.  Entries for which the ratio is
not a power of two are stored as :data:`NON_INTEGER` rather than raising, so a
non-powerful system can still be inspected.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DivisionFailure,
    DuplicateMember,
    ElementOutOfRange,
    EmptySetMissing,
    GroundTooLarge,
    NotASet,
    NotPowerful,
    OutOfRangeMask,
)
from .subsets import (
    Indicator,
    complement,
    full_mask,
    is_power_of_two,
    log2_exact,
    zeta_transform,
)

ISOMORPHISM_MAX_ORDER = 8


class _NonInteger:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NonInteger"

    def __reduce__(self):
        return (_NonInteger, ())


NON_INTEGER = _NonInteger()


def _default_labels(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _check_labels(labels: tuple[int, ...], n: int) -> tuple[int, ...]:
    if labels is None:
        return _default_labels(n)
    labels = tuple(labels)
    if len(labels) != n or len(set(labels)) != n:
        raise ValueError(f"need {n} distinct labels, got {labels}")
    return labels


class _Labelled:
    """Element-label lookup shared by SetSystem and Multiset.

    ``labels[i]`` is the external name of bit ``i``.  Labels survive minors so
    reports can refer to the original elements.
    """

    def bit(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ElementOutOfRange(f"element {label} not in ground set {list(self.labels)}") from None

    def labels_of(self, mask: int) -> list[int]:
        return [self.labels[i] for i in range(self.n) if mask >> i & 1]

    def mask_of(self, labels: Iterable[int]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.bit(label)
        return mask

    def format_subset(self, mask: int) -> str:
        return "{" + ",".join(map(str, self.labels_of(mask))) + "}"


@dataclass(frozen=True)
class SetSystem(_Labelled):
    n: int
    members: tuple[int, ...]
    labels: tuple[int, ...] = field(default=None, compare=False)

    def __post_init__(self):
        members = tuple(self.members)
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ValueError("members must be strictly increasing")
        if members and not (0 <= members[0] and members[-1] < 1 << self.n):
            raise OutOfRangeMask(f"member out of range for n={self.n}")
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "labels", _check_labels(self.labels, self.n))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask):
        return mask in self._member_set

    @property
    def _member_set(self) -> frozenset[int]:
        cached = self.__dict__.get("_members_cache")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_members_cache", cached)
        return cached

    def indicator(self) -> Indicator:
        return Indicator.from_masks(self.n, self.members)

    def characteristic(self) -> int:
        """Membership vector packed into an int: bit ``W`` set iff ``W`` is a member."""
        c = 0
        for m in self.members:
            c |= 1 << m
        return c

    def __str__(self):
        return "{" + ", ".join(self.format_subset(m) for m in self.members) + "}"


@dataclass(frozen=True)
class Multiset(_Labelled):
    f: Indicator
    labels: tuple[int, ...] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", _check_labels(self.labels, self.f.n))

    @property
    def n(self) -> int:
        return self.f.n

    def __getitem__(self, mask):
        return self.f[mask]

    def size(self) -> int:
        return self.f.total()

    def scale(self, alpha: int) -> Multiset:
        return Multiset(self.f.scale(alpha), self.labels)

    def __str__(self):
        parts = []
        for m, v in enumerate(self.f.values):
            if v:
                s = self.format_subset(m)
                parts.append(s if v == 1 else f"{s}x{v}")
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class RankTable:
    n: int
    values: tuple

    def __getitem__(self, mask):
        return self.values[mask]

    def all_integer(self) -> bool:
        return NON_INTEGER not in self.values

    def rank(self) -> int | _NonInteger:
        return self.values[full_mask(self.n)]


def make_set_system(n: int, subsets: Iterable[int], labels: Sequence[int] | None = None) -> SetSystem:
    subsets = list(subsets)
    for m in subsets:
        if not 0 <= m < 1 << n:
            raise OutOfRangeMask(f"mask {m} out of range for n={n}")
    counts = Counter(subsets)
    dup = [m for m, c in counts.items() if c > 1]
    if dup:
        raise DuplicateMember(f"mask {min(dup):#b} listed more than once")
    return SetSystem(n, tuple(sorted(subsets)), labels)


def make_multiset(n: int, masks: Iterable[int] = (), counts: dict[int, int] | None = None,
                  labels: Sequence[int] | None = None) -> Multiset:
    """Build a multiset from repeated masks and/or an explicit ``{mask: count}`` map."""
    f = Indicator.from_masks(n, masks)
    if counts:
        values = list(f.values)
        for m, c in counts.items():
            if not 0 <= m < 1 << n:
                raise OutOfRangeMask(f"mask {m} out of range for n={n}")
            values[m] += c
        f = Indicator(n, tuple(values))
    return Multiset(f, labels)


def power_set(n: int) -> SetSystem:
    return SetSystem(n, tuple(range(1 << n)))


def as_multiset(s: SetSystem | Multiset) -> Multiset:
    if isinstance(s, Multiset):
        return s
    return Multiset(s.indicator(), s.labels)


def is_powerful_set(s: SetSystem) -> bool:
    g = zeta_transform(s.indicator())
    return all(is_power_of_two(v) for v in g.values)


def _rank_values(f: Indicator) -> tuple:
    if f[0] == 0:
        raise EmptySetMissing("rank undefined: the empty set has multiplicity 0")
    g = zeta_transform(f).values
    n = f.n
    top = g[full_mask(n)]
    out = []
    for x in range(1 << n):
        zx = g[complement(x, n)]
        q, rem = divmod(top, zx)
        out.append(log2_exact(q) if rem == 0 and is_power_of_two(q) else NON_INTEGER)
    return tuple(out)


def rank_table(m: SetSystem | Multiset) -> RankTable:
    m = as_multiset(m)
    return RankTable(m.n, _rank_values(m.f))


def is_powerful_multiset(m: SetSystem | Multiset) -> bool:
    return rank_table(m).all_integer()


def normalize(m: Multiset) -> Multiset:
    """Divide every multiplicity by that of the empty set."""
    m = as_multiset(m)
    if not is_powerful_multiset(m):
        raise NotPowerful("normalize needs a powerful multiset")
    d = m.f[0]
    values = []
    for mask, v in enumerate(m.f.values):
        q, rem = divmod(v, d)
        if rem:
            raise DivisionFailure(f"f(∅)={d} does not divide f({mask:#b})={v}")
        values.append(q)
    return Multiset(Indicator(m.n, tuple(values)), m.labels)


def as_set(m: Multiset) -> SetSystem:
    """The set a powerful multiset is isomorphic to, or raise :class:`NotASet`."""
    norm = normalize(m)
    for mask, v in enumerate(norm.f.values):
        if v > 1:
            raise NotASet(mask, v)
    return SetSystem(norm.n, tuple(norm.f.support()), norm.labels)


def _permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i, j in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << j
    return out


def is_isomorphic(m1: SetSystem | Multiset, m2: SetSystem | Multiset) -> bool:
    m1, m2 = as_multiset(m1), as_multiset(m2)
    if max(m1.n, m2.n) > ISOMORPHISM_MAX_ORDER:
        raise GroundTooLarge(f"isomorphism search capped at n={ISOMORPHISM_MAX_ORDER}")
    if m1.n != m2.n:
        return False
    a, b = normalize(m1), normalize(m2)
    n = a.n
    ra, rb = rank_table(a), rank_table(b)
    singles = lambda r: sorted(r[1 << i] for i in range(n))
    if singles(ra) != singles(rb) or a.size() != b.size():
        return False
    fa, fb = a.f.values, b.f.values
    for perm in itertools.permutations(range(n)):
        if all(fa[x] == fb[_permute_mask(x, perm)] for x in range(1 << n)):
            return True
    return False


def rank_of(m: SetSystem | Multiset, x: int):
    return rank_table(m)[x]


def subset_count_oracle(s: SetSystem) -> list[int]:
    """Per-``X`` count of members contained in ``X``, by direct double loop."""
    return [sum(1 for y in s.members if y & ~x == 0) for x in range(1 << s.n)]


def is_powerful_naive(s: SetSystem) -> bool:
    return all(is_power_of_two(c) for c in subset_count_oracle(s))


def rank_naive(s: SetSystem, x: int):
    """Rank straight from the definition: log2(|S| / #{Y in S : Y avoids X})."""
    avoid = sum(1 for y in s.members if y & x == 0)
    if avoid == 0 or len(s) % avoid:
        return NON_INTEGER
    q = len(s) // avoid
    return log2_exact(q) if is_power_of_two(q) else NON_INTEGER

