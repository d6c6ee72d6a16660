"""Contraction, deletion and deletable elements.

For a multiset with indicator ``f`` and element ``e``:

* contraction keeps ``f(X)`` for every ``X`` avoiding ``e``;
* deletion merges each pair into ``f(X) + f(X + e)``.

Both shrink the ground set by one.  Surviving elements keep their labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Multiset, SetSystem, as_multiset, as_set, is_powerful_set
from .errors import NotASet, NotPowerful, OverlappingSpec
from .subsets import Indicator, remove_bit


@dataclass(frozen=True)
class MinorSpec:
    """Bitmasks (over the source ground set) of elements to contract and delete."""

    contract: int = 0
    delete: int = 0

    def __post_init__(self):
        if self.contract & self.delete:
            raise OverlappingSpec("an element cannot be both contracted and deleted")


def _drop(m: Multiset, e: int, merge: bool) -> Multiset:
    i = m.bit(e)
    bit = 1 << i
    vals = m.f.values
    out = [0] * (1 << (m.n - 1))
    for x in range(1 << m.n):
        if x & bit:
            continue
        out[remove_bit(x, i)] = vals[x] + vals[x | bit] if merge else vals[x]
    labels = m.labels[:i] + m.labels[i + 1:]
    return Multiset(Indicator(m.n - 1, tuple(out)), labels)


def contract(m: SetSystem | Multiset, e: int) -> Multiset:
    return _drop(as_multiset(m), e, merge=False)


def delete(m: SetSystem | Multiset, e: int) -> Multiset:
    return _drop(as_multiset(m), e, merge=True)


def is_deletable(s: SetSystem, e: int) -> bool:
    """True when ``S \\ e`` normalizes to a {0,1}-valued indicator."""
    if not is_powerful_set(s):
        raise NotPowerful("deletability is defined for powerful sets")
    try:
        as_set(delete(s, e))
    except NotASet:
        return False
    return True


def deletable_elements(s: SetSystem) -> list[int]:
    return [e for e in s.labels if is_deletable(s, e)]


def minor(m: SetSystem | Multiset, spec: MinorSpec) -> Multiset:
    """Contract then delete every element named in ``spec``; order does not matter."""
    m = as_multiset(m)
    full = (1 << m.n) - 1
    if (spec.contract | spec.delete) & ~full:
        raise ValueError(f"minor spec names elements outside the ground set of size {m.n}")
    contract_labels = m.labels_of(spec.contract)
    delete_labels = m.labels_of(spec.delete)
    for e in contract_labels:
        m = contract(m, e)
    for e in delete_labels:
        m = delete(m, e)
    return m


def minor_by_labels(m: SetSystem | Multiset, contract: Iterable[int] = (), delete: Iterable[int] = ()) -> Multiset:
    m = as_multiset(m)
    return minor(m, MinorSpec(m.mask_of(contract), m.mask_of(delete)))
