"""Linear (binary-code) powerful sets and subcardinal rank functions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Multiset, RankTable, SetSystem, as_set, is_powerful_multiset, rank_table
from .errors import EmptySystem, NonIntegerRank, NotASet
from .subsets import popcount

PAIRWISE_MAX_SIZE = 1 << 12


@dataclass(frozen=True)
class LinearityReport:
    linear: bool
    subcardinal: bool
    xor_witness: Optional[tuple[int, int]] = None
    rank_witness: Optional[int] = None


def _require_empty(s: SetSystem):
    if 0 not in s:
        raise EmptySystem("linearity needs the empty set as a member")


def _pairwise_violation(s: SetSystem):
    ms = [m for m in s.members if m]
    for i, x in enumerate(ms):
        for y in ms[i + 1:]:
            if x ^ y not in s:
                return x, y
    return None


def gf2_basis(vectors) -> list[int]:
    """Greedy basis drawn from ``vectors`` themselves (so basis elements are members)."""
    pivots: dict[int, int] = {}
    basis = []
    for v in vectors:
        r = v
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                basis.append(v)
                break
            r ^= pivots[top]
    return basis


def _basis_violation(s: SetSystem):
    basis = gf2_basis(s.members)
    if len(s) == 1 << len(basis):
        return None
    # S is closed iff it is closed under xor with each basis member
    for x in s.members:
        for b in basis:
            if x ^ b not in s:
                return tuple(sorted((x, b)))
    raise AssertionError("size mismatch without a violating pair")


def xor_violation(s: SetSystem, method: str = "auto"):
    """A pair of members whose symmetric difference is missing, or None."""
    _require_empty(s)
    if method == "pairwise" or (method == "auto" and len(s) <= PAIRWISE_MAX_SIZE):
        return _pairwise_violation(s)
    return _basis_violation(s)


def is_linear(s: SetSystem) -> bool:
    return xor_violation(s) is None


def subcardinal_violation(r: RankTable):
    """A minimum-cardinality ``X`` with ``r(X) > |X|``, or None."""
    if not r.all_integer():
        raise NonIntegerRank("subcardinality needs an integer rank table")
    for x in sorted(range(1 << r.n), key=lambda m: (popcount(m), m)):
        if r[x] > popcount(x):
            return x
    return None


def is_subcardinal(r: RankTable) -> bool:
    return subcardinal_violation(r) is None


def xor_span(s: SetSystem) -> SetSystem:
    _require_empty(s)
    span = {0}
    for b in gf2_basis(s.members):
        span |= {v ^ b for v in span}
    return SetSystem(s.n, tuple(sorted(span)), s.labels)


def linearity_report(s: SetSystem) -> LinearityReport:
    w = xor_violation(s)
    x = subcardinal_violation(rank_table(s))
    return LinearityReport(w is None, x is None, w, x)


def is_linear_multiset(m: Multiset) -> bool:
    """A powerful multiset is linear when it normalizes to a linear set."""
    if not is_powerful_multiset(m):
        return False
    try:
        s = as_set(m)
    except NotASet:
        return False
    return is_linear(s)
