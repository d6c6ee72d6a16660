"""Exhaustive enumeration of powerful sets and census statistics.

Subsets are decided in increasing mask order.  Every proper subset of ``W``
has a smaller mask, so when ``W`` is reached the number of chosen members
inside ``W`` is final apart from ``W`` itself and must be made a power of two
on the spot.  That only leaves a real choice when the count so far is 1.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .core import SetSystem, is_powerful_naive
from .elements import is_star
from .errors import GroundTooLarge, PowerfulError
from .linearity import is_linear
from .subsets import is_power_of_two, log2_exact

MAX_ORDER = 5
NAIVE_MAX_ORDER = 4
CACHE_VERSION = "v1"


def _check_order(n: int, cap: int):
    if not 0 <= n <= cap:
        raise GroundTooLarge(f"order {n} outside 0..{cap}")


def _search(n: int, rank: Optional[int], must_contain: frozenset, must_avoid: frozenset) -> list[int]:
    size = 1 << n
    chosen = [False] * size
    out: list[int] = []
    cap = None if rank is None else 1 << rank

    def inner_count(w: int) -> int:
        c = 0
        sub = (w - 1) & w
        while True:
            if chosen[sub]:
                c += 1
            if sub == 0:
                return c
            sub = (sub - 1) & w

    def visit(w: int, members: int, charvec: int):
        if w == size:
            if cap is None or members == cap:
                out.append(charvec)
            return
        p = inner_count(w) if w else 0
        options = []
        if w not in must_contain and is_power_of_two(p):
            options.append(0)
        if w not in must_avoid and is_power_of_two(p + 1):
            options.append(1)
        for take in options:
            if cap is not None and members + take > cap:
                continue
            chosen[w] = bool(take)
            visit(w + 1, members + take, charvec | (take << w))
        chosen[w] = False

    visit(0, 0, 0)
    out.sort()
    return out


def system_from_characteristic(n: int, charvec: int) -> SetSystem:
    return SetSystem(n, tuple(w for w in range(1 << n) if charvec >> w & 1))


def enumerate_powerful(n: int, rank: Optional[int] = None, must_contain: Iterable[int] = (),
                       must_avoid: Iterable[int] = ()) -> Iterator[SetSystem]:
    """Yield every powerful set of order ``n`` once, ordered by characteristic vector.

    The characteristic vector packs membership of mask ``W`` into bit ``W``;
    systems come out in increasing order of that integer, i.e. colex order.
    """
    _check_order(n, MAX_ORDER)
    for c in _search(n, rank, frozenset(must_contain), frozenset(must_avoid)):
        yield system_from_characteristic(n, c)


def enumerate_naive(n: int) -> Iterator[SetSystem]:
    """Check every ∅-containing system straight from the definition."""
    _check_order(n, NAIVE_MAX_ORDER)
    for rest in range(1 << ((1 << n) - 1)):
        s = system_from_characteristic(n, (rest << 1) | 1)
        if is_powerful_naive(s):
            yield s


def all_set_systems(n: int, with_empty: bool | None = None) -> Iterator[SetSystem]:
    """Every ``S`` in ``2^(2^E)``; ``with_empty`` restricts to (non-)∅-containing ones."""
    _check_order(n, NAIVE_MAX_ORDER)
    for c in range(1 << (1 << n)):
        if with_empty is None or bool(c & 1) == with_empty:
            yield system_from_characteristic(n, c)


def rank_of_system(s: SetSystem) -> int:
    return log2_exact(len(s))


@dataclass
class EnumerationReport:
    """Census of the powerful sets of one order.

    ``with_star_count`` counts sets having any star; ``star_at_last_count``
    counts those in which the highest-labelled element is a star, which is in
    bijection with the powerful sets of order ``n - 1``.
    """

    n: int
    total: int
    by_rank: dict[int, int]
    linear_count: int
    nonlinear_count: int
    with_star_count: int
    star_at_last_count: int = 0
    runtime: float = field(default=0.0, compare=False)

    def as_dict(self, timing: bool = False) -> dict:
        d = {
            "n": self.n,
            "total": self.total,
            "by_rank": {str(k): v for k, v in sorted(self.by_rank.items())},
            "linear_count": self.linear_count,
            "nonlinear_count": self.nonlinear_count,
            "with_star_count": self.with_star_count,
            "star_at_last_count": self.star_at_last_count,
        }
        if timing:
            d["runtime"] = self.runtime
        return d


def has_star(s: SetSystem) -> bool:
    return any(is_star(s, e) for e in s.labels)


def census_from_systems(n: int, systems: Iterable[SetSystem], linear_flags=None) -> EnumerationReport:
    by_rank: Counter = Counter()
    total = linear = star = star_last = 0
    systems = list(systems)
    if linear_flags is None:
        linear_flags = [is_linear(s) for s in systems]
    for s, lin in zip(systems, linear_flags):
        total += 1
        by_rank[rank_of_system(s)] += 1
        linear += lin
        star += has_star(s)
        star_last += n >= 1 and is_star(s, s.labels[-1])
    return EnumerationReport(n, total, dict(sorted(by_rank.items())), linear, total - linear, star, star_last)


def census(n: int, cache: str | Path | None = None) -> EnumerationReport:
    """Count powerful sets of order ``n`` by rank, linearity and star content.

    With ``cache``, a matching census file is reused, and written otherwise.
    """
    _check_order(n, MAX_ORDER)
    t0 = time.perf_counter()
    records = None
    if cache is not None and Path(cache).exists():
        try:
            records = read_census_cache(cache, n)
        except PowerfulError:
            records = None
    if records is None:
        systems = list(enumerate_powerful(n))
        flags = [is_linear(s) for s in systems]
        if cache is not None:
            write_census_cache(cache, n, systems, flags)
    else:
        systems = [s for s, _ in records]
        flags = [lin for _, lin in records]
    report = census_from_systems(n, systems, flags)
    report.runtime = time.perf_counter() - t0
    return report


def format_census_record(s: SetSystem, linear: bool) -> str:
    bits = "".join("1" if w in s else "0" for w in range(1 << s.n))
    return f"{s.n} {rank_of_system(s)} {int(linear)} {bits}"


def census_lines(n: int, systems: Iterable[SetSystem], linear_flags=None) -> list[str]:
    systems = list(systems)
    if linear_flags is None:
        linear_flags = [is_linear(s) for s in systems]
    lines = [f"powerful-census {CACHE_VERSION} n={n}"]
    lines += [format_census_record(s, lin) for s, lin in zip(systems, linear_flags)]
    return lines


def write_census_cache(path: str | Path, n: int, systems: Iterable[SetSystem], linear_flags=None):
    Path(path).write_text("\n".join(census_lines(n, systems, linear_flags)) + "\n")


def read_census_cache(path: str | Path, n: int | None = None) -> list[tuple[SetSystem, bool]]:
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise PowerfulError(f"{path}: empty census file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "powerful-census" or head[1] != CACHE_VERSION or not head[2].startswith("n="):
        raise PowerfulError(f"{path}: bad census header {lines[0]!r}")
    order = int(head[2][2:])
    if n is not None and order != n:
        raise PowerfulError(f"{path}: census is for n={order}, wanted n={n}")
    out = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 4:
            raise PowerfulError(f"{path}:{lineno}: expected 4 fields")
        k, rank, lin, bits = parts
        if int(k) != order or len(bits) != 1 << order or set(bits) - {"0", "1"} or lin not in ("0", "1"):
            raise PowerfulError(f"{path}:{lineno}: malformed record")
        s = SetSystem(order, tuple(w for w, b in enumerate(bits) if b == "1"))
        if not is_power_of_two(len(s)) or rank_of_system(s) != int(rank):
            raise PowerfulError(f"{path}:{lineno}: rank field disagrees with member count")
        out.append((s, lin == "1"))
    return out
