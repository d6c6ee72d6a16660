"""Machine checks of the structural results on exhaustively enumerated domains.

Each checker walks its domain and returns ``(instances, counterexamples)``;
a counterexample is a human-readable string naming the system and witness.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .core import (
    Indicator,
    Multiset,
    SetSystem,
    as_multiset,
    as_set,
    is_powerful_multiset,
    is_powerful_set,
    normalize,
    rank_naive,
    rank_table,
)
from .elements import (
    _is_coloop_structural,
    _is_star_structural,
    cocircuits,
    direct_sum,
    is_frame,
    is_loop,
)
from .enumeration import enumerate_powerful, rank_of_system
from .errors import GroundTooLarge, UnknownTheoremId
from .linearity import is_linear, is_linear_multiset, is_subcardinal
from .minors import contract, delete, is_deletable
from .subsets import _zeta_python, format_mask, full_mask, is_power_of_two, popcount, remove_bit

EXHAUSTIVE_MAX_ORDER = 4
STAR_MAX_ORDER = 5


@dataclass
class VerificationReport:
    theorem_id: str
    n: int
    instances_checked: int
    counterexamples: list[str] = field(default_factory=list)
    runtime: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        return (f"{self.theorem_id} n={self.n}: {len(self.counterexamples)} counterexamples"
                f" / {self.instances_checked} instances")

    def as_dict(self, timing: bool = False) -> dict:
        d = {
            "theorem_id": self.theorem_id,
            "n": self.n,
            "instances_checked": self.instances_checked,
            "counterexamples": list(self.counterexamples),
        }
        if timing:
            d["runtime"] = self.runtime
        return d


def multiset_domain(n: int, alphas=(1, 2, 3)) -> list[Multiset]:
    """Scaled powerful sets of order ``n`` and all their deletion minors."""
    out = []
    for s in enumerate_powerful(n):
        base = as_multiset(s)
        for r in range(n + 1):
            for drop in itertools.combinations(s.labels, r):
                m = base
                for e in drop:
                    m = delete(m, e)
                out.extend(m.scale(a) for a in alphas)
    return out


def random_multiset_corpus(count: int, seed: int = 0, max_order: int = 6) -> list[Multiset]:
    """Random powerful multisets: direct sums of enumerated sets, a few deletions, a scaling."""
    rng = random.Random(seed)
    pools = {k: list(enumerate_powerful(k)) for k in range(5)}
    out = []
    while len(out) < count:
        s = rng.choice(pools[rng.randint(0, 4)])
        while s.n < max_order and rng.random() < 0.5:
            t = rng.choice(pools[rng.randint(0, min(4, max_order - s.n))])
            s = direct_sum(s, t)
        m = as_multiset(s)
        for e in rng.sample(m.labels, rng.randint(0, min(2, m.n))):
            m = delete(m, e)
        out.append(m.scale(rng.choice((1, 2, 3))))
    return out


def small_indicators(n: int, top: int = 3):
    """Every indicator of order ``n`` with entries in ``0..top`` and ``f(∅) >= 1``."""
    for vals in itertools.product(range(top + 1), repeat=1 << n):
        if vals[0]:
            yield Multiset(Indicator(n, vals))


def _compact(x: int, i: int) -> int:
    return remove_bit(x, i)


def check_coloops(n):
    count, bad = 0, []
    for s in enumerate_powerful(n):
        for i, e in enumerate(s.labels):
            count += 1
            structural = _is_coloop_structural(s, 1 << i)
            if structural != (1 << i in s):
                bad.append(f"{s}: element {e} structural coloop={structural}, {{e}} in S={1 << i in s}")
    return count, bad


def check_rank_char(n):
    count, bad = 0, []
    full = full_mask(n)
    for s in enumerate_powerful(n):
        r = rank_table(s)
        for i, e in enumerate(s.labels):
            count += 1
            bit = 1 << i
            pairs = [
                ("loop", is_loop(s, e), r[bit] == 0),
                ("frame", is_frame(s, e), r[bit] == r[full]),
                ("coloop", _is_coloop_structural(s, bit), r[full] - r[full ^ bit] == 1),
            ]
            for name, structural, by_rank in pairs:
                if structural != by_rank:
                    bad.append(f"{s}: element {e} {name} structural={structural} rank-form={by_rank}")
    return count, bad


def check_cocircuits(n):
    seen: dict = {}
    bad = []
    count = 0
    for s in enumerate_powerful(n):
        count += 1
        key = cocircuits(s).cocircuits
        if key in seen:
            bad.append(f"{seen[key]} and {s} share cocircuits")
        seen[key] = s
    return count, bad


def check_direct_sum(n):
    count, bad = 0, []
    for a in range(n + 1):
        left = list(enumerate_powerful(a))
        right = list(enumerate_powerful(n - a))
        for s, t in itertools.product(left, right):
            count += 1
            st = direct_sum(s, t)
            expect = sorted(cocircuits(s).cocircuits + tuple(c << a for c in cocircuits(t).cocircuits))
            if list(cocircuits(st).cocircuits) != expect:
                bad.append(f"C({s} + {t}) != C(S) u C(T)")
            if not is_powerful_set(st) or len(st) != len(s) * len(t):
                bad.append(f"{s} + {t} is not a powerful set of size |S||T|")
                continue
            rs, rt, rst = rank_table(s), rank_table(t), rank_table(st)
            for x in range(1 << a):
                for y in range(1 << (n - a)):
                    if rst[x | (y << a)] != rs[x] + rt[y]:
                        bad.append(f"rank of {s} + {t} not additive at ({x:#b}, {y:#b})")
    return count, bad


def _multiset_scale_case(m: Multiset, bad: list):
    if not is_powerful_multiset(m):
        return
    f0 = m.f[0]
    bad_div = [x for x in range(1 << m.n) if m.f[x] % f0]
    if bad_div:
        bad.append(f"{m}: f(∅)={f0} does not divide f at {bad_div[0]:#b}")
        return
    r = rank_table(m)
    if rank_table(normalize(m)) != r:
        bad.append(f"{m}: normalize changed the rank table")
    for alpha in (2, 3, 5):
        if rank_table(m.scale(alpha)) != r:
            bad.append(f"{m}: rank table changed under scaling by {alpha}")


def check_multiset_scale(n):
    count, bad = 0, []
    for m in multiset_domain(n):
        count += 1
        _multiset_scale_case(m, bad)
    if n <= 2:
        for m in small_indicators(n):
            count += 1
            _multiset_scale_case(m, bad)
    return count, bad


def _minor_rank_case(m: Multiset, bad: list):
    r = rank_table(m)
    for i, e in enumerate(m.labels):
        bit = 1 << i
        mc, md = contract(m, e), delete(m, e)
        rc, rd = rank_table(mc), rank_table(md)
        if not (rc.all_integer() and rd.all_integer()):
            bad.append(f"{m}: minor by {e} not powerful")
            continue
        for x in range(1 << m.n):
            if x & bit:
                continue
            cx = _compact(x, i)
            if rc[cx] != r[x | bit] - r[bit]:
                bad.append(f"{m}: r(S/{e})({cx:#b}) != r(X+e) - r(e)")
            if rd[cx] != r[x]:
                bad.append(f"{m}: r(S\\{e})({cx:#b}) != r(X)")
        if r[bit] == 0:
            for x in range(1 << m.n):
                if not x & bit and r[x | bit] != r[x]:
                    bad.append(f"{m}: rank-0 element {e} changes rank at {x:#b}")


def check_minor_rank(n):
    count = 0
    bad: list = []
    for m in multiset_domain(n, alphas=(1, 2)):
        if m.n != n:
            continue
        count += 1
        _minor_rank_case(m, bad)
    return count, bad


def check_minor_size(n):
    count, bad = 0, []
    for s in enumerate_powerful(n):
        r = rank_table(s)
        for i, e in enumerate(s.labels):
            count += 1
            bit = 1 << i
            if contract(s, e).size() * (1 << r[bit]) != len(s):
                bad.append(f"{s}: |S/{e}| != |S| / 2^r({e})")
            if is_deletable(s, e):
                want = len(s) // 2 if bit in s else len(s)
                if len(as_set(delete(s, e))) != want:
                    bad.append(f"{s}: |S\\{e}| != {want}")
    return count, bad


def _rank_deficient(n):
    return enumerate_powerful(n, rank=n - 1) if n >= 1 else iter(())


def check_starcols(n):
    count, bad = 0, []
    for s in _rank_deficient(n):
        count += 1
        r = rank_table(s)
        odd = [e for i, e in enumerate(s.labels) if r[1 << i] != 1]
        if len(odd) > 1:
            bad.append(f"{s}: elements {odd} have rank != 1")
    return count, bad


def check_deletable(n):
    count, bad = 0, []
    for s in _rank_deficient(n):
        count += 1
        if not any(is_deletable(s, e) for e in s.labels):
            bad.append(f"{s}: no deletable element")
    return count, bad


def check_star(n):
    if n < 2:
        return 0, []
    count, bad = 0, []
    for s in enumerate_powerful(n):
        count += 1
        deficient = rank_of_system(s) == n - 1
        star = any(_is_star_structural(s, 1 << i) for i in range(n))
        if deficient != star:
            bad.append(f"{s}: rank n-1 is {deficient} but has-star is {star}")
    return count, bad


def check_z(n):
    """Parts (a)-(d) of the z-count properties over every set system of order n."""
    size = 1 << n
    profiles: dict = {}
    bad = []
    systems = range(1 << size)
    for c in systems:
        members = [w for w in range(size) if c >> w & 1]
        z = tuple(reversed(_zeta_python([c >> w & 1 for w in range(size)], n)))
        inside = [sum(1 for y in members if y & ~x == 0) for x in range(size)]
        if all(is_power_of_two(v) for v in z) != all(is_power_of_two(v) for v in inside):
            bad.append(f"{_fmt(members)}: z-test and definition disagree on powerfulness")
        if z in profiles:
            bad.append(f"{_fmt(profiles[z])} and {_fmt(members)} share a z-profile")
        profiles[z] = members
        if members and all(is_power_of_two(v) for v in z):
            s = SetSystem(n, tuple(members))
            r = rank_table(s)
            for x in range(size):
                if r[x] != rank_naive(s, x):
                    bad.append(f"{s}: rank at {x:#b} disagrees with the definition")
    for z, members in profiles.items():
        need = tuple((1 << (n - popcount(x))) - z[x] for x in range(size))
        other = profiles.get(need)
        if other is None:
            bad.append(f"{_fmt(members)}: no system with the complementary z-profile")
        elif set(other) != set(range(size)) - set(members):
            bad.append(f"{_fmt(members)}: complementary z-profile realized by {_fmt(other)}")
    return len(systems), bad


def _fmt(members) -> str:
    return "{" + ", ".join(format_mask(m) for m in members) + "}"


def check_linear(n):
    count, bad = 0, []
    for s in enumerate_powerful(n):
        count += 1
        if is_linear(s) != is_subcardinal(rank_table(s)):
            bad.append(f"{s}: linear={is_linear(s)} subcardinal={is_subcardinal(rank_table(s))}")
    for m in multiset_domain(n):
        count += 1
        if is_linear_multiset(m) != is_subcardinal(rank_table(m)):
            bad.append(f"{m}: multiset linear={is_linear_multiset(m)} subcardinal differs")
    return count, bad


THEOREMS = {
    "thm-cocircuits": (check_cocircuits, EXHAUSTIVE_MAX_ORDER),
    "thm-direct-sum": (check_direct_sum, EXHAUSTIVE_MAX_ORDER),
    "thm-coloops": (check_coloops, EXHAUSTIVE_MAX_ORDER),
    "thm-rank-char": (check_rank_char, EXHAUSTIVE_MAX_ORDER),
    "thm-multiset-scale": (check_multiset_scale, EXHAUSTIVE_MAX_ORDER),
    "prop-minor-rank": (check_minor_rank, EXHAUSTIVE_MAX_ORDER),
    "prop-minor-size": (check_minor_size, EXHAUSTIVE_MAX_ORDER),
    "lemma-starcols": (check_starcols, STAR_MAX_ORDER),
    "thm-deletable": (check_deletable, STAR_MAX_ORDER),
    "prop-star": (check_star, STAR_MAX_ORDER),
    "prop-z": (check_z, EXHAUSTIVE_MAX_ORDER),
    "thm-linear": (check_linear, EXHAUSTIVE_MAX_ORDER),
}


def verify_theorem(n: int, theorem_id: str) -> VerificationReport:
    try:
        checker, cap = THEOREMS[theorem_id]
    except KeyError:
        raise UnknownTheoremId(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREMS)}") from None
    if not 0 <= n <= cap:
        raise GroundTooLarge(f"{theorem_id} runs for orders 0..{cap}")
    t0 = time.perf_counter()
    count, bad = checker(n)
    return VerificationReport(theorem_id, n, count, bad, time.perf_counter() - t0)
