"""Subset masks, indicator tables and the downward subset-sum transform.

A subset of the ground set {1..n} is an int whose bit ``i`` marks the element
labelled ``i + 1``.  An :class:`Indicator` assigns a non-negative integer
multiplicity to each of the ``2**n`` masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import OutOfRangeMask, PowerfulError

MAX_ORDER = 20

# Below this order the pure-Python butterfly beats numpy's call overhead.
_NUMPY_THRESHOLD = 9
_INT64_SAFE = 1 << 62


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full_mask(n) ^ mask


def submasks(mask: int):
    """Yield every submask of ``mask``, largest first, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def labels_to_mask(labels: Iterable[int], n: int) -> int:
    mask = 0
    for label in labels:
        if not 1 <= label <= n:
            raise OutOfRangeMask(f"label {label} outside ground set 1..{n}")
        mask |= 1 << (label - 1)
    return mask


def mask_to_labels(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i + 1)
        mask >>= 1
        i += 1
    return out


def format_mask(mask: int) -> str:
    return "{" + ",".join(map(str, mask_to_labels(mask))) + "}"


def is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


def log2_exact(k: int) -> int:
    """Exponent of a power of two; caller guarantees ``is_power_of_two(k)``."""
    return k.bit_length() - 1


def remove_bit(mask: int, i: int) -> int:
    """Drop bit position ``i`` and shift the higher bits down by one."""
    low = (1 << i) - 1
    return (mask & low) | ((mask >> 1) & ~low)


def insert_bit(mask: int, i: int, value: int = 0) -> int:
    """Open a new bit position ``i``, shifting bits at or above it up by one."""
    low = (1 << i) - 1
    return (mask & low) | ((mask & ~low) << 1) | (value << i)


@dataclass(frozen=True)
class Indicator:
    """Multiplicity table over the subsets of an ``n``-element ground set."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise PowerfulError(f"ground-set size {self.n} outside 0..{MAX_ORDER}")
        values = tuple(int(v) for v in self.values)
        if len(values) != 1 << self.n:
            raise PowerfulError(f"expected {1 << self.n} entries, got {len(values)}")
        if any(v < 0 for v in values):
            raise PowerfulError("indicator entries must be non-negative")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> Indicator:
        values = [0] * (1 << n)
        for m in masks:
            if not 0 <= m < 1 << n:
                raise OutOfRangeMask(f"mask {m} out of range for n={n}")
            values[m] += 1
        return cls(n, tuple(values))

    @classmethod
    def zeros(cls, n: int) -> Indicator:
        return cls(n, (0,) * (1 << n))

    def __getitem__(self, mask: int) -> int:
        return self.values[mask]

    def __len__(self) -> int:
        return len(self.values)

    def __add__(self, other: Indicator) -> Indicator:
        if self.n != other.n:
            raise PowerfulError("ground-set sizes differ")
        return Indicator(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, alpha: int) -> Indicator:
        return Indicator(self.n, tuple(alpha * v for v in self.values))

    def total(self) -> int:
        return sum(self.values)

    def support(self) -> list[int]:
        return [m for m, v in enumerate(self.values) if v]


def _zeta_python(values: Sequence[int], n: int) -> list[int]:
    g = list(values)
    size = 1 << n
    for i in range(n):
        bit = 1 << i
        for w in range(size):
            if w & bit:
                g[w] += g[w ^ bit]
    return g


def _zeta_numpy(values: Sequence[int], n: int) -> list[int]:
    # Worst-case entry is the total mass; fall back to exact object arithmetic
    # rather than risk int64 wrap-around.
    dtype = np.int64 if sum(values) < _INT64_SAFE else object
    g = np.array(values, dtype=dtype).reshape((2,) * n)
    for axis in range(n):
        g = np.cumsum(g, axis=axis, dtype=dtype)
    return [int(v) for v in g.reshape(-1)]


def zeta_transform(f: Indicator) -> Indicator:
    """Return ``g`` with ``g(W) = sum(f(Y) for Y subset of W)``."""
    if f.n >= _NUMPY_THRESHOLD:
        return Indicator(f.n, tuple(_zeta_numpy(f.values, f.n)))
    return Indicator(f.n, tuple(_zeta_python(f.values, f.n)))


def z_count(f: Indicator, x: int, zeta: Indicator | None = None) -> int:
    """Mass of ``f`` supported inside the complement of ``x``.

    Pass a precomputed ``zeta`` of ``f`` when querying many ``x``.
    """
    if not 0 <= x < 1 << f.n:
        raise OutOfRangeMask(f"mask {x} out of range for n={f.n}")
    if zeta is None:
        zeta = zeta_transform(f)
    return zeta[complement(x, f.n)]
