"""Text format for set systems and multisets.

::

    # comment
    n=3
    000
    101
    011 x2

Character ``j`` of a row is the membership of element ``j``; ``x<m>`` gives a
multiplicity.  Repeated rows accumulate.  With ``n=0`` the only row is the
empty set, written as a bare ``x<m>``.  :func:`dumps` emits one row per
nonzero mask in mask order plus a ``# labels:`` comment when the ground set
carries non-default labels, so output always re-reads to the same indicator.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import Multiset, SetSystem, as_multiset, make_multiset
from .errors import ParseError

_HEADER = re.compile(r"n=(\d+)$")
_ROW = re.compile(r"([01]+)(?:\s+x(\d+))?$|x(\d+)$")
_LABELS = re.compile(r"#\s*labels:\s*(.*)$")


def loads(text: str) -> Multiset:
    n = None
    labels = None
    counts: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _LABELS.match(line)
            if m and m.group(1).strip():
                try:
                    labels = tuple(int(t) for t in m.group(1).split(","))
                except ValueError:
                    raise ParseError(lineno, f"bad labels comment {line!r}") from None
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(lineno, f"expected header 'n=<k>', got {line!r}")
            n = int(m.group(1))
            if n > 20:
                raise ParseError(lineno, f"ground-set size {n} exceeds 20")
            continue
        m = _ROW.match(line)
        if not m:
            raise ParseError(lineno, f"expected a 0/1 row, got {line!r}")
        bits = m.group(1) or ""
        mult = m.group(2) or m.group(3)
        if len(bits) != n:
            raise ParseError(lineno, f"row has {len(bits)} characters, expected {n}")
        mult = 1 if mult is None else int(mult)
        if mult < 1:
            raise ParseError(lineno, "multiplicity must be at least 1")
        mask = sum(1 << j for j, ch in enumerate(bits) if ch == "1")
        counts[mask] = counts.get(mask, 0) + mult
    if n is None:
        raise ParseError(0, "missing header 'n=<k>'")
    if labels is not None and (len(labels) != n or len(set(labels)) != n):
        raise ParseError(0, f"labels comment names {len(labels)} elements for n={n}")
    return make_multiset(n, counts=counts, labels=labels)


def load(path: str | Path) -> Multiset:
    return loads(Path(path).read_text())


def dumps(m: SetSystem | Multiset) -> str:
    m = as_multiset(m)
    lines = []
    if m.labels != tuple(range(1, m.n + 1)):
        lines.append("# labels: " + ",".join(map(str, m.labels)))
    lines.append(f"n={m.n}")
    for mask, v in enumerate(m.f.values):
        if not v:
            continue
        row = "".join("1" if mask >> j & 1 else "0" for j in range(m.n))
        if not row:
            lines.append(f"x{v}")
        else:
            lines.append(row if v == 1 else f"{row} x{v}")
    return "\n".join(lines) + "\n"


def dump(m: SetSystem | Multiset, path: str | Path) -> None:
    Path(path).write_text(dumps(m))
