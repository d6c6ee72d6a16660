"""Command-line front end.

    powerful analyze FILE
    powerful rank FILE --subset 1,3
    powerful minor FILE --contract 1 --delete 2 [--output OUT]
    powerful enumerate --order N [--rank R] [--count-only]
    powerful census --order N [--cache FILE]
    powerful verify --order N --theorem ID|all

Every subcommand takes ``--format text|json``.  Exit status is 0 on success,
1 on bad input and 2 when ``verify`` finds a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from . import io
from .core import (
    NON_INTEGER,
    Multiset,
    SetSystem,
    as_set,
    is_powerful_multiset,
    is_powerful_set,
    rank_table,
)
from .elements import classify, cocircuits
from .enumeration import census, enumerate_powerful
from .errors import EmptySetMissing, NotASet, PowerfulError
from .linearity import subcardinal_violation, xor_violation
from .minors import deletable_elements, minor_by_labels
from .subsets import full_mask
from .verify import THEOREMS, verify_theorem

EXIT_OK, EXIT_INPUT, EXIT_COUNTEREXAMPLE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@dataclass
class AnalysisOutput:
    powerful: bool
    is_set: bool
    order: int
    labels: list
    size: int
    rank: object
    elements: Optional[list]
    cocircuits: Optional[list]
    linear: Optional[bool]
    xor_witness: Optional[list]
    subcardinal: Optional[bool]
    rank_witness: Optional[list]
    deletable: Optional[list]


def _rank_value(v):
    return "NonInteger" if v is NON_INTEGER else v


def _as_plain_set(m: Multiset) -> Optional[SetSystem]:
    if all(v <= 1 for v in m.f.values):
        return SetSystem(m.n, tuple(m.f.support()), m.labels)
    if m.f[0] and is_powerful_multiset(m):
        try:
            return as_set(m)
        except NotASet:
            return None
    return None


def analyze(m: Multiset) -> AnalysisOutput:
    s = _as_plain_set(m)
    labels = list(m.labels)
    if s is None:
        try:
            ranks = rank_table(m)
        except EmptySetMissing:
            ranks = None
        powerful = ranks is not None and ranks.all_integer()
        rank = _rank_value(ranks.rank()) if ranks else "NonInteger"
        sub = subcardinal_violation(ranks) if powerful else None
        return AnalysisOutput(
            powerful=powerful, is_set=False, order=m.n, labels=labels, size=m.size(), rank=rank,
            elements=None, cocircuits=None, linear=False if powerful else None, xor_witness=None,
            subcardinal=(sub is None) if powerful else None,
            rank_witness=m.labels_of(sub) if sub is not None else None, deletable=None,
        )

    powerful = is_powerful_set(s)
    ranks = rank_table(s) if 0 in s else None
    rank = _rank_value(ranks[full_mask(s.n)]) if ranks else "NonInteger"
    elements = [
        {"element": c.element, "loop": c.is_loop, "coloop": c.is_coloop, "frame": c.is_frame, "star": c.is_star}
        for c in classify(s)
    ]
    linear = xor = sub = sub_w = None
    if 0 in s:
        w = xor_violation(s)
        linear = w is None
        xor = [s.labels_of(w[0]), s.labels_of(w[1])] if w else None
    if powerful:
        x = subcardinal_violation(ranks)
        sub = x is None
        sub_w = s.labels_of(x) if x is not None else None
    return AnalysisOutput(
        powerful=powerful, is_set=True, order=s.n, labels=labels, size=len(s), rank=rank,
        elements=elements, cocircuits=[s.labels_of(c) for c in cocircuits(s)],
        linear=linear, xor_witness=xor, subcardinal=sub, rank_witness=sub_w,
        deletable=deletable_elements(s) if powerful else None,
    )


def _braces(labels) -> str:
    return "{" + ",".join(map(str, labels)) + "}"


def _yes(v) -> str:
    return {True: "yes", False: "no", None: "n/a"}[v]


def render_analysis(a: AnalysisOutput) -> str:
    out = [
        f"powerful: {_yes(a.powerful)}",
        f"set: {_yes(a.is_set)}",
        f"order: {a.order}",
        f"size: {a.size}",
        f"rank: {a.rank}",
    ]
    if a.elements is not None:
        out.append("elements:")
        for c in a.elements:
            kinds = [k for k in ("loop", "coloop", "frame", "star") if c[k]]
            out.append(f"  {c['element']}: {', '.join(kinds) if kinds else '-'}")
    if a.cocircuits is not None:
        out.append("cocircuits: " + " ".join(_braces(c) for c in a.cocircuits))
    lin = _yes(a.linear)
    if a.xor_witness:
        x, y = a.xor_witness
        lin += f" (witness {_braces(x)} xor {_braces(y)} = {_braces(sorted(set(x) ^ set(y)))} missing)"
    out.append(f"linear: {lin}")
    sub = _yes(a.subcardinal)
    if a.rank_witness is not None:
        sub += f" (witness {_braces(a.rank_witness)})"
    out.append(f"subcardinal: {sub}")
    if a.deletable is not None:
        out.append("deletable: " + (" ".join(map(str, a.deletable)) if a.deletable else "-"))
    return "\n".join(out)


def _labels_arg(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, text: str, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_analyze(args):
    a = analyze(io.load(args.file))
    _emit(args, render_analysis(a), asdict(a))
    return EXIT_OK


def cmd_rank(args):
    m = io.load(args.file)
    x = m.mask_of(args.subset)
    v = _rank_value(rank_table(m)[x])
    _emit(args, str(v), {"subset": sorted(args.subset), "rank": v})
    return EXIT_OK


def cmd_minor(args):
    m = minor_by_labels(io.load(args.file), args.contract, args.delete)
    if args.format == "json":
        entries = [{"subset": m.labels_of(x), "multiplicity": v} for x, v in enumerate(m.f.values) if v]
        text = json.dumps({"n": m.n, "labels": list(m.labels), "entries": entries}, indent=2) + "\n"
    else:
        text = io.dumps(m)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_enumerate(args):
    systems = list(enumerate_powerful(args.order, rank=args.rank))
    if args.count_only:
        _emit(args, str(len(systems)), {"n": args.order, "rank": args.rank, "count": len(systems)})
        return EXIT_OK
    payload = {
        "n": args.order,
        "rank": args.rank,
        "count": len(systems),
        "systems": [[s.labels_of(x) for x in s.members] for s in systems],
    }
    _emit(args, "\n".join(str(s) for s in systems), payload)
    return EXIT_OK


def cmd_census(args):
    r = census(args.order, cache=args.cache)
    text = "\n".join([
        f"order: {r.n}",
        f"total: {r.total}",
        "by rank: " + " ".join(f"{k}:{v}" for k, v in sorted(r.by_rank.items())),
        f"linear: {r.linear_count}",
        f"nonlinear: {r.nonlinear_count}",
        f"with star: {r.with_star_count}",
        f"star at element {r.n}: {r.star_at_last_count}",
    ] + ([f"runtime: {r.runtime:.3f}s"] if args.timing else []))
    _emit(args, text, r.as_dict(timing=args.timing))
    return EXIT_OK


def cmd_verify(args):
    ids = [args.theorem] if args.theorem != "all" else [
        t for t, (_, cap) in THEOREMS.items() if args.order <= cap
    ]
    reports = [verify_theorem(args.order, t) for t in ids]
    lines = []
    for r in reports:
        lines.append(r.summary() + (f" ({r.runtime:.3f}s)" if args.timing else ""))
        lines.extend(f"  counterexample: {c}" for c in r.counterexamples)
    payload = [r.as_dict(timing=args.timing) for r in reports]
    _emit(args, "\n".join(lines), payload if len(payload) > 1 else payload[0])
    return EXIT_COUNTEREXAMPLE if any(r.counterexamples for r in reports) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = _Parser(prog="powerful", description="Analyze, enumerate and verify powerful sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="report structure of a set-system file")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("rank", parents=[common], help="rank of one subset")
    r.add_argument("file")
    r.add_argument("--subset", type=_labels_arg, required=True, help="comma-separated labels, '' for the empty set")
    r.set_defaults(func=cmd_rank)

    m = sub.add_parser("minor", parents=[common], help="contract and delete elements")
    m.add_argument("file")
    m.add_argument("--contract", type=_labels_arg, default=[])
    m.add_argument("--delete", type=_labels_arg, default=[])
    m.add_argument("--output", "-o")
    m.set_defaults(func=cmd_minor)

    e = sub.add_parser("enumerate", parents=[common], help="list all powerful sets of an order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--rank", type=int)
    e.add_argument("--count-only", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("census", parents=[common], help="counts by rank, linearity and stars")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--cache")
    c.add_argument("--timing", action="store_true")
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", parents=[common], help="check a theorem exhaustively")
    v.add_argument("--order", type=int, required=True)
    v.add_argument("--theorem", required=True, choices=sorted(THEOREMS) + ["all"])
    v.add_argument("--timing", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PowerfulError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
