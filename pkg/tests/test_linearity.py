import random

import pytest
from hypothesis import given, settings, strategies as st

from powerful.core import SetSystem, is_powerful_set, make_set_system, power_set, rank_table
from powerful.errors import EmptySystem, NonIntegerRank
from powerful.linearity import (
    gf2_basis,
    is_linear,
    is_linear_multiset,
    is_subcardinal,
    linearity_report,
    subcardinal_violation,
    xor_span,
    xor_violation,
)

from conftest import POWERFUL, sys_of


def span_by_fixpoint(members):
    cur = set(members)
    while True:
        nxt = cur | {a ^ b for a in cur for b in cur}
        if nxt == cur:
            return cur
        cur = nxt


def test_linear_examples(cycle3, nonlinear_example):
    assert is_linear(cycle3)
    assert not is_linear(nonlinear_example)
    assert xor_violation(nonlinear_example) == (0b1011, 0b1101)
    assert is_linear(make_set_system(3, [0]))


def test_linear_needs_empty_set():
    with pytest.raises(EmptySystem):
        is_linear(make_set_system(2, [1]))
    with pytest.raises(EmptySystem):
        xor_span(make_set_system(2, [1]))


def test_subcardinal_examples(nonlinear_example):
    assert is_subcardinal(rank_table(power_set(3)))
    assert subcardinal_violation(rank_table(nonlinear_example)) == 0b1000
    assert rank_table(nonlinear_example)[0b1000] == 2
    assert is_subcardinal(rank_table(make_set_system(2, [0])))


def test_subcardinal_needs_integer_ranks():
    with pytest.raises(NonIntegerRank):
        is_subcardinal(rank_table(sys_of(2, (), (1,), (2,))))


def test_xor_span_examples(cycle3, nonlinear_example):
    assert xor_span(sys_of(2, (), (1,), (2,))) == power_set(2)
    assert xor_span(cycle3) == cycle3
    span = xor_span(nonlinear_example)
    assert len(span) == 8
    assert set(span.members) == span_by_fixpoint(nonlinear_example.members)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_linear_iff_subcardinal_exhaustive(n):
    for s in POWERFUL[n]:
        rep = linearity_report(s)
        assert rep.linear == rep.subcardinal


def random_code(rng, n):
    gens = [rng.randrange(1 << n) for _ in range(rng.randint(0, n))]
    span = {0}
    for g in gens:
        span |= {v ^ g for v in span}
    return SetSystem(n, tuple(sorted(span)))


def test_random_codes_powerful():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(0, 8)
        s = random_code(rng, n)
        assert is_linear(s)
        assert is_powerful_set(s)
        dim = len(gf2_basis(s.members))
        assert len(s) == 1 << dim
        assert rank_table(s).rank() == dim


def test_basis_path_agrees_with_pairwise():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(1, 6)
        members = sorted({0} | {rng.randrange(1 << n) for _ in range(rng.randint(0, 10))})
        s = SetSystem(n, tuple(members))
        a = xor_violation(s, method="pairwise")
        b = xor_violation(s, method="basis")
        assert (a is None) == (b is None)
        if b is not None:
            assert b[0] ^ b[1] not in s


def test_large_code_uses_basis_path():
    rng = random.Random(5)
    n = 14
    s = random_code(rng, n)
    while len(s) <= 1 << 12:
        s = random_code(rng, n)
    assert is_linear(s)
    broken = SetSystem(n, tuple(m for m in s.members if m != s.members[-1]))
    w = xor_violation(broken)
    assert w is not None and w[0] ^ w[1] not in broken


@settings(max_examples=60)
@given(st.integers(0, 6).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=8))))
def test_xor_span_properties(case):
    n, extra = case
    s = SetSystem(n, tuple(sorted({0, *extra})))
    span = xor_span(s)
    assert is_linear(span)
    assert set(s.members) <= set(span.members)
    assert xor_span(span) == span
    assert (span == s) == is_linear(s)
    assert set(span.members) == span_by_fixpoint(s.members)


def test_linear_multiset(cycle3, frame_example):
    from powerful.core import as_multiset
    from powerful.minors import delete

    assert is_linear_multiset(as_multiset(cycle3).scale(3))
    assert not is_linear_multiset(delete(frame_example, 1))
