"""Exit criteria, one test each; the terminal summary prints PASS/FAIL per criterion."""

import subprocess
import sys
import time

import pytest

from powerful import io
from powerful.core import (
    as_multiset,
    as_set,
    is_powerful_naive,
    is_powerful_set,
    normalize,
    rank_table,
)
from powerful.elements import from_cocircuits
from powerful.enumeration import census, enumerate_naive, enumerate_powerful, all_set_systems
from powerful.errors import NotASet
from powerful.linearity import is_linear, is_linear_multiset, is_subcardinal, subcardinal_violation
from powerful.minors import contract, delete, is_deletable
from powerful.subsets import labels_to_mask, remove_bit
from powerful.verify import random_multiset_corpus, verify_theorem

from conftest import sys_of

CORPUS_SIZE = 1000


@pytest.fixture(scope="module")
def corpus():
    return random_multiset_corpus(CORPUS_SIZE, seed=2024)


def test_criterion_1_powerfulness_oracle():
    """criterion 1: is_powerful_set == naive definition on all ∅-containing systems, n <= 3, < 1 s"""
    t0 = time.perf_counter()
    checked = 0
    for n in range(4):
        for s in all_set_systems(n, with_empty=True):
            assert is_powerful_set(s) == is_powerful_naive(s), str(s)
            checked += 1
    assert checked == 1 + 2 + 8 + 128
    assert time.perf_counter() - t0 < 1.0


EXHAUSTIVE_IDS = ["thm-coloops", "thm-rank-char", "thm-cocircuits", "prop-minor-rank",
                  "prop-minor-size", "prop-z", "thm-linear"]


def test_criterion_2_exhaustive_theorems():
    """criterion 2: zero counterexamples for the exhaustive theorem suite at n <= 4, < 60 s"""
    t0 = time.perf_counter()
    for tid in EXHAUSTIVE_IDS:
        for n in range(5):
            rep = verify_theorem(n, tid)
            assert rep.counterexamples == [], rep.summary()
    assert time.perf_counter() - t0 < 60.0


@pytest.mark.slow
def test_criterion_3_star_and_deletable():
    """criterion 3: lemma-starcols, thm-deletable, prop-star hold at n <= 5 (rank n-1), < 10 min"""
    t0 = time.perf_counter()
    for tid in ("lemma-starcols", "thm-deletable", "prop-star"):
        for n in range(6):
            rep = verify_theorem(n, tid)
            assert rep.counterexamples == [], rep.summary()
        assert verify_theorem(5, tid).instances_checked > 0
    assert time.perf_counter() - t0 < 600.0


def test_criterion_4_counting_bijection():
    """criterion 4: census(n).by_rank[n-1] == census(n-1).total for n = 2..5"""
    naive_totals = {n: sum(1 for _ in enumerate_naive(n)) for n in range(5)}
    for n in range(5):
        assert census(n).total == naive_totals[n]
    lhs = {n: census(n).by_rank.get(n - 1, 0) for n in range(2, 6)}
    rhs = {n: census(n - 1).total for n in range(2, 6)}
    assert lhs == rhs


def test_criterion_5_worked_examples():
    """criterion 5: worked examples reproduce bit-exactly"""
    frame = sys_of(3, (), (1, 3), (2, 3), (1, 2, 3))
    d = delete(frame, 1)
    assert d.labels == (2, 3)
    assert d.f.values == (1, 0, 1, 2)  # ∅, {2}, {3}, {2,3}
    with pytest.raises(NotASet):
        as_set(d)
    assert not is_deletable(frame, 1)

    nl = sys_of(4, (), (1, 2, 4), (1, 3, 4), (2, 3, 4))
    assert is_powerful_set(nl)
    assert all(is_deletable(nl, e) for e in range(1, 5))
    assert not is_linear(nl)
    assert not is_subcardinal(rank_table(nl))
    assert subcardinal_violation(rank_table(nl)) == labels_to_mask([4], 4)

    pairs = [labels_to_mask(p, 3) for p in [(1, 2), (1, 3), (2, 3)]]
    code = from_cocircuits(pairs, 3)
    assert code.members == (0b000, 0b011, 0b101, 0b110)
    assert is_linear(code) and len(code) == 4


def test_criterion_6_multiset_laws(corpus):
    """criterion 6: divisibility, normalize, scaling and minor-rank laws on 1000 random multisets"""
    assert len(corpus) >= CORPUS_SIZE
    assert any(max(m.f.values) > m.f[0] for m in corpus)
    for m in corpus:
        r = rank_table(m)
        assert r.all_integer()
        assert all(v % m.f[0] == 0 for v in m.f.values)
        assert rank_table(normalize(m)) == r
        for alpha in (2, 3):
            assert rank_table(m.scale(alpha)) == r
        for i, e in enumerate(m.labels):
            bit = 1 << i
            rc, rd = rank_table(contract(m, e)), rank_table(delete(m, e))
            for x in range(1 << m.n):
                if not x & bit:
                    assert rc[remove_bit(x, i)] == r[x | bit] - r[bit]
                    assert rd[remove_bit(x, i)] == r[x]


def test_criterion_7_linearity_equivalence(corpus):
    """criterion 7: linear iff subcardinal for all powerful sets n <= 4 and the random corpus"""
    for n in range(5):
        for s in enumerate_powerful(n):
            assert is_linear(s) == is_subcardinal(rank_table(s)), str(s)
    for m in corpus:
        assert is_linear_multiset(m) == is_subcardinal(rank_table(m)), str(m)


def _run_cli(*argv):
    return subprocess.run([sys.executable, "-m", "powerful", *map(str, argv)], capture_output=True, check=False).stdout


def test_criterion_8_determinism_and_round_trip(tmp_path):
    """criterion 8: byte-identical enumeration, census files and CLI output; lossless minor round-trip"""
    first = [s.characteristic() for s in enumerate_powerful(5)]
    assert first == [s.characteristic() for s in enumerate_powerful(5)]

    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    census(4, cache=a)
    census(4, cache=b)
    assert a.read_bytes() == b.read_bytes()

    src = tmp_path / "frame.txt"
    src.write_text("n=3\n000\n101\n011\n111\n")
    for argv in (["analyze", src], ["analyze", src, "--format", "json"], ["minor", src, "--delete", "1"],
                 ["enumerate", "--order", "3"], ["census", "--order", "4"],
                 ["verify", "--order", "3", "--theorem", "all"]):
        out1, out2 = _run_cli(*argv), _run_cli(*argv)
        assert out1 and out1 == out2, argv

    for m in random_multiset_corpus(200, seed=8):
        back = io.loads(io.dumps(m))
        assert back.f == m.f and back.labels == m.labels
    minor_out = tmp_path / "minor.txt"
    _run_cli("minor", src, "--delete", "1", "--output", minor_out)
    assert io.load(minor_out) == delete(as_multiset(io.load(src)), 1)
