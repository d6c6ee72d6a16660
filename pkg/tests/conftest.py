import pytest
from hypothesis import strategies as st

from powerful.core import make_set_system
from powerful.elements import add_coloop, add_frame, add_loop, add_star, direct_sum
from powerful.enumeration import enumerate_powerful
from powerful.subsets import labels_to_mask


def sys_of(n, *subsets):
    """Set system from 1-indexed label tuples."""
    return make_set_system(n, [labels_to_mask(s, n) for s in subsets])


@pytest.fixture
def frame_example():
    # {∅,{1,3},{2,3},{1,2,3}}
    return sys_of(3, (), (1, 3), (2, 3), (1, 2, 3))


@pytest.fixture
def nonlinear_example():
    # {∅,{1,2,4},{1,3,4},{2,3,4}}
    return sys_of(4, (), (1, 2, 4), (1, 3, 4), (2, 3, 4))


@pytest.fixture
def cycle3():
    return sys_of(3, (), (1, 2), (1, 3), (2, 3))


POWERFUL = {n: list(enumerate_powerful(n)) for n in range(5)}

_EXTENSIONS = (add_loop, add_coloop, add_frame, add_star)


@st.composite
def powerful_sets(draw, max_order=5):
    """Powerful sets grown from {∅} by random extensions and direct sums."""
    s = make_set_system(0, [0])
    target = draw(st.integers(0, max_order))
    while s.n < target:
        if draw(st.booleans()) and s.n + 2 <= target:
            s = direct_sum(s, draw(st.sampled_from(POWERFUL[draw(st.integers(1, min(4, target - s.n)))])))
        else:
            ext = draw(st.sampled_from(_EXTENSIONS))
            s = ext(s, s.n + 1)
    return s


_acceptance_lines = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance_lines.append(f"{'PASS' if rep.passed else 'FAIL'}  {doc}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
