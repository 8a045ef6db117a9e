import pytest
from hypothesis import strategies as st

from simconj.perm import Permutation, parse_cycles


def P(text, n=None):
    return parse_cycles(text, n)


@st.composite
def perms(draw, min_n=1, max_n=9, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    imgs = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(imgs)


@pytest.fixture
def ex49():
    """alpha^-1 = (1 2 3 4) with the 7-cycle beta whose commutator moves five points."""
    return P("(1 4 3 2)", 7), P("(3 2 1 5 4 6 7)")


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
