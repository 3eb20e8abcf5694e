import random

import pytest
from hypothesis import strategies as st

from coreinv.matrix import StarMatrix
from coreinv.scalars import QI, FieldSpec, Fp, GaussianRational, Q, Rational


def M(rows, field=Q):
    return StarMatrix(field, rows)


def frac(a, b=1):
    return Rational(a, b)


rationals = st.builds(lambda n, d: Rational(n, d), st.integers(-30, 30), st.integers(1, 12))
gaussians = st.builds(GaussianRational, rationals, rationals)


def residues(p):
    return st.integers(0, p - 1)


def matrices(field: FieldSpec, n: int):
    if field.tag == "Q":
        elem = st.builds(lambda n_, d: Rational(n_, d), st.integers(-3, 3), st.sampled_from([1, 2, 3]))
    elif field.tag == "Qi":
        small = st.builds(lambda n_, d: Rational(n_, d), st.integers(-2, 2), st.sampled_from([1, 2]))
        elem = st.builds(GaussianRational, small, small)
    else:
        elem = st.integers(0, field.p - 1)
    return st.lists(st.lists(elem, min_size=n, max_size=n), min_size=n, max_size=n).map(
        lambda rows: StarMatrix(field, rows)
    )


FIELDS = [Q, QI, Fp(2), Fp(3), Fp(5)]


@pytest.fixture
def rng():
    return random.Random(12345)


# fixture matrix used throughout: A^2 = -A, rank 1
A_EX = [[1, -2], [1, -2]]


# one-line verdicts collected by the acceptance suite, echoed after the run
ACCEPT_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPT_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
