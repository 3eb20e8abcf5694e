import itertools

import pytest
from hypothesis import given, settings

from conftest import A_EX, FIELDS, M, frac, matrices
from coreinv.errors import DimensionMismatch, FieldMismatch
from coreinv.matrix import StarMatrix, mat_arith, one_sided_invertible, rank, rank_form, solve_linear, try_inverse
from coreinv.scalars import QI, Fp, GaussianRational, Q


def test_star_examples():
    assert M([[0, 1], [0, 0]]).star() == M([[0, 0], [1, 0]])
    i = GaussianRational(0, 1)
    assert StarMatrix(QI, [[i, 0], [0, 0]]).star() == StarMatrix(QI, [[-i, 0], [0, 0]])


def test_fixture_square_is_negative():
    a = M(A_EX)
    assert a @ a == M([[-1, 2], [-1, 2]]) == -a


def test_construction_errors():
    with pytest.raises(DimensionMismatch):
        M([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        M([])
    with pytest.raises(DimensionMismatch):
        M([[1]]) @ M([[1, 0], [0, 1]])
    with pytest.raises(FieldMismatch):
        M([[1]]) + StarMatrix(Fp(3), [[1]])


def test_mat_arith_dispatch():
    a, b = M([[1, 2], [3, 4]]), M([[0, 1], [1, 0]])
    assert mat_arith(a, b, "add") == a + b
    assert mat_arith(a, b, "mul") == a @ b
    assert mat_arith(a, None, "star") == a.transpose()
    assert mat_arith(a, None, "pow", 3) == a @ a @ a
    assert mat_arith(a, None, "scale", frac(1, 2)) == a.scale(frac(1, 2))
    assert mat_arith(a, a, "eq") is True
    assert mat_arith(a, None, "neg") == -a
    assert a ** 0 == StarMatrix.identity(Q, 2)
    assert a * b == a @ b and 2 * a == a + a
    assert 1 - a == StarMatrix.identity(Q, 2) - a


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_star_is_involution(field):
    @settings(max_examples=30, deadline=None)
    @given(matrices(field, 3), matrices(field, 3))
    def inner(a, b):
        assert a.star().star() == a
        assert (a @ b).star() == b.star() @ a.star()
        assert (a + b).star() == a.star() + b.star()

    inner()


def test_rank_form_examples():
    z = rank_form(StarMatrix.zeros(Q, 2))
    assert z.r == 0 and z.P == z.Q == StarMatrix.identity(Q, 2)
    assert rank_form(StarMatrix.identity(Q, 3)).r == 3
    assert rank_form(M(A_EX)).r == 1


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_rank_form_reconstructs(field):
    @settings(max_examples=40, deadline=None)
    @given(matrices(field, 4))
    def inner(a):
        rf = rank_form(a)
        assert rf.P @ a @ rf.Q == rf.block()
        assert rf.reconstruct() == a
        assert rf.P @ rf.P_inv == StarMatrix.identity(field, 4)
        assert rf.Q @ rf.Q_inv == StarMatrix.identity(field, 4)
        inv = try_inverse(a)
        assert (inv is not None) == (rf.r == 4)
        if inv is not None:
            assert a @ inv == inv @ a == StarMatrix.identity(field, 4)
        for side in ("left", "right"):
            s = one_sided_invertible(a, side)
            assert (s is None) == (inv is None)
            if s is not None:
                assert s == inv

    inner()


def test_try_inverse_examples():
    assert try_inverse(M([[2, 0], [-2, -2]])) == M([[1, 0], [-1, -1]]).scale(frac(1, 2))
    assert try_inverse(M([[4, 2], [-8, -4]]).scale(frac(1, 3))) is None
    assert try_inverse(StarMatrix.identity(Q, 3)) == StarMatrix.identity(Q, 3)


def test_one_sided_examples():
    assert one_sided_invertible(StarMatrix.identity(Q, 2), "left") == StarMatrix.identity(Q, 2)
    assert one_sided_invertible(M([[2, 0], [-2, -2]]), "left") == M([[1, 0], [-1, -1]]).scale(frac(1, 2))
    a = StarMatrix(Fp(2), [[0, 0], [1, 1]])
    assert one_sided_invertible(a, "right") is None
    # exhaustively: no S over F2 has a S = 1
    one = StarMatrix.identity(Fp(2), 2)
    for vals in itertools.product(range(2), repeat=4):
        s = StarMatrix(Fp(2), [vals[:2], vals[2:]])
        assert a @ s != one
    with pytest.raises(ValueError):
        one_sided_invertible(a, "up")


def test_solve_linear_examples():
    z = StarMatrix.zeros(Q, 2)
    a = M([[1, 3], [2, 6]])
    assert solve_linear(a, z) == z
    e = M([[1, 0], [0, 0]])
    assert solve_linear(e, e) == e
    f2 = Fp(2)
    a = StarMatrix(f2, [[1, 1], [1, 1]])
    aaa = a @ a.star() @ a
    assert aaa.is_zero()
    assert solve_linear(aaa, a) is None
    with pytest.raises(ValueError):
        solve_linear(a, a, "AXB")


@pytest.mark.parametrize("field", [Q, QI, Fp(3)], ids=str)
def test_solve_linear_satisfies_equation(field):
    @settings(max_examples=40, deadline=None)
    @given(matrices(field, 3), matrices(field, 3))
    def inner(a, x0):
        b = a @ x0
        x = solve_linear(a, b, "AX=B")
        assert x is not None and a @ x == b
        b2 = x0 @ a
        y = solve_linear(a, b2, "XA=B")
        assert y is not None and y @ a == b2

    inner()


def test_canonical_solution_zeroes_free_variables():
    a = M([[1, 1], [0, 0]])
    b = M([[1, 2], [0, 0]])
    assert solve_linear(a, b) == M([[1, 2], [0, 0]])
    assert rank(a) == 1
