import pytest

from conftest import A_EX, M, frac
from coreinv.criteria import THEOREMS, Facts, existence_criteria
from coreinv.inverses import InnerInverseFamily
from coreinv.matrix import StarMatrix
from coreinv.scalars import Fp, Q

A = M(A_EX)
A_MP = M([[1, 1], [-2, -2]]).scale(frac(1, 10))
N = M([[0, 1], [0, 0]])
F2 = Fp(2)
J2 = StarMatrix(F2, [[1, 1], [1, 1]])


def test_core_units_iii_on_fixture():
    v = existence_criteria(A, "core-units:iii", A_MP)
    assert v.holds
    assert "a+1-ag^-1" in v.witnesses
    assert "left inverse of a*+1-ag" in v.witnesses


def test_chen_iii_on_nilpotent():
    g = M([[0, 0], [1, 1]])
    v = existence_criteria(N, "chen:iii", g)
    assert not v.holds
    assert v.witnesses["u"] == N @ N.star() @ N + 1 - N @ g
    assert not existence_criteria(N, "chen:i").holds


def test_mp_units_on_identity():
    one = StarMatrix.identity(Q, 2)
    for label in ("i", "ii", "iii", "iv", "v"):
        assert existence_criteria(one, f"mp-units:{label}", one).holds


def test_one_sided_mp_all_false_over_f2():
    fam = list(InnerInverseFamily(J2).enumerate())
    # J g J = (sum of entries of g) J, so half of the 16 matrices qualify
    assert len(fam) == 8
    facts = Facts(J2)
    for g in fam:
        for cond in THEOREMS["one-sided-mp"].conditions:
            assert not existence_criteria(J2, f"one-sided-mp:{cond.label}", g, facts=facts).holds


def test_range_conditions():
    # N: a = a^2 x has no solution (a^2 = 0)
    assert not existence_criteria(N, "range-right:i").holds
    assert existence_criteria(A, "range-right:i").holds
    assert existence_criteria(A, "range-left:i").holds


def test_errors():
    with pytest.raises(ValueError, match="unknown criterion"):
        existence_criteria(A, "chen:xx")
    with pytest.raises(ValueError, match="unknown criterion"):
        existence_criteria(A, "nope")
    with pytest.raises(ValueError, match="needs an inner inverse"):
        existence_criteria(A, "chen:iii")
    with pytest.raises(ValueError, match="not an inner inverse"):
        existence_criteria(A, "chen:iii", StarMatrix.zeros(Q, 2))


def test_registry_shape():
    assert len(THEOREMS["one-sided-mp"].conditions) == 9
    assert len(THEOREMS["mp-units"].conditions) == 5
    assert len(THEOREMS["core-units"].conditions) == 6
    assert len(THEOREMS["chen"].conditions) == 6
    assert len(THEOREMS["group-units"].conditions) == 3
    assert len(THEOREMS["k-core"].conditions) == 3
    for t in THEOREMS.values():
        for fid, gate in t.representations:
            t.condition(gate)
    with pytest.raises(KeyError):
        THEOREMS["chen"].condition("x")


def test_k_is_pinned_for_1_core():
    a = A
    from coreinv.inverses import one_three

    g = one_three(a).value
    assert existence_criteria(a, "1-core:iii", g, k=3) == existence_criteria(a, "1-core:iii", g, k=1)
