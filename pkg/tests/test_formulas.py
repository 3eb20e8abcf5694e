import random

import pytest

from conftest import A_EX, M, frac
from coreinv.errors import NonExistent, PremiseViolation
from coreinv.formulas import CATALOG, applicable, apply_formula, formulas_for, g_in_required_class
from coreinv.inverses import InverseKind, compute, core_inverse, exists
from coreinv.lab.generators import draw_formula_inner, draw_inner, gen_with_rank
from coreinv.matrix import StarMatrix
from coreinv.scalars import QI, Fp, Q

A = M(A_EX)
A_MP = M([[1, 1], [-2, -2]]).scale(frac(1, 10))
A_CORE = M([[1, 1], [1, 1]]).scale(frac(-1, 2))
NOT_13 = M([[0, 1], [0, 0]])


def test_catalog_is_complete():
    ids = {f"C{i}" for i in range(1, 13)} | {"D1", "D2", "D3"} | {f"G{i}" for i in range(1, 5)} | {
        f"M{i}" for i in range(1, 6)
    }
    assert set(CATALOG) == ids
    assert len(formulas_for(InverseKind.CORE)) == 12
    assert {f.inner_class for f in CATALOG.values()} == {"any", "13", "mp", "group", "none"}


def test_c1_on_fixture():
    cert = apply_formula("C1", A, A_MP)
    assert cert.value == A_CORE
    assert cert.witness("g") == A_MP
    assert cert.witness("m") == A.star() @ A + 1 - A @ A_MP


def test_c7_shape_with_non_13_inverse_is_a_premise_violation():
    assert A @ NOT_13 @ A == A
    assert not g_in_required_class("C7", A, NOT_13)
    with pytest.raises(PremiseViolation) as info:
        apply_formula("C7", A, NOT_13)
    assert info.value.value == M([[0, 0], [-1, -1]]).scale(frac(1, 4))
    assert info.value.value != A_CORE
    assert "xa^2=a" in info.value.failed


def test_g1_identity():
    one = StarMatrix.identity(Q, 3)
    assert apply_formula("G1", one, one).value == one


def test_singular_unit_is_nonexistent():
    n = M([[0, 1], [0, 0]])
    g = M([[0, 0], [1, 1]])
    with pytest.raises(NonExistent) as info:
        apply_formula("C9", n, g)
    assert info.value.unit == "u"


def test_premise_errors():
    with pytest.raises(ValueError):
        apply_formula("C99", A, A_MP)
    with pytest.raises(ValueError):
        apply_formula("C1", A, A_MP, k=0)
    with pytest.raises(ValueError):
        apply_formula("C1", A, None)
    with pytest.raises(PremiseViolation, match="k >= 2"):
        apply_formula("C6", A, A_MP, k=1)
    with pytest.raises(PremiseViolation, match="inner inverse"):
        apply_formula("C1", A, StarMatrix.zeros(Q, 2))
    with pytest.raises(PremiseViolation, match="core invertible"):
        apply_formula("C4", M([[0, 1], [0, 0]]), M([[0, 0], [1, 1]]))


def test_m_formulas_without_g():
    assert apply_formula("M1", A).value == A_MP
    assert apply_formula("M2", A).value == A_MP


@pytest.mark.parametrize("field", [Q, QI, Fp(5)], ids=str)
def test_catalog_coherence_small(field):
    rng = random.Random(99)
    checked = 0
    for trial in range(12):
        n = rng.randint(2, 3)
        a = gen_with_rank(field, n, rng.randint(1, n), rng)
        if not exists(InverseKind.CORE, a):
            continue
        for f in CATALOG.values():
            if not applicable(f.id, a):
                g = draw_inner(f.inner_class, a, rng)
                if f.inner_class == "none" or g is not None:
                    # the theorems say a named unit must then be singular
                    with pytest.raises(NonExistent):
                        apply_formula(f.id, a, g, f.min_k)
                continue
            canonical = compute(f.kind, a).value
            for k in ([1, 2, 3] if f.uses_k else [1]):
                if k < f.min_k:
                    continue
                g = draw_formula_inner(f, a, rng, k)
                if f.inner_class != "none" and g is None:
                    continue
                assert apply_formula(f.id, a, g, k).value == canonical, (f.id, a, g, k)
                checked += 1
    assert checked > 50


def test_core_formulas_reject_outside_class_or_agree():
    """With arbitrary inner g, class-restricted formulas either fail loudly or are right."""
    rng = random.Random(3)
    for _ in range(20):
        a = gen_with_rank(Q, 3, rng.randint(1, 2), rng)
        if not exists(InverseKind.CORE, a):
            continue
        ref = core_inverse(a).value
        for fid in ("C5", "C7", "C8", "C11", "C12"):
            g = draw_inner("any", a, rng)
            try:
                got = apply_formula(fid, a, g).value
            except (NonExistent, PremiseViolation):
                continue
            assert got == ref


def test_some_g_formulas_hold_for_the_13_witness():
    rng = random.Random(11)
    from coreinv.inverses import one_three

    for _ in range(15):
        a = gen_with_rank(Fp(3), 3, rng.randint(1, 3), rng)
        if not exists(InverseKind.CORE, a):
            continue
        ref = core_inverse(a).value
        x13 = one_three(a).value
        for f in CATALOG.values():
            if f.some_g:
                for k in (1, 2, 3):
                    assert apply_formula(f.id, a, x13, k).value == ref


def test_applicable_with_precomputed_kinds():
    n = M([[0, 1], [0, 0]])
    for fid in CATALOG:
        have = {k for k in InverseKind if exists(k, n)}
        assert applicable(fid, n, have) == applicable(fid, n)
