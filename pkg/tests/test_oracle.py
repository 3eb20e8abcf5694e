import os
import subprocess
import sys

import numpy as np
import pytest

from coreinv import _kernels_py, kernels
from coreinv.inverses import InverseKind, core_inverse
from coreinv.lab.oracle import (
    CORE_THREE_MASK,
    MASKS,
    build_oracle,
    exhaustive_double_commute,
    exhaustive_jacobson,
    exhaustive_reverse_order,
    family_matches_table,
    oracle_vs_algorithms,
)
from coreinv.matrix import StarMatrix
from coreinv.scalars import Fp

# pinned after the first exhaustive run; any drift is a regression
COUNTS = {
    (2, 2): {"inner": 16, "13": 13, "14": 13, "group": 13, "mp": 11, "core": 11, "dualcore": 11},
    (3, 2): {"inner": 81, "13": 81, "14": 81, "group": 73, "mp": 81, "core": 73, "dualcore": 73},
}


@pytest.fixture(scope="module")
def t2():
    return build_oracle(2, 2)


@pytest.fixture(scope="module")
def t3():
    return build_oracle(3, 2)


def test_guard():
    with pytest.raises(ValueError):
        build_oracle(4, 2)
    with pytest.raises(ValueError):
        build_oracle(3, 3)  # 3^9 > 10^4
    assert build_oracle(2, 1).size == 2


def test_encode_decode(t3):
    for idx in t3.elements():
        assert t3.encode(t3.decode(idx)) == idx
    a, b = t3.decode(17), t3.decode(53)
    assert t3.decode(int(t3.mul[17, 53])) == a @ b
    assert t3.decode(int(t3.star[17])) == a.star()


def test_examples(t2):
    f2 = Fp(2)
    e = t2.encode(StarMatrix.diag(f2, [1, 0]))
    assert t2.value(e, InverseKind.CORE) == e
    assert len(t2.solutions(e, InverseKind.CORE)) == 1
    j = t2.encode(StarMatrix(f2, [[1, 1], [1, 1]]))
    assert not t2.exists(j, InverseKind.MOORE_PENROSE)
    assert not t2.exists(j, InverseKind.GROUP)


@pytest.mark.parametrize("p", [2, 3])
def test_counts_pinned(p, t2, t3):
    table = {2: t2, 3: t3}[p]
    assert table.counts() == COUNTS[(p, 2)]


@pytest.mark.parametrize("p", [2, 3])
def test_core_characterizations_coincide(p, t2, t3):
    table = {2: t2, 3: t3}[p]
    for idx in table.elements():
        assert table.solutions(idx, MASKS[InverseKind.CORE]) == table.solutions(idx, CORE_THREE_MASK)


@pytest.mark.parametrize("p", [2, 3])
def test_uniqueness(p, t2, t3):
    table = {2: t2, 3: t3}[p]
    for idx in table.elements():
        for kind in (InverseKind.GROUP, InverseKind.MOORE_PENROSE, InverseKind.CORE, InverseKind.DUAL_CORE):
            assert len(table.solutions(idx, kind)) <= 1


def test_family_matches_table(t2):
    assert all(family_matches_table(t2, idx) for idx in t2.elements())


def test_oracle_vs_algorithms_f2(t2):
    rep = oracle_vs_algorithms(t2)
    assert rep.ok and rep.trials_run == 16, rep.to_text()


def test_oracle_vs_algorithms_f3_solvers_only(t3):
    rep = oracle_vs_algorithms(t3, chains=False)
    assert rep.ok and rep.trials_run == 81, rep.to_text()


def test_oracle_detects_a_wrong_solver(t2, monkeypatch):
    import coreinv.lab.oracle as oracle_mod

    real = oracle_mod._solver_value
    # a solver that never finds a core inverse must be caught
    monkeypatch.setattr(oracle_mod, "_solver_value", lambda kind, a: None if kind is InverseKind.CORE else real(kind, a))
    rep = oracle_vs_algorithms(t2, chains=False)
    assert not rep.ok
    assert "core" in rep.first_failure.identity


@pytest.mark.parametrize("p", [2, 3])
def test_exhaustive_relational(p, t2, t3):
    table = {2: t2, 3: t3}[p]
    for fn in (exhaustive_double_commute, exhaustive_reverse_order, exhaustive_jacobson):
        rep = fn(table)
        assert rep.ok and rep.premise_hits > 0, rep.to_text()


def test_duality_on_oracle_elements(t3):
    for idx in t3.elements():
        a = t3.decode(idx)
        d = t3.value(idx, InverseKind.DUAL_CORE)
        c = t3.value(t3.encode(a.star()), InverseKind.CORE)
        assert (c is None) == (d is None)
        if d is not None:
            assert t3.decode(c).star() == t3.decode(d)
            assert core_inverse(a.star()).value.star() == t3.decode(d)


# -- kernels ----------------------------------------------------------------------------


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (3, 2), (5, 1), (2, 3)])
def test_kernel_parity(p, n):
    flags = _kernels_py.scan_flags(p, n)
    assert np.array_equal(kernels.scan_flags(p, n), flags)
    assert np.array_equal(kernels.mul_table(p, n), _kernels_py.mul_table(p, n))
    assert np.array_equal(kernels.star_table(p, n), _kernels_py.star_table(p, n))


def test_compiled_kernel_present():
    try:
        from coreinv import _kernels  # noqa: F401
    except ImportError:
        pytest.skip("compiled kernel not built in this environment")
    assert kernels.BACKEND == "cython"


def test_env_forces_fallback():
    env = dict(os.environ, COREINV_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import coreinv.kernels as k; print(k.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
