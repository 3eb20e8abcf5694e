"""Seeded random inputs: rank-controlled matrices and premise-satisfying tuples."""

from __future__ import annotations

import random

from ..errors import GenerationExhausted, NonExistent
from ..inverses import (
    InnerInverseFamily,
    _default_pool,
    core_inverse,
    group_inverse,
    mp_inverse,
    one_three,
    sample_one_three,
)
from ..matrix import StarMatrix, try_inverse
from ..scalars import FieldSpec, GaussianRational

RETRY_BUDGET = 200


def trial_rng(seed: int, index: int) -> random.Random:
    """Independent generator for trial ``index`` under root ``seed``."""
    return random.Random(f"{seed}/{index}")


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_matrix(field: FieldSpec, n: int, rng: random.Random, pool=None) -> StarMatrix:
    pool = pool if pool is not None else _default_pool(field)
    return StarMatrix(field, [[rng.choice(pool) for _ in range(n)] for _ in range(n)])


def random_invertible(field: FieldSpec, n: int, rng: random.Random) -> StarMatrix:
    """``Pi @ L @ U`` with unit-lower ``L`` and upper ``U`` with nonzero diagonal."""
    pool = _default_pool(field)
    nonzero = [x for x in pool if x]
    zero, one = field.zero(), field.one()
    lower = [[rng.choice(pool) if j < i else (one if i == j else zero) for j in range(n)] for i in range(n)]
    upper = [[rng.choice(pool) if j > i else (rng.choice(nonzero) if i == j else zero) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    pi = [[one if perm[i] == j else zero for j in range(n)] for i in range(n)]
    return StarMatrix(field, pi) @ StarMatrix(field, lower) @ StarMatrix(field, upper)


def gen_with_rank(field: FieldSpec, n: int, r: int, seed) -> StarMatrix:
    """Random ``n x n`` matrix of exact rank ``r``."""
    if not 0 <= r <= n:
        raise ValueError(f"rank {r} out of range for n={n}")
    rng = _rng(seed)
    d = StarMatrix.diag(field, [1] * r + [0] * (n - r))
    if r == 0:
        return d
    return random_invertible(field, n, rng) @ d @ random_invertible(field, n, rng)


def gen_chain_input(field: FieldSpec, n: int, seed) -> StarMatrix:
    """Mixture of rank-controlled, nilpotent-part and fully random inputs.

    About a third of the draws carry a nilpotent Jordan block, so they are
    not group invertible; over infinite fields this is the only way the
    negative side of the equivalences gets exercised.
    """
    rng = _rng(seed)
    mode = rng.randrange(3)
    if mode == 0 or n < 2:
        return gen_with_rank(field, n, rng.randint(0, n), rng)
    if mode == 1:
        # similarity transform of J = [[0,1],[0,0]] (+) diag(random)
        pool = _default_pool(field)
        rows = [[field.zero()] * n for _ in range(n)]
        rows[0][1] = field.one()
        for i in range(2, n):
            rows[i][i] = rng.choice(pool)
        s = random_invertible(field, n, rng)
        return s @ StarMatrix(field, rows) @ try_inverse(s)
    return random_matrix(field, n, rng)


def star_symmetric(field: FieldSpec, n: int, rng: random.Random) -> StarMatrix:
    """Random ``s`` with ``s* = s`` (symmetric, or Hermitian over Qi)."""
    pool = _default_pool(field)
    rows = [[field.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            if i == j:
                x = rng.choice(pool)
                if field.tag == "Qi":
                    x = GaussianRational(x.re, 0)
                rows[i][i] = x
            else:
                x = rng.choice(pool)
                rows[i][j] = x
                rows[j][i] = field.conj(x)
    return StarMatrix(field, rows)


def _poly_coeffs(field: FieldSpec, rng: random.Random, degree: int):
    pool = _default_pool(field)
    return [rng.choice(pool) for _ in range(degree + 1)]


def poly_eval(coeffs, s: StarMatrix) -> StarMatrix:
    acc = StarMatrix.zeros(s.field, s.n)
    power = StarMatrix.identity(s.field, s.n)
    for c in coeffs:
        acc = acc + power.scale(c)
        power = power @ s
    return acc


def signed_permutation(field: FieldSpec, n: int, rng: random.Random) -> StarMatrix:
    """``W`` with ``W W* = 1`` over every supported field."""
    perm = list(range(n))
    rng.shuffle(perm)
    units = [1, -1]
    if field.tag == "Qi":
        units = [1, -1, GaussianRational(0, 1), GaussianRational(0, -1)]
    return StarMatrix(field, [[rng.choice(units) if perm[i] == j else 0 for j in range(n)] for i in range(n)])


def _core_invertible(a):
    try:
        core_inverse(a)
    except NonExistent:
        return False
    return True


def gen_premise_pair(theorem: str, field: FieldSpec, n: int, seed):
    """Inputs satisfying the premises of the relational theorems.

    ``reverse-order`` -> ``(a, b)`` with ``ab = ba``, ``ab* = b*a``, both core
    invertible.  ``double-commute`` -> ``(a, b, x)`` with ``xa = bx``,
    ``xa* = b*x`` and ``a``, ``b`` core invertible.  Both are built from
    polynomials in a star-symmetric seed ``s``; over Qi the coefficients
    may be non-real, which gives normal rather than Hermitian elements.
    """
    rng = _rng(seed)
    for _ in range(RETRY_BUDGET):
        s = star_symmetric(field, n, rng)
        if theorem == "reverse-order":
            a = poly_eval(_poly_coeffs(field, rng, rng.randint(0, 3)), s)
            b = poly_eval(_poly_coeffs(field, rng, rng.randint(0, 3)), s)
            if not (a @ b == b @ a and a @ b.star() == b.star() @ a):  # pragma: no cover
                continue
            if _core_invertible(a) and _core_invertible(b):
                return a, b
        elif theorem == "double-commute":
            a = poly_eval(_poly_coeffs(field, rng, rng.randint(0, 3)), s)
            r = poly_eval(_poly_coeffs(field, rng, rng.randint(0, 3)), a)
            if rng.random() < 0.5:
                b, x = a, r
            else:
                w = signed_permutation(field, n, rng)
                b = w @ a @ w.star()
                x = w @ r
            if not (x @ a == b @ x and x @ a.star() == b.star() @ x):  # pragma: no cover
                continue
            if _core_invertible(a) and _core_invertible(b):
                return a, b, x
        else:
            raise ValueError(f"no premise generator for {theorem!r}")
    raise GenerationExhausted(f"{theorem} premise inputs", RETRY_BUDGET)


def gen_jacobson_pair(field: FieldSpec, n: int, seed):
    rng = _rng(seed)
    a = random_matrix(field, n, rng)
    b = random_matrix(field, n, rng)
    a_inv = try_inverse(a)
    if a_inv is not None and rng.random() < 0.25:
        # 1 + ab = N with N of deficient rank
        nil = gen_with_rank(field, n, rng.randint(0, n - 1), rng)
        b = -(a_inv @ (StarMatrix.identity(field, n) - nil))
    return a, b


def draw_inner(inner_class: str, a: StarMatrix, seed) -> StarMatrix | None:
    """An inner inverse of ``a`` from a formula's required class.

    ``any`` and ``13`` are sampled; ``mp`` and ``group`` are the unique
    inverses.  ``None`` for class ``none`` or when the class is empty.
    """
    rng = _rng(seed)
    try:
        if inner_class == "any":
            return InnerInverseFamily(a).sample(rng)
        if inner_class == "13":
            return sample_one_three(a, rng, one_three(a).value)
        if inner_class == "mp":
            return mp_inverse(a).value
        if inner_class == "group":
            return group_inverse(a).value
    except NonExistent:
        return None
    return None


def draw_formula_inner(formula, a: StarMatrix, seed, k: int = 1, attempts: int = 4) -> StarMatrix | None:
    """``g`` for catalog entry ``formula`` on a core-invertible ``a``.

    For ``some_g`` entries, up to ``attempts`` random inner inverses are
    tried for invertible units before falling back to the canonical
    {1,3}-inverse, which always qualifies.
    """
    from ..formulas import _Ctx

    rng = _rng(seed)
    if not formula.some_g:
        return draw_inner(formula.inner_class, a, rng)
    for _ in range(attempts):
        g = draw_inner(formula.inner_class, a, rng)
        try:
            formula.evaluate(_Ctx(a, g, k))
        except NonExistent:
            continue
        return g
    return one_three(a).value


__all__ = [
    "draw_formula_inner",
    "draw_inner",
    "trial_rng",
    "random_matrix",
    "random_invertible",
    "gen_with_rank",
    "gen_chain_input",
    "star_symmetric",
    "poly_eval",
    "signed_permutation",
    "gen_premise_pair",
    "gen_jacobson_pair",
]
