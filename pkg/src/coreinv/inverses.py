"""Generalized inverses with exact certificates.

Every solver here computes a candidate, re-checks the defining equations
for its kind and only then returns an :class:`InverseCertificate`.
Nonexistence is reported by raising :class:`~coreinv.errors.NonExistent`.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import NonExistent, PremiseViolation, VerificationFailed
from .matrix import StarMatrix, _eliminate, rank, rank_form, solve_linear, try_inverse
from .scalars import FieldSpec, Rational, GaussianRational

__all__ = [
    "InverseKind",
    "InverseCertificate",
    "InnerInverseFamily",
    "AXIOMS",
    "check_axioms",
    "in_class",
    "inner_inverse",
    "sample_inner_inverse",
    "one_three",
    "one_four",
    "group_inverse",
    "group_via_units",
    "mp_inverse",
    "mp_via_lemma",
    "core_inverse",
    "dual_core_inverse",
    "jacobson",
    "compute",
    "exists",
    "sample_one_three",
    "sample_one_four",
    "class_members",
]


class InverseKind(enum.Enum):
    INNER = "inner"
    ONE_THREE = "13"
    ONE_FOUR = "14"
    GROUP = "group"
    MOORE_PENROSE = "mp"
    CORE = "core"
    DUAL_CORE = "dualcore"

    @classmethod
    def parse(cls, text: str) -> "InverseKind":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown inverse kind {text!r}") from None


# -- defining equations -------------------------------------------------------


def _products(a: StarMatrix, x: StarMatrix):
    # lazily computed shared products
    cache = {}

    def get(name):
        if name not in cache:
            if name == "ax":
                cache[name] = a @ x
            elif name == "xa":
                cache[name] = x @ a
            elif name == "axa":
                cache[name] = get("ax") @ a
            elif name == "xax":
                cache[name] = get("xa") @ x
            elif name == "xa2":
                cache[name] = get("xa") @ a
            elif name == "ax2":
                cache[name] = get("ax") @ x
            elif name == "a2x":
                cache[name] = a @ get("ax")
            elif name == "x2a":
                cache[name] = x @ get("xa")
        return cache[name]

    return get


EQUATIONS = {
    "axa=a": lambda a, x, p: p("axa") == a,
    "xax=x": lambda a, x, p: p("xax") == x,
    "(ax)*=ax": lambda a, x, p: p("ax").star() == p("ax"),
    "(xa)*=xa": lambda a, x, p: p("xa").star() == p("xa"),
    "ax=xa": lambda a, x, p: p("ax") == p("xa"),
    "xa^2=a": lambda a, x, p: p("xa2") == a,
    "ax^2=x": lambda a, x, p: p("ax2") == x,
    "a^2x=a": lambda a, x, p: p("a2x") == a,
    "x^2a=x": lambda a, x, p: p("x2a") == x,
}

AXIOMS = {
    InverseKind.INNER: ("axa=a",),
    InverseKind.ONE_THREE: ("axa=a", "(ax)*=ax"),
    InverseKind.ONE_FOUR: ("axa=a", "(xa)*=xa"),
    InverseKind.GROUP: ("axa=a", "xax=x", "ax=xa"),
    InverseKind.MOORE_PENROSE: ("axa=a", "xax=x", "(ax)*=ax", "(xa)*=xa"),
    InverseKind.CORE: ("axa=a", "xax=x", "(ax)*=ax", "xa^2=a", "ax^2=x"),
    InverseKind.DUAL_CORE: ("axa=a", "xax=x", "(xa)*=xa", "a^2x=a", "x^2a=x"),
}

# the shorter characterization of the core inverse
CORE_THREE = ("(ax)*=ax", "xa^2=a", "ax^2=x")


def check_equations(a: StarMatrix, x: StarMatrix, names: Sequence[str]) -> dict[str, bool]:
    a._check(x)
    p = _products(a, x)
    return {name: EQUATIONS[name](a, x, p) for name in names}


def check_axioms(kind: InverseKind, a: StarMatrix, x: StarMatrix) -> dict[str, bool]:
    """Evaluate every defining equation of ``kind`` for the pair ``(a, x)``."""
    return check_equations(a, x, AXIOMS[kind])


def in_class(a: StarMatrix, x: StarMatrix, kind: InverseKind) -> bool:
    return all(check_axioms(kind, a, x).values())


@dataclass(frozen=True)
class InverseCertificate:
    kind: InverseKind
    value: StarMatrix
    witnesses: tuple = ()
    axiom_check: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.axiom_check) and all(self.axiom_check.values())

    def witness(self, name: str) -> StarMatrix:
        for key, val in self.witnesses:
            if key == name:
                return val
        raise KeyError(name)

    def summary(self) -> str:
        checks = ", ".join(f"{k}:{'ok' if v else 'FAIL'}" for k, v in self.axiom_check.items())
        names = ", ".join(k for k, _ in self.witnesses) or "-"
        return f"kind={self.kind.value} verified=[{checks}] witnesses=[{names}]"


def _certify(kind, a, x, witnesses=()) -> InverseCertificate:
    checks = check_axioms(kind, a, x)
    cert = InverseCertificate(kind, x, tuple(witnesses), checks)
    if not cert.ok:
        failed = [k for k, v in checks.items() if not v]
        raise VerificationFailed(f"{kind.value} candidate fails {failed}")
    return cert


def _identity(a: StarMatrix) -> StarMatrix:
    return StarMatrix.identity(a.field, a.n)


def _augmented_rank(a: StarMatrix, b: StarMatrix) -> int:
    return len(_eliminate([list(r) + list(s) for r, s in zip(a.rows, b.rows)], None))


# -- inner inverses -----------------------------------------------------------


def _default_pool(field: FieldSpec):
    if field.tag == "Fp":
        return [field.coerce(v) for v in range(field.p)]
    rats = [Rational(v) for v in (-2, -1, 0, 1, 2, 3)] + [Rational(1, 2), Rational(-1, 3)]
    if field.tag == "Q":
        return rats
    small = [Rational(v) for v in (-1, 0, 1, 2)] + [Rational(1, 2)]
    return [GaussianRational(x, y) for x in small for y in small]


class InnerInverseFamily:
    """All inner inverses of ``a``: ``Q @ [[I_r, X], [Y, Z]] @ P``.

    ``P @ a @ Q = diag(I_r, 0)`` is the rank normal form of ``a``; ``X``,
    ``Y`` and ``Z`` range freely, giving an affine space of dimension
    ``n**2 - r**2``.
    """

    def __init__(self, a: StarMatrix):
        self.a = a
        self.rank_form = rank_form(a)
        self.r = self.rank_form.r
        n, r = a.n, self.r
        self.free_positions = [(i, j) for i in range(n) for j in range(n) if i >= r or j >= r]
        base = self.instantiate([a.field.zero()] * self.dimension)
        if a @ base @ a != a:  # pragma: no cover
            raise VerificationFailed("rank form does not yield an inner inverse")

    @property
    def dimension(self) -> int:
        return len(self.free_positions)

    def instantiate(self, values: Sequence) -> StarMatrix:
        f, n, r = self.a.field, self.a.n, self.r
        if len(values) != self.dimension:
            raise ValueError(f"expected {self.dimension} free values, got {len(values)}")
        mid = [[f.one() if (i == j and i < r) else f.zero() for j in range(n)] for i in range(n)]
        for (i, j), v in zip(self.free_positions, values):
            mid[i][j] = f.coerce(v)
        m = StarMatrix._raw(f, tuple(tuple(row) for row in mid))
        return self.rank_form.Q @ m @ self.rank_form.P

    def coordinates(self, g: StarMatrix):
        """Free-block values reproducing ``g``, or ``None`` if ``g`` is not in the family."""
        rf = self.rank_form
        mid = rf.Q_inv @ g @ rf.P_inv
        r = self.r
        for i in range(r):
            for j in range(r):
                if mid[i, j] != (1 if i == j else 0):
                    return None
        return [mid[i, j] for i, j in self.free_positions]

    def contains(self, g: StarMatrix) -> bool:
        return self.coordinates(g) is not None

    def sample(self, rng: random.Random, pool=None) -> StarMatrix:
        pool = pool if pool is not None else _default_pool(self.a.field)
        return self.instantiate([rng.choice(pool) for _ in range(self.dimension)])

    def enumerate(self) -> Iterator[StarMatrix]:
        """Every member; only for finite fields."""
        f = self.a.field
        if not f.is_finite:
            raise ValueError("the inner-inverse family is infinite over an infinite field")
        elems = [f.coerce(v) for v in range(f.p)]
        for values in itertools.product(elems, repeat=self.dimension):
            yield self.instantiate(values)

    def size(self):
        f = self.a.field
        return f.p ** self.dimension if f.is_finite else None


def inner_inverse(a: StarMatrix) -> InverseCertificate:
    """Canonical inner inverse ``Q @ diag(I_r, 0) @ P``."""
    rf = rank_form(a)
    g = rf.Q @ rf.block() @ rf.P
    return _certify(InverseKind.INNER, a, g, [("P", rf.P), ("Q", rf.Q)])


def sample_inner_inverse(a: StarMatrix, seed=0, pool=None) -> StarMatrix:
    """Seeded random member of the inner-inverse family of ``a``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    g = InnerInverseFamily(a).sample(rng, pool)
    if a @ g @ a != a:  # pragma: no cover
        raise VerificationFailed("sampled inner inverse fails axa=a")
    return g


# -- {1,3}, {1,4} ---------------------------------------------------------------


def one_three(a: StarMatrix) -> InverseCertificate:
    """Solve ``a* a x = a*``; any solution is a {1,3}-inverse."""
    a_s = a.star()
    lhs = a_s @ a
    x = solve_linear(lhs, a_s, "AX=B")
    if x is None:
        raise NonExistent(
            "a ∉ R^(1,3)",
            data={"rank(a*a)": rank(lhs), "rank([a*a | a*])": _augmented_rank(lhs, a_s)},
        )
    return _certify(InverseKind.ONE_THREE, a, x, [("x", x)])


def one_four(a: StarMatrix) -> InverseCertificate:
    """Solve ``a a* y = a`` and return ``x = y*``, so that ``a = a a* x*``."""
    lhs = a @ a.star()
    y = solve_linear(lhs, a, "AX=B")
    if y is None:
        raise NonExistent(
            "a ∉ R^(1,4)",
            data={"rank(aa*)": rank(lhs), "rank([aa* | a])": _augmented_rank(lhs, a)},
        )
    x = y.star()
    return _certify(InverseKind.ONE_FOUR, a, x, [("x", x)])


def sample_one_three(a: StarMatrix, rng: random.Random, base=None, pool=None) -> StarMatrix:
    """Random {1,3}-inverse ``x0 + (1 - x0 a) W``."""
    x0 = base if base is not None else one_three(a).value
    w = _random_matrix(a.field, a.n, rng, pool)
    return x0 + (_identity(a) - x0 @ a) @ w


def sample_one_four(a: StarMatrix, rng: random.Random, base=None, pool=None) -> StarMatrix:
    """Random {1,4}-inverse ``x0 + W (1 - a x0)``."""
    x0 = base if base is not None else one_four(a).value
    w = _random_matrix(a.field, a.n, rng, pool)
    return x0 + w @ (_identity(a) - a @ x0)


def _random_matrix(field, n, rng, pool=None):
    pool = pool if pool is not None else _default_pool(field)
    return StarMatrix._raw(field, tuple(tuple(rng.choice(pool) for _ in range(n)) for _ in range(n)))


def class_members(a: StarMatrix, kind: InverseKind) -> list[StarMatrix]:
    """All members of ``a{kind}`` by filtering the inner-inverse family (finite fields)."""
    return [g for g in InnerInverseFamily(a).enumerate() if in_class(a, g, kind)]


# -- group inverse ------------------------------------------------------------------


def group_inverse(a: StarMatrix) -> InverseCertificate:
    """``a# = y a x`` from ``a = a^2 x`` and ``a = y a^2``."""
    a2 = a @ a
    x = solve_linear(a2, a, "AX=B")
    y = solve_linear(a2, a, "XA=B")
    if x is None or y is None:
        raise NonExistent("a ∉ R^#", data={"rank(a)": rank(a), "rank(a^2)": rank(a2)})
    g = y @ a @ x
    return _certify(InverseKind.GROUP, a, g, [("x", x), ("y", y)])


def group_via_units(a: StarMatrix, g: StarMatrix, k: int = 1) -> InverseCertificate:
    """``a# = u^-1 a^(2k-1) v^-1`` with ``u = a^k + 1 - a g``, ``v = a^k + 1 - g a``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if a @ g @ a != a:
        raise PremiseViolation("g is not an inner inverse of a", failed=["aga=a"])
    one = _identity(a)
    ak = a ** k
    u = ak + one - a @ g
    v = ak + one - g @ a
    u_inv, v_inv = try_inverse(u), try_inverse(v)
    if (u_inv is None) != (v_inv is None):
        raise VerificationFailed("u and v disagree on invertibility")
    if u_inv is None:
        raise NonExistent("a ∉ R^#", unit="u", data={"u": u, "v": v})
    x = u_inv @ (a ** (2 * k - 1)) @ v_inv
    return _certify(
        InverseKind.GROUP, a, x, [("u", u), ("v", v), ("u^-1", u_inv), ("v^-1", v_inv)]
    )


# -- Moore-Penrose -------------------------------------------------------------------


def mp_inverse(a: StarMatrix) -> InverseCertificate:
    """``a^dagger = a^(1,4) a a^(1,3)``."""
    x14 = one_four(a).value
    x13 = one_three(a).value
    x = x14 @ a @ x13
    return _certify(InverseKind.MOORE_PENROSE, a, x, [("a^(1,4)", x14), ("a^(1,3)", x13)])


def mp_via_lemma(a: StarMatrix, x=None, y=None) -> InverseCertificate:
    """MP inverse from ``a = a a* a x = y a a* a``.

    Both ``a* a x^2 a*`` and ``a* y^2 a a*`` are formed and must agree.
    Explicit solutions ``x``/``y`` may be supplied; otherwise the canonical
    ones are used.
    """
    a_s = a.star()
    aaa = a @ a_s @ a
    if x is None:
        x = solve_linear(aaa, a, "AX=B")
    elif aaa @ x != a:
        raise PremiseViolation("x does not solve a = a a* a x", failed=["a=aa*ax"])
    if y is None:
        y = solve_linear(aaa, a, "XA=B")
    elif y @ aaa != a:
        raise PremiseViolation("y does not solve a = y a a* a", failed=["a=yaa*a"])
    if x is None or y is None:
        raise NonExistent("a ∉ R^†", data={"rank(a)": rank(a), "rank(aa*a)": rank(aaa)})
    x_form = a_s @ a @ x @ x @ a_s
    y_form = a_s @ y @ y @ a @ a_s
    if x_form != y_form:
        raise VerificationFailed("x-form and y-form of the MP inverse disagree")
    return _certify(InverseKind.MOORE_PENROSE, a, x_form, [("x", x), ("y", y)])


# -- core and dual core --------------------------------------------------------------


def _group_and(a, other, other_reason):
    failures = []
    g = o = None
    try:
        g = group_inverse(a).value
    except NonExistent:
        failures.append("a ∉ R^#")
    try:
        o = other(a).value
    except NonExistent:
        failures.append(other_reason)
    if failures:
        raise NonExistent("; ".join(failures))
    return g, o


def core_inverse(a: StarMatrix) -> InverseCertificate:
    """``a^(#) = a# a a^(1,3)``, checked against all five core equations."""
    g, x13 = _group_and(a, one_three, "a ∉ R^(1,3)")
    x = g @ a @ x13
    return _certify(InverseKind.CORE, a, x, [("a^#", g), ("a^(1,3)", x13)])


def dual_core_inverse(a: StarMatrix) -> InverseCertificate:
    """``a_(#) = a^(1,4) a a#``, checked against the dual equations."""
    g, x14 = _group_and(a, one_four, "a ∉ R^(1,4)")
    x = x14 @ a @ g
    return _certify(InverseKind.DUAL_CORE, a, x, [("a^#", g), ("a^(1,4)", x14)])


def jacobson(a: StarMatrix, b: StarMatrix) -> StarMatrix:
    """``(1 + b a)^-1 = 1 - b (1 + a b)^-1 a``."""
    one = _identity(a)
    x = try_inverse(one + a @ b)
    if x is None:
        raise NonExistent("1 + ab is not a unit", unit="1+ab")
    out = one - b @ x @ a
    ba1 = one + b @ a
    if out @ ba1 != one or ba1 @ out != one:
        raise VerificationFailed("1 - b(1+ab)^-1 a is not the inverse of 1 + ba")
    return out


_SOLVERS = {
    InverseKind.INNER: inner_inverse,
    InverseKind.ONE_THREE: one_three,
    InverseKind.ONE_FOUR: one_four,
    InverseKind.GROUP: group_inverse,
    InverseKind.MOORE_PENROSE: mp_inverse,
    InverseKind.CORE: core_inverse,
    InverseKind.DUAL_CORE: dual_core_inverse,
}


def compute(kind: InverseKind | str, a: StarMatrix) -> InverseCertificate:
    if isinstance(kind, str):
        kind = InverseKind.parse(kind)
    return _SOLVERS[kind](a)


def exists(kind: InverseKind | str, a: StarMatrix) -> bool:
    try:
        compute(kind, a)
    except NonExistent:
        return False
    return True
