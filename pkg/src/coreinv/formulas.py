"""Unit-based representation formulas for core, dual core, group and MP inverses.

Each catalog entry evaluates a closed expression in ``a``, ``a*``, an inner
inverse ``g`` of a required class and (optionally) an exponent ``k``.  The
result is never trusted: :func:`apply_formula` re-checks it against the
defining equations of the entry's kind.

Required inner-inverse classes:

``any``   any inner inverse ``g`` (``aga = a``)
``13``    a {1,3}-inverse
``mp``    the Moore-Penrose inverse
``group`` the group inverse
``none``  no ``g`` is used

For most entries every ``g`` of the required class works once the inverse
exists.  Entries with ``some_g=True`` (C1-C4) are only claimed for an inner
inverse that makes their units invertible; for those a singular unit says
"pick another ``g``", not "the inverse does not exist".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import NonExistent, PremiseViolation
from .inverses import (
    InverseCertificate,
    InverseKind,
    check_axioms,
    core_inverse,
    exists,
    in_class,
    mp_via_lemma,
    one_four,
    one_three,
)
from .matrix import StarMatrix, try_inverse

__all__ = ["Formula", "CATALOG", "apply_formula", "applicable", "class_kind", "formulas_for"]


_CLASS_KIND = {
    "any": InverseKind.INNER,
    "13": InverseKind.ONE_THREE,
    "mp": InverseKind.MOORE_PENROSE,
    "group": InverseKind.GROUP,
}


def class_kind(inner_class: str) -> InverseKind | None:
    return _CLASS_KIND.get(inner_class)


@dataclass(frozen=True)
class Formula:
    id: str
    kind: InverseKind
    inner_class: str
    expression: str
    evaluate: Callable
    uses_k: bool = False
    min_k: int = 1
    needs_core: bool = False
    some_g: bool = False
    requires: tuple = ()  # inverse kinds whose existence makes the entry applicable


class _Ctx:
    """Evaluation scratchpad: shared products and the witness log."""

    def __init__(self, a, g, k):
        self.a, self.g, self.k = a, g, k
        self.one = StarMatrix.identity(a.field, a.n)
        self.a_s = a.star()
        self.witnesses = []

    def inv(self, name, m):
        self.witnesses.append((name, m))
        m_inv = try_inverse(m)
        if m_inv is None:
            raise NonExistent(f"{name} is not invertible", unit=name, data={name: m})
        self.witnesses.append((name + "^-1", m_inv))
        return m_inv

    @property
    def ag(self):
        return self.a @ self.g

    @property
    def ga(self):
        return self.g @ self.a


def _c1(c):
    a, a_s = c.a, c.a_s
    return c.inv("m", a_s @ a + c.one - c.ag) @ a_s


def _c2(c):
    a, a_s = c.a, c.a_s
    return a @ c.inv("n", a_s @ a_s + c.one - c.ag).star()


def _c3(c):
    a, a_s = c.a, c.a_s
    left = c.inv("a+1-ag", a + c.one - c.ag)
    right = c.inv("a*+1-ag", a_s + c.one - c.ag)
    return left @ a @ right.star()


def _c4(c):
    a, a_s, k = c.a, c.a_s, c.k
    return (a ** k) @ c.inv("w", a_s ** (k + 1) + c.one - c.ag).star()


def _c5(c):
    a, k = c.a, c.k
    ui_s = c.inv("u", c.a_s ** k + c.one - c.ag).star()
    return ui_s @ (a ** (2 * k - 1)) @ ui_s


def _c6(c):
    a, k = c.a, c.k
    return (a ** (k - 1)) @ c.inv("u", c.a_s ** k + c.one - c.ag).star()


def _c7(c):
    ui = c.inv("u", c.a_s + c.one - c.ag)
    return ui.star() @ ui @ c.a_s


def _c8(c):
    return c.inv("v", c.a_s @ c.a + c.one - c.ag) @ c.a_s


def _c9(c):
    a, a_s = c.a, c.a_s
    return c.inv("u", a @ a_s @ a + c.one - c.ag) @ a @ a_s


def _c10(c):
    a, a_s = c.a, c.a_s
    return a @ a_s @ c.inv("t", a @ a @ a_s + c.one - c.ag)


def _c11(c):
    ui = c.inv("u", c.a_s + c.one - c.ag)
    return ui.star() @ ui @ c.a_s


def _c12(c):
    return c.g @ c.a @ c.inv("u", c.a_s + c.one - c.ag).star()


def _d1(c):
    a, a_s = c.a, c.a_s
    return a_s @ a @ c.inv("v", a @ a_s @ a + c.one - c.ga)


def _d2(c):
    a, a_s = c.a, c.a_s
    return c.inv("s", a_s @ a @ a + c.one - c.ga) @ a_s @ a


def _d3(c):
    return c.inv("u", c.a_s + c.one - c.ag).star() @ c.a @ c.g


def _g1(c):
    a, k = c.a, c.k
    ak = a ** k
    u_inv = c.inv("u", ak + c.one - c.ag)
    v_inv = c.inv("v", ak + c.one - c.ga)
    return u_inv @ (a ** (2 * k - 1)) @ v_inv


def _g2(c):
    a, a_s = c.a, c.a_s
    h = a @ a_s @ c.inv("t", a @ a @ a_s + c.one - c.ag)
    return h @ h @ a


def _g3(c):
    a, a_s = c.a, c.a_s
    h = c.inv("s", a_s @ a @ a + c.one - c.ga) @ a_s @ a
    return a @ h @ h


def _g4(c):
    ui = c.inv("u", c.a_s + c.one - c.ag)
    return (ui @ ui).star() @ c.a


def _m1(c):
    x14 = one_four(c.a).value
    x13 = one_three(c.a).value
    c.witnesses += [("a^(1,4)", x14), ("a^(1,3)", x13)]
    return x14 @ c.a @ x13


def _m2(c):
    cert = mp_via_lemma(c.a)
    c.witnesses += list(cert.witnesses)
    return cert.value


def _m3(c):
    a = c.a
    return (c.inv("t", a @ a @ c.a_s + c.one - c.ag) @ a @ a).star()


def _m4(c):
    a = c.a
    return (a @ a @ c.inv("s", c.a_s @ a @ a + c.one - c.ga)).star()


def _m5(c):
    ui_s = c.inv("u", c.a_s + c.one - c.ag).star()
    return ui_s @ c.a @ ui_s


_CORE, _DUAL, _GROUP, _MP = (
    InverseKind.CORE,
    InverseKind.DUAL_CORE,
    InverseKind.GROUP,
    InverseKind.MOORE_PENROSE,
)

CATALOG: dict[str, Formula] = {
    f.id: f
    for f in [
        Formula("C1", _CORE, "any", "(a*a+1-ag)^-1 a*", _c1, some_g=True, requires=(_CORE,)),
        Formula("C2", _CORE, "any", "a [((a*)^2+1-ag)^-1]*", _c2, some_g=True, requires=(_CORE,)),
        Formula("C3", _CORE, "any", "(a+1-ag)^-1 a ((a*+1-ag)^-1)*", _c3, some_g=True, requires=(_CORE,)),
        Formula(
            "C4", _CORE, "any", "a^k [((a*)^(k+1)+1-ag)^-1]*", _c4,
            uses_k=True, needs_core=True, some_g=True, requires=(_CORE,),
        ),
        Formula("C5", _CORE, "13", "(u^-1)* a^(2k-1) (u^-1)*, u=(a*)^k+1-ag", _c5, uses_k=True, requires=(_CORE,)),
        Formula("C6", _CORE, "13", "a^(k-1) (u^-1)*, u=(a*)^k+1-ag", _c6, uses_k=True, min_k=2, requires=(_CORE,)),
        Formula("C7", _CORE, "13", "(u^-1)* u^-1 a*, u=a*+1-ag", _c7, requires=(_CORE,)),
        Formula("C8", _CORE, "13", "v^-1 a*, v=a*a+1-ag", _c8, requires=(_CORE,)),
        Formula("C9", _CORE, "any", "u^-1 a a*, u=aa*a+1-ag", _c9, requires=(_GROUP, _MP)),
        Formula("C10", _CORE, "mp", "a a* t^-1, t=a^2a*+1-ag", _c10, requires=(_MP, _CORE)),
        Formula("C11", _CORE, "mp", "(u^-1)* u^-1 a*, u=a*+1-ag", _c11, requires=(_MP, _CORE)),
        Formula("C12", _CORE, "group", "g a (u^-1)*, u=a*+1-ag", _c12, requires=(_GROUP, _MP)),
        Formula("D1", _DUAL, "any", "a*a v^-1, v=aa*a+1-ga", _d1, requires=(_GROUP, _MP)),
        Formula("D2", _DUAL, "mp", "s^-1 a*a, s=a*a^2+1-ga", _d2, requires=(_MP, _DUAL)),
        Formula("D3", _DUAL, "group", "(u^-1)* a g, u=a*+1-ag", _d3, requires=(_GROUP, _MP)),
        Formula(
            "G1", _GROUP, "any", "u^-1 a^(2k-1) v^-1, u=a^k+1-ag, v=a^k+1-ga", _g1,
            uses_k=True, requires=(_GROUP,),
        ),
        Formula("G2", _GROUP, "any", "(a a* t^-1)^2 a, t=a^2a*+1-ag", _g2, requires=(_GROUP, _MP)),
        Formula("G3", _GROUP, "any", "a (s^-1 a*a)^2, s=a*a^2+1-ga", _g3, requires=(_GROUP, _MP)),
        Formula("G4", _GROUP, "mp", "((u^-1)^2)* a, u=a*+1-ag", _g4, requires=(_MP, _GROUP)),
        Formula("M1", _MP, "none", "a^(1,4) a a^(1,3)", _m1, requires=(_MP,)),
        Formula("M2", _MP, "none", "a*a x^2 a*, a=aa*ax", _m2, requires=(_MP,)),
        Formula("M3", _MP, "any", "(t^-1 a^2)*, t=a^2a*+1-ag", _m3, requires=(_GROUP, _MP)),
        Formula("M4", _MP, "any", "(a^2 s^-1)*, s=a*a^2+1-ga", _m4, requires=(_GROUP, _MP)),
        Formula("M5", _MP, "group", "(u^-1)* a (u^-1)*, u=a*+1-ag", _m5, requires=(_GROUP, _MP)),
    ]
}


def applicable(fid: str, a: StarMatrix, available=None) -> bool:
    """True when every inverse the entry presupposes exists for ``a``.

    ``available`` is an optional precomputed set of the kinds that exist for
    ``a``; pass it when testing many entries against the same matrix.
    """
    if available is not None:
        return all(kind in available for kind in CATALOG[fid].requires)
    return all(exists(kind, a) for kind in CATALOG[fid].requires)


def formulas_for(kind: InverseKind) -> list[Formula]:
    return [f for f in CATALOG.values() if f.kind is kind]


def apply_formula(
    fid: str, a: StarMatrix, g: StarMatrix | None = None, k: int = 1
) -> InverseCertificate:
    """Evaluate catalog entry ``fid`` and certify the result.

    Raises :class:`NonExistent` when a unit named by the formula is singular
    and :class:`PremiseViolation` when ``g`` is not an inner inverse, a
    global premise fails, or the evaluated value breaks a defining equation.
    """
    try:
        f = CATALOG[fid]
    except KeyError:
        raise ValueError(f"unknown formula id {fid!r}") from None
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be an integer >= 1")
    if k < f.min_k:
        raise PremiseViolation(f"{fid} requires k >= {f.min_k}", failed=[f"k>={f.min_k}"])
    if f.inner_class != "none":
        if g is None:
            raise ValueError(f"{fid} needs an inner inverse g")
        a._check(g)
        if a @ g @ a != a:
            raise PremiseViolation("g is not an inner inverse of a", failed=["aga=a"])
    if f.needs_core:
        try:
            core_inverse(a)
        except NonExistent:
            raise PremiseViolation(f"{fid} requires a core invertible a", failed=["a in R^(#)"]) from None
    ctx = _Ctx(a, g, k)
    value = f.evaluate(ctx)
    checks = check_axioms(f.kind, a, value)
    if not all(checks.values()):
        failed = [name for name, ok in checks.items() if not ok]
        raise PremiseViolation(
            f"{fid} result fails {', '.join(failed)} (g outside class '{f.inner_class}'?)",
            failed=failed,
            value=value,
        )
    witnesses = list(ctx.witnesses)
    if g is not None:
        witnesses.insert(0, ("g", g))
    return InverseCertificate(f.kind, value, tuple(witnesses), checks)


def g_in_required_class(fid: str, a: StarMatrix, g: StarMatrix) -> bool:
    cls = CATALOG[fid].inner_class
    if cls == "none":
        return True
    return in_class(a, g, _CLASS_KIND[cls])
