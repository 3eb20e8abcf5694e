"""Existence criteria: every listed condition of the equivalence theorems.

A criterion is addressed as ``"<theorem>:<label>"``, e.g. ``"chen:iii"``.
Conditions are evaluated literally: unit conditions by exact inversion,
one-sided conditions by solving ``S m = 1`` or ``m S = 1``, range
conditions ``aR = a^2R`` / ``Ra = Ra^2`` as solvability of ``a = a^2 x`` /
``a = x a^2``.

Conditions that quantify over inner inverses ("for some"/"for any") are
evaluated here for the single supplied ``g``; quantification is the job of
:func:`coreinv.lab.checks.check_equivalence_chain`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, NamedTuple

from .errors import NonExistent
from .inverses import (
    core_inverse,
    dual_core_inverse,
    group_inverse,
    mp_inverse,
    one_four,
    one_three,
)
from .matrix import StarMatrix, one_sided_invertible, solve_linear, try_inverse

__all__ = ["Verdict", "Condition", "Theorem", "THEOREMS", "Facts", "existence_criteria"]


class Verdict(NamedTuple):
    holds: bool
    witnesses: dict


def _unit(name, m):
    inv = try_inverse(m)
    w = {name: m}
    if inv is not None:
        w[name + "^-1"] = inv
    return Verdict(inv is not None, w)


def _left(name, m):
    s = one_sided_invertible(m, "left")
    w = {name: m}
    if s is not None:
        w["left inverse of " + name] = s
    return Verdict(s is not None, w)


def _right(name, m):
    s = one_sided_invertible(m, "right")
    w = {name: m}
    if s is not None:
        w["right inverse of " + name] = s
    return Verdict(s is not None, w)


def _both(*vs):
    w = {}
    for v in vs:
        w.update(v.witnesses)
    return Verdict(all(v.holds for v in vs), w)


def _cert_or_none(solver, a):
    try:
        return solver(a)
    except NonExistent:
        return None


class Facts:
    """Lazily computed facts about a single element ``a``."""

    def __init__(self, a: StarMatrix):
        self.a = a
        self.one = StarMatrix.identity(a.field, a.n)
        self.a_s = a.star()

    @cached_property
    def group(self):
        return _cert_or_none(group_inverse, self.a)

    @cached_property
    def x13(self):
        return _cert_or_none(one_three, self.a)

    @cached_property
    def x14(self):
        return _cert_or_none(one_four, self.a)

    @cached_property
    def mp(self):
        return _cert_or_none(mp_inverse, self.a)

    @cached_property
    def core(self):
        return _cert_or_none(core_inverse, self.a)

    @cached_property
    def dual(self):
        return _cert_or_none(dual_core_inverse, self.a)

    @cached_property
    def right_range(self):
        # aR = a^2 R
        return solve_linear(self.a @ self.a, self.a, "AX=B")

    @cached_property
    def left_range(self):
        # Ra = Ra^2
        return solve_linear(self.a @ self.a, self.a, "XA=B")

    def has(self, attr, label):
        cert = getattr(self, attr)
        return Verdict(cert is not None, {label: cert.value} if cert is not None else {})


@dataclass(frozen=True)
class Condition:
    label: str
    quantifier: str  # "fixed" | "each" | "some" | "all"
    text: str
    fn: Callable


@dataclass(frozen=True)
class Theorem:
    id: str
    inner_class: str  # inner inverses the conditions quantify over: any | 13 | mp | group
    conditions: tuple
    premise: str | None = None  # "core" | "mp" | "group"
    implication: bool = False  # conditions[0] => conditions[1] only
    representations: tuple = ()  # (formula id, condition label gating it)
    fixed_k: int | None = None

    def condition(self, label) -> Condition:
        for c in self.conditions:
            if c.label == label:
                return c
        raise KeyError(f"{self.id} has no condition {label!r}")


def _c(label, quant, text, fn):
    return Condition(label, quant, text, fn)


def _ag(F, g):
    return F.a @ g


def _ga(F, g):
    return g @ F.a


_CORE_EXISTS = lambda F, g, k: F.has("core", "a^(#)")
_MP_EXISTS = lambda F, g, k: F.has("mp", "a^dagger")
_GROUP_EXISTS = lambda F, g, k: F.has("group", "a^#")


def _one_sided_mp_exprs(F, g):
    a, a_s, one = F.a, F.a_s, F.one
    ag, ga = _ag(F, g), _ga(F, g)
    return {
        "aa*+1-ag": a @ a_s + one - ag,
        "a*a+1-ga": a_s @ a + one - ga,
        "aa*ag+1-ag": a @ a_s @ ag + one - ag,
        "gaa*a+1-ga": g @ a @ a_s @ a + one - ga,
    }


def _osm(side, key):
    test = _right if side == "right" else _left
    return lambda F, g, k: test(key, _one_sided_mp_exprs(F, g)[key])


def _mpu(key):
    return lambda F, g, k: _unit(key, _one_sided_mp_exprs(F, g)[key])


def _chen_units(F, g):
    a, a_s, one = F.a, F.a_s, F.one
    return {
        "u": a @ a_s @ a + one - _ag(F, g),
        "v": a @ a_s @ a + one - _ga(F, g),
        "s": a_s @ a @ a + one - _ga(F, g),
        "t": a @ a @ a_s + one - _ag(F, g),
    }


def _chen(key):
    return lambda F, g, k: _unit(key, _chen_units(F, g)[key])


def _k_unit(name, power_of_astar):
    def fn(F, g, k):
        p = power_of_astar(k)
        return _unit(name, F.a_s ** p + F.one - _ag(F, g))

    return fn


THEOREMS: dict[str, Theorem] = {}


def _register(t: Theorem):
    THEOREMS[t.id] = t


_register(
    Theorem(
        "group-units",
        "any",
        (
            _c("i", "fixed", "a in R^#", _GROUP_EXISTS),
            _c("ii", "each", "u=a^k+1-ag unit", lambda F, g, k: _unit("u", F.a ** k + F.one - _ag(F, g))),
            _c("iii", "each", "v=a^k+1-ga unit", lambda F, g, k: _unit("v", F.a ** k + F.one - _ga(F, g))),
        ),
        representations=(("G1", "ii"),),
    )
)

_register(
    Theorem(
        "core-units",
        "any",
        (
            _c("i", "fixed", "a in R^(#)", _CORE_EXISTS),
            _c(
                "ii",
                "some",
                "a+1-ag and a*+1-ag units",
                lambda F, g, k: _both(
                    _unit("a+1-ag", F.a + F.one - _ag(F, g)), _unit("a*+1-ag", F.a_s + F.one - _ag(F, g))
                ),
            ),
            _c(
                "iii",
                "some",
                "a+1-ag unit, a*+1-ag left invertible",
                lambda F, g, k: _both(
                    _unit("a+1-ag", F.a + F.one - _ag(F, g)), _left("a*+1-ag", F.a_s + F.one - _ag(F, g))
                ),
            ),
            _c(
                "iv",
                "some",
                "a*a+1-ag and (a*)^2+1-ag units",
                lambda F, g, k: _both(
                    _unit("a*a+1-ag", F.a_s @ F.a + F.one - _ag(F, g)),
                    _unit("(a*)^2+1-ag", F.a_s @ F.a_s + F.one - _ag(F, g)),
                ),
            ),
            _c(
                "v",
                "some",
                "a*a+1-ag and (a*)^2+1-ag left invertible",
                lambda F, g, k: _both(
                    _left("a*a+1-ag", F.a_s @ F.a + F.one - _ag(F, g)),
                    _left("(a*)^2+1-ag", F.a_s @ F.a_s + F.one - _ag(F, g)),
                ),
            ),
            _c(
                "vi",
                "some",
                "a+1-ag and (a*)^2+1-ag left invertible",
                lambda F, g, k: _both(
                    _left("a+1-ag", F.a + F.one - _ag(F, g)),
                    _left("(a*)^2+1-ag", F.a_s @ F.a_s + F.one - _ag(F, g)),
                ),
            ),
        ),
        representations=(("C1", "iv"), ("C2", "iv"), ("C3", "ii")),
    )
)

_register(
    Theorem(
        "one",
        "any",
        (
            _c("premise", "all", "(a*)^k+1-ag unit for every g", _k_unit("(a*)^k+1-ag", lambda k: k)),
            _c("conclusion", "fixed", "a in R^(#)", _CORE_EXISTS),
        ),
        implication=True,
    )
)

_register(
    Theorem(
        "k-exp",
        "any",
        (
            _c("i", "each", "(a*)^k+1-ag unit", _k_unit("(a*)^k+1-ag", lambda k: k)),
            _c("ii", "each", "(a*)^(k+1)+1-ag unit", _k_unit("(a*)^(k+1)+1-ag", lambda k: k + 1)),
            _c(
                "iii",
                "each",
                "a*a+1-ag unit",
                lambda F, g, k: _unit("a*a+1-ag", F.a_s @ F.a + F.one - _ag(F, g)),
            ),
        ),
        premise="core",
        representations=(("C1", "iii"), ("C4", "ii")),
    )
)


def _k_core_cond(fixed_k=None):
    def fn(F, g, k):
        kk = fixed_k or k
        if F.x13 is None:
            return Verdict(False, {})
        return _unit("u", F.a_s ** kk + F.one - _ag(F, g))

    return fn


_register(
    Theorem(
        "k-core",
        "13",
        (
            _c("i", "fixed", "a in R^(#)", _CORE_EXISTS),
            _c("ii", "all", "a in R^(1,3), u=(a*)^k+1-ag unit for any g in a{1,3}", _k_core_cond()),
            _c("iii", "some", "a in R^(1,3), u=(a*)^k+1-ag unit for some g in a{1,3}", _k_core_cond()),
        ),
        representations=(("C5", "iii"), ("C6", "iii")),
    )
)

_register(
    Theorem(
        "1-core",
        "13",
        (
            _c("i", "fixed", "a in R^(#)", _CORE_EXISTS),
            _c("ii", "all", "a in R^(1,3), a*+1-ag unit for any g in a{1,3}", _k_core_cond(1)),
            _c("iii", "some", "a in R^(1,3), a*+1-ag unit for some g in a{1,3}", _k_core_cond(1)),
        ),
        representations=(("C7", "iii"), ("C5", "iii")),
        fixed_k=1,
    )
)


def _add_new_cond(F, g, k):
    if F.x13 is None:
        return Verdict(False, {})
    return _unit("v", F.a_s @ F.a + F.one - _ag(F, g))


_register(
    Theorem(
        "add-new",
        "13",
        (
            _c("i", "fixed", "a in R^(#)", _CORE_EXISTS),
            _c("ii", "all", "a*a+1-ag unit for any g in a{1,3}", _add_new_cond),
            _c("iii", "some", "a*a+1-ag unit for some g in a{1,3}", _add_new_cond),
        ),
        representations=(("C8", "iii"),),
    )
)

_register(
    Theorem(
        "one-sided-mp",
        "any",
        (
            _c("i", "fixed", "a in R^dagger", _MP_EXISTS),
            _c("ii", "each", "aa*+1-ag right invertible", _osm("right", "aa*+1-ag")),
            _c("iii", "each", "a*a+1-ga right invertible", _osm("right", "a*a+1-ga")),
            _c("iv", "each", "aa*ag+1-ag right invertible", _osm("right", "aa*ag+1-ag")),
            _c("v", "each", "gaa*a+1-ga right invertible", _osm("right", "gaa*a+1-ga")),
            _c("vi", "each", "aa*+1-ag left invertible", _osm("left", "aa*+1-ag")),
            _c("vii", "each", "a*a+1-ga left invertible", _osm("left", "a*a+1-ga")),
            _c("viii", "each", "aa*ag+1-ag left invertible", _osm("left", "aa*ag+1-ag")),
            _c("ix", "each", "gaa*a+1-ga left invertible", _osm("left", "gaa*a+1-ga")),
        ),
        representations=(("M1", "i"), ("M2", "i")),
    )
)

_register(
    Theorem(
        "mp-units",
        "any",
        (
            _c("i", "fixed", "a in R^dagger", _MP_EXISTS),
            _c("ii", "each", "aa*+1-ag unit", _mpu("aa*+1-ag")),
            _c("iii", "each", "a*a+1-ga unit", _mpu("a*a+1-ga")),
            _c("iv", "each", "aa*ag+1-ag unit", _mpu("aa*ag+1-ag")),
            _c("v", "each", "gaa*a+1-ga unit", _mpu("gaa*a+1-ga")),
        ),
    )
)


def _range_right_i(F, g, k):
    x = F.right_range
    v = F.has("mp", "a^dagger")
    w = dict(v.witnesses)
    if x is not None:
        w["x (a=a^2x)"] = x
    return Verdict(v.holds and x is not None, w)


def _range_left_i(F, g, k):
    x = F.left_range
    v = F.has("mp", "a^dagger")
    w = dict(v.witnesses)
    if x is not None:
        w["x (a=xa^2)"] = x
    return Verdict(v.holds and x is not None, w)


_register(
    Theorem(
        "range-right",
        "any",
        (
            _c("i", "fixed", "a in R^dagger and aR = a^2R", _range_right_i),
            _c("ii", "each", "u=aa*a+1-ag right invertible", lambda F, g, k: _right("u", _chen_units(F, g)["u"])),
            _c("iii", "each", "v=a*a^2+1-ga right invertible", lambda F, g, k: _right("v", _chen_units(F, g)["s"])),
        ),
    )
)

_register(
    Theorem(
        "range-left",
        "any",
        (
            _c("i", "fixed", "a in R^dagger and Ra = Ra^2", _range_left_i),
            _c("ii", "each", "u=aa*a+1-ga left invertible", lambda F, g, k: _left("u", _chen_units(F, g)["v"])),
            _c("iii", "each", "v=a^2a*+1-ag left invertible", lambda F, g, k: _left("v", _chen_units(F, g)["t"])),
        ),
    )
)


def _group_and_mp(F, g, k):
    return _both(F.has("group", "a^#"), F.has("mp", "a^dagger"))


def _core_and_dual(F, g, k):
    return _both(F.has("core", "a^(#)"), F.has("dual", "a_(#)"))


_register(
    Theorem(
        "chen",
        "any",
        (
            _c("i", "fixed", "a in R^# and R^dagger", _group_and_mp),
            _c("ii", "fixed", "a in R^(#) and R_(#)", _core_and_dual),
            _c("iii", "each", "u=aa*a+1-ag unit", _chen("u")),
            _c("iv", "each", "v=aa*a+1-ga unit", _chen("v")),
            _c("v", "each", "s=a*a^2+1-ga unit", _chen("s")),
            _c("vi", "each", "t=a^2a*+1-ag unit", _chen("t")),
        ),
        representations=(("C9", "iii"), ("D1", "iv"), ("M3", "vi"), ("M4", "v"), ("G2", "vi"), ("G3", "v")),
    )
)

_register(
    Theorem(
        "core-1",
        "mp",
        (
            _c("i", "fixed", "a in R^(#)", _CORE_EXISTS),
            _c("ii", "fixed", "a in R_(#)", lambda F, g, k: F.has("dual", "a_(#)")),
            _c("iii", "each", "u=aa*a+1-aa^dagger unit", _chen("u")),
            _c("iv", "each", "v=aa*a+1-a^dagger a unit", _chen("v")),
            _c("v", "each", "s=a*a^2+1-a^dagger a unit", _chen("s")),
            _c("vi", "each", "t=a^2a*+1-aa^dagger unit", _chen("t")),
        ),
        premise="mp",
        representations=(("C9", "iii"), ("C10", "vi"), ("D1", "iv"), ("D2", "v")),
    )
)

_register(
    Theorem(
        "mp-core",
        "mp",
        (
            _c("i", "fixed", "a in R^(#)", _CORE_EXISTS),
            _c("ii", "fixed", "a in R^#", _GROUP_EXISTS),
            _c("iii", "each", "a*+1-aa^dagger unit", lambda F, g, k: _unit("u", F.a_s + F.one - _ag(F, g))),
        ),
        premise="mp",
        representations=(("G4", "iii"), ("C11", "iii")),
    )
)

_register(
    Theorem(
        "group-mp",
        "group",
        (
            _c("i", "fixed", "a in R^(#) and R_(#)", _core_and_dual),
            _c("ii", "fixed", "a in R^dagger", _MP_EXISTS),
            _c("iii", "each", "a*+1-aa^# unit", lambda F, g, k: _unit("u", F.a_s + F.one - _ag(F, g))),
        ),
        premise="group",
        representations=(("M5", "iii"), ("C12", "iii"), ("D3", "iii")),
    )
)

_register(
    Theorem(
        "dedekind-mp",
        "mp",
        (
            _c("i", "fixed", "a in R^(#)", _CORE_EXISTS),
            _c("ii", "each", "a*a+1-aa^dagger unit", lambda F, g, k: _unit("v", F.a_s @ F.a + F.one - _ag(F, g))),
        ),
        premise="mp",
        representations=(("C8", "ii"), ("C1", "ii")),
    )
)


def existence_criteria(
    a: StarMatrix, criterion: str, g: StarMatrix | None = None, k: int = 1, facts: Facts | None = None
) -> Verdict:
    """Evaluate one named condition, e.g. ``existence_criteria(a, "chen:iii", g)``."""
    try:
        theorem_id, label = criterion.split(":")
        theorem = THEOREMS[theorem_id]
        cond = theorem.condition(label)
    except (ValueError, KeyError):
        raise ValueError(f"unknown criterion {criterion!r}") from None
    if cond.quantifier != "fixed" and g is None:
        raise ValueError(f"criterion {criterion} needs an inner inverse g")
    if g is not None and a @ g @ a != a:
        raise ValueError("g is not an inner inverse of a")
    if theorem.fixed_k is not None:
        k = theorem.fixed_k
    return cond.fn(facts or Facts(a), g, k)
