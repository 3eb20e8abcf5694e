"""Brute-force oracle over tiny matrix rings ``M_n(F_p)``.

Every pair ``(a, x)`` is scanned once by the kernel in
:mod:`coreinv.kernels`, which records which defining equations hold; the
solution set of each inverse kind is then a bitmask filter.  Nothing here
uses the algebraic solvers, so the table is an independent reference for
them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .. import kernels
from ..criteria import THEOREMS
from ..errors import NonExistent
from ..inverses import InnerInverseFamily, InverseKind, class_members, compute, mp_via_lemma
from ..matrix import StarMatrix, try_inverse
from ..scalars import Fp, is_prime
from .checks import check_equivalence_chain
from .report import TheoremReport

ORACLE_LIMIT = 10 ** 4

_B = {name[2:]: getattr(kernels, name) for name in dir(kernels) if name.startswith("B_")}
MASKS = {
    InverseKind.INNER: _B["AXA"],
    InverseKind.ONE_THREE: _B["AXA"] | _B["AX_STAR"],
    InverseKind.ONE_FOUR: _B["AXA"] | _B["XA_STAR"],
    InverseKind.GROUP: _B["AXA"] | _B["XAX"] | _B["COMMUTE"],
    InverseKind.MOORE_PENROSE: _B["AXA"] | _B["XAX"] | _B["AX_STAR"] | _B["XA_STAR"],
    InverseKind.CORE: _B["AXA"] | _B["XAX"] | _B["AX_STAR"] | _B["XAA"] | _B["AXX"],
    InverseKind.DUAL_CORE: _B["AXA"] | _B["XAX"] | _B["XA_STAR"] | _B["AAX"] | _B["XXA"],
}
CORE_THREE_MASK = _B["AX_STAR"] | _B["XAA"] | _B["AXX"]
UNIQUE_KINDS = (InverseKind.GROUP, InverseKind.MOORE_PENROSE, InverseKind.CORE, InverseKind.DUAL_CORE)

# theorems whose conditions depend on the exponent k
K_DEPENDENT = ("group-units", "one", "k-exp", "k-core")


@dataclass
class OracleTable:
    p: int
    n: int
    flags: np.ndarray
    mul: np.ndarray
    star: np.ndarray
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return self.p ** (self.n * self.n)

    @property
    def field(self):
        return Fp(self.p)

    def decode(self, idx: int) -> StarMatrix:
        digits = [(idx // self.p ** k) % self.p for k in range(self.n * self.n)]
        n = self.n
        return StarMatrix(self.field, [digits[i * n:(i + 1) * n] for i in range(n)])

    def encode(self, m: StarMatrix) -> int:
        vals = [int(v) for row in m.tolist() for v in row]
        return sum(v * self.p ** k for k, v in enumerate(vals))

    def elements(self):
        return range(self.size)

    def solutions(self, a: int, kind: InverseKind | int) -> list[int]:
        mask = MASKS[kind] if isinstance(kind, InverseKind) else kind
        key = (a, mask)
        if key not in self._cache:
            row = self.flags[a]
            self._cache[key] = np.nonzero((row & mask) == mask)[0].tolist()
        return self._cache[key]

    def exists(self, a: int, kind: InverseKind) -> bool:
        return bool(self.solutions(a, kind))

    def value(self, a: int, kind: InverseKind) -> int | None:
        """The inverse of a unique kind, or ``None``; raises if not unique."""
        sols = self.solutions(a, kind)
        if len(sols) > 1:
            raise AssertionError(f"{kind.value} inverse of element {a} not unique: {sols}")
        return sols[0] if sols else None

    def counts(self) -> dict[str, int]:
        """Number of elements admitting each kind of inverse."""
        return {k.value: sum(self.exists(a, k) for a in self.elements()) for k in InverseKind}


def build_oracle(p: int, n: int = 2) -> OracleTable:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if n < 1 or p ** (n * n) > ORACLE_LIMIT:
        raise ValueError(f"M_{n}(F_{p}) has {p}^{n * n} elements; the oracle is capped at {ORACLE_LIMIT}")
    return OracleTable(p, n, kernels.scan_flags(p, n), kernels.mul_table(p, n), kernels.star_table(p, n))


# -- comparison against the algebraic solvers ------------------------------------


def _solver_value(kind, a):
    try:
        return compute(kind, a).value
    except NonExistent:
        return None


def oracle_vs_algorithms(table: OracleTable, chains: bool = True) -> TheoremReport:
    """Compare every solver with the table on every element.

    One trial per element.  Checked: existence and value for all seven
    kinds, uniqueness of the four unique kinds, equality of the five- and
    three-equation core characterizations, the inner/{1,3}/{1,4} sets
    against the enumerated inner-inverse family, the core/dual-core
    duality, the two-sided-equation MP route, and (``chains=True``) every
    equivalence chain with the full inner-inverse family.
    """
    report = TheoremReport("oracle", {"p": table.p, "n": table.n, "backend": kernels.BACKEND})
    for idx in table.elements():
        a = table.decode(idx)
        violated = _compare_element(table, idx, a)
        if violated is None and chains:
            violated = _chains_on_element(table, idx, a)
        report.record(idx, violated is None, True, violated, {"a": a} if violated else None)
    return report


def _compare_element(table, idx, a):
    for kind in InverseKind:
        sols = table.solutions(idx, kind)
        got = _solver_value(kind, a)
        if (got is not None) != bool(sols):
            return f"existence of {kind.value} inverse"
        if kind in UNIQUE_KINDS:
            if len(sols) > 1:
                return f"uniqueness of {kind.value} inverse"
            if got is not None and table.encode(got) != sols[0]:
                return f"value of {kind.value} inverse"
        else:
            if got is not None and table.encode(got) not in sols:
                return f"{kind.value} solver output outside the solution set"
            members = sorted(table.encode(m) for m in class_members(a, kind))
            if members != sols:
                return f"{kind.value} set from the enumerated family"
    if table.solutions(idx, MASKS[InverseKind.CORE]) != table.solutions(idx, CORE_THREE_MASK):
        return "core: five-equation set = three-equation set"
    core_of_star = _solver_value(InverseKind.CORE, a.star())
    dual = _solver_value(InverseKind.DUAL_CORE, a)
    if (core_of_star is None) != (dual is None) or (dual is not None and core_of_star.star() != dual):
        return "star(core(star a)) = dual(a)"
    mp = _solver_value(InverseKind.MOORE_PENROSE, a)
    try:
        lemma = mp_via_lemma(a).value
    except NonExistent:
        lemma = None
    if lemma != mp:
        return "mp_via_lemma = mp_inverse"
    return None


def _chains_on_element(table, idx, a):
    gs = [table.decode(g) for g in table.solutions(idx, InverseKind.INNER)]
    for tid in THEOREMS:
        for k in (1, 2, 3) if tid in K_DEPENDENT else (1,):
            res = check_equivalence_chain(tid, a, gs, k=k)
            if not res.passed:
                return f"{res.violated} (k={k})"
    return None


# -- exhaustive relational theorems ------------------------------------------------


def exhaustive_double_commute(table: OracleTable) -> TheoremReport:
    """Every ``(a, b, x)`` with ``xa = bx``, ``xa* = b*x`` and ``a, b`` core invertible."""
    mul, st = table.mul, table.star
    core = {i: table.value(i, InverseKind.CORE) for i in table.elements()}
    invertible = [i for i in table.elements() if core[i] is not None]
    thirteen = {i: table.solutions(i, InverseKind.ONE_THREE) for i in invertible}
    report = TheoremReport("double-commute", {"p": table.p, "n": table.n, "mode": "exhaustive"})
    xs = np.arange(table.size)
    trial = 0
    for ia, ib in itertools.product(invertible, repeat=2):
        ok = (mul[xs, ia] == mul[ib, xs]) & (mul[xs, st[ia]] == mul[st[ib], xs])
        for ix in np.nonzero(ok)[0].tolist():
            violated = None
            if mul[ix, core[ia]] != mul[core[ib], ix]:
                violated = "x a^(#) = b^(#) x"
            else:
                xa = mul[ix, ia]
                bx_side = {mul[mul[ib, b13], ix] for b13 in thirteen[ib]}
                for a13 in thirteen[ia]:
                    left = mul[xa, a13]
                    if bx_side != {left}:
                        violated = "x a a^(1,3) = b b^(1,3) x"
                        break
            inputs = {"a": table.decode(ia), "b": table.decode(ib), "x": table.decode(ix)} if violated else None
            report.record(trial, violated is None, True, violated, inputs, positive=True)
            trial += 1
    return report


def exhaustive_reverse_order(table: OracleTable) -> TheoremReport:
    """Every ``(a, b)`` with ``ab = ba``, ``ab* = b*a`` and ``a, b`` core invertible."""
    mul, st = table.mul, table.star
    core = {i: table.value(i, InverseKind.CORE) for i in table.elements()}
    invertible = [i for i in table.elements() if core[i] is not None]
    report = TheoremReport("reverse-order", {"p": table.p, "n": table.n, "mode": "exhaustive"})
    trial = 0
    for ia, ib in itertools.product(invertible, repeat=2):
        if mul[ia, ib] != mul[ib, ia] or mul[ia, st[ib]] != mul[st[ib], ia]:
            continue
        ca, cb = core[ia], core[ib]
        cab = core[mul[ia, ib]]
        violated = None
        if cab is None:
            violated = "ab in R^(#)"
        elif cab != mul[cb, ca]:
            violated = "(ab)^(#) = b^(#) a^(#)"
        elif mul[cb, ca] != mul[ca, cb]:
            violated = "b^(#) a^(#) = a^(#) b^(#)"
        elif mul[cb, ia] != mul[ia, cb]:
            violated = "b^(#) a = a b^(#)"
        elif mul[ca, ib] != mul[ib, ca]:
            violated = "a^(#) b = b a^(#)"
        inputs = {"a": table.decode(ia), "b": table.decode(ib)} if violated else None
        report.record(trial, violated is None, True, violated, inputs, positive=True)
        trial += 1
    return report


def exhaustive_jacobson(table: OracleTable) -> TheoremReport:
    """``1 + ab`` is a unit iff ``1 + ba`` is, over every pair."""
    one = StarMatrix.identity(table.field, table.n)
    units = {i for i in table.elements() if try_inverse(table.decode(i)) is not None}
    shift = {i: table.encode(one + table.decode(i)) for i in table.elements()}
    report = TheoremReport("jacobson", {"p": table.p, "n": table.n, "mode": "exhaustive"})
    mul = table.mul
    for trial, (ia, ib) in enumerate(itertools.product(table.elements(), repeat=2)):
        left = shift[int(mul[ia, ib])] in units
        right = shift[int(mul[ib, ia])] in units
        violated = None if left == right else "1+ab unit <=> 1+ba unit"
        inputs = {"a": table.decode(ia), "b": table.decode(ib)} if violated else None
        report.record(trial, violated is None, left, violated, inputs, positive=left)
    return report


def family_matches_table(table: OracleTable, idx: int) -> bool:
    fam = InnerInverseFamily(table.decode(idx))
    return sorted(table.encode(g) for g in fam.enumerate()) == table.solutions(idx, InverseKind.INNER)


__all__ = [
    "OracleTable",
    "build_oracle",
    "oracle_vs_algorithms",
    "exhaustive_double_commute",
    "exhaustive_reverse_order",
    "exhaustive_jacobson",
    "MASKS",
    "CORE_THREE_MASK",
    "ORACLE_LIMIT",
]
