"""Checkers for the relational theorems and the equivalence chains.

Each checker returns a :class:`TrialResult`; violations are data, not
exceptions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from ..criteria import THEOREMS, Facts
from ..errors import NonExistent, PremiseViolation
from ..formulas import apply_formula
from ..inverses import (
    InverseKind,
    core_inverse,
    in_class,
    jacobson,
    one_three,
    sample_one_three,
)
from ..matrix import StarMatrix, try_inverse


@dataclass
class TrialResult:
    passed: bool
    premise_hit: bool
    violated: str | None = None
    inputs: dict = field(default_factory=dict)
    positive: bool = False
    values: dict = field(default_factory=dict)


def _core(a):
    try:
        return core_inverse(a).value
    except NonExistent:
        return None


def check_jacobson(a: StarMatrix, b: StarMatrix) -> TrialResult:
    one = StarMatrix.identity(a.field, a.n)
    ab_unit = try_inverse(one + a @ b) is not None
    ba_unit = try_inverse(one + b @ a) is not None
    inputs = {"a": a, "b": b}
    if ab_unit != ba_unit:
        return TrialResult(False, ab_unit, "1+ab unit <=> 1+ba unit", inputs)
    if not ab_unit:
        return TrialResult(True, False, inputs=inputs)
    out = jacobson(a, b)
    if out @ (one + b @ a) != one:  # pragma: no cover - jacobson already verifies
        return TrialResult(False, True, "(1+ba)(1-b(1+ab)^-1 a) = 1", inputs)
    return TrialResult(True, True, inputs=inputs, positive=True)


def check_double_commute(
    a: StarMatrix, b: StarMatrix, x: StarMatrix, a13s: Sequence[StarMatrix] = (), b13s: Sequence[StarMatrix] = ()
) -> TrialResult:
    """``x a^(#) = b^(#) x`` and ``x a a^(1,3) = b b^(1,3) x`` under the premises.

    The commute identity is checked for every pair drawn from the canonical
    {1,3}-inverses plus ``a13s`` x ``b13s``.
    """
    inputs = {"a": a, "b": b, "x": x}
    if not (x @ a == b @ x and x @ a.star() == b.star() @ x):
        return TrialResult(True, False, inputs=inputs)
    ac, bc = _core(a), _core(b)
    if ac is None or bc is None:
        return TrialResult(True, False, inputs=inputs)
    if x @ ac != bc @ x:
        return TrialResult(False, True, "x a^(#) = b^(#) x", inputs)
    a_list = [one_three(a).value, *a13s]
    b_list = [one_three(b).value, *b13s]
    for a13 in a_list:
        for b13 in b_list:
            if x @ a @ a13 != b @ b13 @ x:
                return TrialResult(False, True, "x a a^(1,3) = b b^(1,3) x", {**inputs, "a13": a13, "b13": b13})
    return TrialResult(True, True, inputs=inputs, positive=True)


def check_reverse_order(a: StarMatrix, b: StarMatrix) -> TrialResult:
    inputs = {"a": a, "b": b}
    if not (a @ b == b @ a and a @ b.star() == b.star() @ a):
        return TrialResult(True, False, inputs=inputs)
    ac, bc = _core(a), _core(b)
    if ac is None or bc is None:
        return TrialResult(True, False, inputs=inputs)
    abc = _core(a @ b)
    if abc is None:
        return TrialResult(False, True, "ab in R^(#)", inputs)
    checks = [
        ("(ab)^(#) = b^(#) a^(#)", abc == bc @ ac),
        ("b^(#) a^(#) = a^(#) b^(#)", bc @ ac == ac @ bc),
        ("b^(#) a = a b^(#)", bc @ a == a @ bc),
        ("a^(#) b = b a^(#)", ac @ b == b @ ac),
    ]
    for name, ok in checks:
        if not ok:
            return TrialResult(False, True, name, inputs)
    return TrialResult(True, True, inputs=inputs, positive=True)


# -- equivalence chains ---------------------------------------------------------


def _candidates(theorem, facts: Facts, gs, rng, extra_13):
    a = facts.a
    cls = theorem.inner_class
    if cls == "mp":
        return [facts.mp.value] if facts.mp is not None else []
    if cls == "group":
        return [facts.group.value] if facts.group is not None else []
    if cls == "13":
        out = [g for g in gs if in_class(a, g, InverseKind.ONE_THREE)]
        if facts.x13 is not None:
            out.append(facts.x13.value)
            if rng is not None and not a.field.is_finite:
                out.extend(sample_one_three(a, rng, facts.x13.value) for _ in range(extra_13))
        return _dedupe(out)
    out = list(gs)
    if theorem.id in ("core-units", "one") and facts.x13 is not None:
        # a {1,3}-inverse witnesses the "some" conditions when a is core
        # invertible, and refutes the "all" premise when it is not
        out.append(facts.x13.value)
    return _dedupe(out)


def _dedupe(ms):
    seen, out = set(), []
    for m in ms:
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def _premise_holds(theorem, facts: Facts) -> bool:
    if theorem.premise == "core":
        return facts.core is not None
    if theorem.premise == "mp":
        return facts.mp is not None
    if theorem.premise == "group":
        return facts.group is not None
    return True


def check_equivalence_chain(
    theorem_id: str,
    a: StarMatrix,
    gs: Sequence[StarMatrix] = (),
    k: int = 1,
    rng: random.Random | None = None,
    extra_13: int = 3,
) -> TrialResult:
    """Evaluate every condition of a theorem on ``a`` and compare the booleans.

    ``gs`` are inner inverses of ``a``.  Conditions quantified "for each
    a^-" must agree with the g-free conditions for every candidate;
    "for some"/"for any" conditions are reduced with ``any``/``all`` over
    the candidate set.  Over a finite field with ``gs`` the full family
    the check is exact.  Wherever the conditions hold, the theorem's
    representation formulas must reproduce the canonical inverse.
    """
    theorem = THEOREMS[theorem_id]
    if theorem.fixed_k is not None:
        k = theorem.fixed_k
    facts = Facts(a)
    for g in gs:
        if a @ g @ a != a:
            raise ValueError("gs must be inner inverses of a")
    if not _premise_holds(theorem, facts):
        return TrialResult(True, False, inputs={"a": a})
    cands = _candidates(theorem, facts, gs, rng, extra_13)

    fixed, per_g = {}, {}
    for cond in theorem.conditions:
        if cond.quantifier == "fixed":
            fixed[cond.label] = cond.fn(facts, None, k).holds
        else:
            per_g[cond.label] = [cond.fn(facts, g, k).holds for g in cands]

    values = dict(fixed)
    for cond in theorem.conditions:
        if cond.quantifier == "some":
            values[cond.label] = any(per_g[cond.label])
        elif cond.quantifier == "all":
            values[cond.label] = bool(cands) and all(per_g[cond.label])

    inputs = {"a": a}
    if theorem.implication:
        premise, conclusion = (c.label for c in theorem.conditions)
        ok = (not values[premise]) or values[conclusion]
        if not ok:
            return TrialResult(False, True, f"{theorem_id}: {premise} => {conclusion}", inputs, values=values)
        return TrialResult(True, True, inputs=inputs, positive=values[premise], values=values)

    reference = None
    for cond in theorem.conditions:
        if cond.quantifier == "each":
            continue
        if reference is None:
            reference = (cond.label, values[cond.label])
        elif values[cond.label] != reference[1]:
            return TrialResult(
                False, True, f"{theorem_id}: ({reference[0]}) <=> ({cond.label})", inputs, values=values
            )
    each = [c.label for c in theorem.conditions if c.quantifier == "each"]
    positive = bool(reference and reference[1])
    for idx, g in enumerate(cands):
        row = {lab: per_g[lab][idx] for lab in each}
        # with no g-free condition the equivalence is per inner inverse
        ref = reference if reference is not None else (each[0], row[each[0]])
        positive = positive or (reference is None and ref[1])
        for lab, val in row.items():
            if val != ref[1]:
                return TrialResult(
                    False, True, f"{theorem_id}: ({ref[0]}) <=> ({lab})", {**inputs, "g": g}, values=values
                )

    failure = _check_representations(theorem, facts, cands, per_g, values, k)
    if failure is not None:
        name, g = failure
        return TrialResult(False, True, name, {**inputs, **({"g": g} if g is not None else {})}, values=values)
    return TrialResult(True, True, inputs=inputs, positive=positive, values=values)


_CANONICAL = {
    InverseKind.CORE: "core",
    InverseKind.DUAL_CORE: "dual",
    InverseKind.GROUP: "group",
    InverseKind.MOORE_PENROSE: "mp",
}


def _check_representations(theorem, facts, cands, per_g, values, k):
    from ..formulas import CATALOG

    a = facts.a
    for fid, gate in theorem.representations:
        f = CATALOG[fid]
        if f.min_k > k:
            continue
        canonical = getattr(facts, _CANONICAL[f.kind])
        if f.inner_class == "none":
            if values.get(gate):
                if canonical is None:
                    return f"{fid}: canonical inverse missing", None
                if apply_formula(fid, a, None, k).value != canonical.value:
                    return f"{fid} = canonical", None
            continue
        for idx, g in enumerate(cands):
            gate_val = per_g[gate][idx] if gate in per_g else values.get(gate)
            if not gate_val:
                continue
            if canonical is None:
                return f"{fid}: canonical inverse missing", g
            try:
                got = apply_formula(fid, a, g, k).value
            except (NonExistent, PremiseViolation) as exc:
                return f"{fid} failed: {exc}", g
            if got != canonical.value:
                return f"{fid} = canonical", g
    return None


__all__ = [
    "TrialResult",
    "check_jacobson",
    "check_double_commute",
    "check_reverse_order",
    "check_equivalence_chain",
]
