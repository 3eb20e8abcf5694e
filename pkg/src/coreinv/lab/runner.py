"""Seeded trial loops producing :class:`TheoremReport` objects."""

from __future__ import annotations

from ..criteria import THEOREMS
from ..errors import GenerationExhausted
from ..inverses import InnerInverseFamily, sample_one_three
from ..scalars import FieldSpec
from .checks import (
    TrialResult,
    check_double_commute,
    check_equivalence_chain,
    check_jacobson,
    check_reverse_order,
)
from .generators import gen_chain_input, gen_jacobson_pair, gen_premise_pair, trial_rng
from .report import TheoremReport

RELATIONAL = ("jacobson", "double-commute", "reverse-order")
ENUMERATION_LIMIT = 729  # largest inner-inverse family enumerated in full
SAMPLED_INNER = 3  # inner inverses drawn per element when not enumerating


def theorem_names() -> list[str]:
    return list(RELATIONAL) + list(THEOREMS)


def inner_candidates(a, rng, samples: int = SAMPLED_INNER) -> tuple[list, bool]:
    """Inner inverses to quantify over, and whether they are the whole family."""
    fam = InnerInverseFamily(a)
    size = fam.size()
    if size is not None and size <= ENUMERATION_LIMIT:
        return list(fam.enumerate()), True
    return [fam.sample(rng) for _ in range(samples)], False


def run_trial(theorem: str, field: FieldSpec, n: int, index: int, seed: int) -> TrialResult:
    rng = trial_rng(seed, index)
    if theorem == "jacobson":
        a, b = gen_jacobson_pair(field, n, rng)
        return check_jacobson(a, b)
    if theorem == "double-commute":
        a, b, x = gen_premise_pair(theorem, field, n, rng)
        extra_a, extra_b = [], []
        if not field.is_finite:
            from ..inverses import one_three

            extra_a = [sample_one_three(a, rng, one_three(a).value) for _ in range(2)]
            extra_b = [sample_one_three(b, rng, one_three(b).value) for _ in range(2)]
        return check_double_commute(a, b, x, extra_a, extra_b)
    if theorem == "reverse-order":
        a, b = gen_premise_pair(theorem, field, n, rng)
        return check_reverse_order(a, b)
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}")
    a = gen_chain_input(field, n, rng)
    gs, _ = inner_candidates(a, rng)
    k = rng.randint(1, 3)
    return check_equivalence_chain(theorem, a, gs, k=k, rng=rng)


def run_check(theorem: str, field: FieldSpec, n: int, trials: int, seed: int = 0) -> TheoremReport:
    """Run ``trials`` independent seeded trials of one theorem.

    Trial ``i`` draws everything from ``trial_rng(seed, i)``, so a report
    can be replayed trial by trial.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 1 <= n <= 16:
        raise ValueError("n must be in 1..16")
    report = TheoremReport(theorem, {"field": str(field), "n": n, "trials": trials, "seed": seed})
    for i in range(trials):
        try:
            res = run_trial(theorem, field, n, i, seed)
        except GenerationExhausted as exc:
            report.record(i, True, False, inputs={})
            report.config.setdefault("exhausted", str(exc))
            continue
        report.record(i, res.passed, res.premise_hit, res.violated, res.inputs, res.positive)
    return report


__all__ = ["run_check", "run_trial", "inner_candidates", "theorem_names", "RELATIONAL"]
