import random

import pytest

from conftest import M, frac
from coreinv.errors import GenerationExhausted
from coreinv.inverses import InverseKind, core_inverse, exists, one_three
from coreinv.lab import generators
from coreinv.lab.checks import (
    check_double_commute,
    check_equivalence_chain,
    check_jacobson,
    check_reverse_order,
)
from coreinv.lab.generators import (
    gen_chain_input,
    gen_jacobson_pair,
    gen_premise_pair,
    gen_with_rank,
    signed_permutation,
    star_symmetric,
    trial_rng,
)
from coreinv.lab.report import TheoremReport
from coreinv.lab.runner import inner_candidates, run_check, run_trial
from coreinv.matrix import StarMatrix, rank, rank_form
from coreinv.scalars import QI, Fp, Q


# -- generators -------------------------------------------------------------------


def test_gen_with_rank_examples():
    assert gen_with_rank(Q, 3, 0, 1).is_zero()
    assert rank(gen_with_rank(Q, 3, 3, 1)) == 3
    assert rank_form(gen_with_rank(Q, 2, 1, 1)).r == 1
    with pytest.raises(ValueError):
        gen_with_rank(Q, 2, 3, 0)


@pytest.mark.parametrize("field", [Q, QI, Fp(2), Fp(5)], ids=str)
def test_gen_with_rank_is_exact(field):
    rng = random.Random(0)
    for _ in range(20):
        n = rng.randint(1, 5)
        r = rng.randint(0, n)
        assert rank(gen_with_rank(field, n, r, rng)) == r


def test_gen_with_rank_is_seeded():
    assert gen_with_rank(QI, 4, 2, 9) == gen_with_rank(QI, 4, 2, 9)


def test_star_symmetric_and_signed_permutation():
    rng = random.Random(2)
    for field in (Q, QI, Fp(3)):
        s = star_symmetric(field, 4, rng)
        assert s.star() == s
        w = signed_permutation(field, 4, rng)
        assert w @ w.star() == StarMatrix.identity(field, 4)


@pytest.mark.parametrize("field", [Q, QI, Fp(2), Fp(3)], ids=str)
def test_premise_generators_satisfy_premises(field):
    for seed in range(15):
        a, b = gen_premise_pair("reverse-order", field, 3, seed)
        assert a @ b == b @ a and a @ b.star() == b.star() @ a
        assert exists(InverseKind.CORE, a) and exists(InverseKind.CORE, b)
        a, b, x = gen_premise_pair("double-commute", field, 3, seed)
        assert x @ a == b @ x and x @ a.star() == b.star() @ x
        assert exists(InverseKind.CORE, a) and exists(InverseKind.CORE, b)


def test_premise_generator_emits_cross_pairs():
    pairs = [gen_premise_pair("double-commute", Q, 3, s) for s in range(20)]
    assert any(a != b for a, b, _ in pairs)


def test_premise_generator_errors(monkeypatch):
    with pytest.raises(ValueError):
        gen_premise_pair("jacobson", Q, 2, 0)
    monkeypatch.setattr(generators, "_core_invertible", lambda a: False)
    monkeypatch.setattr(generators, "RETRY_BUDGET", 3)
    with pytest.raises(GenerationExhausted) as info:
        gen_premise_pair("reverse-order", Q, 2, 0)
    assert info.value.budget == 3


def test_jacobson_pairs_hit_both_sides():
    hits = [check_jacobson(*gen_jacobson_pair(QI, 3, s)).premise_hit for s in range(40)]
    assert any(hits) and not all(hits)


def test_chain_inputs_include_non_group_invertible():
    rng = random.Random(0)
    mats = [gen_chain_input(Q, 3, rng) for _ in range(40)]
    assert any(not exists(InverseKind.GROUP, m) for m in mats)
    assert any(exists(InverseKind.CORE, m) for m in mats)


def test_trial_rng_independent_of_order():
    assert trial_rng(5, 3).random() == trial_rng(5, 3).random()
    assert trial_rng(5, 3).random() != trial_rng(5, 4).random()


# -- checkers ---------------------------------------------------------------------------


def test_double_commute_examples():
    e = StarMatrix.diag(Q, [1, 0])
    assert check_double_commute(e, e, e).passed
    s = M([[1, 1], [1, 1]])
    res = check_double_commute(s, s, s)
    assert res.passed and res.premise_hit
    # premise miss: x a != b x
    miss = check_double_commute(s, s, M([[1, 0], [0, 0]]))
    assert miss.passed and not miss.premise_hit


def test_reverse_order_examples():
    one = StarMatrix.identity(Q, 2)
    assert check_reverse_order(one, one).passed
    a, b = StarMatrix.diag(Q, [1, 0]), StarMatrix.diag(Q, [2, 0])
    res = check_reverse_order(a, b)
    assert res.passed and res.premise_hit
    assert core_inverse(a @ b).value == StarMatrix.diag(Q, [frac(1, 2), 0])
    # not core invertible -> premise miss
    n = M([[0, 1], [0, 0]])
    assert not check_reverse_order(n, n).premise_hit


def test_chain_examples():
    f2 = Fp(2)
    j = StarMatrix(f2, [[1, 1], [1, 1]])
    gs, full = inner_candidates(j, random.Random(0))
    assert full and len(gs) == 8
    res = check_equivalence_chain("one-sided-mp", j, gs)
    assert res.passed and not res.positive
    assert not any(res.values.values())
    one = StarMatrix.identity(Q, 2)
    res = check_equivalence_chain("mp-units", one, [one])
    assert res.passed and res.positive
    a = M([[1, -2], [1, -2]])
    mp = M([[1, 1], [-2, -2]]).scale(frac(1, 10))
    res = check_equivalence_chain("chen", a, [mp])
    assert res.passed and res.positive and all(res.values.values())


def test_chain_rejects_non_inner():
    with pytest.raises(ValueError):
        check_equivalence_chain("chen", M([[1, 0], [0, 0]]), [StarMatrix.zeros(Q, 2)])


def test_chain_detects_a_planted_violation(monkeypatch):
    """A checker that cannot fail is useless: corrupt one condition and watch it trip."""
    from coreinv import criteria

    t = criteria.THEOREMS["chen"]
    bad = criteria.Condition("iii", "each", "planted", lambda F, g, k: criteria.Verdict(True, {}))
    monkeypatch.setitem(
        criteria.THEOREMS, "chen", criteria.Theorem(t.id, t.inner_class, (t.conditions[0], bad), t.premise)
    )
    n = M([[0, 1], [0, 0]])
    res = check_equivalence_chain("chen", n, [M([[0, 0], [1, 1]])])
    assert not res.passed and "chen" in res.violated


def test_representation_mismatch_is_reported(monkeypatch):
    from coreinv import formulas

    f = formulas.CATALOG["C9"]
    broken = formulas.Formula(f.id, f.kind, f.inner_class, f.expression, lambda c: c.a, requires=f.requires)
    monkeypatch.setitem(formulas.CATALOG, "C9", broken)
    a = StarMatrix.diag(Q, [2, 0])
    res = check_equivalence_chain("chen", a, [StarMatrix.diag(Q, [frac(1, 2), 0])])
    assert not res.passed and "C9" in res.violated


# -- reports -------------------------------------------------------------------------


def test_report_roundtrip():
    rep = TheoremReport("chen", {"field": "Qi", "n": 2, "trials": 3, "seed": 7})
    rep.record(0, True, True, positive=True)
    rep.record(1, False, True, 'chen: (i) <=> (iii) "quoted"', {"a": M([[1, 2], [3, 4]]), "g": M([[0, 1], [1, 0]])})
    rep.record(2, True, False)
    text = rep.to_text()
    back = TheoremReport.from_text(text)
    assert back.theorem == "chen" and back.trials_run == 3 and back.trials_passed == 2
    assert back.premise_hits == 2 and back.positives == 1
    assert back.first_failure.inputs["a"] == M([[1, 2], [3, 4]])
    assert back.first_failure.trial == 1
    assert back.to_text() == text
    assert not back.ok


def test_report_merge_is_associative():
    def rep(run, passed):
        r = TheoremReport("x")
        for i in range(run):
            r.record(i, i < passed, True)
        return r

    a, b, c = rep(3, 3), rep(2, 1), rep(4, 4)
    left = a.merge(b).merge(c)
    right = a.merge(b.merge(c))
    assert (left.trials_run, left.trials_passed, len(left.failures)) == (
        right.trials_run,
        right.trials_passed,
        len(right.failures),
    )


# -- runner -----------------------------------------------------------------------


def test_run_check_is_replayable():
    r1 = run_check("core-units", QI, 3, 5, seed=11)
    r2 = run_check("core-units", QI, 3, 5, seed=11)
    assert r1.to_text() == r2.to_text()
    assert r1.ok and r1.premise_hits == 5


def test_run_trial_matches_report_slot():
    res = run_trial("reverse-order", Q, 3, 4, 2)
    again = run_trial("reverse-order", Q, 3, 4, 2)
    assert res.passed == again.passed and res.inputs["a"] == again.inputs["a"]


def test_run_check_validates():
    with pytest.raises(ValueError):
        run_check("chen", Q, 2, 0)
    with pytest.raises(ValueError):
        run_check("chen", Q, 17, 1)
    with pytest.raises(ValueError):
        run_check("nope", Q, 2, 1)


@pytest.mark.parametrize("theorem", ["k-exp", "one", "1-core", "add-new", "core-1", "mp-core", "group-mp", "dedekind-mp"])
def test_extra_theorems_hold(theorem):
    for field, n in ((Q, 3), (Fp(3), 2)):
        rep = run_check(theorem, field, n, 15, seed=3)
        assert rep.ok, rep.to_text()


def test_one_is_exact_over_f2():
    # Prop "one" needs the "for every g" quantifier: only full enumeration makes it exact
    rep = run_check("one", Fp(2), 2, 30, seed=1)
    assert rep.ok and rep.positives > 0
