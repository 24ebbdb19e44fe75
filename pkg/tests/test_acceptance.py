"""Acceptance criteria. Every check is exact; each test records one
PASS/FAIL line, printed in the terminal summary."""

import json
import random
import time

import pytest

from d0lgrowth import (
    Member,
    NotMember,
    Polynomial,
    Reason,
    advance_axiom,
    compute_shift,
    cross_check,
    decide_membership,
    difference,
    evaluate,
    growth_length,
    growth_table,
    iterated_difference,
    iterated_difference_direct,
    shift_argument,
    synthesize_general,
    verify_growth,
)
from d0lgrowth.cli import main
from d0lgrowth.serialize import system_from_json

from conftest import cube_system, identity_system, parabola_system
from families import brute_force_member, random_rational, restricted_member, shifted_member

X = Polynomial.x()


@pytest.fixture
def criterion(record_property):
    def label(text):
        record_property("criterion", text)

    return label


def _property_suite():
    rng = random.Random(20240501)
    restricted = [restricted_member(rng)[0] for _ in range(100)]
    shifted = [shifted_member(rng)[0] for _ in range(100)]
    return restricted, shifted


RESTRICTED, SHIFTED = _property_suite()


def _golden_systems():
    return [
        cube_system(),
        parabola_system(),
        identity_system(),
        synthesize_general(X**3 + 1).system,
        synthesize_general((X - 2) ** 2 + 2).system,
        synthesize_general(Polynomial.constant(5)).system,
    ]


def test_criterion_1_restricted_golden(criterion, capsys):
    criterion("1. x^3+1 golden system, growth n^3+1 on [0,30], level lengths, < 1 s")
    start = time.perf_counter()
    assert main(["synth", "x^3+1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    rename = {f"a{i}": str(i) for i in range(4)}
    rules = {rename[k]: "".join(rename[a] for a in v) for k, v in data["rules"].items()}
    assert rules == {"0": "0", "1": "1000000", "2": "2000001", "3": "32"}
    assert [rename[a] for a in data["axiom"]] == ["3"]

    S = system_from_json(data)
    assert all(growth_length(S, n) == n**3 + 1 for n in range(31))
    report = synthesize_general(X**3 + 1)
    assert report.system == S
    levels = [S.with_axiom(x) for x in report.level_axioms]
    expected = [lambda n: 6, lambda n: 6 * n + 6, lambda n: 3 * n * n + 3 * n + 1, lambda n: n**3 + 1]
    for level, f in zip(levels, expected):
        assert growth_table(level, 30).lengths == tuple(f(n) for n in range(31))
    assert time.perf_counter() - start < 1.0


def test_criterion_2_general_golden(criterion):
    criterion("2. (x-2)^2+2: shift 2, core x^2+2, axiom e^5 b1, growth on [0,30], < 1 s")
    start = time.perf_counter()
    F = (X - 2) ** 2 + 2
    assert compute_shift(F) == 2
    assert shift_argument(F, 2) == X**2 + 2
    report = synthesize_general(F)
    S = report.system
    assert S.rule("a1") == ("a1", "a0", "a0")
    assert S.rule("a2") == ("a2", "a1")
    y = ("a0", "a2")
    assert S.rule("b2") == y
    assert S.spell(report.level_axioms[-1]) == y
    assert S.spell(S.axiom) == ("e",) * 5 + ("b1",)
    # the four-letter axiom printed alongside the worked example cannot give F(0) = 6
    assert len(S.axiom) == evaluate(F, 0) == 6
    assert len("eeea") != evaluate(F, 0)
    assert all(growth_length(S, n) == (n - 2) ** 2 + 2 for n in range(31))
    assert time.perf_counter() - start < 1.0


def test_criterion_3_random_member_suite(criterion):
    criterion("3. 200 random members synthesized; matrix [0,12] and expansion [0,6] exact, < 30 s")
    start = time.perf_counter()
    failures = []
    for family, members in (("restricted", RESTRICTED), ("shifted", SHIFTED)):
        for F in members:
            report = synthesize_general(F)
            if family == "restricted":
                assert report.shift_k == 0, F
            else:
                assert report.shift_k >= 1, F
            for n_max, method in ((12, "matrix"), (6, "expand")):
                outcome = verify_growth(report.system, F, n_max, method)
                if not outcome.passed:
                    failures.append((str(F), str(outcome)))
    assert failures == []
    assert len(RESTRICTED) + len(SHIFTED) == 200
    assert time.perf_counter() - start < 30.0


def test_criterion_4_decision_procedure(criterion):
    criterion("4. decide_membership agrees with brute force on 500 random rationals, < 10 s")
    start = time.perf_counter()
    rng = random.Random(4242)
    disagreements = []
    bad_witnesses = []
    members = 0
    for _ in range(500):
        F = random_rational(rng)
        verdict = decide_membership(F)
        members += isinstance(verdict, Member)
        if isinstance(verdict, Member) != brute_force_member(F, 200):
            disagreements.append(str(F))
        if isinstance(verdict, NotMember):
            value = evaluate(F, verdict.witness_n)
            holds = {
                Reason.NON_INTEGER: value.denominator != 1,
                Reason.NON_POSITIVE: value <= 0,
                Reason.ZERO_POLYNOMIAL: F.is_zero() and verdict.witness_n == 0,
            }[verdict.reason]
            if not holds:
                bad_witnesses.append(str(F))
    assert disagreements == []
    assert bad_witnesses == []
    assert 0 < members < 500
    assert time.perf_counter() - start < 10.0


def test_criterion_5_difference_calculus(criterion):
    criterion("5. degree drop, telescoping n<=50, binomial formula i<=6 on 100 polynomials, < 5 s")
    start = time.perf_counter()
    rng = random.Random(55)
    for _ in range(100):
        F = random_rational(rng, max_degree=6)
        D = difference(F)
        if F.degree is not None and F.degree >= 1:
            assert D.degree == F.degree - 1
            assert D.leading_coefficient == F.degree * F.leading_coefficient
        else:
            assert D.is_zero()
        running = evaluate(F, 0)
        for n in range(51):
            assert running == evaluate(F, n)
            running += evaluate(D, n)
        for i in range(7):
            Di = iterated_difference(F, i)
            for n in range(11):
                assert iterated_difference_direct(F, i, n) == evaluate(Di, n)
    assert time.perf_counter() - start < 5.0


def test_criterion_6_cross_method_agreement(criterion):
    criterion("6. matrix lengths equal expansion lengths, golden and suite systems, n <= 8")
    systems = _golden_systems()
    systems += [synthesize_general(F).system for F in RESTRICTED + SHIFTED]
    mismatches = [str(o) for o in (cross_check(S, 8) for S in systems) if not o.passed]
    assert mismatches == []


def test_criterion_7_advance_axiom(criterion):
    criterion("7. advance_axiom shifts the growth table by one, golden systems, n <= 20")
    for S in _golden_systems():
        original = growth_table(S, 21).lengths
        assert growth_table(advance_axiom(S), 20).lengths == original[1:]
