import json
from fractions import Fraction

import pytest

from oracles import congruent_at_roots
from qcongruence.numtheory import legendre_euler, mod_inverse
from qcongruence.polyring import IntPoly, RatFunc, q_integer_poly
from qcongruence.quotients import eq_star_forms
from qcongruence.verifier import (
    CLAIMS,
    FAIL,
    PASS,
    PROBE_FAMILIES,
    SKIPPED,
    Congruence,
    Equality,
    _lemma_2_1,
    _lemma_2_1_half,
    _lemma_2_2_at,
    check_complement_identity,
    check_elementary_congruences,
    check_lemma_2_1,
    check_lemma_2_1_half,
    check_lemma_2_2,
    check_lemma_2_3,
    check_pan_1_4,
    check_prerequisite_ratio,
    check_q1_granville,
    check_q1_sun,
    check_theorem_1_1,
    evaluate,
    pan_1_4_sides,
    run_claim,
    run_suite,
    soundness_probe,
    suite_cases,
    summarize,
    theorem_1_1_sides,
    write_witness,
)


def without_timing(report):
    rec = report.record()
    rec.pop("elapsed_ms")
    return rec


@pytest.mark.parametrize("check,args", [
    (check_prerequisite_ratio, (5, 2)),
    (check_prerequisite_ratio, (7, 10)),
    (check_lemma_2_1_half, (5,)),
    (check_lemma_2_1_half, (13,)),
    (check_lemma_2_2, (5, 2)),
    (check_lemma_2_2, (7, 3)),
    (check_lemma_2_2, (11, 10)),
    (check_lemma_2_3, (5, 2)),
    (check_lemma_2_3, (7, 4)),
    (check_lemma_2_3, (13, 6)),
    (check_complement_identity, (5, 2)),
    (check_complement_identity, (5, 1)),
    (check_complement_identity, (11, 7)),
    (check_elementary_congruences, (5, 8)),
    (check_elementary_congruences, (7, 8)),
    (check_pan_1_4, (5, 2)),
    (check_pan_1_4, (7, 3)),
    (check_theorem_1_1, (5, 2)),
    (check_theorem_1_1, (7, 3)),
    (check_theorem_1_1, (13, 24)),
    (check_q1_sun, (5, 2)),
    (check_q1_sun, (7, 6)),
    (check_q1_sun, (11, 4)),
    (check_q1_granville, (5, 2)),
    (check_q1_granville, (7, 2)),
    (check_q1_granville, (13, 5)),
])
def test_examples_pass(check, args):
    report = check(*args)
    assert report.status == PASS, report.failed_checks
    assert report.remainder_nonzero_terms == 0


@pytest.mark.parametrize("check,args", [
    (check_prerequisite_ratio, (5, 5)),
    (check_pan_1_4, (5, 10)),
    (check_theorem_1_1, (7, 14)),
])
def test_p_divides_m_is_skipped(check, args):
    report = check(*args)
    assert report.status == SKIPPED and report.reason == "p divides m"
    assert report.record()["status"] == "SKIPPED(p divides m)"


def test_small_primes_skipped():
    assert check_theorem_1_1(3, 2).status == SKIPPED
    assert check_theorem_1_1(9, 2).reason == "p not prime"


@pytest.mark.parametrize("p", [5, 7, 13])
def test_lemma_2_1_as_printed_fails(p):
    # The sum over 1 <= j <= p-1 is not congruent to -(1+q)Q_p(2,q); the
    # half-range sum is.  Kept as a finding rather than hidden.
    report = check_lemma_2_1(p)
    assert report.status == FAIL
    assert report.remainder_nonzero_terms > 0
    lhs, rhs = _lemma_2_1(p)[0].lhs, _lemma_2_1(p)[0].rhs
    assert not congruent_at_roots(lhs, rhs, p)
    half = _lemma_2_1_half(p)[0]
    assert congruent_at_roots(half.lhs, half.rhs, p)


def test_elementary_first_family_j1():
    lhs = RatFunc(q_integer_poly(1, 5))
    assert lhs == RatFunc(1)
    assert evaluate(Congruence("j=1", lhs, RatFunc(1), q_integer_poly(5)))[0] == 0


def test_lemma_2_2_representative_independence():
    m, p = 3, 7
    mp = mod_inverse(m, p)
    for rep in (mp, mp + p, mp + 2 * p):
        n, _, _ = evaluate(_lemma_2_2_at(p, m, rep, str(rep)))
        assert n == 0


class TestEvaluate:
    def test_integer_congruence(self):
        assert evaluate(Congruence("x", 26, 1, 25))[0] == 0
        assert evaluate(Congruence("x", Fraction(1, 2), 13, 25))[0] == 0
        assert evaluate(Congruence("x", 2, 1, 25))[0] == 1

    def test_equality_of_sets_and_multisets(self):
        assert evaluate(Equality("s", {1, 2}, {2, 1}))[0] == 0
        assert evaluate(Equality("s", (1, 1, 2), (2, 1, 1)))[0] == 0
        assert evaluate(Equality("s", (1, 2), (1, 2, 2)))[0] > 0

    def test_polynomial_remainder_digest(self):
        qp = q_integer_poly(5)
        n, deg, rem = evaluate(Congruence("x", RatFunc(IntPoly([0, 1])), RatFunc(1), qp))
        assert n == 2 and rem == (-1, 1)


@pytest.mark.parametrize("claim", PROBE_FAMILIES)
def test_soundness_probe(claim):
    claim_obj = CLAIMS[claim]
    m = None if claim_obj.per_prime else 4
    plus_mod, plus_one = soundness_probe(claim, 7, m)
    assert plus_mod.status == PASS
    assert plus_one.status == FAIL


@pytest.mark.parametrize("p,m", [(5, 2), (5, 3), (7, 3), (7, 4)])
def test_metamorphic_shift(p, m):
    base = check_theorem_1_1(p, m).status
    for t in (1, 2):
        assert check_theorem_1_1(p, m + 2 * p * t).status == base == PASS


@pytest.mark.parametrize("p,m", [(5, 2), (5, 3), (7, 2), (7, 5)])
def test_theorem_sides_agree_at_roots(p, m):
    lhs, rhs = theorem_1_1_sides(p, m)
    assert congruent_at_roots(lhs, rhs, p, power=2)
    # the verdict is sharp: shifting by [p]_q keeps the mod [p]_q relation
    # but breaks the mod [p]_q^2 one
    shifted = rhs + RatFunc(q_integer_poly(p))
    assert congruent_at_roots(lhs, shifted, p, power=1)
    assert not congruent_at_roots(lhs, shifted, p, power=2)
    assert run_claim("theorem_1_1", p, m, checks=[Congruence("shift", lhs, shifted, q_integer_poly(p) ** 2)]).status == FAIL


@pytest.mark.parametrize("p,m", [(5, 2), (7, 3), (11, 4)])
def test_pan_sides_agree_at_roots(p, m):
    lhs, rhs = pan_1_4_sides(p, m)
    assert congruent_at_roots(lhs, rhs, p, power=2)


def test_eq_star_at_roots_vs_legendre():
    # (m/p) (1+q^p)/(1+q) EQ_p(m, q^2) is the first form; both agree at the roots too
    first, second = eq_star_forms(5, 3)
    assert congruent_at_roots(first, second, 5, power=2)
    assert legendre_euler(5, 3) == -1


class TestSuite:
    def test_single_case(self):
        reports = run_suite({(5, 2)}, {"theorem_1_1"})
        assert [(r.claim_id, r.p, r.m, r.status) for r in reports] == [("theorem_1_1", 5, 2, PASS)]

    def test_empty_grid(self):
        assert run_suite(set(), {"theorem_1_1"}) == []

    def test_p_divides_m_in_grid(self):
        reports = run_suite({(5, 5), (5, 2)}, {"pan_1_4"})
        assert [r.status for r in reports] == [PASS, SKIPPED]

    def test_canonical_order_and_per_prime_dedup(self):
        cases = suite_cases({(7, 3), (5, 2), (5, 3)}, ["lemma_2_1_half", "lemma_2_2"])
        assert cases == [("lemma_2_1_half", 5, None), ("lemma_2_1_half", 7, None),
                         ("lemma_2_2", 5, 2), ("lemma_2_2", 5, 3), ("lemma_2_2", 7, 3)]
        with pytest.raises(KeyError):
            suite_cases({(5, 2)}, ["nope"])

    def test_deterministic_across_workers(self):
        grid = {(p, m) for p in (5, 7) for m in range(2, 9)}
        claims = ["theorem_1_1", "lemma_2_1", "lemma_2_3"]
        serial = run_suite(grid, claims, jobs=1)
        parallel = run_suite(grid, claims, jobs=2)
        again = run_suite(grid, claims, jobs=1)
        assert serial == parallel == again
        dumps = [json.dumps(without_timing(r)) for r in serial]
        assert dumps == [json.dumps(without_timing(r)) for r in parallel]

    def test_summarize(self):
        reports = run_suite({(5, 2), (5, 5)}, ["theorem_1_1", "lemma_2_1"])
        counts = summarize(reports)
        assert counts["theorem_1_1"][PASS] == 1 and counts["theorem_1_1"][SKIPPED] == 1
        assert counts["lemma_2_1"][FAIL] == 1

    def test_record_field_order(self):
        rec = check_theorem_1_1(5, 2).record()
        assert list(rec) == ["claim", "p", "m", "status", "remainder_nonzero_terms",
                             "max_degree_seen", "elapsed_ms"]


def test_witness_file(tmp_path):
    report = check_lemma_2_1(5)
    path = write_witness(report, tmp_path)
    assert path.name == "lemma_2_1_p5_mnone.txt"
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# claim: lemma_2_1"
    assert lines[1] == "# p: 5" and lines[2] == "# m: none"
    assert lines[3].startswith("# failed: ")
    coeffs = [int(x) for x in lines[4:]]
    assert coeffs and coeffs[-1] != 0
    assert len(coeffs) <= 4  # remainder mod [5]_q has degree < 4
    assert sum(c != 0 for c in coeffs) == report.remainder_nonzero_terms


def test_run_suite_writes_witnesses(tmp_path):
    run_suite({(5, 2)}, ["lemma_2_1", "theorem_1_1"], witness_dir=tmp_path)
    assert sorted(p.name for p in tmp_path.iterdir()) == ["lemma_2_1_p5_mnone.txt"]


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_full_range_sum_collapses(p):
    # pairing j with p - j: 1/[p-j]_{q^2} == -q^{2j}/[j]_{q^2}, so the full sum
    # is (p-1)/2 (1 - q^2) mod [p]_q, which explains the lemma_2_1 failure
    lhs = _lemma_2_1(p)[0].lhs
    expected = RatFunc(IntPoly([(p - 1) // 2, 0, -(p - 1) // 2]))
    assert evaluate(Congruence("collapse", lhs, expected, q_integer_poly(p)))[0] == 0
