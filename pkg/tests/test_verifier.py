import pytest

from zolotarev.arith import PrimePower, enumerate_primitive_roots, primes_between
from zolotarev.constructions import sigma_g_perm
from zolotarev.errors import DomainError, UnsupportedCaseError
from zolotarev.verifier import (
    CONJECTURE_MATCH,
    DISCREPANCY,
    MATCH,
    SweepRange,
    THEOREM_IDS,
    TheoremCase,
    enumerate_cases,
    make_case,
    observe,
    predict,
    summarize,
    sweep,
    verify,
)


def test_predict_examples():
    assert all(predict(make_case("lerch", n=6, a=a)) == 1 for a in (1, 5))
    assert predict(make_case("kth-power", p=13, k=5)) == 1
    assert predict(make_case("tau-star", p=7)) == -1


def test_observe_examples():
    assert observe(make_case("sigma21", p=7)) == 1
    assert observe(make_case("np-parity", p=11)) == "odd"
    assert observe(make_case("primroot-split", p=5, r=1)) == (1, 1)


def test_verify_examples():
    rec = verify(make_case("sigma40", p=11))
    assert (rec.predicted, rec.observed, rec.status) == (-1, -1, MATCH)
    assert rec.aux["h_neg_p"] == 1
    rec = verify(make_case("sigma31", p=5))
    assert (rec.predicted, rec.observed, rec.status) == (1, 1, DISCREPANCY)
    assert rec.aux["paper_printed"] == -1
    rec = verify(make_case("kohl-ii", p=7, g=3))
    assert (rec.predicted, rec.observed, rec.status) == (1, 1, MATCH)
    rec = verify(make_case("np-parity", p=11))
    assert rec.aux["N_p"] == 3 and rec.status == MATCH
    rec = verify(make_case("np-parity", p=13))
    assert rec.status == CONJECTURE_MATCH


def test_case_validation():
    with pytest.raises(UnsupportedCaseError):
        TheoremCase("nope", {"p": 7})
    with pytest.raises(UnsupportedCaseError):
        make_case("sigma21", p=7, k=2)
    with pytest.raises(UnsupportedCaseError):
        make_case("sigma21", p=7.0)
    with pytest.raises(DomainError):
        verify(make_case("sigma21", p=4))
    with pytest.raises(DomainError):
        verify(make_case("sigma40", p=13))
    with pytest.raises(DomainError):
        verify(make_case("kth-power", p=7, k=3))
    with pytest.raises(DomainError):
        verify(make_case("primroot-sign", p=7, r=1, g=2))
    with pytest.raises(DomainError):
        verify(make_case("lerch", n=6, a=3))


def test_sweep_examples():
    recs = sweep("tau-star", SweepRange(pmin=3, pmax=99))
    assert len(recs) == 24 and all(r.status == MATCH for r in recs)
    recs = sweep("np-parity", SweepRange(pmin=3, pmax=99))
    assert all(r.status == MATCH for r in recs if r.case["p"] % 4 == 3)
    assert all(r.status == CONJECTURE_MATCH for r in recs if r.case["p"] % 4 == 1)
    recs = sweep("lerch", SweepRange(pmin=1, pmax=20))
    assert recs and all(r.status == MATCH for r in recs)
    assert summarize(recs)["total"] == len(recs)


def test_every_theorem_id_sweeps_without_mismatch():
    rng = SweepRange(pmin=3, pmax=60, kmax=15, roots="all")
    for tid in THEOREM_IDS:
        recs = sweep(tid, rng)
        assert recs, tid
        assert not any(r.failed for r in recs), tid


def test_cocycle_across_records():
    rng = SweepRange(pmin=3, pmax=400)
    s21, s31, s23 = (
        {r.case["p"]: r.observed for r in sweep(t, rng)} for t in ("sigma21", "sigma31", "sigma23")
    )
    for p in s23:
        assert s23[p] == s21[p] * s31[p]


def test_kohl_agrees_with_primroot_sign_at_r1():
    for p in (q for q in primes_between(5, 600) if q % 4 == 3):
        g = enumerate_primitive_roots(PrimePower(p), limit=1)[0]
        kohl = verify(make_case("kohl-ii", p=p, g=g))
        prim = verify(make_case("primroot-sign", p=p, r=1, g=g))
        h = prim.aux["h_neg_p"]
        assert kohl.predicted == (-1) ** ((h - 1) // 2) == prim.observed
        assert prim.status == MATCH


def test_all_roots_share_one_sign():
    for p in (q for q in primes_between(3, 60) if q % 4 == 3):
        r = 1
        while p ** r < 3000:
            pp = PrimePower(p, r)
            signs = {sigma_g_perm(pp, g).sign() for g in enumerate_primitive_roots(pp)}
            assert len(signs) == 1, (p, r)
            r += 1


def test_primroot_sign_printed_form_fails_at_even_r():
    rec = verify(make_case("primroot-sign", p=7, r=2, g=3))
    assert rec.status == DISCREPANCY
    assert rec.observed == rec.predicted == -rec.aux["paper_printed"]


def test_enumerate_cases_sorted_and_bounded():
    cases = enumerate_cases("primroot-sign", SweepRange(pmin=3, pmax=30, rmax_modulus=200, roots=2))
    assert cases == sorted(cases, key=TheoremCase.sort_key)
    assert all(c["p"] ** c["r"] <= 200 for c in cases)
    assert {(c["p"], c["r"]) for c in cases} >= {(3, 4), (7, 2), (11, 2), (23, 1)}


def test_lerch_unit_sampling_is_deterministic():
    rng = SweepRange(pmin=301, pmax=305, units=5, seed=3)
    a = enumerate_cases("lerch", rng)
    assert a == enumerate_cases("lerch", rng)
    assert len(a) == 25
    assert enumerate_cases("lerch", SweepRange(pmin=301, pmax=305, units=5, seed=4)) != a


def test_sweep_independent_of_jobs():
    rng = SweepRange(pmin=3, pmax=300, kmax=20)
    assert sweep("kth-power", rng, jobs=1) == sweep("kth-power", rng, jobs=4)


def test_sweep_range_validation():
    with pytest.raises(DomainError):
        SweepRange(pmin=10, pmax=5)
    with pytest.raises(DomainError):
        SweepRange(roots=0)
