from fractions import Fraction

import pytest

from symcontain.core import InvalidInputError, binomial
from symcontain.points import (
    FermatRecord,
    HypothesisError,
    NoThresholdError,
    certify_demailly_general_points,
    containment_inequality,
    containment_threshold,
    demailly_from_containment,
    fermat_checks,
    guaranteed_k,
    hypothesis_base,
    lemma24_check,
    lemma24_sweep,
    trung_valla_w,
)


def test_lemma24_examples():
    assert lemma24_check(3, 1, 4) is True  # 165 >= 125
    assert lemma24_check(3, 1, 3) is False  # 56 < 64
    assert lemma24_check(3, 2, 6) is True  # k = 2m+2 boundary


def test_lemma24_guaranteed_region():
    for n_dim in range(3, 7):
        for m in range(1, 6):
            for k in range(2 * m + 2, 2 * m + 15):
                assert lemma24_check(n_dim, m, k)


def test_lemma24_improved_bounds():
    assert lemma24_check(4, 3, 6)  # N >= 4, m >= 3: k = 2m
    assert lemma24_check(5, 2, 4)  # N >= 5, m >= 2: k = 2m
    assert lemma24_check(4, 1, 3)  # N >= 4: k = 2m+1


def test_lemma24_sweep_examples():
    report = lemma24_sweep([3], [1], k_extra_max=10)
    assert report.passed
    row = report.rows[0]
    assert row.observed_min_k == 4 == row.guaranteed_k
    report = lemma24_sweep(range(3, 7), range(1, 6), k_extra_max=12)
    assert report.passed


def test_trung_valla_examples():
    assert trung_valla_w(3, 1, 64) == 6
    assert trung_valla_w(3, 1, 2) == 1
    # least w with 400 < C(4+w, 4): C(11,4)=330 <= 400 < C(12,4)=495
    assert binomial(11, 4) == 330 and binomial(12, 4) == 495
    assert trung_valla_w(4, 2, 81) == 8


def test_trung_valla_monotone():
    for n_dim in (3, 4):
        values_s = [trung_valla_w(n_dim, 2, s) for s in range(2, 200)]
        assert values_s == sorted(values_s)
        values_m = [trung_valla_w(n_dim, m, 100) for m in range(1, 12)]
        assert values_m == sorted(values_m)


def test_trung_valla_invalid():
    with pytest.raises(InvalidInputError):
        trung_valla_w(3, 1, 1)


def test_containment_threshold_desk_example():
    result = containment_threshold(3, 1, 64)
    assert result.k == 4
    assert result.reg_bound == 7
    assert result.r_threshold == 3
    assert result.hypothesis_met
    assert all(t.holds for t in result.trace)
    # minimality: the inequality fails at r = 2 (16 < 18) and holds at 3
    assert containment_inequality(3, 1, 4, 7, 2) == (16, 18)
    lhs, rhs = containment_inequality(3, 1, 4, 7, 3)
    assert lhs >= rhs
    # and keeps holding beyond the threshold
    for r in range(3, 50):
        lhs, rhs = containment_inequality(3, 1, 4, 7, r)
        assert lhs >= rhs


def test_containment_threshold_pipeline_case():
    result = containment_threshold(3, 2, 8 ** 3)
    assert result.k == 8
    reg = 2 + trung_valla_w(3, 2, 512)
    assert result.reg_bound == reg
    slope = 8 * 4 - (reg + 2)
    assert result.r_threshold == max(1, -(-(8 * 2) // slope))


def test_containment_threshold_small_s_flagged():
    result = containment_threshold(3, 1, 30)
    assert not result.hypothesis_met


def test_containment_threshold_no_slope():
    with pytest.raises(NoThresholdError):
        containment_threshold(3, 3, 2)


def test_hypothesis_base():
    assert hypothesis_base(3, 1) == 4
    assert hypothesis_base(4, 1) == 3
    assert hypothesis_base(4, 3) == 6
    assert hypothesis_base(5, 2) == 4
    assert guaranteed_k(3, 1) == 4


def test_certify_granted_desk_example():
    cert = certify_demailly_general_points(3, 1, 64)
    assert cert.granted
    assert (cert.k, cert.w, cert.r_threshold) == (4, 6, 3)
    assert cert.reg_bound == 7
    assert cert.lemma24_ok
    assert cert.demailly_rhs == Fraction(4 * 1 + 2, 3)
    assert all(t.holds for t in cert.inequality_trace)


def test_certify_refused_below_gate():
    with pytest.raises(HypothesisError, match="64"):
        certify_demailly_general_points(3, 1, 63)


def test_certify_relaxed_gate():
    cert = certify_demailly_general_points(4, 3, 6 ** 4)
    assert cert.granted
    with pytest.raises(HypothesisError):
        certify_demailly_general_points(4, 3, 6 ** 4 - 1)


def test_certify_deterministic():
    a = certify_demailly_general_points(3, 2, 8 ** 3)
    b = certify_demailly_general_points(3, 2, 8 ** 3)
    assert a == b
    assert a.to_dict() == b.to_dict()


def test_demailly_from_containment():
    assert demailly_from_containment(3, 1, 4) == Fraction(6, 3)


def test_fermat_record():
    record = FermatRecord(n=3)
    assert record.big_height == 2
    assert record.waldschmidt == 3
    assert record.alpha_triple_power(2) == 18
    assert record.omega_multiple_power(2) == 8
    with pytest.raises(InvalidInputError):
        FermatRecord(n=2)


def test_fermat_checks_examples():
    report = fermat_checks(3, 1)
    row = report.rows[0]
    assert (row.display_lhs, row.display_rhs) == (36, 39)
    assert row.display_fails
    assert row.demailly_triple_ok  # 3 >= 10/4
    assert report.passed
    for n in (3, 4, 5):
        assert fermat_checks(n, 10).passed
