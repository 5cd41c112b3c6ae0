"""Family catalog: predictions, verification reports, attainment tracking."""

import pytest

from optbch.analysis import min_distance
from optbch.families import (
    CATALOG_NOTES,
    FamilyKind,
    FamilySpec,
    MATCH,
    MEASURED,
    NoPrediction,
    UNVERIFIED,
    build_code,
    conjecture_status,
    predict,
    verify_instance,
)

T1, T2, T3, GL = (
    FamilyKind.TYPE1,
    FamilyKind.TYPE2,
    FamilyKind.TYPE3,
    FamilyKind.GENERAL_LAMBDA,
)


@pytest.mark.parametrize("s", range(2, 31))
def test_length_identities(s):
    assert FamilySpec(T1, s).n == ((1 << 4 * s) - 1) // ((1 << s) + 1)
    assert FamilySpec(T2, s).n == ((1 << 3 * s) - 1) // ((1 << s) - 1)


def test_lengths_small():
    assert FamilySpec(T1, 2).n == 51
    assert FamilySpec(T1, 3).n == 455
    assert FamilySpec(T2, 2).n == 21
    assert FamilySpec(T2, 3).n == 73
    assert FamilySpec(T3, 3).n == 21
    assert FamilySpec(T3, 4).n == 85
    assert FamilySpec(GL, 5, delta=4, b=0).n == 31


def test_lambda_divisibility_validated():
    with pytest.raises(ValueError):
        FamilySpec(GL, 5, delta=4, b=0, lam=3)  # 3 does not divide 31
    FamilySpec(GL, 6, delta=4, b=0, lam=3)


def test_predict_type1_s3():
    p = predict(FamilySpec(T1, 3))
    assert (p.n, p.k, p.d_lower, p.d_upper) == (455, 443, 3, 3)
    assert p.dual_k == 12
    assert p.dual_enumerator == {0: 1, 224: 3640, 256: 455}
    assert p.extended_params == (456, 443, 4) and p.extended_optimal


def test_predict_type1_s2_extended_dual():
    p = predict(FamilySpec(T1, 2))
    assert p.extended_dual_enumerator == {0: 1, 20: 51, 24: 204, 28: 204, 32: 51, 52: 1}
    assert p.extended_dual_k == 9


def test_predict_type3_s4():
    p = predict(FamilySpec(T3, 4))
    assert (p.n, p.k) == (85, 77)
    assert p.dual_enumerator == {0: 1, 40: 170, 48: 85}
    assert p.extended_dual_enumerator == {0: 1, 38: 85, 40: 170, 46: 170, 48: 85, 86: 1}


def test_predict_type2_s3():
    p = predict(FamilySpec(T2, 3))
    assert (p.n, p.k, p.d_lower, p.d_upper) == (73, 64, 3, 4)
    assert p.extended_params == (74, 64, 4) and p.extended_optimal


def test_predict_refuses_outside_range():
    assert isinstance(predict(FamilySpec(T1, 1)), NoPrediction)
    assert isinstance(predict(FamilySpec(T3, 3)), NoPrediction)
    assert isinstance(predict(FamilySpec(T1, 7, delta=6, b=0)), NoPrediction)
    assert isinstance(predict(FamilySpec(GL, 3, delta=6, b=0)), NoPrediction)
    assert isinstance(predict(FamilySpec(T2, 2, delta=5)), NoPrediction)


def test_predict_lambda_family_at_threshold():
    p = predict(FamilySpec(GL, 5, delta=4, b=0))  # threshold max(s1,s2) = 5 for l=2
    assert (p.n, p.k, p.d_lower) == (31, 25, 4)
    assert p.base_optimal
    assert isinstance(predict(FamilySpec(GL, 4, delta=4, b=0)), NoPrediction)


def test_verify_instance_type1_s2_all_match():
    report = verify_instance(FamilySpec(T1, 2))
    assert report.prediction_available and report.all_match
    statuses = {i.name: i.status for i in report.items}
    assert statuses == {
        "dimension": MATCH,
        "distance": MATCH,
        "dual_enumerator": MATCH,
        "extended_parameters": MATCH,
        "extended_dual_enumerator": MATCH,
        "trace_representation": MATCH,
        "pless_a3": MATCH,
        "extended_optimal": MATCH,
    }
    assert report.extended_certificate.optimal


def test_verify_instance_type3_s3_variant51_outside_range():
    report = verify_instance(FamilySpec(T3, 3, delta=5))
    assert not report.prediction_available
    assert "outside claimed range" in report.prediction_note
    by_name = {i.name: i for i in report.items}
    assert by_name["dimension"].measured == "12"
    assert by_name["distance"].measured == "5"
    assert by_name["dimension"].status == MEASURED


def test_verify_instance_type2_s3():
    report = verify_instance(FamilySpec(T2, 3))
    assert report.all_match
    by_name = {i.name: i for i in report.items}
    assert by_name["distance"].measured == "3"
    assert by_name["extended_parameters"].status == MATCH
    assert report.extended_certificate.optimal


def test_verify_instance_type1_s8_structural():
    report = verify_instance(FamilySpec(T1, 8, delta=6, b=0))
    by_name = {i.name: i for i in report.items}
    assert by_name["dimension"].status == MATCH
    assert by_name["distance"].status == MATCH and by_name["distance"].measured == "6"
    assert by_name["base_optimal"].status == MATCH
    assert report.certificate.optimal
    # distance came from the bound pincer, not enumeration
    assert report.certificate.d_lower_source == "bch_bound"
    assert report.certificate.d_upper_source == "sphere_packing"


def test_verify_instance_type1_s4_dual_beyond_cap():
    report = verify_instance(FamilySpec(T1, 4, delta=5))  # dual dimension 32
    by_name = {i.name: i for i in report.items}
    assert by_name["distance"].status == MATCH  # bracket [5,6] confirmed
    assert by_name["extended_parameters"].status == MATCH
    assert by_name["extended_optimal"].status == MATCH


def test_conjecture_status_examples():
    c = conjecture_status(FamilySpec(T1, 3, delta=5), cap=12)
    assert c.delta_divides_n and c.status == "proven_by_divisibility"
    c = conjecture_status(FamilySpec(T2, 2, delta=3))
    assert c.delta_divides_n and c.status == "proven_by_divisibility"
    assert c.measured_distance == 3
    c = conjecture_status(FamilySpec(T1, 2, delta=5))
    assert not c.delta_divides_n
    assert c.status == "confirmed_computationally" and c.measured_distance == 5


def test_gcd_criterion_measured_at_455():
    # designed distance 5 divides n = 455: the measured distance must equal 5
    code = build_code(FamilySpec(T1, 3, delta=5))
    d = min_distance(code, workers=2)
    assert d.exact and d.value == 5


def test_dual_weight_count_identity():
    for s in (2, 3, 4, 5):
        p = predict(FamilySpec(T1, s)) if s >= 2 else None
        n = FamilySpec(T1, s).n
        assert 1 + ((1 << 4 * s) - 1 - n) + n == 1 << 4 * s
        if p and p.dual_enumerator:
            assert sum(p.dual_enumerator.values()) == 1 << 4 * s


def test_catalog_notes_present():
    assert FamilyKind.GENERAL_LAMBDA in CATALOG_NOTES
    p = predict(FamilySpec(GL, 6, delta=6, b=0))
    if not isinstance(p, NoPrediction):
        assert p.notes
