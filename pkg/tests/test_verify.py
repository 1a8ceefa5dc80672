import json
from fractions import Fraction

import pytest

from centralbell.moments import parse_rv, standard_models
from centralbell.verify import CATALOG, IDENTITY_IDS, Fault, verify_all, verify_identity
from centralbell.verify.catalog import ERROR, FAIL, PASS

MODEL_FREE = [e.identity_id for e in CATALOG if not e.needs_model]
GENERIC = [e.identity_id for e in CATALOG if e.needs_model and e.model_kind is None]


def test_catalog_is_complete_and_unique():
    expected = {
        "E2_CF_GF", "E3_DEF_T", "E4_T_GF", "E7_CB_EXPL", "E8_STIR", "E12_PB1", "E14_CB_SUM",
        "E15_CB_X", "E16_PSTIR", "E18_PBELL_GF", "E41_PB_T", "E43_POIS_MGF", "POISSON_T215",
        "BERNOULLI_PK",
    } | {f"T2_{i}" for i in range(1, 15)}
    assert len(IDENTITY_IDS) == len(set(IDENTITY_IDS))
    assert set(IDENTITY_IDS) == expected


def test_examples():
    assert verify_identity("T2_1", parse_rv("constant:1"), 10).status == PASS
    assert verify_identity("E12_PB1", None, 10).status == PASS
    report = verify_identity("T2_8", parse_rv("poisson:2"), 8, Fault(3, 1))
    assert report.status == FAIL
    assert report.first_mismatch is not None
    assert report.first_mismatch.lhs != report.first_mismatch.rhs


@pytest.mark.parametrize("identity_id", MODEL_FREE)
def test_model_free_entries(identity_id):
    report = verify_identity(identity_id, parse_rv("poisson:2"), 8)
    assert report.passed and report.model == "n/a" and report.first_mismatch is None


@pytest.mark.parametrize("spec", ["poisson:1/2", "discrete:-1=1/4,3=3/4", "raw:1,0,2,-1,3,1,1,2",
                                  "constant:-1/3"])
def test_generic_entries_on_other_models(spec):
    for report in verify_all([parse_rv(spec)], 8):
        assert report.passed, report.to_json()


def test_model_requirements():
    with pytest.raises(ValueError):
        verify_identity("BERNOULLI_PK", parse_rv("poisson:2"), 4)
    with pytest.raises(ValueError):
        verify_identity("POISSON_T215", parse_rv("constant:1"), 4)
    with pytest.raises(ValueError):
        verify_identity("T2_1", None, 4)
    with pytest.raises(KeyError):
        verify_identity("T9_9", None, 4)


def test_verify_all_without_models_runs_only_model_free():
    reports = verify_all([], 10)
    assert [r.identity_id for r in reports] == MODEL_FREE
    assert all(r.passed for r in reports)


def test_raw_model_beyond_capability():
    reports = verify_all([parse_rv("raw:1,2,3,4")], 10)
    by_id = {r.identity_id: r for r in reports}
    for i in MODEL_FREE:
        assert by_id[i].status == PASS
    for i in GENERIC:
        assert by_id[i].status == ERROR
        assert "order" in by_id[i].error
        assert by_id[i].first_mismatch is None
    assert all(r.status == PASS for r in verify_all([parse_rv("raw:1,2,3,4")], 4))


def test_status_matches_mismatch_presence():
    for r in verify_all(standard_models(), 6, Fault(5, 3)):
        if r.status == PASS:
            assert r.first_mismatch is None
        elif r.status == FAIL:
            assert r.first_mismatch is not None


def test_reports_are_deterministic_and_model_order_independent():
    models = standard_models()
    a = verify_all(models, 6)
    b = verify_all(list(reversed(models)), 6)
    assert [r.to_json() for r in a] == [r.to_json() for r in verify_all(models, 6)]
    key = lambda r: (r.identity_id, r.model)
    assert sorted(map(key, a)) == sorted(map(key, b))
    assert {key(r): r.status for r in a} == {key(r): r.status for r in b}


def test_report_json_shape():
    r = verify_identity("T2_8", parse_rv("poisson:2"), 8, Fault(3, 1))
    d = json.loads(r.to_json())
    assert set(d) == {"id", "model", "order", "status", "mismatch"}
    assert d["status"] == "fail" and d["model"] == "poisson:2" and d["order"] == 8
    assert d["mismatch"]["n"] == 3
    assert isinstance(d["mismatch"]["lhs"], list)
    ok = json.loads(verify_identity("E8_STIR", None, 3).to_json())
    assert ok["mismatch"] is None and ok["status"] == "pass"


def test_classical_fault_is_detected():
    reports = verify_all([], 6, Fault(4, 2, target="T"))
    failed = [r for r in reports if r.status == FAIL]
    assert failed and all(r.first_mismatch is not None for r in failed)


def test_fault_validation():
    with pytest.raises(ValueError):
        Fault(2, 3)
    with pytest.raises(ValueError):
        Fault(2, 1, target="nope")


def test_bernoulli_identity_with_other_parameters():
    for p in ("0", "1", "2/7"):
        assert verify_identity("BERNOULLI_PK", parse_rv(f"bernoulli:{p}"), 10).passed
