import json

import pytest

from charclass.classifier import classify
from charclass.report_builder import ReportDocument, error_document
from charclass.stiefel_manifold import validate


def test_report_fields(w5_12):
    doc = ReportDocument.from_classification(classify(w5_12))
    assert doc.schema_version == "1"
    assert (doc.n, doc.k, doc.l) == (5, 2, [1, 2])
    assert doc.dimension == 15
    assert doc.p1_coefficient == 24
    assert doc.w2_coefficient == 0
    assert doc.tangent_pontrjagin == "1 + 24c^2"
    assert doc.tangent_sw == "1"
    assert doc.derivation is None


def test_json_is_deterministic_and_sorted(w5_12):
    doc = ReportDocument.from_classification(classify(w5_12))
    text = doc.to_json()
    assert text == ReportDocument.from_classification(classify(w5_12)).to_json()
    keys = list(json.loads(text).keys())
    assert keys == sorted(keys)
    assert "derivation" not in keys
    assert "caveats" in keys


def test_json_round_trip():
    c = classify(validate(3, 3, (1, 1, 1)), explain=True)
    for include in (False, True):
        doc = ReportDocument.from_classification(c, include_derivation=include)
        assert ReportDocument.from_json(doc.to_json()) == doc


def test_sphere_report():
    data = json.loads(ReportDocument.from_classification(classify(validate(2, 1, (1,)))).to_json())
    assert data["stably_parallelizable"] is True
    assert data["parallelizable"] is False


def test_derivation_embedded_on_request(w5_12):
    doc = ReportDocument.from_classification(classify(w5_12, explain=True), include_derivation=True)
    assert len(doc.derivation) == 6
    assert set(doc.derivation[0]) == {"rule", "bundle", "total_class"}


def test_from_dict_requires_fields():
    with pytest.raises(ValueError, match="p1_coefficient"):
        ReportDocument.from_dict({"schema_version": "1", "n": 2})


def test_error_document():
    data = json.loads(error_document("not a manifold: gcd(l) = 2", "not_a_manifold"))
    assert data == {
        "schema_version": "1",
        "error": "not_a_manifold",
        "condition": "not a manifold: gcd(l) = 2",
    }
