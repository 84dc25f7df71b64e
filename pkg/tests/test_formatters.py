from charclass.bundle_algebra import BundleExpr
from charclass.formatters import (
    format_bool,
    format_bundle,
    format_report_text,
    format_series,
    format_span_cases,
    format_weights,
)
from charclass.classifier import classify
from charclass.report_builder import ReportDocument
from charclass.series_ring import TruncSeries, TruncSeriesMod2
from charclass.stiefel_manifold import validate


def test_format_series():
    assert format_series(TruncSeries((1, -15, 100))) == "1 - 15c + 100c^2"
    assert format_series(TruncSeries((0, 0, 0))) == "0"
    assert format_series(TruncSeries((-1, 1, -1))) == "-1 + c - c^2"
    assert format_series(TruncSeriesMod2((1, 0, 1)), variable="w") == "1 + w^2"


def test_format_bundle():
    e = BundleExpr.line(-1, 5) + BundleExpr.trivial(complex_rank=2, real_rank=3)
    assert format_bundle(e) == "5ξ^-1 ⊕ 2ε_ℂ ⊕ 3ε_ℝ"
    assert format_bundle(BundleExpr.line(1) - BundleExpr.line(2, 4)) == "ξ^1 ⊖ 4ξ^2"
    assert format_bundle(BundleExpr.zero()) == "0"


def test_small_formatters():
    assert format_weights((1, -2, 3)) == "1,-2,3"
    assert format_span_cases({3, 1}) == "1,3"
    assert format_span_cases(set()) == ""
    assert format_bool(True) == "yes"


def test_report_text(w5_12):
    doc = ReportDocument.from_classification(classify(w5_12, explain=True), include_derivation=True)
    text = format_report_text(doc)
    assert "W(5,2;1,2)" in text
    assert "p1 coefficient:          24" in text
    assert "span = stable span:      unknown" in text
    assert "derivation:" not in text

    explained = format_report_text(doc, explain=True)
    assert "derivation:" in explained
    assert "1 - 15c + 100c^2" in explained
