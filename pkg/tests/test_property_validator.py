import pytest

from charclass.property_validator import PropertyValidator, SuiteResult, generate_summary_report


def test_suite_result_accumulates_failures():
    result = SuiteResult("ring")
    result.check(True, lambda: "never built")
    result.check(False, lambda: "counterexample a=(1, 2)")
    assert result.checked == 2
    assert not result.passed
    assert result.failure_count == 1
    assert result.failures == ["counterexample a=(1, 2)"]
    assert "❌ FAILED" in result.summary()


def test_suite_result_caps_stored_messages():
    result = SuiteResult("bundles")
    for i in range(50):
        result.add_failure(f"failure {i}")
    assert result.failure_count == 50
    assert len(result.failures) == 20


def test_all_suites_pass(small_defaults):
    results = PropertyValidator(seed=1, defaults=small_defaults).run_all()
    assert [r.suite for r in results] == ["ring", "bundles", "stiefel", "classify"]
    for result in results:
        assert result.passed, result.failures
        assert result.checked > 0


def test_suites_pass_at_higher_cap(small_defaults):
    results = PropertyValidator(seed=2, cap=4, defaults=small_defaults).run_all()
    assert all(r.passed for r in results)


def test_samples_override(small_defaults):
    few = PropertyValidator(seed=3, samples=2, defaults=small_defaults).check_ring()
    more = PropertyValidator(seed=3, samples=4, defaults=small_defaults).check_ring()
    assert few.passed and more.passed
    assert few.checked < more.checked


def test_same_seed_same_run(small_defaults):
    a = PropertyValidator(seed=11, defaults=small_defaults).check_classify()
    b = PropertyValidator(seed=11, defaults=small_defaults).check_classify()
    assert (a.checked, a.failures) == (b.checked, b.failures)


@pytest.mark.parametrize("kwargs", [{"cap": 1}, {"samples": 0}])
def test_rejects_bad_arguments(small_defaults, kwargs):
    with pytest.raises(ValueError):
        PropertyValidator(seed=1, defaults=small_defaults, **kwargs)


def test_summary_report_echoes_failures():
    ok = SuiteResult("ring", checked=3)
    bad = SuiteResult("classify")
    bad.check(False, lambda: "p1 identity fails for n=4 k=2 l=(1, 3)")
    report = generate_summary_report([ok, bad], seed=42)
    assert "VERIFICATION SUMMARY (seed 42)" in report
    assert "✅ PASSED" in report
    assert "p1 identity fails for n=4 k=2 l=(1, 3)" in report
