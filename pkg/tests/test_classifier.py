import pytest

from charclass.classifier import (
    CAVEAT_NOT_APPLICABLE,
    CAVEAT_SPAN_UNKNOWN,
    CAVEAT_SPAN_VERBATIM,
    classify,
    classify_grid,
    derive_tangent_classes,
    is_parallelizable,
    is_stably_parallelizable,
    p1_closed_form,
    p1_coefficient,
    p1_from_bundles,
    p1_intermediate_form,
    span_cases,
    w2_closed_form,
    w2_coefficient,
    w2_from_bundles,
    w2_intermediate_form,
    w2_parity_condition,
    w2_possibly_nonzero,
)
from charclass.stiefel_manifold import StiefelParams, iter_canonical_params, validate


@pytest.mark.parametrize("n, k, parallelizable, stably", [
    (2, 1, False, True),
    (2, 2, True, True),
    (3, 1, False, False),
    (3, 2, True, True),
    (3, 3, True, True),
    (6, 3, False, False),
    (6, 5, True, True),
])
def test_parallelizability_table(n, k, parallelizable, stably):
    p = validate(n, k, (1,) * k)
    assert is_parallelizable(p) == parallelizable
    assert is_stably_parallelizable(p) == stably


def test_p1_running_example(w5_12):
    assert p1_closed_form(w5_12) == 24
    assert p1_intermediate_form(w5_12) == 24
    assert p1_from_bundles(w5_12) == 24
    assert p1_coefficient(w5_12) == 24


def test_p1_is_sign_sensitive():
    assert p1_coefficient(validate(5, 2, (1, -2))) == 16


@pytest.mark.parametrize("n", range(2, 9))
def test_p1_of_complex_projective_space(n):
    assert p1_coefficient(validate(n, 1, (1,))) == n


@pytest.mark.parametrize("n, k, l", [
    (7, 3, (2, -5, 11)),
    (9, 4, (0, 3, -3, 8)),
    (12, 8, (1, 2, 3, 4, 5, 6, 7, 50)),
])
def test_p1_and_w2_forms_agree(n, k, l):
    p = StiefelParams(n, k, l)
    assert p1_closed_form(p) == p1_intermediate_form(p) == p1_from_bundles(p)
    assert w2_closed_form(p) == w2_intermediate_form(p) == w2_from_bundles(p)


def test_w2_examples(w5_12):
    assert w2_coefficient(w5_12) == 0
    assert w2_coefficient(validate(3, 1, (1,))) == 1
    assert w2_possibly_nonzero(validate(3, 1, (1,)))
    # odd coefficient but k >= n-1: no conclusion
    assert w2_coefficient(validate(3, 3, (1, 1, 1))) == 1
    assert not w2_possibly_nonzero(validate(3, 3, (1, 1, 1)))


@pytest.mark.parametrize("n, k, l, expected", [
    (5, 3, (1, 1, 1), True),
    (5, 3, (1, 1, 2), False),
    (6, 4, (1, 1, 1, 2), True),
    (6, 4, (1, 1, 1, 1), False),
    (6, 3, (1, 1, 1), False),
])
def test_w2_parity_condition(n, k, l, expected):
    p = validate(n, k, l)
    assert w2_parity_condition(p) == expected
    assert w2_possibly_nonzero(p) == expected


@pytest.mark.parametrize("n, k, l, expected", [
    (4, 1, (1,), set()),
    (5, 3, (1, 1, 1), {1}),
    (8, 6, (1, 1, 1, 1, 1, 1), {3}),
    (8, 6, (1, 1, 1, 1, 1, 2), set()),
    (9, 6, (1, 1, 1, 1, 1, 2), {2}),
    (8, 2, (1, 2), set()),
    (12, 10, (1,) * 10, {3}),
    (12, 4, (1, 1, 1, 1), set()),
])
def test_span_cases(n, k, l, expected):
    assert span_cases(validate(n, k, l)) == expected


def test_derive_tangent_classes_trace(w5_12):
    report, steps = derive_tangent_classes(w5_12)
    assert len(steps) == 6
    assert steps[0].total_class == "c = 1 - 15c + 100c^2"
    assert report.pontrjagin_class(1) == 24
    assert "p = 1 + 24c^2" == steps[4].total_class


def test_derive_tangent_classes_higher_cap():
    # CP^2: p = (1 + c^2)^3 formally
    report, _ = derive_tangent_classes(validate(3, 1, (1,)), cap=4)
    assert report.total_pontrjagin.coeffs == (1, 0, 3, 0, 3)


def test_classify_running_example(w5_12):
    c = classify(w5_12)
    assert c.dimension == 15
    assert not c.parallelizable and not c.stably_parallelizable
    assert c.p1_coefficient == 24
    assert c.w2_coefficient == 0
    assert not c.w2_possibly_nonzero
    assert c.cohomology_applicable
    assert c.orientable and c.odd_sw_vanish
    assert c.span_cases == frozenset()
    assert c.caveats == (CAVEAT_SPAN_UNKNOWN,)
    assert c.derivation == ()
    assert c.invariant_violations() == []


def test_classify_sphere():
    c = classify(validate(2, 1, (1,)))
    assert c.dimension == 2
    assert c.stably_parallelizable and not c.parallelizable
    assert CAVEAT_NOT_APPLICABLE in c.caveats


def test_classify_span_verbatim_caveat():
    c = classify(validate(3, 3, (1, 1, 1)))
    assert c.span_cases == {1}
    assert CAVEAT_SPAN_VERBATIM in c.caveats
    assert CAVEAT_NOT_APPLICABLE in c.caveats


def test_classify_explain_attaches_trace(w5_12):
    assert len(classify(w5_12, explain=True).derivation) == 6


def test_classify_rejects_small_cap(w5_12):
    with pytest.raises(ValueError):
        classify(w5_12, cap=1)


def test_classification_symmetric_in_weights():
    a = classify(validate(7, 3, (1, 2, 3)))
    b = classify(validate(7, 3, (3, 1, 2)))
    assert (a.p1_coefficient, a.w2_coefficient, a.span_cases) == (
        b.p1_coefficient, b.w2_coefficient, b.span_cases
    )
    assert a.tangent_pontrjagin == b.tangent_pontrjagin


def test_grid_matches_parallelizability_table():
    for c in classify_grid(iter_canonical_params(6, 2)):
        p = c.params
        assert c.stably_parallelizable == (p.k >= p.n - 1)
        if p.k <= p.n - 2:
            assert not c.stably_parallelizable
            assert c.p1_coefficient > 0
        assert c.invariant_violations() == []


def test_classify_grid_preserves_order():
    params = list(iter_canonical_params(4, 2))
    results = classify_grid(params)
    assert [c.params for c in results] == params


def test_classify_grid_with_process_pool():
    params = list(iter_canonical_params(4, 1))
    assert classify_grid(params, workers=2) == classify_grid(params, workers=1)


@pytest.mark.parametrize("n, k, l, expected", [
    (7, 3, (1, 2, 3), {1}),
    (7, 6, (1, 1, 1, 1, 1, 2), {2}),
    (8, 6, (1, 2, 3, 4, 5, 7), {3}),
])
def test_span_case_examples(n, k, l, expected):
    assert span_cases(validate(n, k, l)) == expected


def test_parallelizable_with_mixed_weights():
    c = classify(validate(4, 3, (2, 3, 5)))
    assert c.parallelizable and c.stably_parallelizable


@pytest.mark.parametrize("n, k", [(4, 1), (5, 2), (7, 3), (9, 6)])
def test_p1_of_projective_stiefel_is_nk(n, k):
    assert p1_coefficient(validate(n, k, (1,) * k)) == n * k


def test_w2_nonzero_for_even_n_k_odd_r():
    p = validate(6, 2, (1, 2))
    assert w2_coefficient(p) == 1
    assert w2_possibly_nonzero(p)


def test_bundle_path_reads_supplied_report(w5_12):
    report, _ = derive_tangent_classes(validate(3, 1, (1,)))
    # the report wins over re-solving for the given parameters
    assert p1_from_bundles(w5_12, report=report) == 3
    assert w2_from_bundles(w5_12, report=report) == 1


def test_classify_solves_tangent_equation_once(w5_12, monkeypatch):
    import charclass.classifier as classifier_module

    calls = []
    real_solve = classifier_module.solve_stable

    def counting_solve(*args, **kwargs):
        calls.append(args)
        return real_solve(*args, **kwargs)

    monkeypatch.setattr(classifier_module, "solve_stable", counting_solve)
    assert classify(w5_12).p1_coefficient == 24
    assert len(calls) == 1
