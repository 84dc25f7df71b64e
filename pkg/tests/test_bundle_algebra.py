import pytest

from charclass.bundle_algebra import (
    REAL_ISOMORPHISM_CAVEAT,
    BundleExpr,
    NotComplexError,
    characteristic_classes,
    solve_stable,
    tensor,
    tensor_lines,
    total_chern,
    total_pontrjagin,
    total_sw,
)
from charclass.series_ring import TruncSeries, mul


def test_normalization_merges_and_folds_trivial_line():
    e = BundleExpr(((2, 1), (0, 3), (2, -1), (-1, 2)))
    assert e.line_terms == ((-1, 2),)
    assert e.trivial_complex == 3
    assert e.complex_rank == 5
    assert e.real_rank == 10


def test_ranks_with_trivial_real():
    e = BundleExpr.line(1, 2) + BundleExpr.trivial(complex_rank=1, real_rank=3)
    assert e.complex_rank == 3
    assert e.real_rank == 9
    assert not e.is_complex


def test_arithmetic():
    a = BundleExpr.line(1) + BundleExpr.line(2)
    assert a - BundleExpr.line(2) == BundleExpr.line(1)
    assert 3 * BundleExpr.line(1) == BundleExpr.line(1, 3)
    assert -BundleExpr.line(1) == BundleExpr.line(1, -1)
    assert (a - a) == BundleExpr.zero()


def test_str_renders_direct_sum():
    e = BundleExpr.line(-1, 5) + BundleExpr.trivial(real_rank=3)
    assert str(e) == "5ξ^-1 ⊕ 3ε_ℝ"
    assert str(BundleExpr.line(2, -1)) == "⊖ ξ^2"


def test_tensor_lines():
    assert tensor_lines(-2, 3) == BundleExpr.line(1)
    assert tensor_lines(3, -3) == BundleExpr.trivial(complex_rank=1)


def test_tensor_distributes():
    e = tensor(BundleExpr.line(1) + BundleExpr.trivial(complex_rank=1), BundleExpr.line(2))
    assert e == BundleExpr.line(3) + BundleExpr.line(2)


def test_tensor_rejects_real_summands():
    with pytest.raises(NotComplexError):
        tensor(BundleExpr.trivial(real_rank=1), BundleExpr.line(1))


def test_total_chern_of_tangent_right_hand_side():
    # (1 - c)^5 (1 - 2c)^5 = 1 - 15c + 100c^2
    rhs = BundleExpr.line(-1, 5) + BundleExpr.line(-2, 5)
    assert total_chern(rhs).coeffs == (1, -15, 100)


def test_total_chern_rejects_real_summands():
    with pytest.raises(NotComplexError):
        total_chern(BundleExpr.trivial(real_rank=2))


def test_dual_line_is_linear_not_geometric():
    assert total_chern(BundleExpr.line(-3)).coeffs == (1, -3, 0)
    # the virtual negative of xi^3 has the geometric series as its class
    assert total_chern(-BundleExpr.line(3)).coeffs == (1, -3, 9)


def test_dual_rule_conjugates_chern_class():
    e = BundleExpr.line(2, 3) + BundleExpr.line(-1, -2)
    assert total_chern(e.dual(), cap=4) == total_chern(e, cap=4).conjugate()


def test_whitney_product():
    e1 = BundleExpr.line(1, 2) + BundleExpr.line(-3)
    e2 = BundleExpr.line(4, -1) + BundleExpr.trivial(complex_rank=2)
    assert total_chern(e1 + e2, cap=4) == mul(total_chern(e1, cap=4), total_chern(e2, cap=4))


@pytest.mark.parametrize("m", [-3, -1, 1, 2, 5])
def test_pontrjagin_of_line(m):
    assert total_pontrjagin(BundleExpr.line(m)).coeffs == (1, 0, m * m)


def test_pontrjagin_ignores_conjugation_and_trivial_reals():
    e = BundleExpr.line(2) + BundleExpr.line(-1, 3)
    padded = e + BundleExpr.trivial(real_rank=7)
    assert total_pontrjagin(e, cap=4) == total_pontrjagin(e.dual(), cap=4)
    assert total_pontrjagin(padded, cap=4) == total_pontrjagin(e, cap=4)


def test_second_pontrjagin_class():
    # p = (1 + c^2)(1 + 4c^2) = 1 + 5c^2 + 4c^4
    e = BundleExpr.line(1) + BundleExpr.line(2)
    assert total_pontrjagin(e, cap=4).coeffs == (1, 0, 5, 0, 4)


def test_total_sw_is_reduced_chern_class():
    e = BundleExpr.line(3) + BundleExpr.line(1, 2)
    assert total_sw(e).coeffs == (1, 1, 1)
    assert total_sw(e) == total_chern(e).reduce_mod2()
    assert total_sw(BundleExpr.line(2, 3)).coeffs == (1, 0, 0)


def test_characteristic_classes_report():
    report = characteristic_classes(BundleExpr.line(3), with_chern=True)
    assert report.pontrjagin_class(1) == 9
    assert report.sw_class(2) == 1
    assert report.chern_class(1) == 3
    assert report.real_rank == 2

    bare = characteristic_classes(BundleExpr.line(3))
    with pytest.raises(ValueError):
        bare.chern_class(1)


def test_solve_stable_tangent_of_w5_12():
    known = BundleExpr.trivial(real_rank=3) + BundleExpr.line(-1)
    rhs = BundleExpr.line(-1, 5) + BundleExpr.line(-2, 5)
    report = solve_stable(known, rhs)
    assert report.pontrjagin_class(1) == 24
    assert report.sw_class(2) == 0
    assert report.real_rank == 15
    assert report.total_chern is None
    assert report.caveats == ()


def test_solve_stable_with_chern_carries_caveat():
    known = BundleExpr.trivial(real_rank=2)
    rhs = BundleExpr.line(-1, 3)
    report = solve_stable(known, rhs, with_chern=True)
    assert report.total_chern == TruncSeries((1, -3, 3))
    assert report.caveats == (REAL_ISOMORPHISM_CAVEAT,)


def test_solve_stable_is_stable_under_trivial_summands():
    known = BundleExpr.line(1) + BundleExpr.trivial(real_rank=1)
    rhs = BundleExpr.line(2, 3)
    base = solve_stable(known, rhs, cap=4)
    padded = solve_stable(known + BundleExpr.trivial(3, 2), rhs + BundleExpr.trivial(3, 2), cap=4)
    assert padded.total_pontrjagin == base.total_pontrjagin
    assert padded.total_sw == base.total_sw


def test_whitney_product_of_two_lines():
    assert total_chern(BundleExpr.line(2) + BundleExpr.line(-5)).coeffs == (1, -3, -10)


def test_virtual_cancellation():
    assert total_chern(BundleExpr.line(1) - BundleExpr.line(1)) == TruncSeries.one()


def test_trivial_bundle_classes():
    e = BundleExpr.trivial(complex_rank=4, real_rank=3)
    assert total_pontrjagin(e).coeffs == (1, 0, 0)
    assert total_sw(e).coeffs == (1, 0, 0)


def test_sw_of_weight_sum():
    assert total_sw(BundleExpr.line(-1) + BundleExpr.line(-2)).coeffs == (1, 1, 0)


def test_pontrjagin_of_rank_two_is_c1_squared_minus_2c2():
    # c1 = a + b, c2 = ab, so p1 = (a + b)^2 - 2ab = a^2 + b^2
    a, b = 3, -4
    report = characteristic_classes(BundleExpr.line(a) + BundleExpr.line(b), with_chern=True)
    assert report.pontrjagin_class(1) == report.chern_class(1) ** 2 - 2 * report.chern_class(2)


def test_solve_stable_with_nothing_known():
    report = solve_stable(BundleExpr.zero(), BundleExpr.line(3))
    assert report.total_pontrjagin == total_pontrjagin(BundleExpr.line(3))
    assert report.total_sw == total_sw(BundleExpr.line(3))
