import pytest

from src.series import PoincareSeries


def test_geometric_and_loop_sphere():
    assert PoincareSeries.geometric(2, 6).coefficients == (1, 0, 1, 0, 1, 0, 1)
    assert PoincareSeries.loop_sphere(3, 6) == PoincareSeries.geometric(2, 6)
    with pytest.raises(ValueError):
        PoincareSeries.loop_sphere(1, 4)


def test_inverse():
    one_minus_t = PoincareSeries.one(5) - PoincareSeries.monomial(1, 5)
    assert one_minus_t.inverse() == PoincareSeries.geometric(1, 5)
    # 1 / (1 - 2t) = Σ 2^k t^k
    assert (PoincareSeries.one(4) - PoincareSeries.monomial(1, 4, 2)).inverse().coefficients == (1, 2, 4, 8, 16)
    with pytest.raises(ValueError):
        PoincareSeries((2, 1)).inverse()


def test_product_truncates_to_shorter_operand():
    a = PoincareSeries.sphere(1, 3)
    b = PoincareSeries.geometric(1, 5)
    assert (a * b).degree == 3
    assert (a * b).coefficients == (1, 2, 2, 2)


def test_product_of_factors():
    # ΩS^2 ≃ S^1 × ΩS^3
    split = PoincareSeries.product([PoincareSeries.sphere(1, 8), PoincareSeries.loop_sphere(3, 8)], 8)
    assert split == PoincareSeries.loop_sphere(2, 8)


def test_terms_differences_and_str():
    s = PoincareSeries.from_terms({0: 1, 3: 2, 9: 5}, 4)
    assert s.terms() == {0: 1, 3: 2}
    assert s.differences(PoincareSeries.one(4)) == [(3, 2, 0)]
    assert str(PoincareSeries.geometric(2, 4)) == "1 + t^2 + t^4 + O(t^5)"
    assert str(PoincareSeries.zero(1)) == "0 + O(t^2)"


def test_truncate():
    s = PoincareSeries.geometric(1, 5)
    assert s.truncate(2).coefficients == (1, 1, 1)
    with pytest.raises(ValueError):
        s.truncate(6)
    with pytest.raises(ValueError):
        PoincareSeries(())
