from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import semiringlab as sl
from semiringlab.errors import InputError
from semiringlab.lexgroup import GROUP_UNIT, LEAST_ABOVE_UNIT, lex_le

U = sl.LexGroupElement(3, 0, 0)

rationals = st.fractions(min_value=Fraction(-4), max_value=Fraction(4), max_denominator=8)
positives = st.fractions(min_value=Fraction(1, 8), max_value=Fraction(4), max_denominator=8)
elements = st.builds(
    sl.LexGroupElement, alpha=positives, beta=rationals, k=st.integers(-3, 3)
)


def test_lex_mul_example():
    x = sl.LexGroupElement(2, 0, 0)
    y = sl.LexGroupElement(2, 1, 0)
    assert sl.lex_mul(x, y) == sl.LexGroupElement(4, 2, 0)


def test_lex_inv_example():
    x = sl.LexGroupElement(2, 0, 0)
    assert sl.lex_inv(x) == sl.LexGroupElement(Fraction(1, 2), 0, 0)


def test_unit_and_least_above():
    assert sl.lex_cmp(GROUP_UNIT, LEAST_ABOVE_UNIT) == -1
    assert sl.lex_mul(GROUP_UNIT, U) == U
    assert sl.lex_mul(U, GROUP_UNIT) == U


def test_alpha_must_be_positive():
    with pytest.raises(InputError):
        sl.LexGroupElement(0, 0, 0)
    with pytest.raises(InputError):
        sl.LexGroupElement(-1, 2, 0)


@given(elements, elements, elements)
def test_group_associativity(x, y, z):
    assert sl.lex_mul(sl.lex_mul(x, y), z) == sl.lex_mul(x, sl.lex_mul(y, z))


@given(elements)
def test_group_inverse(x):
    assert sl.lex_mul(x, sl.lex_inv(x)) == GROUP_UNIT
    assert sl.lex_mul(sl.lex_inv(x), x) == GROUP_UNIT


@given(elements, elements, elements)
def test_order_translation_invariant(x, y, z):
    # the total order is compatible with the group operation on both sides
    if lex_le(x, y):
        assert lex_le(sl.lex_mul(z, x), sl.lex_mul(z, y))
        assert lex_le(sl.lex_mul(x, z), sl.lex_mul(y, z))


@given(elements, elements)
def test_join_meet_agree_with_order(x, y):
    assert sl.lex_join(x, y) == max(x, y, key=sl.LexGroupElement.key)
    assert sl.lex_meet(x, y) == min(x, y, key=sl.LexGroupElement.key)


def test_mv_product_known_values():
    a = sl.LexGroupElement(2, 0, 0)
    b = sl.LexGroupElement(2, 1, 0)
    assert sl.mv_product(a, b, U) == sl.LexGroupElement(Fraction(4, 3), Fraction(2, 3), 0)
    assert sl.mv_product(b, a, U) == sl.LexGroupElement(Fraction(4, 3), Fraction(1), 0)
    assert sl.mv_product(a, b, U) != sl.mv_product(b, a, U)


def test_mv_product_unity_and_zero():
    samples = sl.sample_interval(U)
    for a in samples:
        assert sl.mv_product(a, U, U) == a
        assert sl.mv_product(U, a, U) == a
        assert sl.mv_product(a, GROUP_UNIT, U) == GROUP_UNIT
        assert sl.mv_product(GROUP_UNIT, a, U) == GROUP_UNIT


def test_mv_product_interval_errors():
    outside = sl.LexGroupElement(5, 0, 0)
    with pytest.raises(InputError):
        sl.mv_product(outside, U, U)
    with pytest.raises(InputError):
        sl.mv_product(U, outside, U)
    with pytest.raises(InputError):
        sl.mv_product(GROUP_UNIT, GROUP_UNIT, GROUP_UNIT)  # top not above the unit


def test_mv_product_below_meet():
    samples = sl.sample_interval(U, denominator_bound=3, height_bound=1)
    for a in samples:
        for b in samples:
            p = sl.mv_product(a, b, U)
            assert lex_le(p, sl.lex_meet(a, b))


def test_mv_product_associative_on_samples():
    samples = sl.sample_interval(U, denominator_bound=2, height_bound=1)
    for a in samples:
        for b in samples:
            for c in samples:
                left = sl.mv_product(sl.mv_product(a, b, U), c, U)
                right = sl.mv_product(a, sl.mv_product(b, c, U), U)
                assert left == right


def test_sample_interval_contents():
    samples = sl.sample_interval(U)
    assert GROUP_UNIT in samples and U in samples and LEAST_ABOVE_UNIT in samples
    for x in samples:
        assert lex_le(GROUP_UNIT, x) and lex_le(x, U)
    keys = [x.key() for x in samples]
    assert keys == sorted(keys)
    assert sl.sample_interval(U) == samples  # deterministic


def test_least_above_unit_in_interval():
    # nothing in the sampled interval lies strictly between the unit and its successor
    for x in sl.sample_interval(U):
        if sl.lex_cmp(GROUP_UNIT, x) < 0:
            assert lex_le(LEAST_ABOVE_UNIT, x)


def test_interval_totally_ordered():
    samples = sl.sample_interval(U)
    for x in samples:
        for y in samples:
            assert lex_le(x, y) or lex_le(y, x)
