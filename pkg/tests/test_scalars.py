"""Scalar laws: the worked examples plus property checks for the semiring
structure, the negation map and both order relations."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eltlinalg import ELTValue, NEG_INF, Q, Z
from eltlinalg.errors import NotAField, ZeroLayerNotInvertible
from eltlinalg.oracles import surpass_oracle

from conftest import ev, ni


# -- pinned examples ---------------------------------------------------------


def test_add_examples():
    assert ev(1, 1) + ev(2, 3) == ev(2, 3)
    assert ev(2, 1) + ev(2, -1) == ev(2, 0)
    assert ni + ev(5, 2) == ev(5, 2)


def test_mul_examples():
    assert ev(1, 2) * ev(2, 3) == ev(3, 6)
    assert ev(0, 1) * ev(7, -4) == ev(7, -4)
    assert ni * ev(5, 7) is ni


def test_negate_examples():
    assert -ev(3, 2) == ev(3, -2)
    assert -ni is ni
    assert -(-ev(4, 5)) == ev(4, 5)
    assert -ev(3, 2) == ev(0, -1) * ev(3, 2)


def test_circ_examples():
    assert ev(4, 7).circ() == ev(4, 0)
    assert ni.circ() is ni
    assert ev(2, 1).circ().circ() == ev(2, 0)


def test_scalar_inverse_examples():
    assert ev(2, 3).inverse(Q) == ev(-2, Fraction(1, 3))
    assert ev(0, 1).inverse(Q) == ev(0, 1)
    with pytest.raises(ZeroLayerNotInvertible):
        ev(5, 0).inverse(Q)
    with pytest.raises(ZeroLayerNotInvertible):
        ni.inverse(Q)
    with pytest.raises(NotAField):
        ELTValue(1, 2).inverse(Z)
    assert ELTValue(1, -1).inverse(Z) == ELTValue(-1, -1)


def test_surpasses_examples():
    assert ev(2, 0).surpasses(ni)
    assert not ev(1, 2).surpasses(ev(0, 0))
    assert ev(3, 0).surpasses(ev(1, 5))


def test_balances_examples():
    assert ev(2, 1).balances(ev(2, 1))
    assert not ev(2, 1).balances(ev(3, 1))
    assert ni.balances(ni)


def test_zero_layer_marks_surpass_of_neg_inf():
    # s(x) = 0 exactly when x |= -inf.
    for x in [ni, ev(3, 0), ev(3, 1), ev(-2, 0)]:
        assert x.is_zero_layer == x.surpasses(ni)


# -- property checks ---------------------------------------------------------

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=6)
scalars = st.one_of(
    st.just(NEG_INF),
    st.builds(ELTValue, rationals, rationals),
)


@given(scalars, scalars, scalars)
def test_semiring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + NEG_INF == x
    assert x * ELTValue(0, Fraction(1)) == x
    assert x * NEG_INF is NEG_INF


@given(scalars, scalars)
def test_antiring(x, y):
    if (x + y) is NEG_INF or (x + y) == NEG_INF:
        assert x is NEG_INF and y is NEG_INF


@given(scalars, scalars, scalars)
def test_surpassing_is_a_partial_order(x, y, z):
    assert x.surpasses(x)
    if x.surpasses(y) and y.surpasses(x):
        assert x == y
    if x.surpasses(y) and y.surpasses(z):
        assert x.surpasses(z)


@given(scalars, scalars)
def test_surpasses_agrees_with_existential_oracle(x, y):
    assert x.surpasses(y) == surpass_oracle(x, y)


@given(scalars, scalars)
def test_negation_map_axioms(x, y):
    assert -(x + y) == (-x) + (-y)
    assert -(x * y) == x * (-y) == (-x) * y
    assert -(-x) == x


@given(scalars)
def test_circ_is_zero_layered_and_zero_set_is_an_ideal(x):
    assert x.circ().is_zero_layer
    assert (ELTValue(0, Fraction(0)) * x).is_zero_layer


@given(scalars, scalars)
def test_balances_matches_definition(x, y):
    assert x.balances(y) == (x + (-y)).is_zero_layer


def test_equality_and_hash():
    assert ev(1, 2) == ELTValue(Fraction(1), Fraction(2))
    assert hash(ev(1, 2)) == hash(ELTValue(Fraction(1), Fraction(2)))
    assert ev(1, 2) != ev(1, 3) and ev(1, 2) != ni
    assert ni == NEG_INF


def test_tangible_of_neg_inf_is_a_bottom_marker():
    assert ni.tangible is None
    assert ni.layer == 0
