import random
from fractions import Fraction

import pytest

from eltlinalg import GaussianRational, NoConjugation, Q, QI, Z, ring_by_name
from eltlinalg.errors import ParseError


RINGS = [Z, Q, QI]


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
def test_ring_axioms_on_samples(ring):
    rng = random.Random(1)
    for _ in range(200):
        a, b, c = (ring.sample(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + ring.zero == a
        assert a * ring.one == a


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
def test_units_invert(ring):
    rng = random.Random(2)
    for _ in range(100):
        a = ring.sample(rng, nonzero=True)
        inv = ring.inverse_or_none(a)
        if ring.is_field:
            assert inv is not None and a * inv == ring.one
        elif inv is not None:
            assert a * inv == ring.one


def test_conjugation_involution():
    rng = random.Random(3)
    for _ in range(100):
        a = QI.sample(rng)
        assert QI.conj(QI.conj(a)) == a
    with pytest.raises(NoConjugation):
        Q.conj(Fraction(1))


def test_self_conjugate_products_nonnegative():
    rng = random.Random(4)
    for _ in range(100):
        a = QI.sample(rng)
        assert QI.nonneg_self_conjugate(a * QI.conj(a))
    assert not QI.nonneg_self_conjugate(GaussianRational(-1, 0))
    assert not QI.nonneg_self_conjugate(GaussianRational(1, 1))


def test_gaussian_arithmetic():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert (GaussianRational(1, 2) * GaussianRational(1, -2)) == 5
    assert GaussianRational(3, 4) / GaussianRational(0, 1) == GaussianRational(4, -3)
    assert str(GaussianRational(Fraction(1, 2), Fraction(-3))) == "1/2-3i"
    assert hash(GaussianRational(2, 0)) == hash(Fraction(2))


@pytest.mark.parametrize("ring,text", [
    (Z, "-7"),
    (Q, "-3/4"),
    (QI, "1+2i"),
    (QI, "-1/2-2/3i"),
    (QI, "5i"),
    (QI, "-4"),
])
def test_layer_parse_format_round_trip(ring, text):
    assert ring.format(ring.parse(text)) == text


def test_layer_parse_rejects_garbage():
    for ring, bad in [(Z, "1/2"), (Q, "x"), (QI, "1+2j"), (Q, "")]:
        with pytest.raises(ParseError):
            ring.parse(bad)


def test_ring_registry():
    assert ring_by_name("Q") is Q
    with pytest.raises(ParseError):
        ring_by_name("R")
