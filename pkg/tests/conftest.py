import random
from fractions import Fraction

import pytest

from eltlinalg import ELTValue, GaussianRational, NEG_INF


def ev(t, layer):
    """Rational-layer scalar shorthand."""
    return ELTValue(Fraction(t), Fraction(layer))


def gv(t, re, im=0):
    """Gaussian-layer scalar shorthand."""
    return ELTValue(Fraction(t), GaussianRational(re, im))


ni = NEG_INF


@pytest.fixture
def rng():
    return random.Random(20240811)
