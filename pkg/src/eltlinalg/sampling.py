"""Deterministic random generators for tests and the verify subcommand."""

from __future__ import annotations

from fractions import Fraction

from .layers import LayerRing
from .matrices import ELTMatrix
from .puiseux import PuiseuxPoly
from .scalars import ELTValue, NEG_INF

TANGIBLE_NUMERATORS = range(-4, 5)
TANGIBLE_DENOMINATORS = (1, 1, 1, 2)


def random_tangible(rng) -> Fraction:
    return Fraction(rng.choice(TANGIBLE_NUMERATORS), rng.choice(TANGIBLE_DENOMINATORS))


def random_scalar(rng, ring: LayerRing, *, p_neg_inf=0.15, p_zero_layer=0.15, pure=False):
    r = rng.random()
    if r < p_neg_inf:
        return NEG_INF
    t = random_tangible(rng)
    if not pure and r < p_neg_inf + p_zero_layer:
        return ELTValue(t, ring.zero)
    return ELTValue(t, ring.sample(rng, nonzero=True))


def random_vector(rng, n, ring, **kw):
    return tuple(random_scalar(rng, ring, **kw) for _ in range(n))


def random_matrix(rng, nrows, ncols, ring, **kw) -> ELTMatrix:
    return ELTMatrix(
        [[random_scalar(rng, ring, **kw) for _ in range(ncols)] for _ in range(nrows)], ring
    )


def random_series(rng, ring, max_terms=3) -> PuiseuxPoly:
    n = rng.randint(0, max_terms)
    return PuiseuxPoly(
        [(random_tangible(rng), ring.sample(rng)) for _ in range(n)]
    )
