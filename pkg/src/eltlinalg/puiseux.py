"""Finite-support Puiseux series, valuation, tropicalization and lifts.

The series here are finite formal sums ``coeff * t^exponent`` with rational
exponents and layer-ring coefficients: every construction used by the
library produces finite supports, and series division never appears (rank
goes through minors), so the finite fragment is all that is needed.
Tropicalization sends a nonzero series to its minimal-exponent term, read as
(negated exponent, coefficient); the zero series goes to -inf.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import (
    DimensionMismatch,
    InvalidWitness,
    NotAField,
    NotIntegralDomain,
    SizeBound,
    ZeroLayerEntry,
)
from .layers import LayerRing
from .matrices import DEFAULT_DET_BOUND, ELTMatrix, signed_permutations, submatrix_rank
from .scalars import ELTValue, NEG_INF, elt_sum
from .witness import DependenceWitness, verify_witness


class PuiseuxPoly:
    """Canonical finite sum of ``coeff * t^exp`` terms, exponents rational."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        collected = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp, coeff in items:
            exp = exp if isinstance(exp, Fraction) else Fraction(exp)
            cur = collected.get(exp)
            coeff = coeff if cur is None else cur + coeff
            if coeff:
                collected[exp] = coeff
            elif exp in collected:
                del collected[exp]
        object.__setattr__(self, "terms", tuple(sorted(collected.items())))

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxPoly is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, coeff, exp):
        return cls(((Fraction(exp), coeff),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self):
        """Minimal exponent; ``None`` stands for +infinity (the zero series)."""
        return self.terms[0][0] if self.terms else None

    def leading(self):
        if not self.terms:
            raise ValueError("the zero series has no leading term")
        return self.terms[0]

    def __add__(self, other):
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return PuiseuxPoly(self.terms + other.terms)

    def __neg__(self):
        return PuiseuxPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                c = out.get(e)
                c = c1 * c2 if c is None else c + c1 * c2
                if c:
                    out[e] = c
                elif e in out:
                    del out[e]
        return PuiseuxPoly(out)

    def scale(self, coeff):
        if not coeff:
            return PuiseuxPoly()
        return PuiseuxPoly(tuple((e, coeff * c) for e, c in self.terms))

    def monomial_inverse(self):
        """Inverse of a single invertible-coefficient term."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are inverted here")
        exp, coeff = self.terms[0]
        return PuiseuxPoly.monomial(1 / coeff, -exp)

    def __eq__(self, other):
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}t^{e}" for e, c in self.terms)

    def __repr__(self):
        return f"PuiseuxPoly({self})"


def eltrop(x: PuiseuxPoly) -> ELTValue:
    """Tropicalize: negated leading exponent over the leading coefficient."""
    if x.is_zero:
        return NEG_INF
    exp, coeff = x.leading()
    return ELTValue(-exp, coeff)


class PuiseuxMatrix:
    """Rectangular grid of series over one layer ring."""

    __slots__ = ("ring", "entries")

    def __init__(self, entries, ring: LayerRing):
        rows = tuple(tuple(row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged rows")
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and column")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxMatrix is immutable")

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0])

    def row(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, PuiseuxMatrix):
            return NotImplemented
        return self.ring is other.ring and self.entries == other.entries

    def __str__(self):
        return "\n".join(" , ".join(str(x) for x in row) for row in self.entries)


def eltrop_matrix(M: PuiseuxMatrix) -> ELTMatrix:
    return ELTMatrix(
        (tuple(eltrop(x) for x in row) for row in M.entries), M.ring
    )


def det_puiseux(M: PuiseuxMatrix, *, max_size: int = DEFAULT_DET_BOUND) -> PuiseuxPoly:
    if M.nrows != M.ncols:
        raise DimensionMismatch("determinant of a non-square series matrix")
    n = M.nrows
    if n > max_size:
        raise SizeBound(f"series determinant bound is {max_size}, got n={n}")
    total = PuiseuxPoly()
    for perm, sign in signed_permutations(n):
        prod = None
        for i in range(n):
            e = M.entries[i][perm[i]]
            if e.is_zero:
                prod = None
                break
            prod = e if prod is None else prod * e
        if prod is None:
            continue
        total = total + (-prod if sign < 0 else prod)
    return total


def puiseux_rank(M: PuiseuxMatrix, *, max_size: int = DEFAULT_DET_BOUND) -> int:
    """Rank over the fraction field: largest nonzero minor, no division."""
    if not M.ring.is_integral_domain:
        raise NotIntegralDomain("series rank needs an integral layer domain")
    top = min(M.nrows, M.ncols)
    if top > max_size:
        raise SizeBound(f"series rank bound is {max_size}, got min dim {top}")
    for k in range(top, 0, -1):
        for rows in combinations(range(M.nrows), k):
            for cols in combinations(range(M.ncols), k):
                sub = PuiseuxMatrix(
                    (tuple(M.entries[i][j] for j in cols) for i in rows), M.ring
                )
                if not det_puiseux(sub).is_zero:
                    return k
    return 0


def _naive_entry(x: ELTValue) -> PuiseuxPoly:
    if x.tangible is None:
        return PuiseuxPoly()
    return PuiseuxPoly.monomial(x.layer, -x.tangible)


def naive_monomial_lift(B: ELTMatrix) -> PuiseuxMatrix:
    """Entrywise monomial lift; tropicalizes back to the input exactly."""
    if not B.is_pure():
        raise ZeroLayerEntry("only pure matrices lift")
    return PuiseuxMatrix(
        (tuple(_naive_entry(x) for x in row) for row in B.entries), B.ring
    )


def lift_dependent_matrix(B: ELTMatrix, witness: DependenceWitness) -> PuiseuxMatrix:
    """Lift with exactly dependent rows, tropicalizing back to ``B``.

    Column by column, every coordinate but a dominant one is lifted as a
    monomial and the dominant one is solved from the linear relation, so the
    witnessed combination vanishes identically in the series ring.
    """
    ring = B.ring
    if not ring.is_field:
        raise NotAField("dependent lifting needs a layer field")
    if not B.is_pure():
        raise ZeroLayerEntry("only pure matrices lift")
    if not verify_witness(B.rows, witness):
        raise InvalidWitness("witness does not verify on the rows")

    coeff = witness.coefficient_map()
    lifted_coeff = {i: _naive_entry(a) for i, a in coeff.items()}
    out = [[_naive_entry(B.entries[i][j]) for j in range(B.ncols)] for i in range(B.nrows)]

    for j in range(B.ncols):
        terms = {
            i: a * B.entries[i][j]
            for i, a in coeff.items()
            if B.entries[i][j].tangible is not None
        }
        peak = max((v.tangible for v in terms.values()), default=None)
        if peak is None:
            continue  # the column meets the support only at -inf
        d = min(i for i, v in terms.items() if v.tangible == peak)
        acc = PuiseuxPoly()
        for i in coeff:
            if i != d:
                acc = acc + lifted_coeff[i] * out[i][j]
        out[d][j] = -(lifted_coeff[d].monomial_inverse() * acc)

    lifted = PuiseuxMatrix(out, ring)
    if eltrop_matrix(lifted) != B:
        raise RuntimeError("internal error: lift does not tropicalize back")
    for j in range(B.ncols):
        total = PuiseuxPoly()
        for i in coeff:
            total = total + lifted_coeff[i] * lifted.entries[i][j]
        if not total.is_zero:
            raise RuntimeError("internal error: lifted rows are not dependent")
    return lifted


def kapranov_bounds(B: ELTMatrix, *, max_size: int = DEFAULT_DET_BOUND):
    """(submatrix rank, best constructed-lift rank) for a pure matrix.

    The left value bounds the minimal lift rank from below; the right value
    is the minimum over the lifts this library can construct (the naive
    monomial lift, and the dependent-rows lift when the matrix is square
    with dependent rows).  Equality is asserted by the test suite wherever a
    construction achieves it; otherwise the honest range stands.
    """
    if not B.is_pure():
        raise ZeroLayerEntry("bounds are defined for pure matrices")
    if min(B.nrows, B.ncols) > max_size:
        raise SizeBound(f"rank bound is {max_size}")
    lower = submatrix_rank(B, max_size=max_size)
    upper = puiseux_rank(naive_monomial_lift(B), max_size=max_size)
    if B.is_square and B.ring.is_field:
        from .witness import find_dependence_witness

        try:
            w = find_dependence_witness(B.rows, B.ring)
        except SizeBound:
            w = None
        if w is not None:
            upper = min(upper, puiseux_rank(lift_dependent_matrix(B, w), max_size=max_size))
    return lower, upper
