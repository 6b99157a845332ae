"""Independent brute-force oracles for the property-test layer.

These deliberately avoid the code paths they check: the surpassing oracle
searches witnesses for the defining existential directly, the dependence
oracle goes through determinants only (no witness search), and the lift-rank
oracle rebuilds dependent lifts from series primitives for every admissible
designation instead of calling the production lifting routine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import SizeBound
from .layers import LayerRing
from .matrices import ELTMatrix, submatrix_rank
from .puiseux import PuiseuxMatrix, PuiseuxPoly, puiseux_rank, eltrop_matrix
from .scalars import ELTValue, NEG_INF
from .witness import DependenceWitness


@dataclass(frozen=True)
class OracleConfig:
    """Candidate-grid offsets and determinism knobs for the oracles."""

    offsets: tuple = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2))
    seed: int = 0
    max_designations: int = 4096


DEFAULT_CONFIG = OracleConfig()


def surpass_oracle(x: ELTValue, y: ELTValue, config: OracleConfig = DEFAULT_CONFIG) -> bool:
    """Decide ``x |= y`` by exhibiting a zero-layer witness ``x = y + z``.

    Any witness can be normalized to have the tangible of ``x``, so the
    candidate grid built from both tangibles plus small offsets is complete.
    """
    if x == y + NEG_INF:
        return True
    base = {t for t in (x.tangible, y.tangible) if t is not None}
    for t in sorted(base):
        for off in config.offsets:
            z = ELTValue(t + off, x.layer * 0)
            if x == y + z:
                return True
    return False


def dependence_oracle(vectors, ring: LayerRing, *, max_size: int = 8) -> bool:
    """Dependence via ranks only: fewer independent directions than vectors."""
    if not vectors:
        return False
    stacked = ELTMatrix(vectors, ring)
    if min(stacked.nrows, stacked.ncols) > max_size:
        raise SizeBound(f"oracle determinant bound is {max_size}")
    if stacked.nrows > stacked.ncols:
        return True  # more vectors than coordinates
    return submatrix_rank(stacked, max_size=max_size) < len(vectors)


def _monomial(x: ELTValue) -> PuiseuxPoly:
    if x.tangible is None:
        return PuiseuxPoly()
    return PuiseuxPoly.monomial(x.layer, -x.tangible)


def _lift_with_designation(B: ELTMatrix, witness: DependenceWitness, choice):
    """Dependent lift solving the chosen dominant coordinate per column."""
    coeff = witness.coefficient_map()
    lifted_coeff = {i: _monomial(a) for i, a in coeff.items()}
    out = [[_monomial(B.entries[i][j]) for j in range(B.ncols)] for i in range(B.nrows)]
    for j, d in choice.items():
        acc = PuiseuxPoly()
        for i in coeff:
            if i != d:
                acc = acc + lifted_coeff[i] * out[i][j]
        out[d][j] = -(lifted_coeff[d].monomial_inverse() * acc)
    return PuiseuxMatrix(out, B.ring)


def lift_rank_oracle(
    B: ELTMatrix,
    *,
    witness: DependenceWitness | None = None,
    config: OracleConfig = DEFAULT_CONFIG,
    max_size: int = 8,
) -> int:
    """Minimum series rank over the whole constructed-lift family.

    Always includes the naive monomial lift; when a row witness is supplied
    (or found for a square matrix), every combination of admissible dominant
    designations contributes a lift.  The result is an upper bound for the
    minimal-lift rank, equal to the submatrix rank on the acceptance set.
    """
    best = puiseux_rank(PuiseuxMatrix(
        [[_monomial(x) for x in row] for row in B.entries], B.ring
    ), max_size=max_size)

    if witness is None and B.is_square and B.ring.is_field:
        from .witness import find_dependence_witness

        try:
            witness = find_dependence_witness(B.rows, B.ring)
        except SizeBound:
            witness = None
    if witness is None:
        return best

    coeff = witness.coefficient_map()
    per_column = []
    for j in range(B.ncols):
        terms = {
            i: a * B.entries[i][j]
            for i, a in coeff.items()
            if B.entries[i][j].tangible is not None
        }
        peak = max((v.tangible for v in terms.values()), default=None)
        if peak is None:
            per_column.append((j, ()))
        else:
            per_column.append((j, tuple(sorted(i for i, v in terms.items() if v.tangible == peak))))

    pools = [doms if doms else (None,) for _, doms in per_column]
    total = 1
    for p in pools:
        total *= len(p)
    if total > config.max_designations:
        pools = [p[:1] for p in pools]

    for picks in product(*pools):
        choice = {
            j: d for (j, _), d in zip(per_column, picks) if d is not None
        }
        lifted = _lift_with_designation(B, witness, choice)
        if eltrop_matrix(lifted) != B:
            continue  # designation spoiled a leading term; not admissible
        best = min(best, puiseux_rank(lifted, max_size=max_size))
    return best
