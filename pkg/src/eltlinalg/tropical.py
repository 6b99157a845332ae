"""ELT rank of plain tropical (max-plus) matrices.

A tropical matrix is a grid of rationals and -inf.  Its ELT rank is the
smallest submatrix rank over all pure layer assignments.  Exact mode
(at most 9 cells) decides rank <= 1 analytically -- all 2x2 minors must be
tropically balanced, after which the all-ones assignment works -- and
otherwise enumerates assignments over the pool {-3..-1, 1..3} exhaustively,
looking for one that silences every dominant permutation form above the
proven floor.  Larger inputs get an honest (lower, upper) range instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import DimensionMismatch, SizeBound
from .layers import LayerRing, Q
from .matrices import DEFAULT_DET_BOUND, ELTMatrix, signed_permutations, submatrix_rank
from .scalars import ELTValue, NEG_INF

EXACT_CELL_BOUND = 9
LAYER_POOL = (-3, -2, -1, 1, 2, 3)


class TropicalMatrix:
    """Max-plus matrix: ``None`` entries stand for -inf."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(
            tuple(None if x is None else Fraction(x) for x in row) for row in entries
        )
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged rows")
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and column")
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("TropicalMatrix is immutable")

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0])

    def __eq__(self, other):
        if not isinstance(other, TropicalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __str__(self):
        return "\n".join(
            " ".join("-inf" if x is None else str(x) for x in row) for row in self.entries
        )


@dataclass(frozen=True)
class TropicalRankResult:
    lower: int
    upper: int
    exact: bool
    witness: ELTMatrix | None
    method: str

    @property
    def value(self):
        return self.lower if self.exact else None


def assign_layers(T: TropicalMatrix, layers, ring: LayerRing) -> ELTMatrix:
    """Pure matrix with the tropical tangibles and the given finite-entry layers."""
    it = iter(layers)
    rows = []
    for row in T.entries:
        out = []
        for x in row:
            if x is None:
                out.append(NEG_INF)
            else:
                layer = next(it)
                if layer == 0:
                    raise ValueError("assignments must be nonzero-layered")
                out.append(ELTValue(x, layer))
        rows.append(tuple(out))
    return ELTMatrix(rows, ring)


def _balanced(T: TropicalMatrix) -> bool:
    """Every 2x2 minor has equal diagonal tangible products (-inf absorbing)."""
    for r1, r2 in combinations(range(T.nrows), 2):
        for c1, c2 in combinations(range(T.ncols), 2):
            a, b = T.entries[r1][c1], T.entries[r1][c2]
            c, d = T.entries[r2][c1], T.entries[r2][c2]
            d1 = None if a is None or d is None else a + d
            d2 = None if b is None or c is None else b + c
            if d1 != d2:
                return False
    return True


def _dominant_forms(T: TropicalMatrix, sizes):
    """Per square selection of a listed size, the signed dominant-track form.

    A form is a list of ``(sign, position-tuple)`` pairs: the permutations
    whose tangible track attains the maximum.  The minor of an assignment is
    nonsingular exactly when the signed product sum over the form is nonzero;
    an empty form (all tracks -inf) is singular forever.
    """
    forms = {}
    for k in sizes:
        for rows in combinations(range(T.nrows), k):
            for cols in combinations(range(T.ncols), k):
                best = None
                entries = []
                for perm, sign in signed_permutations(k):
                    t = Fraction(0)
                    dead = False
                    for a in range(k):
                        v = T.entries[rows[a]][cols[perm[a]]]
                        if v is None:
                            dead = True
                            break
                        t += v
                    if dead:
                        continue
                    if best is None or t > best:
                        best = t
                        entries = []
                    if t == best:
                        entries.append((sign, tuple((rows[a], cols[perm[a]]) for a in range(k))))
                forms[(rows, cols)] = entries
    return forms


def _form_vanishes(form, value_at) -> bool:
    total = 0
    for sign, positions in form:
        prod = 1
        for pos in positions:
            prod *= value_at[pos]
        total += -prod if sign < 0 else prod
    return total == 0


def elt_rank_tropical(
    T: TropicalMatrix,
    *,
    ring: LayerRing = Q,
    exact_cells: int = EXACT_CELL_BOUND,
    pool=LAYER_POOL,
    max_size: int = DEFAULT_DET_BOUND,
) -> TropicalRankResult:
    finite = [
        (i, j) for i in range(T.nrows) for j in range(T.ncols) if T.entries[i][j] is not None
    ]
    if not finite:
        witness = assign_layers(T, (), ring)
        return TropicalRankResult(0, 0, True, witness, "empty")

    top = min(T.nrows, T.ncols)
    if top > max_size:
        raise SizeBound(f"rank computations are bounded at {max_size}")

    floor = 1 if _balanced(T) else 2
    if floor == 1:
        witness = assign_layers(T, (ring.one,) * len(finite), ring)
        if submatrix_rank(witness, max_size=max_size) == 1:
            return TropicalRankResult(1, 1, True, witness, "balanced")
        floor = 1  # balanced but the all-ones certificate failed; keep searching

    if T.nrows * T.ncols > exact_cells:
        return _range_mode(T, finite, floor, ring, pool, max_size)

    if floor >= top:
        witness = assign_layers(T, (ring.one,) * len(finite), ring)
        return TropicalRankResult(top, top, True, witness, "floor")

    for target in range(floor, top):
        forms = list(_dominant_forms(T, range(target + 1, top + 1)).values())
        for assignment in product(pool, repeat=len(finite)):
            value_at = dict(zip(finite, assignment))
            if all(_form_vanishes(f, value_at) for f in forms):
                witness = assign_layers(T, assignment, ring)
                achieved = submatrix_rank(witness, max_size=max_size)
                if achieved != target:
                    raise RuntimeError("internal error: rank certificate mismatch")
                return TropicalRankResult(target, target, True, witness, "enumerated")

    witness = assign_layers(T, (ring.one,) * len(finite), ring)
    return TropicalRankResult(top, top, True, witness, "exhausted")


def _range_mode(T, finite, floor, ring, pool, max_size):
    best = None
    witness = None
    samples = [(ring.one,) * len(finite)]
    for offset in range(3):
        samples.append(tuple(pool[(i + offset) % len(pool)] for i in range(len(finite))))
    for layers in samples:
        cand = assign_layers(T, layers, ring)
        r = submatrix_rank(cand, max_size=max_size)
        if best is None or r < best:
            best, witness = r, cand
    return TropicalRankResult(floor, best, floor == best, witness, "sampled")
