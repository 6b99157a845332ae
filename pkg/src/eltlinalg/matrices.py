"""Dense layered-tropical matrices: arithmetic, determinant, invertibility.

The determinant is the signed permutation expansion, taken verbatim: there is
no Gaussian elimination over this semiring, and at desk scale (default bound
8) the factorial cost is irrelevant.  A matrix is *singular* when its
determinant is zero-layered, which includes the -inf determinant.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from .errors import (
    BadIndex,
    DimensionMismatch,
    NotSquare,
    NotSquareSelection,
    SizeBound,
)
from .layers import LayerRing
from .scalars import ELTValue, NEG_INF, elt_sum

DEFAULT_DET_BOUND = 8

ELTVector = tuple  # rows and columns are plain tuples of ELTValue


class ELTMatrix:
    """Immutable rectangular array of scalars over one layer ring."""

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
        raise AttributeError("ELTMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i) -> ELTVector:
        return self.entries[i]

    def col(self, j) -> ELTVector:
        return tuple(r[j] for r in self.entries)

    @property
    def rows(self):
        return self.entries

    @property
    def cols(self):
        return tuple(self.col(j) for j in range(self.ncols))

    def transpose(self) -> "ELTMatrix":
        return ELTMatrix(zip(*self.entries), self.ring)

    def map(self, fn) -> "ELTMatrix":
        return ELTMatrix((tuple(fn(x) for x in row) for row in self.entries), self.ring)

    def is_pure(self) -> bool:
        """No finite zero-layer entries (every entry in R^x or -inf)."""
        return all(x.tangible is None or x.layer != 0 for row in self.entries for x in row)

    def __add__(self, other):
        if not isinstance(other, ELTMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("entrywise sum needs equal shapes")
        return ELTMatrix(
            (tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)),
            self.ring,
        )

    def __matmul__(self, other):
        if not isinstance(other, ELTMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions differ")
        cols = other.cols
        return ELTMatrix(
            (tuple(elt_sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries),
            self.ring,
        )

    def scale(self, scalar: ELTValue) -> "ELTMatrix":
        return self.map(lambda x: scalar * x)

    def surpasses(self, other: "ELTMatrix") -> bool:
        """Entrywise surpassing; equivalent to the zero-layer-difference form."""
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("surpassing needs equal shapes")
        return all(
            a.surpasses(b)
            for ra, rb in zip(self.entries, other.entries)
            for a, b in zip(ra, rb)
        )

    def __eq__(self, other):
        if not isinstance(other, ELTMatrix):
            return NotImplemented
        return self.ring is other.ring and self.entries == other.entries

    def __hash__(self):
        return hash((self.ring.name, self.entries))

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)

    def __repr__(self):
        return f"ELTMatrix({self.nrows}x{self.ncols} over {self.ring.name})"


def identity(n: int, ring: LayerRing) -> ELTMatrix:
    one = ELTValue(0, ring.one)
    return ELTMatrix(
        (tuple(one if i == j else NEG_INF for j in range(n)) for i in range(n)), ring
    )


def vec_combination(coeffs, vectors) -> ELTVector:
    """Sum of ``coeffs[k] * vectors[k]`` coordinatewise."""
    if len(coeffs) != len(vectors):
        raise DimensionMismatch("one coefficient per vector")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionMismatch("vectors of equal length")
    return tuple(elt_sum(c * v[j] for c, v in zip(coeffs, vectors)) for j in range(n))


_SIGNED_PERMS: dict[int, list] = {}


def signed_permutations(n: int):
    """All permutations of range(n) with parity, cached per size."""
    cached = _SIGNED_PERMS.get(n)
    if cached is None:
        cached = []
        for perm in permutations(range(n)):
            inv = sum(
                1
                for a in range(n)
                for b in range(a + 1, n)
                if perm[a] > perm[b]
            )
            cached.append((perm, -1 if inv % 2 else 1))
        _SIGNED_PERMS[n] = cached
    return cached


def track(A: ELTMatrix, perm) -> ELTValue:
    """Product of the entries selected by a permutation (no sign)."""
    t = Fraction(0)
    layer = None
    for i, j in enumerate(perm):
        e = A.entries[i][j]
        if e.tangible is None:
            return NEG_INF
        t += e.tangible
        layer = e.layer if layer is None else layer * e.layer
    return ELTValue(t, layer)


def det(A: ELTMatrix, *, max_size: int = DEFAULT_DET_BOUND) -> ELTValue:
    """Signed permutation expansion of the determinant."""
    if not A.is_square:
        raise NotSquare(f"determinant of a {A.nrows}x{A.ncols} matrix")
    n = A.nrows
    if n > max_size:
        raise SizeBound(f"determinant bound is {max_size}, got n={n}")
    rows = A.entries
    best_t = None
    best_layer = None
    for perm, sign in signed_permutations(n):
        t = Fraction(0)
        layer = None
        dead = False
        for i in range(n):
            e = rows[i][perm[i]]
            if e.tangible is None:
                dead = True
                break
            t += e.tangible
            layer = e.layer if layer is None else layer * e.layer
        if dead:
            continue
        if sign < 0:
            layer = -layer
        if best_t is None or t > best_t:
            best_t, best_layer = t, layer
        elif t == best_t:
            best_layer = best_layer + layer
    if best_t is None:
        return NEG_INF
    return ELTValue(best_t, best_layer)


def is_singular(A: ELTMatrix, *, max_size: int = DEFAULT_DET_BOUND) -> bool:
    return det(A, max_size=max_size).is_zero_layer


def minor(A: ELTMatrix, row_set, col_set, *, max_size: int = DEFAULT_DET_BOUND) -> ELTValue:
    """Determinant of the selected square submatrix (0-based index sets)."""
    rows = sorted(set(row_set))
    cols = sorted(set(col_set))
    if len(rows) != len(cols):
        raise NotSquareSelection("row and column selections differ in size")
    if not rows:
        raise NotSquareSelection("empty selection")
    if any(i < 0 or i >= A.nrows for i in rows) or any(j < 0 or j >= A.ncols for j in cols):
        raise BadIndex("selection out of range")
    sub = ELTMatrix((tuple(A.entries[i][j] for j in cols) for i in rows), A.ring)
    return det(sub, max_size=max_size)


def submatrix_rank(A: ELTMatrix, *, max_size: int = DEFAULT_DET_BOUND, with_witness: bool = False):
    """Maximal size of a nonsingular square submatrix (0 when none exists)."""
    top = min(A.nrows, A.ncols)
    if top > max_size:
        raise SizeBound(f"submatrix rank bound is {max_size}, got min dim {top}")
    for k in range(top, 0, -1):
        for rows in combinations(range(A.nrows), k):
            for cols in combinations(range(A.ncols), k):
                if not minor(A, rows, cols, max_size=max_size).is_zero_layer:
                    return (k, (rows, cols)) if with_witness else k
    return (0, None) if with_witness else 0


def is_rank_one(A: ELTMatrix, *, max_size: int = DEFAULT_DET_BOUND) -> bool:
    return submatrix_rank(A, max_size=max_size) == 1


def verify_barvinok_decomposition(A: ELTMatrix, parts, *, max_size: int = DEFAULT_DET_BOUND) -> bool:
    """Check that ``parts`` are rank-one matrices whose entrywise sum is ``A``."""
    if not parts:
        return False
    total = None
    for part in parts:
        if (part.nrows, part.ncols) != (A.nrows, A.ncols):
            raise DimensionMismatch("decomposition parts must match the target shape")
        if not is_rank_one(part, max_size=max_size):
            return False
        total = part if total is None else total + part
    return total == A


def is_generalized_permutation(A: ELTMatrix) -> bool:
    """One unit-layer entry per row and per column, -inf elsewhere."""
    if not A.is_square:
        raise NotSquare("generalized permutation test needs a square matrix")
    n = A.nrows
    seen_cols = set()
    for i in range(n):
        finite = [j for j in range(n) if A.entries[i][j].tangible is not None]
        if len(finite) != 1:
            return False
        j = finite[0]
        if j in seen_cols or not A.ring.is_unit(A.entries[i][j].layer):
            return False
        seen_cols.add(j)
    return True


def invert_matrix(A: ELTMatrix):
    """Inverse of a generalized permutation matrix, ``None`` otherwise."""
    if not is_generalized_permutation(A):
        return None
    n = A.nrows
    out = [[NEG_INF] * n for _ in range(n)]
    for i in range(n):
        j = next(k for k in range(n) if A.entries[i][k].tangible is not None)
        out[j][i] = A.entries[i][j].inverse(A.ring)
    return ELTMatrix(out, A.ring)
