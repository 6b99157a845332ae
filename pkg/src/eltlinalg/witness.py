"""Linear-dependence witnesses and the rank notions built on them.

A finite family of vectors is dependent when some combination with finite,
nonzero-layer coefficients lands in the zero-layer set coordinatewise.  The
finder enumerates supports and, per support, dominance patterns: for every
coordinate it guesses which support members attain the maximal tangible.
Tangible feasibility of a pattern is an exact difference-constraint system
(equalities inside the dominant set, strict inequalities against the rest)
decided on a difference-bound matrix with a strictness flag; layer
feasibility is a homogeneous linear system over the layer field whose
nullspace must contain an everywhere-nonzero vector.  The search is complete
within the configured bounds and exponential by design at desk scale.

Search order is deterministic: supports by (size, lexicographic), dominance
sets per coordinate by increasing bitmask; the first feasible pattern wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import BadIndex, DimensionMismatch, NotAField, SizeBound
from .layers import LayerRing
from .matrices import ELTMatrix, vec_combination
from .scalars import ELTValue

DEFAULT_WITNESS_BOUND = 6


@dataclass(frozen=True)
class DependenceWitness:
    """Support indices plus one finite nonzero-layer coefficient for each."""

    support: tuple
    coefficients: tuple

    def __post_init__(self):
        if not self.support:
            raise ValueError("witness support must be nonempty")
        if len(self.support) != len(self.coefficients):
            raise ValueError("one coefficient per support index")
        for c in self.coefficients:
            if c.tangible is None or c.layer == 0:
                raise ValueError("witness coefficients must be finite with nonzero layer")

    def coefficient_map(self):
        return dict(zip(self.support, self.coefficients))

    def __str__(self):
        pairs = ", ".join(f"{i}: {c}" for i, c in zip(self.support, self.coefficients))
        return "{" + pairs + "}"


def verify_witness(vectors, witness: DependenceWitness) -> bool:
    """Recompute the combination and test every coordinate for layer zero."""
    m = len(vectors)
    if any(i < 0 or i >= m for i in witness.support):
        raise BadIndex("witness support out of range")
    chosen = [vectors[i] for i in witness.support]
    combo = vec_combination(witness.coefficients, chosen)
    return all(x.is_zero_layer for x in combo)


# -- tangible feasibility: difference bounds with strictness ----------------

_INF = None  # absent bound


def _tighter(a, b):
    """min of two (bound, strict) pairs, None meaning +infinity."""
    if a is _INF:
        return b
    if b is _INF:
        return a
    if a[0] != b[0]:
        return a if a[0] < b[0] else b
    return a if a[1] else b


def _pair_add(a, b):
    if a is _INF or b is _INF:
        return _INF
    return (a[0] + b[0], a[1] or b[1])


class _DBM:
    """Closure of constraints ``x_a - x_b <= c`` (optionally strict)."""

    __slots__ = ("k", "cell")

    def __init__(self, k, cell=None):
        self.k = k
        self.cell = cell if cell is not None else [[_INF] * k for _ in range(k)]

    def copy(self):
        return _DBM(self.k, [row[:] for row in self.cell])

    def add(self, a, b, bound, strict) -> bool:
        """Insert ``x_a - x_b <= bound``; False when it closes a negative cycle."""
        new = (bound, strict)
        cur = self.cell[a][b]
        if cur is not _INF and _tighter(cur, new) is cur:
            return True
        cell = self.cell
        k = self.k
        for p in range(k):
            pa = cell[p][a] if p != a else (Fraction(0), False)
            if pa is _INF:
                continue
            for q in range(k):
                bq = cell[b][q] if q != b else (Fraction(0), False)
                if bq is _INF:
                    continue
                cand = _pair_add(_pair_add(pa, new), bq)
                if p == q:
                    if cand[0] < 0 or (cand[0] == 0 and cand[1]):
                        return False
                    continue
                cell[p][q] = _tighter(cell[p][q], cand)
        return True

    def constraints(self):
        for a in range(self.k):
            for b in range(self.k):
                if a != b and self.cell[a][b] is not _INF:
                    c, strict = self.cell[a][b]
                    yield a, b, c, strict


def _realize(dbm: _DBM):
    """A rational point satisfying every stored constraint."""
    k = dbm.k
    edges = list(dbm.constraints())
    # Bellman-Ford from a virtual source with (value, strict-steps) weights.
    dist = [(Fraction(0), 0)] * k
    for _ in range(k + 1):
        changed = False
        for a, b, c, strict in edges:
            cand = (dist[b][0] + c, dist[b][1] - (1 if strict else 0))
            if cand[0] < dist[a][0] or (cand[0] == dist[a][0] and cand[1] < dist[a][1]):
                dist[a] = cand
                changed = True
        if not changed:
            break
    else:
        raise RuntimeError("unexpected negative cycle in a feasible system")
    # x_a = c_a + m_a * eps for a small enough positive rational eps.
    eps_bound = Fraction(1)
    for a, b, c, strict in edges:
        gap = dist[b][0] + c - dist[a][0]
        slope = dist[a][1] - dist[b][1] + (1 if strict else 0)
        if gap > 0 and slope > 0:
            eps_bound = min(eps_bound, Fraction(gap, 2 * slope))
    return [dist[a][0] + dist[a][1] * eps_bound for a in range(k)]


# -- layer feasibility: exact nullspace with an everywhere-nonzero vector ---


def _nullspace(rows, ncols, ring: LayerRing):
    """Basis of the solution space of a homogeneous system over a field."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for rr in range(r, len(mat)):
            if mat[rr][c]:
                pivot = rr
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = ring.inverse_or_none(mat[r][c])
        mat[r] = [x * inv for x in mat[r]]
        for rr in range(len(mat)):
            if rr != r and mat[rr][c]:
                f = mat[rr][c]
                mat[rr] = [x - f * y for x, y in zip(mat[rr], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ring.zero] * ncols
        vec[fc] = ring.one
        for rr, pc in enumerate(pivots):
            vec[pc] = -mat[rr][fc]
        basis.append(vec)
    return basis


def _all_nonzero_combination(basis, ncols, ring: LayerRing):
    """Deterministic nullspace vector with no zero coordinate, if one exists."""
    if not basis:
        return None
    for c in range(ncols):
        if all(not vec[c] for vec in basis):
            return None
    s = 1
    while True:
        weight = ring.one
        combo = [ring.zero] * ncols
        for vec in basis:
            combo = [acc + weight * x for acc, x in zip(combo, vec)]
            weight = weight * s
        if all(x for x in combo):
            return combo
        s += 1


# -- the search itself -------------------------------------------------------


def _nonempty_subsets(indices):
    """All nonempty subsets in increasing bitmask order."""
    out = []
    for mask in range(1, 1 << len(indices)):
        out.append(tuple(indices[p] for p in range(len(indices)) if mask >> p & 1))
    return out


def _search_support(vectors, ring, support):
    k = len(support)
    n = len(vectors[0])
    coords = []
    for j in range(n):
        finite = [p for p, i in enumerate(support) if vectors[i][j].tangible is not None]
        if finite:
            coords.append((j, finite))

    tangibles = {
        (p, j): vectors[i][j].tangible
        for p, i in enumerate(support)
        for j in range(n)
        if vectors[i][j].tangible is not None
    }
    layers = {
        (p, j): vectors[i][j].layer
        for p, i in enumerate(support)
        for j in range(n)
        if vectors[i][j].tangible is not None
    }

    options = []
    for j, finite in coords:
        subs = []
        for cand in _nonempty_subsets(finite):
            if len(cand) == 1 and layers[(cand[0], j)] != 0:
                continue  # a lone nonzero-layer term can never cancel
            subs.append(cand)
        if not subs:
            return None
        options.append((j, finite, subs))

    chosen = [None] * len(options)

    def descend(level, dbm):
        if level == len(options):
            eqs = []
            for (j, _finite, _subs), dom in zip(options, chosen):
                eqs.append([layers[(p, j)] if p in dom else ring.zero for p in range(k)])
            combo = _all_nonzero_combination(_nullspace(eqs, k, ring), k, ring)
            if combo is None:
                return None
            xs = _realize(dbm)
            return [ELTValue(xs[p], combo[p]) for p in range(k)]
        j, finite, subs = options[level]
        for dom in subs:
            branch = dbm.copy()
            rep = dom[0]
            ok = True
            for p in dom[1:]:
                # x_rep + t_rep = x_p + t_p
                diff = tangibles[(p, j)] - tangibles[(rep, j)]
                if not branch.add(rep, p, diff, False) or not branch.add(p, rep, -diff, False):
                    ok = False
                    break
            if ok:
                for p in finite:
                    if p in dom:
                        continue
                    # x_p + t_p < x_rep + t_rep
                    if not branch.add(p, rep, tangibles[(rep, j)] - tangibles[(p, j)], True):
                        ok = False
                        break
            if not ok:
                continue
            chosen[level] = dom
            found = descend(level + 1, branch)
            if found is not None:
                return found
        return None

    return descend(0, _DBM(k))


def find_dependence_witness(
    vectors,
    ring: LayerRing,
    *,
    max_vectors: int = DEFAULT_WITNESS_BOUND,
    max_dim: int = DEFAULT_WITNESS_BOUND,
):
    """First witness in search order, or ``None`` after exhausting patterns."""
    if not ring.is_field:
        raise NotAField("witness search needs a layer field")
    m = len(vectors)
    if m == 0:
        return None
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionMismatch("vectors of equal length")
    if m > max_vectors or n > max_dim:
        raise SizeBound(f"witness bounds are {max_vectors} vectors of dimension {max_dim}")

    for size in range(1, m + 1):
        for support in combinations(range(m), size):
            coeffs = _search_support(vectors, ring, support)
            if coeffs is not None:
                witness = DependenceWitness(support, tuple(coeffs))
                if not verify_witness(vectors, witness):
                    raise RuntimeError("internal error: found witness failed verification")
                return witness
    return None


def is_dependent(vectors, ring, **bounds) -> bool:
    return find_dependence_witness(vectors, ring, **bounds) is not None


# -- rank notions built on the witness finder --------------------------------


def row_rank(A: ELTMatrix, **bounds) -> int:
    return _independence_rank(A.rows, A.ring, **bounds)


def column_rank(A: ELTMatrix, **bounds) -> int:
    return _independence_rank(A.cols, A.ring, **bounds)


def _independence_rank(vectors, ring, **bounds) -> int:
    """Largest k such that some k of the vectors admit no witness."""
    for k in range(len(vectors), 0, -1):
        for subset in combinations(range(len(vectors)), k):
            if find_dependence_witness([vectors[i] for i in subset], ring, **bounds) is None:
                return k
    return 0


@dataclass(frozen=True)
class RankReport:
    """The three intra-matrix rank notions plus certifying data."""

    row_rank: int
    column_rank: int
    submatrix_rank: int
    nonsingular_rows: tuple | None
    nonsingular_cols: tuple | None
    row_dependence: DependenceWitness | None
    column_dependence: DependenceWitness | None


def rank_report(A: ELTMatrix, **bounds) -> RankReport:
    from .matrices import submatrix_rank as _submatrix_rank

    rr = row_rank(A, **bounds)
    cr = column_rank(A, **bounds)
    sr, wit = _submatrix_rank(A, with_witness=True)
    row_dep = None
    if rr < A.nrows:
        for subset in combinations(range(A.nrows), rr + 1):
            w = find_dependence_witness([A.row(i) for i in subset], A.ring, **bounds)
            if w is not None:
                row_dep = DependenceWitness(
                    tuple(subset[i] for i in w.support), w.coefficients
                )
                break
    col_dep = None
    if cr < A.ncols:
        for subset in combinations(range(A.ncols), cr + 1):
            w = find_dependence_witness([A.col(j) for j in subset], A.ring, **bounds)
            if w is not None:
                col_dep = DependenceWitness(
                    tuple(subset[i] for i in w.support), w.coefficients
                )
                break
    return RankReport(
        row_rank=rr,
        column_rank=cr,
        submatrix_rank=sr,
        nonsingular_rows=wit[0] if wit else None,
        nonsingular_cols=wit[1] if wit else None,
        row_dependence=row_dep,
        column_dependence=col_dep,
    )
