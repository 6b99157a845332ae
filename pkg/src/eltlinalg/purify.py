"""Constructive purification: replace zero-layer entries, keep the defect.

Both operations turn a matrix with finite zero-layer entries into a *pure*
matrix (entries nonzero-layered or -inf) surpassed by the input, preserving
singularity respectively row dependence.  Purity matters because only pure
matrices are tropicalizations of Puiseux matrices, so these are the bridges
to the lifting constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidWitness, NotAField, NotSingular
from .matrices import DEFAULT_DET_BOUND, ELTMatrix, det, signed_permutations
from .scalars import ELTValue, NEG_INF, elt_sum
from .witness import DependenceWitness, verify_witness


@dataclass(frozen=True)
class DesingularizationTrace:
    """How a singular matrix was purified.

    Cases follow the structure of the determinant's dominant tracks:
    1 -- the determinant is -inf; 2 -- some dominant track is
    nonzero-layered (erasing zero-layer entries keeps the determinant);
    3 -- every dominant track is zero-layered and fresh values are solved
    for the zero-layer positions.  For case 3 the trace records the
    variable positions, the nonzero-layered permutations ``x1``, the
    dominating zero-layered permutations ``x2``, the nonzero-track sum
    ``beta``, the common shift ``delta``, the solved tangibles (``None``
    marks an entry replaced by -inf), the layer polynomial as
    ``(constant, ((variable-index tuple, coefficient), ...))`` and the
    chosen layer assignment.
    """

    case: int
    variable_positions: tuple = ()
    x1: tuple = ()
    x2: tuple = ()
    beta: ELTValue | None = None
    delta: Fraction | None = None
    tangibles: tuple | None = None
    layer_poly: tuple | None = None
    assignment: tuple | None = None


def _erase_zero_layers(A: ELTMatrix) -> ELTMatrix:
    return A.map(lambda x: NEG_INF if (x.tangible is not None and x.layer == 0) else x)


def _tracks(A: ELTMatrix):
    """(permutation, sign, tangible-or-None, layer) for every permutation."""
    n = A.nrows
    out = []
    for perm, sign in signed_permutations(n):
        t = Fraction(0)
        layer = None
        dead = False
        for i in range(n):
            e = A.entries[i][perm[i]]
            if e.tangible is None:
                dead = True
                break
            t += e.tangible
            layer = e.layer if layer is None else layer * e.layer
        if dead:
            out.append((perm, sign, None, None))
        else:
            out.append((perm, sign, t, layer))
    return out


def desingularize_pure(A: ELTMatrix, *, max_size: int = DEFAULT_DET_BOUND):
    """A pure singular matrix surpassed by the singular input, with a trace."""
    ring = A.ring
    if not ring.is_field:
        raise NotAField("desingularization needs a layer field")
    d = det(A, max_size=max_size)
    if not d.is_zero_layer:
        raise NotSingular(f"determinant {d} has nonzero layer")

    variables = tuple(
        (i, j)
        for i in range(A.nrows)
        for j in range(A.ncols)
        if A.entries[i][j].tangible is not None and A.entries[i][j].layer == 0
    )

    if d.tangible is None:
        B = _erase_zero_layers(A)
        trace = DesingularizationTrace(case=1, variable_positions=variables)
        return _checked(A, B, trace, max_size)

    tracks = _tracks(A)
    dominant = [tr for tr in tracks if tr[2] == d.tangible]
    if any(layer != 0 for _, _, _, layer in dominant):
        B = _erase_zero_layers(A)
        trace = DesingularizationTrace(case=2, variable_positions=variables)
        return _checked(A, B, trace, max_size)

    # Case 3: every dominant track runs through a zero-layer entry.
    var_index = {pos: p for p, pos in enumerate(variables)}
    x1 = [(perm, sign, t, layer) for perm, sign, t, layer in tracks if t is not None and layer != 0]
    beta = elt_sum(
        ELTValue(t, -layer if sign < 0 else layer) for _, sign, t, layer in x1
    )
    beta_t = beta.tangible

    x2 = []
    for perm, sign, t, layer in tracks:
        if t is None or layer != 0:
            continue
        if beta_t is not None and t <= beta_t:
            continue
        used = frozenset(
            var_index[(i, perm[i])] for i in range(A.nrows) if (i, perm[i]) in var_index
        )
        rest = ring.one
        for i in range(A.nrows):
            if (i, perm[i]) not in var_index:
                rest = rest * A.entries[i][perm[i]].layer
        x2.append((perm, sign, t, used, rest))

    trace_base = dict(
        case=3,
        variable_positions=variables,
        x1=tuple(perm for perm, _, _, _ in x1),
        x2=tuple(perm for perm, _, _, _, _ in x2),
        beta=beta,
    )

    if beta.is_zero_layer:
        # The nonzero-layer tracks already cancel (or are absent): drop every
        # zero-layer entry.
        B = _erase_zero_layers(A)
        trace = DesingularizationTrace(
            **trace_base,
            tangibles=(None,) * len(variables),
            assignment=(None,) * len(variables),
        )
        return _checked(A, B, trace, max_size)

    # Shift every variable by a common delta so the dominating zero-layer
    # tracks descend exactly onto the nonzero-layer level.
    delta = max((t - beta_t) / len(used) for _, _, t, used, _ in x2)
    argmax = [tr for tr in x2 if tr[2] - len(tr[3]) * delta == beta_t]
    monomials: dict[frozenset, object] = {}
    for _, sign, _, used, rest in argmax:
        coeff = -rest if sign < 0 else rest
        monomials[used] = monomials.get(used, ring.zero) + coeff

    nonzero = {V: c for V, c in monomials.items() if c != ring.zero}
    if nonzero:
        v0 = min(nonzero, key=lambda V: (len(V), sorted(V)))
        gamma = nonzero[v0]
        designated = min(v0)
        assignment = [None] * len(variables)
        tangibles = [None] * len(variables)
        for p in sorted(v0):
            tangibles[p] = A.entries[variables[p][0]][variables[p][1]].tangible - delta
            assignment[p] = ring.one
        inv = ring.inverse_or_none(gamma)
        assignment[designated] = -beta.layer * inv
        used_delta = delta
    else:
        # Every dominant class cancels on its own; step into the open cell
        # just below delta, where the surviving classes still cancel for any
        # layer choice.  (The minimal-monomial recipe needs a surviving
        # monomial; here there is none.)
        k_max = max(len(tr[3]) for tr in argmax)
        lo = Fraction(0)
        for _, _, t, used, _ in x2:
            k = len(used)
            if k > k_max:
                cross = (t - beta_t - k_max * delta) / (k - k_max)
                if cross > lo:
                    lo = cross
        used_delta = (lo + delta) / 2
        tangibles = [
            A.entries[i][j].tangible - used_delta for (i, j) in variables
        ]
        assignment = [ring.one] * len(variables)

    rows = [list(r) for r in A.entries]
    for p, (i, j) in enumerate(variables):
        if assignment[p] is None:
            rows[i][j] = NEG_INF
        else:
            rows[i][j] = ELTValue(tangibles[p], assignment[p])
    B = ELTMatrix(rows, ring)
    trace = DesingularizationTrace(
        **trace_base,
        delta=used_delta,
        tangibles=tuple(tangibles),
        layer_poly=(beta.layer, tuple(sorted((tuple(sorted(V)), c) for V, c in monomials.items()))),
        assignment=tuple(assignment),
    )
    return _checked(A, B, trace, max_size)


def _checked(A, B, trace, max_size):
    if not B.is_pure():
        raise RuntimeError("internal error: purified matrix is not pure")
    if not det(B, max_size=max_size).is_zero_layer:
        raise RuntimeError("internal error: purified matrix is not singular")
    if not A.surpasses(B):
        raise RuntimeError("internal error: input does not surpass the purified matrix")
    return B, trace


def purify_dependent_rows(A: ELTMatrix, witness: DependenceWitness) -> ELTMatrix:
    """Pure matrix surpassed by ``A`` on which the row witness still verifies.

    Column by column: when some dominant term of the witnessed combination
    has nonzero layer, the zero-layer entries of the column simply drop to
    -inf; otherwise the smallest dominant zero-layer position receives the
    negated, coefficient-normalized sum of the nonzero-layer terms, which
    restores the cancellation one level down.
    """
    ring = A.ring
    if not ring.is_field:
        raise NotAField("row purification needs a layer field")
    if not verify_witness(A.rows, witness):
        raise InvalidWitness("witness does not verify on the input rows")

    coeff = witness.coefficient_map()
    rows = [list(r) for r in A.entries]
    for j in range(A.ncols):
        terms = {}
        for i, a in coeff.items():
            e = A.entries[i][j]
            if e.tangible is not None:
                terms[i] = a * e
        peak = max((v.tangible for v in terms.values()), default=None)
        dominant = [i for i, v in terms.items() if v.tangible == peak]
        corrective = peak is not None and all(A.entries[i][j].layer == 0 for i in dominant)
        k = min(dominant) if corrective else None
        for i in range(A.nrows):
            e = A.entries[i][j]
            if e.tangible is None or e.layer != 0:
                continue
            if i == k:
                s = elt_sum(
                    coeff[l] * A.entries[l][j]
                    for l in coeff
                    if A.entries[l][j].tangible is not None and A.entries[l][j].layer != 0
                )
                if s.is_zero_layer:
                    rows[i][j] = NEG_INF
                else:
                    rows[i][j] = ELTValue(0, -ring.one) * coeff[k].inverse(ring) * s
            else:
                rows[i][j] = NEG_INF

    B = ELTMatrix(rows, ring)
    if not B.is_pure():
        raise RuntimeError("internal error: purified matrix is not pure")
    if not A.surpasses(B):
        raise RuntimeError("internal error: input does not surpass the purified matrix")
    if not verify_witness(B.rows, witness):
        raise RuntimeError("internal error: witness lost in purification")
    return B
