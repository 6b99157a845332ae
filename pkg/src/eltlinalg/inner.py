"""Inner products, orthogonality, Gram matrices and their inequalities.

Everything here works over a layer ring with conjugation (the Gaussian
rationals in practice).  The standard inner product conjugates the second
slot coordinatewise; orthogonality means the product is zero-layered.  The
tangible halves of the classical inequalities hold, and both equality
characterizations are computed explicitly so callers can check them against
the raw values.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DimensionMismatch, NotOrthogonal, NotOrthonormal
from .layers import LayerRing, QI
from .matrices import ELTMatrix, identity, vec_combination
from .scalars import ELTValue, NEG_INF, elt_sum
from .witness import find_dependence_witness


def conj(x: ELTValue, ring: LayerRing = QI) -> ELTValue:
    """Layer conjugation; tangible untouched, -inf fixed."""
    if x.tangible is None:
        return x
    return ELTValue(x.tangible, ring.conj(x.layer))


def conj_vector(v, ring: LayerRing = QI):
    return tuple(conj(x, ring) for x in v)


def standard_inner(u, v, ring: LayerRing = QI) -> ELTValue:
    if len(u) != len(v):
        raise DimensionMismatch("inner product of unequal lengths")
    return elt_sum(a * conj(b, ring) for a, b in zip(u, v))


def is_orthogonal(u, v, ring: LayerRing = QI) -> bool:
    return standard_inner(u, v, ring).is_zero_layer


def gram(vectors, ring: LayerRing = QI) -> ELTMatrix:
    """Matrix of pairwise inner products; conjugate-symmetric by construction."""
    return ELTMatrix(
        (tuple(standard_inner(a, b, ring) for b in vectors) for a in vectors), ring
    )


@dataclass(frozen=True)
class CSReport:
    """Both sides of the squared inequality plus the equality certificates.

    ``common_argmax`` lists the coordinates where both vectors attain their
    maximal tangible; tangible equality holds exactly when it is nonempty.
    ``s_u``/``s_v`` are the dominant-coordinate layer profiles; full equality
    additionally needs them linearly dependent over the layer field.
    """

    lhs: ELTValue
    rhs: ELTValue
    t_equal: bool
    common_argmax: tuple
    s_u: tuple
    s_v: tuple
    full_equal: bool


def _argmax_profile(v, ring):
    tangibles = [x.tangible for x in v]
    finite = [t for t in tangibles if t is not None]
    peak = max(finite) if finite else None
    where = tuple(i for i, t in enumerate(tangibles) if t == peak)
    profile = tuple(
        v[i].layer if (tangibles[i] == peak and tangibles[i] is not None) else ring.zero
        for i in range(len(v))
    )
    return peak, where, profile


def cauchy_schwarz_check(u, v, ring: LayerRing = QI) -> CSReport:
    if len(u) != len(v):
        raise DimensionMismatch("vectors of unequal lengths")
    uv = standard_inner(u, v, ring)
    lhs = uv * uv
    rhs = standard_inner(u, u, ring) * standard_inner(v, v, ring)
    peak_u, arg_u, s_u = _argmax_profile(u, ring)
    peak_v, arg_v, s_v = _argmax_profile(v, ring)
    common = tuple(sorted(set(arg_u) & set(arg_v)))
    t_equal = lhs.tangible == rhs.tangible
    dependent = all(
        s_u[i] * s_v[j] == s_u[j] * s_v[i]
        for i, j in combinations(range(len(u)), 2)
    )
    return CSReport(
        lhs=lhs,
        rhs=rhs,
        t_equal=t_equal,
        common_argmax=common,
        s_u=s_u,
        s_v=s_v,
        full_equal=t_equal and dependent,
    )


def check_orthonormal(vectors, ring: LayerRing = QI) -> None:
    one = ELTValue(0, ring.one)
    for i, a in enumerate(vectors):
        if standard_inner(a, a, ring) != one:
            raise NotOrthonormal(f"vector {i} has self-product != 0~1")
        for j in range(i + 1, len(vectors)):
            if not is_orthogonal(a, vectors[j], ring):
                raise NotOrthonormal(f"vectors {i} and {j} are not orthogonal")


def project(basis, v, ring: LayerRing = QI):
    """Projection onto a verified orthonormal family."""
    check_orthonormal(basis, ring)
    if any(len(b) != len(v) for b in basis):
        raise DimensionMismatch("basis and vector dimensions differ")
    coeffs = [standard_inner(v, b, ring) for b in basis]
    return vec_combination(coeffs, list(basis))


@dataclass(frozen=True)
class BesselReport:
    projection: tuple
    projection_norm_t: object  # tangible of <u,u>; None stands for -inf
    vector_norm_t: object
    equality: bool
    criterion_holds: bool


def bessel_check(basis, v, ring: LayerRing = QI) -> BesselReport:
    u = project(basis, v, ring)
    uu = standard_inner(u, u, ring)
    vv = standard_inner(v, v, ring)
    criterion = any(
        (standard_inner(v, b, ring) ** 2).tangible == vv.tangible for b in basis
    )
    return BesselReport(
        projection=u,
        projection_norm_t=uu.tangible,
        vector_norm_t=vv.tangible,
        equality=uu.tangible == vv.tangible,
        criterion_holds=criterion,
    )


def extend_orthogonal(vectors, ring: LayerRing = QI, **bounds):
    """One more pure vector orthogonal to a pure pairwise-orthogonal family.

    Follows the Gramian construction: stack the conjugated inputs against the
    standard-basis Gramian and read a column dependence witness as the new
    vector's coordinates (absent coordinates become -inf).
    """
    if not vectors:
        raise NotOrthogonal("need at least one input vector")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionMismatch("vectors of unequal lengths")
    if len(vectors) >= n:
        raise DimensionMismatch("the family already has full dimension")
    for v in vectors:
        if any(x.tangible is not None and x.layer == 0 for x in v):
            raise NotOrthogonal("inputs must be pure")
        if all(x.tangible is None for x in v):
            raise NotOrthogonal("inputs must be nonzero")
    for a, b in combinations(vectors, 2):
        if not is_orthogonal(a, b, ring):
            raise NotOrthogonal("inputs must be pairwise orthogonal")

    g_t = gram([tuple(identity(n, ring).row(i)) for i in range(n)], ring).transpose()
    stacked = ELTMatrix([conj_vector(v, ring) for v in vectors], ring) @ g_t
    w = find_dependence_witness(stacked.cols, ring, **bounds)
    if w is None:
        raise RuntimeError("internal error: columns of a wide matrix must be dependent")
    by_coord = w.coefficient_map()
    new = tuple(by_coord.get(j, NEG_INF) for j in range(n))
    for v in vectors:
        if not is_orthogonal(new, v, ring):
            raise RuntimeError("internal error: extension is not orthogonal")
    return new


@dataclass(frozen=True)
class OrthogonalityReport:
    paper_family_dependent: bool
    orthogonal_families_independent: bool
    gram_converse_fails: bool

    @property
    def all_pass(self):
        return (
            self.paper_family_dependent
            and self.orthogonal_families_independent
            and self.gram_converse_fails
        )


def dependence_vs_orthogonality_suite(ring: LayerRing = QI, samples: int = 25, seed: int = 0):
    """Exercise the three contrasts between orthogonality and dependence.

    An orthogonal-to-a-set vector can still create dependence (the worked
    three-vector family); pure orthogonal families are always independent;
    and a nonsingular Gramian forces independence while the converse fails.
    """
    import random

    from .layers import GaussianRational
    from .matrices import det
    from .witness import verify_witness, DependenceWitness
    from fractions import Fraction

    def ev(t, layer_re, layer_im=0):
        return ELTValue(Fraction(t), GaussianRational(layer_re, layer_im))

    v1 = (ev(2, 1), ev(2, -1), ev(1, -1))
    v2 = (ev(2, -1), ev(2, 1), ev(1, -1))
    v3 = (ev(1, 1), ev(1, 1), ev(1, 2))
    trio_witness = DependenceWitness(
        (0, 1, 2), (ev(0, 1), ev(0, 1), ev(0, 1))
    )
    paper_ok = (
        verify_witness([v1, v2, v3], trio_witness)
        and is_orthogonal(v1, v3, ring)
        and is_orthogonal(v2, v3, ring)
        and find_dependence_witness([v1, v2], ring) is None
    )

    rng = random.Random(seed)
    independent_ok = True
    for _ in range(samples):
        n = rng.choice([2, 3])
        start = tuple(
            ELTValue(Fraction(rng.randint(-2, 2)), ring.sample(rng, nonzero=True))
            for _ in range(n)
        )
        family = [start]
        while len(family) < n:
            family.append(extend_orthogonal(family, ring))
        if find_dependence_witness(family, ring) is not None:
            independent_ok = False
            break

    u = (ev(2, 1), ev(0, 1))
    v = (ev(2, 1), ev(1, 1))
    converse_ok = (
        find_dependence_witness([u, v], ring) is None
        and det(gram([u, v], ring)).is_zero_layer
    )
    return OrthogonalityReport(paper_ok, independent_ok, converse_ok)
