"""Exact layered-tropical (ELT) linear algebra.

Scalars pair a rational max-plus tangible with a layer from an exact ring;
matrices get determinants by permutation expansion, dependence witnesses by
exhaustive search, three coinciding rank notions, constructive
purification, Puiseux lifts realizing ranks, and inner products over the
Gaussian rationals.  Everything is exact; nothing is floating point.
"""

from .errors import (
    BadIndex,
    DimensionMismatch,
    EltError,
    InvalidWitness,
    NoConjugation,
    NotAField,
    NotIntegralDomain,
    NotOrthogonal,
    NotOrthonormal,
    NotSingular,
    NotSquare,
    NotSquareSelection,
    ParseError,
    SizeBound,
    ZeroLayerEntry,
    ZeroLayerNotInvertible,
)
from .layers import GaussianRational, LayerRing, Q, QI, RINGS, Z, ring_by_name
from .scalars import ELTValue, NEG_INF, elt_prod, elt_sum, finite
from .matrices import (
    ELTMatrix,
    det,
    identity,
    invert_matrix,
    is_generalized_permutation,
    is_rank_one,
    is_singular,
    minor,
    submatrix_rank,
    vec_combination,
    verify_barvinok_decomposition,
)
from .witness import (
    DependenceWitness,
    RankReport,
    column_rank,
    find_dependence_witness,
    is_dependent,
    rank_report,
    row_rank,
    verify_witness,
)
from .purify import DesingularizationTrace, desingularize_pure, purify_dependent_rows
from .puiseux import (
    PuiseuxMatrix,
    PuiseuxPoly,
    det_puiseux,
    eltrop,
    eltrop_matrix,
    kapranov_bounds,
    lift_dependent_matrix,
    naive_monomial_lift,
    puiseux_rank,
)
from .tropical import TropicalMatrix, TropicalRankResult, assign_layers, elt_rank_tropical
from .inner import (
    BesselReport,
    CSReport,
    bessel_check,
    cauchy_schwarz_check,
    conj,
    dependence_vs_orthogonality_suite,
    extend_orthogonal,
    gram,
    is_orthogonal,
    project,
    standard_inner,
)
from .oracles import OracleConfig, dependence_oracle, lift_rank_oracle, surpass_oracle

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
