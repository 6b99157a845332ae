"""Exact scalar arithmetic for layered max-plus values.

An ``ELTValue`` is either the additive identity ``NEG_INF`` or a pair of a
rational *tangible* value and a *layer* drawn from some layer ring.  Addition
keeps the larger tangible and sums layers on ties; multiplication adds
tangibles and multiplies layers.  The layer ``0`` marks degenerate ("ghost")
values; ``NEG_INF`` also carries layer 0.

Values are immutable and ring-agnostic: layer arithmetic goes through the
native ``+``/``*`` of the element type, so one computation should stay inside
a single ring.  Operations that genuinely need ring knowledge (inversion)
take the ring as an argument.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAField, ZeroLayerNotInvertible
from .layers import LayerRing


class ELTValue:
    """A layered tropical scalar; ``tangible is None`` marks the -inf element.

    The tangible slot of the -inf element is a bottom marker, never a number;
    arithmetic below is written so it is never compared or added.
    """

    __slots__ = ("tangible", "layer")

    def __init__(self, tangible, layer):
        if tangible is not None and not isinstance(tangible, Fraction):
            tangible = Fraction(tangible)
        object.__setattr__(self, "tangible", tangible)
        object.__setattr__(self, "layer", layer)

    def __setattr__(self, name, value):
        raise AttributeError("ELTValue is immutable")

    @property
    def is_neg_inf(self) -> bool:
        return self.tangible is None

    @property
    def is_zero_layer(self) -> bool:
        """Whether the sorting map gives 0 (true for -inf by convention)."""
        return self.tangible is None or self.layer == 0

    def __add__(self, other):
        if not isinstance(other, ELTValue):
            return NotImplemented
        if self.tangible is None:
            return other
        if other.tangible is None:
            return self
        if self.tangible > other.tangible:
            return self
        if self.tangible < other.tangible:
            return other
        return ELTValue(self.tangible, self.layer + other.layer)

    def __mul__(self, other):
        if not isinstance(other, ELTValue):
            return NotImplemented
        if self.tangible is None or other.tangible is None:
            return NEG_INF
        return ELTValue(self.tangible + other.tangible, self.layer * other.layer)

    def __neg__(self):
        """The negation map: tangible kept, layer negated."""
        if self.tangible is None:
            return self
        return ELTValue(self.tangible, -self.layer)

    def __sub__(self, other):
        """``x + (-)y`` in the negation-map sense, not an additive inverse."""
        if not isinstance(other, ELTValue):
            return NotImplemented
        return self + (-other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if n == 0:
            return ELTValue(0, self.layer * 0 + 1)
        acc = self
        for _ in range(n - 1):
            acc = acc * self
        return acc

    def circ(self):
        """Zero-layer companion: same tangible, layer 0."""
        if self.tangible is None:
            return self
        return ELTValue(self.tangible, self.layer * 0)

    def surpasses(self, other: "ELTValue") -> bool:
        """Decide ``self |= other`` by the closed form.

        True iff the values are equal, or ``self`` is zero-layered and either
        ``other`` is -inf or both are finite with a strictly larger tangible
        on the left.  Validated against the existential-witness oracle.
        """
        if self == other:
            return True
        if self.tangible is None or self.layer != 0:
            return False
        if other.tangible is None:
            return True
        return self.tangible > other.tangible

    def balances(self, other: "ELTValue") -> bool:
        """Whether ``self + (-)other`` lands in the zero-layer set."""
        return (self - other).is_zero_layer

    def inverse(self, ring: LayerRing) -> "ELTValue":
        """Multiplicative inverse ``[-t]^(1/layer)`` for unit layers."""
        if self.tangible is None or self.layer == 0:
            raise ZeroLayerNotInvertible("zero-layer values have no inverse")
        inv = ring.inverse_or_none(self.layer)
        if inv is None:
            raise NotAField(f"layer {self.layer!r} is not a unit of {ring.name}")
        return ELTValue(-self.tangible, inv)

    def __eq__(self, other):
        if not isinstance(other, ELTValue):
            return NotImplemented
        return self.tangible == other.tangible and self.layer == other.layer

    def __hash__(self):
        return hash((self.tangible, self.layer))

    def __str__(self):
        if self.tangible is None:
            return "-inf"
        return f"{self.tangible}~{self.layer}"

    def __repr__(self):
        return f"ELTValue({self})"


NEG_INF = ELTValue(None, 0)


def finite(tangible, layer) -> ELTValue:
    """Build a finite value; rejects the bottom marker."""
    if tangible is None:
        raise ValueError("use NEG_INF for the -inf element")
    return ELTValue(tangible, layer)


def elt_sum(values) -> ELTValue:
    acc = NEG_INF
    for v in values:
        acc = acc + v
    return acc


def elt_prod(values) -> ELTValue:
    acc = None
    for v in values:
        acc = v if acc is None else acc * v
    if acc is None:
        raise ValueError("empty product has no identity without a ring")
    return acc
