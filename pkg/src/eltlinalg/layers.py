"""Layer rings: the coefficient structure sitting above every tangible value.

Three rings ship with the library, selected by name in all text formats:

* ``Z``  -- the integers (not a field; exercises the integral-domain paths),
* ``Q``  -- the rationals,
* ``Qi`` -- the Gaussian rationals, the only ring with a conjugation, used by
  the inner-product module.

Ring elements are plain Python values (``int``, ``Fraction``,
``GaussianRational``) so ordinary ``+``/``*``/``-``/``==`` work on them; the
``LayerRing`` object supplies everything that needs ring-level knowledge:
parsing, printing, unit inversion, conjugation and sampling.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NoConjugation, ParseError


class GaussianRational:
    """A Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational((self.re * o.re + self.im * o.im) / n,
                                (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        # Must agree with int/Fraction hashing when the value is real.
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        """a^2 + b^2, a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")
# layer := rational | rational sign rational i | rational i
_COMPLEX_RE = re.compile(r"^(-?\d+(?:/\d+)?)([+-]\d+(?:/\d+)?)i$")
_IMAG_RE = re.compile(r"^(-?\d+(?:/\d+)?)i$")


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"bad rational {text!r}")
    return Fraction(text)


class LayerRing:
    """A commutative ring with exact equality, used as the layer structure.

    Subclasses fix the element representation and fill in the capability
    flags.  ``conj``/``nonneg_self_conjugate`` are only available when
    ``has_conjugation`` is true.
    """

    name: str
    is_field: bool
    is_integral_domain: bool
    has_conjugation: bool = False

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == self.zero

    def inverse_or_none(self, x):
        """Multiplicative inverse of ``x`` if it is a unit, else ``None``."""
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        return self.inverse_or_none(x) is not None

    def conj(self, x):
        raise NoConjugation(f"ring {self.name} has no conjugation")

    def nonneg_self_conjugate(self, x) -> bool:
        """Whether a self-conjugate product (such as x*conj(x)) is >= 0."""
        raise NoConjugation(f"ring {self.name} has no conjugation")

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def sample(self, rng, *, nonzero=False):
        """Draw a small element; deterministic given the rng state."""
        raise NotImplementedError

    def __repr__(self):
        return f"<LayerRing {self.name}>"


class IntegerRing(LayerRing):
    name = "Z"
    is_field = False
    is_integral_domain = True

    zero = 0
    one = 1

    def inverse_or_none(self, x):
        return x if x in (1, -1) else None

    def parse(self, text):
        if not re.match(r"^-?\d+$", text):
            raise ParseError(f"bad integer layer {text!r}")
        return int(text)

    def format(self, x):
        return str(x)

    def sample(self, rng, *, nonzero=False):
        pool = [-3, -2, -1, 1, 2, 3] if nonzero else [-3, -2, -1, 0, 1, 2, 3]
        return rng.choice(pool)


class RationalRing(LayerRing):
    name = "Q"
    is_field = True
    is_integral_domain = True

    zero = Fraction(0)
    one = Fraction(1)

    def inverse_or_none(self, x):
        return None if x == 0 else 1 / Fraction(x)

    def parse(self, text):
        return parse_rational(text)

    def format(self, x):
        return str(Fraction(x))

    def sample(self, rng, *, nonzero=False):
        num = rng.choice([-3, -2, -1, 1, 2, 3] if nonzero else [-3, -2, -1, 0, 1, 2, 3])
        den = rng.choice([1, 1, 1, 2])
        return Fraction(num, den)


class GaussianRationalRing(LayerRing):
    name = "Qi"
    is_field = True
    is_integral_domain = True
    has_conjugation = True

    zero = GaussianRational(0, 0)
    one = GaussianRational(1, 0)

    def inverse_or_none(self, x):
        x = x if isinstance(x, GaussianRational) else GaussianRational(x, 0)
        return None if not x else GaussianRational(1, 0) / x

    def conj(self, x):
        x = x if isinstance(x, GaussianRational) else GaussianRational(x, 0)
        return x.conjugate()

    def nonneg_self_conjugate(self, x):
        x = x if isinstance(x, GaussianRational) else GaussianRational(x, 0)
        return x.im == 0 and x.re >= 0

    def parse(self, text):
        m = _COMPLEX_RE.match(text)
        if m:
            return GaussianRational(Fraction(m.group(1)), Fraction(m.group(2)))
        m = _IMAG_RE.match(text)
        if m:
            return GaussianRational(0, Fraction(m.group(1)))
        if _RATIONAL_RE.match(text):
            return GaussianRational(Fraction(text), 0)
        raise ParseError(f"bad Gaussian rational layer {text!r}")

    def format(self, x):
        x = x if isinstance(x, GaussianRational) else GaussianRational(x, 0)
        return str(x)

    def sample(self, rng, *, nonzero=False):
        while True:
            re_part = rng.choice([-2, -1, 0, 1, 2])
            im_part = rng.choice([-2, -1, 0, 0, 1, 2])
            g = GaussianRational(re_part, im_part)
            if g or not nonzero:
                return g


Z = IntegerRing()
Q = RationalRing()
QI = GaussianRationalRing()

RINGS = {"Z": Z, "Q": Q, "Qi": QI}


def ring_by_name(name: str) -> LayerRing:
    try:
        return RINGS[name]
    except KeyError:
        raise ParseError(f"unknown layer ring {name!r} (expected Z, Q or Qi)") from None
