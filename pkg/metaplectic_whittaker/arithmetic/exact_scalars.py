"""
Exact scalars: Gaussian rationals, the quadratic extension by sqrt(q), and
phase-carrying values.

Satake parameters and beta live in Q(i). Whittaker values specialised at
such parameters live in Q(i)(sqrt q) because of the q^{-1/2} factors, and
the Weil-index prefactor multiplies them by an element of {+-1, +-g}.
"""
import re
from fractions import Fraction
from math import isqrt
from typing import Tuple, Union

from .field_arith import FieldConfig, Phase
from ..utils.errors import InvalidInput

RationalLike = Union[int, Fraction]

_TERM = re.compile(r'([+-]?)(\d+(?:/\d+)?)?(i?)(?:/(\d+))?')


class GaussianRational:
    """a + b*i with a, b rational"""

    __slots__ = ('re', 'im')

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> 'GaussianRational':
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise InvalidInput(f"Cannot interpret {value!r} as a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> 'GaussianRational':
        """
        Parse '3', '-2/5', 'i', '-3/4i', '1/2+3/4i', '2i/5', '(1+2i)/5'.

        Each term may carry its own denominator; a parenthesised numerator
        followed by '/c' divides both parts.
        """
        raw = text
        text = text.strip().replace(' ', '').replace('*', '')
        if not text:
            raise InvalidInput("Empty scalar")
        if text.startswith('('):
            close = text.find(')')
            if close < 0:
                raise InvalidInput(f"Unbalanced parentheses in {raw!r}")
            inner = cls.parse(text[1:close])
            rest = text[close + 1:]
            if not rest:
                return inner
            if not rest.startswith('/'):
                raise InvalidInput(f"Unrecognized scalar {raw!r}")
            try:
                denominator = Fraction(rest[1:])
            except (ValueError, ZeroDivisionError):
                raise InvalidInput(f"Unrecognized scalar {raw!r}")
            if denominator == 0:
                raise InvalidInput(f"Zero denominator in {raw!r}")
            return inner / cls(denominator)

        re_part = Fraction(0)
        im_part = Fraction(0)
        position = 0
        while position < len(text):
            match = _TERM.match(text, position)
            if not match or match.end() == position:
                raise InvalidInput(f"Unrecognized scalar {raw!r}")
            sign, number, imaginary, trailing = match.groups()
            if number is None and not imaginary:
                raise InvalidInput(f"Unrecognized scalar {raw!r}")
            try:
                value = Fraction(number) if number else Fraction(1)
            except ZeroDivisionError:
                raise InvalidInput(f"Zero denominator in {raw!r}")
            if trailing:
                if int(trailing) == 0:
                    raise InvalidInput(f"Zero denominator in {raw!r}")
                value /= int(trailing)
            if sign == '-':
                value = -value
            if imaginary:
                im_part += value
            else:
                re_part += value
            position = match.end()
        return cls(re_part, im_part)

    # Ring operations

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """|z|^2"""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> 'GaussianRational':
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError("Gaussian rational zero has no inverse")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _lift(other) * self.inverse()

    def __pow__(self, exponent: int) -> 'GaussianRational':
        base = self if exponent >= 0 else self.inverse()
        result = GaussianRational(1)
        power = abs(exponent)
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = _lift(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            imaginary = 'i'
        elif self.im == -1:
            imaginary = '-i'
        else:
            imaginary = f"{self.im}i"
        if self.re == 0:
            return imaginary
        joiner = '' if imaginary.startswith('-') else '+'
        return f"{self.re}{joiner}{imaginary}"


def _lift(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return NotImplemented


class SurdScalar:
    """
    x + y*sqrt(q) with x, y in Q(i).

    For perfect-square q the surd is folded into x so that the
    representation stays unique.
    """

    __slots__ = ('x', 'y', 'q', '_root')

    def __init__(self, x=0, y=0, q: int = 1):
        self.q = q
        root = isqrt(q)
        self._root = root if root * root == q else None
        x = GaussianRational.coerce(x)
        y = GaussianRational.coerce(y)
        if self._root is not None:
            x = x + y * root
            y = GaussianRational(0)
        self.x = x
        self.y = y

    @classmethod
    def from_gaussian(cls, value, q: int) -> 'SurdScalar':
        return cls(value, 0, q)

    @classmethod
    def sqrt_q_power(cls, exponent: int, q: int) -> 'SurdScalar':
        """v^exponent with v = sqrt(q)"""
        half, odd = divmod(exponent, 2)
        rational = Fraction(q) ** half
        if odd:
            return cls(0, rational, q)
        return cls(rational, 0, q)

    def _check(self, other: 'SurdScalar'):
        if other.q != self.q:
            raise InvalidInput(f"Cannot combine sqrt({self.q}) and sqrt({other.q}) scalars")

    def _coerce(self, other):
        if isinstance(other, SurdScalar):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return SurdScalar(other, 0, self.q)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SurdScalar(self.x + other.x, self.y + other.y, self.q)

    __radd__ = __add__

    def __neg__(self):
        return SurdScalar(-self.x, -self.y, self.q)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SurdScalar(self.x - other.x, self.y - other.y, self.q)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SurdScalar(self.x * other.x + self.y * other.y * self.q,
                          self.x * other.y + self.y * other.x, self.q)

    __rmul__ = __mul__

    def inverse(self) -> 'SurdScalar':
        # (x + y r)^-1 = (x - y r) / (x^2 - q y^2); nonzero for non-square q
        denominator = self.x * self.x - self.y * self.y * self.q
        if denominator.is_zero():
            raise ZeroDivisionError("SurdScalar zero has no inverse")
        scale = denominator.inverse()
        return SurdScalar(self.x * scale, -self.y * scale, self.q)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, exponent: int) -> 'SurdScalar':
        base = self if exponent >= 0 else self.inverse()
        result = SurdScalar(1, 0, self.q)
        power = abs(exponent)
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = SurdScalar(other, 0, self.q)
        if not isinstance(other, SurdScalar):
            return False
        return self.q == other.q and self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.q))

    def __repr__(self) -> str:
        return f"SurdScalar({self})"

    def __str__(self) -> str:
        if self.y.is_zero():
            return f"({self.x})"
        return f"({self.x}) + ({self.y})*sqrt({self.q})"


class PhasedScalar:
    """
    g^g_power * value with value in Q(i)(sqrt q).

    The sign of the phase is folded into value, so two phased scalars are
    equal iff their g-powers and values agree (zero has g-power 0).
    """

    __slots__ = ('g_power', 'value', 'g_squared')

    def __init__(self, phase: Phase, value: SurdScalar):
        if value.is_zero():
            self.g_power = 0
            self.value = value
        else:
            self.g_power = phase.g_power
            self.value = value if phase.sign == 1 else -value
        self.g_squared = phase.g_squared

    @classmethod
    def zero(cls, cfg: FieldConfig) -> 'PhasedScalar':
        return cls(Phase.identity(cfg), SurdScalar(0, 0, cfg.q))

    @property
    def phase(self) -> Phase:
        return Phase(1, self.g_power, self.g_squared)

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __mul__(self, other):
        if isinstance(other, Phase):
            return PhasedScalar(self.phase * other, self.value)
        if isinstance(other, PhasedScalar):
            return PhasedScalar(self.phase * other.phase, self.value * other.value)
        if isinstance(other, (int, Fraction, GaussianRational, SurdScalar)):
            return PhasedScalar(self.phase, self.value * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return PhasedScalar(self.phase, -self.value)

    def inverse(self) -> 'PhasedScalar':
        return PhasedScalar(self.phase.inverse(), self.value.inverse())

    def __truediv__(self, other):
        if isinstance(other, PhasedScalar):
            return self * other.inverse()
        if isinstance(other, Phase):
            return self * other.inverse()
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhasedScalar):
            return False
        return self.g_power == other.g_power and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.g_power, self.value))

    def __repr__(self) -> str:
        return f"PhasedScalar({self})"

    def __str__(self) -> str:
        if not self.g_power:
            return str(self.value)
        if self.value.y.is_zero():
            return f"g * {self.value}"
        return f"g * [{self.value}]"
