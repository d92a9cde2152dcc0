"""
Arithmetic of F*/F*^2 for a p-adic field F of odd residue characteristic.

Elements of F* are only ever needed modulo squares, together with their
valuation: pi^k * u * F*^2 with u in {1, u0}, u0 a non-square unit. All tame
symbols depend on the residue field only through whether -1 is a square,
i.e. through q mod 4.

The Weil index gamma_psi (psi normalized) factors through F*/F*^2 and takes
values in the four-element group {+-1, +-g} with g = gamma_psi(pi) kept as a
formal symbol, g^2 = (pi, pi)_F.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from ..utils.errors import InvalidFieldConfig, InvalidInput

TRIVIAL = 0
U0 = 1


@lru_cache(maxsize=None)
def _prime_power_base(q: int) -> int:
    """Return p if q = p^e for a prime p, else 0"""
    if q < 2:
        return 0
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q
    while q % p == 0:
        q //= p
    return p if q == 1 else 0


@dataclass(frozen=True)
class FieldConfig:
    """Residue-field data of F: q is the cardinality of O/pi*O"""
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or isinstance(self.q, bool):
            raise InvalidFieldConfig(f"q must be an integer, got {self.q!r}")
        if self.q < 3 or self.q % 2 == 0:
            raise InvalidFieldConfig(f"q must be odd and >= 3, got {self.q}",
                                     details={'q': self.q})
        if not _prime_power_base(self.q):
            raise InvalidFieldConfig(f"q must be a prime power, got {self.q}",
                                     details={'q': self.q})

    def minus_one_is_square(self) -> bool:
        """-1 is a square in the residue field (hence in O*) iff q = 1 mod 4"""
        return self.q % 4 == 1

    @property
    def g_squared(self) -> int:
        """(pi, pi)_F = (-1, pi)_F"""
        return 1 if self.minus_one_is_square() else -1


@dataclass(frozen=True, order=True)
class SquareClassElement:
    """
    pi^ord * u * F*^2 with unit_class in {TRIVIAL, U0}.

    The valuation is kept exactly (it feeds delta^{1/2} and the torus orders);
    only the unit part is reduced modulo squares.
    """
    ord: int = 0
    unit_class: int = TRIVIAL

    def __post_init__(self):
        if self.unit_class not in (TRIVIAL, U0):
            raise InvalidInput(f"unit_class must be 0 or 1, got {self.unit_class!r}")

    # Constructors

    @classmethod
    def one(cls) -> 'SquareClassElement':
        return cls(0, TRIVIAL)

    @classmethod
    def u0(cls) -> 'SquareClassElement':
        return cls(0, U0)

    @classmethod
    def pi(cls, power: int = 1) -> 'SquareClassElement':
        return cls(power, TRIVIAL)

    @classmethod
    def parse(cls, token: str) -> 'SquareClassElement':
        """
        Parse a square-class token.

        Accepted forms: '1', 'u0', 'pi', 'piu0', 'pi^k', 'pi^k*u0', 'u0*pi^k'
        (k may be negative).
        """
        text = token.strip().lower().replace(' ', '')
        if text in ('1', ''):
            return cls.one()
        if text == 'u0':
            return cls.u0()
        if text in ('piu0', 'pi*u0', 'u0*pi', 'u0pi'):
            return cls(1, U0)
        unit = TRIVIAL
        for marker in ('*u0', 'u0*'):
            if marker in text:
                unit = U0
                text = text.replace(marker, '')
        if text == 'pi':
            return cls(1, unit)
        if text.startswith('pi^'):
            try:
                return cls(int(text[3:]), unit)
            except ValueError:
                pass
        raise InvalidInput(f"Unrecognized square-class token: {token!r}",
                           details={'token': token})

    # Group law

    def __mul__(self, other: 'SquareClassElement') -> 'SquareClassElement':
        return SquareClassElement(self.ord + other.ord, self.unit_class ^ other.unit_class)

    def inverse(self) -> 'SquareClassElement':
        return SquareClassElement(-self.ord, self.unit_class)

    def __truediv__(self, other: 'SquareClassElement') -> 'SquareClassElement':
        return self * other.inverse()

    def __pow__(self, exponent: int) -> 'SquareClassElement':
        return SquareClassElement(self.ord * exponent,
                                  self.unit_class if exponent % 2 else TRIVIAL)

    # Predicates

    def is_unit(self) -> bool:
        return self.ord == 0

    def is_square(self) -> bool:
        """Trivial in F*/F*^2"""
        return self.ord % 2 == 0 and self.unit_class == TRIVIAL

    def class_index(self) -> Tuple[int, int]:
        """Image in F*/F*^2 as (ord mod 2, unit_class)"""
        return (self.ord % 2, self.unit_class)

    def same_class(self, other: 'SquareClassElement') -> bool:
        return self.class_index() == other.class_index()

    def unit_part(self) -> 'SquareClassElement':
        """self * pi^(-ord)"""
        return SquareClassElement(0, self.unit_class)

    def token(self) -> str:
        unit = '*u0' if self.unit_class == U0 else ''
        if self.ord == 0:
            return 'u0' if unit else '1'
        if self.ord == 1:
            return 'piu0' if unit else 'pi'
        return f"pi^{self.ord}{unit}"

    def __str__(self) -> str:
        return self.token()


@dataclass(frozen=True)
class Phase:
    """
    Element sign * g^g_power of {+-1, +-g}, g = gamma_psi(pi).

    g_squared records (pi, pi)_F so products reduce g^2 exactly; phases built
    from different residue fields must not be mixed.
    """
    sign: int = 1
    g_power: int = 0
    g_squared: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1) or self.g_power not in (0, 1) or self.g_squared not in (1, -1):
            raise InvalidInput(f"Invalid phase {self!r}")

    @classmethod
    def identity(cls, cfg: FieldConfig) -> 'Phase':
        return cls(1, 0, cfg.g_squared)

    @classmethod
    def from_sign(cls, sign: int, cfg: FieldConfig) -> 'Phase':
        return cls(sign, 0, cfg.g_squared)

    @classmethod
    def g(cls, cfg: FieldConfig) -> 'Phase':
        return cls(1, 1, cfg.g_squared)

    def __mul__(self, other):
        if isinstance(other, int):
            if other not in (1, -1):
                return NotImplemented
            return Phase(self.sign * other, self.g_power, self.g_squared)
        if not isinstance(other, Phase):
            return NotImplemented
        if other.g_squared != self.g_squared:
            raise InvalidInput("Phases from different residue fields cannot be multiplied")
        sign = self.sign * other.sign
        power = self.g_power + other.g_power
        if power == 2:
            power = 0
            sign *= self.g_squared
        return Phase(sign, power, self.g_squared)

    __rmul__ = __mul__

    def __neg__(self) -> 'Phase':
        return Phase(-self.sign, self.g_power, self.g_squared)

    def inverse(self) -> 'Phase':
        if self.g_power == 0:
            return self
        # g^-1 = g * g^2 since g^4 = 1
        return Phase(self.sign * self.g_squared, 1, self.g_squared)

    def __pow__(self, exponent: int) -> 'Phase':
        base = self if exponent >= 0 else self.inverse()
        result = Phase(1, 0, self.g_squared)
        for _ in range(abs(exponent) % 4):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return self.sign == 1 and self.g_power == 0

    def __str__(self) -> str:
        sign = '+' if self.sign == 1 else '-'
        return f"{sign}{'g' if self.g_power else '1'}"

    @classmethod
    def parse(cls, text: str, cfg: FieldConfig) -> 'Phase':
        text = text.strip()
        table = {'+1': (1, 0), '1': (1, 0), '-1': (-1, 0), '+g': (1, 1), 'g': (1, 1), '-g': (-1, 1)}
        if text not in table:
            raise InvalidInput(f"Unrecognized phase: {text!r}")
        sign, power = table[text]
        return cls(sign, power, cfg.g_squared)


def _chi(unit_class: int) -> int:
    """Quadratic character of O*/O*^2"""
    return -1 if unit_class == U0 else 1


def hilbert(a: SquareClassElement, b: SquareClassElement, cfg: FieldConfig) -> int:
    """
    Tame Hilbert symbol (a, b)_F.

    For a = pi^m u, b = pi^n v:
    (a, b) = (-1)^{mn(q-1)/2} * chi(v)^m * chi(u)^n.
    """
    m, n = a.ord % 2, b.ord % 2
    value = 1
    if m and n and not cfg.minus_one_is_square():
        value = -value
    if m:
        value *= _chi(b.unit_class)
    if n:
        value *= _chi(a.unit_class)
    return value


def eta(a: SquareClassElement, b: SquareClassElement, cfg: FieldConfig) -> int:
    """eta_a(b) = (a, b)_F; in particular eta_u0(b) = (-1)^ord(b)"""
    return hilbert(a, b, cfg)


def gamma_weil(a: SquareClassElement, cfg: FieldConfig) -> Phase:
    """Normalized Weil index: 1, u0 -> +1; pi -> g; pi*u0 -> -g"""
    if a.ord % 2 == 0:
        return Phase.identity(cfg)
    sign = -1 if a.unit_class == U0 else 1
    return Phase(sign, 1, cfg.g_squared)


def square_classes() -> Tuple[SquareClassElement, ...]:
    """Representatives {1, u0, pi, pi*u0} of F*/F*^2"""
    return (
        SquareClassElement(0, TRIVIAL),
        SquareClassElement(0, U0),
        SquareClassElement(1, TRIVIAL),
        SquareClassElement(1, U0),
    )


def minus_one_class(cfg: FieldConfig) -> SquareClassElement:
    """Class of -1: a unit, trivial iff q = 1 mod 4"""
    return SquareClassElement(0, TRIVIAL if cfg.minus_one_is_square() else U0)


def unit_character_value(unit_class: int, ramified: bool) -> int:
    """
    The two quadratic characters of O*: the trivial one and u -> (u, pi)_F.

    Evaluated on O*F*^2 through the unit class.
    """
    return _chi(unit_class) if ramified else 1
