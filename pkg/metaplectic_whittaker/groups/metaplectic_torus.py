"""
Diagonal elements of the metaplectic double cover of GSp(2n).

A torus element is [t, y] = diag(t, y t^{-1}) with t = diag(a_n, ..., a_1).
Entries are stored in the order (a_1, ..., a_n) so that entries[i - 1] is
a_i and k_i = ord(a_i); the matrix diagonal lists them in reverse.

On the torus the cover is given by the closed cocycle
    c([t, y], [t', y']) = (det t, y' det t')_F
and (g1, e1)(g2, e2) = (g1 g2, e1 e2 c(g1, g2)).

Only diagonal elements exist here: unipotent and compact factors of the
full group never materialise.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, Tuple

from ..arithmetic.field_arith import (
    TRIVIAL,
    FieldConfig,
    SquareClassElement,
    hilbert,
)
from ..utils.errors import DimensionMismatch, InvalidInput


class CentralScope(str, Enum):
    """Groups in which centrality is tested"""
    COVER_GSP = 'cover_GSp'
    COVER_GSP_PLUS = 'cover_GSp_plus'
    COVER_TORUS = 'cover_torus'


@dataclass(frozen=True)
class TorusElement:
    """[t, y] with square-class entries a_1..a_n and similitude y"""
    entries: Tuple[SquareClassElement, ...]
    y: SquareClassElement = SquareClassElement()

    def __post_init__(self):
        if not self.entries:
            raise InvalidInput("a torus element needs at least one entry")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> 'TorusElement':
        return cls((SquareClassElement(),) * n, SquareClassElement())

    @classmethod
    def scalar(cls, a: SquareClassElement, n: int) -> 'TorusElement':
        """a I_{2n} = [a I_n, a^2]"""
        return cls((a,) * n, a * a)

    @classmethod
    def iota(cls, lam: SquareClassElement, n: int) -> 'TorusElement':
        """i(lam) = diag(I_n, lam I_n) = [I_n, lam]"""
        return cls((SquareClassElement(),) * n, lam)

    @classmethod
    def from_orders(cls, k: Tuple[int, ...], y: SquareClassElement = SquareClassElement()
                    ) -> 'TorusElement':
        """[diag(pi^{k_n}, ..., pi^{k_1}), y]"""
        return cls(tuple(SquareClassElement(ki, TRIVIAL) for ki in k), y)

    def det(self) -> SquareClassElement:
        result = SquareClassElement()
        for a in self.entries:
            result = result * a
        return result

    def similitude(self) -> SquareClassElement:
        """lambda([t, y]) = y"""
        return self.y

    def orders(self) -> Tuple[int, ...]:
        """(k_1, ..., k_n)"""
        return tuple(a.ord for a in self.entries)

    def _check(self, other: 'TorusElement'):
        if other.n != self.n:
            raise DimensionMismatch(f"torus elements of rank {self.n} and {other.n}")

    def __mul__(self, other: 'TorusElement') -> 'TorusElement':
        self._check(other)
        return TorusElement(tuple(a * b for a, b in zip(self.entries, other.entries)),
                            self.y * other.y)

    def inverse(self) -> 'TorusElement':
        return TorusElement(tuple(a.inverse() for a in self.entries), self.y.inverse())

    def scale_entries(self, c: SquareClassElement) -> 'TorusElement':
        """Multiply every entry of t by c, leaving y alone"""
        return TorusElement(tuple(a * c for a in self.entries), self.y)

    def scalar_value(self):
        """a if this is a I_{2n} (entries equal, y = a^2), else None"""
        first = self.entries[0]
        if all(a == first for a in self.entries) and self.y == first * first:
            return first
        return None

    def __str__(self) -> str:
        diagonal = ', '.join(a.token() for a in reversed(self.entries))
        return f"[diag({diagonal}), {self.y.token()}]"


@dataclass(frozen=True)
class CoverTorusElement:
    """(g, eps) in the metaplectic cover"""
    base: TorusElement
    eps: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise InvalidInput(f"eps must be +-1, got {self.eps!r}")

    @property
    def n(self) -> int:
        return self.base.n

    @classmethod
    def identity(cls, n: int) -> 'CoverTorusElement':
        return cls(TorusElement.identity(n), 1)

    @classmethod
    def central_sign(cls, n: int) -> 'CoverTorusElement':
        """(I, -1)"""
        return cls(TorusElement.identity(n), -1)

    def with_eps(self, eps: int) -> 'CoverTorusElement':
        return CoverTorusElement(self.base, eps)

    def __str__(self) -> str:
        return f"({self.base}, {'+1' if self.eps == 1 else '-1'})"


def cocycle(g1: TorusElement, g2: TorusElement, cfg: FieldConfig) -> int:
    """c([t, y], [t', y']) = (det t, y' det t')_F"""
    g1._check(g2)
    return hilbert(g1.det(), g2.y * g2.det(), cfg)


def mul(h1: CoverTorusElement, h2: CoverTorusElement, cfg: FieldConfig) -> CoverTorusElement:
    return CoverTorusElement(h1.base * h2.base,
                             h1.eps * h2.eps * cocycle(h1.base, h2.base, cfg))


def mul_all(elements, cfg: FieldConfig) -> CoverTorusElement:
    elements = list(elements)
    result = elements[0]
    for element in elements[1:]:
        result = mul(result, element, cfg)
    return result


def inverse(h: CoverTorusElement, cfg: FieldConfig) -> CoverTorusElement:
    """(g, e)^-1 = (g^-1, e c(g, g^-1))"""
    g_inv = h.base.inverse()
    return CoverTorusElement(g_inv, h.eps * cocycle(h.base, g_inv, cfg))


def conjugate(h: CoverTorusElement, x: CoverTorusElement, cfg: FieldConfig) -> CoverTorusElement:
    """h^x = x^-1 h x"""
    return mul(mul(inverse(x, cfg), h, cfg), x, cfg)


def conjugate_by_iota(h: CoverTorusElement, c: SquareClassElement, cfg: FieldConfig
                      ) -> CoverTorusElement:
    """h^{(i(c), 1)}"""
    return conjugate(h, CoverTorusElement(TorusElement.iota(c, h.n), 1), cfg)


def scalar_conjugation_sign(g: TorusElement, a: SquareClassElement, cfg: FieldConfig) -> int:
    """
    (lambda(g), a^n)_F: the sign picked up by (g, e) under conjugation by a
    scalar (a I, e'), and by (a I, e) under conjugation by (g, e').
    """
    return hilbert(g.similitude(), a ** g.n, cfg)


def commutes(h1: CoverTorusElement, h2: CoverTorusElement, cfg: FieldConfig) -> bool:
    """The bases commute, so only the cocycle can obstruct"""
    return cocycle(h1.base, h2.base, cfg) == cocycle(h2.base, h1.base, cfg)


def enumerate_square_class_torus(n: int, similitude_free: bool = True) -> Iterator[TorusElement]:
    """
    One torus element per combination of entry classes in {1, u0, pi, pi u0};
    y runs over the same four classes, or is fixed to 1 when similitude_free
    is False (the Sp torus).
    """
    classes = [SquareClassElement(o, u) for o in (0, 1) for u in (0, 1)]
    y_values = classes if similitude_free else [SquareClassElement()]
    for entries in product(classes, repeat=n):
        for y in y_values:
            yield TorusElement(tuple(entries), y)


def is_central(h: CoverTorusElement, scope: CentralScope, cfg: FieldConfig) -> bool:
    """
    Closed-form centrality.

    cover_GSp: scalar a I with a arbitrary for n even, a in F*^2 for n odd.
    cover_GSp_plus: scalar a I, any a.
    cover_torus: y and det t are squares.
    The sign eps never matters since (I, -1) is central.
    """
    scope = CentralScope(scope)
    base = h.base
    if scope == CentralScope.COVER_TORUS:
        return base.y.is_square() and base.det().is_square()
    a = base.scalar_value()
    if a is None:
        return False
    if scope == CentralScope.COVER_GSP_PLUS:
        return True
    return h.n % 2 == 0 or a.is_square()


def is_central_brute_force(h: CoverTorusElement, cfg: FieldConfig, similitude_free: bool = True
                           ) -> bool:
    """Commutation with every square-class torus element"""
    return all(commutes(h, CoverTorusElement(g), cfg)
               for g in enumerate_square_class_torus(h.n, similitude_free))


@dataclass(frozen=True)
class HNormalForm:
    """
    h = (i(pi^{-m}), 1) (b I, 1) ([t, 1], 1) (i(u), eps)

    with m in {0, 1}, u a unit class and t = (a_1, ..., a_n).
    """
    m: int
    b: SquareClassElement
    t: Tuple[SquareClassElement, ...]
    u: SquareClassElement
    eps: int

    @property
    def n(self) -> int:
        return len(self.t)

    @property
    def k(self) -> Tuple[int, ...]:
        return tuple(a.ord for a in self.t)

    @property
    def l(self) -> int:
        return self.b.ord

    def det_t(self) -> SquareClassElement:
        result = SquareClassElement()
        for a in self.t:
            result = result * a
        return result

    def factors(self) -> Tuple[CoverTorusElement, ...]:
        n = self.n
        return (
            CoverTorusElement(TorusElement.iota(SquareClassElement(-self.m, TRIVIAL), n), 1),
            CoverTorusElement(TorusElement.scalar(self.b, n), 1),
            CoverTorusElement(TorusElement(self.t, SquareClassElement()), 1),
            CoverTorusElement(TorusElement.iota(self.u, n), self.eps),
        )

    def recompose(self, cfg: FieldConfig) -> CoverTorusElement:
        return mul_all(self.factors(), cfg)


def _decompose(h: CoverTorusElement, b_unit: int, cfg: FieldConfig) -> HNormalForm:
    y = h.base.y
    m = y.ord % 2
    b = SquareClassElement((y.ord + m) // 2, b_unit)
    u = y.unit_part()
    t = tuple(a / b for a in h.base.entries)
    trial = HNormalForm(m, b, t, u, 1)
    sign = trial.recompose(cfg).eps
    return HNormalForm(m, b, t, u, h.eps * sign)


def normal_form(h: CoverTorusElement, cfg: FieldConfig) -> HNormalForm:
    """
    Decomposition with b = pi^l (trivial unit class).

    lambda(h) = pi^{-m} b^2 u, so m = ord(y) mod 2 and l = (ord(y) + m) / 2.
    """
    return _decompose(h, TRIVIAL, cfg)


def normal_form_with_b(h: CoverTorusElement, b_unit: int, cfg: FieldConfig) -> HNormalForm:
    """Same decomposition with the unit class of b prescribed"""
    return _decompose(h, b_unit, cfg)
