"""
Exact multivariate Laurent polynomials in alpha_1..alpha_n with coefficients
in Z[v, v^-1], v = q^{1/2} kept symbolic.

A term is stored as ((e_1, ..., e_n), a) -> c meaning c * v^a * prod alpha_i^e_i.
Zero coefficients are never stored.

Canonical term order: graded-lexicographic on (e_1..e_n), largest first,
ties broken by the v-exponent, largest first. The canonical text form is
    c * v^a * a1^e1 * ... * an^en
with terms joined by ' + ' in canonical order, and '0' for the zero
polynomial.
"""
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..arithmetic.exact_scalars import GaussianRational, SurdScalar
from ..utils.errors import DimensionMismatch, InvalidInput

Monomial = Tuple[Tuple[int, ...], int]


def term_order_key(monomial: Monomial) -> Tuple:
    """Sort key of the canonical order (use reverse=True for leading-first)"""
    exponents, v_exp = monomial
    return (sum(exponents), exponents, v_exp)


def alpha_order_key(exponents: Tuple[int, ...]) -> Tuple:
    """Graded-lex key on alpha exponents alone"""
    return (sum(exponents), exponents)


class LaurentPoly:
    """Immutable Laurent polynomial; see module docstring for the encoding"""

    __slots__ = ('n', '_terms', '_hash')

    def __init__(self, n: int, terms: Optional[Dict[Monomial, int]] = None):
        if n < 1:
            raise InvalidInput(f"number of variables must be >= 1, got {n}")
        self.n = n
        cleaned: Dict[Monomial, int] = {}
        for (exponents, v_exp), coeff in (terms or {}).items():
            if len(exponents) != n:
                raise DimensionMismatch(
                    f"exponent vector {exponents} does not have {n} entries")
            if coeff:
                key = (tuple(exponents), int(v_exp))
                cleaned[key] = cleaned.get(key, 0) + int(coeff)
                if not cleaned[key]:
                    del cleaned[key]
        self._terms = cleaned
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, n: int) -> 'LaurentPoly':
        return cls(n)

    @classmethod
    def constant(cls, n: int, coeff: int = 1, v_exp: int = 0) -> 'LaurentPoly':
        return cls(n, {((0,) * n, v_exp): coeff})

    @classmethod
    def one(cls, n: int) -> 'LaurentPoly':
        return cls.constant(n, 1)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1, v_exp: int = 0) -> 'LaurentPoly':
        exponents = tuple(exponents)
        return cls(len(exponents), {(exponents, v_exp): coeff})

    @classmethod
    def variable(cls, n: int, index: int, power: int = 1) -> 'LaurentPoly':
        """alpha_{index+1}^power"""
        exponents = [0] * n
        exponents[index] = power
        return cls(n, {(tuple(exponents), 0): 1})

    @classmethod
    def v_power(cls, n: int, a: int) -> 'LaurentPoly':
        return cls.constant(n, 1, a)

    @classmethod
    def _from_clean(cls, n: int, terms: Dict[Monomial, int]) -> 'LaurentPoly':
        poly = cls.__new__(cls)
        poly.n = n
        poly._terms = terms
        poly._hash = None
        return poly

    # Access

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Monomial, int]]:
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda item: term_order_key(item[0]), reverse=True)

    def alpha_support(self) -> Dict[Tuple[int, ...], Dict[int, int]]:
        """Group terms by alpha exponent: exponents -> {v_exp: coeff}"""
        grouped: Dict[Tuple[int, ...], Dict[int, int]] = {}
        for (exponents, v_exp), coeff in self._terms.items():
            grouped.setdefault(exponents, {})[v_exp] = coeff
        return grouped

    def exponent_bounds(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Coordinatewise (min, max) of the alpha exponents"""
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        columns = list(zip(*(exponents for exponents, _ in self._terms)))
        return tuple(min(c) for c in columns), tuple(max(c) for c in columns)

    # Ring operations

    def _check(self, other: 'LaurentPoly'):
        if other.n != self.n:
            raise DimensionMismatch(f"cannot combine polynomials in {self.n} and {other.n} variables")

    def _lift(self, other) -> Optional['LaurentPoly']:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.n, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            total = result.get(key, 0) + coeff
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return LaurentPoly._from_clean(self.n, result)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly._from_clean(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.n)
            return LaurentPoly._from_clean(self.n, {k: c * other for k, c in self._terms.items()})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        result: Dict[Monomial, int] = {}
        for (e1, a1), c1 in self._terms.items():
            for (e2, a2), c2 in other._terms.items():
                key = (tuple(x + y for x, y in zip(e1, e2)), a1 + a2)
                total = result.get(key, 0) + c1 * c2
                if total:
                    result[key] = total
                else:
                    result.pop(key, None)
        return LaurentPoly._from_clean(self.n, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'LaurentPoly':
        if exponent < 0:
            if len(self._terms) != 1:
                raise InvalidInput("only monomials have Laurent inverses")
            ((exponents, v_exp), coeff), = self._terms.items()
            if coeff not in (1, -1):
                raise InvalidInput("monomial with non-unit coefficient has no inverse")
            inverse = LaurentPoly._from_clean(
                self.n, {(tuple(-e for e in exponents), -v_exp): coeff})
            return inverse ** (-exponent)
        result = LaurentPoly.one(self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, exponents: Sequence[int], v_exp: int = 0, coeff: int = 1) -> 'LaurentPoly':
        """Multiply by the monomial coeff * v^v_exp * alpha^exponents"""
        return LaurentPoly._from_clean(self.n, {
            (tuple(x + y for x, y in zip(e, exponents)), a + v_exp): c * coeff
            for (e, a), c in self._terms.items()
        }) if coeff else LaurentPoly.zero(self.n)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.n, other)
        if not isinstance(other, LaurentPoly):
            return False
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # Substitutions

    def negate_variables(self) -> 'LaurentPoly':
        """alpha -> -alpha"""
        return LaurentPoly._from_clean(self.n, {
            (e, a): (-c if sum(e) % 2 else c) for (e, a), c in self._terms.items()
        })

    def evaluate(self, alpha: Sequence, q: int) -> SurdScalar:
        """Substitute alpha_i -> alpha[i] (Gaussian rationals) and v -> sqrt(q)"""
        if len(alpha) != self.n:
            raise DimensionMismatch(f"{len(alpha)} values for {self.n} variables")
        alpha = [GaussianRational.coerce(a) for a in alpha]
        powers: List[Dict[int, GaussianRational]] = [{} for _ in range(self.n)]

        def alpha_power(i: int, e: int) -> GaussianRational:
            cache = powers[i]
            if e not in cache:
                cache[e] = alpha[i] ** e
            return cache[e]

        by_v: Dict[int, GaussianRational] = {}
        for (exponents, v_exp), coeff in self._terms.items():
            value = GaussianRational(coeff)
            for i, e in enumerate(exponents):
                if e:
                    value = value * alpha_power(i, e)
            by_v[v_exp] = by_v.get(v_exp, GaussianRational(0)) + value

        total = SurdScalar(0, 0, q)
        for v_exp, value in by_v.items():
            total = total + SurdScalar.sqrt_q_power(v_exp, q) * value
        return total

    # Serialisation

    def to_canonical_string(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for (exponents, v_exp), coeff in self.sorted_terms():
            factors = [str(coeff), f"v^{v_exp}"]
            factors.extend(f"a{i + 1}^{e}" for i, e in enumerate(exponents))
            parts.append(' * '.join(factors))
        return ' + '.join(parts)

    __str__ = to_canonical_string

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, {self.to_canonical_string()})"

    @classmethod
    def parse(cls, text: str, n: int) -> 'LaurentPoly':
        """Inverse of to_canonical_string"""
        text = text.strip()
        if text == '0':
            return cls.zero(n)
        terms: Dict[Monomial, int] = {}
        for chunk in text.split(' + '):
            factors = [f.strip() for f in chunk.split('*')]
            try:
                coeff = int(factors[0])
                v_exp = 0
                exponents = [0] * n
                for factor in factors[1:]:
                    name, _, power = factor.partition('^')
                    power = int(power) if power else 1
                    if name == 'v':
                        v_exp += power
                    elif name.startswith('a'):
                        exponents[int(name[1:]) - 1] += power
                    else:
                        raise ValueError(name)
            except (ValueError, IndexError):
                raise InvalidInput(f"Cannot parse Laurent term {chunk!r}")
            key = (tuple(exponents), v_exp)
            terms[key] = terms.get(key, 0) + coeff
        return cls(n, terms)


def product_of(factors: Iterable[LaurentPoly], n: int) -> LaurentPoly:
    result = LaurentPoly.one(n)
    for factor in factors:
        result = result * factor
    return result

