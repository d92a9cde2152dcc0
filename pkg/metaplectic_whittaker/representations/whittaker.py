"""
Closed-form spherical Whittaker functions.

On the Sp torus, for t = diag(pi^{k_n}, ..., pi^{k_1}) with k dominant
(0 <= k_1 <= ... <= k_n), the normalised value is

    Delta^{-1} A(prod_i f_i alpha_i^{k_i + i}) delta(t)^{1/2} gamma_psi(t)^{-1}

with f_i = 1 - eta_pi(-y) v^{-1} alpha_i^{-1} when |y| = 1 and f_i = 1 when
|y| = q^{-1}; the value vanishes off the dominant cone. The four k-functions
on the GSp torus cover are built from these through the normal form of h.

Everything here is symbolic in alpha (a LaurentPoly body) until specialised
with WhittakerValue.evaluate.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Tuple

from .characters import Branch, Eta, ExtensionLabel, UnramifiedData, extension_set
from ..arithmetic.exact_scalars import GaussianRational, PhasedScalar, SurdScalar
from ..arithmetic.field_arith import (
    U0,
    FieldConfig,
    Phase,
    SquareClassElement,
    gamma_weil,
    hilbert,
    minus_one_class,
)
from ..groups.laurent import LaurentPoly, product_of
from ..groups.metaplectic_torus import CoverTorusElement, HNormalForm, normal_form
from ..groups.weyl_laurent import alternator, divide_by_delta
from ..utils.errors import DimensionMismatch, InvalidInput
from ..utils.logging import logger


@dataclass(frozen=True)
class TorusOrders:
    """k_i = ord(a_i), i = 1..n"""
    k: Tuple[int, ...]

    @classmethod
    def coerce(cls, value) -> 'TorusOrders':
        if isinstance(value, TorusOrders):
            return value
        return cls(tuple(int(x) for x in value))

    @property
    def n(self) -> int:
        return len(self.k)

    def is_dominant(self) -> bool:
        return all(0 <= a <= b for a, b in zip((0,) + self.k, self.k))

    def total(self) -> int:
        return sum(self.k)


def delta_half(k) -> int:
    """v-exponent of delta^{1/2}([t, 1]) = q^{-sum i k_i}"""
    k = TorusOrders.coerce(k)
    return -2 * sum((i + 1) * ki for i, ki in enumerate(k.k))


@dataclass(frozen=True)
class WhittakerValue:
    """
    phase * scale * v^v_power * body(alpha).

    The zero value is stored canonically (identity phase, v^0, scale 1) so
    that equal values compare equal.
    """
    phase: Phase
    v_power: int
    body: LaurentPoly
    scale: GaussianRational = field(default_factory=lambda: GaussianRational(1))

    def __post_init__(self):
        object.__setattr__(self, 'scale', GaussianRational.coerce(self.scale))
        if self.scale.is_zero():
            object.__setattr__(self, 'body', LaurentPoly.zero(self.body.n))
        if self.body.is_zero():
            object.__setattr__(self, 'phase', Phase(1, 0, self.phase.g_squared))
            object.__setattr__(self, 'v_power', 0)
            object.__setattr__(self, 'scale', GaussianRational(1))

    @classmethod
    def zero(cls, n: int, cfg: FieldConfig) -> 'WhittakerValue':
        return cls(Phase.identity(cfg), 0, LaurentPoly.zero(n))

    @property
    def n(self) -> int:
        return self.body.n

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def __mul__(self, other):
        if isinstance(other, Phase):
            return WhittakerValue(self.phase * other, self.v_power, self.body, self.scale)
        if isinstance(other, int) and other in (1, -1):
            return WhittakerValue(self.phase * other, self.v_power, self.body, self.scale)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> 'WhittakerValue':
        return self * -1

    def shift_v(self, exponent: int) -> 'WhittakerValue':
        return WhittakerValue(self.phase, self.v_power + exponent, self.body, self.scale)

    def evaluate(self, alpha: Sequence, cfg: FieldConfig) -> PhasedScalar:
        """Specialise alpha and v = sqrt(q)"""
        if self.is_zero():
            return PhasedScalar.zero(cfg)
        value = self.body.evaluate(alpha, cfg.q) * self.scale
        value = value * SurdScalar.sqrt_q_power(self.v_power, cfg.q)
        return PhasedScalar(self.phase, value)

    def to_canonical_string(self) -> str:
        if self.is_zero():
            return '0'
        head = [str(self.phase)]
        if self.scale != 1:
            head.append(f"({self.scale})")
        head.append(f"v^{self.v_power}")
        return f"{' * '.join(head)} * [{self.body.to_canonical_string()}]"

    __str__ = to_canonical_string

    @classmethod
    def parse(cls, text: str, n: int, cfg: FieldConfig) -> 'WhittakerValue':
        text = text.strip()
        if text == '0':
            return cls.zero(n, cfg)
        head, marker, body = text.partition(' * [')
        if not marker or not body.endswith(']'):
            raise InvalidInput(f"Cannot parse Whittaker value {text!r}")
        parts = head.split(' * ')
        if len(parts) not in (2, 3) or not parts[-1].startswith('v^'):
            raise InvalidInput(f"Cannot parse Whittaker value {text!r}")
        phase = Phase.parse(parts[0], cfg)
        scale = GaussianRational(1)
        if len(parts) == 3:
            scale = GaussianRational.parse(parts[1])
        try:
            v_power = int(parts[-1][2:])
        except ValueError:
            raise InvalidInput(f"Cannot parse v-power in {text!r}")
        return cls(phase, v_power, LaurentPoly.parse(body[:-1], n), scale)


def branch_sign(y: SquareClassElement, cfg: FieldConfig) -> int:
    """eta_pi(-y) for a unit class y"""
    return hilbert(SquareClassElement.pi(), minus_one_class(cfg) * y, cfg)


def _check_y(y: SquareClassElement):
    if y.ord not in (0, 1):
        raise InvalidInput(f"y must have ord 0 or 1, got {y.token()}",
                           details={'y': y.token()})


def d_factor(n: int, y: SquareClassElement, cfg: FieldConfig) -> LaurentPoly:
    """
    D(alpha, y) = prod_{i<j} (1 - q^{-1} a_j/a_i)(1 - q^{-1} a_j a_i)
                  * prod_i (1 + eta_pi(-y) q^{-1/2} a_i)   if |y| = 1
                  * prod_i (1 - q^{-1} a_i^2)              if |y| = q^{-1}
    """
    _check_y(y)
    one = LaurentPoly.one(n)
    factors = []
    for j in range(n):
        for i in range(j):
            ratio = [0] * n
            ratio[j], ratio[i] = 1, -1
            both = [0] * n
            both[j], both[i] = 1, 1
            factors.append(one - LaurentPoly.monomial(ratio, v_exp=-2))
            factors.append(one - LaurentPoly.monomial(both, v_exp=-2))
    if y.ord == 0:
        s = branch_sign(y, cfg)
        factors.extend(one + LaurentPoly.variable(n, i).shift((0,) * n, v_exp=-1, coeff=s)
                       for i in range(n))
    else:
        factors.extend(one - LaurentPoly.variable(n, i, 2).shift((0,) * n, v_exp=-2)
                       for i in range(n))
    return product_of(factors, n)


def d_factor_eta(n: int, y: SquareClassElement, eta: Eta, cfg: FieldConfig) -> LaurentPoly:
    """eta(y pi^{-ord y}) * D(alpha, y)"""
    return d_factor(n, y, cfg) * eta(y.unit_class)


def branch_numerator(n: int, k: Tuple[int, ...], sign: int) -> LaurentPoly:
    """
    prod_i f_i alpha_i^{k_i+i} with f_i = 1 - sign v^{-1} alpha_i^{-1};
    sign = 0 gives the bare product.
    """
    factors = []
    for i in range(n):
        exponents = [0] * n
        exponents[i] = k[i] + i + 1
        term = LaurentPoly.monomial(exponents)
        if sign:
            lowered = list(exponents)
            lowered[i] -= 1
            term = term - LaurentPoly.monomial(lowered, coeff=sign, v_exp=-1)
        factors.append(term)
    return product_of(factors, n)


@lru_cache(maxsize=None)
def alternator_body(n: int, k: Tuple[int, ...], sign: int) -> LaurentPoly:
    """A(branch_numerator) / Delta, a W-symmetric Laurent polynomial"""
    body = divide_by_delta(alternator(branch_numerator(n, k, sign)))
    logger.debug(f"✓ COMPUTED BODY: n={n}, k={k}, sign={sign}, {len(body)} terms")
    return body


def _y_body(n: int, k: TorusOrders, y: SquareClassElement, cfg: FieldConfig) -> LaurentPoly:
    if y.ord == 0:
        return alternator_body(n, k.k, branch_sign(y, cfg))
    return alternator_body(n, k.k, 0)


def _coerce_orders(n: int, k) -> TorusOrders:
    k = TorusOrders.coerce(k)
    if k.n != n:
        raise DimensionMismatch(f"k has {k.n} entries, expected {n}")
    return k


def sp_whittaker(n: int, y: SquareClassElement, k, cfg: FieldConfig) -> WhittakerValue:
    """Normalised Sp-level value at [diag(pi^k), 1]; zero off the dominant cone"""
    _check_y(y)
    k = _coerce_orders(n, k)
    if not k.is_dominant():
        return WhittakerValue.zero(n, cfg)
    phase = gamma_weil(SquareClassElement.pi(k.total()), cfg).inverse()
    return WhittakerValue(phase, delta_half(k), _y_body(n, k, y, cfg))


def rank_one_whittaker(k1: int, cfg: FieldConfig) -> WhittakerValue:
    """
    SL2 value q^{-k} gamma_psi(pi^k)^{-1} (a^{k+1} - a^{-k-1}) / (a - a^{-1}),
    written as the geometric sum a^k + a^{k-2} + ... + a^{-k}.
    """
    if k1 < 0:
        return WhittakerValue.zero(1, cfg)
    body = LaurentPoly(1, {((k1 - 2 * j,), 0): 1 for j in range(k1 + 1)})
    phase = gamma_weil(SquareClassElement.pi(k1), cfg).inverse()
    return WhittakerValue(phase, -2 * k1, body)


def _prefactor(d: UnramifiedData, nf: HNormalForm, cfg: FieldConfig) -> Phase:
    """eps eta(u) gamma_psi(b^n)^{-1} gamma_psi(det t)^{-1}"""
    sign = nf.eps * d.eta(nf.u.unit_class)
    return (Phase.from_sign(sign, cfg)
            * gamma_weil(nf.b ** nf.n, cfg).inverse()
            * gamma_weil(nf.det_t(), cfg).inverse())


def k_eval_decomposed(d: UnramifiedData, nf: HNormalForm, cfg: FieldConfig) -> WhittakerValue:
    """The k-formula on an explicit decomposition (m, b, t, u, eps)"""
    if nf.n != d.n:
        raise DimensionMismatch(f"normal form of rank {nf.n} for data of rank {d.n}")
    if nf.m != d.branch.m:
        return WhittakerValue.zero(d.n, cfg)
    k = TorusOrders(nf.k)
    if not k.is_dominant():
        return WhittakerValue.zero(d.n, cfg)
    y = SquareClassElement(d.branch.m)
    return WhittakerValue(_prefactor(d, nf, cfg), delta_half(k),
                          _y_body(d.n, k, y, cfg), d.beta ** nf.l)


def k_eval(d: UnramifiedData, h: CoverTorusElement, cfg: FieldConfig) -> WhittakerValue:
    """k^{eta, branch}_{alpha, beta}(h), symbolic in alpha"""
    if h.n != d.n:
        raise DimensionMismatch(f"torus element of rank {h.n} for data of rank {d.n}")
    return k_eval_decomposed(d, normal_form(h, cfg), cfg)


def k_value(d: UnramifiedData, h: CoverTorusElement, cfg: FieldConfig) -> PhasedScalar:
    return k_eval(d, h, cfg).evaluate(d.alpha, cfg)


def orbit_whittaker(d: UnramifiedData, y: SquareClassElement, h: CoverTorusElement,
                    cfg: FieldConfig) -> WhittakerValue:
    """
    Whittaker function attached to the square-class orbit of y.

    Supported where ord(lambda(h)) has the parity of ord(y). For y in {1, pi}
    this is the plus or minus k-function at (alpha, beta); for the u0 classes
    the body uses eta_pi(-y) and picks up (-1)^{l n + sum k}.
    """
    _check_y(y)
    if h.n != d.n:
        raise DimensionMismatch(f"torus element of rank {h.n} for data of rank {d.n}")
    nf = normal_form(h, cfg)
    if nf.m != y.ord:
        return WhittakerValue.zero(d.n, cfg)
    k = TorusOrders(nf.k)
    if not k.is_dominant():
        return WhittakerValue.zero(d.n, cfg)
    phase = _prefactor(d, nf, cfg)
    if y.unit_class == U0 and (nf.l * d.n + k.total()) % 2:
        phase = -phase
    return WhittakerValue(phase, delta_half(k), _y_body(d.n, k, y, cfg), d.beta ** nf.l)


@dataclass(frozen=True)
class KFunction:
    """One k-function: an extension label together with the splitting eta"""
    label: ExtensionLabel
    eta: Eta

    @property
    def n(self) -> int:
        return len(self.label.alpha)

    def data(self) -> UnramifiedData:
        return UnramifiedData(self.n, self.label.alpha, self.label.beta,
                              self.label.sign, self.eta)

    def symbolic(self, h: CoverTorusElement, cfg: FieldConfig) -> WhittakerValue:
        return k_eval(self.data(), h, cfg)

    def __call__(self, h: CoverTorusElement, cfg: FieldConfig) -> PhasedScalar:
        return k_value(self.data(), h, cfg)

    @property
    def name(self) -> str:
        mark = '+' if self.label.sign == Branch.PLUS else '-'
        return f"k^(eta_{self.eta.value}{mark})_{self.label}"


def spanning_set(d: UnramifiedData) -> Tuple[KFunction, ...]:
    """The four k-functions indexed by the extension set"""
    return tuple(KFunction(label, d.eta) for label in extension_set(d))
