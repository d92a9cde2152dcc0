"""
Unramified genuine character data and the invariants built on it.

A genuine unramified character of the torus cover is labelled by
(alpha, beta): chi_alpha(diag(a_n, ..., a_1)) = prod alpha_i^{ord a_i} on the
Sp part and xi_beta(a) = beta^{ord a} on the centre. Its four extensions to
the maximal abelian subgroup are
    E(omega) = {(alpha, beta)^+-, (-alpha, (-1)^n beta)^+-}
where + is the standard extension (trivial on the compact part) and - its
i(pi)-conjugate.
"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from ..arithmetic.exact_scalars import GaussianRational, PhasedScalar, SurdScalar
from ..arithmetic.field_arith import (
    TRIVIAL,
    FieldConfig,
    Phase,
    SquareClassElement,
    gamma_weil,
    hilbert,
    unit_character_value,
)
from ..groups.metaplectic_torus import CoverTorusElement
from ..groups.signed_permutations import SignedPermutation, hyperoctahedral_group
from ..utils.errors import (
    DimensionMismatch,
    InvalidInput,
    InvariantViolation,
    TwistNotUnramified,
)
from ..utils.logging import logger

Alpha = Tuple[GaussianRational, ...]


class Branch(str, Enum):
    """Standard extension (plus) or its i(pi)-conjugate (minus)"""
    PLUS = 'plus'
    MINUS = 'minus'

    @property
    def m(self) -> int:
        """Parity of ord(lambda(h)) on the support"""
        return 0 if self == Branch.PLUS else 1


class Eta(str, Enum):
    """Splitting of the maximal compact: eta_1 or eta_pi"""
    ETA_1 = '1'
    ETA_PI = 'pi'

    def __call__(self, unit_class: int) -> int:
        """Value on a unit class (extended to O* F*^2)"""
        return unit_character_value(unit_class, ramified=(self == Eta.ETA_PI))


class Verdict(str, Enum):
    IRREDUCIBLE = 'Irreducible'
    TWO_GENERIC_SUMMANDS = 'TwoGenericSummands'
    UNKNOWN = 'Unknown'


def _as_alpha(values: Sequence) -> Alpha:
    return tuple(GaussianRational.coerce(a) for a in values)


@dataclass(frozen=True)
class UnramifiedData:
    """(alpha, beta, branch, eta) for rank n"""
    n: int
    alpha: Alpha
    beta: GaussianRational
    branch: Branch = Branch.PLUS
    eta: Eta = Eta.ETA_1

    def __post_init__(self):
        object.__setattr__(self, 'alpha', _as_alpha(self.alpha))
        object.__setattr__(self, 'beta', GaussianRational.coerce(self.beta))
        object.__setattr__(self, 'branch', Branch(self.branch))
        object.__setattr__(self, 'eta', Eta(self.eta))
        if self.n < 1:
            raise InvalidInput(f"rank must be >= 1, got {self.n}")
        if len(self.alpha) != self.n:
            raise DimensionMismatch(f"alpha has {len(self.alpha)} entries, expected {self.n}")
        if any(a.is_zero() for a in self.alpha):
            raise InvalidInput("alpha entries must be nonzero")
        if self.beta.is_zero():
            raise InvalidInput("beta must be nonzero")

    def replace(self, **changes) -> 'UnramifiedData':
        values = {'n': self.n, 'alpha': self.alpha, 'beta': self.beta,
                  'branch': self.branch, 'eta': self.eta}
        values.update(changes)
        return UnramifiedData(**values)

    def label(self) -> 'ExtensionLabel':
        return ExtensionLabel(self.alpha, self.beta, self.branch)


@dataclass(frozen=True)
class ExtensionLabel:
    """One element of E(omega)"""
    alpha: Alpha
    beta: GaussianRational
    sign: Branch

    def canonical(self) -> Tuple:
        """Hashable key identifying the label up to the Weyl action on alpha"""
        return (canonical_alpha(self.alpha), self.beta, self.sign.value)

    def __str__(self) -> str:
        alpha = ', '.join(str(a) for a in self.alpha)
        mark = '+' if self.sign == Branch.PLUS else '-'
        return f"({alpha}; {self.beta})^{mark}"


def _entry_key(a: GaussianRational) -> Tuple:
    return a.sort_key()


def canonical_alpha(alpha: Sequence) -> Alpha:
    """W-orbit representative: each entry replaced by min(a, 1/a), then sorted"""
    reduced = []
    for a in _as_alpha(alpha):
        inverse = a.inverse()
        reduced.append(min(a, inverse, key=_entry_key))
    return tuple(sorted(reduced, key=_entry_key))


def weyl_act_alpha(w: SignedPermutation, alpha: Sequence) -> Alpha:
    """(^w alpha)_{perm[i]} = alpha_i^{signs[i]}"""
    alpha = _as_alpha(alpha)
    if len(alpha) != w.n:
        raise DimensionMismatch(f"W of rank {w.n} cannot act on {len(alpha)} parameters")
    result: List[Optional[GaussianRational]] = [None] * w.n
    for i, a in enumerate(alpha):
        result[w.perm[i]] = a if w.signs[i] == 1 else a.inverse()
    return tuple(result)


def chi_psi_eval(d: UnramifiedData, ct: CoverTorusElement, cfg: FieldConfig) -> PhasedScalar:
    """eps * prod alpha_i^{k_i} * gamma_psi(det t) on the Sp torus cover"""
    if ct.n != d.n:
        raise DimensionMismatch(f"torus element of rank {ct.n} for data of rank {d.n}")
    if ct.base.y != SquareClassElement():
        raise InvalidInput("chi_psi_eval needs an element of the Sp torus (y = 1)",
                           details={'y': ct.base.y.token()})
    value = GaussianRational(ct.eps)
    for a, k in zip(d.alpha, ct.base.orders()):
        value = value * a ** k
    return PhasedScalar(gamma_weil(ct.base.det(), cfg), SurdScalar(value, 0, cfg.q))


def quadratic_twist(d: UnramifiedData, c: SquareClassElement) -> UnramifiedData:
    """
    Twist by eta_c. Since eta_u0(a) = (-1)^{ord a}, the u0-twist sends
    (alpha, beta) to (-alpha, (-1)^n beta); classes with odd ord are ramified.
    """
    if c.ord % 2:
        raise TwistNotUnramified(f"twist by {c.token()} is ramified on O*",
                                 details={'class': c.token()})
    if c.unit_class == TRIVIAL:
        return d
    sign = -1 if d.n % 2 else 1
    return d.replace(alpha=tuple(-a for a in d.alpha), beta=d.beta * sign)


def extension_set(d: UnramifiedData) -> Tuple[ExtensionLabel, ...]:
    """The four labels; the two plus labels are the standard extensions"""
    twisted = quadratic_twist(d, SquareClassElement.u0())
    return (
        ExtensionLabel(d.alpha, d.beta, Branch.PLUS),
        ExtensionLabel(d.alpha, d.beta, Branch.MINUS),
        ExtensionLabel(twisted.alpha, twisted.beta, Branch.PLUS),
        ExtensionLabel(twisted.alpha, twisted.beta, Branch.MINUS),
    )


def r_omega_brute_force(d: UnramifiedData) -> Tuple[SquareClassElement, ...]:
    """Search W for ^w(alpha, beta) = u0-twist of (alpha, beta)"""
    twisted = quadratic_twist(d, SquareClassElement.u0())
    if twisted.beta != d.beta:
        return (SquareClassElement(),)
    target = twisted.alpha
    for w in hyperoctahedral_group(d.n):
        if weyl_act_alpha(w, d.alpha) == target:
            return (SquareClassElement(), SquareClassElement.u0())
    return (SquareClassElement(),)


def _negation_class(a: GaussianRational) -> Tuple[GaussianRational, bool]:
    """
    Representative c of {a, 1/a, -a, -1/a} and whether a lies in {c, 1/c}.
    """
    inverse = a.inverse()
    orbit = [a, inverse, -a, -inverse]
    c = min(orbit, key=_entry_key)
    return c, a in (c, c.inverse())


def r_omega_criterion(d: UnramifiedData) -> Tuple[SquareClassElement, ...]:
    """
    n even and alpha splits, up to W, into pairs (a, -a).

    Within each class {a, 1/a, -a, -1/a} the entries in {a, 1/a} must match
    the entries in {-a, -1/a} one for one; for a = +-i the two halves
    coincide and any even count pairs off.
    """
    if d.n % 2:
        return (SquareClassElement(),)
    balance = {}
    for a in d.alpha:
        c, positive = _negation_class(a)
        if c * c == GaussianRational(-1):
            balance[c] = balance.get(c, 0) + 1
            continue
        balance[c] = balance.get(c, 0) + (1 if positive else -1)
    for c, count in balance.items():
        if c * c == GaussianRational(-1):
            if count % 2:
                return (SquareClassElement(),)
        elif count:
            return (SquareClassElement(),)
    return (SquareClassElement(), SquareClassElement.u0())


def r_omega(d: UnramifiedData, method: str = 'both') -> Tuple[SquareClassElement, ...]:
    """
    R(omega) inside {1, u0}; 'both' runs the search and the pairing criterion
    and insists they agree.
    """
    if method == 'brute_force':
        return r_omega_brute_force(d)
    if method == 'criterion':
        return r_omega_criterion(d)
    brute = r_omega_brute_force(d)
    criterion = r_omega_criterion(d)
    if brute != criterion:
        raise InvariantViolation(
            "R(omega) search and pairing criterion disagree",
            details={'alpha': [str(a) for a in d.alpha], 'brute_force': len(brute),
                     'criterion': len(criterion)})
    return brute


def is_unitary(d: UnramifiedData) -> bool:
    return all(a.norm() == 1 for a in d.alpha)


@dataclass(frozen=True)
class ClassificationResult:
    verdict: Verdict
    r_omega_order: int
    unitary: bool


def classify(d: UnramifiedData) -> ClassificationResult:
    """
    Unitary data: irreducible when R(omega) is trivial, otherwise a sum of
    two generic summands. Non-unitary data cannot be certified.
    """
    order = len(r_omega(d))
    unitary = is_unitary(d)
    if not unitary:
        verdict = Verdict.UNKNOWN
    elif order == 1:
        verdict = Verdict.IRREDUCIBLE
    else:
        verdict = Verdict.TWO_GENERIC_SUMMANDS
    logger.debug(f"✓ CLASSIFIED: n={d.n}, |R|={order}, unitary={unitary} -> {verdict.value}")
    return ClassificationResult(verdict, order, unitary)


def central_character(label: ExtensionLabel, a: SquareClassElement, eps: int,
                      cfg: FieldConfig) -> PhasedScalar:
    """
    mu(a I, eps) = eps * beta^{ord a} * gamma_psi(a^n)^{-1} * (a^n, pi)^m,
    m = 0 on plus labels and 1 on minus labels.
    """
    n = len(label.alpha)
    a_n = a ** n
    sign = eps
    if label.sign == Branch.MINUS:
        sign *= hilbert(a_n, SquareClassElement.pi(), cfg)
    phase = gamma_weil(a_n, cfg).inverse() * Phase.from_sign(sign, cfg)
    return PhasedScalar(phase, SurdScalar(label.beta ** a.ord, 0, cfg.q))
