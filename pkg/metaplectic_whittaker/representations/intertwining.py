"""
Local L-factors and the eigenvalues of the composite intertwining operator on
the two generic summands (n even, R(omega) of order 2).
"""
from fractions import Fraction
from typing import Tuple

from .characters import Eta
from ..arithmetic.field_arith import U0, FieldConfig
from ..utils.errors import UnsupportedRank


def local_l_factor(value_at_pi: int, s: int, q: int) -> Fraction:
    """L(eta, s) = (1 - eta(pi) q^{-s})^{-1} for an unramified eta"""
    return 1 / (1 - Fraction(value_at_pi) * Fraction(q) ** -s)


def l_ratio(cfg: FieldConfig) -> Fraction:
    """L(eta_u0, 0) / L(eta_u0, 1) = (1 + q^{-1}) / 2, using eta_u0(pi) = -1"""
    return local_l_factor(-1, 0, cfg.q) / local_l_factor(-1, 1, cfg.q)


def intertwining_eigenvalue(n: int, eta: Eta, cfg: FieldConfig) -> Fraction:
    """Eigenvalue on the spherical vector for the splitting eta: l_ratio^{n/2} eta(u0)"""
    if n % 2:
        raise UnsupportedRank(f"intertwining eigenvalues need even n, got {n}")
    return l_ratio(cfg) ** (n // 2) * Eta(eta)(U0)


def l_ratio_eigenvalues(n: int, cfg: FieldConfig) -> Tuple[Fraction, Fraction]:
    """(eta_1 eigenvalue, eta_pi eigenvalue) = (+r^{n/2}, -r^{n/2})"""
    return (intertwining_eigenvalue(n, Eta.ETA_1, cfg),
            intertwining_eigenvalue(n, Eta.ETA_PI, cfg))
