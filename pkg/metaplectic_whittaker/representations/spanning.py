"""
Rank of the span of the four k-functions and the central-character check.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .characters import UnramifiedData, central_character
from .whittaker import KFunction, spanning_set
from ..arithmetic.exact_scalars import PhasedScalar
from ..arithmetic.field_arith import (
    TRIVIAL,
    U0,
    FieldConfig,
    SquareClassElement,
    square_classes,
)
from ..arithmetic.linear_algebra import exact_rank
from ..groups.metaplectic_torus import CoverTorusElement, HNormalForm, TorusElement, mul
from ..utils.config import config
from ..utils.errors import InvariantViolation, UnsupportedRank
from ..utils.logging import logger


def dominant_orders(n: int, k_budget: int) -> List[Tuple[int, ...]]:
    """All 0 <= k_1 <= ... <= k_n with sum k <= k_budget, in lexicographic order"""
    results: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], remaining: int):
        if len(prefix) == n:
            results.append(prefix)
            return
        low = prefix[-1] if prefix else 0
        slots = n - len(prefix)
        for value in range(low, remaining // slots + 1):
            extend(prefix + (value,), remaining - value)

    extend((), k_budget)
    return results


def _probe(m: int, l: int, k: Tuple[int, ...], u_class: int, first_unit: int,
           cfg: FieldConfig) -> CoverTorusElement:
    t = tuple(SquareClassElement(ki, first_unit if i == 0 else TRIVIAL)
              for i, ki in enumerate(k))
    form = HNormalForm(m, SquareClassElement(l), t, SquareClassElement(0, u_class), 1)
    return form.recompose(cfg)


def default_probes(n: int, cfg: FieldConfig, k_budget: Optional[int] = None
                   ) -> List[CoverTorusElement]:
    """Dominant k with sum k <= k_budget, both m-parities, both unit classes of lambda"""
    k_budget = config.PROBE_K_BUDGET if k_budget is None else k_budget
    return [_probe(m, 0, k, u, TRIVIAL, cfg)
            for k in dominant_orders(n, k_budget)
            for m in (0, 1)
            for u in (TRIVIAL, U0)]


def equivariance_probes(n: int, m: int, cfg: FieldConfig, k_budget: Optional[int] = None
                        ) -> List[CoverTorusElement]:
    """Probes on one m-parity, also varying l and the unit class of a_1"""
    k_budget = config.PROBE_K_BUDGET if k_budget is None else k_budget
    return [_probe(m, l, k, u, first, cfg)
            for k in dominant_orders(n, k_budget)
            for l in (0, 1)
            for u in (TRIVIAL, U0)
            for first in (TRIVIAL, U0)]


def evaluation_matrix(d: UnramifiedData, probes: List[CoverTorusElement], cfg: FieldConfig
                      ) -> np.ndarray:
    """4 x len(probes) object array of PhasedScalar values"""
    functions = spanning_set(d)
    matrix = np.empty((len(functions), len(probes)), dtype=object)
    for row, function in enumerate(functions):
        for col, h in enumerate(probes):
            matrix[row, col] = function(h, cfg)
    return matrix


def _normalise_columns(matrix: np.ndarray) -> np.ndarray:
    """
    Divide every column by the g-phase of its first nonzero entry. All
    entries of one column share their g-power, so the result has none left.
    """
    values = np.empty(matrix.shape, dtype=object)
    for col in range(matrix.shape[1]):
        column = matrix[:, col]
        leading = next((entry for entry in column if not entry.is_zero()), None)
        for row, entry in enumerate(column):
            scaled = entry if leading is None else entry / leading.phase
            if scaled.g_power:
                raise InvariantViolation("mixed g-powers within one probe column",
                                         details={'column': col})
            values[row, col] = scaled.value
    return values


def rank_of_matrix(matrix: np.ndarray) -> int:
    """Exact rank of a PhasedScalar matrix over Q(i)(sqrt q)(g)"""
    if matrix.size == 0:
        return 0
    return exact_rank(_normalise_columns(matrix))


def rank_of_span(d: UnramifiedData, probes: List[CoverTorusElement], cfg: FieldConfig) -> int:
    if not probes:
        return 0
    rank = rank_of_matrix(evaluation_matrix(d, probes, cfg))
    logger.debug(f"✓ COMPUTED RANK: n={d.n}, {len(probes)} probes, rank {rank}")
    return rank


@dataclass
class EquivarianceReport:
    """Measured central characters, one per k-function"""
    characters: Dict[str, Dict[str, PhasedScalar]] = field(default_factory=dict)
    probe_counts: Dict[str, int] = field(default_factory=dict)
    constant: bool = True
    distinct: bool = True
    matches_closed_form: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.constant and self.distinct and self.matches_closed_form


def _central_elements() -> List[Tuple[str, SquareClassElement, int]]:
    return [(f"({a.token()}I,{eps:+d})", a, eps)
            for a in square_classes() for eps in (1, -1)]


def central_equivariance_check(d: UnramifiedData, cfg: FieldConfig,
                               k_budget: Optional[int] = None,
                               min_probes: int = 20) -> EquivarianceReport:
    """
    Measure k(z h) / k(h) for z = (aI, eps), a over the square classes.

    Each ratio must be independent of h, agree with the closed-form central
    character of the function's label, and the four measured characters must
    be pairwise distinct.
    """
    if d.n % 2 == 0:
        raise UnsupportedRank(f"central equivariance is checked for odd n only, got {d.n}")
    report = EquivarianceReport()
    centrals = _central_elements()

    for function in spanning_set(d):
        name = function.name
        probes = equivariance_probes(d.n, function.label.sign.m, cfg, k_budget)
        base_values = [(h, function(h, cfg)) for h in probes]
        base_values = [(h, value) for h, value in base_values if not value.is_zero()]
        report.probe_counts[name] = len(base_values)
        if len(base_values) < min_probes:
            report.constant = False
            report.failures.append(f"{name}: only {len(base_values)} nonzero probes")
            continue

        measured: Dict[str, PhasedScalar] = {}
        for key, a, eps in centrals:
            z = CoverTorusElement(TorusElement.scalar(a, d.n), eps)
            ratios = {function(mul(z, h, cfg), cfg) / value for h, value in base_values}
            if len(ratios) != 1:
                report.constant = False
                report.failures.append(f"{name}: ratio at {key} varies with h")
                continue
            ratio = ratios.pop()
            measured[key] = ratio
            if ratio != central_character(function.label, a, eps, cfg):
                report.matches_closed_form = False
                report.failures.append(f"{name}: ratio at {key} differs from closed form")
        report.characters[name] = measured

    signatures = [tuple(sorted(chars.items(), key=lambda item: item[0]))
                  for chars in report.characters.values()]
    if len(set(signatures)) != len(signatures):
        report.distinct = False
        report.failures.append("two k-functions share a central character")

    logger.debug(f"✓ CHECKED CENTRAL CHARACTERS: n={d.n}, passed={report.passed}")
    return report


def functions_coincide(f: KFunction, g: KFunction, probes: List[CoverTorusElement],
                       cfg: FieldConfig) -> bool:
    return all(f(h, cfg) == g(h, cfg) for h in probes)
