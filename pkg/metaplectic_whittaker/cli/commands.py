"""
The five commands. Each takes a validated JobConfig and returns a
CommandResult; rendering and exit codes are handled by main.
"""
from typing import Any, Dict, List

import pandas as pd

from .job_config import JobConfig
from .output import (
    K_MINUS_FORMULA,
    K_PLUS_FORMULA,
    SP_PI_FORMULA,
    SP_UNIT_FORMULA,
    CommandResult,
    provenance,
    whittaker_table_frame,
)
from ..arithmetic.field_arith import hilbert
from ..representations.characters import Branch, Verdict, classify, extension_set, r_omega
from ..representations.intertwining import l_ratio_eigenvalues
from ..representations.spanning import (
    default_probes,
    dominant_orders,
    evaluation_matrix,
    rank_of_matrix,
)
from ..representations.whittaker import sp_whittaker, spanning_set
from ..utils.logging import logger


def cmd_hilbert(job: JobConfig) -> CommandResult:
    """(a, b)_F"""
    cfg = job.field_config
    value = hilbert(job.a, job.b, cfg)
    logger.info(f"✓ COMPUTED HILBERT SYMBOL: ({job.a.token()}, {job.b.token()}) = {value:+d}, q={job.q}")
    results = {'a': job.a.token(), 'b': job.b.token(), 'q': job.q, 'value': value}
    return CommandResult('hilbert', job.to_dict(), results, provenance=provenance(),
                         summary=[f"({job.a.token()}, {job.b.token()})_F = {value:+d}  (q = {job.q})"])


def _k_grid(job: JobConfig) -> List[tuple]:
    if job.k is not None:
        return [job.k]
    return [k for k in dominant_orders(job.n, job.n * job.k_max) if k[-1] <= job.k_max]


def cmd_whittaker_table(job: JobConfig) -> CommandResult:
    """sp_whittaker over the dominant grid k_n <= k_max (or one explicit k)"""
    cfg = job.field_config
    rows: List[Dict[str, Any]] = []
    for k in _k_grid(job):
        value = sp_whittaker(job.n, job.y, k, cfg)
        row = {'k': list(k), 'value': value}
        if job.alpha is not None:
            row['value_at_alpha'] = str(value.evaluate(job.alpha, cfg))
        rows.append(row)
    logger.info(f"✓ COMPUTED WHITTAKER TABLE: n={job.n}, y={job.y.token()}, {len(rows)} rows")

    formula = SP_UNIT_FORMULA if job.y.ord == 0 else SP_PI_FORMULA
    return CommandResult(
        'whittaker-table', job.to_dict(), {'rows': rows},
        table=whittaker_table_frame(rows), provenance=provenance(formula),
        summary=[f"n = {job.n}, y = {job.y.token()}, q = {job.q}, {len(rows)} rows"],
    )


def _k_formula(branch: Branch) -> str:
    return K_PLUS_FORMULA if branch == Branch.PLUS else K_MINUS_FORMULA


def cmd_spanning_set(job: JobConfig) -> CommandResult:
    """The four k-functions, their values on the default probes and the rank"""
    cfg = job.field_config
    d = job.data()
    functions = spanning_set(d)
    probes = default_probes(d.n, cfg)
    matrix = evaluation_matrix(d, probes, cfg)
    rank = rank_of_matrix(matrix)
    names = [function.name for function in functions]

    records = []
    for col, h in enumerate(probes):
        record = {'probe': str(h)}
        for row, name in enumerate(names):
            record[name] = str(matrix[row, col])
        records.append(record)
    logger.info(f"✓ COMPUTED SPANNING SET: n={d.n}, {len(probes)} probes, rank {rank}")

    formulas = {function.name: _k_formula(function.label.sign) for function in functions}
    results = {'functions': names, 'formulas': formulas, 'rank': rank, 'rows': records}
    return CommandResult(
        'spanning-set', job.to_dict(), results,
        table=pd.DataFrame(records, columns=['probe'] + names),
        provenance=provenance(_k_formula(d.branch)),
        summary=[f"functions: {', '.join(names)}", f"rank of span: {rank}"],
    )


def cmd_classify(job: JobConfig) -> CommandResult:
    """Verdict, |R(omega)|, unitarity and, for two generic summands with n even, the eigenvalue pair"""
    cfg = job.field_config
    d = job.data()
    result = classify(d)
    results: Dict[str, Any] = {
        'verdict': result.verdict.value,
        'r_omega_order': result.r_omega_order,
        'r_omega': [c.token() for c in r_omega(d)],
        'unitary': result.unitary,
        'extension_set': [str(label) for label in extension_set(d)],
    }
    summary = [f"verdict: {result.verdict.value}",
               f"|R(omega)| = {result.r_omega_order}",
               f"unitary: {result.unitary}"]
    if result.verdict == Verdict.TWO_GENERIC_SUMMANDS and d.n % 2 == 0:
        plus, minus = l_ratio_eigenvalues(d.n, cfg)
        results['eigenvalues'] = [str(plus), str(minus)]
        summary.append(f"eigenvalues: {plus}, {minus}")
    logger.info(f"✓ CLASSIFIED: n={d.n}, q={job.q} -> {result.verdict.value}")
    return CommandResult('classify', job.to_dict(), results,
                         provenance=provenance(), summary=summary)


def cmd_selfcheck(job: JobConfig) -> CommandResult:
    """Run the staged invariant suite; exit code 2 when any stage fails"""
    from ..diagnostics.selfcheck import run_selfcheck

    validator = run_selfcheck(n_max=job.n_max, q_list=job.q_list)
    summary = validator.get_validation_summary()
    table = pd.DataFrame([
        {'check': check.name, 'passed': check.passed, 'detail': check.detail}
        for check in validator.checks
    ], columns=['check', 'passed', 'detail'])
    return CommandResult(
        'selfcheck', job.to_dict(),
        {'status': summary['validation_status'],
         'checks': [check.to_dict() for check in validator.checks]},
        table=table, provenance=provenance(),
        summary=[f"status: {summary['validation_status']}",
                 f"{summary['passed']}/{summary['total_checks']} checks passed"],
        exit_code=0 if summary['validation_status'] == 'PASSED' else 2,
    )


COMMAND_TABLE = {
    'hilbert': cmd_hilbert,
    'whittaker-table': cmd_whittaker_table,
    'spanning-set': cmd_spanning_set,
    'classify': cmd_classify,
    'selfcheck': cmd_selfcheck,
}
