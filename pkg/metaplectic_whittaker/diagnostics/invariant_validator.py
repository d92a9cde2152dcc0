"""
Audit trail for invariant checks

Every identity the selfcheck verifies is recorded as a CheckResult so that a
run can be summarised, rendered and inspected afterwards.
"""
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from ..utils.helpers import format_duration
from ..utils.logging import logger


@dataclass
class CheckResult:
    """Outcome of one invariant check"""
    name: str
    passed: bool
    detail: str = ''
    duration: Optional[float] = None
    counterexample: Dict[str, Any] = field(default_factory=dict)

    def format(self) -> str:
        mark = '✓' if self.passed else '✗'
        timing = f" ({format_duration(self.duration)})" if self.duration is not None else ''
        return f"{mark} {self.name}: {self.detail}{timing}"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class InvariantValidator:
    """
    Collects CheckResults

    This is the ground truth layer: a check passes only when the identity
    held exactly on every sampled input.
    """

    def __init__(self):
        self.checks: List[CheckResult] = []

    def record(self, name: str, passed: bool, detail: str = '',
               duration: Optional[float] = None,
               counterexample: Optional[Dict[str, Any]] = None) -> CheckResult:
        result = CheckResult(name, passed, detail, duration, counterexample or {})
        self.checks.append(result)
        if passed:
            logger.info(f"✓ VERIFIED: {name} {detail}")
        else:
            logger.error(f"✗ FAILED: {name} {detail} {result.counterexample}")
        return result

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def get_validation_summary(self) -> Dict[str, Any]:
        """Get summary of all checks"""
        return {
            'total_checks': len(self.checks),
            'passed': len(self.checks) - len(self.failures),
            'failed': len(self.failures),
            'validation_status': 'PASSED' if not self.failures else 'FAILED',
        }

    def format_report(self) -> str:
        """Banner listing every check"""
        summary = self.get_validation_summary()
        report = "=" * 70 + "\n"
        report += "INVARIANT SELFCHECK REPORT\n"
        report += "=" * 70 + "\n"
        for check in self.checks:
            report += check.format() + "\n"
            if not check.passed and check.counterexample:
                for key, value in sorted(check.counterexample.items()):
                    report += f"     {key}: {value}\n"
        report += "=" * 70 + "\n"
        report += f"{summary['passed']}/{summary['total_checks']} checks passed: "
        report += f"{summary['validation_status']}\n"
        report += "=" * 70 + "\n"
        return report
