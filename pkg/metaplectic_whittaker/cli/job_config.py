"""
Job configuration for the command-line interface

A job is assembled from an optional YAML file and command-line flags, then
validated in one pass so that every problem is reported before any
computation starts.
"""
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from ..arithmetic.exact_scalars import GaussianRational
from ..arithmetic.field_arith import FieldConfig, SquareClassElement
from ..representations.characters import Branch, Eta, UnramifiedData
from ..utils.config import config
from ..utils.errors import InvalidInput, InvalidJobConfig
from ..utils.logging import logger

COMMANDS = ['hilbert', 'whittaker-table', 'spanning-set', 'classify', 'selfcheck']

# Commands that need alpha
NEEDS_ALPHA = {'spanning-set', 'classify'}
NEEDS_RANK = {'whittaker-table', 'spanning-set', 'classify'}


@dataclass(frozen=True)
class JobConfig:
    """A validated job; scalars are already parsed"""
    command: str
    q: int
    n: int = 1
    alpha: Optional[Tuple[GaussianRational, ...]] = None
    beta: GaussianRational = GaussianRational(1)
    eta: Eta = Eta.ETA_1
    branch: Branch = Branch.PLUS
    k: Optional[Tuple[int, ...]] = None
    k_max: int = 3
    y: SquareClassElement = SquareClassElement()
    output: str = 'json'
    workers: Optional[int] = None
    alternator: Optional[str] = None
    a: Optional[SquareClassElement] = None
    b: Optional[SquareClassElement] = None
    n_max: Optional[int] = None
    q_list: Optional[Tuple[int, ...]] = None

    @property
    def field_config(self) -> FieldConfig:
        return FieldConfig(self.q)

    def data(self) -> UnramifiedData:
        return UnramifiedData(self.n, self.alpha, self.beta, self.branch, self.eta)

    def to_dict(self) -> Dict[str, Any]:
        """Plain, deterministic form written into JSON output"""
        raw = asdict(self)
        raw['alpha'] = [str(a) for a in self.alpha] if self.alpha is not None else None
        raw['beta'] = str(self.beta)
        raw['eta'] = self.eta.value
        raw['branch'] = self.branch.value
        raw['k'] = list(self.k) if self.k is not None else None
        raw['y'] = self.y.token()
        raw['a'] = self.a.token() if self.a is not None else None
        raw['b'] = self.b.token() if self.b is not None else None
        raw['q_list'] = list(self.q_list) if self.q_list is not None else None
        # runtime knobs do not change results
        raw.pop('workers')
        raw.pop('alternator')
        return raw


def load_job_file(path: str) -> Dict[str, Any]:
    """Read job fields from a YAML file"""
    file_path = Path(path)
    if not file_path.exists():
        raise InvalidInput(f"Job file not found: {path}", details={'path': path})
    try:
        with open(file_path, 'r') as handle:
            loaded = yaml.safe_load(handle) or {}
    except yaml.YAMLError as e:
        raise InvalidInput(f"Job file is not valid YAML: {e}", details={'path': path})
    if not isinstance(loaded, dict):
        raise InvalidInput("Job file must contain a mapping", details={'path': path})
    logger.debug(f"Loaded job file {path} with keys {sorted(loaded)}")
    return loaded


def _split_list(value) -> List[str]:
    if value is None:
        return []
    if isinstance(value, (list, tuple)):
        return [str(v).strip() for v in value]
    return [part.strip() for part in str(value).split(',') if part.strip()]


class JobConfigValidator:
    """Validates raw job fields and builds a JobConfig"""

    def __init__(self):
        self.validation_results = {}

    def validate(self, raw: Dict[str, Any]) -> Tuple[bool, Dict]:
        """
        Validate a raw job

        Args:
            raw: merged YAML and flag values, None meaning "not given"

        Returns:
            Tuple of (is_valid, validation_results); results['job'] holds the
            JobConfig when valid
        """
        raw = {key: value for key, value in raw.items() if value is not None}
        results = {'errors': [], 'warnings': [], 'job': None, 'command': raw.get('command')}
        errors, warnings = results['errors'], results['warnings']
        parsed: Dict[str, Any] = {}

        command = raw.get('command')
        if command not in COMMANDS:
            errors.append(f"Unknown command: {command!r}")
        parsed['command'] = command

        parsed['q'] = self._check_q(raw.get('q', config.DEFAULT_Q), 'q', errors)

        n = raw.get('n', 1)
        try:
            n = int(n)
            if n < 1:
                errors.append(f"n must be >= 1, got {n}")
        except (TypeError, ValueError):
            errors.append(f"n must be an integer, got {n!r}")
            n = 1
        parsed['n'] = n
        if command in NEEDS_RANK and n >= config.EXPENSIVE_RANK:
            warnings.append(f"n = {n} enumerates {2 ** n} * {n}! Weyl elements; expect long runs")

        alpha = self._check_scalars(_split_list(raw.get('alpha')), 'alpha', errors)
        if alpha is not None:
            if len(alpha) != n:
                errors.append(f"alpha has {len(alpha)} entries, expected n = {n}")
            parsed['alpha'] = tuple(alpha)
        elif command in NEEDS_ALPHA:
            errors.append(f"{command} requires --alpha")

        beta = self._check_scalars(_split_list(raw.get('beta', '1')), 'beta', errors)
        if beta is not None:
            if len(beta) != 1:
                errors.append("beta must be a single scalar")
            else:
                parsed['beta'] = beta[0]

        self._check_choice(raw, 'eta', Eta, parsed, errors)
        self._check_choice(raw, 'branch', Branch, parsed, errors)

        y_token = str(raw.get('y', '1'))
        if y_token not in config.Y_TOKENS:
            errors.append(f"y must be one of {config.Y_TOKENS}, got {y_token!r}")
        else:
            parsed['y'] = SquareClassElement.parse(y_token)

        k_max = raw.get('k_max', 3)
        try:
            parsed['k_max'] = int(k_max)
            if parsed['k_max'] < 0:
                errors.append(f"k_max must be >= 0, got {k_max}")
            elif parsed['k_max'] > config.EXPENSIVE_K_MAX:
                warnings.append(f"k_max = {k_max} produces large alternator bodies")
        except (TypeError, ValueError):
            errors.append(f"k_max must be an integer, got {k_max!r}")

        if 'k' in raw:
            try:
                k = tuple(int(part) for part in _split_list(raw['k']))
                if len(k) != n:
                    errors.append(f"k has {len(k)} entries, expected n = {n}")
                parsed['k'] = k
            except ValueError:
                errors.append(f"k must be a list of integers, got {raw['k']!r}")

        output = raw.get('output', 'json')
        if output not in config.OUTPUT_FORMATS:
            errors.append(f"output must be one of {config.OUTPUT_FORMATS}, got {output!r}")
        parsed['output'] = output

        if 'workers' in raw:
            try:
                parsed['workers'] = int(raw['workers'])
                if parsed['workers'] < 0:
                    errors.append("workers must be >= 0")
            except (TypeError, ValueError):
                errors.append(f"workers must be an integer, got {raw['workers']!r}")
        if 'alternator' in raw:
            if raw['alternator'] not in ('orbit', 'naive'):
                errors.append(f"alternator must be 'orbit' or 'naive', got {raw['alternator']!r}")
            parsed['alternator'] = raw['alternator']

        for key in ('a', 'b'):
            if key in raw:
                try:
                    parsed[key] = SquareClassElement.parse(str(raw[key]))
                except InvalidInput as e:
                    errors.append(f"{key}: {e.message}")
            elif command == 'hilbert':
                errors.append(f"hilbert requires --{key}")

        if 'n_max' in raw:
            try:
                parsed['n_max'] = int(raw['n_max'])
                if parsed['n_max'] < 1:
                    errors.append("n_max must be >= 1")
            except (TypeError, ValueError):
                errors.append(f"n_max must be an integer, got {raw['n_max']!r}")
        if 'q_list' in raw:
            parsed['q_list'] = tuple(self._check_q(q, 'q_list', errors)
                                     for q in _split_list(raw['q_list']))

        is_valid = not errors
        if is_valid:
            results['job'] = JobConfig(**parsed)
            logger.debug(f"Job validation passed: {command}")
        else:
            logger.error(f"Job validation failed: {errors}")
        self.validation_results = results
        return is_valid, results

    def validate_or_raise(self, raw: Dict[str, Any]) -> JobConfig:
        is_valid, results = self.validate(raw)
        if not is_valid:
            raise InvalidJobConfig(results['errors'], results['warnings'])
        for warning in results['warnings']:
            logger.warning(warning)
        return results['job']

    def _check_q(self, value, name: str, errors: List[str]) -> int:
        try:
            q = int(value)
        except (TypeError, ValueError):
            errors.append(f"{name}: q must be an integer, got {value!r}")
            return config.DEFAULT_Q
        if q > config.MAX_Q:
            errors.append(f"{name}: q = {q} exceeds MAX_Q = {config.MAX_Q}")
            return q
        try:
            FieldConfig(q)
        except InvalidInput as e:
            errors.append(f"{name}: {e.message}")
        return q

    def _check_scalars(self, tokens: List[str], name: str, errors: List[str]
                       ) -> Optional[List[GaussianRational]]:
        if not tokens:
            return None
        values = []
        for token in tokens:
            try:
                value = GaussianRational.parse(token)
            except InvalidInput as e:
                errors.append(f"{name}: {e.message}")
                continue
            if value.is_zero():
                errors.append(f"{name}: entries must be nonzero, got {token!r}")
            values.append(value)
        return values

    def _check_choice(self, raw: Dict[str, Any], key: str, enum, parsed: Dict, errors: List[str]):
        if key not in raw:
            return
        try:
            parsed[key] = enum(str(raw[key]))
        except ValueError:
            allowed = [member.value for member in enum]
            errors.append(f"{key} must be one of {allowed}, got {raw[key]!r}")

    def get_validation_summary(self) -> str:
        """Get a human-readable validation summary"""
        if not self.validation_results:
            return "No validation performed yet"

        lines = []
        lines.append("=" * 60)
        lines.append("JOB VALIDATION SUMMARY")
        lines.append("=" * 60)
        lines.append(f"Command: {self.validation_results['command']}")
        status = '✓ Valid' if self.validation_results['job'] is not None else '✗ Invalid'
        lines.append(f"Status: {status}")

        if self.validation_results['warnings']:
            lines.append("\n⚠ Warnings:")
            for warning in self.validation_results['warnings']:
                lines.append(f"  - {warning}")

        if self.validation_results['errors']:
            lines.append("\n✗ Errors:")
            for error in self.validation_results['errors']:
                lines.append(f"  - {error}")

        lines.append("=" * 60)
        return "\n".join(lines)
