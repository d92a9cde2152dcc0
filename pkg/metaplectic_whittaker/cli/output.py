"""
Rendering of command results as JSON, CSV or text

JSON output is {config, results, provenance} with sorted keys; nothing time-
or host-dependent is written, so identical jobs give identical bytes.
"""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from ..__version__ import __version__
from ..arithmetic.field_arith import FieldConfig
from ..representations.whittaker import WhittakerValue
from ..utils.errors import InvalidInput
from ..utils.logging import logger

# Provenance labels read by downstream comparison tooling
SP_UNIT_FORMULA = "Eq 5.1"
SP_PI_FORMULA = "Eq 5.2"
K_PLUS_FORMULA = "Eq 6.1"
K_MINUS_FORMULA = "Eq 6.2"


@dataclass
class CommandResult:
    """Everything a command produced, before rendering"""
    command: str
    config: Dict[str, Any]
    results: Any
    table: Optional[pd.DataFrame] = None
    provenance: Dict[str, Any] = field(default_factory=dict)
    summary: List[str] = field(default_factory=list)
    exit_code: int = 0


def provenance(formula: Optional[str] = None) -> Dict[str, Any]:
    block = {'package_version': __version__}
    if formula is not None:
        block['formula'] = formula
    return block


def dump_json(payload: Dict[str, Any]) -> str:
    """Canonical JSON text; WhittakerValue cells are written in canonical form"""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False,
                      default=_json_default) + '\n'


def _json_default(value):
    if isinstance(value, WhittakerValue):
        return value.to_canonical_string()
    return str(value)


class TableRenderer:
    """Render CommandResults in one of the supported output formats"""

    def __init__(self, output_format: str = 'json'):
        if output_format not in ('json', 'csv', 'text'):
            raise InvalidInput(f"Unknown output format: {output_format!r}")
        self.output_format = output_format
        self.render_stats = {'json': 0, 'csv': 0, 'text': 0}

    def render(self, result: CommandResult) -> str:
        """Render a result; never returns an empty string"""
        self.render_stats[self.output_format] += 1
        if self.output_format == 'json':
            return self._render_json(result)
        if self.output_format == 'csv':
            return self._render_csv(result)
        return self._render_text(result)

    def _render_json(self, result: CommandResult) -> str:
        return dump_json({
            'config': result.config,
            'results': result.results,
            'provenance': result.provenance,
        })

    def _render_csv(self, result: CommandResult) -> str:
        table = self._finalize_table(result)
        return table.to_csv(index=False)

    def _render_text(self, result: CommandResult) -> str:
        lines = []
        lines.append("=" * 70)
        lines.append(result.command.upper())
        lines.append("=" * 70)
        lines.extend(result.summary)
        table = self._finalize_table(result)
        if result.table is not None:
            lines.append("")
            lines.append(table.to_string(index=False))
        lines.append("=" * 70)
        return "\n".join(lines) + "\n"

    def _finalize_table(self, result: CommandResult) -> pd.DataFrame:
        """The command's table, or a key/value table built from scalar results"""
        if result.table is not None and not result.table.empty:
            return result.table
        if isinstance(result.results, dict):
            rows = [{'key': key, 'value': _cell(value)}
                    for key, value in sorted(result.results.items())
                    if not isinstance(value, list)]
            if rows:
                return pd.DataFrame(rows, columns=['key', 'value'])
        logger.debug(f"No tabular data for {result.command}; rendering empty table")
        return pd.DataFrame({'command': [result.command], 'rows': [0]})


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return ';'.join(str(v) for v in value)
    return str(value)


def whittaker_table_frame(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    """Flatten whittaker-table rows: k is ';'-joined, values as canonical strings"""
    frame = pd.DataFrame([{key: _cell(value) for key, value in row.items()} for row in rows])
    return frame


def parse_table_json(text: str) -> Dict[str, Any]:
    """
    Re-read whittaker-table JSON output. The 'value' cells come back as
    WhittakerValue objects, so dump_json(parse_table_json(text)) == text.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"Not a JSON table: {e}")
    try:
        n = int(payload['config']['n'])
        cfg = FieldConfig(int(payload['config']['q']))
        rows = payload['results']['rows']
    except (KeyError, TypeError) as e:
        raise InvalidInput(f"JSON table is missing {e}")
    for row in rows:
        row['value'] = WhittakerValue.parse(row['value'], n, cfg)
    return payload
