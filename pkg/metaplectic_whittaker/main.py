"""
Command-line entry point

    python -m metaplectic_whittaker <command> [flags]

Commands: hilbert, whittaker-table, spanning-set, classify, selfcheck.
Command output goes to stdout; logs go to stderr. Exit codes: 0 success,
1 invalid input, 2 invariant violation or a failed selfcheck.

Scalar lists that start with a minus sign need the '=' form, e.g.
--alpha=-2,3.
"""
import argparse
import sys
from typing import Any, Dict, List, Optional

from .__version__ import __version__
from .cli.commands import COMMAND_TABLE
from .cli.job_config import COMMANDS, JobConfigValidator, load_job_file
from .cli.output import TableRenderer, dump_json
from .utils.config import config
from .utils.errors import InvalidInput, InvariantViolation, WhittakerError
from .utils.logging import logger

# Flags that map one-to-one onto JobConfig fields
JOB_FIELDS = ['q', 'n', 'alpha', 'beta', 'eta', 'branch', 'y', 'k_max', 'k', 'output',
              'workers', 'alternator', 'a', 'b', 'n_max', 'q_list']


class JobArgumentParser(argparse.ArgumentParser):
    """Usage errors become InvalidInput so they share exit code 1"""

    def error(self, message: str):
        raise InvalidInput(f"Invalid arguments: {message}", details={'usage': self.format_usage().strip()})


def _job_flags() -> argparse.ArgumentParser:
    flags = JobArgumentParser(add_help=False)
    flags.add_argument('--config', dest='config_file', help="YAML job file; explicit flags override it")
    flags.add_argument('--q', type=int, help="Residue field size, an odd prime power >= 3")
    flags.add_argument('--n', type=int, help="Rank n of GSp(2n)")
    flags.add_argument('--alpha', help="Comma-separated exact scalars, e.g. i,-i or 1/2,3")
    flags.add_argument('--beta', help="Exact scalar beta (default 1)")
    flags.add_argument('--eta', choices=['1', 'pi'], help="Splitting character")
    flags.add_argument('--branch', choices=['plus', 'minus'], help="Extension branch")
    flags.add_argument('--y', help="Similitude square class: 1, u0, pi or piu0")
    flags.add_argument('--k-max', type=int, dest='k_max', help="Largest k_n in the table grid")
    flags.add_argument('--k', help="Explicit comma-separated k vector")
    flags.add_argument('--output', choices=config.OUTPUT_FORMATS, help="Output format (default json)")
    flags.add_argument('--workers', type=int, help="Alternator worker processes; 0 = one per core")
    flags.add_argument('--alternator', choices=['orbit', 'naive'], help="Alternator method")
    flags.add_argument('--a', help="First square-class token for hilbert")
    flags.add_argument('--b', help="Second square-class token for hilbert")
    flags.add_argument('--n-max', type=int, dest='n_max', help="Largest rank for selfcheck")
    flags.add_argument('--q-list', dest='q_list', help="Comma-separated q values for selfcheck")
    flags.add_argument('--log-level', dest='log_level', help="DEBUG, INFO, WARNING or ERROR")
    return flags


def build_parser() -> argparse.ArgumentParser:
    parser = JobArgumentParser(
        prog='metaplectic_whittaker',
        description="Exact spherical Whittaker functions on the metaplectic cover of GSp(2n)",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    flags = _job_flags()
    helps = {
        'hilbert': "Hilbert symbol (a, b)_F of two square classes",
        'whittaker-table': "Sp-level Whittaker values over a dominant k grid",
        'spanning-set': "The four k-functions, their probe table and rank",
        'classify': "Reducibility verdict, R(omega) and eigenvalues",
        'selfcheck': "Run the staged invariant suite",
    }
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[flags], help=helps[command])
    return parser


def collect_job(args: argparse.Namespace) -> Dict[str, Any]:
    """YAML job fields overlaid with the flags actually given"""
    raw: Dict[str, Any] = {}
    if args.config_file:
        raw.update(load_job_file(args.config_file))
    for key in JOB_FIELDS:
        value = getattr(args, key, None)
        if value is not None:
            raw[key] = value
    raw['command'] = args.command
    return raw


def _print_error(error: WhittakerError):
    print(dump_json({'error': error.to_dict()}), end='')


def main(argv: Optional[List[str]] = None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return 1
        if args.log_level:
            logger.set_level(args.log_level)

        job = JobConfigValidator().validate_or_raise(collect_job(args))
        config.apply_overrides(workers=job.workers, alternator=job.alternator)
        logger.info(f"Running {job.command} (q={job.q}, n={job.n})")

        result = COMMAND_TABLE[job.command](job)
        print(TableRenderer(job.output).render(result), end='')
        return result.exit_code
    except InvalidInput as e:
        logger.error(f"✗ {e.message}")
        _print_error(e)
        return 1
    except InvariantViolation as e:
        logger.error(f"✗ INVARIANT VIOLATION: {e.message}")
        _print_error(e)
        return 2
    except WhittakerError as e:
        logger.error(f"✗ {e.message}")
        _print_error(e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
