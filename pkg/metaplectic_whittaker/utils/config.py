"""
Configuration and environment management for the metaplectic Whittaker toolkit
"""
import os
from pathlib import Path
from typing import Optional

import psutil

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent


class Config:
    """Centralized configuration management"""

    # Field defaults
    DEFAULT_Q: int = int(os.getenv('MW_DEFAULT_Q', '3'))
    MAX_Q: int = 10 ** 6

    # Parallel alternator
    WORKERS: int = int(os.getenv('MW_WORKERS', '1'))
    PARALLEL_MIN_GROUP_ORDER: int = 384  # |W| for n=4
    ALTERNATOR_METHOD: str = os.getenv('MW_ALTERNATOR_METHOD', 'orbit')

    # Probe grids for rank and equivariance checks
    PROBE_K_BUDGET: int = 4

    # Logging
    LOG_LEVEL: str = os.getenv('MW_LOG_LEVEL', 'INFO')

    # Selfcheck profile (YAML)
    SELFCHECK_PROFILE: str = os.getenv(
        'MW_SELFCHECK_PROFILE', str(PROJECT_ROOT / 'data' / 'selfcheck.yaml')
    )

    # Job validation warns above these
    EXPENSIVE_RANK: int = 5
    EXPENSIVE_K_MAX: int = 8

    OUTPUT_FORMATS = ['json', 'csv', 'text']
    Y_TOKENS = ['1', 'u0', 'pi', 'piu0']

    @classmethod
    def resolve_workers(cls, requested: Optional[int] = None) -> int:
        """
        Turn a requested worker count into a concrete one.

        None uses WORKERS; 0 means one worker per physical core.
        """
        workers = cls.WORKERS if requested is None else requested
        if workers <= 0:
            workers = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
        return max(1, int(workers))

    @classmethod
    def apply_overrides(cls, workers: Optional[int] = None, alternator: Optional[str] = None):
        """Runtime overrides from the command line"""
        if workers is not None:
            cls.WORKERS = workers
        if alternator is not None:
            cls.ALTERNATOR_METHOD = alternator

    @classmethod
    def validate_config(cls) -> dict:
        """Validate configuration and return status"""
        status = {'valid': True, 'errors': [], 'warnings': []}

        if cls.DEFAULT_Q < 3 or cls.DEFAULT_Q % 2 == 0:
            status['errors'].append(f'MW_DEFAULT_Q must be odd and >= 3, got {cls.DEFAULT_Q}')
            status['valid'] = False

        if cls.ALTERNATOR_METHOD not in ('orbit', 'naive'):
            status['errors'].append(
                f'MW_ALTERNATOR_METHOD must be orbit or naive, got {cls.ALTERNATOR_METHOD}'
            )
            status['valid'] = False

        if cls.WORKERS < 0:
            status['errors'].append(f'MW_WORKERS must be >= 0, got {cls.WORKERS}')
            status['valid'] = False

        if not os.path.exists(cls.SELFCHECK_PROFILE):
            status['warnings'].append(
                f'Selfcheck profile not found, built-in defaults apply: {cls.SELFCHECK_PROFILE}'
            )

        return status


config = Config()
