"""
Helper utilities for the metaplectic Whittaker toolkit
"""
import os
import time
from typing import Any, Dict, List, Optional, Sequence

import psutil

# Durations recorded by PerformanceTimer, keyed by operation name
performance_metrics: Dict[str, float] = {}


def get_memory_usage() -> Dict[str, float]:
    """Resident memory of this process in MB"""
    try:
        process = psutil.Process(os.getpid())
        return {
            'rss_mb': process.memory_info().rss / 2 ** 20,
            'percent': process.memory_percent(),
        }
    except psutil.Error:
        return {'rss_mb': 0.0, 'percent': 0.0}


def get_system_info() -> Dict[str, Any]:
    """CPU and memory figures for the selfcheck banner"""
    try:
        return {
            'cpu_count': psutil.cpu_count(),
            'physical_cores': psutil.cpu_count(logical=False),
            'memory_total_gb': psutil.virtual_memory().total / 2 ** 30,
        }
    except psutil.Error:
        return {}


def chunked(items: Sequence, n_chunks: int) -> List[Sequence]:
    """Split items into at most n_chunks contiguous, nearly equal slices"""
    n_chunks = max(1, min(n_chunks, len(items)))
    size, extra = divmod(len(items), n_chunks)
    chunks = []
    start = 0
    for index in range(n_chunks):
        stop = start + size + (1 if index < extra else 0)
        chunks.append(items[start:stop])
        start = stop
    return chunks


def format_duration(seconds: float) -> str:
    """Format a duration for report lines"""
    if seconds < 1:
        return f"{seconds * 1000:.0f} ms"
    return f"{seconds:.2f} s"


class PerformanceTimer:
    """Times a block with perf_counter and records it in performance_metrics"""

    def __init__(self, operation_name: str):
        self.operation_name = operation_name
        self._start: Optional[float] = None
        self._elapsed: Optional[float] = None

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self._elapsed = time.perf_counter() - self._start
        performance_metrics[self.operation_name] = self._elapsed

    def get_duration(self) -> Optional[float]:
        """Seconds spent inside the block, None while it is still running"""
        return self._elapsed
