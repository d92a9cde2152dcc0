"""
Structured logging utility for the metaplectic Whittaker toolkit
"""
import logging
import os
import sys
from datetime import datetime
from typing import List, Optional


class WhittakerLogger:
    """Centralized logging for library code and the CLI"""

    MAX_HISTORY = 100

    def __init__(self, name: str = "MetaplecticWhittaker", level: Optional[int] = None):
        if level is None:
            level = getattr(logging, os.getenv('MW_LOG_LEVEL', 'INFO').upper(), logging.INFO)
        self.logger = logging.getLogger(name)
        self.logger.setLevel(level)

        # Prevent duplicate handlers
        if not self.logger.handlers:
            # stdout is reserved for command output
            handler = logging.StreamHandler(sys.stderr)
            handler.setLevel(level)
            formatter = logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            )
            handler.setFormatter(formatter)
            self.logger.addHandler(handler)

        self._history: List[dict] = []

    def info(self, message: str):
        """Log info message"""
        self.logger.info(message)
        self._remember('INFO', message)

    def warning(self, message: str):
        """Log warning message"""
        self.logger.warning(message)
        self._remember('WARNING', message)

    def error(self, message: str):
        """Log error message"""
        self.logger.error(message)
        self._remember('ERROR', message)

    def debug(self, message: str):
        """Log debug message"""
        self.logger.debug(message)
        if self.logger.isEnabledFor(logging.DEBUG):
            self._remember('DEBUG', message)

    def set_level(self, level_name: str):
        """Change the level of the logger and its handlers"""
        level = getattr(logging, level_name.upper(), logging.INFO)
        self.logger.setLevel(level)
        for handler in self.logger.handlers:
            handler.setLevel(level)

    def _remember(self, level: str, message: str):
        self._history.append({
            'timestamp': datetime.now().strftime('%Y-%m-%d %H:%M:%S'),
            'level': level,
            'message': message
        })
        if len(self._history) > self.MAX_HISTORY:
            self._history = self._history[-self.MAX_HISTORY:]

    def get_history(self, level: Optional[str] = None) -> list:
        """Get remembered log entries, optionally filtered by level"""
        if level:
            return [entry for entry in self._history if entry['level'] == level]
        return list(self._history)


# Global logger instance
logger = WhittakerLogger()
