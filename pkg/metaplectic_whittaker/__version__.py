"""
Metaplectic Whittaker Toolkit Version Information
=================================================

Version 1.1.0 - Orbit Whittaker functions and central-character checks
Release Date: October 12, 2026

CHANGES (v1.1.0):
- orbit_whittaker for the four square-class orbits of y
- closed-form central characters compared against measured ratios
- selfcheck profile read from data/selfcheck.yaml

Version 1.0.0 - Initial release
- exact field arithmetic, cocycle, alternator and Weyl-denominator division
- Sp-level closed forms and the four k-functions
- hilbert / whittaker-table / spanning-set / classify / selfcheck commands
"""

__version__ = "1.1.0"
__release_date__ = "2026-10-12"

VERSION_HISTORY = {
    "1.0.0": {
        "release_date": "2026-09-28",
        "type": "major",
        "changes": [
            "Exact Gaussian-rational and sqrt(q) scalars",
            "Naive and orbit alternators with parallel map-reduce",
            "Division by the Weyl denominator with remainder detection",
            "k-functions, rank of span, R(omega) and classifier",
            "Command-line interface with json/csv/text output",
        ],
    },
    "1.1.0": {
        "release_date": "2026-10-12",
        "type": "minor",
        "changes": [
            "orbit_whittaker for y in {1, u0, pi, piu0}",
            "Closed-form central characters in the equivariance check",
            "YAML selfcheck profile",
        ],
    },
}


def get_version_info():
    """Return complete version information"""
    return {
        "version": __version__,
        "release_date": __release_date__,
        "history": VERSION_HISTORY,
    }
