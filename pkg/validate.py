"""
Validation script for the metaplectic Whittaker toolkit
Runs the staged invariant selfcheck without going through the CLI
"""
import argparse
import sys
from pathlib import Path

# Add the repository root to path
sys.path.insert(0, str(Path(__file__).parent))

from metaplectic_whittaker.diagnostics.selfcheck import STAGES, run_selfcheck
from metaplectic_whittaker.utils.logging import logger


def validate_system(n_max=None, q_list=None, stages=None):
    """Run the selfcheck and print the staged report"""
    validator = run_selfcheck(n_max=n_max, q_list=q_list, echo=print, stages=stages)

    if validator.failures:
        print("\nFailed checks:")
        print(validator.format_report())
        warnings = logger.get_history('WARNING')
        if warnings:
            print("Warnings logged during the run:")
            for entry in warnings:
                print(f"  - {entry['message']}")
        return False

    print("\nAll invariants hold.")
    print("Run 'python -m metaplectic_whittaker --help' to use the command line.")
    return True


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Run the invariant selfcheck")
    parser.add_argument('--n-max', type=int, dest='n_max')
    parser.add_argument('--q-list', dest='q_list', help="comma-separated, e.g. 3,5")
    parser.add_argument('--stage', action='append', dest='stages',
                        choices=[name for name, _ in STAGES])
    args = parser.parse_args()
    q_list = [int(q) for q in args.q_list.split(',')] if args.q_list else None
    success = validate_system(args.n_max, q_list, args.stages)
    sys.exit(0 if success else 1)
