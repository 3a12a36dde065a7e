"""Console entry point for gradedlie."""

import sys

from .features.cli import run


def main() -> int:
    """Run the command line with the process arguments."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
