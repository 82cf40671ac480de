"""Module entry point: python -m casimir_impedance <command> ..."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
