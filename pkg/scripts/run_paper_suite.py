#!/usr/bin/env python3
"""Run every acceptance criterion and print the theorem traceability matrix.

Equivalent to `poscert paper-suite`; flags are forwarded.
"""

import sys

from poscert.cli import main

if __name__ == "__main__":
    sys.exit(main(["paper-suite", *sys.argv[1:]]))
