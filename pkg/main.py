#!/usr/bin/env python3
"""
Run the hopfg checks from a source checkout: config.json -> checks -> report.

Same as the installed `hopfg` command; with no arguments it runs
`hopfg check` with whatever config.json says (writing the defaults first).
"""

import sys

from hopfg.cli import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:] or ["check"]))
