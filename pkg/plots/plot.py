#!/usr/bin/env python3
"""Thin launcher: ``plot.py <dir> --out fig.pdf``."""

import sys

from mblplots.cli import main

if __name__ == "__main__":
    sys.exit(main())
