"""
Command-line runner for exact Clifford-cyclotomic synthesis.

Run:
  python3 main.py random --degree 16 --dim 2 --length 12 --seed 1 --out U.json
  python3 main.py synthesize --in U.json --out U.circ
  python3 main.py verify --in U.json --circuit U.circ
"""

from __future__ import annotations

import sys

from src.cyclosynth.cli import main

if __name__ == "__main__":
    sys.exit(main())
