"""
Command-line front end.

  python3 main.py synthesize --in U.json --out U.circ
  python3 main.py verify --in U.json --circuit U.circ
  python3 main.py tables --degree 12
  python3 main.py random --degree 24 --dim 4 --length 25 --seed 1 --out R.json
  python3 main.py lemmas

Exit codes: 0 success, 1 usage, 2 parse, 3 precondition, 4 verification.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, List, NoReturn, Optional, Sequence, Tuple

from . import circuit as circuit_io
from .circuit import verify_against
from .documents import dump_matrix, load_matrix
from .errors import CycloSynthError, UsageError, VerificationError
from .models import SynthConfig, load_config
from .ring import is_supported_degree
from .synthesis import CircuitSynthesizer, random_unitary
from .tables import (
    TABLE_DEGREES,
    check_associates,
    check_norm_one_units,
    check_quadratic_form,
    check_residue_lemma,
    format_residue_table,
    residue_table,
)
from .trace import trace_error, trace_stage
from .utils import is_power_of_two


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from e


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror or e}") from e


def cmd_synthesize(args: argparse.Namespace, cfg: SynthConfig) -> int:
    u = load_matrix(_read(args.input))
    result = CircuitSynthesizer(cfg).run(u)
    _write(args.out, circuit_io.serialize(result.circuit))
    print(result.report.to_text())
    return 0


def cmd_verify(args: argparse.Namespace, cfg: SynthConfig) -> int:
    u = load_matrix(_read(args.input))
    c = circuit_io.parse(_read(args.circuit))
    if cfg.trace:
        trace_stage("verify", f"{c.work}+{c.extra} wires over R_{c.degree.n} against {u.rows}x{u.cols}")
    bad = verify_against(c, u)
    if bad is not None:
        raise VerificationError(f"circuit disagrees with the matrix at basis index {bad}")
    print(f"ok: circuit matches the {u.rows}x{u.cols} matrix on all basis inputs")
    return 0


def cmd_tables(args: argparse.Namespace, cfg: SynthConfig) -> int:
    if args.degree not in TABLE_DEGREES:
        raise UsageError(f"tables are available for degrees 8 and 12, got {args.degree}")
    rows = residue_table(args.degree)
    print(format_residue_table(rows))
    print(f"{len(rows)} residues")
    problems = check_residue_lemma(args.degree)
    if problems:
        for p in problems:
            print(f"FAIL: {p}", file=sys.stderr)
        raise VerificationError(f"{len(problems)} residue consistency check(s) failed at degree {args.degree}")
    print("residue checks: ok")
    return 0


def cmd_random(args: argparse.Namespace, cfg: SynthConfig) -> int:
    if not is_supported_degree(args.degree):
        raise UsageError(f"unsupported degree {args.degree}")
    if args.dim < 2 or not is_power_of_two(args.dim):
        raise UsageError(f"--dim must be a power of 2 (>= 2), got {args.dim}")
    if args.length < 0:
        raise UsageError(f"--length must be non-negative, got {args.length}")
    m = random_unitary(args.degree, args.dim, args.length, args.seed, det_one=args.det_one)
    _write(args.out, dump_matrix(m))
    if cfg.trace:
        trace_stage("random", f"{args.dim}x{args.dim} over R_{args.degree}, seed {args.seed} -> {args.out}")
    return 0


def cmd_lemmas(args: argparse.Namespace, cfg: SynthConfig) -> int:
    checks: List[Tuple[str, Callable[[], List[str]]]] = [
        ("quadratic form a²+b²+ab", check_quadratic_form),
        ("associates of 1-ζ and factorizations of 2", check_associates),
        ("norm-one units of R_16", check_norm_one_units),
    ]
    checks.extend((f"residues mod 2 at degree {d}", lambda d=d: check_residue_lemma(d)) for d in TABLE_DEGREES)
    failed = 0
    for name, check in checks:
        problems = check()
        print(f"{name}: {'ok' if not problems else 'FAIL'}")
        for p in problems:
            print(f"  {p}", file=sys.stderr)
        failed += bool(problems)
    if failed:
        raise VerificationError(f"{failed} lemma check(s) failed")
    return 0


_COMMANDS: Dict[str, Callable[[argparse.Namespace, SynthConfig], int]] = {
    "synthesize": cmd_synthesize,
    "verify": cmd_verify,
    "tables": cmd_tables,
    "random": cmd_random,
    "lemmas": cmd_lemmas,
}


def _load_config() -> SynthConfig:
    try:
        return load_config()
    except ValueError as e:
        raise UsageError(str(e)) from e


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclosynth", description="Exact Clifford-cyclotomic circuit synthesis.")
    parser.add_argument("--trace", action="store_true", help="Print pipeline stages and LDE traces to stderr")
    parser.add_argument("--no-verify", action="store_true", help="Skip re-evaluating synthesized circuits")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("synthesize", help="Synthesize a circuit for a unitary matrix file")
    p.add_argument("--in", dest="input", required=True, help="Matrix document (JSON)")
    p.add_argument("--out", required=True, help="Circuit text output")

    p = sub.add_parser("verify", help="Check a circuit against a matrix on every basis input")
    p.add_argument("--in", dest="input", required=True, help="Matrix document (JSON)")
    p.add_argument("--circuit", required=True, help="Circuit text")

    p = sub.add_parser("tables", help="Print the residue table for degree 8 or 12")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("random", help="Write a seeded random product of level operators")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--det-one", action="store_true", help="Fix the determinant to 1 with a final phase")

    sub.add_parser("lemmas", help="Run the number-theoretic lemma checks")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    trace = False
    try:
        args = build_parser().parse_args(argv)
        trace = args.trace
        cfg = _load_config().with_overrides(trace=args.trace or None, verify=False if args.no_verify else None)
        trace = cfg.trace
        return _COMMANDS[args.command](args, cfg)
    except CycloSynthError as e:
        if trace:
            trace_error(e)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

