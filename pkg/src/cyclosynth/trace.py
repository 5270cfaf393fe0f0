from __future__ import annotations

import sys
from typing import TYPE_CHECKING, Sequence

from .utils import join_ints, truncate

if TYPE_CHECKING:
    from .synthesis import SynthesisReport


def _emit(line: str) -> None:
    print(f"[cyclosynth] {line}", file=sys.stderr)


def trace_stage(stage: str, detail: str, *, max_chars: int = 200) -> None:
    _emit(f"{stage}: {truncate(detail, max_chars)}")


def trace_column(*, index: int, lde_trace: Sequence[int]) -> None:
    _emit(f"  column {index}: lde {join_ints(lde_trace)}")


def trace_report(report: "SynthesisReport") -> None:
    counts = ", ".join(f"{k}={v}" for k, v in sorted(report.op_counts.items()))
    _emit(
        f"done: degree={report.degree} dim={report.dim} ancillas={report.ancillas} "
        f"ops[{counts}] gates={report.gate_count} verified={report.verified}"
    )


def trace_error(err: BaseException) -> None:
    _emit(f"error: {type(err).__name__}: {truncate(str(err), 260)}")
