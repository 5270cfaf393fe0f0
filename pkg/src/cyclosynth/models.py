from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Dict, Literal, Optional

from dotenv import load_dotenv

Family = Literal["pow2", "threePow2"]
TwoLevelName = Literal["X", "H", "H'"]
LevelKind = Literal["one", "two"]


@dataclass(frozen=True)
class SynthConfig:
    # Print stage and per-column LDE traces to stderr.
    trace: bool = False
    # Re-evaluate every synthesized circuit on all basis inputs before returning it.
    verify: bool = True
    # Rendered ring elements longer than this are truncated in trace output.
    trace_max_chars: int = 200

    def with_overrides(self, *, trace: Optional[bool] = None, verify: Optional[bool] = None) -> "SynthConfig":
        changes: Dict[str, bool] = {}
        if trace is not None:
            changes["trace"] = trace
        if verify is not None:
            changes["verify"] = verify
        return replace(self, **changes) if changes else self


def _bool_env(name: str, default: bool) -> bool:
    val = os.getenv(name)
    if val is None or val.strip() == "":
        return default
    return val.strip().lower() in ("1", "true", "yes", "on")


def _opt_int_env(name: str) -> Optional[int]:
    val = os.getenv(name)
    if val is None:
        return None
    val = val.strip()
    if val == "":
        return None
    try:
        return int(val)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {val!r}") from e


def load_config() -> SynthConfig:
    # Auto-load .env from the working directory (if present). Does not override existing env vars.
    load_dotenv(override=False)
    max_chars = _opt_int_env("CYCLOSYNTH_TRACE_MAX_CHARS")
    return SynthConfig(
        trace=_bool_env("CYCLOSYNTH_TRACE", False),
        verify=_bool_env("CYCLOSYNTH_VERIFY", True),
        trace_max_chars=200 if max_chars is None else max_chars,
    )
