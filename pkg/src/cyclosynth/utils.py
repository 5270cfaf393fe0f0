from __future__ import annotations

from typing import Iterable


def truncate(s: str, max_chars: int) -> str:
    if max_chars <= 0 or len(s) <= max_chars:
        return s
    # Keep suffix info for debugging.
    return s[: max(0, max_chars - 24)] + f"... [truncated {len(s)} chars]"


def is_power_of_two(x: int) -> bool:
    return x > 0 and (x & (x - 1)) == 0


def log2_exact(x: int) -> int:
    if not is_power_of_two(x):
        raise ValueError(f"{x} is not a power of two")
    return x.bit_length() - 1


def trailing_zeros(x: int) -> int:
    """Number of factors of two in a nonzero integer."""
    if x == 0:
        raise ValueError("trailing_zeros(0) is undefined")
    return (x & -x).bit_length() - 1


def join_ints(values: Iterable[int], sep: str = " -> ") -> str:
    return sep.join(str(v) for v in values)
