"""
Dyadic fractions num / 2^exp.

Values are canonical on construction: `num` is odd, or the value is zero and
stored as (0, 0).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal, Optional, Tuple, Union

from .utils import trailing_zeros

DyadicOp = Literal["add", "mul", "neg"]

_DYADIC_RE = re.compile(r"^(-?\d+)(?:/2\^(\d+))?$")


def canonical_pair(num: int, exp: int) -> Tuple[int, int]:
    if num == 0:
        return 0, 0
    if exp < 0:
        return num << -exp, 0
    if exp == 0:
        return num, 0
    s = min(trailing_zeros(num), exp)
    return num >> s, exp - s


@dataclass(frozen=True)
class Dyadic:
    num: int
    exp: int = 0

    def __post_init__(self) -> None:
        num, exp = canonical_pair(int(self.num), int(self.exp))
        if (num, exp) != (self.num, self.exp):
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "exp", exp)

    @classmethod
    def coerce(cls, value: Union["Dyadic", int]) -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value, 0)
        raise TypeError(f"cannot interpret {type(value).__name__} as a dyadic fraction")

    def is_zero(self) -> bool:
        return self.num == 0

    def __add__(self, other: Union["Dyadic", int]) -> "Dyadic":
        o = Dyadic.coerce(other)
        e = max(self.exp, o.exp)
        return Dyadic((self.num << (e - self.exp)) + (o.num << (e - o.exp)), e)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    def __sub__(self, other: Union["Dyadic", int]) -> "Dyadic":
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other: Union["Dyadic", int]) -> "Dyadic":
        return Dyadic.coerce(other) - self

    def __mul__(self, other: Union["Dyadic", int]) -> "Dyadic":
        o = Dyadic.coerce(other)
        return Dyadic(self.num * o.num, self.exp + o.exp)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/2^{self.exp}"

    @classmethod
    def parse(cls, text: str) -> Optional["Dyadic"]:
        """Parse `p` or `p/2^e`; returns None when the text is not of that form."""
        m = _DYADIC_RE.match(text.strip())
        if not m:
            return None
        return cls(int(m.group(1)), int(m.group(2) or 0))


def dyadic_arith(a: Dyadic, b: Dyadic, op: DyadicOp) -> Dyadic:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown dyadic op: {op!r}")
