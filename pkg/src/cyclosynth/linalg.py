"""
Dense exact vectors and matrices over R_n, plus one- and two-level operators.

Storage is a read-only numpy object array of CycloElem; numpy supplies the
products and Kronecker assembly, the ring supplies exact scalar arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import DegreeMismatchError, DimensionMismatchError, PreconditionError, VerificationError
from .models import LevelKind, TwoLevelName
from .ring import (
    CycloElem,
    Degree,
    DegreeLike,
    as_degree,
    cyclo_norm,
    divide,
    embed_degree,
    half_delta,
    inv_sqrt2,
    zeta,
)

Scalar = Union[CycloElem, int]

_conj = np.frompyfunc(lambda e: e.conj(), 1, 1)


def _as_elem(degree: Degree, x: Scalar) -> CycloElem:
    if isinstance(x, CycloElem):
        if x.degree.n != degree.n:
            raise DegreeMismatchError(f"entry of degree {x.degree.n} in a degree-{degree.n} container")
        return x
    return CycloElem.from_int(degree, x)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class RingVector:
    __slots__ = ("degree", "_data")

    def __init__(self, degree: DegreeLike, entries: Union[np.ndarray, Sequence[Scalar]]):
        self.degree = as_degree(degree)
        data = np.empty(len(entries), dtype=object)
        for i, x in enumerate(entries):
            data[i] = _as_elem(self.degree, x)
        self._data = _frozen(data)

    @classmethod
    def basis(cls, degree: DegreeLike, dim: int, j: int) -> "RingVector":
        if not 0 <= j < dim:
            raise PreconditionError(f"basis index {j} out of range for dim {dim}")
        return cls(degree, [1 if i == j else 0 for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self._data)

    @property
    def array(self) -> np.ndarray:
        return self._data

    def __len__(self) -> int:
        return len(self._data)

    def __getitem__(self, i: int) -> CycloElem:
        return self._data[i]

    def elements(self) -> Iterator[CycloElem]:
        return iter(self._data)

    def to_list(self) -> List[CycloElem]:
        return list(self._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingVector):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.dim == other.dim
            and all(a == b for a, b in zip(self._data, other._data))
        )

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "RingVector") -> "RingVector":
        self._check(other)
        return RingVector(self.degree, self._data + other._data)

    def __sub__(self, other: "RingVector") -> "RingVector":
        self._check(other)
        return RingVector(self.degree, self._data - other._data)

    def scale(self, c: Scalar) -> "RingVector":
        c = _as_elem(self.degree, c)
        return RingVector(self.degree, [c * x for x in self._data])

    def kron(self, other: "RingVector") -> "RingVector":
        if other.degree != self.degree:
            raise DegreeMismatchError(f"degree mismatch: {self.degree.n} vs {other.degree.n}")
        return RingVector(self.degree, np.kron(self._data, other._data))

    def to_degree(self, target: DegreeLike) -> "RingVector":
        tgt = as_degree(target)
        return RingVector(tgt, [embed_degree(x, tgt) for x in self._data])

    def norm_squared(self) -> CycloElem:
        total = CycloElem.zero(self.degree)
        for x in self._data:
            total = total + cyclo_norm(x)
        return total

    def _check(self, other: "RingVector") -> None:
        if other.degree != self.degree:
            raise DegreeMismatchError(f"degree mismatch: {self.degree.n} vs {other.degree.n}")
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __repr__(self) -> str:
        return f"RingVector(degree={self.degree.n}, entries=[{', '.join(str(x) for x in self._data)}])"


class RingMatrix:
    __slots__ = ("degree", "_data")

    def __init__(self, degree: DegreeLike, data: Union[np.ndarray, Sequence[Sequence[Scalar]]]):
        self.degree = as_degree(degree)
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if rows == 0 or cols == 0:
            raise PreconditionError("matrices must have at least one row and one column")
        arr = np.empty((rows, cols), dtype=object)
        for i in range(rows):
            if len(data[i]) != cols:
                raise PreconditionError(f"row {i} has {len(data[i])} entries, expected {cols}")
            for j in range(cols):
                arr[i, j] = _as_elem(self.degree, data[i][j])
        self._data = _frozen(arr)

    @classmethod
    def identity(cls, degree: DegreeLike, dim: int) -> "RingMatrix":
        return cls(degree, [[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def scalar(cls, c: CycloElem, dim: int = 1) -> "RingMatrix":
        return cls(c.degree, [[c if i == j else 0 for j in range(dim)] for i in range(dim)])

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def dim(self) -> int:
        if self.rows != self.cols:
            raise DimensionMismatchError(f"{self.rows}x{self.cols} matrix is not square")
        return self.rows

    @property
    def array(self) -> np.ndarray:
        return self._data

    def __getitem__(self, idx: Tuple[int, int]) -> CycloElem:
        return self._data[idx]

    def column(self, j: int) -> RingVector:
        return RingVector(self.degree, self._data[:, j])

    def elements(self) -> Iterator[CycloElem]:
        return iter(self._data.flat)

    def to_rows(self) -> List[List[CycloElem]]:
        return [list(r) for r in self._data]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (
            self.degree == other.degree
            and self._data.shape == other._data.shape
            and all(a == b for a, b in zip(self._data.flat, other._data.flat))
        )

    __hash__ = None  # type: ignore[assignment]

    def _check_degree(self, other: Union["RingMatrix", RingVector]) -> None:
        if other.degree != self.degree:
            raise DegreeMismatchError(f"degree mismatch: {self.degree.n} vs {other.degree.n}")

    def __matmul__(self, other: Union["RingMatrix", RingVector]) -> Union["RingMatrix", RingVector]:
        self._check_degree(other)
        if isinstance(other, RingVector):
            if other.dim != self.cols:
                raise DimensionMismatchError(f"dimension mismatch: {self.rows}x{self.cols} times {other.dim}")
            return RingVector(self.degree, np.dot(self._data, other.array))
        if other.rows != self.cols:
            raise DimensionMismatchError(
                f"dimension mismatch: {self.rows}x{self.cols} times {other.rows}x{other.cols}"
            )
        return RingMatrix(self.degree, np.dot(self._data, other._data))

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._check_degree(other)
        if other._data.shape != self._data.shape:
            raise DimensionMismatchError("dimension mismatch in matrix sum")
        return RingMatrix(self.degree, self._data + other._data)

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "RingMatrix":
        c = _as_elem(self.degree, c)
        return RingMatrix(self.degree, [[c * x for x in row] for row in self._data])

    def dagger(self) -> "RingMatrix":
        return RingMatrix(self.degree, _conj(self._data.T))

    def kron(self, other: "RingMatrix") -> "RingMatrix":
        self._check_degree(other)
        return RingMatrix(self.degree, np.kron(self._data, other._data))

    def to_degree(self, target: DegreeLike) -> "RingMatrix":
        tgt = as_degree(target)
        return RingMatrix(tgt, [[embed_degree(x, tgt) for x in row] for row in self._data])

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in row) for row in self._data)
        return f"RingMatrix(degree={self.degree.n}, {self.rows}x{self.cols}, [{body}])"


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    out = a @ b
    assert isinstance(out, RingMatrix)
    return out


def is_unitary(m: RingMatrix) -> bool:
    if m.rows != m.cols:
        return False
    return m.dagger() @ m == RingMatrix.identity(m.degree, m.rows)


# --- determinants ---


def _det_cofactor(a: List[List[CycloElem]], zero: CycloElem) -> CycloElem:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = zero
    for j, x in enumerate(a[0]):
        if x.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in a[1:]]
        term = x * _det_cofactor(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(a: List[List[CycloElem]], zero: CycloElem) -> CycloElem:
    """Fraction-free elimination; every division by the previous pivot is exact in an integral domain."""
    n = len(a)
    sign = 1
    prev: Optional[CycloElem] = None
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                if prev is None:
                    a[i][j] = num
                    continue
                q = divide(num, prev)
                if q is None or not q.is_integral():
                    raise VerificationError("inexact Bareiss division; the ring should be an integral domain")
                a[i][j] = q
            a[i][k] = zero
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def det(m: RingMatrix) -> CycloElem:
    n = m.dim
    zero = CycloElem.zero(m.degree)
    # Clear the global dyadic denominator, eliminate over the integral part, restore at the end.
    e = max(x.exp for x in m.elements())
    a = [[x.scaled(e) for x in row] for row in m.to_rows()]
    d = _det_cofactor(a, zero) if n <= 4 else _det_bareiss(a, zero)
    return d.scaled(-e * n)


# --- level operators ---


@dataclass(frozen=True)
class LevelOp:
    """
    One-level phase zeta_order^power at index j, or a two-level X / H / H'
    acting on indices j < j2. Acts on vectors of length `dim`.
    """

    kind: LevelKind
    dim: int
    j: int
    j2: Optional[int] = None
    name: Optional[TwoLevelName] = None
    order: int = 1
    power: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.j < self.dim:
            raise PreconditionError(f"index {self.j} out of range for dim {self.dim}")
        if self.kind == "one":
            if self.order < 1:
                raise PreconditionError(f"phase order must be positive, got {self.order}")
            object.__setattr__(self, "power", self.power % self.order)
            return
        if self.kind != "two":
            raise PreconditionError(f"unknown level-operator kind {self.kind!r}")
        if self.name not in ("X", "H", "H'"):
            raise PreconditionError(f"unknown two-level operator {self.name!r}")
        if self.j2 is None or not self.j < self.j2 < self.dim:
            raise PreconditionError(f"two-level indices need j < j' < dim, got ({self.j}, {self.j2}) dim {self.dim}")

    @classmethod
    def phase(cls, order: int, power: int, j: int, dim: int) -> "LevelOp":
        return cls("one", dim, j, order=order, power=power)

    @classmethod
    def two(cls, name: TwoLevelName, j: int, j2: int, dim: int) -> "LevelOp":
        return cls("two", dim, j, j2, name=name)

    def phase_value(self, degree: Degree) -> CycloElem:
        if degree.n % self.order:
            raise DegreeMismatchError(f"zeta_{self.order} is not in R_{degree.n}")
        return zeta(degree, self.power * (degree.n // self.order))

    def _scalar(self, degree: Degree) -> CycloElem:
        return inv_sqrt2(degree) if self.name == "H" else half_delta(degree)

    def apply_to(self, entries: List[CycloElem], degree: Degree) -> None:
        """In-place action on a list of vector entries."""
        if self.kind == "one":
            entries[self.j] = entries[self.j] * self.phase_value(degree)
            return
        j, j2 = self.j, self.j2
        assert j2 is not None
        a, b = entries[j], entries[j2]
        if self.name == "X":
            entries[j], entries[j2] = b, a
            return
        s = self._scalar(degree)
        entries[j] = (a + b) * s
        entries[j2] = (a - b) * s

    def apply_rows(self, rows: List[List[CycloElem]], degree: Degree) -> None:
        """In-place left multiplication of a matrix given as a list of rows."""
        if self.kind == "one":
            c = self.phase_value(degree)
            rows[self.j] = [x * c for x in rows[self.j]]
            return
        j, j2 = self.j, self.j2
        assert j2 is not None
        if self.name == "X":
            rows[j], rows[j2] = rows[j2], rows[j]
            return
        s = self._scalar(degree)
        ra, rb = rows[j], rows[j2]
        rows[j] = [(a + b) * s for a, b in zip(ra, rb)]
        rows[j2] = [(a - b) * s for a, b in zip(ra, rb)]

    def apply(self, target: Union[RingVector, RingMatrix]) -> Union[RingVector, RingMatrix]:
        if isinstance(target, RingVector):
            if target.dim != self.dim:
                raise DimensionMismatchError(f"dimension mismatch: operator dim {self.dim}, vector dim {target.dim}")
            entries = target.to_list()
            self.apply_to(entries, target.degree)
            return RingVector(target.degree, entries)
        if target.rows != self.dim:
            raise DimensionMismatchError(f"dimension mismatch: operator dim {self.dim}, matrix rows {target.rows}")
        rows = target.to_rows()
        self.apply_rows(rows, target.degree)
        return RingMatrix(target.degree, rows)

    def matrix(self, degree: DegreeLike) -> RingMatrix:
        deg = as_degree(degree)
        out = self.apply(RingMatrix.identity(deg, self.dim))
        assert isinstance(out, RingMatrix)
        return out

    def inverse(self, phase_order: int = 12) -> Tuple["LevelOp", ...]:
        """
        Operators whose product (as written) is the inverse. H'^-1 = (-i) H', and
        -i is emitted as phases of order `phase_order` on both indices.
        """
        if self.kind == "one":
            return (LevelOp.phase(self.order, -self.power, self.j, self.dim),)
        if self.name in ("X", "H"):
            return (self,)
        if phase_order % 4:
            raise PreconditionError(f"-i needs a phase order divisible by 4, got {phase_order}")
        minus_i = 3 * phase_order // 4
        assert self.j2 is not None
        return (
            LevelOp.phase(phase_order, minus_i, self.j, self.dim),
            LevelOp.phase(phase_order, minus_i, self.j2, self.dim),
            self,
        )

    def reindexed(self, stride: int, dim: int) -> "LevelOp":
        """Same operator on indices scaled by `stride` in a register of size `dim`."""
        if self.kind == "one":
            return LevelOp.phase(self.order, self.power, self.j * stride, dim)
        assert self.j2 is not None and self.name is not None
        return LevelOp.two(self.name, self.j * stride, self.j2 * stride, dim)

    def label(self) -> str:
        if self.kind == "one":
            return f"one(zeta{self.order}^{self.power}@{self.j})"
        return f"{self.name}({self.j},{self.j2})"


def one_level(c: CycloElem, j: int, dim: int) -> RingMatrix:
    if not cyclo_norm(c).is_one():
        raise PreconditionError(f"one-level operator needs |c| = 1, got {c}")
    if not 0 <= j < dim:
        raise PreconditionError(f"index {j} out of range for dim {dim}")
    return RingMatrix(c.degree, [[(c if i == j else 1) if i == col else 0 for col in range(dim)] for i in range(dim)])


def two_level(name: TwoLevelName, j: int, j2: int, dim: int, degree: DegreeLike) -> RingMatrix:
    return LevelOp.two(name, j, j2, dim).matrix(degree)
