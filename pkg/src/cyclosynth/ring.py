"""
Exact arithmetic in R_n = Z[1/2, zeta_n] for the supported cyclotomic towers.

An element is a dense coefficient vector over the power basis
1, zeta, ..., zeta^(phi(n)-1) together with one shared dyadic exponent, so
`nums / 2^exp` is the coefficient vector. Products are reduced by the
cyclotomic polynomial right away, which makes equality a tuple compare.

Supported degrees are 2^k and 3*2^k with k >= 2.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Literal, Optional, Sequence, Tuple, Union

from .dyadic import Dyadic
from .errors import DegreeMismatchError, ParseError, PreconditionError, VerificationError
from .models import Family
from .utils import is_power_of_two, log2_exact, trailing_zeros


NormResidueClass = Literal["ZERO", "ONE", "SQRT3", "SQRT2"]

_LITERAL_RE = re.compile(r"^\s*deg\s*=\s*(\d+)\s*;\s*coeffs\s*=")


def is_supported_degree(n: int) -> bool:
    if n < 4:
        return False
    if is_power_of_two(n):
        return True
    return n % 3 == 0 and is_power_of_two(n // 3) and n // 3 >= 4


@lru_cache(maxsize=None)
def _modulus(n: int) -> Tuple[int, ...]:
    # Low to high coefficients of the monic cyclotomic polynomial.
    if is_power_of_two(n):
        phi = n // 2
        coeffs = [0] * (phi + 1)
        coeffs[0] = 1
    else:
        phi = n // 3
        coeffs = [0] * (phi + 1)
        coeffs[0] = 1
        coeffs[phi // 2] = -1
    coeffs[phi] = 1
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _reduction_terms(n: int) -> Tuple[Tuple[int, int], ...]:
    mod = _modulus(n)
    return tuple((i, m) for i, m in enumerate(mod[:-1]) if m)


def _reduce(poly: List[int], n: int, phi: int) -> Tuple[int, ...]:
    terms = _reduction_terms(n)
    for d in range(len(poly) - 1, phi - 1, -1):
        c = poly[d]
        if c:
            base = d - phi
            for i, m in terms:
                poly[base + i] -= c * m
    return tuple(poly[:phi])


@lru_cache(maxsize=None)
def _zeta_table(n: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """Sparse (index, coefficient) form of zeta^p for p in 0..n-1."""
    phi = len(_modulus(n)) - 1
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple((i, c) for i, c in enumerate(cur) if c))
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for i, m in _reduction_terms(n):
                nxt[i] -= top * m
        cur = nxt
    return tuple(rows)


@lru_cache(maxsize=None)
def _zeta_index(n: int) -> Dict[Tuple[int, ...], int]:
    phi = len(_modulus(n)) - 1
    out: Dict[Tuple[int, ...], int] = {}
    for p, row in enumerate(_zeta_table(n)):
        dense = [0] * phi
        for i, c in row:
            dense[i] = c
        out[tuple(dense)] = p
    return out


@lru_cache(maxsize=None)
def galois_exponents(n: int) -> Tuple[int, ...]:
    return tuple(a for a in range(1, n) if math.gcd(a, n) == 1)


def _substitute(nums: Sequence[int], target_n: int, mult: int, phi_t: int) -> Tuple[int, ...]:
    """Evaluate sum nums[j] * zeta_target^(mult*j) in the target power basis."""
    table = _zeta_table(target_n)
    out = [0] * phi_t
    for j, c in enumerate(nums):
        if c:
            for i, t in table[(mult * j) % target_n]:
                out[i] += c * t
    return tuple(out)


def _canonical(nums: Tuple[int, ...], exp: int) -> Tuple[Tuple[int, ...], int]:
    acc = 0
    for x in nums:
        acc |= x
    if acc == 0:
        return nums, 0
    if exp < 0:
        return tuple(x << -exp for x in nums), 0
    if exp == 0:
        return nums, 0
    s = min(trailing_zeros(acc), exp)
    if s == 0:
        return nums, exp
    return tuple(x >> s for x in nums), exp - s


@dataclass(frozen=True)
class Degree:
    n: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or not is_supported_degree(self.n):
            raise PreconditionError(f"unsupported degree n={self.n!r}; expected 2^k or 3*2^k with k >= 2")

    @property
    def totient(self) -> int:
        return len(_modulus(self.n)) - 1

    @property
    def modulus(self) -> Tuple[int, ...]:
        return _modulus(self.n)

    @property
    def family(self) -> Family:
        return "pow2" if is_power_of_two(self.n) else "threePow2"

    @property
    def k(self) -> int:
        return log2_exact(self.n) if self.family == "pow2" else log2_exact(self.n // 3)

    def __str__(self) -> str:
        return str(self.n)


DegreeLike = Union[Degree, int]


def as_degree(d: DegreeLike) -> Degree:
    return d if isinstance(d, Degree) else Degree(d)


@dataclass(frozen=True)
class CycloElem:
    """
    Element of R_n. Build with the classmethods or `zeta`; the raw fields are
    canonicalized on construction (shared exponent is minimal, zero has exp 0).
    """

    degree: Degree
    nums: Tuple[int, ...]
    exp: int = 0

    def __post_init__(self) -> None:
        nums = self.nums if isinstance(self.nums, tuple) else tuple(self.nums)
        if len(nums) != self.degree.totient:
            raise ValueError(
                f"degree {self.degree.n} needs {self.degree.totient} coefficients, got {len(nums)}"
            )
        nums, exp = _canonical(nums, self.exp)
        if nums is not self.nums or exp != self.exp:
            object.__setattr__(self, "nums", nums)
            object.__setattr__(self, "exp", exp)

    # --- constructors ---

    @classmethod
    def zero(cls, degree: DegreeLike) -> "CycloElem":
        deg = as_degree(degree)
        return cls(deg, (0,) * deg.totient)

    @classmethod
    def one(cls, degree: DegreeLike) -> "CycloElem":
        return cls.from_int(degree, 1)

    @classmethod
    def from_int(cls, degree: DegreeLike, value: int) -> "CycloElem":
        deg = as_degree(degree)
        return cls(deg, (int(value),) + (0,) * (deg.totient - 1))

    @classmethod
    def from_coeffs(cls, degree: DegreeLike, coeffs: Sequence[Union[int, Dyadic]]) -> "CycloElem":
        deg = as_degree(degree)
        ds = [Dyadic.coerce(c) for c in coeffs]
        if len(ds) != deg.totient:
            raise ValueError(f"degree {deg.n} needs {deg.totient} coefficients, got {len(ds)}")
        e = max((d.exp for d in ds), default=0)
        return cls(deg, tuple(d.num << (e - d.exp) for d in ds), e)

    # --- inspection ---

    @property
    def coeffs(self) -> Tuple[Dyadic, ...]:
        return tuple(Dyadic(x, self.exp) for x in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_integral(self) -> bool:
        return self.exp == 0

    def is_one(self) -> bool:
        return self.exp == 0 and self.nums[0] == 1 and not any(self.nums[1:])

    def is_real(self) -> bool:
        return self.conj() == self

    # --- arithmetic ---

    def _coerce(self, other: object) -> Optional["CycloElem"]:
        if isinstance(other, CycloElem):
            if other.degree.n != self.degree.n:
                raise DegreeMismatchError(f"degree mismatch: {self.degree.n} vs {other.degree.n}")
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return CycloElem.from_int(self.degree, other)
        if isinstance(other, Dyadic):
            return CycloElem(self.degree, (other.num,) + (0,) * (self.degree.totient - 1), other.exp)
        return None

    def __add__(self, other: object) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.exp == o.exp:
            return CycloElem(self.degree, tuple(a + b for a, b in zip(self.nums, o.nums)), self.exp)
        if self.exp > o.exp:
            s = self.exp - o.exp
            return CycloElem(self.degree, tuple(a + (b << s) for a, b in zip(self.nums, o.nums)), self.exp)
        s = o.exp - self.exp
        return CycloElem(self.degree, tuple((a << s) + b for a, b in zip(self.nums, o.nums)), o.exp)

    __radd__ = __add__

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.degree, tuple(-a for a in self.nums), self.exp)

    def __sub__(self, other: object) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "CycloElem":
        if isinstance(other, int) and not isinstance(other, bool):
            return CycloElem(self.degree, tuple(a * other for a in self.nums), self.exp)
        if isinstance(other, Dyadic):
            return CycloElem(self.degree, tuple(a * other.num for a in self.nums), self.exp + other.exp)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.nums, o.nums
        phi = len(a)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloElem(self.degree, _reduce(prod, self.degree.n, phi), self.exp + o.exp)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycloElem":
        if e < 0:
            raise ValueError("negative powers are not supported; use divide()")
        result = CycloElem.one(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scaled(self, s: int) -> "CycloElem":
        """Multiply by 2^s (s may be negative)."""
        return CycloElem(self.degree, self.nums, self.exp - s)

    def conj(self) -> "CycloElem":
        n = self.degree.n
        return CycloElem(self.degree, _substitute(self.nums, n, -1, self.degree.totient), self.exp)

    def galois(self, a: int) -> "CycloElem":
        n = self.degree.n
        if math.gcd(a, n) != 1:
            raise PreconditionError(f"galois exponent {a} is not a unit mod {n}")
        return CycloElem(self.degree, _substitute(self.nums, n, a, self.degree.totient), self.exp)

    # --- text ---

    def to_literal(self) -> str:
        return f"deg={self.degree.n}; coeffs=" + ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return self.to_literal()


def parse_literal(text: str, line: Optional[int] = None) -> CycloElem:
    """Parse `deg=<n>; coeffs=<c0>,<c1>,...` with each coefficient `p` or `p/2^e`."""
    m = _LITERAL_RE.match(text)
    if not m:
        raise ParseError("expected element literal 'deg=<n>; coeffs=<c0>,...'", line=line, column=1)
    try:
        deg = Degree(int(m.group(1)))
    except PreconditionError as e:
        raise ParseError(str(e), line=line, column=m.start(1) + 1) from e
    coeffs: List[Dyadic] = []
    pos = m.end()
    for part in text[pos:].split(","):
        d = Dyadic.parse(part)
        if d is None:
            col = pos + (len(part) - len(part.lstrip())) + 1
            raise ParseError(f"bad coefficient {part.strip()!r}", line=line, column=col)
        coeffs.append(d)
        pos += len(part) + 1
    if len(coeffs) != deg.totient:
        raise ParseError(
            f"degree {deg.n} needs {deg.totient} coefficients, got {len(coeffs)}", line=line, column=m.end() + 1
        )
    return CycloElem.from_coeffs(deg, coeffs)


# --- named elements ---


def zeta(degree: DegreeLike, power: int = 1) -> CycloElem:
    deg = as_degree(degree)
    out = [0] * deg.totient
    for i, c in _zeta_table(deg.n)[power % deg.n]:
        out[i] = c
    return CycloElem(deg, tuple(out))


def imag_unit(degree: DegreeLike) -> CycloElem:
    deg = as_degree(degree)
    return zeta(deg, deg.n // 4)


def sqrt2(degree: DegreeLike) -> CycloElem:
    deg = as_degree(degree)
    if deg.n % 8:
        raise PreconditionError(f"sqrt(2) is not in R_{deg.n}")
    z = zeta(deg, deg.n // 8)
    return z - z ** 3


def inv_sqrt2(degree: DegreeLike) -> CycloElem:
    return sqrt2(degree).scaled(-1)


def half_delta(degree: DegreeLike) -> CycloElem:
    """(1 + i) / 2, the scalar of H' = zeta_8 * H."""
    deg = as_degree(degree)
    return (imag_unit(deg) + 1).scaled(-1)


def zeta_exponent(u: CycloElem) -> Optional[int]:
    """The p with u == zeta^p, or None."""
    if u.exp != 0:
        return None
    return _zeta_index(u.degree.n).get(u.nums)


# --- products, conjugates, degree changes ---


def cyclo_mul(u: CycloElem, v: CycloElem) -> CycloElem:
    return u * v


def cyclo_conj(u: CycloElem) -> CycloElem:
    return u.conj()


def cyclo_norm(u: CycloElem) -> CycloElem:
    return u.conj() * u


def embed_degree(u: CycloElem, target: DegreeLike) -> CycloElem:
    tgt = as_degree(target)
    n = u.degree.n
    if tgt.n % n:
        raise DegreeMismatchError(f"cannot embed degree {n} into degree {tgt.n}")
    if tgt.n == n:
        return u
    return CycloElem(tgt, _substitute(u.nums, tgt.n, tgt.n // n, tgt.totient), u.exp)


def split_half(u: CycloElem) -> Tuple[CycloElem, CycloElem]:
    """u = a + b*zeta_{2n} with a, b at degree n. Phi_{2n}(x) = Phi_n(x^2) makes this a coefficient split."""
    n = u.degree.n
    if n % 2 or not is_supported_degree(n // 2):
        raise PreconditionError(f"degree {n} has no supported half-degree subring")
    half = Degree(n // 2)
    return CycloElem(half, u.nums[0::2], u.exp), CycloElem(half, u.nums[1::2], u.exp)


# --- norms and exact division ---


@lru_cache(maxsize=8192)
def _norm_data(v: CycloElem) -> Tuple[CycloElem, Dyadic]:
    """(product of the non-identity conjugates of v, rational norm of v)."""
    cof = CycloElem.one(v.degree)
    for a in galois_exponents(v.degree.n)[1:]:
        cof = cof * v.galois(a)
    prod = v * cof
    if any(prod.nums[1:]):
        raise VerificationError(f"norm of {v} is not rational")
    return cof, Dyadic(prod.nums[0], prod.exp)


def rational_norm(u: CycloElem) -> Dyadic:
    if u.is_zero():
        return Dyadic(0)
    return _norm_data(u)[1]


def divide(u: CycloElem, v: CycloElem) -> Optional[CycloElem]:
    """Exact quotient u / v in R_n, or None when the quotient is not in R_n."""
    if v.is_zero():
        raise ZeroDivisionError("division by zero ring element")
    if u.degree.n != v.degree.n:
        raise DegreeMismatchError(f"degree mismatch: {u.degree.n} vs {v.degree.n}")
    cof, norm = _norm_data(v)
    w = u * cof
    sign = -1 if norm.num < 0 else 1
    mag = abs(norm.num)
    s = trailing_zeros(mag)
    odd = sign * (mag >> s)
    if any(x % odd for x in w.nums):
        return None
    return CycloElem(u.degree, tuple(x // odd for x in w.nums), w.exp + s - norm.exp)


def divides(v: CycloElem, u: CycloElem) -> bool:
    """v | u in Z[zeta_n]."""
    if v.is_zero():
        return u.is_zero()
    q = divide(u, v)
    return q is not None and q.is_integral()


def are_associates(u: CycloElem, v: CycloElem) -> bool:
    return divides(u, v) and divides(v, u)


# --- quadratic subrings ---


@dataclass(frozen=True)
class RealQuad:
    """a + b*sqrt(d) with d in {2, 3}."""

    d: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.d not in (2, 3):
            raise ValueError(f"RealQuad supports sqrt(2) and sqrt(3), got d={self.d}")

    def __add__(self, other: "RealQuad") -> "RealQuad":
        return RealQuad(self.d, self.a + other.a, self.b + other.b)

    def __neg__(self) -> "RealQuad":
        return RealQuad(self.d, -self.a, -self.b)

    def __mul__(self, other: "RealQuad") -> "RealQuad":
        return RealQuad(self.d, self.a * other.a + self.d * self.b * other.b, self.a * other.b + self.b * other.a)

    def mod2(self) -> "RealQuad":
        return RealQuad(self.d, self.a % 2, self.b % 2)

    def to_cyclo(self, degree: DegreeLike) -> CycloElem:
        deg = as_degree(degree)
        root = sqrt2(deg) if self.d == 2 else zeta(deg, deg.n // 12) + zeta(deg, -(deg.n // 12))
        return root * self.b + self.a

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = "√2" if self.d == 2 else "√3"
        b = "" if self.b == 1 else ("-" if self.b == -1 else str(self.b))
        if self.a == 0:
            return f"{b}{root}"
        return f"{self.a} + {b}{root}" if self.b > 0 else f"{self.a} - {b.lstrip('-')}{root}"


def as_real_quad(u: CycloElem) -> RealQuad:
    """Read an integral real element of R_8 (as Z[√2]) or R_12 (as Z[√3])."""
    if not u.is_integral():
        raise PreconditionError(f"{u} is not integral")
    c = u.nums
    if u.degree.n == 8:
        # sqrt2 = zeta - zeta^3
        if c[2] != 0 or c[3] != -c[1]:
            raise PreconditionError(f"{u} is not in Z[√2]")
        return RealQuad(2, c[0], c[1])
    if u.degree.n == 12:
        # sqrt3 = zeta + zeta^-1 = 2*zeta - zeta^3
        if c[2] != 0 or c[1] != -2 * c[3]:
            raise PreconditionError(f"{u} is not in Z[√3]")
        return RealQuad(3, c[0], -c[3])
    raise PreconditionError(f"quadratic reading is defined for degrees 8 and 12, got {u.degree.n}")


# --- least denominator exponents ---


@dataclass(frozen=True)
class LdeBase:
    """A prime `element` above 2 with element^order * unit == 2."""

    degree: Degree
    name: str
    element: CycloElem
    order: int
    unit: CycloElem

    def __str__(self) -> str:
        return f"{self.name} (degree {self.degree.n})"


@lru_cache(maxsize=None)
def _lde_base(n: int) -> LdeBase:
    deg = Degree(n)
    if deg.family == "threePow2":
        i = imag_unit(deg)
        return LdeBase(deg, "delta", i + 1, 2, -i)
    if n == 8:
        return LdeBase(deg, "sqrt2", sqrt2(deg), 2, CycloElem.one(deg))
    element = 1 - zeta(deg)
    order = deg.totient
    unit = divide(CycloElem.from_int(deg, 2), element ** order)
    if unit is None or not unit.is_integral():
        raise VerificationError(f"2 is not an associate of (1 - zeta_{n})^{order}")
    return LdeBase(deg, "chi" if n == 16 else f"1-zeta{n}", element, order, unit)


def lde_base(degree: DegreeLike) -> LdeBase:
    return _lde_base(as_degree(degree).n)


def factor_two_witness(degree: DegreeLike) -> Tuple[CycloElem, CycloElem]:
    """(base^order, unit) with product exactly 2."""
    base = lde_base(degree)
    power = base.element ** base.order
    if power * base.unit != CycloElem.from_int(base.degree, 2):
        raise VerificationError(f"{base.name}^{base.order} * unit != 2 at degree {base.degree.n}")
    return power, base.unit


@lru_cache(maxsize=65536)
def _lde_elem(u: CycloElem, base: LdeBase) -> int:
    if u.exp == 0:
        return 0
    cap = base.order * u.exp
    v = CycloElem(u.degree, u.nums, 0)
    count = 0
    while count < cap:
        q = divide(v, base.element)
        if q is None or not q.is_integral():
            break
        v = q
        count += 1
    return cap - count


def lde(x: Union[CycloElem, object], base: Optional[LdeBase] = None) -> int:
    """
    Least l with base^l * x integral; entrywise maximum for vectors and
    matrices (anything exposing `elements()`).
    """
    if isinstance(x, CycloElem):
        b = base or lde_base(x.degree)
        if b.degree.n != x.degree.n:
            raise DegreeMismatchError(f"base {b} does not match degree {x.degree.n}")
        return _lde_elem(x, b)
    elements: Iterable[CycloElem] = x.elements()  # type: ignore[attr-defined]
    return max((lde(e, base) for e in elements), default=0)


# --- residues ---


def parity(u: CycloElem) -> CycloElem:
    """u mod 2 as the representative with coefficients in {0, 1}."""
    if not u.is_integral():
        raise PreconditionError(f"residues need an integral element, got {u}")
    return CycloElem(u.degree, tuple(x & 1 for x in u.nums))


@lru_cache(maxsize=None)
def residue_representatives(base: LdeBase) -> Tuple[CycloElem, ...]:
    """
    One representative per class of Z[zeta]/(base), chosen greedily among
    0/1 vectors by increasing weight. For delta at degree 12 this is {0, 1, ζ, ζ²}.
    """
    deg = base.degree
    size = abs(rational_norm(base.element).num)
    reps: List[CycloElem] = []
    for weight in range(deg.totient + 1):
        for positions in itertools.combinations(range(deg.totient), weight):
            nums = [0] * deg.totient
            for p in positions:
                nums[p] = 1
            cand = CycloElem(deg, tuple(nums))
            if not any(divides(base.element, cand - r) for r in reps):
                reps.append(cand)
                if len(reps) == size:
                    return tuple(reps)
    raise VerificationError(f"found {len(reps)} residues mod {base}, expected {size}")


@lru_cache(maxsize=4096)
def _residue_mod_base(base: LdeBase, p: CycloElem) -> CycloElem:
    for r in residue_representatives(base):
        if divides(base.element, p - r):
            return r
    raise VerificationError(f"{p} matches no residue representative mod {base}")


def residue(u: CycloElem, modulus: Union[LdeBase, Literal["two"]]) -> CycloElem:
    p = parity(u)
    if isinstance(modulus, str):
        if modulus != "two":
            raise PreconditionError(f"unsupported modulus {modulus!r}")
        return p
    if modulus.degree.n != u.degree.n:
        raise DegreeMismatchError(f"modulus {modulus} does not match degree {u.degree.n}")
    # Every base divides 2, so the class mod base is read off the class mod 2.
    return _residue_mod_base(modulus, p)


def congruence_exponent(u: CycloElem, v: CycloElem) -> Optional[int]:
    """Smallest l in 0..n-1 with u ≡ zeta^l * v (mod 2)."""
    pu = parity(u)
    pv = parity(v)
    for ell in range(u.degree.n):
        if parity(zeta(u.degree, ell) * pv) == pu:
            return ell
    return None


@lru_cache(maxsize=4096)
def _orbit_key(p: CycloElem) -> Tuple[int, ...]:
    return min(parity(zeta(p.degree, ell) * p).nums for ell in range(p.degree.n))


def parity_orbit(u: CycloElem) -> Tuple[int, ...]:
    """Canonical label of the orbit of u mod 2 under multiplication by powers of zeta."""
    return _orbit_key(parity(u))


def norm_residue_class(u: CycloElem) -> NormResidueClass:
    if u.degree.n not in (8, 12):
        raise PreconditionError(f"norm residue classes are tabulated for degrees 8 and 12, got {u.degree.n}")
    q = as_real_quad(cyclo_norm(u)).mod2()
    if q.a == 0 and q.b == 0:
        return "ZERO"
    if q.b == 0:
        return "ONE"
    if q.a == 0:
        return "SQRT2" if q.d == 2 else "SQRT3"
    raise VerificationError(f"u†u ≡ {q} (mod 2) for u = {u}, outside the known classes")


def unit_norm1_exponent(u: CycloElem) -> int:
    """The l with u == zeta^l, for u of modulus one."""
    if not cyclo_norm(u).is_one():
        raise PreconditionError(f"{u} does not have modulus 1")
    ell = zeta_exponent(u)
    if ell is None:
        raise PreconditionError(f"{u} has modulus 1 but is not a power of zeta_{u.degree.n}")
    return ell
