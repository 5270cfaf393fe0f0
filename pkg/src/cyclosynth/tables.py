"""
Exhaustive residue tables and the lemma checks the synthesis rests on.

Every check returns a list of problems (empty when the lemma holds) so the
CLI can print all of them instead of stopping at the first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import PreconditionError, VerificationError
from .ring import (
    CycloElem,
    Degree,
    DegreeLike,
    NormResidueClass,
    are_associates,
    as_degree,
    congruence_exponent,
    cyclo_norm,
    divides,
    factor_two_witness,
    galois_exponents,
    inv_sqrt2,
    lde_base,
    norm_residue_class,
    parity_orbit,
    rational_norm,
    residue,
    residue_representatives,
    unit_norm1_exponent,
    zeta,
)

TABLE_DEGREES = (8, 12)
_CLASS_ORDER: Dict[str, int] = {"ZERO": 0, "ONE": 1, "SQRT2": 2, "SQRT3": 2}


@dataclass(frozen=True)
class ResidueRow:
    base_residue: CycloElem
    residue: CycloElem
    norm_class: NormResidueClass
    orbit: Tuple[int, ...]


def poly_str(u: CycloElem, symbol: str = "ζ") -> str:
    """Render an integral element as a polynomial in zeta, e.g. `1+ζ+ζ²`."""
    sup = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
    terms: List[str] = []
    for i, c in enumerate(u.nums):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = symbol if i == 1 else symbol + str(i).translate(sup)
        coef = "" if c == 1 else ("-" if c == -1 else str(c))
        terms.append(coef + mono)
    return "+".join(terms).replace("+-", "-") or "0"


def parity_residues(degree: DegreeLike) -> List[CycloElem]:
    """All 2^phi(n) elements with coefficients in {0, 1}: the classes of Z[ζ]/(2)."""
    deg = as_degree(degree)
    return [CycloElem(deg, bits) for bits in itertools.product((0, 1), repeat=deg.totient)]


def _check_table_degree(deg: Degree) -> None:
    if deg.n not in TABLE_DEGREES:
        raise PreconditionError(f"residue tables are computed for degrees 8 and 12, got {deg.n}")


def residue_table(degree: DegreeLike) -> List[ResidueRow]:
    deg = as_degree(degree)
    _check_table_degree(deg)
    base = lde_base(deg)
    reps = residue_representatives(base)
    rows = [
        ResidueRow(residue(p, base), p, norm_residue_class(p), parity_orbit(p))
        for p in parity_residues(deg)
    ]
    rows.sort(key=lambda r: (reps.index(r.base_residue), _CLASS_ORDER[r.norm_class], sum(r.residue.nums), r.residue.nums))
    return rows


def format_residue_table(rows: Sequence[ResidueRow]) -> str:
    if not rows:
        return ""
    n = rows[0].residue.degree.n
    base = lde_base(n).name
    lines = [f"u mod {base:<8} | u mod 2{'':<14} | u†u mod 2", "-" * 48]
    for r in rows:
        lines.append(f"{poly_str(r.base_residue):<14} | {poly_str(r.residue):<21} | {r.norm_class}")
    return "\n".join(lines)


def mixing_exponent(x: CycloElem, y: CycloElem) -> Optional[int]:
    """
    Degree 8 only: smallest l such that (x ± ζ^l y)/√2 are both integral, not
    divisible by √2, and in the same ζ-orbit mod 2. Used to merge two lone odd
    entries from different orbits into a pair that reduces normally.
    """
    if x.degree.n != 8:
        raise PreconditionError(f"mixing is only needed at degree 8, got {x.degree.n}")
    base = lde_base(x.degree).element
    s = inv_sqrt2(x.degree)
    for ell in range(x.degree.n):
        t = zeta(x.degree, ell) * y
        a, b = (x + t) * s, (x - t) * s
        if not (a.is_integral() and b.is_integral()):
            continue
        if divides(base, a) or divides(base, b):
            continue
        if parity_orbit(a) == parity_orbit(b):
            return ell
    return None


def check_residue_lemma(degree: DegreeLike) -> List[str]:
    deg = as_degree(degree)
    _check_table_degree(deg)
    base = lde_base(deg)
    errors: List[str] = []
    residues = parity_residues(deg)
    classes = {p: norm_residue_class(p) for p in residues}

    for p, cls in classes.items():
        if (cls == "ZERO") != divides(base.element, p):
            errors.append(f"{poly_str(p)}: class {cls} but divisible by {base.name} is {divides(base.element, p)}")

    expected = {"ONE", "SQRT3"} if deg.n == 12 else {"ONE", "SQRT2"}
    found = {c for c in classes.values() if c != "ZERO"}
    if found != expected:
        errors.append(f"nonzero classes {sorted(found)}, expected {sorted(expected)}")

    for p, q in itertools.product(residues, repeat=2):
        if classes[p] == "ZERO" or classes[p] != classes[q]:
            continue
        if congruence_exponent(p, q) is not None:
            continue
        if deg.n == 8 and mixing_exponent(p, q) is not None:
            continue
        errors.append(f"{poly_str(p)} and {poly_str(q)} share class {classes[p]} but cannot be paired")
    return errors


def check_quadratic_form(bound: int = 10) -> List[str]:
    """a²+b²+ab >= 1 off the origin, with equality exactly at the six unit pairs."""
    expected = {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}
    errors: List[str] = []
    equal = set()
    for a, b in itertools.product(range(-bound, bound + 1), repeat=2):
        if (a, b) == (0, 0):
            continue
        v = a * a + b * b + a * b
        if v < 1:
            errors.append(f"a²+b²+ab = {v} at ({a}, {b})")
        elif v == 1:
            equal.add((a, b))
    if equal != expected:
        errors.append(f"equality holds at {sorted(equal)}, expected {sorted(expected)}")
    return errors


def check_associates(degrees: Sequence[int] = (8, 12, 16, 24)) -> List[str]:
    """(1 - ζ_a^b) ~ (1 - ζ_a) for b coprime to a, and base^order * unit = 2."""
    errors: List[str] = []
    for n in degrees:
        deg = Degree(n)
        ref = 1 - zeta(deg)
        for b in galois_exponents(n):
            if not are_associates(1 - zeta(deg, b), ref):
                errors.append(f"1-ζ{n}^{b} is not an associate of 1-ζ{n}")
        base = lde_base(deg)
        try:
            factor_two_witness(deg)
        except VerificationError as e:
            errors.append(str(e))
        if abs(rational_norm(base.unit).num) != 1 or not base.unit.is_integral():
            errors.append(f"cofactor of {base.name}^{base.order} in 2 is not a unit at degree {n}")
    return errors


def norm_one_units(degree: DegreeLike = 16, values: Sequence[int] = (-1, 0, 1)) -> List[Tuple[CycloElem, int]]:
    """Brute force: every u with coefficients in `values` and u†u = 1, with its ζ-exponent."""
    deg = as_degree(degree)
    out: List[Tuple[CycloElem, int]] = []
    for coeffs in itertools.product(values, repeat=deg.totient):
        u = CycloElem(deg, coeffs)
        if cyclo_norm(u).is_one():
            out.append((u, unit_norm1_exponent(u)))
    return out


def check_norm_one_units(degree: DegreeLike = 16) -> List[str]:
    deg = as_degree(degree)
    found = norm_one_units(deg)
    exps = sorted(ell for _, ell in found)
    if exps != list(range(deg.n)):
        return [f"norm-one units with small coefficients have exponents {exps}, expected 0..{deg.n - 1}"]
    return []
