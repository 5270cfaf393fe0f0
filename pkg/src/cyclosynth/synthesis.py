"""
Exact decomposition of unitaries over R_12 and R_8 into level operators, and
the catalytic pipelines for the 2^k and 3*2^k towers.

An OpSequence is stored in written order G1, ..., Gq and stands for the
product G1 * ... * Gq, so Gq is the first operator applied to a vector.
Reductions are built in application order and reversed when packaged.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .catalytic import embed_matrix, embedding_chain, pow2_embedding
from .circuit import Circuit, LevelOpInstr, lift_to_operator_ancilla, verify_against, wrap_with_catalyst
from .errors import DegreeMismatchError, PreconditionError, VerificationError
from .linalg import LevelOp, RingMatrix, RingVector, det, is_unitary
from .models import SynthConfig, TwoLevelName
from .ring import (
    CycloElem,
    Degree,
    DegreeLike,
    LdeBase,
    as_degree,
    congruence_exponent,
    divides,
    lde,
    lde_base,
    norm_residue_class,
    parity_orbit,
    unit_norm1_exponent,
    zeta_exponent,
)
from .tables import mixing_exponent
from .trace import trace_column, trace_report, trace_stage
from .utils import is_power_of_two, log2_exact
from .validation import validate_synthesis_input

LdeTrace = Tuple[int, ...]


@dataclass(frozen=True)
class OpSequence:
    ops: Tuple[LevelOp, ...]
    dim: int
    degree: Degree

    def __post_init__(self) -> None:
        for op in self.ops:
            if op.dim != self.dim:
                raise PreconditionError(f"operator {op.label()} has dim {op.dim}, sequence dim is {self.dim}")

    @classmethod
    def from_applied(cls, applied: Sequence[LevelOp], dim: int, degree: Degree) -> "OpSequence":
        return cls(tuple(reversed(applied)), dim, degree)

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self) -> Iterator[LevelOp]:
        return iter(self.ops)

    def __add__(self, other: "OpSequence") -> "OpSequence":
        if other.dim != self.dim or other.degree != self.degree:
            raise PreconditionError("cannot concatenate sequences of different dim or degree")
        return OpSequence(self.ops + other.ops, self.dim, self.degree)

    def application_order(self) -> Tuple[LevelOp, ...]:
        return tuple(reversed(self.ops))

    def product(self) -> RingMatrix:
        rows = RingMatrix.identity(self.degree, self.dim).to_rows()
        for op in reversed(self.ops):
            op.apply_rows(rows, self.degree)
        return RingMatrix(self.degree, rows)

    def apply(self, v: RingVector) -> RingVector:
        entries = v.to_list()
        for op in reversed(self.ops):
            op.apply_to(entries, v.degree)
        return RingVector(v.degree, entries)

    def inverse(self) -> "OpSequence":
        ops: List[LevelOp] = []
        for op in reversed(self.ops):
            ops.extend(op.inverse(phase_order=self.degree.n))
        return OpSequence(tuple(ops), self.dim, self.degree)

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for op in self.ops:
            key = "one" if op.kind == "one" else str(op.name)
            out[key] = out.get(key, 0) + 1
        return out


@dataclass(frozen=True)
class _Scheme:
    """What differs between the R_12 and R_8 reductions."""

    degree: Degree
    base: LdeBase
    hadamard: TwoLevelName
    allow_mixing: bool
    check_parity: bool


def _scheme(n: int) -> _Scheme:
    deg = Degree(n)
    if n == 12:
        return _Scheme(deg, lde_base(deg), "H'", allow_mixing=False, check_parity=True)
    if n == 8:
        return _Scheme(deg, lde_base(deg), "H", allow_mixing=True, check_parity=False)
    raise PreconditionError(f"no level-operator reduction for degree {n}")


def _require_degree(x: RingVector | RingMatrix, n: int) -> None:
    if x.degree.n != n:
        raise DegreeMismatchError(f"expected entries over R_{n}, got R_{x.degree.n}")


def _entries_lde(entries: Sequence[CycloElem], base: LdeBase) -> int:
    return max((lde(x, base) for x in entries), default=0)


def _require_unit_vector(u: RingVector) -> None:
    if not u.norm_squared().is_one():
        raise PreconditionError("input is not a unit vector")


# --- building blocks ---


def _base_case(entries: List[CycloElem], j: int, scheme: _Scheme) -> List[LevelOp]:
    dim, n = len(entries), scheme.degree.n
    nonzero = [i for i, x in enumerate(entries) if not x.is_zero()]
    if len(nonzero) != 1:
        raise PreconditionError(f"lde-0 unit vector should have one nonzero entry, found {len(nonzero)}")
    i = nonzero[0]
    ell = zeta_exponent(entries[i])
    if ell is None:
        raise PreconditionError(f"entry {i} is not a power of zeta_{n}")
    ops: List[LevelOp] = []
    if ell:
        ops.append(LevelOp.phase(n, n - ell, i, dim))
    if i != j:
        ops.append(LevelOp.two("X", min(i, j), max(i, j), dim))
    for op in ops:
        op.apply_to(entries, scheme.degree)
    return ops


def _pair_exponent(u: CycloElem, v: CycloElem, scheme: _Scheme) -> int:
    if not (u.is_integral() and v.is_integral()):
        raise PreconditionError("pair reduction needs integral entries")
    cu, cv = norm_residue_class(u), norm_residue_class(v)
    if cu == "ZERO" or cu != cv:
        raise PreconditionError(f"pair reduction needs equal nonzero classes, got {cu} and {cv}")
    ell = congruence_exponent(u, v)
    if ell is None:
        raise PreconditionError(f"no l with u ≡ ζ^l v (mod 2) for u={u}, v={v}")
    return ell


def _pair_ops(a: int, b: int, ell: int, scheme: _Scheme, dim: int) -> List[LevelOp]:
    ops: List[LevelOp] = []
    if ell:
        ops.append(LevelOp.phase(scheme.degree.n, ell, b, dim))
    ops.append(LevelOp.two(scheme.hadamard, a, b, dim))
    return ops


def _lde_step(entries: List[CycloElem], scheme: _Scheme) -> List[LevelOp]:
    dim = len(entries)
    base = scheme.base
    k = _entries_lde(entries, base)
    if k == 0:
        raise PreconditionError("lde step needs a vector with lde >= 1")
    scale = base.element ** k
    applied: List[LevelOp] = []
    # One pass pairs within orbits; a second pass is only needed after mixing.
    for _ in range(3):
        v = [x * scale for x in entries]
        pending = [i for i, x in enumerate(v) if not divides(base.element, x)]
        if not pending:
            break
        if scheme.check_parity:
            classes = [norm_residue_class(v[i]) for i in pending]
            if classes.count("ONE") % 2 or classes.count("SQRT3") % 2:
                raise VerificationError(f"odd class counts among {classes}; the parity argument failed")
        orbits: Dict[Tuple[int, ...], List[int]] = {}
        for i in pending:
            orbits.setdefault(parity_orbit(v[i]), []).append(i)
        step: List[LevelOp] = []
        singles: List[int] = []
        for idxs in orbits.values():
            for a, b in zip(idxs[0::2], idxs[1::2]):
                step.extend(_pair_ops(a, b, _pair_exponent(v[a], v[b], scheme), scheme, dim))
            if len(idxs) % 2:
                singles.append(idxs[-1])
        if singles:
            singles.sort()
            if not scheme.allow_mixing or len(singles) % 2:
                raise VerificationError(f"unpaired entries {singles} at lde {k}")
            for a, b in zip(singles[0::2], singles[1::2]):
                ell = mixing_exponent(v[a], v[b])
                if ell is None:
                    raise VerificationError(f"entries {a} and {b} can be neither paired nor mixed")
                step.extend(_pair_ops(a, b, ell, scheme, dim))
        for op in step:
            op.apply_to(entries, scheme.degree)
        applied.extend(step)
    else:
        raise VerificationError(f"lde step did not settle at lde {k}")
    after = _entries_lde(entries, base)
    if after >= k:
        raise VerificationError(f"lde did not decrease ({k} -> {after})")
    return applied


def _reduce_column(entries: List[CycloElem], j: int, scheme: _Scheme) -> Tuple[List[LevelOp], LdeTrace]:
    trace = [_entries_lde(entries, scheme.base)]
    applied: List[LevelOp] = []
    while trace[-1] > 0:
        applied.extend(_lde_step(entries, scheme))
        trace.append(_entries_lde(entries, scheme.base))
    applied.extend(_base_case(entries, j, scheme))
    return applied, tuple(trace)


def _decompose(u: RingMatrix, scheme: _Scheme) -> Tuple[OpSequence, Tuple[LdeTrace, ...]]:
    _require_degree(u, scheme.degree.n)
    if not is_unitary(u):
        raise PreconditionError("input matrix is not unitary")
    dim = u.dim
    rows = u.to_rows()
    written: List[LevelOp] = []
    traces: List[LdeTrace] = []
    # S_{d-1} ... S_0 U = I, hence U = S_0^-1 S_1^-1 ... S_{d-1}^-1.
    for col in range(dim):
        entries = [rows[r][col] for r in range(dim)]
        applied, trace = _reduce_column(entries, col, scheme)
        for op in applied:
            op.apply_rows(rows, scheme.degree)
        written.extend(OpSequence.from_applied(applied, dim, scheme.degree).inverse().ops)
        traces.append(trace)
    if RingMatrix(scheme.degree, rows) != RingMatrix.identity(scheme.degree, dim):
        raise VerificationError("column reduction did not reach the identity")
    return OpSequence(tuple(written), dim, scheme.degree), tuple(traces)


# --- R_12 ---


def base_case_r12(u: RingVector, j: int) -> OpSequence:
    _require_degree(u, 12)
    scheme = _scheme(12)
    if lde(u, scheme.base) != 0:
        raise PreconditionError("base case needs lde(u) = 0")
    return OpSequence.from_applied(_base_case(u.to_list(), j, scheme), u.dim, scheme.degree)


def pair_reduce_r12(u: CycloElem, v: CycloElem) -> int:
    if u.degree.n != 12 or v.degree.n != 12:
        raise DegreeMismatchError("pair_reduce_r12 needs entries over R_12")
    return _pair_exponent(u, v, _scheme(12))


def lde_step_r12(u: RingVector) -> OpSequence:
    _require_degree(u, 12)
    _require_unit_vector(u)
    return OpSequence.from_applied(_lde_step(u.to_list(), _scheme(12)), u.dim, u.degree)


def column_reduce_with_trace(u: RingVector, j: int) -> Tuple[OpSequence, LdeTrace]:
    scheme = _scheme(u.degree.n)
    _require_unit_vector(u)
    if not 0 <= j < u.dim:
        raise PreconditionError(f"target index {j} out of range for dim {u.dim}")
    applied, trace = _reduce_column(u.to_list(), j, scheme)
    return OpSequence.from_applied(applied, u.dim, u.degree), trace


def column_reduce_r12(u: RingVector, j: int) -> OpSequence:
    _require_degree(u, 12)
    return column_reduce_with_trace(u, j)[0]


def decompose_r12(u: RingMatrix) -> OpSequence:
    return _decompose(u, _scheme(12))[0]


# --- R_8 ---


def base_case_r8(u: RingVector, j: int) -> OpSequence:
    _require_degree(u, 8)
    scheme = _scheme(8)
    if lde(u, scheme.base) != 0:
        raise PreconditionError("base case needs lde(u) = 0")
    return OpSequence.from_applied(_base_case(u.to_list(), j, scheme), u.dim, scheme.degree)


def pair_reduce_r8(u: CycloElem, v: CycloElem) -> int:
    if u.degree.n != 8 or v.degree.n != 8:
        raise DegreeMismatchError("pair_reduce_r8 needs entries over R_8")
    return _pair_exponent(u, v, _scheme(8))


def lde_step_r8(u: RingVector) -> OpSequence:
    _require_degree(u, 8)
    _require_unit_vector(u)
    return OpSequence.from_applied(_lde_step(u.to_list(), _scheme(8)), u.dim, u.degree)


def column_reduce_r8(u: RingVector, j: int) -> OpSequence:
    _require_degree(u, 8)
    return column_reduce_with_trace(u, j)[0]


def _decompose_r8(u: RingMatrix, require_det_one: bool) -> Tuple[OpSequence, Tuple[LdeTrace, ...]]:
    _require_degree(u, 8)
    if not is_unitary(u):
        raise PreconditionError("input matrix is not unitary")
    if require_det_one and not det(u).is_one():
        raise PreconditionError("decompose_r8 needs det(U) = 1")
    return _decompose(u, _scheme(8))


def decompose_r8(u: RingMatrix, require_det_one: bool = True) -> OpSequence:
    return _decompose_r8(u, require_det_one)[0]


# --- R_16 ---


def det_normalize_r16(u: RingMatrix) -> Tuple[int, RingMatrix]:
    """det(U) = zeta_16^l; returns (l, P^dagger U) with P the phase zeta_16^l on the last index."""
    _require_degree(u, 16)
    if not is_unitary(u):
        raise PreconditionError("input matrix is not unitary")
    ell = unit_norm1_exponent(det(u))
    v = LevelOp.phase(16, -ell, u.dim - 1, u.dim).apply(u)
    assert isinstance(v, RingMatrix)
    if not det(v).is_one():
        raise VerificationError(f"det(P^dagger U) != 1 after removing zeta_16^{ell}")
    return ell, v


# --- random generator products ---


def random_unitary(
    degree: DegreeLike, dim: int, length: int, seed: int, *, det_one: bool = False
) -> RingMatrix:
    """
    Product of `length` random level operators valid for the degree: zeta_n
    phases and X always, H on the 2^k tower (n >= 8), H' on the 3*2^k tower.
    With `det_one`, a final phase on the last index makes the determinant 1.
    """
    deg = as_degree(degree)
    if dim < 2:
        raise PreconditionError(f"random unitaries need dim >= 2, got {dim}")
    if length < 0:
        raise PreconditionError(f"length must be non-negative, got {length}")
    n = deg.n
    kinds: List[str] = ["phase", "X"]
    if deg.family == "pow2" and n % 8 == 0:
        kinds.append("H")
    if deg.family == "threePow2":
        kinds.append("H'")
    rng = np.random.default_rng(seed)
    rows = RingMatrix.identity(deg, dim).to_rows()
    for _ in range(length):
        kind = kinds[int(rng.integers(len(kinds)))]
        if kind == "phase":
            op = LevelOp.phase(n, int(rng.integers(1, n)), int(rng.integers(dim)), dim)
        else:
            a, b = sorted(int(x) for x in rng.choice(dim, size=2, replace=False))
            op = LevelOp.two(kind, a, b, dim)  # type: ignore[arg-type]
        op.apply_rows(rows, deg)
    m = RingMatrix(deg, rows)
    if det_one:
        ell = unit_norm1_exponent(det(m))
        if ell:
            fixed = LevelOp.phase(n, -ell, dim - 1, dim).apply(m)
            assert isinstance(fixed, RingMatrix)
            m = fixed
    return m


# --- pipelines ---


@dataclass(frozen=True)
class SynthesisReport:
    degree: int
    dim: int
    work_wires: int
    ancillas: int
    op_counts: Dict[str, int]
    gate_count: int
    lde_traces: Tuple[LdeTrace, ...]
    det_exponent: Optional[int] = None
    verified: bool = False

    def to_text(self) -> str:
        counts = ", ".join(f"{k}={v}" for k, v in sorted(self.op_counts.items())) or "none"
        lines = [
            f"degree: {self.degree}",
            f"dim: {self.dim} ({self.work_wires} work wires)",
            f"ancillas: {self.ancillas}",
            f"level ops: {sum(self.op_counts.values())} ({counts})",
            f"wrapper gates: {self.gate_count}",
        ]
        if self.det_exponent is not None:
            lines.append(f"det phase: zeta16^{self.det_exponent}")
        lines.append("lde traces:")
        lines.extend(f"  column {i}: {' -> '.join(str(x) for x in t)}" for i, t in enumerate(self.lde_traces))
        lines.append(f"verified: {'yes' if self.verified else 'no'}")
        return "\n".join(lines)


@dataclass(frozen=True)
class SynthesisResult:
    circuit: Circuit
    report: SynthesisReport


def _check_pipeline_input(u: RingMatrix, family: str, min_k: int, k: Optional[int]) -> Tuple[int, int]:
    deg = u.degree
    if deg.family != family or deg.k < min_k:
        raise PreconditionError(f"unsupported degree {deg.n} for the {family} pipeline (needs k >= {min_k})")
    if k is not None and k != deg.k:
        raise PreconditionError(f"k={k} does not match degree {deg.n}")
    if u.rows != u.cols or not is_power_of_two(u.rows):
        raise PreconditionError(f"dimension {u.rows}x{u.cols} is not a power of two")
    if not is_unitary(u):
        raise PreconditionError("input matrix is not unitary")
    return deg.k, log2_exact(u.rows)


def _report(
    u: RingMatrix, circuit: Circuit, traces: Tuple[LdeTrace, ...], det_exponent: Optional[int] = None
) -> SynthesisReport:
    counts: Dict[str, int] = {}
    for op in circuit.level_ops():
        key = "one" if op.kind == "one" else str(op.name)
        counts[key] = counts.get(key, 0) + 1
    return SynthesisReport(
        degree=u.degree.n,
        dim=u.rows,
        work_wires=circuit.work,
        ancillas=circuit.extra,
        op_counts=counts,
        gate_count=circuit.gate_count(),
        lde_traces=traces,
        det_exponent=det_exponent,
    )


def run_pow2_pipeline(u: RingMatrix, k: Optional[int] = None, config: Optional[SynthConfig] = None) -> SynthesisResult:
    """
    U over R_{2^k}: phi_k ... phi_5 down to R_16, strip the determinant phase,
    phi_4 down to R_8, decompose, then wrap catalysts from the inside out.
    """
    cfg = config or SynthConfig(verify=False)
    k, m = _check_pipeline_input(u, "pow2", 4, k)
    w = u
    for desc in embedding_chain("pow2", k, 5):
        w = embed_matrix(desc, w)
        if cfg.trace:
            trace_stage(desc.label, f"-> {w.rows}x{w.cols} over R_{w.degree.n}", max_chars=cfg.trace_max_chars)
    ell, v = det_normalize_r16(w)
    if cfg.trace:
        trace_stage("det", f"det = zeta16^{ell}", max_chars=cfg.trace_max_chars)
    e = embed_matrix(pow2_embedding(4), v)
    if not det(e).is_one():
        raise VerificationError("det(phi4(V)) != 1")
    seq, traces = _decompose_r8(e, require_det_one=False)
    if cfg.trace:
        for i, t in enumerate(traces):
            trace_column(index=i, lde_trace=t)
    width = m + k - 3
    core = wrap_with_catalyst(seq, "pow2", 4, wire=width - 1, work=m, degree=u.degree)
    instrs = list(core.instructions)
    if ell:
        # Fully controlled phase on the register of V, with the c4 wire back at e0.
        instrs.append(LevelOpInstr(LevelOp.phase(16, ell, 2 * (v.dim - 1), 2 * v.dim)))
    circuit = Circuit(u.degree, m, k - 3, tuple(instrs))
    for j in range(5, k + 1):
        circuit = wrap_with_catalyst(circuit, "pow2", j, wire=m + (k - j))
    return SynthesisResult(circuit, _report(u, circuit, traces, ell))


def run_three_pow2_pipeline(
    u: RingMatrix, k: Optional[int] = None, config: Optional[SynthConfig] = None
) -> SynthesisResult:
    """
    U over R_{3*2^k}: psi_k ... psi_3 down to R_12, decompose, lift onto one
    operator ancilla, then wrap catalysts from the inside out.
    """
    cfg = config or SynthConfig(verify=False)
    k, m = _check_pipeline_input(u, "threePow2", 3, k)
    w = u
    for desc in embedding_chain("threePow2", k, 3):
        w = embed_matrix(desc, w)
        if cfg.trace:
            trace_stage(desc.label, f"-> {w.rows}x{w.cols} over R_{w.degree.n}", max_chars=cfg.trace_max_chars)
    seq, traces = _decompose(w, _scheme(12))
    if cfg.trace:
        for i, t in enumerate(traces):
            trace_column(index=i, lde_trace=t)
    lifted = lift_to_operator_ancilla(seq.application_order())
    circuit = Circuit(u.degree, m, k - 1, tuple(LevelOpInstr(op) for op in lifted))
    for j in range(3, k + 1):
        circuit = wrap_with_catalyst(circuit, "threePow2", j, wire=m + (k - j))
    return SynthesisResult(circuit, _report(u, circuit, traces))


def synth_pow2(u: RingMatrix, k: Optional[int] = None) -> Circuit:
    return run_pow2_pipeline(u, k).circuit


def synth_3pow2(u: RingMatrix, k: Optional[int] = None) -> Circuit:
    return run_three_pow2_pipeline(u, k).circuit


class CircuitSynthesizer:
    """Front door: picks the pipeline for the matrix degree and re-verifies the result."""

    def __init__(self, config: Optional[SynthConfig] = None):
        self.config = config or SynthConfig()

    def run(self, u: RingMatrix) -> SynthesisResult:
        deg = u.degree
        if self.config.trace:
            trace_stage("input", f"{u.rows}x{u.cols} over R_{deg.n}", max_chars=self.config.trace_max_chars)
        problems = validate_synthesis_input(u)
        if problems:
            raise PreconditionError("; ".join(problems))
        if deg.family == "pow2":
            result = run_pow2_pipeline(u, config=self.config)
        else:
            result = run_three_pow2_pipeline(u, config=self.config)
        if self.config.verify:
            bad = verify_against(result.circuit, u)
            if bad is not None:
                raise VerificationError(f"synthesized circuit disagrees with the input on basis state {bad}")
            result = SynthesisResult(result.circuit, replace(result.report, verified=True))
        if self.config.trace:
            trace_report(result.report)
        return result
