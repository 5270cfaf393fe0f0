"""
Circuit IR: a work register plus catalyst/ancilla wires, evaluated exactly.

Wire 0 is the most significant bit of a basis index. Level operators are
stored against the full register index space, so evaluation is a plain
left-to-right application of instructions.

Text format, one instruction per line:

    CIRCUIT degree=<n> work=<m> extra=<a>
    ONE <order> <j> <power>
    TWO <X|H|H'> <j> <j'>
    GATE <H|T<n>|T<n>dg> <wire>
    MARK <label>
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, List, Literal, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatchError, ParseError, PreconditionError
from .linalg import LevelOp, RingMatrix, RingVector
from .models import Family
from .ring import CycloElem, Degree, DegreeLike, as_degree, inv_sqrt2, zeta
from .utils import is_power_of_two, log2_exact

if TYPE_CHECKING:
    from .synthesis import OpSequence

GateName = Literal["H", "T", "Tdg"]

_HEADER_RE = re.compile(r"^CIRCUIT degree=(\d+) work=(\d+) extra=(\d+)$")
_GATE_RE = re.compile(r"^(?:H|T(\d+)(dg)?)$")
_TOKEN_RE = re.compile(r"\S+")

# Dense evaluation is meant for matrices of dim <= 32.
MAX_WORK_WIRES = 5
MAX_EXTRA_WIRES = 11


@dataclass(frozen=True)
class LevelOpInstr:
    op: LevelOp


@dataclass(frozen=True)
class WrapperGate:
    gate: GateName
    wire: int
    # Root order n of T_n = diag(1, zeta_n); unused for H.
    order: int = 0

    @property
    def text_name(self) -> str:
        if self.gate == "H":
            return "H"
        return f"T{self.order}" + ("dg" if self.gate == "Tdg" else "")


@dataclass(frozen=True)
class EmbeddingMark:
    label: str


Instruction = Union[LevelOpInstr, WrapperGate, EmbeddingMark]


@dataclass(frozen=True)
class Circuit:
    degree: Degree
    work: int
    extra: int
    instructions: Tuple[Instruction, ...] = ()

    @property
    def width(self) -> int:
        return self.work + self.extra

    @property
    def dim(self) -> int:
        return 2 ** self.width

    def level_ops(self) -> List[LevelOp]:
        return [i.op for i in self.instructions if isinstance(i, LevelOpInstr)]

    def gate_count(self) -> int:
        return sum(1 for i in self.instructions if isinstance(i, WrapperGate))


def ancilla_count(c: Circuit) -> int:
    return c.extra


def max_extra_wires(degree: Degree) -> int:
    """Catalyst and ancilla wires a circuit over `degree` may carry: at most one per level of its tower."""
    return min(degree.k, MAX_EXTRA_WIRES)


def _apply_gate(entries: List[CycloElem], g: WrapperGate, width: int, degree: Degree) -> None:
    bit = 1 << (width - 1 - g.wire)
    if g.gate == "H":
        s = inv_sqrt2(degree)
        for i in range(len(entries)):
            if i & bit:
                continue
            a, b = entries[i], entries[i | bit]
            entries[i] = (a + b) * s
            entries[i | bit] = (a - b) * s
        return
    phase = zeta(degree, (degree.n // g.order) * (1 if g.gate == "T" else -1))
    for i in range(len(entries)):
        if i & bit:
            entries[i] = entries[i] * phase


def circuit_eval(c: Circuit, v: RingVector) -> RingVector:
    from .validation import validate_circuit

    problems = validate_circuit(c)
    if problems:
        raise PreconditionError("malformed circuit: " + "; ".join(problems[:3]))
    if v.dim != c.dim:
        raise DimensionMismatchError(f"dimension mismatch: circuit acts on {c.dim} entries, vector has {v.dim}")
    if v.degree != c.degree:
        v = v.to_degree(c.degree)
    entries = v.to_list()
    for instr in c.instructions:
        if isinstance(instr, LevelOpInstr):
            instr.op.apply_to(entries, c.degree)
        elif isinstance(instr, WrapperGate):
            _apply_gate(entries, instr, c.width, c.degree)
    return RingVector(c.degree, entries)


def verify_against(c: Circuit, u: RingMatrix) -> Optional[int]:
    """
    Evaluate on every u ⊗ e0...e0 and compare with (U u) ⊗ e0...e0.
    Returns the first mismatching basis index, or None when all match.
    """
    if u.rows != u.cols or u.rows != 2 ** c.work:
        raise DimensionMismatchError(
            f"dimension mismatch: matrix is {u.rows}x{u.cols}, circuit work register has {2 ** c.work} states"
        )
    target = u if u.degree == c.degree else u.to_degree(c.degree)
    zero = CycloElem.zero(c.degree)
    for col in range(u.cols):
        out = circuit_eval(c, RingVector.basis(c.degree, c.dim, col << c.extra))
        for idx in range(c.dim):
            r, anc = idx >> c.extra, idx & ((1 << c.extra) - 1)
            expected = target[r, col] if anc == 0 else zero
            if out[idx] != expected:
                return col
    return None


def catalyst_root_order(family: Family, k: int) -> int:
    return 2 ** k if family == "pow2" else 3 * 2 ** k


def wrap_with_catalyst(
    inner: Union["OpSequence", Circuit],
    family: Family,
    k: int,
    *,
    wire: Optional[int] = None,
    work: Optional[int] = None,
    degree: Optional[DegreeLike] = None,
) -> Circuit:
    """
    Prepare the catalyst on `wire` with H then T_n, run `inner`, and undo the
    preparation with T_n^dagger then H. An OpSequence is laid out on its own
    register with the catalyst on the last wire unless told otherwise.
    """
    n = catalyst_root_order(family, k)
    if isinstance(inner, Circuit):
        width, deg = inner.width, inner.degree
        work_wires = inner.work
        body: Tuple[Instruction, ...] = inner.instructions
    else:
        if not is_power_of_two(inner.dim) or inner.dim < 2:
            raise PreconditionError(f"wrapped sequence must act on at least one qubit, got dim {inner.dim}")
        width = log2_exact(inner.dim)
        deg = as_degree(degree) if degree is not None else Degree(n)
        work_wires = width - 1 if work is None else work
        body = tuple(LevelOpInstr(op) for op in inner.application_order())
    w = width - 1 if wire is None else wire
    if not 0 <= w < width:
        raise PreconditionError(f"catalyst wire {w} outside a {width}-wire register")
    if deg.n % n:
        raise PreconditionError(f"T_{n} is not in the degree-{deg.n} gate set")
    prep = (WrapperGate("H", w), WrapperGate("T", w, n))
    unprep = (WrapperGate("Tdg", w, n), WrapperGate("H", w))
    mark = EmbeddingMark(f"{'phi' if family == 'pow2' else 'psi'}{k}")
    return Circuit(deg, work_wires, width - work_wires, prep + (mark,) + body + unprep)


def lift_to_operator_ancilla(ops: Sequence[LevelOp]) -> List[LevelOp]:
    """Re-index level operators onto a register with one extra least-significant wire held at e0."""
    return [op.reindexed(2, 2 * op.dim) for op in ops]


# --- text format ---


def _instr_line(instr: Instruction) -> str:
    if isinstance(instr, LevelOpInstr):
        op = instr.op
        if op.kind == "one":
            return f"ONE {op.order} {op.j} {op.power}"
        return f"TWO {op.name} {op.j} {op.j2}"
    if isinstance(instr, WrapperGate):
        return f"GATE {instr.text_name} {instr.wire}"
    return f"MARK {instr.label}"


def serialize(c: Circuit) -> str:
    lines = [f"CIRCUIT degree={c.degree.n} work={c.work} extra={c.extra}"]
    lines.extend(_instr_line(i) for i in c.instructions)
    return "\n".join(lines) + "\n"


def _int_token(tok: "re.Match[str]", lineno: int, what: str) -> int:
    text = tok.group(0)
    if not text.isdigit():
        raise ParseError(f"{what} must be a non-negative integer, got {text!r}", line=lineno, column=tok.start() + 1)
    return int(text)


def _parse_instruction(toks: List["re.Match[str]"], lineno: int, dim: int) -> Instruction:
    head = toks[0].group(0)
    arity = {"ONE": 4, "TWO": 4, "GATE": 3, "MARK": 2}.get(head)
    if arity is None:
        raise ParseError(f"unknown instruction {head!r}", line=lineno, column=toks[0].start() + 1)
    if len(toks) != arity:
        col = toks[min(len(toks), arity) - 1].end() + 1
        raise ParseError(f"{head} takes {arity - 1} operands, got {len(toks) - 1}", line=lineno, column=col)
    try:
        if head == "ONE":
            order, j, power = (_int_token(t, lineno, "operand") for t in toks[1:])
            return LevelOpInstr(LevelOp.phase(order, power, j, dim))
        if head == "TWO":
            name = toks[1].group(0)
            if name not in ("X", "H", "H'"):
                raise ParseError(f"unknown two-level operator {name!r}", line=lineno, column=toks[1].start() + 1)
            j, j2 = (_int_token(t, lineno, "index") for t in toks[2:])
            return LevelOpInstr(LevelOp.two(name, j, j2, dim))  # type: ignore[arg-type]
    except PreconditionError as e:
        raise ParseError(str(e), line=lineno, column=toks[1].start() + 1) from e
    if head == "GATE":
        m = _GATE_RE.match(toks[1].group(0))
        if not m:
            raise ParseError(f"unknown gate {toks[1].group(0)!r}", line=lineno, column=toks[1].start() + 1)
        wire = _int_token(toks[2], lineno, "wire")
        if m.group(1) is None:
            return WrapperGate("H", wire)
        return WrapperGate("Tdg" if m.group(2) else "T", wire, int(m.group(1)))
    return EmbeddingMark(toks[1].group(0))


def _parse_header(line: str, lineno: int) -> Circuit:
    indent = len(line) - len(line.lstrip())
    m = _HEADER_RE.match(line.strip())
    if not m:
        raise ParseError("expected header 'CIRCUIT degree=<n> work=<m> extra=<a>'", line=lineno, column=1)
    try:
        degree = Degree(int(m.group(1)))
    except PreconditionError as e:
        raise ParseError(str(e), line=lineno, column=indent + m.start(1) + 1) from e
    work, extra = int(m.group(2)), int(m.group(3))
    if work > MAX_WORK_WIRES:
        raise ParseError(
            f"work register of {work} wires exceeds {MAX_WORK_WIRES}", line=lineno, column=indent + m.start(2) + 1
        )
    if extra > max_extra_wires(degree):
        raise ParseError(
            f"{extra} extra wires exceed {max_extra_wires(degree)} for degree {degree.n}",
            line=lineno,
            column=indent + m.start(3) + 1,
        )
    return Circuit(degree, work, extra)


def parse(text: str) -> Circuit:
    from .validation import instruction_problems

    lines = text.splitlines()
    header_at = next((i for i, l in enumerate(lines) if l.strip() and not l.lstrip().startswith("#")), None)
    if header_at is None:
        raise ParseError("empty circuit text", line=1, column=1)
    shell = _parse_header(lines[header_at], header_at + 1)
    instrs: List[Instruction] = []
    for idx in range(header_at + 1, len(lines)):
        line = lines[idx]
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        toks = list(_TOKEN_RE.finditer(line))
        instr = _parse_instruction(toks, idx + 1, shell.dim)
        problems = instruction_problems(instr, shell)
        if problems:
            operand, msg = problems[0]
            raise ParseError(msg, line=idx + 1, column=toks[operand].start() + 1)
        instrs.append(instr)
    return replace(shell, instructions=tuple(instrs))
