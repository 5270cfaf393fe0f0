from __future__ import annotations

from typing import Any, List, Tuple

from .circuit import MAX_WORK_WIRES, Circuit, Instruction, LevelOpInstr, WrapperGate
from .linalg import RingMatrix, is_unitary
from .utils import is_power_of_two


def _type_matches(value: Any, expected_type: str) -> bool:
    if expected_type == "integer":
        return isinstance(value, int) and not isinstance(value, bool)
    if expected_type == "string":
        return isinstance(value, str)
    if expected_type == "array":
        return isinstance(value, list)
    return True


def validate_matrix_obj(obj: Any) -> List[str]:
    """Shape checks on a decoded matrix document, before any literal is parsed."""
    if not isinstance(obj, dict):
        return [f"Expected object, got {type(obj).__name__}"]
    errors: List[str] = []
    for key, expected in (("degree", "integer"), ("dim", "integer"), ("entries", "array")):
        if key not in obj:
            errors.append(f"Missing required key: {key}")
        elif not _type_matches(obj[key], expected):
            errors.append(f"Key '{key}' expected type {expected}, got {type(obj[key]).__name__}")
    if errors:
        return errors
    dim, entries = obj["dim"], obj["entries"]
    if dim < 1:
        errors.append(f"dim must be positive, got {dim}")
    elif len(entries) != dim * dim:
        errors.append(f"entries must hold dim*dim = {dim * dim} literals, got {len(entries)}")
    for i, e in enumerate(entries):
        if not _type_matches(e, "string"):
            errors.append(f"entries[{i}] must be an element literal string, got {type(e).__name__}")
    return errors


def validate_synthesis_input(u: RingMatrix) -> List[str]:
    errors: List[str] = []
    deg = u.degree
    if not ((deg.family == "pow2" and deg.k >= 4) or (deg.family == "threePow2" and deg.k >= 3)):
        errors.append(f"unsupported degree {deg.n}; expected 2^k (k >= 4) or 3*2^k (k >= 3)")
    if u.rows != u.cols:
        errors.append(f"matrix is {u.rows}x{u.cols}, not square")
        return errors
    if not is_power_of_two(u.rows):
        errors.append(f"dim {u.rows} is not a power of two")
    elif u.rows > 2 ** MAX_WORK_WIRES:
        errors.append(f"dim {u.rows} exceeds {2 ** MAX_WORK_WIRES}")
    if not is_unitary(u):
        errors.append("matrix is not unitary")
    return errors


def instruction_problems(instr: Instruction, c: Circuit) -> List[Tuple[int, str]]:
    """
    Problems with one instruction in the context of its circuit, each tagged
    with the operand it concerns (0 = mnemonic, 1 = first operand, ...).
    """
    errors: List[Tuple[int, str]] = []
    n = c.degree.n
    if isinstance(instr, LevelOpInstr):
        op = instr.op
        if op.dim != c.dim:
            errors.append((0, f"operator acts on dim {op.dim}, register has {c.dim}"))
        if op.kind == "one" and n % op.order:
            errors.append((1, f"zeta_{op.order} is not in R_{n}"))
        if op.name == "H" and n % 8:
            errors.append((1, f"H needs 8 | {n}"))
    elif isinstance(instr, WrapperGate):
        if instr.gate == "H" and n % 8:
            errors.append((1, f"H needs 8 | {n}"))
        if instr.gate != "H" and (instr.order <= 0 or n % instr.order):
            errors.append((1, f"T_{instr.order} is not in the degree-{n} gate set"))
        if not 0 <= instr.wire < c.width:
            errors.append((2, f"wire {instr.wire} outside a {c.width}-wire register"))
    return errors


def validate_circuit(c: Circuit) -> List[str]:
    if c.work < 0 or c.extra < 0:
        return [f"wire counts must be non-negative, got work={c.work} extra={c.extra}"]
    return [
        f"instruction {pos}: {msg}"
        for pos, instr in enumerate(c.instructions)
        for _, msg in instruction_problems(instr, c)
    ]
