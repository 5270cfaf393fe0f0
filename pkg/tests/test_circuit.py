from __future__ import annotations

import dataclasses

import pytest

from src.cyclosynth.catalytic import catalyst, pow2_embedding, three_pow2_embedding
from src.cyclosynth.circuit import (
    MAX_WORK_WIRES,
    Circuit,
    EmbeddingMark,
    LevelOpInstr,
    WrapperGate,
    ancilla_count,
    circuit_eval,
    lift_to_operator_ancilla,
    parse,
    serialize,
    verify_against,
    wrap_with_catalyst,
)
from src.cyclosynth.errors import DimensionMismatchError, ParseError, PreconditionError
from src.cyclosynth.linalg import LevelOp, RingMatrix, RingVector, one_level
from src.cyclosynth.ring import Degree, zeta
from src.cyclosynth.synthesis import OpSequence, random_unitary, synth_3pow2, synth_pow2
from src.cyclosynth.validation import validate_circuit


def test_empty_circuit_is_identity():
    c = Circuit(Degree(16), 2, 0)
    v = RingVector(16, [1, zeta(16), 0, zeta(16, 3)])
    assert circuit_eval(c, v) == v
    with pytest.raises(DimensionMismatchError):
        circuit_eval(c, RingVector(16, [1, 0]))


@pytest.mark.parametrize("n,desc", [(16, pow2_embedding(4)), (24, three_pow2_embedding(3))])
def test_preparation_yields_catalyst(n, desc):
    c = Circuit(Degree(n), 0, 1, (WrapperGate("H", 0), WrapperGate("T", 0, n)))
    assert circuit_eval(c, RingVector.basis(n, 2, 0)) == catalyst(desc)


def test_wrap_empty_sequence_is_identity():
    inner = OpSequence((), 4, Degree(16))
    c = wrap_with_catalyst(inner, "pow2", 4)
    assert (c.work, c.extra) == (1, 1)
    assert [type(i).__name__ for i in c.instructions] == [
        "WrapperGate",
        "WrapperGate",
        "EmbeddingMark",
        "WrapperGate",
        "WrapperGate",
    ]
    for j in range(4):
        assert circuit_eval(c, RingVector.basis(16, 4, j)) == RingVector.basis(16, 4, j)


def test_wrap_rejects_gate_outside_degree():
    with pytest.raises(PreconditionError):
        wrap_with_catalyst(OpSequence((), 4, Degree(16)), "pow2", 5, degree=16)


def test_evaluation_is_linear():
    u = random_unitary(16, 2, 10, seed=5)
    c = synth_pow2(u)
    a, b = zeta(16, 3), 1 - zeta(16)
    x = RingVector.basis(16, 4, 0)
    y = RingVector.basis(16, 4, 2)
    lhs = circuit_eval(c, x.scale(a) + y.scale(b))
    rhs = circuit_eval(c, x).scale(a) + circuit_eval(c, y).scale(b)
    assert lhs == rhs


def test_lift_to_operator_ancilla():
    ops = [LevelOp.two("H'", 0, 1, 2), LevelOp.phase(12, 3, 1, 2)]
    lifted = lift_to_operator_ancilla(ops)
    assert [(op.j, op.j2, op.dim) for op in lifted] == [(0, 2, 4), (2, None, 4)]


def test_verify_detects_deleted_op():
    u = one_level(zeta(16), 1, 2)
    c = synth_pow2(u)
    assert verify_against(c, u) is None
    assert isinstance(c.instructions[-1], LevelOpInstr)
    broken = dataclasses.replace(c, instructions=c.instructions[:-1])
    assert verify_against(broken, u) == 1


def test_verify_dimension_mismatch():
    c = synth_pow2(RingMatrix.identity(16, 2))
    with pytest.raises(DimensionMismatchError, match="dimension mismatch"):
        verify_against(c, RingMatrix.identity(16, 4))


def test_ancilla_count():
    assert ancilla_count(synth_pow2(RingMatrix.identity(16, 2))) == 1
    assert ancilla_count(synth_pow2(RingMatrix.identity(32, 2))) == 2
    assert ancilla_count(synth_3pow2(RingMatrix.identity(24, 2))) == 2


# --- text format ---


def test_serialize_empty():
    c = Circuit(Degree(16), 1, 1)
    assert serialize(c) == "CIRCUIT degree=16 work=1 extra=1\n"
    assert parse(serialize(c)) == c


def test_serialize_known_text():
    c = Circuit(
        Degree(16),
        1,
        1,
        (
            WrapperGate("H", 1),
            WrapperGate("T", 1, 16),
            EmbeddingMark("phi4"),
            LevelOpInstr(LevelOp.two("H", 0, 3, 4)),
            LevelOpInstr(LevelOp.phase(8, 3, 2, 4)),
            WrapperGate("Tdg", 1, 16),
            WrapperGate("H", 1),
        ),
    )
    text = serialize(c)
    assert text.splitlines() == [
        "CIRCUIT degree=16 work=1 extra=1",
        "GATE H 1",
        "GATE T16 1",
        "MARK phi4",
        "TWO H 0 3",
        "ONE 8 2 3",
        "GATE T16dg 1",
        "GATE H 1",
    ]
    assert parse(text) == c


@pytest.mark.parametrize("seed", range(4))
def test_round_trip_pipeline_circuits(seed):
    u = random_unitary(24, 2, 8, seed)
    c = synth_3pow2(u)
    text = serialize(c)
    assert parse(text) == c
    assert serialize(parse(text)) == text


def test_parse_skips_comments_and_blank_lines():
    text = "# generated\n\nCIRCUIT degree=24 work=1 extra=0\n\nTWO X 0 1\n"
    c = parse(text)
    assert c.level_ops() == [LevelOp.two("X", 0, 1, 2)]


@pytest.mark.parametrize(
    "text,line,column",
    [
        ("CIRCUIT degree=16 work=1 extra=1\nLEVELOP ???\n", 2, 1),
        ("CIRCUIT degree=16 work=1\n", 1, 1),
        ("CIRCUIT degree=16 work=1 extra=0\nTWO Y 0 1\n", 2, 5),
        ("CIRCUIT degree=16 work=1 extra=0\nONE 16 0\n", 2, 9),
        ("CIRCUIT degree=16 work=1 extra=0\nONE 16 x 1\n", 2, 8),
        ("CIRCUIT degree=16 work=1 extra=0\nTWO X 1 0\n", 2, 5),
        ("CIRCUIT degree=16 work=1 extra=0\nGATE Q 0\n", 2, 6),
        ("CIRCUIT degree=16 work=1 extra=1\nGATE H 0\nGATE H 9\n", 3, 8),
        ("CIRCUIT degree=16 work=1 extra=1\nTWO X 0 1\nONE 7 0 1\n", 3, 5),
        ("CIRCUIT degree=16 work=1 extra=1\nGATE T24 0\n", 2, 6),
        ("CIRCUIT degree=12 work=1 extra=0\nTWO H 0 1\n", 2, 5),
        ("CIRCUIT degree=16 work=6 extra=0\n", 1, 24),
        ("CIRCUIT degree=16 work=1 extra=40\n", 1, 32),
        ("CIRCUIT degree=20 work=1 extra=0\n", 1, 16),
        ("", 1, 1),
    ],
)
def test_parse_errors(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert (exc.value.line, exc.value.column) == (line, column)


def test_parse_names_the_offending_wire():
    with pytest.raises(ParseError, match="wire 3 outside a 1-wire register") as exc:
        parse("# header follows\nCIRCUIT degree=16 work=1 extra=0\n\nGATE H 3\n")
    assert (exc.value.line, exc.value.column) == (4, 8)


def test_parse_accepts_pipeline_widths():
    for k in (4, 5, 6):
        c = Circuit(Degree(2 ** k), MAX_WORK_WIRES, k - 3)
        assert parse(serialize(c)) == c
    c = Circuit(Degree(48), 1, 3)
    assert parse(serialize(c)) == c


def test_validate_circuit():
    good = synth_pow2(RingMatrix.identity(16, 2))
    assert validate_circuit(good) == []
    bad = Circuit(Degree(16), 1, 0, (WrapperGate("T", 0, 24), LevelOpInstr(LevelOp.phase(12, 1, 0, 2))))
    problems = validate_circuit(bad)
    assert len(problems) == 2
    with pytest.raises(PreconditionError):
        circuit_eval(bad, RingVector.basis(16, 2, 0))
