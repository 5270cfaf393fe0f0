from __future__ import annotations

import pytest

from src.cyclosynth.circuit import ancilla_count, verify_against
from src.cyclosynth.errors import PreconditionError
from src.cyclosynth.linalg import LevelOp, RingMatrix, RingVector, det, one_level, two_level
from src.cyclosynth.models import SynthConfig
from src.cyclosynth.ring import CycloElem, Degree, divide, divides, lde, lde_base, zeta
from src.cyclosynth.synthesis import (
    CircuitSynthesizer,
    OpSequence,
    base_case_r12,
    column_reduce_r8,
    column_reduce_r12,
    column_reduce_with_trace,
    decompose_r8,
    decompose_r12,
    det_normalize_r16,
    lde_step_r8,
    lde_step_r12,
    pair_reduce_r8,
    pair_reduce_r12,
    random_unitary,
    run_pow2_pipeline,
    synth_3pow2,
    synth_pow2,
)


def z12(p: int = 1) -> CycloElem:
    return zeta(12, p)


def delta() -> CycloElem:
    return 1 + z12(3)


def basis(n: int, dim: int, j: int) -> RingVector:
    return RingVector.basis(n, dim, j)


# --- OpSequence ---


def test_op_sequence_order_and_inverse():
    ops = (LevelOp.two("H'", 0, 1, 2), LevelOp.phase(12, 5, 1, 2))
    seq = OpSequence(ops, 2, Degree(12))
    # Written order is the matrix product, so the last op acts first.
    assert seq.product() == two_level("H'", 0, 1, 2, 12) @ LevelOp.phase(12, 5, 1, 2).matrix(12)
    assert seq.application_order() == tuple(reversed(ops))
    assert (seq + seq.inverse()).product() == RingMatrix.identity(12, 2)
    assert seq.counts() == {"H'": 1, "one": 1}


# --- R_12 building blocks ---


def test_base_case_r12():
    assert len(base_case_r12(basis(12, 3, 0), 0)) == 0
    u = RingVector(12, [0, 0, z12(5)])
    seq = base_case_r12(u, 0)
    assert seq.application_order() == (LevelOp.phase(12, 7, 2, 3), LevelOp.two("X", 0, 2, 3))
    assert seq.apply(u) == basis(12, 3, 0)
    v = RingVector(12, [0, -1])
    assert base_case_r12(v, 1).application_order() == (LevelOp.phase(12, 6, 1, 2),)
    with pytest.raises(PreconditionError):
        base_case_r12(RingVector(12, [divide(CycloElem.one(12), delta()), divide(z12(3), delta())]), 0)


@pytest.mark.parametrize(
    "u,v,expected",
    [
        (CycloElem.one(12), CycloElem.one(12), 0),
        (CycloElem.one(12), z12(3), 3),
        (1 + z12(), z12() * (1 + z12()), 5),
    ],
)
def test_pair_reduce_r12(u, v, expected):
    ell = pair_reduce_r12(u, v)
    assert ell == expected
    pair = RingVector(12, [u, v])
    out = LevelOp.two("H'", 0, 1, 2).apply(LevelOp.phase(12, ell, 1, 2).apply(pair))
    for x in out.elements():
        assert x.is_integral() and divides(delta(), x)


def test_pair_reduce_rejects_mismatched_classes():
    with pytest.raises(PreconditionError):
        pair_reduce_r12(CycloElem.one(12), 1 + z12())
    with pytest.raises(PreconditionError):
        pair_reduce_r12(delta(), delta())


def test_lde_step_r12():
    d = lde_base(12)
    inv_d = divide(CycloElem.one(12), delta())
    u = RingVector(12, [inv_d, inv_d * z12(3)])
    assert lde(u, d) == 1
    seq = lde_step_r12(u)
    assert lde(seq.apply(u), d) == 0
    half = CycloElem.from_int(12, 1).scaled(-1)
    w = RingVector(12, [half * delta(), half * delta()])
    before = lde(w, d)
    assert lde(lde_step_r12(w).apply(w), d) < before
    with pytest.raises(PreconditionError):
        lde_step_r12(basis(12, 2, 0))


def test_column_reduce_r12_examples():
    seq = column_reduce_r12(basis(12, 4, 3), 0)
    assert all(op.name == "X" for op in seq)
    assert seq.apply(basis(12, 4, 3)) == basis(12, 4, 0)
    col = two_level("H'", 0, 1, 2, 12).column(0)
    seq = column_reduce_r12(col, 0)
    assert seq.counts().get("H'") == 1
    assert seq.apply(col) == basis(12, 2, 0)


@pytest.mark.parametrize("seed", range(20))
def test_column_reduce_r12_random(seed):
    dim = (2, 4, 8)[seed % 3]
    u = random_unitary(12, dim, 25, seed)
    for j in range(dim):
        seq, trace = column_reduce_with_trace(u.column(j), j)
        assert seq.apply(u.column(j)) == basis(12, dim, j)
        assert all(a > b for a, b in zip(trace, trace[1:]))
        assert trace[-1] == 0


def test_decompose_r12_examples():
    assert len(decompose_r12(RingMatrix.identity(12, 4))) == 0
    u = two_level("H'", 0, 1, 4, 12)
    assert decompose_r12(u).product() == u
    with pytest.raises(PreconditionError):
        decompose_r12(RingMatrix(12, [[1, 0], [0, 2]]))


@pytest.mark.parametrize("seed", range(100))
def test_decompose_r12_round_trip(seed):
    dim = (2, 4, 8)[seed % 3]
    u = random_unitary(12, dim, 1 + seed % 30, seed)
    seq = decompose_r12(u)
    assert seq.product() == u
    assert set(seq.counts()) <= {"one", "X", "H'"}
    assert all(op.order == 12 for op in seq if op.kind == "one")


# --- R_8 ---


def test_pair_and_step_r8():
    s = zeta(8) - zeta(8, 3)
    assert pair_reduce_r8(CycloElem.one(8), zeta(8, 2)) == 2
    inv_s = divide(CycloElem.one(8), s)
    u = RingVector(8, [inv_s, inv_s * zeta(8, 3)])
    assert lde(u) == 1
    assert lde(lde_step_r8(u).apply(u)) == 0
    col = two_level("H", 0, 1, 2, 8).column(1)
    assert column_reduce_r8(col, 1).apply(col) == basis(8, 2, 1)


def test_decompose_r8_examples():
    assert len(decompose_r8(RingMatrix.identity(8, 2))) == 0
    h = two_level("H", 0, 1, 2, 8)
    assert decompose_r8(h @ h).product() == RingMatrix.identity(8, 2)
    with pytest.raises(PreconditionError):
        decompose_r8(h)
    assert decompose_r8(h, require_det_one=False).product() == h


@pytest.mark.parametrize("seed", range(100))
def test_decompose_r8_round_trip(seed):
    dim = 2 + seed % 7
    u = random_unitary(8, dim, 30, seed, det_one=True)
    assert det(u).is_one()
    seq = decompose_r8(u)
    assert seq.product() == u
    assert set(seq.counts()) <= {"one", "X", "H"}


# --- R_16 ---


def test_det_normalize_r16():
    ell, v = det_normalize_r16(RingMatrix.identity(16, 2))
    assert (ell, v) == (0, RingMatrix.identity(16, 2))
    ell, v = det_normalize_r16(one_level(zeta(16), 1, 2))
    assert ell == 1 and v == RingMatrix.identity(16, 2)
    ell, v = det_normalize_r16(two_level("H", 0, 1, 2, 16))
    assert ell == 8
    assert det(v).is_one()


# --- random generator products ---


def test_random_unitary():
    assert random_unitary(16, 4, 0, seed=9) == RingMatrix.identity(16, 4)
    assert random_unitary(24, 4, 20, seed=1) == random_unitary(24, 4, 20, seed=1)
    u = random_unitary(12, 4, 20, seed=7)
    assert u.dagger() @ u == RingMatrix.identity(12, 4)
    assert lde(u) >= 0
    with pytest.raises(PreconditionError):
        random_unitary(16, 1, 3, seed=0)


# --- pipelines ---


def test_synth_pow2_identity():
    u = RingMatrix.identity(16, 2)
    c = synth_pow2(u)
    assert ancilla_count(c) == 1
    assert verify_against(c, u) is None


@pytest.mark.parametrize("seed", range(50))
def test_synth_pow2_random_r16(seed):
    u = random_unitary(16, (2, 4)[seed % 2], 12, seed)
    c = synth_pow2(u, k=4)
    assert ancilla_count(c) == 1
    assert verify_against(c, u) is None


def test_synth_pow2_t32():
    u = one_level(zeta(32), 1, 2)
    result = run_pow2_pipeline(u)
    assert ancilla_count(result.circuit) == 2
    assert verify_against(result.circuit, u) is None
    assert result.report.det_exponent is not None


def test_synth_3pow2_counts():
    for u, anc in (
        (RingMatrix.identity(24, 2), 2),
        (one_level(zeta(24), 1, 2), 2),
        (random_unitary(48, 2, 8, seed=4), 3),
    ):
        c = synth_3pow2(u)
        assert ancilla_count(c) == anc
        assert verify_against(c, u) is None


def test_pipelines_reject_bad_input():
    with pytest.raises(PreconditionError):
        synth_pow2(RingMatrix(16, [[1, 0], [0, 2]]))
    with pytest.raises(PreconditionError):
        synth_pow2(RingMatrix.identity(8, 2))
    with pytest.raises(PreconditionError):
        synth_3pow2(RingMatrix.identity(24, 3))
    with pytest.raises(PreconditionError):
        synth_pow2(RingMatrix.identity(16, 2), k=5)


def test_circuit_synthesizer_report():
    u = random_unitary(24, 2, 10, seed=11)
    result = CircuitSynthesizer(SynthConfig(verify=True)).run(u)
    assert result.report.verified
    assert result.report.ancillas == 2
    text = result.report.to_text()
    assert "ancillas: 2" in text
    assert "verified: yes" in text
    assert "column 0:" in text
    for t in result.report.lde_traces:
        assert all(a > b for a, b in zip(t, t[1:]))
    with pytest.raises(PreconditionError):
        CircuitSynthesizer().run(RingMatrix.identity(12, 2))


def test_trace_output(capsys):
    CircuitSynthesizer(SynthConfig(trace=True)).run(one_level(zeta(16), 1, 2))
    err = capsys.readouterr().err
    assert "[cyclosynth] input: 2x2 over R_16" in err
    assert "det = zeta16^1" in err
    assert "verified=True" in err


@pytest.mark.parametrize(
    "u,fragment",
    [
        (RingMatrix.identity(12, 2), "unsupported degree 12"),
        (RingMatrix(24, [[1, 1], [0, 1]]), "not unitary"),
        (RingMatrix.identity(16, 3), "not a power of two"),
    ],
)
def test_circuit_synthesizer_rejects(u, fragment):
    with pytest.raises(PreconditionError, match=fragment):
        CircuitSynthesizer().run(u)
