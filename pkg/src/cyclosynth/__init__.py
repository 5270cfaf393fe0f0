

"""Exact Clifford-cyclotomic circuit synthesis over R_n = Z[1/2, ζ_n]."""

from .catalytic import (
    CompositeEmbedding,
    EmbeddingDescriptor,
    compose,
    embed_matrix,
    embedding_chain,
    identity_embedding,
    pow2_embedding,
    relative_norm,
    three_pow2_embedding,
)
from .circuit import Circuit, ancilla_count, circuit_eval, verify_against, wrap_with_catalyst
from .documents import MatrixDocument, dump_matrix, load_matrix
from .dyadic import Dyadic
from .errors import (
    CycloSynthError,
    DegreeMismatchError,
    DimensionMismatchError,
    ParseError,
    PreconditionError,
    UsageError,
    VerificationError,
)
from .linalg import LevelOp, RingMatrix, RingVector, det, is_unitary, one_level, two_level
from .models import SynthConfig, load_config
from .ring import (
    CycloElem,
    Degree,
    LdeBase,
    RealQuad,
    cyclo_conj,
    cyclo_mul,
    cyclo_norm,
    lde,
    lde_base,
    norm_residue_class,
    parse_literal,
    residue,
    unit_norm1_exponent,
    zeta,
)
from .synthesis import (
    CircuitSynthesizer,
    OpSequence,
    SynthesisReport,
    SynthesisResult,
    decompose_r8,
    decompose_r12,
    random_unitary,
    synth_3pow2,
    synth_pow2,
)

__all__ = [
    "Circuit",
    "CircuitSynthesizer",
    "CompositeEmbedding",
    "CycloElem",
    "CycloSynthError",
    "Degree",
    "DegreeMismatchError",
    "DimensionMismatchError",
    "Dyadic",
    "EmbeddingDescriptor",
    "LdeBase",
    "LevelOp",
    "MatrixDocument",
    "OpSequence",
    "ParseError",
    "PreconditionError",
    "RealQuad",
    "RingMatrix",
    "RingVector",
    "SynthConfig",
    "SynthesisReport",
    "SynthesisResult",
    "UsageError",
    "VerificationError",
    "ancilla_count",
    "circuit_eval",
    "compose",
    "cyclo_conj",
    "cyclo_mul",
    "cyclo_norm",
    "decompose_r8",
    "decompose_r12",
    "det",
    "dump_matrix",
    "embed_matrix",
    "embedding_chain",
    "identity_embedding",
    "is_unitary",
    "lde",
    "lde_base",
    "load_config",
    "load_matrix",
    "norm_residue_class",
    "one_level",
    "parse_literal",
    "pow2_embedding",
    "random_unitary",
    "relative_norm",
    "residue",
    "synth_3pow2",
    "synth_pow2",
    "three_pow2_embedding",
    "two_level",
    "unit_norm1_exponent",
    "verify_against",
    "wrap_with_catalyst",
    "zeta",
]
