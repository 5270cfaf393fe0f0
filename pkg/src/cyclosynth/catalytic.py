"""
Catalytic embeddings that halve the cyclotomic degree.

Writing every entry as A + B*zeta_source (A, B over the target degree), a matrix
M maps to A ⊗ I2 + B ⊗ block, where block = [[0, 1], [zeta_target, 0]].
The catalyst (1, zeta_source)/sqrt(2) is an eigenvector of block with
eigenvalue zeta_source, so the image acts as M on u ⊗ catalyst. The catalyst is
always the last (least significant) tensor factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple, Union

from .errors import DegreeMismatchError, PreconditionError
from .linalg import RingMatrix, RingVector, det
from .models import Family
from .ring import CycloElem, Degree, DegreeLike, as_degree, inv_sqrt2, split_half, zeta


@dataclass(frozen=True, eq=False)
class EmbeddingDescriptor:
    family: Family
    k: int
    source: Degree
    target: Degree
    block: RingMatrix
    catalyst: RingVector

    @property
    def label(self) -> str:
        return f"{'phi' if self.family == 'pow2' else 'psi'}{self.k}"

    def __repr__(self) -> str:
        return f"EmbeddingDescriptor({self.label}: R_{self.source.n} -> R_{self.target.n})"


def _source_degree(family: Family, k: int) -> int:
    return 2 ** k if family == "pow2" else 3 * 2 ** k


@lru_cache(maxsize=None)
def embedding(family: Family, k: int) -> EmbeddingDescriptor:
    # Both catalyst entries need 1/sqrt(2), and the target must be a supported degree.
    if k < 3:
        raise PreconditionError(f"{family} embeddings need k >= 3, got k={k}")
    source = Degree(_source_degree(family, k))
    target = Degree(source.n // 2)
    block = RingMatrix(target, [[0, 1], [zeta(target), 0]])
    s = inv_sqrt2(source)
    catalyst = RingVector(source, [s, s * zeta(source)])
    return EmbeddingDescriptor(family, k, source, target, block, catalyst)


def pow2_embedding(k: int) -> EmbeddingDescriptor:
    """phi_k : R_{2^k} -> R_{2^(k-1)} with catalyst c_k."""
    return embedding("pow2", k)


def three_pow2_embedding(k: int) -> EmbeddingDescriptor:
    """psi_k : R_{3*2^k} -> R_{3*2^(k-1)} with catalyst d_k."""
    return embedding("threePow2", k)


def embedding_chain(family: Family, k_from: int, k_to: int) -> List[EmbeddingDescriptor]:
    """Descriptors k_from, k_from - 1, ..., k_to (empty when k_from < k_to)."""
    return [embedding(family, k) for k in range(k_from, k_to - 1, -1)]


def embed_matrix(desc: EmbeddingDescriptor, m: RingMatrix) -> RingMatrix:
    if m.degree != desc.source:
        raise DegreeMismatchError(f"{desc.label} expects degree {desc.source.n}, got {m.degree.n}")
    parts = [[split_half(x) for x in row] for row in m.to_rows()]
    a = RingMatrix(desc.target, [[p[0] for p in row] for row in parts])
    b = RingMatrix(desc.target, [[p[1] for p in row] for row in parts])
    return a.kron(RingMatrix.identity(desc.target, 2)) + b.kron(desc.block)


def catalyst(desc: EmbeddingDescriptor) -> RingVector:
    return desc.catalyst


def relative_norm(desc: EmbeddingDescriptor, u: CycloElem) -> CycloElem:
    return det(embed_matrix(desc, RingMatrix.scalar(u)))


EmbeddingLike = Union[EmbeddingDescriptor, "CompositeEmbedding"]


@dataclass(frozen=True, eq=False)
class CompositeEmbedding:
    """A chain of embeddings applied left to right; the empty chain is the identity embedding."""

    source: Degree
    target: Degree
    steps: Tuple[EmbeddingDescriptor, ...] = ()

    @property
    def factor(self) -> int:
        return 2 ** len(self.steps)

    @property
    def label(self) -> str:
        return "∘".join(d.label for d in reversed(self.steps)) or "id"

    def apply(self, m: RingMatrix) -> RingMatrix:
        if m.degree != self.source:
            raise DegreeMismatchError(f"{self.label} expects degree {self.source.n}, got {m.degree.n}")
        for d in self.steps:
            m = embed_matrix(d, m)
        return m

    @property
    def catalyst(self) -> RingVector:
        """Tensor product of the step catalysts, all read in the source degree."""
        out = RingVector(self.source, [1])
        for d in self.steps:
            out = out.kron(d.catalyst.to_degree(self.source))
        return out


def identity_embedding(degree: DegreeLike) -> CompositeEmbedding:
    deg = as_degree(degree)
    return CompositeEmbedding(deg, deg)


def _as_composite(e: EmbeddingLike) -> CompositeEmbedding:
    if isinstance(e, CompositeEmbedding):
        return e
    return CompositeEmbedding(e.source, e.target, (e,))


def compose(first: EmbeddingLike, second: EmbeddingLike) -> CompositeEmbedding:
    """M -> second(first(M)), with catalyst first.catalyst ⊗ second.catalyst."""
    a, b = _as_composite(first), _as_composite(second)
    if a.target != b.source:
        raise DegreeMismatchError(f"cannot chain R_{a.target.n} into an embedding of R_{b.source.n}")
    return CompositeEmbedding(a.source, b.target, a.steps + b.steps)
