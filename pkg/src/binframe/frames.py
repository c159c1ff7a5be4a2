"""Frames over GF(2): analysis operators, the reconstruction identity,
Parseval and orthogonality predicates, and Gram matrices.

A frame is an ordered spanning sequence of vectors in GF(2)^n; it is
identified with its k x n analysis matrix whose i-th row is the i-th frame
vector.  The frame is Parseval exactly when the analysis matrix has
orthonormal columns, i.e. ``theta* theta = I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, NotSpanningError, ShapeError
from .gf2 import BinMatrix, BinVector

__all__ = [
    "Frame",
    "analysis_matrix",
    "is_parseval",
    "reconstruct",
    "gram",
    "is_orthogonal",
]


@dataclass(frozen=True, slots=True)
class Frame:
    """An ordered sequence of k vectors spanning GF(2)^n.

    Construction validates both uniform dimensions (DimensionError) and
    the spanning condition (NotSpanningError); a non-spanning sequence is
    not a frame at all.
    """

    vectors: tuple[BinVector, ...]

    def __post_init__(self):
        if not self.vectors:
            raise DimensionError("a frame needs at least one vector")
        n = self.vectors[0].n
        for i, v in enumerate(self.vectors):
            if v.n != n:
                raise DimensionError(f"vector {i} has dimension {v.n}, expected {n}")
        if self.analysis.rank() != n:
            raise NotSpanningError(f"vectors do not span GF(2)^{n}")

    @classmethod
    def from_vectors(cls, vectors: Sequence[BinVector | Iterable[int]]) -> "Frame":
        return cls(
            tuple(v if isinstance(v, BinVector) else BinVector.from_bits(v) for v in vectors)
        )

    @classmethod
    def from_analysis(cls, theta: BinMatrix) -> "Frame":
        return cls(theta.row_vectors())

    @property
    def k(self) -> int:
        return len(self.vectors)

    @property
    def n(self) -> int:
        return self.vectors[0].n

    @property
    def analysis(self) -> BinMatrix:
        return BinMatrix.from_rows(self.vectors)

    @property
    def synthesis(self) -> BinMatrix:
        return self.analysis.transpose()


def analysis_matrix(f: Frame) -> BinMatrix:
    """The k x n matrix whose i-th row is the i-th frame vector."""
    return f.analysis


def is_parseval(theta: BinMatrix) -> bool:
    """True iff ``theta* theta = I``, i.e. the columns are orthonormal."""
    return theta.transpose() @ theta == BinMatrix.identity(theta.cols)


def reconstruct(x: BinVector, f: Frame) -> BinVector:
    """Evaluate the expansion ``sum_j (x, f_j) f_j``.

    Equals ``x`` for every ``x`` precisely when the frame is Parseval; the
    raw sum is still returned for non-Parseval frames so that failures of
    the identity can be witnessed.
    """
    if x.n != f.n:
        raise DimensionError(f"x has dimension {x.n}, frame lives in GF(2)^{f.n}")
    acc = 0
    xb = x.bits
    for v in f.vectors:
        if (v.bits & xb).bit_count() & 1:
            acc ^= v.bits
    return BinVector(f.n, acc)


def gram(theta: BinMatrix) -> BinMatrix:
    """The k x k Gram matrix ``theta theta*`` of pairwise dot products."""
    return theta @ theta.transpose()


def is_orthogonal(u: BinMatrix) -> bool:
    """True iff the square matrix satisfies ``u u* = u* u = I``.

    For square matrices one of the two identities forces the other, so
    only ``u u* = I`` is checked.
    """
    if not u.is_square:
        raise ShapeError(f"orthogonality needs a square matrix, got shape {u.shape}")
    return u @ u.transpose() == BinMatrix.identity(u.rows)
