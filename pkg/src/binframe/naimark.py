"""Orthonormal extension and Naimark complements.

An orthonormal sequence in GF(2)^k extends to an orthonormal basis exactly
when its vector sum differs from the all-ones vector; the extension is
computed one vector at a time by solving a linear system whose rows are
the vectors found so far plus the all-ones row.  A Parseval frame has a
complementary Parseval frame exactly when at least one frame vector is
even, and the complement falls out of extending the analysis matrix's
columns to an orthonormal basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, ExtensionObstruction, InvalidInput
from .frames import is_parseval
from .gf2 import BinMatrix, BinVector, solve

__all__ = [
    "OrthonormalSequence",
    "is_extendable",
    "extend_to_basis",
    "has_naimark_complement",
    "naimark_complement",
]


@dataclass(frozen=True, slots=True)
class OrthonormalSequence:
    """Vectors in GF(2)^``dim`` with (v_i, v_j) = delta_{i,j}.

    Orthonormality over GF(2) forces linear independence, so at most
    ``dim`` vectors fit.  The sequence may be empty; ``dim`` then supplies
    the ambient dimension.
    """

    dim: int
    vecs: tuple[BinVector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError(f"ambient dimension must be positive, got {self.dim}")
        for i, v in enumerate(self.vecs):
            if v.n != self.dim:
                raise DimensionError(f"vector {i} has dimension {v.n}, expected {self.dim}")
        for i, v in enumerate(self.vecs):
            if v.parity() != 1:
                raise InvalidInput(f"vector {i} is even, (v,v) = 0 != 1")
            for j in range(i):
                if v.dot(self.vecs[j]) != 0:
                    raise InvalidInput(f"vectors {j} and {i} are not orthogonal")

    @classmethod
    def empty(cls, dim: int) -> "OrthonormalSequence":
        return cls(dim, ())

    @classmethod
    def from_vectors(
        cls, vectors: Sequence[BinVector | Iterable[int]], dim: Optional[int] = None
    ) -> "OrthonormalSequence":
        vecs = tuple(
            v if isinstance(v, BinVector) else BinVector.from_bits(v) for v in vectors
        )
        if dim is None:
            if not vecs:
                raise DimensionError("ambient dimension required for an empty sequence")
            dim = vecs[0].n
        return cls(dim, vecs)

    def __len__(self) -> int:
        return len(self.vecs)

    def vector_sum(self) -> BinVector:
        bits = 0
        for v in self.vecs:
            bits ^= v.bits
        return BinVector(self.dim, bits)


def is_extendable(seq: OrthonormalSequence) -> bool:
    """Whether the sequence extends to an orthonormal basis of GF(2)^k.

    True iff the vector sum is not the all-ones vector.  Raises
    InvalidInput for a sequence that already has k vectors.
    """
    if len(seq) >= seq.dim:
        raise InvalidInput(f"sequence of {len(seq)} vectors in GF(2)^{seq.dim} is already complete")
    return seq.vector_sum() != BinVector.ones(seq.dim)


def _pick_solution(sols, avoid_bits: Optional[int]) -> BinVector:
    """First solution in iteration order; with ``avoid_bits`` set, the
    first one whose bits differ from it (the bad choice is unique, so at
    most one candidate is skipped)."""
    for v in sols:
        if avoid_bits is None or v.bits != avoid_bits:
            return v
    raise AssertionError("no admissible solution; extension invariant violated")


def extend_to_basis(seq: OrthonormalSequence) -> OrthonormalSequence:
    """Extend to a full orthonormal basis whose first vectors are ``seq``.

    Each new vector is the first Gray-code-ordered solution of the
    stacked system (current vectors; all-ones row) = (zeros; 1) that keeps
    the running vector sum away from all-ones, which keeps the next system
    consistent.  The completed basis always sums to the all-ones vector.
    Raises ExtensionObstruction, carrying the offending sum, when the
    sequence does not extend.
    """
    k = seq.dim
    if len(seq) == k:
        return seq
    ones = BinVector.ones(k)
    total = seq.vector_sum()
    if total == ones:
        raise ExtensionObstruction(
            f"vector sum is the all-ones vector in GF(2)^{k}", witness=total
        )
    current = list(seq.vecs)
    sum_bits = total.bits
    for s in range(len(current), k):
        system = BinMatrix(k, tuple(v.bits for v in current) + (ones.bits,))
        rhs = BinVector(s + 1, 1 << s)
        sols = solve(system, rhs)
        assert sols.is_consistent, "extension system must stay consistent"
        # while room remains, avoid the unique choice driving the sum to all-ones
        avoid = (sum_bits ^ ones.bits) if s <= k - 2 else None
        v = _pick_solution(sols, avoid)
        current.append(v)
        sum_bits ^= v.bits
    assert sum_bits == ones.bits
    return OrthonormalSequence(k, tuple(current))


def has_naimark_complement(theta: BinMatrix) -> bool:
    """Whether a Parseval analysis matrix has a complementary one.

    True iff some row (frame vector) is even, equivalently iff
    ``theta @ ones != ones``.  Parsevality is validated rather than
    assumed; a square theta leaves no room for a complement and is
    rejected.
    """
    if not is_parseval(theta):
        raise InvalidInput("matrix is not the analysis matrix of a Parseval frame")
    k, n = theta.shape
    if n >= k:
        raise InvalidInput(f"a ({k},{k})-frame leaves no room for a complement")
    return theta.mul_vec(BinVector.ones(n)) != BinVector.ones(k)


def naimark_complement(theta: BinMatrix) -> BinMatrix:
    """A k x (k-n) Parseval matrix psi with gram(theta) + gram(psi) = I.

    The columns of theta are extended to an orthonormal basis of GF(2)^k
    and the new vectors become the columns of psi, making the block
    (theta | psi) orthogonal.  Raises ExtensionObstruction when every
    frame vector is odd.
    """
    if not has_naimark_complement(theta):
        raise ExtensionObstruction(
            "every frame vector is odd; no complement exists",
            witness=theta.mul_vec(BinVector.ones(theta.cols)),
        )
    k, n = theta.shape
    seq = OrthonormalSequence(k, theta.col_vectors())
    ext = extend_to_basis(seq)
    return BinMatrix.from_cols(ext.vecs[n:])
