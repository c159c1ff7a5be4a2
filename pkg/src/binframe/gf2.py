"""Bit-packed vectors, matrices and exact linear algebra over GF(2).

Vectors and matrix rows are stored as Python ints with entry ``i`` in bit
``i``, so adding rows is a single XOR and a dot product is an AND plus a
popcount.  Everything is immutable; operations are pure functions, safe to
share between threads.

The integer value of a vector doubles as its catalog encoding: the vector
``(x_1, ..., x_k)`` corresponds to ``sum(x_i * 2**(i-1))``, e.g.
``(1,0,1,1) <-> 13``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DimensionError

__all__ = [
    "BinVector",
    "BinMatrix",
    "AffineSolutionSet",
    "dot",
    "parity",
    "mat_mul",
    "rank",
    "solve",
]


@dataclass(frozen=True, slots=True)
class BinVector:
    """An immutable vector in GF(2)^n, entries packed into ``bits``."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"vector dimension must be positive, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits 0x{self.bits:x} do not fit in dimension {self.n}")

    @classmethod
    def zero(cls, n: int) -> "BinVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BinVector":
        """The all-ones vector in GF(2)^n."""
        return cls(n, (1 << n) - 1)

    @classmethod
    def basis(cls, n: int, i: int) -> "BinVector":
        """The canonical basis vector e_i (0-indexed)."""
        if not 0 <= i < n:
            raise DimensionError(f"basis index {i} out of range for dimension {n}")
        return cls(n, 1 << i)

    @classmethod
    def from_bits(cls, entries: Iterable[int]) -> "BinVector":
        bits = 0
        n = 0
        for e in entries:
            if e not in (0, 1):
                raise ValueError(f"entries must be 0 or 1, got {e!r}")
            bits |= e << n
            n += 1
        return cls(n, bits)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> i) & 1 for i in range(self.n))

    def __add__(self, other: "BinVector") -> "BinVector":
        if self.n != other.n:
            raise DimensionError(f"cannot add vectors of dimension {self.n} and {other.n}")
        return BinVector(self.n, self.bits ^ other.bits)

    __xor__ = __add__

    def dot(self, other: "BinVector") -> int:
        if self.n != other.n:
            raise DimensionError(f"dot product needs equal dimensions, got {self.n} and {other.n}")
        return (self.bits & other.bits).bit_count() & 1

    def parity(self) -> int:
        """0 for an even vector, 1 for an odd one."""
        return self.bits.bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def to_bitstring(self) -> str:
        """Dense text form, entry 0 leftmost: (1,0,1,1) -> '1011'."""
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __str__(self) -> str:
        return self.to_bitstring()


@dataclass(frozen=True, slots=True)
class BinMatrix:
    """An immutable matrix over GF(2); row ``i`` packed into ``data[i]``."""

    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.cols < 1:
            raise DimensionError(f"column count must be positive, got {self.cols}")
        if len(self.data) < 1:
            raise DimensionError("row count must be positive")
        for i, r in enumerate(self.data):
            if r < 0 or r >> self.cols:
                raise ValueError(f"row {i} has bits outside {self.cols} columns")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[BinVector | Iterable[int]]) -> "BinMatrix":
        vecs = [r if isinstance(r, BinVector) else BinVector.from_bits(r) for r in rows]
        if not vecs:
            raise DimensionError("row count must be positive")
        cols = vecs[0].n
        for i, v in enumerate(vecs):
            if v.n != cols:
                raise DimensionError(f"row {i} has dimension {v.n}, expected {cols}")
        return cls(cols, tuple(v.bits for v in vecs))

    @classmethod
    def from_ints(cls, rows: Sequence[int], cols: int) -> "BinMatrix":
        return cls(cols, tuple(rows))

    @classmethod
    def from_cols(cls, columns: Sequence[BinVector | Iterable[int]]) -> "BinMatrix":
        vecs = [c if isinstance(c, BinVector) else BinVector.from_bits(c) for c in columns]
        if not vecs:
            raise DimensionError("column count must be positive")
        k = vecs[0].n
        for j, v in enumerate(vecs):
            if v.n != k:
                raise DimensionError(f"column {j} has dimension {v.n}, expected {k}")
        rows = [0] * k
        for j, v in enumerate(vecs):
            for i in range(k):
                rows[i] |= ((v.bits >> i) & 1) << j
        return cls(len(vecs), tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "BinMatrix":
        if n < 1:
            raise DimensionError(f"size must be positive, got {n}")
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinMatrix":
        if rows < 1 or cols < 1:
            raise DimensionError(f"shape ({rows}, {cols}) must be positive")
        return cls(cols, (0,) * rows)

    @classmethod
    def all_ones(cls, rows: int, cols: int) -> "BinMatrix":
        if rows < 1 or cols < 1:
            raise DimensionError(f"shape ({rows}, {cols}) must be positive")
        return cls(cols, ((1 << cols) - 1,) * rows)

    @classmethod
    def circulant(cls, first_row: BinVector) -> "BinMatrix":
        """Circulant matrix C with C[i][j] = first_row[(j - i) mod k]."""
        k = first_row.n
        c = first_row.bits
        rows = []
        for i in range(k):
            # cyclic right-rotation of the first row by i positions
            rows.append(((c << i) | (c >> (k - i))) & ((1 << k) - 1) if i else c)
        return cls(k, tuple(rows))

    @classmethod
    def shift(cls, k: int) -> "BinMatrix":
        """The cyclic shift S with S e_j = e_{(j+1) mod k}."""
        if k < 1:
            raise DimensionError(f"size must be positive, got {k}")
        if k == 1:
            return cls(1, (1,))
        return cls.circulant(BinVector.basis(k, k - 1))

    # -- basic accessors ---------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.data), self.cols)

    @property
    def is_square(self) -> bool:
        return len(self.data) == self.cols

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entry(i, j)

    def row(self, i: int) -> BinVector:
        return BinVector(self.cols, self.data[i])

    def row_vectors(self) -> tuple[BinVector, ...]:
        return tuple(BinVector(self.cols, r) for r in self.data)

    def col(self, j: int) -> BinVector:
        bits = 0
        for i, r in enumerate(self.data):
            bits |= ((r >> j) & 1) << i
        return BinVector(self.rows, bits)

    def col_vectors(self) -> tuple[BinVector, ...]:
        return tuple(self.col(j) for j in range(self.cols))

    # -- arithmetic --------------------------------------------------------

    def transpose(self) -> "BinMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BinMatrix(self.rows, tuple(out))

    def __add__(self, other: "BinMatrix") -> "BinMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add shapes {self.shape} and {other.shape}")
        return BinMatrix(self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    def __matmul__(self, other: "BinMatrix") -> "BinMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply shapes {self.shape} and {other.shape}"
            )
        # columns of the result read off the transposed right factor
        bt = other.transpose()
        out = []
        for r in self.data:
            acc = 0
            for j, c in enumerate(bt.data):
                acc |= ((r & c).bit_count() & 1) << j
            out.append(acc)
        return BinMatrix(other.cols, tuple(out))

    def mul_vec(self, v: BinVector) -> BinVector:
        if self.cols != v.n:
            raise DimensionError(f"cannot apply shape {self.shape} to dimension {v.n}")
        bits = 0
        for i, r in enumerate(self.data):
            bits |= ((r & v.bits).bit_count() & 1) << i
        return BinVector(self.rows, bits)

    def is_symmetric(self) -> bool:
        return self.is_square and self.data == self.transpose().data

    def rank(self) -> int:
        return len(_rref(list(self.data), self.cols)[1])

    def to_bitstring_rows(self) -> list[str]:
        return [self.row(i).to_bitstring() for i in range(self.rows)]

    def __str__(self) -> str:
        return "\n".join(self.to_bitstring_rows())


def _rref(
    rows: list[int], cols: int, rhs: Optional[list[int]] = None
) -> tuple[list[int], list[int], Optional[list[int]]]:
    """Gauss-Jordan over GF(2), pivoting on the lowest column then lowest row.

    Returns the reduced rows, pivot column indices (ascending) and the
    reduced right-hand side.  The fixed pivot rule keeps every downstream
    canonical form reproducible.
    """
    work = list(rows)
    b = list(rhs) if rhs is not None else None
    pivots: list[int] = []
    pivot_row = 0
    for col in range(cols):
        found = -1
        for r in range(pivot_row, len(work)):
            if (work[r] >> col) & 1:
                found = r
                break
        if found == -1:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        if b is not None:
            b[pivot_row], b[found] = b[found], b[pivot_row]
        for r in range(len(work)):
            if r != pivot_row and (work[r] >> col) & 1:
                work[r] ^= work[pivot_row]
                if b is not None:
                    b[r] ^= b[pivot_row]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(work):
            break
    return work, pivots, b


@dataclass(frozen=True, slots=True)
class AffineSolutionSet:
    """All solutions of a consistent GF(2) system, or the empty marker.

    ``particular`` is one solution (None when the system is inconsistent)
    and ``nullbasis`` a basis of the homogeneous solutions, so the set has
    ``2 ** len(nullbasis)`` members.  Iteration walks the members in
    reflected-Gray-code order over the null-basis coefficients, starting
    from the particular solution; the order is deterministic and is relied
    on whenever an algorithm picks "the first acceptable solution".
    """

    n: int
    particular: Optional[BinVector]
    nullbasis: tuple[BinVector, ...]

    @property
    def is_consistent(self) -> bool:
        return self.particular is not None

    def __len__(self) -> int:
        return 0 if self.particular is None else 1 << len(self.nullbasis)

    def __iter__(self) -> Iterator[BinVector]:
        if self.particular is None:
            return
        current = self.particular
        yield current
        for t in range(1, 1 << len(self.nullbasis)):
            flip = (t & -t).bit_length() - 1
            current = current + self.nullbasis[flip]
            yield current


def dot(u: BinVector, v: BinVector) -> int:
    """Dot product sum(u_i v_i) mod 2."""
    return u.dot(v)


def parity(v: BinVector) -> int:
    """Entry sum mod 2: 0 for even vectors, 1 for odd ones."""
    return v.parity()


def mat_mul(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    return a @ b


def rank(a: BinMatrix) -> int:
    """Rank over GF(2); row and column rank coincide."""
    return a.rank()


def solve(a: BinMatrix, b: BinVector) -> AffineSolutionSet:
    """Full solution set of ``a x = b`` over GF(2).

    Inconsistency is reported as an empty set, not an error.  The null
    basis has one vector per free column of the reduced system, listed in
    ascending column order.
    """
    if a.rows != b.n:
        raise DimensionError(
            f"system shape {a.shape} does not match right-hand side length {b.n}"
        )
    rhs_bits = [(b.bits >> i) & 1 for i in range(b.n)]
    reduced, pivots, rhs = _rref(list(a.data), a.cols, rhs_bits)
    assert rhs is not None
    for r in range(len(pivots), a.rows):
        if rhs[r]:
            return AffineSolutionSet(a.cols, None, ())
    part = 0
    for r, c in enumerate(pivots):
        part |= rhs[r] << c
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for r, c in enumerate(pivots):
            if (reduced[r] >> free) & 1:
                vec |= 1 << c
        basis.append(BinVector(a.cols, vec))
    return AffineSolutionSet(a.cols, BinVector(a.cols, part), tuple(basis))
