"""Bit-packed GF(2) vectors, dense GF(2) matrices and Boolean-function helpers.

A vector lives inside a single Python integer: bit ``i`` of ``bits`` holds
component ``i``.  XOR, Hamming weight and Hamming distance are then one int
operation each, whatever the length.  Matrices keep one packed integer per
row (bit ``c`` of row ``r`` is the entry at row ``r``, column ``c``).

Truth tables of Boolean functions on ``n`` variables use the same packing:
bit ``m`` of the table is the value at input ``m``, with variable ``j``
read from bit ``j`` of the input index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BinaryVector:
    """Immutable fixed-length vector over GF(2)."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond declared length")

    @classmethod
    def zeros(cls, length: int) -> "BinaryVector":
        return cls(length, 0)

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BinaryVector":
        """Build from an iterable of 0/1 components, index 0 first."""
        bits = 0
        count = 0
        for i, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"component {i} is {v}, expected 0 or 1")
            bits |= v << i
            count = i + 1
        return cls(count, bits)

    def to_bits(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.length))

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} out of range for length {self.length}")
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def distance(self, other: "BinaryVector") -> int:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return (self.bits ^ other.bits).bit_count()

    def __xor__(self, other: "BinaryVector") -> "BinaryVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BinaryVector(self.length, self.bits ^ other.bits)

    def __str__(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.length))


@dataclass(frozen=True)
class GF2Matrix:
    """Dense matrix over GF(2), one packed integer per row."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValueError("cols must be non-negative")
        for r in self.rows:
            if r < 0 or r >> self.cols:
                raise ValueError("row has bits set beyond declared width")

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GF2Matrix":
        """Build from nested 0/1 lists; all rows must share a width."""
        if not rows:
            return cls((), 0)
        width = len(rows[0])
        packed = []
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged rows")
            bits = 0
            for c, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                bits |= v << c
            packed.append(bits)
        return cls(tuple(packed), width)

    def to_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple((r >> c) & 1 for c in range(self.cols)) for r in self.rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> int:
        return self.rows[i]

    def is_square(self) -> bool:
        return len(self.rows) == self.cols

    def rank(self) -> int:
        work = list(self.rows)
        rank = 0
        for col in range(self.cols):
            piv = next((i for i in range(rank, len(work)) if (work[i] >> col) & 1), None)
            if piv is None:
                continue
            work[rank], work[piv] = work[piv], work[rank]
            for i in range(len(work)):
                if i != rank and (work[i] >> col) & 1:
                    work[i] ^= work[rank]
            rank += 1
        return rank

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.cols

    def inverse(self) -> "GF2Matrix":
        """Gauss-Jordan inverse; raises ValueError on singular input."""
        if not self.is_square():
            raise ValueError("only square matrices can be inverted")
        n = self.cols
        work = list(self.rows)
        inv = [1 << i for i in range(n)]
        for col in range(n):
            piv = next((i for i in range(col, n) if (work[i] >> col) & 1), None)
            if piv is None:
                raise ValueError("matrix is singular")
            if piv != col:
                work[col], work[piv] = work[piv], work[col]
                inv[col], inv[piv] = inv[piv], inv[col]
            for i in range(n):
                if i != col and (work[i] >> col) & 1:
                    work[i] ^= work[col]
                    inv[i] ^= inv[col]
        return GF2Matrix(tuple(inv), n)

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.cols != other.n_rows:
            raise ValueError("inner dimensions differ")
        out = []
        for r in self.rows:
            acc = 0
            sel = r
            while sel:
                j = (sel & -sel).bit_length() - 1
                acc ^= other.rows[j]
                sel &= sel - 1
            out.append(acc)
        return GF2Matrix(tuple(out), other.cols)

    def apply(self, x: int) -> int:
        """Multiply by the packed column vector ``x``; returns a packed vector."""
        if x < 0 or x >> self.cols:
            raise ValueError("vector has bits set beyond matrix width")
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r & x).bit_count() & 1) << i
        return out


def var_mask(j: int, n: int) -> int:
    """Truth table (packed) of the projection onto variable ``j`` of ``n``."""
    if not 0 <= j < n:
        raise ValueError(f"variable {j} out of range for {n} variables")
    size = 1 << n
    stride = 1 << j
    block = ((1 << stride) - 1) << stride
    period = stride << 1
    repunit = ((1 << size) - 1) // ((1 << period) - 1)
    return block * repunit


def monomial_mask(y: int, n: int, *, punctured: bool) -> int:
    """Evaluation table of the monomial with variable set ``y``.

    ``y`` is a bitmask of variables; ``y = 0`` is the constant-one function.
    The full table has bit ``m`` set iff ``y`` is a submask of ``m``.  With
    ``punctured=True`` the table at input 0 is dropped, so bit ``p``
    corresponds to the nonzero input ``p + 1``.
    """
    if y < 0 or y >> n:
        raise ValueError("monomial uses variables beyond n")
    table = (1 << (1 << n)) - 1
    rest = y
    while rest:
        j = (rest & -rest).bit_length() - 1
        table &= var_mask(j, n)
        rest &= rest - 1
    return table >> 1 if punctured else table


def mobius_bits(table: int, n: int) -> int:
    """GF(2) Moebius transform of a packed truth table (its own inverse).

    Maps a truth table to its algebraic-normal-form coefficients: bit ``y``
    of the result is the coefficient of the monomial with variable set ``y``.
    """
    if table < 0 or table >> (1 << n):
        raise ValueError("table has bits set beyond 2^n")
    for j in range(n):
        step = 1 << j
        low = var_mask(j, n) >> step
        table ^= (table & low) << step
    return table
