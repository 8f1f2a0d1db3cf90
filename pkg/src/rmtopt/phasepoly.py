"""Phase polynomials of CNOT + phase circuits over Z_(2^(k+1)).

A Hadamard-free circuit acts on basis states as a linear permutation of the
wires together with a diagonal phase

    P(x) = sum_y a_y * iota(parity(y & x))   (mod 2^(k+1)),

one coefficient ``a_y`` per nonzero parity label ``y`` of the inputs.  Labels
are bitmasks: bit ``j`` of ``y`` means input ``j`` participates, so label 1
is the first input, 2 the second, 3 their XOR, 4 the third input, and so on.
A coefficient vector has ``2^n - 1`` entries; entry index ``i`` (1-based)
carries label ``y = i``.

Coefficients are stored in bit planes: plane ``j`` is one packed bit mask
holding binary digit ``j`` of every entry, so the mod-2 residue and its
digit shifts are single-int reads, and entrywise addition is a short
ripple-carry over k+1 masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .circuit import Cnot, Hadamard, Phase, Segment
from .gf2 import BinaryVector, GF2Matrix, mobius_bits


def _planes_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # Bit-sliced ripple-carry add; dropping the final carry is exactly
    # reduction mod 2^(number of planes).
    carry = 0
    out = []
    for pa, pb in zip(a, b):
        out.append(pa ^ pb ^ carry)
        carry = (pa & pb) | (carry & (pa ^ pb))
    return tuple(out)


@dataclass(frozen=True)
class CoeffVector:
    """Dense coefficient vector of a phase polynomial, in bit-plane layout."""

    n: int
    k: int
    planes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if len(self.planes) != self.k + 1:
            raise ValueError("expected k+1 bit planes")
        for p in self.planes:
            if p < 0 or p >> self.length:
                raise ValueError("plane has bits set beyond 2^n - 1 entries")

    @property
    def length(self) -> int:
        return (1 << self.n) - 1

    @property
    def modulus(self) -> int:
        return 1 << (self.k + 1)

    @classmethod
    def zero(cls, n: int, k: int) -> "CoeffVector":
        return cls(n, k, (0,) * (k + 1))

    @classmethod
    def from_entries(cls, n: int, k: int, entries: Iterable[int]) -> "CoeffVector":
        """Build from one integer per label, index order; reduced mod 2^(k+1)."""
        modulus = 1 << (k + 1)
        planes = [0] * (k + 1)
        count = 0
        for pos, e in enumerate(entries):
            e %= modulus
            for j in range(k + 1):
                planes[j] |= ((e >> j) & 1) << pos
            count = pos + 1
        if count != (1 << n) - 1:
            raise ValueError(f"expected {(1 << n) - 1} entries, got {count}")
        return cls(n, k, tuple(planes))

    @classmethod
    def from_label_powers(cls, n: int, k: int, powers: Mapping[int, int]) -> "CoeffVector":
        """Build from a sparse mapping of labels to coefficients."""
        modulus = 1 << (k + 1)
        planes = [0] * (k + 1)
        for y, e in powers.items():
            if not 0 < y < (1 << n):
                raise ValueError(f"label {y} outside 1..{(1 << n) - 1}")
            e %= modulus
            for j in range(k + 1):
                planes[j] |= ((e >> j) & 1) << (y - 1)
        return cls(n, k, tuple(planes))

    @classmethod
    def from_monomials(cls, n: int, k: int, terms: Mapping[int, int]) -> "CoeffVector":
        """Sum of monomial evaluation vectors: entry at label m is
        ``sum(coeff for y, coeff in terms.items() if y submask of m)``."""
        modulus = 1 << (k + 1)
        vals = [0] * (1 << n)
        for y, coeff in terms.items():
            if not 0 <= y < (1 << n):
                raise ValueError(f"monomial {y} uses variables beyond n")
            vals[y] = (vals[y] + coeff) % modulus
        for j in range(n):
            bit = 1 << j
            for m in range(1 << n):
                if m & bit:
                    vals[m] = (vals[m] + vals[m ^ bit]) % modulus
        return cls.from_entries(n, k, vals[1:])

    @property
    def entries(self) -> tuple[int, ...]:
        out = [0] * self.length
        for j, plane in enumerate(self.planes):
            rest = plane
            while rest:
                pos = (rest & -rest).bit_length() - 1
                out[pos] |= 1 << j
                rest &= rest - 1
        return tuple(out)

    def entry(self, y: int) -> int:
        """Coefficient at label ``y`` (1-based mask)."""
        if not 0 < y <= self.length:
            raise IndexError(f"label {y} outside 1..{self.length}")
        pos = y - 1
        return sum(((p >> pos) & 1) << j for j, p in enumerate(self.planes))

    def __add__(self, other: "CoeffVector") -> "CoeffVector":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("shape mismatch")
        return CoeffVector(self.n, self.k, _planes_add(self.planes, other.planes))

    def __neg__(self) -> "CoeffVector":
        # Two's complement per entry: invert every plane, then add 1 to every
        # entry; zero entries wrap back to zero.
        mask = (1 << self.length) - 1
        inverted = [p ^ mask for p in self.planes]
        carry = mask
        out = []
        for p in inverted:
            out.append(p ^ carry)
            carry = p & carry
        return CoeffVector(self.n, self.k, tuple(out))

    def __sub__(self, other: "CoeffVector") -> "CoeffVector":
        return self + (-other)

    def res2(self) -> BinaryVector:
        """Mod-2 residue: the parity plane, as a binary vector."""
        return BinaryVector(self.length, self.planes[0])

    def shifted_res2(self, j: int) -> BinaryVector:
        """Binary digit ``j`` of every entry (divide by ``2^j``, then res2)."""
        if not 0 <= j <= self.k:
            raise ValueError(f"digit index {j} outside 0..{self.k}")
        return BinaryVector(self.length, self.planes[j])

    def evaluate(self, x: int) -> int:
        """Value of the phase polynomial at input mask ``x``, mod 2^(k+1).

        Direct summation: each label whose parity with ``x`` is odd
        contributes its coefficient once.
        """
        if not 0 <= x < (1 << self.n):
            raise ValueError(f"input mask {x} outside 0..{(1 << self.n) - 1}")
        odd = _parity_table(x, self.n) >> 1  # drop label 0; bit p is label p+1
        total = 0
        for j, plane in enumerate(self.planes):
            total += (plane & odd).bit_count() << j
        return total % self.modulus

    def weight_res2(self) -> int:
        """Number of odd coefficients (the T-count of a synthesis of this vector)."""
        return self.planes[0].bit_count()


def _parity_table(x: int, n: int) -> int:
    """Packed table with bit ``y`` equal to parity(x & y), y in [0, 2^n)."""
    table = 0
    width = 1
    for j in range(n):
        upper = table
        if (x >> j) & 1:
            upper ^= (1 << width) - 1
        table |= upper << width
        width <<= 1
    return table


@dataclass(frozen=True)
class MonomialCoeffs:
    """Coefficients of a phase mapping over the monomial basis.

    Keys are variable masks ``y`` with ``wt(y) <= n - 1`` (the constant
    ``y = 0`` is allowed, the full monomial never appears); values are the
    nonzero coefficients mod 2^(k+1).
    """

    n: int
    k: int
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        modulus = 1 << (self.k + 1)
        for y, coeff in self.terms.items():
            if not 0 <= y < (1 << self.n):
                raise ValueError(f"monomial {y} uses variables beyond n")
            if y.bit_count() > self.n - 1:
                raise ValueError("the full monomial is outside the basis")
            if not 0 < coeff < modulus:
                raise ValueError(f"coefficient {coeff} outside 1..{modulus - 1}")


LinearPermutation = GF2Matrix


@dataclass(frozen=True)
class PhaseRep:
    """Extracted representation of a Segment: diagonal phase plus wire permutation."""

    coeffs: CoeffVector
    perm: GF2Matrix

    def __post_init__(self) -> None:
        if not self.perm.is_square() or self.perm.n_rows != self.coeffs.n:
            raise ValueError("permutation shape disagrees with coefficient vector")


def extract(segment: Segment) -> PhaseRep:
    """Sweep a Segment once, accumulating phases against the wires' parity labels.

    Wire states start as the identity labels; a CNOT XORs the control's
    label into the target's, and a phase gate adds its power to the
    coefficient of the acting wire's current label.  The final labels are
    the segment's linear permutation.
    """
    n = segment.n
    rows = [1 << i for i in range(n)]
    acc: dict[int, int] = {}
    modulus = 1 << (segment.k + 1)
    for g in segment.gates:
        if isinstance(g, Cnot):
            rows[g.target] ^= rows[g.control]
        elif isinstance(g, Phase):
            label = rows[g.wire]
            acc[label] = (acc.get(label, 0) + g.power) % modulus
        else:
            raise ValueError("extract requires a Hadamard-free Segment")
    coeffs = CoeffVector.from_label_powers(n, segment.k, {y: p for y, p in acc.items() if p})
    return PhaseRep(coeffs, GF2Matrix(tuple(rows), n))


def monomial_decompose(a: CoeffVector) -> MonomialCoeffs:
    """Coordinates of ``a`` in the monomial basis (constant included, full
    monomial excluded).

    Viewing ``a`` as a function on nonzero masks, extend it to mask 0 with
    the unique value that kills the full monomial's Moebius coefficient;
    the remaining signed Moebius coefficients are the basis coordinates.
    """
    n, k = a.n, a.k
    modulus = a.modulus
    size = 1 << n
    vals = [0, *a.entries]
    for j in range(n):
        bit = 1 << j
        for m in range(size):
            if m & bit:
                vals[m] = (vals[m] - vals[m ^ bit]) % modulus
    # vals[m] is now the Moebius coefficient with the mask-0 value pinned at 0.
    # The mask-0 value t enters coefficient y with sign (-1)^wt(y); choose t
    # so the full-monomial coefficient vanishes.
    full = size - 1
    t = (-vals[full]) % modulus if n % 2 == 0 else vals[full]
    terms: dict[int, int] = {}
    for y in range(size - 1):
        sign = -1 if y.bit_count() & 1 else 1
        coeff = (vals[y] + sign * t) % modulus
        if coeff:
            terms[y] = coeff
    return MonomialCoeffs(n, k, terms)


def effective_degree(mc: MonomialCoeffs) -> int | None:
    """Largest ``wt(y) - j`` over stored terms, where ``j`` is the lowest set
    binary digit of the term's coefficient; None for the zero mapping."""
    best: int | None = None
    for y, coeff in mc.terms.items():
        j = (coeff & -coeff).bit_length() - 1
        d = y.bit_count() - j
        if best is None or d > best:
            best = d
    return best


def is_null_phase(a: CoeffVector) -> bool:
    """Whether ``a`` evaluates to 0 mod 2^(k+1) on every input.

    Decided through the monomial decomposition: the phase mapping vanishes
    exactly when every term's effective degree is at most n - k - 2.
    """
    d = effective_degree(monomial_decompose(a))
    return d is None or d <= a.n - a.k - 2


def lift(cw: BinaryVector, n: int, k: int) -> CoeffVector:
    """Lift a punctured Reed-Muller codeword to a null coefficient vector.

    Decomposes ``cw`` over GF(2) into monomials of degree at most
    ``n - k - 2`` (trying the one extension at the deleted origin that makes
    this possible) and re-sums those monomials' evaluation vectors over
    Z_(2^(k+1)).  The result has ``res2(lift(cw)) == cw`` and evaluates to 0
    everywhere.  Raises ValueError when ``cw`` needs a higher-degree
    monomial, i.e. is not in the code.
    """
    if cw.length != (1 << n) - 1:
        raise ValueError("codeword length disagrees with n")
    r = n - k - 2
    anf = mobius_bits(cw.bits << 1, n)
    full = 1 << n
    if (anf >> (full - 1)) & 1:
        # The other origin extension differs by the indicator of 0, whose
        # normal form contains every monomial; flipping all coefficients
        # switches to it and removes the full monomial.
        anf ^= (1 << full) - 1
    support = []
    rest = anf
    while rest:
        y = (rest & -rest).bit_length() - 1
        if y.bit_count() > r:
            raise ValueError(f"vector is not in the order-{r} punctured Reed-Muller code")
        support.append(y)
        rest &= rest - 1
    return CoeffVector.from_monomials(n, k, {y: 1 for y in support})
