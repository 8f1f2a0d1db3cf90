"""Binary Reed-Muller codes and hard-decision decoders.

The order-r Reed-Muller code on n variables is spanned by the evaluation
vectors of the degree-at-most-r monomials over all 2^n inputs; the
punctured variant drops the evaluation at input 0, leaving length 2^n - 1.
Codewords are handled as packed integers throughout (bit p of a punctured
word is the value at the nonzero input p + 1).

Three decoders share one result contract and differ only in effort:

* exact: enumerate every codeword, keep the closest (ties broken toward
  the lexicographically smaller bit string).  Cost 2^dimension.
* majority: classic majority-logic voting, one layer of monomial degrees
  at a time.  Corrects up to half the minimum distance, cost about 2^(2n).
* recursive: hard-decision split of each word into (u, u XOR v) halves,
  decoding v from the XOR of the halves and u from the better of the two
  resulting candidates.  Cheapest, weakest guarantee.

Punctured words are decoded by running the full-length decoder on both
possible values of the deleted coordinate and keeping the closer result
(ties prefer the 0 extension).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .gf2 import BinaryVector, mobius_bits, monomial_mask


@dataclass(frozen=True)
class RMCode:
    """Reed-Muller code parameters; ``r`` may be negative (the zero code)."""

    r: int
    n: int
    punctured: bool = True

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.r > self.n:
            raise ValueError("order cannot exceed the variable count")

    @property
    def length(self) -> int:
        return (1 << self.n) - (1 if self.punctured else 0)

    @property
    def generator_order(self) -> int:
        # Punctured at r = n the full monomial's vector is the XOR of all the
        # others, so the independent generator set stops at weight n - 1.
        return min(self.r, self.n - 1) if self.punctured else self.r

    @property
    def dimension(self) -> int:
        return sum(comb(self.n, i) for i in range(self.generator_order + 1))

    def generator_labels(self) -> tuple[int, ...]:
        """Monomial labels spanning the code, lowest degree first."""
        order = self.generator_order
        return tuple(
            y
            for y in sorted(range(1 << self.n), key=lambda y: (y.bit_count(), y))
            if y.bit_count() <= order
        )


@dataclass(frozen=True)
class DecodeResult:
    """A codeword, its monomial support, and its distance to the received word."""

    codeword: BinaryVector
    support: frozenset[int]
    distance: int


def encode(code: RMCode, support: frozenset[int] | set[int]) -> BinaryVector:
    """XOR of the evaluation vectors of the monomials in ``support``."""
    bits = 0
    for y in support:
        if y.bit_count() > code.r:
            raise ValueError(f"monomial {y:b} exceeds order {code.r}")
        bits ^= monomial_mask(y, code.n, punctured=code.punctured)
    return BinaryVector(code.length, bits)


def _lex_smaller(a: int, b: int) -> bool:
    # Bit strings compared position 0 first: at the first differing
    # position, the word holding a 0 is the smaller string.
    diff = a ^ b
    if diff == 0:
        return False
    return (a & (diff & -diff)) == 0


def decode_exact(code: RMCode, word: BinaryVector, max_dim: int = 24) -> DecodeResult:
    """Minimum-distance decoding by full enumeration.

    Walks all 2^dimension codewords in Gray-code order (one XOR per step).
    Refuses dimensions above ``max_dim``.
    """
    if word.length != code.length:
        raise ValueError("received word length disagrees with the code")
    if code.dimension > max_dim:
        raise ValueError(
            f"dimension {code.dimension} exceeds the exact-decoder cap {max_dim}"
        )
    labels = code.generator_labels()
    gens = [monomial_mask(y, code.n, punctured=code.punctured) for y in labels]
    target = word.bits
    best_bits = 0
    best_dist = target.bit_count()
    best_subset = 0
    current = 0
    for i in range(1, 1 << len(gens)):
        j = (i & -i).bit_length() - 1
        current ^= gens[j]
        dist = (current ^ target).bit_count()
        if dist < best_dist or (dist == best_dist and _lex_smaller(current, best_bits)):
            best_bits = current
            best_dist = dist
            best_subset = i ^ (i >> 1)
    support = frozenset(labels[j] for j in range(len(gens)) if (best_subset >> j) & 1)
    return DecodeResult(BinaryVector(code.length, best_bits), support, best_dist)


def _scatter(value: int, positions: list[int]) -> int:
    out = 0
    for j, p in enumerate(positions):
        if (value >> j) & 1:
            out |= 1 << p
    return out


def _labels_of_weight(n: int, d: int) -> list[int]:
    return [y for y in range(1 << n) if y.bit_count() == d]


def _reed_support(n: int, r: int, bits: int) -> set[int]:
    """Majority-logic decoding of a full-length word; returns the monomial support.

    For each degree-d monomial the 2^(n-d) characteristic sums (XOR of the
    word over the subcube where the monomial's variables run free and the
    others are pinned) all equal the monomial's coefficient on a clean
    codeword, so their majority is the estimate.  Each estimated layer is
    subtracted before moving one degree down.  Tied votes estimate 0.
    """
    work = bits
    support: set[int] = set()
    for d in range(r, -1, -1):
        layer = []
        for y in _labels_of_weight(n, d):
            free = [j for j in range(n) if (y >> j) & 1]
            pinned = [j for j in range(n) if not (y >> j) & 1]
            ones = 0
            for b in range(1 << len(pinned)):
                base = _scatter(b, pinned)
                s = 0
                for a in range(1 << d):
                    s ^= (work >> (base | _scatter(a, free))) & 1
                ones += s
            if 2 * ones > 1 << len(pinned):
                layer.append(y)
        for y in layer:
            work ^= monomial_mask(y, n, punctured=False)
        support.update(layer)
    return support


def _encode_full(support: set[int], m: int) -> int:
    bits = 0
    for y in support:
        bits ^= monomial_mask(y, m, punctured=False)
    return bits


def _anf_support(bits: int, m: int) -> set[int]:
    anf = mobius_bits(bits, m)
    out = set()
    while anf:
        out.add((anf & -anf).bit_length() - 1)
        anf &= anf - 1
    return out


def _plotkin_support(r: int, m: int, bits: int) -> set[int]:
    """Recursive hard-decision decoding of a full-length word.

    Splitting on the top variable writes any codeword as (u, u XOR v) with
    u of the same order on m-1 variables and v one order lower.  v is
    decoded from the XOR of the halves; u is decoded from each half's
    candidate (the first half directly, the second corrected by v) and the
    reconstruction agreeing with the word on more positions wins, with
    ties kept on the first half's branch.
    """
    if r <= 0:
        size = 1 << m
        return {0} if 2 * bits.bit_count() > size else set()
    if r >= m:
        return _anf_support(bits, m)
    half = 1 << (m - 1)
    low = bits & ((1 << half) - 1)
    high = bits >> half
    v_support = _plotkin_support(r - 1, m - 1, low ^ high)
    v_bits = _encode_full(v_support, m - 1)
    best_support: set[int] | None = None
    best_dist = 0
    for u_word in (low, high ^ v_bits):
        u_support = _plotkin_support(r, m - 1, u_word)
        u_bits = _encode_full(u_support, m - 1)
        full = u_bits | ((u_bits ^ v_bits) << half)
        dist = (full ^ bits).bit_count()
        if best_support is None or dist < best_dist:
            best_support = u_support
            best_dist = dist
    assert best_support is not None
    top = 1 << (m - 1)
    return best_support | {y | top for y in v_support}


def _decode_extended(code: RMCode, word: BinaryVector, core) -> DecodeResult:
    """Run a full-length decoder; for punctured codes try both origin fills."""
    if word.length != code.length:
        raise ValueError("received word length disagrees with the code")
    if code.r < 0:
        raise ValueError("order must be non-negative for this decoder")
    if not code.punctured:
        support = core(code.n, code.r, word.bits)
        cw = _encode_full(support, code.n)
        return DecodeResult(
            BinaryVector(code.length, cw), frozenset(support), (cw ^ word.bits).bit_count()
        )
    best: DecodeResult | None = None
    for ext in (0, 1):
        support = core(code.n, code.r, (word.bits << 1) | ext)
        cw = _encode_full(support, code.n) >> 1
        dist = (cw ^ word.bits).bit_count()
        if best is None or dist < best.distance:
            best = DecodeResult(BinaryVector(code.length, cw), frozenset(support), dist)
    assert best is not None
    return best


def decode_majority(code: RMCode, word: BinaryVector) -> DecodeResult:
    """Majority-logic decoding; exact up to half the minimum distance."""
    return _decode_extended(code, word, _reed_support)


def decode_recursive(code: RMCode, word: BinaryVector) -> DecodeResult:
    """Recursive split decoding; fast, with a weaker correction radius."""
    return _decode_extended(
        code, word, lambda n, r, bits: _plotkin_support(r, n, bits)
    )


def covering_radius_exhaustive(code: RMCode, max_pairs: int = 1 << 26) -> int:
    """Largest distance from any length-L vector to the code, by enumeration.

    Cost is 2^length * 2^dimension distance computations; refuses instances
    whose product exceeds ``max_pairs``.
    """
    if code.length + code.dimension > max_pairs.bit_length() - 1:
        raise ValueError("instance too large for exhaustive covering-radius search")
    labels = code.generator_labels()
    gens = [monomial_mask(y, code.n, punctured=code.punctured) for y in labels]
    codewords = [0]
    current = 0
    for i in range(1, 1 << len(gens)):
        current ^= gens[(i & -i).bit_length() - 1]
        codewords.append(current)
    radius = 0
    for x in range(1 << code.length):
        nearest = min((x ^ c).bit_count() for c in codewords)
        if nearest > radius:
            radius = nearest
    return radius
