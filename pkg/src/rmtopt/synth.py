"""Resynthesis of phase representations into CNOT + phase Segments.

Each nonzero coefficient becomes one compute/phase/uncompute block: the
label's parity is accumulated onto its lowest participating wire with
CNOTs, the phase gate fires there, and the CNOTs are undone.  Wire states
are therefore the identity between blocks, and a final elimination network
realizes the wanted linear permutation.  Extracting the produced Segment
returns exactly the input representation.
"""

from __future__ import annotations

from typing import Sequence

from .circuit import Cnot, Gate, Phase, Segment
from .gf2 import GF2Matrix
from .phasepoly import PhaseRep


def _default_wires(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def _elimination_ops(perm: GF2Matrix) -> list[tuple[int, int]]:
    """Row additions (source, target) reducing ``perm`` to the identity."""
    if not perm.is_square():
        raise ValueError("permutation matrix must be square")
    n = perm.cols
    rows = list(perm.rows)
    ops: list[tuple[int, int]] = []
    for col in range(n):
        if not (rows[col] >> col) & 1:
            pivot = next(
                (i for i in range(col + 1, n) if (rows[i] >> col) & 1), None
            )
            if pivot is None:
                raise ValueError("matrix is singular")
            rows[col] ^= rows[pivot]
            ops.append((pivot, col))
        for i in range(n):
            if i != col and (rows[i] >> col) & 1:
                rows[i] ^= rows[col]
                ops.append((col, i))
    return ops


def synthesize_permutation(
    perm: GF2Matrix, *, k: int = 2, wires: Sequence[str] | None = None
) -> Segment:
    """CNOT network whose extraction equals ``perm``.

    Gauss-Jordan elimination writes the inverse as a product of row
    additions; emitting the additions in reverse order as CNOTs builds the
    matrix itself.  At most n^2 + n gates.
    """
    n = perm.cols
    gates = tuple(Cnot(src, tgt) for src, tgt in reversed(_elimination_ops(perm)))
    names = _default_wires(n) if wires is None else tuple(wires)
    return Segment(n, names, gates, k)


def synthesize(rep: PhaseRep, *, wires: Sequence[str] | None = None) -> Segment:
    """Segment realizing ``rep``: one phase block per nonzero coefficient,
    ascending label order, then the permutation network.

    The produced Segment has ``extract(synthesize(rep)) == rep``, contains
    no zero-power phase gate, and its T-count equals the number of odd
    coefficients.
    """
    coeffs = rep.coeffs
    n = coeffs.n
    names = _default_wires(n) if wires is None else tuple(wires)
    gates: list[Gate] = []
    occupied = 0
    for plane in coeffs.planes:
        occupied |= plane
    rest = occupied
    while rest:
        pos = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        label = pos + 1
        power = coeffs.entry(label)
        if power == 0:
            continue
        pivot = (label & -label).bit_length() - 1
        others = []
        sources = label & (label - 1)
        while sources:
            w = (sources & -sources).bit_length() - 1
            others.append(w)
            sources &= sources - 1
        for w in others:
            gates.append(Cnot(w, pivot))
        gates.append(Phase(pivot, power))
        for w in reversed(others):
            gates.append(Cnot(w, pivot))
    gates.extend(synthesize_permutation(rep.perm, k=coeffs.k, wires=names).gates)
    return Segment(n, names, tuple(gates), coeffs.k)
