"""Phase-rotation minimization for CNOT + phase circuits.

Pipeline per Hadamard-free Segment: extract the phase representation,
decode the mod-2 residue of the coefficients in the order-(n-k-2)
punctured Reed-Muller code, lift the decoded codeword to a null
coefficient vector, add it, and resynthesize.  The decoded distance is the
optimized T-count; with the exact decoder it is the true minimum over all
regroupings of the segment's phases.

Circuits with Hadamard gates are split at each H and the Segments are
optimized independently; nothing is moved across an H.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from time import perf_counter

from .circuit import Circuit, Cnot, Gate, Hadamard, Phase, Segment, partition, t_count
from .phasepoly import CoeffVector, PhaseRep, _planes_add, extract, lift
from .rmdecode import RMCode, decode_exact, decode_majority, decode_recursive
from .synth import synthesize

log = logging.getLogger(__name__)

DECODERS = ("exact", "majority", "recursive", "none")


@dataclass(frozen=True)
class OptimizeStats:
    """Counters for one optimization run (a Segment or a whole circuit)."""

    n: int
    k: int
    t_count_original: int
    t_count_canonical: int
    t_count_optimized: int
    decoder: str
    decode_distance: int
    millis: float


def _check_decoder(decoder: str) -> None:
    if decoder not in DECODERS:
        raise ValueError(
            f"unknown decoder {decoder!r} (valid decoders: {', '.join(DECODERS)})"
        )


def _gate_wires(g: Gate) -> tuple[int, ...]:
    if isinstance(g, Cnot):
        return (g.control, g.target)
    return (g.wire,)


def _map_gate(g: Gate, mapping: dict[int, int]) -> Gate:
    if isinstance(g, Cnot):
        return Cnot(mapping[g.control], mapping[g.target])
    if isinstance(g, Phase):
        return Phase(mapping[g.wire], g.power)
    return Hadamard(mapping[g.wire])


def _restricted_rep(seg: Segment) -> tuple[list[int], PhaseRep]:
    """Extract a Segment on its touched wires only.

    Untouched wires never enter any label or permutation row, so dropping
    them shrinks the coefficient vector from 2^n - 1 to 2^m - 1 entries
    without changing the represented mapping.
    """
    active = sorted({w for g in seg.gates for w in _gate_wires(g)})
    to_local = {w: i for i, w in enumerate(active)}
    names = tuple(seg.wires[w] for w in active)
    gates = tuple(_map_gate(g, to_local) for g in seg.gates)
    return active, extract(Segment(len(active), names, gates, seg.k))


def optimize_segment(
    seg: Segment,
    decoder: str = "majority",
    *,
    max_exact_dim: int = 24,
    majority_max_n: int = 20,
    recursive_max_n: int = 28,
) -> tuple[Segment, OptimizeStats]:
    """Minimize odd phase coefficients of one Segment.

    Decoding runs on the touched wires only.  ``decoder="none"`` skips
    decoding and just canonicalizes (merge phases, resynthesize).  The
    heuristic decoders are skipped with a warning above their size guards;
    the exact decoder raises instead when its dimension cap is exceeded.
    If a heuristic lands farther from the residue than the zero codeword,
    the zero codeword is used, so the optimized count never exceeds the
    canonical count.
    """
    _check_decoder(decoder)
    start = perf_counter()
    t_orig = t_count(seg)
    if not seg.gates:
        stats = OptimizeStats(0, seg.k, 0, 0, 0, decoder, 0, _elapsed_ms(start))
        return Segment(seg.n, seg.wires, (), seg.k), stats
    active, rep = _restricted_rep(seg)
    m = len(active)
    residue = rep.coeffs.res2()
    t_canon = residue.weight()
    order = m - seg.k - 2

    result = None
    if decoder != "none" and order >= 0:
        code = RMCode(order, m)
        if decoder == "exact":
            if code.dimension > max_exact_dim:
                raise ValueError(
                    f"exact decoding needs dimension {code.dimension}, "
                    f"above the cap {max_exact_dim}"
                )
            result = decode_exact(code, residue, max_dim=max_exact_dim)
        elif decoder == "majority":
            if m > majority_max_n:
                log.warning(
                    "skipping majority decoding on %d wires (guard %d)", m, majority_max_n
                )
            else:
                result = decode_majority(code, residue)
        else:
            if m > recursive_max_n:
                log.warning(
                    "skipping recursive decoding on %d wires (guard %d)", m, recursive_max_n
                )
            else:
                result = decode_recursive(code, residue)

    if result is not None and result.distance <= t_canon:
        correction = lift(result.codeword, m, seg.k)
        distance = result.distance
    else:
        correction = CoeffVector.zero(m, seg.k)
        distance = t_canon
    new_coeffs = rep.coeffs + correction
    names = tuple(seg.wires[w] for w in active)
    local = synthesize(PhaseRep(new_coeffs, rep.perm), wires=names)
    to_orig = dict(enumerate(active))
    out = Segment(seg.n, seg.wires, tuple(_map_gate(g, to_orig) for g in local.gates), seg.k)
    stats = OptimizeStats(
        m, seg.k, t_orig, t_canon, t_count(out), decoder, distance, _elapsed_ms(start)
    )
    return out, stats


def _elapsed_ms(start: float) -> float:
    return (perf_counter() - start) * 1000.0


def optimize_circuit(
    c: Circuit,
    decoder: str = "majority",
    *,
    max_exact_dim: int = 24,
    majority_max_n: int = 20,
    recursive_max_n: int = 28,
    workers: int | None = None,
) -> tuple[Circuit, OptimizeStats]:
    """Optimize every Hadamard-free Segment of ``c`` independently.

    The Hadamard skeleton is preserved as-is.  ``workers`` caps optional
    thread parallelism over Segments (default from RMTOPT_THREADS, else 1);
    results are reassembled in order, so the output never depends on it.
    """
    _check_decoder(decoder)
    start = perf_counter()
    if workers is None:
        try:
            workers = int(os.environ.get("RMTOPT_THREADS", "1"))
        except ValueError:
            workers = 1
    parts = partition(c)
    seg_idx = [i for i, p in enumerate(parts) if isinstance(p, Segment)]

    def job(part: Segment) -> tuple[Segment, OptimizeStats]:
        return optimize_segment(
            part,
            decoder,
            max_exact_dim=max_exact_dim,
            majority_max_n=majority_max_n,
            recursive_max_n=recursive_max_n,
        )

    if workers > 1 and len(seg_idx) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            done = dict(zip(seg_idx, pool.map(job, [parts[i] for i in seg_idx])))
    else:
        done = {i: job(parts[i]) for i in seg_idx}

    gates: list[Gate] = []
    t_orig = t_canon = t_opt = distance = 0
    for i, part in enumerate(parts):
        if isinstance(part, Segment):
            seg_out, st = done[i]
            gates.extend(seg_out.gates)
            t_orig += st.t_count_original
            t_canon += st.t_count_canonical
            t_opt += st.t_count_optimized
            distance += st.decode_distance
        else:
            gates.append(part)
    out = Circuit(c.n, c.wires, tuple(gates), c.k)
    stats = OptimizeStats(
        c.n, c.k, t_orig, t_canon, t_opt, decoder, distance, _elapsed_ms(start)
    )
    return out, stats


def _split_on_h(c: Circuit) -> tuple[list[tuple[Gate, ...]], tuple[Hadamard, ...]]:
    chunks: list[tuple[Gate, ...]] = []
    hs: list[Hadamard] = []
    pending: list[Gate] = []
    for g in c.gates:
        if isinstance(g, Hadamard):
            chunks.append(tuple(pending))
            pending = []
            hs.append(g)
        else:
            pending.append(g)
    chunks.append(tuple(pending))
    return chunks, tuple(hs)


def verify_equivalent(c1: Circuit, c2: Circuit, *, max_n: int = 12) -> bool:
    """Exhaustively check that two circuits implement the same unitary.

    Both circuits are split at their Hadamard gates; the H sequences must
    match exactly (same wires, same order).  Each aligned Segment pair must
    then agree on its linear permutation and on the phase value at every
    one of the 2^n inputs.  Raises ValueError above ``max_n`` wires or on
    mismatched skeletons; returns False on a real behavioral difference.
    """
    if c1.n != c2.n or c1.k != c2.k:
        raise ValueError("circuits differ in wire count or modulus")
    if c1.n > max_n:
        raise ValueError(f"{c1.n} wires is above the exhaustive-verification limit {max_n}")
    chunks1, hs1 = _split_on_h(c1)
    chunks2, hs2 = _split_on_h(c2)
    if hs1 != hs2:
        raise ValueError("Hadamard skeletons differ; cannot verify segmentwise")
    for g1, g2 in zip(chunks1, chunks2):
        r1 = extract(Segment(c1.n, c1.wires, g1, c1.k))
        r2 = extract(Segment(c2.n, c2.wires, g2, c2.k))
        if r1.perm != r2.perm:
            return False
        for x in range(1 << c1.n):
            if r1.coeffs.evaluate(x) != r2.coeffs.evaluate(x):
                return False
    return True


def gate_profile(a: CoeffVector) -> dict[int, int]:
    """Rotation counts by granularity: entry ``l`` is how many R_z(pi/2^l)
    gates the minimal expansion of ``a`` uses (``l = k`` is the T-count
    when k = 2)."""
    return {l: a.shifted_res2(a.k - l).weight() for l in range(a.k + 1)}


def circuit_profile(c: Circuit) -> dict[int, int]:
    """Sum of ``gate_profile`` over every Segment of a circuit."""
    totals = {l: 0 for l in range(c.k + 1)}
    for part in partition(c):
        if isinstance(part, Segment):
            _, rep = _restricted_rep(part)
            for l, count in gate_profile(rep.coeffs).items():
                totals[l] += count
    return totals


@lru_cache(maxsize=None)
def _null_lattice_planes(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Every coefficient vector in the null lattice, as bit-plane tuples.

    The lattice is generated by the scaled monomial evaluation vectors
    2^i * v^y with wt(y) - i <= n - k - 2 (and wt(y) <= n - 1); distinct 0/1
    combinations of the generators are distinct elements, so walking
    inclusion masks in Gray-code order enumerates the lattice once, with a
    single entrywise add or subtract per step.
    """
    gens = [
        (y, i)
        for y in range(1 << n)
        if y.bit_count() <= n - 1
        for i in range(k + 1)
        if y.bit_count() - i <= n - k - 2
    ]
    add_planes = []
    sub_planes = []
    for y, i in gens:
        vec = CoeffVector.from_monomials(n, k, {y: 1 << i})
        add_planes.append(vec.planes)
        sub_planes.append((-vec).planes)
    current = CoeffVector.zero(n, k).planes
    out = [current]
    included = 0
    for idx in range(1, 1 << len(gens)):
        j = (idx & -idx).bit_length() - 1
        included ^= 1 << j
        delta = add_planes[j] if (included >> j) & 1 else sub_planes[j]
        current = _planes_add(current, delta)
        out.append(current)
    return tuple(out)


@lru_cache(maxsize=None)
def _null_lattice_parities(n: int, k: int) -> tuple[int, ...]:
    return tuple(planes[0] for planes in _null_lattice_planes(n, k))


def brute_force_optimum(a: CoeffVector) -> int:
    """Minimum odd-coefficient count of ``a + c`` over the whole null lattice.

    Independent reference for the decoding pipeline; enumerates all
    131072 lattice elements at n = 4.  Only the parity plane of each sum is
    needed, and binary carries never flow downward, so the count per
    element is one XOR and a popcount.
    """
    if a.n > 4 or a.k != 2:
        raise ValueError("brute-force search is limited to n <= 4, k = 2")
    parity = a.planes[0]
    return min((parity ^ c).bit_count() for c in _null_lattice_parities(a.n, a.k))
