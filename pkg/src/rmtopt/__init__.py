"""T-count minimization for CNOT + phase circuits via Reed-Muller decoding."""

from .circuit import (
    Circuit,
    Cnot,
    Gate,
    Hadamard,
    ParseError,
    Phase,
    Segment,
    emit,
    parse,
    partition,
    t_count,
)
from .gf2 import BinaryVector, GF2Matrix, mobius_bits, monomial_mask, var_mask
from .optimizer import (
    DECODERS,
    OptimizeStats,
    brute_force_optimum,
    circuit_profile,
    gate_profile,
    optimize_circuit,
    optimize_segment,
    verify_equivalent,
)
from .phasepoly import (
    CoeffVector,
    LinearPermutation,
    MonomialCoeffs,
    PhaseRep,
    effective_degree,
    extract,
    is_null_phase,
    lift,
    monomial_decompose,
)
from .rmdecode import (
    DecodeResult,
    RMCode,
    covering_radius_exhaustive,
    decode_exact,
    decode_majority,
    decode_recursive,
    encode,
)
from .synth import synthesize, synthesize_permutation

__version__ = "0.1.0"

# The estimator pulls in scikit-learn; defer that import until first use.
_LAZY = {"TCountOptimizer", "ensure_circuit"}


def __getattr__(name: str):
    if name in _LAZY:
        from . import estimator

        return getattr(estimator, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__() -> list[str]:
    return sorted(set(globals()) | _LAZY)


__all__ = [
    "BinaryVector",
    "Circuit",
    "Cnot",
    "CoeffVector",
    "DECODERS",
    "DecodeResult",
    "GF2Matrix",
    "Gate",
    "Hadamard",
    "LinearPermutation",
    "MonomialCoeffs",
    "OptimizeStats",
    "ParseError",
    "Phase",
    "PhaseRep",
    "RMCode",
    "Segment",
    "TCountOptimizer",
    "brute_force_optimum",
    "circuit_profile",
    "covering_radius_exhaustive",
    "decode_exact",
    "decode_majority",
    "decode_recursive",
    "effective_degree",
    "emit",
    "encode",
    "ensure_circuit",
    "extract",
    "gate_profile",
    "is_null_phase",
    "lift",
    "mobius_bits",
    "monomial_decompose",
    "monomial_mask",
    "optimize_circuit",
    "optimize_segment",
    "parse",
    "partition",
    "synthesize",
    "synthesize_permutation",
    "t_count",
    "var_mask",
    "verify_equivalent",
]
