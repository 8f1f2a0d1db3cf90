"""Transformer-style front end for the optimizer.

TCountOptimizer wraps optimize_circuit in the scikit-learn estimator
protocol so circuit optimization can sit inside a Pipeline next to other
transform steps.  There is nothing to learn: fit only validates parameters.
Inputs are Circuit objects or circuit-file text, one or a list.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin

from .circuit import Circuit, emit, parse
from .optimizer import DECODERS, _check_decoder, optimize_circuit, verify_equivalent


def ensure_circuit(x: Circuit | str) -> Circuit:
    """Coerce one input to a Circuit, parsing text if needed."""
    if isinstance(x, Circuit):
        return x
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"expected a Circuit or circuit-file text, got {type(x).__name__}")


class TCountOptimizer(BaseEstimator, TransformerMixin):
    """Minimize odd phase rotations in CNOT + phase circuits.

    Stateless transformer: ``transform`` optimizes each input circuit
    independently.  String inputs are parsed and re-emitted as strings;
    Circuit inputs come back as Circuits.

    Parameters
    ----------
    decoder : {"exact", "majority", "recursive", "none"}, default="majority"
        Decoding strategy.  "exact" guarantees the minimum per segment but
        is limited by ``max_exact_dim``; "none" only canonicalizes.
    modulus_exponent : int or None, default=None
        If set, reinterpret every input circuit's phases modulo
        ``2^(modulus_exponent + 1)`` before optimizing.
    max_exact_dim : int, default=24
        Code-dimension cap for the exact decoder.
    majority_max_n : int, default=20
        Wire-count guard above which majority decoding is skipped.
    recursive_max_n : int, default=28
        Wire-count guard above which recursive decoding is skipped.
    verify : bool, default=False
        If True, exhaustively check each output against its input and
        raise on any mismatch.  Only feasible for small circuits.

    Attributes
    ----------
    stats_ : list of OptimizeStats
        Per-circuit counters from the last ``transform`` call.

    Examples
    --------
    >>> from rmtopt.circuit import Circuit, Phase
    >>> c = Circuit(1, ("a",), (Phase(0, 1), Phase(0, 1)))
    >>> TCountOptimizer(decoder="none").transform(c).gates
    (Phase(wire=0, power=2),)
    """

    def __init__(
        self,
        decoder: str = "majority",
        modulus_exponent: int | None = None,
        max_exact_dim: int = 24,
        majority_max_n: int = 20,
        recursive_max_n: int = 28,
        verify: bool = False,
    ):
        self.decoder = decoder
        self.modulus_exponent = modulus_exponent
        self.max_exact_dim = max_exact_dim
        self.majority_max_n = majority_max_n
        self.recursive_max_n = recursive_max_n
        self.verify = verify

    def fit(self, X=None, y=None):
        """Validate parameters; no state is learned."""
        _check_decoder(self.decoder)
        if self.modulus_exponent is not None and self.modulus_exponent < 0:
            raise ValueError("modulus_exponent must be nonnegative")
        return self

    def transform(self, X):
        """Optimize one circuit or a list of circuits.

        Returns the same shape as the input: a single Circuit or string
        maps to a single output, a list maps to a list.
        """
        self.fit()
        single = isinstance(X, (Circuit, str))
        items = [X] if single else list(X)
        self.stats_ = []
        out = []
        for item in items:
            circuit = ensure_circuit(item)
            if self.modulus_exponent is not None:
                circuit = circuit.with_modulus(self.modulus_exponent)
            optimized, stats = optimize_circuit(
                circuit,
                self.decoder,
                max_exact_dim=self.max_exact_dim,
                majority_max_n=self.majority_max_n,
                recursive_max_n=self.recursive_max_n,
            )
            if self.verify and not verify_equivalent(circuit, optimized):
                raise AssertionError("optimized circuit is not equivalent to its input")
            self.stats_.append(stats)
            out.append(emit(optimized) if isinstance(item, str) else optimized)
        return out[0] if single else out


__all__ = ["DECODERS", "TCountOptimizer", "ensure_circuit"]
