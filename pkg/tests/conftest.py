"""Shared fixtures, golden values, and independent reference implementations.

The oracle helpers here deliberately avoid the package's bit-packed
internals: they work on plain Python lists and ints so that agreement with
the library is a real cross-check, not the same code twice.
"""

from pathlib import Path

import pytest

from rmtopt import Circuit, parse

DATA = Path(__file__).parent / "data"

# Coefficient vector of the doubly controlled Z on three wires, labels 1..7.
CCZ_COEFFS = (1, 1, 7, 1, 7, 7, 1)

# The two overlapping doubly controlled Z gates on four wires, labels 1..15.
DOUBLE_CCZ_COEFFS = (2, 6, 6, 1, 7, 7, 1, 3, 7, 7, 1, 0, 0, 0, 0)
DOUBLE_CCZ_RES2 = (0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0)
DOUBLE_CCZ_SUM = (3, 7, 7, 2, 0, 0, 2, 4, 0, 0, 2, 1, 1, 1, 1)


@pytest.fixture
def ccz_circuit() -> Circuit:
    return parse((DATA / "ccz.qc").read_text())


@pytest.fixture
def double_ccz_circuit() -> Circuit:
    return parse((DATA / "double_ccz.qc").read_text())


def eval_phase(entries, x, n, k):
    """Reference evaluation: sum entries over labels with odd overlap with x."""
    total = 0
    for y in range(1, 1 << n):
        if (x & y).bit_count() & 1:
            total += entries[y - 1]
    return total % (1 << (k + 1))


def anf_support(table, n):
    """Monomial support of a Boolean function given as a 0/1 list of length 2^n."""
    coeffs = list(table)
    for j in range(n):
        for s in range(1 << n):
            if s >> j & 1:
                coeffs[s] ^= coeffs[s ^ (1 << j)]
    return {s for s, c in enumerate(coeffs) if c}


def anf_degree(table, n):
    """Degree of the function, or -1 for the zero function."""
    support = anf_support(table, n)
    return max((s.bit_count() for s in support), default=-1)


def in_punctured_rm(bits, r, n):
    """Membership of a length 2^n - 1 word (list, position p = point p+1)
    in the punctured Reed-Muller code of order r: some extension by a bit
    at the origin must have degree at most r."""
    if r < 0:
        return not any(bits)
    for origin in (0, 1):
        if anf_degree([origin, *bits], n) <= r:
            return True
    return False


def random_entries(rng, n, k):
    modulus = 1 << (k + 1)
    return tuple(rng.randrange(modulus) for _ in range((1 << n) - 1))


def random_invertible_rows(rng, n):
    """Rows (as bitmasks) of a random invertible matrix over GF(2),
    built from the identity by random row additions."""
    rows = [1 << i for i in range(n)]
    for _ in range(4 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            rows[i] ^= rows[j]
    return tuple(rows)


def random_cnot_phase_circuit(rng, n, max_gates, k=2):
    from rmtopt import Cnot, Phase

    modulus = 1 << (k + 1)
    gates = []
    for _ in range(rng.randrange(max_gates + 1)):
        if rng.random() < 0.5 and n >= 2:
            c = rng.randrange(n)
            t = rng.randrange(n - 1)
            gates.append(Cnot(c, t if t < c else t + 1))
        else:
            gates.append(Phase(rng.randrange(n), rng.randrange(1, modulus)))
    wires = tuple(f"q{i}" for i in range(n))
    return Circuit(n, wires, tuple(gates), k)
