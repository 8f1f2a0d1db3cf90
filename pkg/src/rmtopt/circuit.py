"""Circuit IR for CNOT + phase-rotation + Hadamard circuits, and its file format.

The source format is line oriented::

    # comment
    .v a b c d          wire declaration, one per file, before BEGIN
    .k 2                optional modulus exponent (default 2)
    BEGIN
    cnot a b            CNOT with control a, target b
    T a                 phase gates by name (k = 2 only): T T* P P* Z
    Rk 3 a              phase gate with explicit power, any k
    H a
    END

Blank lines and lines starting with ``#`` are ignored.  Gate names are
case-insensitive; wire names are case-sensitive.  Phase gates store a power
``p`` with ``0 < p < 2^(k+1)``: at k = 2 the named gates mean T=1, P=2,
Z=4, P*=6, T*=7, and a stored power acts as the rotation
``diag(1, exp(i pi p / 2^k))`` on its wire.  Multi-control gates (Toffoli
and friends) are not part of the format and are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


class ParseError(ValueError):
    """Raised on malformed circuit sources; message carries the line number."""


@dataclass(frozen=True)
class Cnot:
    control: int
    target: int


@dataclass(frozen=True)
class Phase:
    wire: int
    power: int


@dataclass(frozen=True)
class Hadamard:
    wire: int


Gate = Union[Cnot, Phase, Hadamard]

# Named phase gates at k = 2 and the canonical spelling of each power.
_PHASE_POWERS_K2 = {"T": 1, "P": 2, "Z": 4, "P*": 6, "T*": 7}
_PHASE_NAMES_K2 = {p: name for name, p in _PHASE_POWERS_K2.items()}


@dataclass(frozen=True)
class Circuit:
    """A gate list over ``n`` named wires with phase modulus ``2^(k+1)``."""

    n: int
    wires: tuple[str, ...]
    gates: tuple[Gate, ...]
    k: int = 2

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("wire count must be non-negative")
        if self.k < 0:
            raise ValueError("modulus exponent k must be non-negative")
        if len(self.wires) != self.n:
            raise ValueError("wire name count disagrees with n")
        if len(set(self.wires)) != self.n:
            raise ValueError("duplicate wire names")
        modulus = 1 << (self.k + 1)
        for g in self.gates:
            if isinstance(g, Cnot):
                if not (0 <= g.control < self.n and 0 <= g.target < self.n):
                    raise ValueError(f"gate {g} references a wire outside 0..{self.n - 1}")
                if g.control == g.target:
                    raise ValueError("CNOT control and target must differ")
            elif isinstance(g, Phase):
                if not 0 <= g.wire < self.n:
                    raise ValueError(f"gate {g} references a wire outside 0..{self.n - 1}")
                if not 0 < g.power < modulus:
                    raise ValueError(f"phase power {g.power} outside 1..{modulus - 1}")
            elif isinstance(g, Hadamard):
                if not 0 <= g.wire < self.n:
                    raise ValueError(f"gate {g} references a wire outside 0..{self.n - 1}")
            else:
                raise ValueError(f"unknown gate object {g!r}")

    def with_modulus(self, k: int) -> "Circuit":
        """Reinterpret phase powers mod ``2^(k+1)``; powers that become 0 drop out."""
        modulus = 1 << (k + 1)
        gates = []
        for g in self.gates:
            if isinstance(g, Phase):
                p = g.power % modulus
                if p:
                    gates.append(Phase(g.wire, p))
            else:
                gates.append(g)
        return type(self)(self.n, self.wires, tuple(gates), k)


class Segment(Circuit):
    """A Circuit containing only CNOT and phase gates (no Hadamard)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for g in self.gates:
            if isinstance(g, Hadamard):
                raise ValueError("Segment cannot contain Hadamard gates")


def t_count(c: Circuit) -> int:
    """Number of odd-power phase gates.

    A stored power expands into at most one gate per binary digit
    (T^p = Z^p2 P^p1 T^p0 at k = 2), so each odd power costs exactly one
    gate of the finest rotation.
    """
    return sum(1 for g in c.gates if isinstance(g, Phase) and g.power & 1)


def partition(c: Circuit) -> list[Union[Segment, Hadamard]]:
    """Split the gate list into maximal Hadamard-free Segments and H gates.

    Concatenating the returned parts in order reproduces ``c.gates``.  No
    empty Segments are produced, so an all-Hadamard circuit yields only
    Hadamard entries and an empty circuit yields an empty list.
    """
    parts: list[Union[Segment, Hadamard]] = []
    pending: list[Gate] = []
    for g in c.gates:
        if isinstance(g, Hadamard):
            if pending:
                parts.append(Segment(c.n, c.wires, tuple(pending), c.k))
                pending = []
            parts.append(g)
        else:
            pending.append(g)
    if pending:
        parts.append(Segment(c.n, c.wires, tuple(pending), c.k))
    return parts


def _meaningful_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse(text: str) -> Circuit:
    """Parse a circuit source; raises ParseError with a line number on bad input."""
    wires: tuple[str, ...] | None = None
    k = 2
    saw_k = False
    gates: list[Gate] = []
    state = "header"

    for lineno, line in _meaningful_lines(text):
        if state == "header":
            if line == "BEGIN":
                if wires is None:
                    raise ParseError(f"line {lineno}: BEGIN before any .v declaration")
                state = "body"
            elif line.startswith(".v"):
                if wires is not None:
                    raise ParseError(f"line {lineno}: repeated .v declaration")
                names = line.split()[1:]
                if len(set(names)) != len(names):
                    raise ParseError(f"line {lineno}: duplicate wire name in .v")
                wires = tuple(names)
            elif line.startswith(".k"):
                if saw_k:
                    raise ParseError(f"line {lineno}: repeated .k declaration")
                parts = line.split()
                if len(parts) != 2:
                    raise ParseError(f"line {lineno}: .k takes one integer")
                try:
                    k = int(parts[1])
                except ValueError:
                    raise ParseError(f"line {lineno}: .k takes one integer") from None
                if k < 0:
                    raise ParseError(f"line {lineno}: .k must be non-negative")
                saw_k = True
            else:
                raise ParseError(f"line {lineno}: expected .v, .k or BEGIN, got {line.split()[0]!r}")
        elif state == "body":
            if line == "END":
                state = "done"
                continue
            gates.append(_parse_gate(lineno, line, wires, k))
        else:
            raise ParseError(f"line {lineno}: content after END")

    if state == "header":
        raise ParseError("missing BEGIN")
    if state == "body":
        raise ParseError("missing END")
    assert wires is not None
    return Circuit(len(wires), wires, tuple(gates), k)


def _parse_gate(lineno: int, line: str, wires: tuple[str, ...], k: int) -> Gate:
    index = {name: i for i, name in enumerate(wires)}
    parts = line.split()
    name = parts[0]
    args = parts[1:]

    def wire(token: str) -> int:
        if token not in index:
            raise ParseError(f"line {lineno}: undeclared wire {token!r}")
        return index[token]

    lowered = name.lower()
    modulus = 1 << (k + 1)
    if lowered == "cnot":
        if len(args) != 2:
            raise ParseError(f"line {lineno}: cnot takes two wires")
        c, t = wire(args[0]), wire(args[1])
        if c == t:
            raise ParseError(f"line {lineno}: cnot control equals target")
        return Cnot(c, t)
    if lowered == "h":
        if len(args) != 1:
            raise ParseError(f"line {lineno}: H takes one wire")
        return Hadamard(wire(args[0]))
    if lowered == "rk":
        if len(args) != 2:
            raise ParseError(f"line {lineno}: Rk takes a power and a wire")
        try:
            power = int(args[0]) % modulus
        except ValueError:
            raise ParseError(f"line {lineno}: Rk power must be an integer") from None
        if power == 0:
            raise ParseError(f"line {lineno}: phase power is 0 mod {modulus}")
        return Phase(wire(args[1]), power)
    upper = name.upper()
    if upper in _PHASE_POWERS_K2:
        if k != 2:
            raise ParseError(f"line {lineno}: named phase gate {upper} requires k = 2; use Rk")
        if len(args) != 1:
            raise ParseError(f"line {lineno}: {upper} takes one wire")
        return Phase(wire(args[0]), _PHASE_POWERS_K2[upper])
    valid = "cnot, T, T*, P, P*, Z, H, Rk"
    raise ParseError(f"line {lineno}: unknown gate {name!r} (valid gates: {valid})")


def emit(c: Circuit) -> str:
    """Render a circuit back to source text.

    Canonical casing is produced, the ``.k`` line is included only when
    k differs from 2, and each phase gate becomes exactly one line (named
    when a single k = 2 name exists, ``Rk`` otherwise), so that
    ``parse(emit(c)) == c``.
    """
    lines = [".v " + " ".join(c.wires) if c.wires else ".v"]
    if c.k != 2:
        lines.append(f".k {c.k}")
    lines.append("BEGIN")
    for g in c.gates:
        if isinstance(g, Cnot):
            lines.append(f"cnot {c.wires[g.control]} {c.wires[g.target]}")
        elif isinstance(g, Hadamard):
            lines.append(f"H {c.wires[g.wire]}")
        else:
            name = _PHASE_NAMES_K2.get(g.power) if c.k == 2 else None
            if name is not None:
                lines.append(f"{name} {c.wires[g.wire]}")
            else:
                lines.append(f"Rk {g.power} {c.wires[g.wire]}")
    lines.append("END")
    return "\n".join(lines) + "\n"
