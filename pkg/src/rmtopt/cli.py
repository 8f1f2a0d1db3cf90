"""Command line entry point (rm-topt): optimize circuit files in place.

Exit codes: 0 on success, 1 on usage or input errors (bad decoder name,
missing or unreadable file, parse failure, size guards), 2 when --verify
finds the output not equivalent to the input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .circuit import ParseError, emit, parse
from .optimizer import DECODERS, circuit_profile, optimize_circuit, verify_equivalent


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rm-topt",
        description="Minimize T and finer phase rotations in CNOT + phase circuit files.",
    )
    p.add_argument("input", help="circuit file to optimize")
    p.add_argument(
        "-o",
        "--output",
        help="optimized circuit path (default: the input path with .opt.qc suffix)",
    )
    p.add_argument(
        "--decoder",
        default="majority",
        help=f"decoding strategy: {', '.join(DECODERS)} (default: majority)",
    )
    p.add_argument(
        "--k",
        type=int,
        default=None,
        help="reinterpret phases modulo 2^(K+1), overriding the file header",
    )
    p.add_argument(
        "--verify",
        action="store_true",
        help="exhaustively check the output against the input before writing",
    )
    p.add_argument(
        "--profile",
        action="store_true",
        help="also report the output's rotation counts per granularity",
    )
    p.add_argument(
        "--json",
        action="store_true",
        dest="as_json",
        help="print the statistics as a single JSON object",
    )
    p.add_argument(
        "--max-exact-dim",
        type=int,
        default=24,
        help="code-dimension cap for the exact decoder (default: 24)",
    )
    p.add_argument(
        "--seed",
        type=int,
        default=None,
        help="reserved for randomized decoders; currently unused",
    )
    return p


def _fail(message: str) -> int:
    print(f"rm-topt: {message}", file=sys.stderr)
    return 1


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.decoder not in DECODERS:
        return _fail(
            f"unknown decoder {args.decoder!r} (valid decoders: {', '.join(DECODERS)})"
        )
    in_path = Path(args.input)
    if not in_path.is_file():
        return _fail(f"{in_path}: no such file")
    try:
        circuit = parse(in_path.read_text())
    except OSError as exc:
        return _fail(f"{in_path}: {exc}")
    except ParseError as exc:
        return _fail(f"{in_path}: {exc}")
    try:
        if args.k is not None:
            circuit = circuit.with_modulus(args.k)
        optimized, stats = optimize_circuit(
            circuit, args.decoder, max_exact_dim=args.max_exact_dim
        )
        if args.verify and not verify_equivalent(circuit, optimized):
            print("rm-topt: verification failed: output is not equivalent", file=sys.stderr)
            return 2
    except ValueError as exc:
        return _fail(str(exc))

    out_path = Path(args.output) if args.output else in_path.with_suffix(".opt.qc")
    try:
        out_path.write_text(emit(optimized))
    except OSError as exc:
        return _fail(f"{out_path}: {exc}")

    report: dict[str, object] = {
        "n": stats.n,
        "k": stats.k,
        "decoder": stats.decoder,
        "t_original": stats.t_count_original,
        "t_canonical": stats.t_count_canonical,
        "t_optimized": stats.t_count_optimized,
        "decode_distance": stats.decode_distance,
        "millis": int(round(stats.millis)),
    }
    if args.profile:
        for level, count in sorted(circuit_profile(optimized).items()):
            report[f"profile_{level}"] = count
    if args.as_json:
        print(json.dumps(report))
    else:
        for key, value in report.items():
            print(f"{key}={value}")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
