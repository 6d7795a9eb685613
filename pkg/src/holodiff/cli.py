"""Command-line interface.

Exit codes: 0 on success, 2 when input is rejected, 3 when a mathematical
identity fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Any

from sympy import primerange
from tqdm import tqdm

from holodiff.config import get_settings
from holodiff.documents import DECOMP_REPORT_SCHEMA, dumps, ram_input_from_document, validate_document
from holodiff.errors import ConsistencyError, DocumentError, HolodiffError, ValidationError
from holodiff.graph import graph
from holodiff.psl2mod3 import (
    SweepRow,
    classify,
    class_number,
    class_number_forms,
    congruence_report,
    full_decomposition,
    genus,
    h0_brauer,
    n1_decomposition,
    verify,
)
from holodiff.ramfilter import divisor_multiplicity, divisor_multiplicity_alt, enumeration_oracle
from holodiff.tamechar import layer_characters

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3


def _write(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def _emit(report: dict[str, Any], fmt: str, text: str) -> None:
    validate_document(report, DECOMP_REPORT_SCHEMA)
    _write(dumps(report) if fmt == "json" else text)


# ============================================================================
# DECOMPOSE
# ============================================================================


def decompose_report(document: Any, verbose: bool = False) -> dict[str, Any]:
    """Run the pipeline on a RamInputDocument and build its DecompReport."""
    ram = ram_input_from_document(document)
    state = graph.invoke({"ram_input": ram})
    result = state["result"]
    group = ram.group
    report: dict[str, Any] = {
        "kind": "decompose",
        "group": {
            "p": group.p,
            "n": group.n,
            "c": group.c,
            "chi_index": group.chi_index,
            "action_unit": group.action_unit,
            "n_I": ram.n_I,
        },
        "genus": state["genus"],
        "summands": result.decomp.rows(),
        "dimension": result.dimension(),
    }
    if verbose:
        chars = layer_characters(state["cover"])
        report["layers"] = [
            {
                "j": j,
                "degree": state["layers"].degrees[j],
                "multiplicities": list(state["layers"].multiplicities[j]),
                "character": chars[j].to_json(),
                "summands": decomp.rows(),
            }
            for j, decomp in enumerate(state["layer_decomp"].layers)
        ]
    return report


def _decompose_text(report: dict[str, Any]) -> str:
    lines = [
        f"group {report['group']}",
        "genus " + ", ".join(f"g({k})={v}" for k, v in sorted(report["genus"].items())),
    ]
    for layer in report.get("layers", []):
        parts = ", ".join(f"{r['mult']}*U({r['socle']},{r['length']})" for r in layer["summands"]) or "0"
        lines.append(f"  layer {layer['j']}: deg D = {layer['degree']}: {parts}")
    for row in report["summands"]:
        lines.append(f"U({row['socle']},{row['length']}) x {row['mult']}  dim {row['dim']}")
    lines.append(f"dimension {report['dimension']}")
    return "\n".join(lines)


def cmd_decompose(args: argparse.Namespace) -> int:
    """Decompose H^0(X, Omega_X) for the ramification data in a JSON file."""
    try:
        document = json.loads(Path(args.path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DocumentError("$", f"cannot read {args.path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    report = decompose_report(document, args.verbose)
    _emit(report, args.format, _decompose_text(report))
    return EXIT_OK


# ============================================================================
# PSL2
# ============================================================================


def psl2_report(ell: int, verbose: bool = False) -> dict[str, Any]:
    """Build the report for G = PSL(2, F_l) acting on X(l) in characteristic 3."""
    case = classify(ell)
    decomp = full_decomposition(ell)
    report: dict[str, Any] = {
        "kind": "psl2",
        "ell": ell,
        "case": case.case_id,
        "genus": genus(ell),
        "decomposition": decomp.to_json(),
        "n1_decomposition": n1_decomposition(ell).to_json(),
        "congruence": [block.to_json() for block in congruence_report(ell, decomp)],
    }
    if decomp.alternatives:
        report["alternatives"] = [alt.to_json() for alt in decomp.alternatives]
    if verbose:
        report["h0_brauer"] = h0_brauer(ell).to_json()
    return report


def _psl2_text(report: dict[str, Any]) -> str:
    decomp = report["decomposition"]
    lines = [f"l = {report['ell']}, case {report['case']}, genus {report['genus']}"]
    if decomp["s01"] is not None:
        lines.append(f"s01 = {decomp['s01']}" + (" (ambiguous)" if decomp["ambiguous"] else ""))
    for row in decomp["projective"]:
        lines.append(f"{row['name']} x {row['mult']}  dim {row['dim']}")
    for row in decomp["uniserial"]:
        lines.append(f"U({row['socle']},{row['length']}) x {row['mult']}  dim {row['dim']}")
    lines.append(f"dimension {decomp['dimension']}")
    for block in report["congruence"]:
        flag = "congruence" if block["congruence"] else "-"
        lines.append(
            f"  {block['block']}: defect {block['defect']}, projective {block['projective']}, "
            f"constituents {block['constituents']}: {flag}"
        )
    return "\n".join(lines)


def cmd_psl2(args: argparse.Namespace) -> int:
    """Decompose H^0(X(l), Omega) over PSL(2, F_l) in characteristic 3."""
    report = psl2_report(args.ell, args.verbose)
    _emit(report, args.format, _psl2_text(report))
    return EXIT_OK


# ============================================================================
# SWEEP
# ============================================================================


def run_sweep(start: int, stop: int, threads: int) -> list[SweepRow]:
    """Verify every prime in [start, stop] with at least 7, in a worker pool."""
    primes = [int(ell) for ell in primerange(max(start, 7), stop + 1)]
    if not primes:
        return []
    rows = []
    with ProcessPoolExecutor(max_workers=min(threads, len(primes))) as pool:
        futures = {pool.submit(verify, ell): ell for ell in primes}
        for future in tqdm(as_completed(futures), total=len(futures), file=sys.stderr, desc="sweep"):
            rows.append(future.result())
    return sorted(rows, key=lambda row: row.ell)


def cmd_sweep(args: argparse.Namespace) -> int:
    """Run every identity for each prime in a range."""
    if args.start > args.stop:
        raise ValidationError(f"--from {args.start} exceeds --to {args.stop}")
    rows = run_sweep(args.start, args.stop, get_settings().threads)
    if args.format == "json":
        _write(dumps([row.to_json() for row in rows]))
    else:
        _write("ell  case  genus  status  seconds")
        for row in rows:
            _write(f"{row.ell:>4}  {row.case:>4}  {row.genus:>5}  {row.status:>6}  {row.seconds:7.2f}")
            for failure in row.failures:
                _write(f"      {failure}")
    return EXIT_INCONSISTENT if any(row.failures for row in rows) else EXIT_OK


# ============================================================================
# ORACLES
# ============================================================================


def random_divisor_instance(rng: random.Random) -> tuple[int, int, list[int], int]:
    """Draw (p, n_x, jumps, t) with p in {3, 5, 7}, n_x <= 3 and jumps <= 50."""
    p = rng.choice((3, 5, 7))
    n_x = rng.randint(1, 3)
    jumps = [rng.choice([b for b in range(1, 9) if b % p])]
    for _ in range(n_x - 1):
        jumps.append(jumps[-1] + p * rng.randint(1, 3))
    return p, n_x, jumps, rng.randrange(p**n_x)


def divisor_oracle(samples: int, seed: int) -> tuple[int, int, list[int], int] | None:
    """Return the first instance where the three divisor formulas disagree, if any."""
    rng = random.Random(seed)
    for _ in range(samples):
        p, n_x, jumps, t = random_divisor_instance(rng)
        value = divisor_multiplicity(p, n_x, jumps, t)
        if value != divisor_multiplicity_alt(p, n_x, jumps, t) or value != enumeration_oracle(p, n_x, jumps, t):
            return p, n_x, jumps, t
    return None


def class_number_oracle(stop: int) -> int | None:
    """Return the first prime l = 3 mod 4 up to ``stop`` where the two class numbers differ."""
    for ell in primerange(7, stop + 1):
        if ell % 4 == 3 and class_number(int(ell)) != class_number_forms(int(ell)):
            return int(ell)
    return None


def cmd_oracle(args: argparse.Namespace) -> int:
    """Run an independent oracle."""
    if args.oracle == "divisor":
        if args.samples < 0:
            raise ValidationError(f"--samples must be non-negative, got {args.samples}")
        failure = divisor_oracle(args.samples, args.seed)
        if failure is None:
            _write(f"pass: {args.samples} instances")
            return EXIT_OK
        p, n_x, jumps, t = failure
        _write(f"fail: p={p} n_x={n_x} jumps={jumps} t={t}")
        return EXIT_INCONSISTENT
    failure = class_number_oracle(args.stop)
    if failure is None:
        _write(f"pass: primes l = 3 mod 4 up to {args.stop}")
        return EXIT_OK
    _write(f"fail: l={failure} class number {class_number(failure)} vs {class_number_forms(failure)} forms")
    return EXIT_INCONSISTENT


# ============================================================================
# ENTRY POINT
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with all sub-commands."""
    parser = argparse.ArgumentParser(prog="holodiff", description=__doc__.splitlines()[0])
    parser.add_argument("--log-level", default=None, help="Logging level (default: $HOLODIFF_LOG_LEVEL or WARNING).")
    sub = parser.add_subparsers(dest="command", required=True)

    decompose = sub.add_parser("decompose", help="Decompose from a RamInputDocument.")
    decompose.add_argument("path", help="Path to the JSON document.")
    decompose.add_argument("--verbose", action="store_true", help="Include per-layer divisors and characters.")
    decompose.add_argument("--format", choices=("json", "text"), default="json")
    decompose.set_defaults(func=cmd_decompose)

    psl2 = sub.add_parser("psl2", help="PSL(2, F_l) acting on X(l) in characteristic 3.")
    psl2.add_argument("--ell", type=int, required=True)
    psl2.add_argument("--verbose", action="store_true", help="Include the Brauer character of H^0.")
    psl2.add_argument("--format", choices=("json", "text"), default="json")
    psl2.set_defaults(func=cmd_psl2)

    sweep = sub.add_parser("sweep", help="Check every identity over a range of primes.")
    sweep.add_argument("--from", dest="start", type=int, required=True)
    sweep.add_argument("--to", dest="stop", type=int, required=True)
    sweep.add_argument("--format", choices=("json", "text"), default="text")
    sweep.set_defaults(func=cmd_sweep)

    oracle = sub.add_parser("oracle", help="Run an independent oracle.")
    oracles = oracle.add_subparsers(dest="oracle", required=True)
    divisor = oracles.add_parser("divisor", help="Compare the divisor formulas on random instances.")
    divisor.add_argument("--samples", type=int, default=500)
    divisor.add_argument("--seed", type=int, default=1)
    divisor.set_defaults(func=cmd_oracle)
    classnumber = oracles.add_parser("classnumber", help="Compare class numbers with reduced form counts.")
    classnumber.add_argument("--to", dest="stop", type=int, default=500)
    classnumber.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run the command and map errors to exit codes."""
    args = build_parser().parse_args(argv)
    try:
        level = args.log_level.upper() if args.log_level else get_settings().log_level
        logging.basicConfig(level=level, stream=sys.stderr)
        return args.func(args)
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except ConsistencyError as exc:
        sys.stderr.write(f"inconsistent: {exc}\n")
        return EXIT_INCONSISTENT
    except HolodiffError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
