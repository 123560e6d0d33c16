"""Command-line front end.

Commands
  classify  --group FILE        decide the dichotomy for a generated group
  aut       --p N --set U       enumerate difference-preserving permutations
  trace     --p N --set U --perm P   replay the affinity argument stepwise
  scan      --p N [--jobs K]    run aut over every valid set mod p
  interp    --p N --perm P      interpolating polynomial of a permutation

Group files: first significant line "p=<prime>", then one generator per
line as a comma-separated image list; '#' starts a comment, blank lines
are ignored.

Exit codes: 0 success, 1 invalid input or usage, 2 internal invariant
violation (a theorem came out false, i.e. a bug; the counterexample is
serialized to stderr).

Structured (JSON) reports are deterministic: identical inputs render to
identical bytes, with timing kept out of them. The plain-text rendering
is a convenience and carries no stability guarantee. BURNSIDE_JOBS is
honored as a fallback for --jobs.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import os
import sys
import time
from typing import IO, Optional, Sequence

from .automorphisms import (
    SCAN_PRIME_CAP,
    assert_all_affine,
    enumerate_diff_preserving,
    scan_all_subsets,
)
from .classifier import classify
from .errors import InputError, InternalInvariantViolation
from .fields import DiffSet, PrimeField
from .groups import GroupSpec
from .permutations import Perm, recognize_affine
from .polynomials import interpolate
from .trace import AFFINE, run_trace


def parse_group_file(stream: IO[str], name: str = "<group>") -> GroupSpec:
    """Parse a group file into a validated GroupSpec."""
    field: Optional[PrimeField] = None
    generators: list[Perm] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if field is None:
            if not line.startswith("p=") and not line.startswith("p ="):
                raise InputError(
                    f"{name}:{lineno}: expected 'p=<integer>' before generators"
                )
            text = line.split("=", 1)[1].strip()
            try:
                p = int(text)
            except ValueError:
                raise InputError(f"{name}:{lineno}: bad modulus {text!r}") from None
            try:
                field = PrimeField(p)
            except InputError as exc:
                raise InputError(f"{name}:{lineno}: {exc}") from None
            continue
        try:
            generators.append(Perm.from_text(field, line))
        except InputError as exc:
            raise InputError(f"{name}:{lineno}: {exc}") from None
    if field is None:
        raise InputError(f"{name}: missing 'p=<integer>' line")
    if not generators:
        raise InputError(f"{name}: no generators given")
    return GroupSpec(field, tuple(generators))


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse {what} {text!r}") from None


class _Parser(argparse.ArgumentParser):
    """argparse subclass whose usage errors exit 1 instead of 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="burnside", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", metavar="FILE", default=None)

    p_classify = sub.add_parser("classify", parents=[common],
                                help="classify a generated group")
    p_classify.add_argument("--group", required=True, metavar="FILE",
                            help="group file, or '-' for stdin")

    p_aut = sub.add_parser("aut", parents=[common],
                           help="enumerate difference-preserving permutations")
    p_aut.add_argument("--p", required=True, type=int)
    p_aut.add_argument("--set", required=True, metavar="u1,u2,...")

    p_trace = sub.add_parser("trace", parents=[common],
                             help="replay the affinity argument for one input")
    p_trace.add_argument("--p", required=True, type=int)
    p_trace.add_argument("--set", required=True, metavar="u1,u2,...")
    p_trace.add_argument("--perm", required=True, metavar="i0,i1,...")

    p_scan = sub.add_parser("scan", parents=[common],
                            help="enumerate over every valid set mod p")
    p_scan.add_argument("--p", required=True, type=int)
    p_scan.add_argument("--jobs", type=int, default=None)
    p_scan.add_argument("--unsafe-cap", action="store_true",
                        help="lift the p <= %d scan cap" % SCAN_PRIME_CAP)

    p_interp = sub.add_parser("interp", parents=[common],
                              help="interpolate a permutation")
    p_interp.add_argument("--p", required=True, type=int)
    p_interp.add_argument("--perm", required=True, metavar="i0,i1,...")

    return parser


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _cmd_classify(args) -> tuple[dict, dict, str, int]:
    if args.group == "-":
        content = sys.stdin.read()
        name = "<stdin>"
    else:
        try:
            with open(args.group, "r", encoding="utf-8") as fh:
                content = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read group file: {exc}") from None
        name = args.group
    spec = parse_group_file(io.StringIO(content), name)
    result = classify(spec).to_payload()
    arguments = {
        "p": spec.field.p,
        "generators": [list(g.images) for g in spec.generators],
    }
    return result, arguments, _digest(content), 0


def _cmd_aut(args) -> tuple[dict, dict, str, int]:
    field = PrimeField(args.p)
    dset = DiffSet(field, _parse_int_list(args.set, "difference set"))
    result = enumerate_diff_preserving(field, dset)
    assert_all_affine(result)
    payload = {
        "p": field.p,
        "diff_set": list(dset.elements),
        "mult_stabilizer": list(result.mult_stabilizer),
        "automorphism_count": len(result.automorphisms),
        "all_affine": result.all_affine,
        "automorphisms": [list(q.images) for q in result.automorphisms],
        "cycle_forms": [q.cycle_string() for q in result.automorphisms],
    }
    arguments = {"p": field.p, "set": list(dset.elements)}
    digest = _digest(f"aut p={field.p} set={dset.elements}")
    return payload, arguments, digest, 0


def _cmd_trace(args) -> tuple[dict, dict, str, int]:
    field = PrimeField(args.p)
    dset = DiffSet(field, _parse_int_list(args.set, "difference set"))
    perm = Perm.from_text(field, args.perm)
    report = run_trace(field, dset, perm)
    payload = report.to_payload()
    payload["perm"] = list(perm.images)
    arguments = {
        "p": field.p,
        "set": list(dset.elements),
        "perm": list(perm.images),
    }
    digest = _digest(f"trace p={field.p} set={dset.elements} perm={perm.images}")
    code = 0 if report.verdict == AFFINE else 2
    return payload, arguments, digest, code


def _cmd_scan(args) -> tuple[dict, dict, str, int]:
    field = PrimeField(args.p)
    jobs = args.jobs
    if jobs is None:
        raw = os.environ.get("BURNSIDE_JOBS", "1")
        try:
            jobs = int(raw)
        except ValueError:
            raise InputError(f"BURNSIDE_JOBS must be an integer, got {raw!r}") from None
    cap = field.p if args.unsafe_cap else SCAN_PRIME_CAP
    rows = scan_all_subsets(field, jobs=jobs, prime_cap=cap)
    payload = {
        "p": field.p,
        "subsets": len(rows),
        "complement_classes": len(rows) // 2,
        "max_automorphism_count": max(r.automorphism_count for r in rows),
        "violations": 0,
        "rows": [
            {
                "diff_set": list(r.elements),
                "size": r.size,
                "stabilizer_size": r.stabilizer_size,
                "automorphism_count": r.automorphism_count,
                "all_affine": r.all_affine,
                "min_power_index": r.min_power_index,
            }
            for r in rows
        ],
    }
    arguments = {"p": field.p}
    return payload, arguments, _digest(f"scan p={field.p}"), 0


def _cmd_interp(args) -> tuple[dict, dict, str, int]:
    field = PrimeField(args.p)
    perm = Perm.from_text(field, args.perm)
    poly = interpolate(field, perm)
    payload = {
        "p": field.p,
        "perm": list(perm.images),
        "coefficients": list(poly.coeffs),
        "degree": int(poly.degree),
        "is_affine": recognize_affine(perm) is not None,
        "rendered": poly.render(),
    }
    arguments = {"p": field.p, "perm": list(perm.images)}
    digest = _digest(f"interp p={field.p} perm={perm.images}")
    return payload, arguments, digest, 0


_COMMANDS = {
    "classify": _cmd_classify,
    "aut": _cmd_aut,
    "trace": _cmd_trace,
    "scan": _cmd_scan,
    "interp": _cmd_interp,
}


def _render_text(report: dict, elapsed: float) -> str:
    lines: list[str] = []

    def emit(key: str, value, indent: int) -> None:
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list):
            if all(not isinstance(v, (dict, list)) for v in value):
                joined = ", ".join(str(v) for v in value)
                lines.append(f"{pad}{key}: [{joined}]")
            else:
                lines.append(f"{pad}{key}:")
                for idx, v in enumerate(value):
                    emit(f"[{idx}]", v, indent + 1)
        else:
            lines.append(f"{pad}{key}: {value}")

    for key, value in report.items():
        emit(key, value, 0)
    lines.append(f"elapsed_seconds: {elapsed:.3f}")
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    start = time.perf_counter()
    try:
        result, arguments, digest, code = _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInvariantViolation as exc:
        failure = {"error": str(exc), "counterexample": exc.payload}
        print(json.dumps(failure, indent=2), file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start

    report = {
        "command": args.command,
        "arguments": arguments,
        "input_sha256": digest,
        "result": result,
    }
    if args.format == "json":
        rendered = json.dumps(report, indent=2) + "\n"
    else:
        rendered = _render_text(report, elapsed)

    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(rendered)
        except OSError as exc:
            print(f"error: cannot write output: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(rendered)

    if code != 0:
        print("trace verdict VIOLATION: a checked identity failed on valid "
              "input; this is a bug", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
