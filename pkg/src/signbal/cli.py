"""Command-line interface.

Subcommands: gen, balance, stream, oracle, verify.  Exit codes are stable
across subcommands: 0 = success / all bounds hold, 1 = a bound or
re-verification failed (an implementation bug or a tampered file),
2 = usage or input error.  One human-readable verdict line goes to
stdout; machine output goes to --output (gen writes the instance to
stdout when --output is omitted, so commands can be piped).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import asdict

from . import __version__
from .balance import alternating_balance
from .errors import (
    DegenerateHullError,
    EvenCardinalityError,
    MalformedFileError,
    NotUnitError,
    SignbalError,
    TooLargeError,
    ZeroVectorError,
)
from .files import (
    CERTIFICATE_FORMAT,
    FORMAT_VERSION,
    MODE_SEQUENCE,
    MODE_SET,
    Instance,
    dump_doc,
    instance_from_doc,
    instance_hash,
    instance_to_doc,
    load_doc,
)
from .norms import DEFAULT_TOLERANCE, UNIT_TOLERANCE, polygon_norm
from .oracle import (
    QUANTITY_ANY_ORDER,
    QUANTITY_FIXED_ORDER,
    QUANTITY_MIN_SIGNED_SUM,
    min_max_odd_prefix_any_order,
    min_max_odd_prefix_fixed_order,
    min_signed_sum,
)
from .rng import SplitMix64, generate_vectors, make_norm, random_symmetric_polygon
from .streaming import stream_run
from .verify import hull_norm_check, verify_certificate_doc

EXIT_OK = 0
EXIT_BOUND_FAILURE = 1
EXIT_INPUT_ERROR = 2

TOLERANCE_ENV = "SIGNBAL_TOLERANCE"


def _tolerance(args) -> float:
    """--tolerance beats the SIGNBAL_TOLERANCE env var beats the default."""
    if args.tolerance is not None:
        return args.tolerance
    env = os.environ.get(TOLERANCE_ENV)
    if env is not None:
        try:
            return float(env)
        except ValueError as exc:
            raise MalformedFileError(f"bad {TOLERANCE_ENV} value {env!r}") from exc
    return DEFAULT_TOLERANCE


def _read_instance(path: str) -> Instance:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise MalformedFileError(f"cannot read {path}: {exc}") from exc
    return instance_from_doc(load_doc(text))


def _write(doc: dict, output: str | None, to_stdout_when_unset: bool = False) -> None:
    text = dump_doc(doc)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif to_stdout_when_unset:
        sys.stdout.write(text)


def _certificate_header(instance: Instance, tolerance: float, unit_tol: float, kind: str) -> dict:
    return {
        "format": CERTIFICATE_FORMAT,
        "version": FORMAT_VERSION,
        "artifact_version": __version__,
        "kind": kind,
        "instance": instance_to_doc(instance),
        "input_hash": instance_hash(instance),
        "tolerance": tolerance,
        "unit_tolerance": unit_tol,
    }


def cmd_gen(args) -> int:
    if args.n < 1:
        print(f"gen: n must be >= 1, got {args.n}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    rng = SplitMix64(args.seed)
    if args.norm == "random-polygon":
        norm = polygon_norm(random_symmetric_polygon(rng))
    else:
        try:
            norm = make_norm(args.norm, args.p)
        except ValueError as exc:
            print(f"gen: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    vectors = generate_vectors(rng, norm, args.n)
    instance = Instance(
        norm=norm,
        mode=args.mode,
        vectors=vectors,
        meta={
            "id": f"{args.norm}-n{args.n}-seed{args.seed}",
            "seed": args.seed,
            "generator": "splitmix64",
        },
    )
    _write(instance_to_doc(instance), args.output, to_stdout_when_unset=True)
    if args.output:
        print(f"gen: wrote {args.n} {norm.describe()} unit vectors to {args.output}")
    return EXIT_OK


def cmd_balance(args) -> int:
    tolerance = _tolerance(args)
    instance = _read_instance(args.instance)
    if instance.mode != MODE_SET:
        print(f"balance: instance mode must be 'set', got {instance.mode!r}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    cert = alternating_balance(
        instance.norm, instance.vectors, tolerance=tolerance, unit_tol=UNIT_TOLERANCE
    )
    total_norm = instance.norm.value(cert.signed_sum)
    verdicts = cert.bound_verdicts(total_norm)

    doc = _certificate_header(instance, tolerance, UNIT_TOLERANCE, "balance")
    doc["result"] = {
        "perm": list(cert.ordering.perm),
        "flips": list(cert.ordering.flips),
        "signs_ordered": list(cert.signs_ordered),
        "signs_original": list(cert.signs_original),
        "signed_sum": [cert.signed_sum.x, cert.signed_sum.y],
        "signed_sum_norm": total_norm,
        "prefix_sums": [[p.x, p.y] for p in cert.prefix_sums],
        "prefix_norms": list(cert.prefix_norms),
        "bounds": {
            "total": cert.bound_total,
            "odd_prefix": cert.bound_odd_prefix,
            "all_prefix": cert.bound_all_prefix,
        },
        "norm_used": cert.norm_used,
    }
    hull_note = ""
    if args.p_norm:
        n = len(instance.vectors)
        hull_norms = hull_norm_check(
            instance.vectors, list(cert.prefix_sums) + [cert.signed_sum]
        )
        if hull_norms is None:
            doc["hull_check"] = {
                "requested": True,
                "performed": False,
                "note": "degenerate hull (all vectors parallel); input-norm check only",
            }
            hull_note = " hull=skipped-degenerate"
        else:
            doc["hull_check"] = {
                "requested": True,
                "performed": True,
                "prefix_norms": hull_norms[:n],
                "signed_sum_norm": hull_norms[n],
            }
            verdicts["hull_total"] = hull_norms[n] <= cert.bound_total + tolerance
            verdicts["hull_odd_prefix"] = (
                max(hull_norms[0:n:2]) <= cert.bound_odd_prefix + tolerance
            )
            verdicts["hull_all_prefix"] = (
                max(hull_norms[0:n]) <= cert.bound_all_prefix + tolerance
            )
            hull_note = " hull=checked"
    doc["verdicts"] = verdicts
    _write(doc, args.output)

    ok = all(verdicts.values())
    status = "ok" if ok else "BOUND VIOLATED"
    print(
        f"balance {status}: n={len(instance.vectors)} norm={instance.norm.describe()} "
        f"signed_sum_norm={total_norm:.17g} max_odd_prefix={cert.max_odd_prefix_norm():.17g} "
        f"max_prefix={cert.max_prefix_norm():.17g} tol={tolerance:g}{hull_note}"
    )
    return EXIT_OK if ok else EXIT_BOUND_FAILURE


def cmd_stream(args) -> int:
    tolerance = _tolerance(args)
    instance = _read_instance(args.instance)
    if instance.mode != MODE_SEQUENCE:
        print(
            f"stream: instance mode must be 'sequence', got {instance.mode!r}",
            file=sys.stderr,
        )
        return EXIT_INPUT_ERROR
    signs, odd_prefix_norms = stream_run(
        instance.norm,
        instance.vectors,
        allow_even=args.allow_even,
        tolerance=tolerance,
        unit_tol=UNIT_TOLERANCE,
    )
    worst = max(odd_prefix_norms)
    verdicts = {"odd_prefix": worst <= 2.0 + tolerance}

    doc = _certificate_header(instance, tolerance, UNIT_TOLERANCE, "stream")
    doc["result"] = {
        "signs": signs,
        "odd_prefix_norms": odd_prefix_norms,
        "bound_odd_prefix": 2.0,
    }
    doc["verdicts"] = verdicts
    _write(doc, args.output)

    ok = all(verdicts.values())
    status = "ok" if ok else "BOUND VIOLATED"
    print(
        f"stream {status}: n={len(instance.vectors)} norm={instance.norm.describe()} "
        f"max_odd_prefix={worst:.17g} bound=2 tol={tolerance:g}"
    )
    return EXIT_OK if ok else EXIT_BOUND_FAILURE


def cmd_oracle(args) -> int:
    instance = _read_instance(args.instance)
    if args.quantity == QUANTITY_MIN_SIGNED_SUM:
        report = min_signed_sum(
            instance.norm, instance.vectors, instance_id=str(instance.meta.get("id", ""))
        )
    elif args.quantity == QUANTITY_FIXED_ORDER:
        if instance.mode != MODE_SEQUENCE:
            print(
                "oracle: min_max_odd_prefix_fixed_order needs a 'sequence' instance",
                file=sys.stderr,
            )
            return EXIT_INPUT_ERROR
        report = min_max_odd_prefix_fixed_order(
            instance.norm, instance.vectors, instance_id=str(instance.meta.get("id", ""))
        )
    else:
        report = min_max_odd_prefix_any_order(
            instance.norm, instance.vectors, instance_id=str(instance.meta.get("id", ""))
        )
    doc = {
        "format": "signbal-oracle-report",
        "version": FORMAT_VERSION,
        "artifact_version": __version__,
        "instance": instance_to_doc(instance),
        "input_hash": instance_hash(instance),
        "report": asdict(report),
    }
    _write(doc, args.output)
    print(
        f"oracle: {report.quantity} = {report.value:.17g} over {report.search_size} candidates"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.certificate, "r", encoding="utf-8") as fh:
            doc = load_doc(fh.read())
    except OSError as exc:
        raise MalformedFileError(f"cannot read {args.certificate}: {exc}") from exc
    outcome = verify_certificate_doc(doc)
    if outcome.ok:
        print(f"verify ok: {args.certificate} reproduces")
        return EXIT_OK
    for failure in outcome.failures:
        print(f"verify FAILED: {failure}")
    return EXIT_BOUND_FAILURE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signbal",
        description="Sign assignments for planar unit vectors with bounded "
        "signed sums and prefix sums, plus brute-force oracles.",
    )
    parser.add_argument("--version", action="version", version=f"signbal {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--n", type=int, required=True, help="number of vectors")
    p.add_argument(
        "--norm",
        default="euclidean",
        choices=["euclidean", "lp", "max", "random-polygon"],
    )
    p.add_argument("--p", type=float, default=None, help="exponent for --norm lp")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", default=MODE_SET, choices=[MODE_SET, MODE_SEQUENCE])
    p.add_argument("--output", default=None, help="write the instance here (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("balance", help="sign an odd set so the signed sum has norm <= 1")
    p.add_argument("instance", help="instance file path, or - for stdin")
    p.add_argument("--output", default=None, help="write the certificate here")
    p.add_argument("--p-norm", action="store_true", help="also verify in the hull norm")
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("stream", help="sign a sequence online, odd prefixes <= 2")
    p.add_argument("instance", help="instance file path, or - for stdin")
    p.add_argument("--output", default=None, help="write the certificate here")
    p.add_argument(
        "--allow-even",
        action="store_true",
        help="accept an even-length sequence; the final sign is unconstrained",
    )
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(func=cmd_stream)

    p = sub.add_parser("oracle", help="exhaustive minimum over signs (and orderings)")
    p.add_argument("instance", help="instance file path, or - for stdin")
    p.add_argument(
        "--quantity",
        required=True,
        choices=[QUANTITY_MIN_SIGNED_SUM, QUANTITY_FIXED_ORDER, QUANTITY_ANY_ORDER],
    )
    p.add_argument("--output", default=None, help="write the report here")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="recompute a certificate's claims")
    p.add_argument("certificate", help="certificate file path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        MalformedFileError,
        NotUnitError,
        EvenCardinalityError,
        ZeroVectorError,
        TooLargeError,
        DegenerateHullError,
    ) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except SignbalError as exc:
        # remaining package errors signal violated invariants, not bad input
        print(f"{args.command}: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_BOUND_FAILURE


if __name__ == "__main__":
    sys.exit(main())
