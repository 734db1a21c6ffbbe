"""Command line front end: ``threshold-spectra <command> <sequence...> [options]``.

Exit codes: 0 success, 2 unparsable sequence or usage error, 3 invalid
lambda, 4 a reduction precondition failed, 5 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import numpy as np

from .errors import HypothesisViolation, LambdaZeroError, SequenceParseError
from .reduction import run_full_reduction
from .threshold_model import BlockSequence, enumerate_threshold_graphs, parse_sequence
from .verify import (
    DEFAULT_JACOBI_TOL,
    DEFAULT_TOL,
    VerificationReport,
    construct,
    union_matrix,
    verify_sequence,
    verify_union,
)
from .weights import algorithm1_matrix_weights

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_LAMBDA = 3
EXIT_HYPOTHESIS = 4
EXIT_CHECK = 5


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_output(text: str, out: str | None) -> None:
    """Print ``text`` or write it to ``out`` atomically."""
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _pretty_matrix(m: np.ndarray) -> str:
    with np.printoptions(precision=6, suppress=True, linewidth=200):
        return str(m) + "\n"


def _report_pretty(rep: VerificationReport) -> str:
    status = "PASS" if rep.ok else "FAIL"
    return (
        f"{status}  {rep.sequence}  n={rep.n} r={rep.r} lambda={rep.lam:g}\n"
        f"  pattern_ok={rep.pattern_ok} spectrum_ok={rep.spectrum_ok} "
        f"distinct={rep.distinct_count} residual_max={rep.residual_max:.3e}\n"
        f"  predicted {rep.predicted}\n"
    )


def _report_csv(reports: Sequence[VerificationReport]) -> str:
    lines = ["sequence,n,r,lambda,pattern_ok,spectrum_ok,distinct_count,residual_max"]
    for rep in reports:
        seq = rep.sequence if isinstance(rep.sequence, str) else " + ".join(rep.sequence)
        lines.append(
            f"{seq},{rep.n},{rep.r},{rep.lam!r},{rep.pattern_ok},{rep.spectrum_ok},"
            f"{rep.distinct_count},{rep.residual_max!r}"
        )
    return "\n".join(lines) + "\n"


def cmd_construct(args: argparse.Namespace, seqs: list[BlockSequence]) -> int:
    seq = seqs[0]
    weights = algorithm1_matrix_weights(seq)
    M = construct(seq, args.lam)
    if args.format == "csv":
        write_output(M.to_csv(), args.out)
        if args.out is not None:
            write_output(dumps(weights.to_json()), f"{args.out}.weights.json")
    elif args.format == "json":
        doc = {
            "sequence": seq.render(),
            "lambda": args.lam,
            "matrix": M.to_json(),
            "weights": weights.to_json(),
        }
        write_output(dumps(doc), args.out)
    else:
        lines = [f"{seq.render()}  n={seq.n} r={seq.r} lambda={args.lam:g}\n"]
        for i in range(1, seq.r + 1):
            lines.append(f"  bag {i}: p={weights.p[i]}  eps={weights.eps_internal[i]}\n")
        for (i, j), cw in sorted(weights.eps_cross.items()):
            lines.append(f"  eps[{i},{j}] = {cw.exact} / sqrt({cw.radical})\n")
        lines.append(_pretty_matrix(M.entries))
        write_output("".join(lines), args.out)
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace, seqs: list[BlockSequence]) -> int:
    seq = seqs[0]
    trace, spectrum = run_full_reduction(seq)
    if args.format == "json":
        doc = trace.to_json()
        doc["spectrum"] = spectrum.to_json()
        write_output(dumps(doc), args.out)
    elif args.format == "csv":
        rows = ["k,x"] + [f"{k},{x}" for k, x in enumerate(trace.chain_values, start=1)]
        rows.append(f"final,{trace.final_singleton}")
        write_output("\n".join(rows) + "\n", args.out)
    else:
        text = (
            f"{seq.render()}\n"
            f"  isolated: {trace.isolated_zero_count} x 0, {trace.isolated_lambda_count} x λ\n"
            f"  chain: [{', '.join(str(x) for x in trace.chain_values)}]\n"
            f"  final singleton: {trace.final_singleton}\n"
            f"  spectrum: {spectrum}\n"
        )
        write_output(text, args.out)
    return EXIT_OK


def _emit_report(args: argparse.Namespace, rep: VerificationReport, extra: dict | None = None) -> int:
    if args.format == "json":
        doc = rep.to_json() if extra is None else {**extra, "report": rep.to_json()}
        write_output(dumps(doc), args.out)
    elif args.format == "csv":
        write_output(_report_csv([rep]), args.out)
    else:
        write_output(_report_pretty(rep), args.out)
    return EXIT_OK if rep.ok else EXIT_CHECK


def cmd_verify(args: argparse.Namespace, seqs: list[BlockSequence]) -> int:
    rep = verify_sequence(seqs[0], args.lam, args.tol, args.jacobi_tol)
    return _emit_report(args, rep)


def cmd_union(args: argparse.Namespace, seqs: list[BlockSequence]) -> int:
    rep = verify_union(seqs, args.lam, args.tol, args.jacobi_tol)
    if args.format == "csv":
        write_output(union_matrix(seqs, args.lam).to_csv(), args.out)
        return EXIT_OK if rep.ok else EXIT_CHECK
    extra = {"matrix": union_matrix(seqs, args.lam).to_json()} if args.format == "json" else None
    return _emit_report(args, rep, extra)


def cmd_sweep(args: argparse.Namespace, seqs: list[BlockSequence]) -> int:
    reports = [
        verify_sequence(s, args.lam, args.tol, args.jacobi_tol)
        for s in enumerate_threshold_graphs(args.nmax)
    ]
    failures = sum(1 for r in reports if not r.ok)
    max_distinct = max(r.distinct_count for r in reports)
    summary = {
        "n_max": args.nmax,
        "lambda": args.lam,
        "sequences": len(reports),
        "max_distinct_count": max_distinct,
        "failures": failures,
    }
    if args.format == "json":
        rows = [
            {
                "sequence": r.sequence,
                "n": r.n,
                "r": r.r,
                "distinct_count": r.distinct_count,
                "spectrum_ok": r.spectrum_ok,
                "pattern_ok": r.pattern_ok,
            }
            for r in reports
        ]
        write_output(dumps({"rows": rows, "summary": summary}), args.out)
    elif args.format == "csv":
        write_output(_report_csv(reports), args.out)
    else:
        lines = [f"{'sequence':<40} {'n':>3} {'r':>3} {'dist':>4} {'spec':>5} {'patt':>5}"]
        for r in reports:
            lines.append(
                f"{r.sequence:<40} {r.n:>3} {r.r:>3} {r.distinct_count:>4} "
                f"{str(r.spectrum_ok):>5} {str(r.pattern_ok):>5}"
            )
        lines.append(
            f"summary: {len(reports)} sequences, max distinct {max_distinct}, failures {failures}"
        )
        write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failures == 0 else EXIT_CHECK


COMMANDS = {
    "construct": cmd_construct,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "union": cmd_union,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threshold-spectra",
        description="Build and verify matrices with eigenvalues in {-λ, 0, λ, 2λ} for threshold graphs.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("sequences", nargs="*", metavar="sequence",
                        help='binary ("001110011") or caret ("0^2 1^3 0^2 1^2") sequence')
    parser.add_argument("--lambda", dest="lam", type=float, default=1.0)
    parser.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="spectrum match tolerance, relative to max(1, |lambda|)")
    parser.add_argument("--jacobi-tol", type=float, default=DEFAULT_JACOBI_TOL)
    parser.add_argument("--nmax", type=int, default=None, help="largest order for sweep")
    parser.add_argument("--out", default=None, help="write output to this path")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.lam == 0 or not math.isfinite(args.lam):
        print(f"error: lambda must be a nonzero finite number, got {args.lam}", file=sys.stderr)
        return EXIT_LAMBDA

    if args.command == "sweep":
        if args.nmax is None or args.nmax < 1:
            print("error: sweep needs --nmax N with N >= 1", file=sys.stderr)
            return EXIT_PARSE
        seqs: list[BlockSequence] = []
    else:
        if not args.sequences:
            print(f"error: {args.command} needs a sequence", file=sys.stderr)
            return EXIT_PARSE
        texts = args.sequences if args.command == "union" else [" ".join(args.sequences)]
        try:
            seqs = [parse_sequence(t) for t in texts]
        except SequenceParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE

    try:
        return COMMANDS[args.command](args, seqs)
    except HypothesisViolation as exc:
        print(f"error: reduction precondition failed: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except LambdaZeroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LAMBDA


if __name__ == "__main__":
    sys.exit(main())
