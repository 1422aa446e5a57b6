"""Command-line front end.

Usage:
    hooksum exact --k 1 --l 1 --p 1 --n 5
    hooksum asym --k 2 --l 1 --z 0.5 --n 100
    hooksum ratio --k 2 --l 1 --p 1 --n-list 10,100,1000 --mode closed_form
    hooksum integral --k 1 --l 1 --z 1 --samples 1000000 --seed 42
    hooksum identity --name motzkin --n-max 200

Every command takes ``--format {table,csv,json}``, ``--precision`` (significant
digits for floats), ``--seed`` and ``--work-limit``. Exact integers are always
printed in full. Exit codes: 0 ok, 1 identity failure, 2 bad arguments,
3 work limit exceeded, 4 Monte Carlo self-check failed (|z-score| > 5).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Any

from .asymptotics import full_I, hook_asymptotic
from .errors import HookSumError, WorkLimitExceeded
from .exact import (
    hook_sum_exact,
    motzkin_identity_check,
    s11_closed,
    s21_closed,
)
from .partitions import HookShape
from .verification import DEFAULT_WORK_LIMIT, mc_full_I, ratio_table

EXIT_IDENTITY_FAILED = 1
EXIT_USAGE = 2
EXIT_WORK_LIMIT = 3
EXIT_MC_DIAGNOSTIC = 4
Z_SCORE_LIMIT = 5.0


@dataclass(frozen=True)
class ReportConfig:
    format: str = "table"
    precision: int = 9
    seed: int | None = None
    work_limit: int = DEFAULT_WORK_LIMIT


class Exact(int):
    """Marks an integer that must be printed in full decimal."""


def _fmt_float(x: float, precision: int) -> str:
    if math.isnan(x) or math.isinf(x):
        return str(x)
    return f"{x:.{precision}g}"


def _cell(value: Any, cfg: ReportConfig) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt_float(value, cfg.precision)
    return str(value)


def _json_value(value: Any, cfg: ReportConfig) -> Any:
    if isinstance(value, Exact):
        return str(int(value))
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return None
        return float(_fmt_float(value, cfg.precision))
    return value


def emit(command: str, params: dict, cfg: ReportConfig, *, rows: list[dict] | None = None,
         result: dict | None = None, out=None) -> None:
    """Write one report to ``out`` (stdout by default)."""
    out = out or sys.stdout
    if cfg.format == "json":
        doc: dict[str, Any] = {"command": command, "params": params}
        if rows is not None:
            doc["rows"] = [{k: _json_value(v, cfg) for k, v in r.items()} for r in rows]
        if result is not None:
            doc["result"] = {k: _json_value(v, cfg) for k, v in result.items()}
        out.write(json.dumps(doc) + "\n")
        return
    table = rows if rows is not None else [result]
    header = list(table[0].keys()) if table else []
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for r in table:
            writer.writerow([_cell(r[h], cfg) for h in header])
        out.write(buf.getvalue())
        return
    if rows is None:
        width = max(len(k) for k in header)
        for k in header:
            out.write(f"{k:<{width}} = {_cell(result[k], cfg)}\n")
        return
    cells = [[_cell(r[h], cfg) for h in header] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) if cells else len(h)
              for i, h in enumerate(header)]
    out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
    for c in cells:
        out.write("  ".join(v.rjust(w) for v, w in zip(c, widths)) + "\n")


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0 or math.isinf(value):
        raise argparse.ArgumentTypeError(f"must be positive and finite, got {text}")
    return value


def _config(args) -> ReportConfig:
    return ReportConfig(args.format, args.precision, args.seed, args.work_limit)


def cmd_exact(args, parser) -> int:
    cfg = _config(args)
    if args.k < 0 or args.l < 0 or args.k + args.l < 1:
        parser.error("need k, l >= 0 with k + l >= 1")
    if args.p < 1:
        parser.error("--p must be a positive integer")
    n_values = [args.n] if args.n is not None else args.n_list
    if any(n < 0 for n in n_values):
        parser.error("n must be nonnegative")
    shape = HookShape(args.k, args.l)
    rows = [
        {"n": n, "value": Exact(hook_sum_exact(shape, args.p, n, work_limit=cfg.work_limit))}
        for n in n_values
    ]
    params = {"k": args.k, "l": args.l, "p": args.p, "n": n_values}
    if cfg.format == "table" and args.n is not None:
        sys.stdout.write(f"{rows[0]['value']}\n")
    else:
        emit("exact", params, cfg, rows=rows)
    return 0


def cmd_asym(args, parser) -> int:
    cfg = _config(args)
    if args.k < 1 or args.l < 1:
        parser.error("asymptotics need k, l >= 1 (use the strip law for l = 0)")
    form = hook_asymptotic(args.k, args.l, args.z)
    result: dict[str, Any] = {
        "a": form.a,
        "log_a": form.log_a,
        "g": form.g,
        "base": form.base,
    }
    if args.n is not None:
        if args.n < 1:
            parser.error("--n must be positive")
        log_value = form.log_eval(args.n)
        result["log10_A"] = log_value / math.log(10.0)
        try:
            result["A"] = math.exp(log_value)
        except OverflowError:
            result["A"] = None
    params = {"k": args.k, "l": args.l, "z": args.z, "n": args.n}
    emit("asym", params, cfg, result=result)
    return 0


def cmd_ratio(args, parser) -> int:
    cfg = _config(args)
    if args.k < 1 or args.l < 1 or args.p < 1:
        parser.error("need k, l >= 1 and p >= 1")
    if any(n < 1 for n in args.n_list):
        parser.error("n values must be positive")
    table = ratio_table(args.k, args.l, args.p, args.n_list, args.mode,
                        work_limit=cfg.work_limit)
    with_lhs = any(r.lhs is not None for r in table)
    rows = []
    for r in table:
        row = {"n": r.n, "exact_log": r.exact_log, "asym_log": r.asym_log, "ratio": r.ratio}
        if with_lhs:
            row["lhs"] = r.lhs
        rows.append(row)
    params = {"k": args.k, "l": args.l, "p": args.p, "n_list": args.n_list, "mode": args.mode}
    emit("ratio", params, cfg, rows=rows)
    return 0


def cmd_integral(args, parser) -> int:
    cfg = _config(args)
    if args.k < 1 or args.l < 1 or args.k + args.l > 6:
        parser.error("need k, l >= 1 and k + l <= 6")
    if args.samples < 10_000:
        parser.error("--samples must be at least 10000")
    seed = cfg.seed if cfg.seed is not None else 0
    est = mc_full_I(args.k, args.l, args.z, args.samples, seed, method=args.method)
    closed = math.exp(full_I(args.k, args.l, args.z))
    z = est.z_score(closed)
    result = {
        "mean": est.mean,
        "std_error": est.std_error,
        "closed_form": closed,
        "z_score": z,
        "samples": est.samples,
        "seed": est.seed,
    }
    params = {"k": args.k, "l": args.l, "z": args.z, "samples": args.samples,
              "seed": seed, "method": args.method}
    emit("integral", params, cfg, result=result)
    if abs(z) > Z_SCORE_LIMIT:
        print(f"Monte Carlo self-check failed: |z-score| = {abs(z):.3g} > {Z_SCORE_LIMIT}",
              file=sys.stderr)
        return EXIT_MC_DIAGNOSTIC
    return 0


def _identity_values(name: str, n: int, work_limit: int):
    if name == "motzkin":
        check = motzkin_identity_check(n)
        return [("motzkin", check.lhs, check.rhs)]
    if name == "s11":
        shape = HookShape(1, 1)
        return [
            (f"s11_p{p}", hook_sum_exact(shape, p, n, work_limit=work_limit), s11_closed(p, n))
            for p in (1, 2)
        ]
    return [("s21", hook_sum_exact(HookShape(2, 1), 1, n, work_limit=work_limit),
             s21_closed(n))]


def cmd_identity(args, parser) -> int:
    cfg = _config(args)
    if args.n_max < 2:
        parser.error("--n-max must be at least 2")
    failure = None
    checked = 0
    for n in range(2, args.n_max + 1):
        for label, lhs, rhs in _identity_values(args.name, n, cfg.work_limit):
            checked += 1
            if lhs != rhs:
                failure = {"n": n, "check": label, "lhs": Exact(lhs) if isinstance(lhs, int) else str(lhs),
                           "rhs": Exact(rhs) if isinstance(rhs, int) else str(rhs)}
                break
        if failure:
            break
    params = {"name": args.name, "n_max": args.n_max}
    if cfg.format == "table":
        if failure:
            sys.stdout.write(
                f"FAIL {failure['check']} at n={failure['n']}: "
                f"lhs={failure['lhs']} rhs={failure['rhs']}\n"
            )
        else:
            sys.stdout.write(f"all pass ({args.name}, n = 2..{args.n_max}, {checked} checks)\n")
    else:
        result = {"all_pass": failure is None, "checks": checked,
                  "first_failure_n": failure["n"] if failure else None}
        emit("identity", params, cfg, result=result)
    return EXIT_IDENTITY_FAILED if failure else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--precision", type=int, default=9, help="significant digits (4-15)")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--work-limit", type=int, default=DEFAULT_WORK_LIMIT,
                        help="max partitions enumerated per exact sum")

    parser = argparse.ArgumentParser(prog="hooksum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", parents=[common], help="exact hook sums")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--n-list", type=_int_list)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("asym", parents=[common], help="asymptotic constants a, g")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--z", type=_positive_float, required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("ratio", parents=[common], help="exact / asymptotic ratio table")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-list", type=_int_list, required=True)
    p.add_argument("--mode", choices=("enumerate", "closed_form"), default="enumerate")
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("integral", parents=[common], help="Monte Carlo check of I(k, l, 2z)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--z", type=_positive_float, required=True)
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--method", choices=("direct", "factorized"), default="direct")
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("identity", parents=[common], help="verify an exact identity")
    p.add_argument("--name", choices=("motzkin", "s11", "s21"), required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_identity)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not 4 <= args.precision <= 15:
        parser.error("--precision must be between 4 and 15")
    if args.work_limit < 1:
        parser.error("--work-limit must be at least 1")
    if args.seed is not None and not 0 <= args.seed < 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")
    try:
        return args.func(args, parser)
    except WorkLimitExceeded as exc:
        print(f"error: {exc}; raise --work-limit or use --mode closed_form", file=sys.stderr)
        return EXIT_WORK_LIMIT
    except HookSumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
