"""Command-line interface.

Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.
Exact numbers cross the boundary as strings such as ``"20/3"``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .decomposition import (
    EXPONENTIAL,
    MODES,
    POLYNOMIAL,
    DecompositionGateError,
    FactorMultiset,
    decompose_exp,
    decompose_poly,
)
from .phi_map import phi_report, rows_to_csv
from .realization import DEFAULT_SEED, RealizationError, SearchConfig, realize_all, realize_case
from .serialize import factors_from_json, factors_to_json, number_from_json, poly_from_json, poly_to_json
from .signature import CSV_COLUMNS, CaseSpec, analyze, check_necessary, enumerate_cases

__all__ = ["main", "run", "build_parser"]

SEED_ENV = "SZEGO_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def _load_json(text: str, what: str):
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: invalid JSON ({exc})") from None


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV} must be an integer") from None
    return DEFAULT_SEED


def _config(args) -> SearchConfig:
    return SearchConfig(seed=_seed(args), rounds=args.rounds, resamples=args.resamples)


def _read_poly(args):
    obj = _load_json(args.poly, "--poly")
    p, n = poly_from_json(obj)
    if args.mode == POLYNOMIAL:
        n = args.n if args.n is not None else n
        if n is None:
            raise UsageError("polynomial mode needs --n (or an \"n\" field in --poly)")
    return p, n


def _emit(args, payload, csv_text: str | None = None) -> None:
    if args.format == "csv":
        if csv_text is None:
            raise UsageError(f"{args.command} has no CSV output")
        text = csv_text
    else:
        text = json.dumps(payload, indent=2 if args.pretty else None, sort_keys=False) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_compose(args):
    raw = _load_json(args.factors, "--factors")
    if isinstance(raw, dict):
        fm = factors_from_json(raw, args.mode)
    elif isinstance(raw, list):
        scalar = Fraction(1) if args.scalar is None else number_from_json(args.scalar)
        fm = FactorMultiset.from_values([number_from_json(v) for v in raw], scalar=scalar, mode=args.mode)
    else:
        raise UsageError("--factors must be a JSON list of values or a factor-multiset object")
    if args.mode == POLYNOMIAL:
        n = args.n if args.n is not None else fm.count + fm.infinity + 1
        p = fm.to_polynomial(n)
        _emit(args, {"mode": POLYNOMIAL, **poly_to_json(p, n)})
    else:
        _emit(args, {"mode": EXPONENTIAL, **poly_to_json(fm.to_expform().y)})


def cmd_decompose(args):
    p, n = _read_poly(args)
    fm = decompose_poly(p, n) if args.mode == POLYNOMIAL else decompose_exp(p)
    _emit(args, factors_to_json(fm, approx=args.approx))


def cmd_signature(args):
    p, n = _read_poly(args)
    fm, sig = analyze(p, n, args.mode)
    d = sig.to_dict()
    a = sig.a_side
    d.update(a_pos=a.pos, a_zero=a.zero, a_neg=a.neg, a_complex_pairs=a.complex_pairs)
    _emit(args, d)


def cmd_check(args):
    p, n = _read_poly(args)
    fm, sig = analyze(p, n, args.mode)
    rep = check_necessary(sig, fm, n, args.mode)
    _emit(args, {"signature": sig.to_dict(), "factors": factors_to_json(fm), **rep.to_dict()})
    return 0


def cmd_enumerate(args):
    specs = enumerate_cases(args.n, strict=args.strict)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for s in specs:
        w.writerow(s.to_dict())
    _emit(args, {"n": args.n, "count": len(specs), "specs": [s.to_dict() | {"expected": s.expected().to_dict()} for s in specs]}, buf.getvalue())


def cmd_realize(args):
    raw = _load_json(args.spec, "--spec")
    if not isinstance(raw, dict):
        raise UsageError("--spec must be a JSON object")
    if args.n is not None:
        raw.setdefault("n", args.n)
    spec = CaseSpec.from_dict(raw)
    cert = realize_case(spec, args.mode, _config(args))
    _emit(args, cert.to_dict())


def cmd_realize_all(args):
    try:
        res = realize_all(args.n, args.mode, _config(args))
    except RealizationError as exc:
        res = getattr(exc, "result", None)
        if res is not None and args.format == "csv":
            sys.stdout.write(res.summary_csv())
        raise
    payload = {
        "n": args.n,
        "mode": args.mode,
        "summary": res.counts,
        "rows": res.rows,
        "certificates": [c.to_dict() for c in res.certificates],
    }
    _emit(args, payload, res.summary_csv())


def cmd_phi(args):
    n_min = args.n_min
    n_max = args.n_max if args.n_max is not None else args.n
    if n_max is None:
        raise UsageError("phi needs --n-max (or --n)")
    rows = phi_report(n_max, args.mode, affinity_trials=args.affinity_trials, n_min=n_min, seed=_seed(args))
    _emit(args, {"mode": args.mode, "rows": [r.to_dict() for r in rows]}, rows_to_csv(rows))
    return 0 if all(r.all_rational and r.all_positive and r.invertible and r.affinity_ok for r in rows) else 1


def cmd_selftest(args):
    from .selftest import run_selftest

    report = run_selftest(seed=_seed(args), scale=args.scale)
    _emit(args, report)
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=MODES, default=POLYNOMIAL)
    common.add_argument("--seed", type=int, default=None, help=f"search seed (default: ${SEED_ENV} or {DEFAULT_SEED})")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")
    common.add_argument("--pretty", action="store_true", help="indent JSON output")

    parser = _Parser(prog="szego", description="Exact Schur-Szego composition toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compose", parents=[common], help="factor values -> P (or R)")
    p.add_argument("--n", type=int)
    p.add_argument("--factors", required=True, help='JSON list like ["2","3"] or a factor-multiset object')
    p.add_argument("--scalar", default=None)
    p.set_defaults(func=cmd_compose)

    for name, func, hlp in (
        ("decompose", cmd_decompose, "P (or R) -> factor multiset"),
        ("signature", cmd_signature, "P (or R) -> 8-vector"),
        ("check", cmd_check, "P (or R) -> necessary-condition report"),
    ):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("--n", type=int)
        p.add_argument("--poly", required=True, help='{"coeffs": [...ascending...]}, "-" for stdin, or @file')
        if name == "decompose":
            p.add_argument("--approx", action="store_true", help="add approximate values of non-exact complex a_i")
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate-cases", parents=[common], help="n -> admissible case specs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="only k = 1 in Cases 1 and 3")
    p.set_defaults(func=cmd_enumerate)

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--rounds", type=int, default=SearchConfig.rounds)
    budget.add_argument("--resamples", type=int, default=SearchConfig.resamples)

    p = sub.add_parser("realize", parents=[common, budget], help="case spec -> certificate")
    p.add_argument("--spec", required=True, help="CaseSpec JSON object")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("realize-all", parents=[common, budget], help="n -> certificates + summary")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_realize_all)

    p = sub.add_parser("phi", parents=[common], help="eigenvalue report for Phi")
    p.add_argument("--n-max", type=int)
    p.add_argument("--n", type=int, help="alias for --n-max")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--affinity-trials", type=int, default=0)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("selftest", parents=[common], help="reduced-scale invariant suites")
    p.add_argument("--scale", type=float, default=1.0, help="multiply trial counts")
    p.set_defaults(func=cmd_selftest)
    return parser


def _error(kind: str, message: str, diagnostic=None) -> None:
    payload = {"error": kind, "message": message}
    if diagnostic:
        payload["diagnostic"] = diagnostic
    sys.stderr.write(json.dumps(payload) + "\n")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        rc = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"szego: error: {exc}\n")
        return 2
    except RealizationError as exc:
        _error(type(exc).__name__, str(exc), exc.diagnostic)
        return 1
    except (ValueError, TypeError, ZeroDivisionError, DecompositionGateError, OSError, KeyError) as exc:
        _error(type(exc).__name__, str(exc))
        return 1
    return rc or 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
