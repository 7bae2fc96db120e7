"""Command-line interface: ``table``, ``poly``, ``verify`` and ``volkenborn``.

Option values are resolved as: command-line flag, then the environment
variable ``DAEHEE_<OPTION>`` (e.g. ``DAEHEE_N_MAX``), then the JSON config
file given by ``--config``, then the built-in default.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Any

from .algebra import RationalPolynomial, as_fraction
from .bernoulli import bernoulli_number, bernoulli_poly
from .combinat import falling_factorial_poly, stirling1, stirling2
from .daehee import daehee1_number_closed, daehee1_poly, daehee2_number, daehee2_poly
from .padic import (
    DEFAULT_BUDGET,
    INFINITE,
    BudgetExceeded,
    convergence_probe,
    is_prime,
)
from .verify import DESCRIPTIONS, DEFAULT_X_SAMPLES, IdentityId, check_all

ARTIFACT = "daehee-kit"
SCHEMA_VERSION = 1
ENV_PREFIX = "DAEHEE_"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

TABLE_SEQUENCES = ("daehee1", "daehee2", "bernoulli", "stirling1", "stirling2")
POLY_SEQUENCES = ("daehee1", "daehee2", "bernoulli")


class UsageError(Exception):
    pass


def rational_str(r) -> str:
    """Exact ``p/q`` form; the denominator is omitted when it is 1."""
    return str(as_fraction(r))


def _value_json(v):
    if isinstance(v, RationalPolynomial):
        return {"degree": v.degree, "coefficients": [rational_str(c) for c in v.coeffs]}
    if isinstance(v, (int, Fraction)):
        return rational_str(v)
    return v


# --- option resolution ---------------------------------------------------


class Settings:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config: dict = {}
        path = getattr(args, "config", None) or os.environ.get(ENV_PREFIX + "CONFIG")
        if path:
            try:
                with open(path, encoding="utf-8") as fh:
                    self.config = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read config file {path}: {exc}") from None
            if not isinstance(self.config, dict):
                raise UsageError(f"config file {path} must hold a JSON object")

    def get(self, name: str, default=None, convert=None):
        value = getattr(self.args, name, None)
        source = "flag"
        if value is None:
            env = os.environ.get(ENV_PREFIX + name.upper())
            if env is not None:
                value, source = env, "environment"
        if value is None:
            for key in (name, name.replace("_", "-")):
                if key in self.config:
                    value, source = self.config[key], "config"
                    break
        if value is None:
            return default
        if convert is not None and source != "flag":
            try:
                value = convert(value)
            except (TypeError, ValueError):
                raise UsageError(f"invalid value for {name} from {source}: {value!r}") from None
        return value


def _as_bool(v) -> bool:
    if isinstance(v, bool):
        return v
    s = str(v).strip().lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off", ""):
        return False
    raise ValueError(v)


def _nonneg(name: str, v: int) -> int:
    if v < 0:
        raise UsageError(f"--{name.replace('_', '-')} must be >= 0, got {v}")
    return v


def _format(settings: Settings) -> str:
    fmt = settings.get("format", "json", str)
    if fmt not in ("json", "csv"):
        raise UsageError(f"unknown format {fmt!r}; use json or csv")
    return fmt


def _parse_depths(text: str) -> list[int]:
    text = str(text).strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise UsageError(f"invalid depth range {text!r}; use e.g. 1..3") from None
    if lo_i < 0 or hi_i < lo_i:
        raise UsageError(f"invalid depth range {text!r}")
    return list(range(lo_i, hi_i + 1))


def _parse_samples(text) -> tuple:
    if isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = [s for s in str(text).split(",") if s.strip()]
    try:
        return tuple(as_fraction(s if not isinstance(s, (int, float)) else str(s)) for s in items)
    except (ValueError, ZeroDivisionError, TypeError):
        raise UsageError(f"invalid x samples {text!r}") from None


# --- output -------------------------------------------------------------


def _emit_json(out, command: str, params: dict, entries: list) -> None:
    doc = {
        "artifact": ARTIFACT,
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "entries": entries,
    }
    out.write(json.dumps(doc, indent=2, ensure_ascii=False))
    out.write("\n")


def _emit_csv(out, header: list, rows: list) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buf.getvalue())


# --- commands -------------------------------------------------------------


def _table_rows(sequence: str, n_max: int, k: int | None):
    """Yield ``(indices, value)`` pairs for a table."""
    if sequence in ("stirling1", "stirling2"):
        fn = stirling1 if sequence == "stirling1" else stirling2
        for n in range(n_max + 1):
            for l in range(n + 1):
                yield {"n": n, "l": l}, fn(n, l)
        return
    for n in range(n_max + 1):
        if sequence == "daehee1":
            value = daehee1_number_closed(n, k)
        elif sequence == "daehee2":
            value = daehee2_number(n, k)
        else:
            value = bernoulli_number(n, k)
        yield {"n": n, "k": k}, value


def _need_k(sequence: str, settings: Settings) -> int | None:
    k = settings.get("k", None, int)
    if sequence.startswith("stirling"):
        if k is not None:
            raise UsageError(f"--k does not apply to {sequence}")
        return None
    if k is None:
        raise UsageError(f"{sequence} needs --k")
    if sequence == "bernoulli":
        return _nonneg("k", k)
    if k < 1:
        raise UsageError(f"--k must be >= 1 for {sequence}, got {k}")
    return k


def cmd_table(args, settings: Settings, out) -> int:
    sequence = args.sequence
    if sequence not in TABLE_SEQUENCES:
        raise UsageError(f"unknown sequence {sequence!r}; expected one of {', '.join(TABLE_SEQUENCES)}")
    n_max = _nonneg("n_max", settings.get("n_max", 10, int))
    k = _need_k(sequence, settings)
    fmt = _format(settings)
    rows = list(_table_rows(sequence, n_max, k))
    params: dict[str, Any] = {"sequence": sequence, "n_max": n_max}
    if k is not None:
        params["k"] = k
    if fmt == "json":
        entries = [{"indices": idx, "value": rational_str(v)} for idx, v in rows]
        _emit_json(out, "table", params, entries)
    else:
        keys = list(rows[0][0]) if rows else ["n"]
        _emit_csv(out, keys + ["value"], [[idx[key] for key in keys] + [rational_str(v)] for idx, v in rows])
    return EXIT_OK


def cmd_poly(args, settings: Settings, out) -> int:
    sequence = args.sequence
    if sequence not in POLY_SEQUENCES:
        raise UsageError(f"unknown polynomial sequence {sequence!r}; expected one of {', '.join(POLY_SEQUENCES)}")
    n = settings.get("n", None, int)
    if n is None:
        raise UsageError("poly needs --n")
    n = _nonneg("n", n)
    k = _need_k(sequence, settings)
    fmt = _format(settings)
    if sequence == "daehee1":
        p = daehee1_poly(n, k)
    elif sequence == "daehee2":
        p = daehee2_poly(n, k)
    else:
        p = bernoulli_poly(n, k)
    coeffs = [rational_str(c) for c in p.coeffs] or ["0"]
    if fmt == "json":
        entry = {"indices": {"n": n, "k": k}, "degree": p.degree, "coefficients": coeffs}
        _emit_json(out, "poly", {"sequence": sequence, "n": n, "k": k}, [entry])
    else:
        _emit_csv(out, ["n", "k"] + [f"c{i}" for i in range(len(coeffs))], [[n, k] + coeffs])
    return EXIT_OK


def _parse_ids(text) -> list[IdentityId]:
    if isinstance(text, (list, tuple)):
        names = [str(s) for s in text]
    else:
        names = [s.strip() for s in str(text).replace(" ", ",").split(",") if s.strip()]
    if not names or names == ["all"]:
        return list(IdentityId)
    try:
        return [IdentityId.parse(name) for name in names]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _failure_json(report):
    f = report.first_failure
    if f is None:
        return None
    return {"indices": f.indices, "lhs": _value_json(f.lhs), "rhs": _value_json(f.rhs)}


def cmd_verify(args, settings: Settings, out) -> int:
    ids = _parse_ids(settings.get("ids", "all"))
    n_max = _nonneg("n_max", settings.get("n_max", 20, int))
    k_max = settings.get("k_max", 6, int)
    if k_max < 1:
        raise UsageError("--k-max must be >= 1")
    xs = _parse_samples(settings.get("x_samples", DEFAULT_X_SAMPLES))
    jobs = settings.get("jobs", 1, int)
    timing = settings.get("timing", False, _as_bool)
    fmt = _format(settings)
    reports = check_all(n_max, k_max, xs, ids=ids, jobs=max(1, jobs))
    params = {
        "ids": [r.identity.value for r in reports],
        "n_max": n_max,
        "k_max": k_max,
        "x_samples": [rational_str(x) for x in xs],
    }
    if fmt == "json":
        entries = []
        for r in reports:
            entry = {
                "identity": r.identity.value,
                "statement": DESCRIPTIONS[r.identity],
                "status": r.status,
                "points": r.points,
                "first_failure": _failure_json(r),
            }
            if timing:
                entry["elapsed_seconds"] = round(r.elapsed, 6)
            entries.append(entry)
        _emit_json(out, "verify", params, entries)
    else:
        header = ["identity", "status", "points", "failure_indices", "lhs", "rhs"]
        rows = []
        for r in reports:
            f = _failure_json(r)
            row = [r.identity.value, r.status, r.points]
            if f is None:
                row += ["", "", ""]
            else:
                row += [json.dumps(f["indices"]), json.dumps(f["lhs"]), json.dumps(f["rhs"])]
            if timing:
                row.append(f"{r.elapsed:.6f}")
            rows.append(row)
        _emit_csv(out, header + (["elapsed_seconds"] if timing else []), rows)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_volkenborn(args, settings: Settings, out) -> int:
    n = _nonneg("n", settings.get("n", 1, int))
    k = settings.get("k", 1, int)
    if k < 1:
        raise UsageError("--k must be >= 1")
    p = settings.get("p", 2, int)
    if not is_prime(p):
        raise UsageError(f"--p must be prime, got {p}")
    depths = _parse_depths(settings.get("depths", "1..4"))
    budget = settings.get("budget", DEFAULT_BUDGET, int)
    closed_form = settings.get("closed_form", False, _as_bool)
    fmt = _format(settings)
    f = falling_factorial_poly(n)
    try:
        probes = convergence_probe(f, p, depths, k=k, budget=budget, closed_form=closed_form)
    except BudgetExceeded as exc:
        raise UsageError(f"{exc} (hint: pass --closed-form, raise --budget, or lower --depths)") from None
    params = {
        "n": n,
        "k": k,
        "p": p,
        "depths": [depths[0], depths[-1]],
        "integrand": [rational_str(c) for c in f.coeffs],
        "closed_form": closed_form,
    }

    def val(v):
        return "inf" if v == INFINITE else v

    if fmt == "json":
        entries = [
            {
                "depth": pr.depth,
                "partial_sum": rational_str(pr.partial_sum),
                "exact": rational_str(pr.exact_value),
                "error": rational_str(pr.error),
                "valuation": val(pr.valuation),
            }
            for pr in probes
        ]
        _emit_json(out, "volkenborn", params, entries)
    else:
        rows = [
            [pr.depth, rational_str(pr.partial_sum), rational_str(pr.exact_value), rational_str(pr.error), val(pr.valuation)]
            for pr in probes
        ]
        _emit_csv(out, ["depth", "partial_sum", "exact", "error", "valuation"], rows)
    return EXIT_OK


# --- parser ---------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None, help="output format (default json)")
    common.add_argument("--config", default=None, help="JSON file with default option values")

    parser = _Parser(prog="daehee", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", parents=[common], help="tabulate a sequence")
    p.add_argument("sequence", help="one of " + ", ".join(TABLE_SEQUENCES))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--k", type=int, default=None, help="order (Daehee k, Bernoulli alpha)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("poly", parents=[common], help="coefficients of a polynomial, ascending powers")
    p.add_argument("sequence", help="one of " + ", ".join(POLY_SEQUENCES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", parents=[common], help="check the identity catalogue")
    p.add_argument("--ids", default=None, help="comma-separated identity ids, or 'all'")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--x-samples", default=None, help="comma-separated rationals, e.g. 0,1,-1,1/2")
    p.add_argument("--jobs", type=int, default=None, help="worker processes across identities")
    p.add_argument("--timing", action="store_const", const=True, default=None, help="include elapsed time (output no longer byte-stable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("volkenborn", parents=[common], help="p-adic partial sums of the (x)_n integral")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--depths", default=None, help="inclusive range like 1..4")
    p.add_argument("--budget", type=int, default=None, help=f"max terms per literal sum (default {DEFAULT_BUDGET})")
    p.add_argument("--closed-form", action="store_const", const=True, default=None, help="use Faulhaber sums past the budget")
    p.set_defaults(func=cmd_volkenborn)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        settings = Settings(args)
        return args.func(args, settings, out)
    except UsageError as exc:
        print(f"daehee: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
