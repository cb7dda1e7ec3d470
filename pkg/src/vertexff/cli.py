"""Command-line front end: verification suites, XXZ parameter points and
large-distance asymptotics, all emitting the same report layout."""
from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import sys
import warnings
from typing import Dict, List, Optional, Sequence

from . import config as C
from .correspond import MacroParams, OperatorSpec, edge_factors, rpoint_asymptotics
from .errors import ConvergenceError, SingularKernel
from .suites import SUITES, Case, xxz_values
from .xxz import XxzParams, scaling_dimension, solve_lieb

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# flag name -> config key
_FLAG_KEYS = {
    "max_degree": "max_degree",
    "charge_window": "charge_window",
    "nu": "nu",
    "omega": "omega",
    "zeta": "zeta",
    "q": "q",
    "grid": "grid",
    "cutoff": "cutoff",
}


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat key = value file layered over the defaults")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--charge-window", type=int)
    p.add_argument("--nu", help="comma separated reals")
    p.add_argument("--omega", help="comma separated complex values, r@theta or a+bj")
    p.add_argument("--zeta", type=float)
    p.add_argument("--q", type=float)
    p.add_argument("--grid", type=int)
    p.add_argument("--cutoff", type=int)
    p.add_argument("--tol", type=float, help="override every tolerance of the command")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vertexff")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run one verification suite")
    v.add_argument("suite")
    _add_common(v)
    x = sub.add_parser("xxz", help="solve the dressed equations at one (zeta, q)")
    _add_common(x)
    a = sub.add_parser("asymptotics", help="per-harmonic leading r-point asymptotics")
    _add_common(a)
    return parser


def resolve_config(args: argparse.Namespace) -> Dict[str, str]:
    overrides = {key: getattr(args, flag) for flag, key in _FLAG_KEYS.items()}
    cfg = C.load_config(args.config, overrides)
    if args.tol is not None:
        for key in cfg:
            if key.startswith("tol_"):
                cfg[key] = str(args.tol)
    validate(cfg)
    return cfg


def validate(cfg: Dict[str, str]) -> None:
    for key in cfg:
        if key.startswith("tol_") and not C.get_float(cfg, key) > 0:
            raise C.ConfigError(f"{key} must be positive")
    for key in ("max_degree", "charge_window", "cutoff", "grid"):
        if C.get_int(cfg, key) < 1:
            raise C.ConfigError(f"{key} must be at least 1")
    C.get_floats(cfg, "nu")
    C.get_complexes(cfg, "omega")


def report(name: str, cfg: Dict[str, str], cases: Sequence[Case], extra: Optional[Dict] = None) -> Dict:
    failed = [c.id for c in cases if not c.passed]
    summary = {
        "cases": len(cases),
        "passed": len(cases) - len(failed),
        "failed": len(failed),
        "max_residual": max((c.residual for c in cases), default=0.0),
        "failed_ids": failed,
    }
    if extra:
        summary.update(extra)
    return {"suite": name, "params": dict(sorted(cfg.items())), "cases": [c.as_dict() for c in cases], "summary": summary}


def _rows_to_csv(rows: List[Dict]) -> str:
    buf = io.StringIO()
    if rows:
        flat = [{k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()} for r in rows]
        writer = csv.DictWriter(buf, fieldnames=list(flat[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(flat)
    return buf.getvalue()


def render(rep: Dict, fmt: str) -> str:
    if fmt == "csv":
        return _rows_to_csv(rep["cases"])
    return json.dumps(rep, indent=2, sort_keys=True, allow_nan=True) + "\n"


def emit(rep: Dict, args: argparse.Namespace) -> None:
    text = render(rep, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args: argparse.Namespace, cfg: Dict[str, str]) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    cases = SUITES[args.suite](cfg)
    rep = report(args.suite, cfg, cases)
    emit(rep, args)
    return EXIT_OK if rep["summary"]["failed"] == 0 else EXIT_FAIL


def cmd_xxz(args: argparse.Namespace, cfg: Dict[str, str]) -> int:
    zeta, q, grid = C.get_float(cfg, "zeta"), C.get_float(cfg, "q"), C.get_int(cfg, "grid")
    try:
        XxzParams(zeta, q, grid)
    except ValueError as exc:
        raise C.ConfigError(str(exc)) from exc
    try:
        cases = SUITES["xxz"](cfg)
        values = xxz_values(solve_lieb(XxzParams(zeta, q, grid)))
    except (ConvergenceError, SingularKernel) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    rep = report("xxz", cfg, cases, {"values": values})
    emit(rep, args)
    return EXIT_OK if rep["summary"]["failed"] == 0 else EXIT_FAIL


def amplitude_table(cfg: Dict[str, str], cutoff: int) -> Dict[int, complex]:
    """F_kappa = entry |kappa| of ``asym_amplitudes``; missing entries are zero."""
    vals = C.get_complexes(cfg, "asym_amplitudes")
    if not vals:
        raise C.ConfigError("asym_amplitudes is empty")
    if any(not cmath.isfinite(v) for v in vals):
        raise C.ConfigError("asym_amplitudes has non-finite entries")
    return {k: vals[abs(k)] for k in range(-cutoff, cutoff + 1) if abs(k) < len(vals)}


def asymptotic_operators(cfg: Dict[str, str], cutoff: int) -> List[OperatorSpec]:
    os_ = C.get_ints(cfg, "asym_o")
    npl = C.get_floats(cfg, "asym_nu_plus")
    nmi = C.get_floats(cfg, "asym_nu_minus")
    xs = C.get_floats(cfg, "asym_x")
    if not (len(os_) == len(npl) == len(nmi) == len(xs)) or not os_:
        raise C.ConfigError("asym_o, asym_nu_plus, asym_nu_minus and asym_x need one entry per operator")
    amps = amplitude_table(cfg, cutoff)
    return [OperatorSpec(o, amps, a, b) for o, a, b in zip(os_, npl, nmi)]


def cmd_asymptotics(args: argparse.Namespace, cfg: Dict[str, str]) -> int:
    cutoff = C.get_int(cfg, "cutoff")
    ops = asymptotic_operators(cfg, cutoff)
    xs = C.get_floats(cfg, "asym_x")
    if any(b < a for a, b in zip(xs, xs[1:])):
        raise C.ConfigError("asym_x must be ordered")
    macro = MacroParams(L=C.get_float(cfg, "asym_L"), p_F=C.get_float(cfg, "asym_p_F"))
    rows = []
    if sum(op.o for op in ops) != 0:
        warnings.warn("total spin is not zero: the ground-to-ground expectation vanishes")
        print("warning: total spin is not zero, no harmonic contributes", file=sys.stderr)
    else:
        res = rpoint_asymptotics(ops, xs, macro, cutoff)
        for kappas, total in res.harmonics.items():
            phase = cmath.exp(2j * macro.p_F * sum(k * x for k, x in zip(kappas, xs)))
            amp = math.prod(op.amplitude(k) for op, k in zip(ops, kappas))
            expo = sum(
                scaling_dimension(op.nu_plus + k) + scaling_dimension(op.nu_minus + k) for op, k in zip(ops, kappas)
            )
            right, left = edge_factors(ops, xs, kappas, macro)
            rows.append(
                {
                    "kappas": list(kappas),
                    "phase": [phase.real, phase.imag],
                    "amplitude": [amp.real, amp.imag],
                    "L_exponent": float(expo),
                    "edge_factor": [(right * left).real, (right * left).imag],
                    "total": [total.real, total.imag],
                }
            )
    total = sum((complex(*r["total"]) for r in rows), 0j)
    rep = {
        "suite": "asymptotics",
        "params": dict(sorted(cfg.items())),
        "cases": rows,
        "summary": {"harmonics": len(rows), "total": [total.real, total.imag]},
    }
    emit(rep, args)
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "xxz": cmd_xxz, "asymptotics": cmd_asymptotics}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](args, cfg)
    except C.ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
