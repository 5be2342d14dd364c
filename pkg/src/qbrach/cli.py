"""Batch command-line front end.

Subcommands:
    run            -- sample a scenario trajectory (or integrate a
                      control family) and write CSV/JSON
    verify         -- run a module verification sweep, emit a report
    list-scenarios -- print the scenario registry

Exit codes: 0 success, 2 integrator drift abort, 64 unknown scenario,
65 bad parameters.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import os
import sys

import numpy as np

from . import __version__, brach, catalog, report
from .matcore import ValidationError

log = logging.getLogger("qbrach")

EXIT_OK = 0
EXIT_DRIFT = 2
EXIT_UNKNOWN_SCENARIO = 64
EXIT_BAD_PARAMS = 65

SCENARIO_NAMES = (*catalog.SCENARIO_BUILDERS.keys(),
                  "sun-family", "su3-partitions")

FMT = "%.17g"


def _setup_logging():
    level = {"error": logging.ERROR, "info": logging.INFO,
             "debug": logging.DEBUG}.get(
        os.environ.get("QBRACH_LOG", "error").lower(), logging.ERROR)
    logging.basicConfig(level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def _parse_value(text: str):
    for cast in (int, float, complex):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def _parse_params(pairs) -> dict:
    out = {}
    for item in pairs or ():
        if "=" not in item:
            raise ValidationError(f"--param expects key=value, got {item!r}")
        key, _, val = item.partition("=")
        out[key] = _parse_value(val)
    return out


# ---------------------------------------------------------------------------
# trajectory sampling
# ---------------------------------------------------------------------------

def _complex_columns(dim: int):
    cols = []
    for j in range(1, dim + 1):
        cols.extend((f"Re c_{j}", f"Im c_{j}"))
    return cols


def _scenario_rows(scn, t_max: float, dt: float):
    """Sample a closed-form scenario on a uniform grid."""
    n = max(int(round(t_max / dt)), 1)
    header = (["t"] + _complex_columns(scn.dim)
              + ["trH2", "trHF", "norm"])
    if scn.target is not None:
        header.append("fidelity_to_target")
    rows = []
    for i in range(n + 1):
        t = min(i * dt, t_max)
        psi = scn.state_at(t)
        H = scn.hamiltonian_at(t)
        F = scn.constraint_at(t) if scn.constraint_at is not None \
            else np.zeros_like(H)
        row = [t]
        for c in psi:
            row.extend((c.real, c.imag))
        row.append(float(np.trace(H @ H).real))
        row.append(float(np.trace(H @ F).real))
        row.append(float(np.linalg.norm(psi)))
        if scn.target is not None:
            row.append(float(abs(np.vdot(scn.target, psi)) ** 2))
        rows.append(row)
    return header, rows


def _family_rows(params: dict, t_max: float, dt: float, seed: int):
    """Integrate one randomized control family and sample the trajectory."""
    n = int(params.pop("n", 3))
    kind = str(params.pop("kind", "antidiagonal"))
    if params:
        raise ValidationError(f"unknown sun-family params: {sorted(params)}")
    fam = catalog.family_sun(n, kind, seed=seed)
    psi0 = np.zeros(n, dtype=complex)
    psi0[0] = 1.0
    record_every = max(int(round(1e-3 / dt)), 1)
    traj = brach.evolve(fam.problem, fam.H0, fam.F0, psi0, t_max, dt,
                        record_every=record_every)
    header = ["t"] + _complex_columns(n) + ["trH2", "trHF", "norm"]
    rows = []
    for i, t in enumerate(traj.times):
        H, F, psi = traj.Hs[i], traj.Fs[i], traj.psis[i]
        row = [float(t)]
        for c in psi:
            row.extend((c.real, c.imag))
        row.append(float(np.trace(H @ H).real))
        row.append(float(np.trace(H @ F).real))
        row.append(float(np.linalg.norm(psi)))
        rows.append(row)
    return header, rows


def _write_table(header, rows, out, fmt: str):
    if fmt == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(FMT % v for v in row))
        text = "\n".join(lines) + "\n"
    else:
        payload = {"columns": header,
                   "rows": [[float(FMT % v) for v in row] for row in rows]}
        text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _partition_output(out, fmt: str, t_max: float, dt: float, seed: int):
    results = catalog.su3_partitions(t_max=t_max, dt=dt, seed=seed)
    if fmt == "csv":
        header = ["pair", "description", "classification", "period",
                  "max_excursion"]
        lines = [",".join(header)]
        for r in results:
            lines.append(",".join([
                str(r.index), f'"{r.description}"', r.classification,
                FMT % r.period if r.period is not None else "",
                FMT % r.max_excursion]))
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps([{
            "pair": r.index, "description": r.description,
            "classification": r.classification,
            "period": r.period, "max_excursion": r.max_excursion}
            for r in results], indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    if args.scenario not in SCENARIO_NAMES:
        print(f"unknown scenario: {args.scenario!r} "
              f"(choose from {', '.join(SCENARIO_NAMES)})", file=sys.stderr)
        return EXIT_UNKNOWN_SCENARIO
    try:
        params = _parse_params(args.param)
        if args.dt <= 0 or args.t_max < args.dt:
            raise ValidationError("need dt > 0 and t_max >= dt")
        if args.scenario == "su3-partitions":
            _partition_output(args.out, args.format, args.t_max, args.dt,
                              args.seed)
            return EXIT_OK
        if args.scenario == "sun-family":
            header, rows = _family_rows(params, args.t_max, args.dt,
                                        args.seed)
        else:
            builder = catalog.SCENARIO_BUILDERS[args.scenario]
            scn = builder(**params)
            header, rows = _scenario_rows(scn, args.t_max, args.dt)
    except brach.DriftAbort as exc:
        print(f"drift abort: {exc}", file=sys.stderr)
        return EXIT_DRIFT
    except (ValidationError, TypeError) as exc:
        print(f"bad parameters: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    _write_table(header, rows, args.out, args.format)
    log.info("wrote %d samples for scenario %s", len(rows), args.scenario)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    env = report.run_suite(args.suite)
    if args.format == "json":
        text = json.dumps(env.to_dict(), indent=2) + "\n"
    else:
        width = max(len(r.id) for r in env.records) + 2
        lines = [f"suite: {env.suite}   version: {env.version}"]
        for r in env.records:
            tol = "" if r.tolerance is None else f"  (tol {r.tolerance:g})"
            lines.append(f"{r.status:13s} {r.id:{width}s} "
                         f"{r.residual:.3e}{tol}")
        n_fail = sum(r.status == "fail" for r in env.records)
        lines.append(f"{len(env.records)} checks, {n_fail} failures")
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if not env.has_failures() else 1


def cmd_list_scenarios(_args) -> int:
    for name in SCENARIO_NAMES:
        print(name)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbrach",
        description="Time-optimal quantum control: scenario trajectories "
                    "and verification reports.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="sample a scenario trajectory")
    p_run.add_argument("--scenario", required=True)
    p_run.add_argument("--param", action="append", metavar="k=v",
                       help="scenario parameter override (repeatable)")
    p_run.add_argument("--t-max", type=float, default=1.0)
    p_run.add_argument("--dt", type=float, default=1e-3)
    p_run.add_argument("--out", default=None)
    p_run.add_argument("--format", choices=("csv", "json"), default="csv")
    p_run.add_argument("--seed", type=int, default=42)
    p_run.add_argument("--tol", type=float, default=1e-6)
    p_run.set_defaults(func=cmd_run)

    p_ver = sub.add_parser("verify", help="run a verification sweep")
    p_ver.add_argument("--suite",
                       choices=("gates", "special", "catalog", "all"),
                       default="all")
    p_ver.add_argument("--format", choices=("json", "text"), default="text")
    p_ver.add_argument("--out", default=None)
    p_ver.add_argument("--seed", type=int, default=42)
    p_ver.add_argument("--tol", type=float, default=1e-6)
    p_ver.set_defaults(func=cmd_verify)

    p_list = sub.add_parser("list-scenarios",
                            help="print available scenario names")
    p_list.set_defaults(func=cmd_list_scenarios)
    return parser


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
