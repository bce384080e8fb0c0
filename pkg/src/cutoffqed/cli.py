"""Command-line entry point: ``cutoffqed <subcommand> [flags]``.

Momenta and regulator masses on the command line are in units of the bare
mass; ``--m`` rescales them at the boundary.  Energy shifts in the output are
in absolute units (multiplied by m).

Exit codes: 0 ok, 2 quadrature did not converge, 3 a check failed,
64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import fockspace, podolsky
from .integrand import SpinKind, subtracted_density
from .kinematics import ParticleConfig
from .quadrature import QuadratureConfig
from .regulator import InvalidSpectrum, RegulatorSpectrum, weight_nodes
from .selfenergy import DEFAULT_NODES, compute

EXIT_OK = 0
EXIT_NOT_CONVERGED = 2
EXIT_CHECK_FAILED = 3
EXIT_USAGE = 64

DEFAULT_E2 = 1.0 / 137.036
SWEEP_REL_TOL = 1e-6
CHECK_TOL_PODOLSKY = 1e-10
CHECK_TOL_FOCK = 1e-12

REPORT_COLUMNS = ["spin", "p", "m", "e2", "lambda0_or_spec", "delta_e", "delta_m",
                  "quad_error", "evals", "converged"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    spin: SpinKind = SpinKind.HALF
    p: float = 0.0
    m: float = 1.0
    e2: float = DEFAULT_E2
    regulator: RegulatorSpectrum | None = None
    lambda0: list[float] = field(default_factory=list)
    p_grid: list[float] = field(default_factory=lambda: [0.0])
    quad: QuadratureConfig = field(default_factory=QuadratureConfig)
    nmax: int = 12
    scale: float = 1.0
    a: float | None = None
    samples: int = 10_000
    seed: int = 0
    out: str | None = None


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    return str(x)


def emit_csv(rows, columns) -> str:
    """Header plus one line per row; floats with 17 significant digits."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row[c]) for c in columns])
    return buf.getvalue()


def _csv_floats(name):
    def parse(text):
        try:
            vals = [float(v) for v in text.split(",") if v.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name}: expected comma-separated numbers, got {text!r}")
        if not vals:
            raise argparse.ArgumentTypeError(f"{name}: empty list")
        return vals
    return parse


def _regulator(text):
    try:
        return RegulatorSpectrum.parse(text)
    except InvalidSpectrum as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cutoffqed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def particle(p, with_p=True):
        p.add_argument("--spin", choices=[s.value for s in SpinKind], default="half")
        if with_p:
            p.add_argument("--p", type=float, default=0.0, help="momentum in units of m")
        p.add_argument("--m", type=float, default=1.0)
        p.add_argument("--e2", type=float, default=DEFAULT_E2)

    def quad(p, rel_tol):
        p.add_argument("--rel-tol", type=float, default=rel_tol)
        p.add_argument("--abs-tol", type=float, default=0.0)
        p.add_argument("--max-evals", type=int, default=QuadratureConfig.max_evals)

    def out(p):
        p.add_argument("--out", default=None, help="write to PATH instead of stdout")

    c = sub.add_parser("compute", help="self-energy and mass correction for one state")
    particle(c)
    c.add_argument("--regulator", type=_regulator, default=RegulatorSpectrum.delta(1000.0),
                   help="delta:L0 or uniform:LA,LB (units of m)")
    quad(c, QuadratureConfig.rel_tol)
    out(c)

    s = sub.add_parser("sweep", help="delta regulators over a lambda0 x p grid")
    particle(s, with_p=False)
    s.add_argument("--lambda0", type=_csv_floats("--lambda0"), required=True)
    s.add_argument("--p-grid", type=_csv_floats("--p-grid"), default=[0.0])
    quad(s, SWEEP_REL_TOL)
    out(s)

    d = sub.add_parser("integrand-dump", help="subtracted integrand on a (k, mu) grid")
    particle(d)
    d.add_argument("--regulator", type=_regulator, default=RegulatorSpectrum.delta(1.0))
    d.add_argument("--samples", type=int, default=40, help="k points (log-spaced 1e-3..1e6 m)")
    out(d)

    pc = sub.add_parser("podolsky-check", help="momentum-space field-equation identities")
    pc.add_argument("--a", type=float, default=None)
    pc.add_argument("--samples", type=int, default=10_000)
    pc.add_argument("--seed", type=int, default=0)
    out(pc)

    f = sub.add_parser("fock-check", help="indefinite-metric ladder algebra")
    f.add_argument("--nmax", type=int, default=12)
    f.add_argument("--scale", type=float, default=1.0)
    out(f)
    return parser


def parse_run_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(subcommand=ns.subcommand)
    for name in ("p", "m", "e2", "regulator", "lambda0", "p_grid", "nmax", "scale",
                 "a", "samples", "seed", "out"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if hasattr(ns, "spin"):
        cfg.spin = SpinKind(ns.spin)
    if hasattr(ns, "rel_tol"):
        try:
            cfg.quad = QuadratureConfig(rel_tol=ns.rel_tol, abs_tol=ns.abs_tol, max_evals=ns.max_evals)
        except ValueError as exc:
            raise UsageError(f"quadrature flags: {exc}")
    if hasattr(ns, "m"):
        try:
            ParticleConfig(m=cfg.m, p=cfg.p * cfg.m if hasattr(ns, "p") else 0.0, e2=cfg.e2)
            for p in cfg.p_grid:
                ParticleConfig(m=cfg.m, p=p * cfg.m, e2=cfg.e2)
        except ValueError as exc:
            raise UsageError(str(exc))
    if any(not x > 0 for x in cfg.lambda0):
        raise UsageError("--lambda0: values must be > 0")
    if cfg.samples < 1:
        raise UsageError("--samples must be >= 1")
    if cfg.a is not None and not cfg.a > 0:
        raise UsageError("--a must be > 0")
    if cfg.subcommand == "fock-check":
        if cfg.nmax < 2:
            raise UsageError("--nmax must be >= 2")
        if not cfg.scale > 0:
            raise UsageError("--scale must be > 0")
    return cfg


def _report_row(job):
    spin, p, m, e2, spectrum, quad = job
    cfg = ParticleConfig(m=m, p=p * m, e2=e2)
    rep = compute(spin, cfg, spectrum.scaled(1.0 / m), quad, DEFAULT_NODES)
    return {
        "spin": spin.value,
        "p": p,
        "m": m,
        "e2": e2,
        "lambda0_or_spec": spectrum.lo if spectrum.kind == "delta" else str(spectrum),
        "delta_e": rep.delta_e,
        "delta_m": rep.delta_m,
        "quad_error": rep.quad.error,
        "evals": rep.quad.evals,
        "converged": rep.converged,
    }


def _workers(n_jobs):
    cap = os.environ.get("CUTOFFQED_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise UsageError(f"CUTOFFQED_THREADS must be an integer, got {cap!r}")
    return max(1, min(n, n_jobs))


def _map_ordered(fn, jobs):
    n = _workers(len(jobs))
    if n == 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, jobs))


def _run_compute(cfg):
    rows = [_report_row((cfg.spin, cfg.p, cfg.m, cfg.e2, cfg.regulator, cfg.quad))]
    return emit_csv(rows, REPORT_COLUMNS), (EXIT_OK if rows[0]["converged"] else EXIT_NOT_CONVERGED)


def _run_sweep(cfg):
    jobs = [(cfg.spin, p, cfg.m, cfg.e2, RegulatorSpectrum.delta(lam), cfg.quad)
            for lam in cfg.lambda0 for p in cfg.p_grid]
    rows = _map_ordered(_report_row, jobs)
    code = EXIT_OK if all(r["converged"] for r in rows) else EXIT_NOT_CONVERGED
    return emit_csv(rows, REPORT_COLUMNS), code


def _run_dump(cfg):
    m = cfg.m
    ks = np.logspace(-3, 6, cfg.samples) * m
    mus = np.linspace(-1.0, 1.0, 5)
    rows = []
    for lam, _ in weight_nodes(cfg.regulator.scaled(1.0 / m)):
        for k in ks:
            vals = subtracted_density(cfg.spin, cfg.p * m, m, k, mus, lam)
            rows.extend({"k": float(k), "mu": float(mu), "lambda": float(lam), "value": float(v)}
                        for mu, v in zip(mus, vals))
    return emit_csv(rows, ["k", "mu", "lambda", "value"]), EXIT_OK


def _check_lines(results, limits):
    lines, ok = [], True
    for name, val in results.items():
        if isinstance(val, bool):
            passed = val
        else:
            passed = limits(name, val)
        ok &= passed
        lines.append(f"{name} {_fmt(val)} {'PASS' if passed else 'FAIL'}")
    return "\n".join(lines) + "\n", (EXIT_OK if ok else EXIT_CHECK_FAILED)


def _run_podolsky(cfg):
    res = podolsky.random_identity_sweep(cfg.samples, cfg.seed, a=cfg.a)
    return _check_lines(res, lambda name, v: v <= CHECK_TOL_PODOLSKY)


def _run_fock(cfg):
    res = fockspace.full_check(cfg.nmax, cfg.scale)

    def limit(name, v):
        if name == "min_redefined_norm":
            return v > 0
        return v <= CHECK_TOL_FOCK

    return _check_lines(res, limit)


_DISPATCH = {
    "compute": _run_compute,
    "sweep": _run_sweep,
    "integrand-dump": _run_dump,
    "podolsky-check": _run_podolsky,
    "fock-check": _run_fock,
}


def run(argv=None) -> int:
    try:
        cfg = parse_run_config(sys.argv[1:] if argv is None else argv)
        text, code = _DISPATCH[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"cutoffqed: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return code


def main():
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
