"""Command-line front end: ``simulate``, ``quantify``, ``plot`` and ``verify``.

Exit codes: 0 ok, 1 property violation, 2 I/O or parse error, 3 numerical
drift, 4 invalid input.
"""

import argparse
import csv
import dataclasses
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import DensityMatrix, StateVector, diagonal, purity
from .errors import CoherenceLabError, InvalidState, NotPureState, PurityDrift
from .majorization import monotonicity_sweep
from .pulsesim import COLUMNS, INTERACTIONS, PulseConfig, QubitParams, evolve
from .quantifiers import (
    assert_pure,
    c_l1_normalized,
    c_re_normalized,
    pairwise_diagonal_sum,
    quantify,
)
from .svgplot import render_trajectory_svg

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_IO = 2
EXIT_DRIFT = 3
EXIT_INVALID = 4

STEPS_ENV = "COHERENCE_LAB_STEPS"

PRESETS = {
    "fig1a": PulseConfig(),
    "fig1b": PulseConfig(interacting=True),
    "fig2a": PulseConfig(QubitParams(0.5), QubitParams(1.0)),
    "fig2b": PulseConfig(QubitParams(0.5), QubitParams(1.0), interacting=True),
}
PRESET_CHOICES = tuple(PRESETS) + ("custom",)


class UsageError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunManifest:
    preset: str
    config: PulseConfig
    output_path: str
    seed: int = 0


# -- parsing helpers ---------------------------------------------------------


def parse_complex(text):
    t = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise UsageError(f"not a complex number: {text!r}", EXIT_INVALID) from None


def _parse_bool(text):
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def read_config_file(path):
    """Flat ``key=value`` file; blank lines and ``#`` comments are ignored."""
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}", EXIT_IO) from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}", EXIT_IO)
        key, val = (s.strip() for s in line.split("=", 1))
        values[key] = val
    return values


_CONFIG_KEYS = {
    "qubit1.detuning", "qubit2.detuning", "qubit1.rabi", "qubit2.rabi",
    "interacting", "interaction", "area_max", "steps", "initial_state",
}


def apply_settings(cfg, settings, source):
    """Return ``cfg`` with string-valued ``settings`` applied."""
    q1 = dict(detuning=cfg.qubit1.detuning, rabi=cfg.qubit1.rabi)
    q2 = dict(detuning=cfg.qubit2.detuning, rabi=cfg.qubit2.rabi)
    kw = {}
    for key, val in settings.items():
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{source}: unknown key {key!r}", EXIT_IO)
        try:
            if key.startswith("qubit"):
                target = q1 if key.startswith("qubit1") else q2
                field_name = key.split(".", 1)[1]
                target[field_name] = float(val) if field_name == "detuning" else parse_complex(val)
            elif key == "interacting":
                kw["interacting"] = _parse_bool(val)
            elif key == "interaction":
                kw["interaction"] = val
            elif key == "area_max":
                kw["area_max"] = float(val)
            elif key == "steps":
                kw["steps"] = int(val)
            elif key == "initial_state":
                amps = [parse_complex(t) for t in val.replace(",", " ").split()]
                kw["initial_state"] = StateVector.normalized(amps)[0]
        except ValueError as exc:
            raise UsageError(f"{source}: bad value for {key}: {exc}", EXIT_IO) from exc
    try:
        return dataclasses.replace(cfg, qubit1=QubitParams(**q1), qubit2=QubitParams(**q2), **kw)
    except CoherenceLabError as exc:
        raise UsageError(f"{source}: {exc}", EXIT_INVALID) from exc


def build_manifest(args, environ=os.environ):
    """Resolve presets, environment, config file and flags, in increasing precedence."""
    name = args.preset or "custom"
    cfg = PRESETS.get(name, PulseConfig())
    env_steps = environ.get(STEPS_ENV)
    if env_steps:
        cfg = apply_settings(cfg, {"steps": env_steps}, STEPS_ENV)
    if args.config:
        cfg = apply_settings(cfg, read_config_file(args.config), args.config)
    flags = {}
    if args.steps is not None:
        flags["steps"] = str(args.steps)
    if args.area_max is not None:
        flags["area_max"] = repr(args.area_max)
    if args.detuning1 is not None:
        flags["qubit1.detuning"] = repr(args.detuning1)
    if args.detuning2 is not None:
        flags["qubit2.detuning"] = repr(args.detuning2)
    if args.interacting is not None:
        flags["interacting"] = str(args.interacting)
    if args.interaction is not None:
        flags["interaction"] = args.interaction
    cfg = apply_settings(cfg, flags, "command line")
    if name in PRESETS and cfg != PRESETS[name]:
        name = "custom"
    return RunManifest(preset=name, config=cfg, output_path=args.out, seed=args.seed)


# -- CSV ---------------------------------------------------------------------


def format_trajectory_csv(traj):
    lines = [",".join(COLUMNS)]
    for row in traj.table():
        lines.append(",".join("%.17g" % v for v in row))
    return "\n".join(lines) + "\n"


def read_trajectory_csv(path):
    """Parse a trajectory CSV into ``{column: list of floats}``."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}", EXIT_IO) from exc
    if not rows or [c.strip() for c in rows[0]] != list(COLUMNS):
        raise UsageError(f"{path}:1: header must be {','.join(COLUMNS)}", EXIT_IO)
    cols = {c: [] for c in COLUMNS}
    for lineno, row in enumerate(rows[1:], 2):
        if not row:
            continue
        if len(row) != len(COLUMNS):
            raise UsageError(f"{path}:{lineno}: expected {len(COLUMNS)} fields, got {len(row)}", EXIT_IO)
        try:
            vals = [float(v) for v in row]
        except ValueError:
            raise UsageError(f"{path}:{lineno}: non-numeric field", EXIT_IO) from None
        if not all(math.isfinite(v) for v in vals):
            raise UsageError(f"{path}:{lineno}: non-finite value", EXIT_IO)
        for c, v in zip(COLUMNS, vals):
            cols[c].append(v)
    if not cols["area"]:
        raise UsageError(f"{path}: no data rows", EXIT_IO)
    return cols


def _write_text(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}", EXIT_IO) from exc


# -- commands ----------------------------------------------------------------


def cmd_simulate(manifest):
    try:
        traj = evolve(manifest.config)
    except (PurityDrift, NotPureState) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(
            f"hint: steps={manifest.config.steps} is too coarse for area_max="
            f"{manifest.config.area_max:g}; try --steps {max(4000, 10 * manifest.config.steps)}",
            file=sys.stderr,
        )
        return EXIT_DRIFT
    _write_text(manifest.output_path, format_trajectory_csv(traj))
    if manifest.output_path not in (None, "-"):
        print(f"wrote {len(traj)} samples ({manifest.preset}) to {manifest.output_path}", file=sys.stderr)
    return EXIT_OK


def _fmt(v):
    return f"{v:.12g}"


def read_matrix_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            rows = [ln.replace(",", " ").split() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}", EXIT_IO) from exc
    if not rows or any(len(r) != len(rows) for r in rows):
        raise UsageError(f"{path}: density matrix must be square", EXIT_INVALID)
    return np.array([[parse_complex(t) for t in r] for r in rows])


def cmd_quantify(amplitudes=(), matrix_path=None, force=False, out=None):
    out = out or sys.stdout
    if matrix_path is not None:
        return _quantify_matrix(matrix_path, force, out)
    if len(amplitudes) < 2:
        raise UsageError("need at least two amplitudes", EXIT_INVALID)
    amps = [parse_complex(a) for a in amplitudes]
    try:
        psi, norm = StateVector.normalized(amps)
    except InvalidState as exc:
        raise UsageError(str(exc), EXIT_INVALID) from exc
    vals = quantify(psi)
    print(f"N={psi.dim}", file=out)
    print(f"norm={_fmt(norm)}", file=out)
    print("populations=" + " ".join(_fmt(p) for p in psi.populations), file=out)
    for key in ("c_pdd", "distance_to_max", "c_l1", "c_re"):
        print(f"{key}={_fmt(vals[key])}", file=out)
    return EXIT_OK


def _quantify_matrix(path, force, out):
    try:
        rho = DensityMatrix(read_matrix_file(path))
    except InvalidState as exc:
        raise UsageError(f"{path}: {exc}", EXIT_INVALID) from exc
    n = rho.dim
    pur = purity(rho)
    try:
        assert_pure(rho)
        mixed = False
    except NotPureState as exc:
        if not force:
            raise UsageError(f"{exc} (use --force to evaluate the formula anyway)", EXIT_INVALID) from exc
        mixed = True
        print(
            "warning: mixed state; c_pdd below is the naive diagonal formula and is not a "
            "valid coherence value (the same diagonal admits different off-diagonal moduli)",
            file=sys.stderr,
        )
    d = pairwise_diagonal_sum(rho) / (2.0 * (n - 1))
    print(f"N={n}", file=out)
    print(f"purity={_fmt(pur)}", file=out)
    print("populations=" + " ".join(_fmt(p) for p in diagonal(rho)), file=out)
    print(f"c_pdd={_fmt(1.0 - d)}" + (" (forced)" if mixed else ""), file=out)
    print(f"distance_to_max={_fmt(d)}" + (" (forced)" if mixed else ""), file=out)
    print(f"c_l1={_fmt(c_l1_normalized(rho).value)}", file=out)
    print(f"c_re={_fmt(c_re_normalized(rho).value)}", file=out)
    return EXIT_OK


def cmd_plot(csv_path, svg_path):
    cols = read_trajectory_csv(csv_path)
    _write_text(svg_path, render_trajectory_svg(cols))
    return EXIT_OK


def cmd_verify(seed, n_cases, out=None):
    out = out or sys.stdout
    report = monotonicity_sweep(seed, n_cases)
    print(
        f"seed={seed} checked {report.n_cases} cases (N=2..8, {max(n_cases, 0)} per N), "
        f"{report.n_transformable} transformable, {len(report.counterexamples)} inconsistent",
        file=out,
    )
    for ce in report.counterexamples:
        print(
            f"counterexample N={ce['dim']} case={ce['case']}: "
            f"source={ce['source_populations']} c_source={ce['c_source']!r} "
            f"target={ce['target_populations']} c_target={ce['c_target']!r}",
            file=out,
        )
    return EXIT_OK if report.ok else EXIT_VIOLATION


# -- argument parsing --------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="coherence-lab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("simulate", help="integrate a two-qubit pulse run and write CSV")
    s.add_argument("--preset", choices=PRESET_CHOICES)
    s.add_argument("--config", help="key=value config file")
    s.add_argument("--out", default="-", help="CSV output path (default: stdout)")
    s.add_argument("--steps", type=int)
    s.add_argument("--area-max", type=float)
    s.add_argument("--detuning1", type=float)
    s.add_argument("--detuning2", type=float)
    s.add_argument("--interacting", action=argparse.BooleanOptionalAction, default=None)
    s.add_argument("--interaction", choices=INTERACTIONS)
    s.add_argument("--seed", type=int, default=0)

    q = sub.add_parser("quantify", help="evaluate all quantifiers on a state")
    q.add_argument("amplitudes", nargs="*", help="complex amplitudes, e.g. 1 0.5+0.5j")
    q.add_argument("--matrix", help="density-matrix file, one whitespace-separated row per line")
    q.add_argument("--force", action="store_true",
                   help="with --matrix, evaluate c_pdd on a mixed state anyway")

    pl = sub.add_parser("plot", help="render a trajectory CSV to SVG")
    pl.add_argument("csv")
    pl.add_argument("--out", help="SVG path (default: CSV path with .svg suffix)")

    v = sub.add_parser("verify", help="random monotonicity sweep for c_pdd")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--cases", type=int, default=10000, help="cases per dimension")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            return cmd_simulate(build_manifest(args))
        if args.command == "quantify":
            return cmd_quantify(args.amplitudes, args.matrix, args.force)
        if args.command == "plot":
            out = args.out or os.path.splitext(args.csv)[0] + ".svg"
            return cmd_plot(args.csv, out)
        return cmd_verify(args.seed, args.cases)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
