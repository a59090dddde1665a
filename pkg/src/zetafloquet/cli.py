"""Batch front end.

Exit codes: 0 success, 1 invariant or estimation failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from dataclasses import dataclass, fields
from importlib import resources

import numpy as np

from . import BACKEND, __version__
from .csvio import read_csv, write_csv
from .errors import DomainError, EstimationFailed, InvariantViolation, UsageError
from .floquet import effective_tunneling, propagate_period, quasienergies
from .measurement import read_scan_csv, scan, write_scan_csv
from .primes import (DEFAULT_PROMINENCE, default_grid, detect_peaks, h_function, staircase,
                     write_peaks_csv, write_samples_csv)
from .tables import MEASURED_ZEROS
from .waveform import DrivingSpec, sine_coefficients, write_waveform_csv
from .zeros import RIEMANN, extract_zeros, write_zero_csv
from .zeta import g_value, known_zeros, re_g_via_vdp

log = logging.getLogger("zetafloquet")

OUTPUT_DIR_ENV = "ZETAFLOQUET_OUTPUT_DIR"
EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    omega: float = 8.0
    e_min: float = 10.0
    e_max: float = 105.0
    e_step: float = 0.25
    shots: int | None = None  # None: 2000 for E <= 100, 5000 above; 0: exact
    seed: int = 0
    n_terms: int = 500
    quad_points: int = 512
    substeps: int = 8192
    n_boot: int = 4000
    threshold: float = 0.1
    jobs: int = 1
    output_dir: str = ""
    # primes
    source: str = "exact"
    max_height: float = 100.0
    x_min: float = 1.5
    x_max: float = 20.0
    x_step: float = 0.001
    prominence: float = DEFAULT_PROMINENCE

    def validate(self) -> "RunConfig":
        if not self.e_step > 0:
            raise UsageError(f"e_step must be positive, got {self.e_step}")
        if self.e_min > self.e_max:
            raise UsageError(f"e_min ({self.e_min}) must not exceed e_max ({self.e_max})")
        if self.shots is not None and self.shots < 0:
            raise UsageError(f"shots must be >= 0, got {self.shots}")
        if self.jobs < 1:
            raise UsageError(f"jobs must be >= 1, got {self.jobs}")
        if self.seed < 0:
            raise UsageError(f"seed must be unsigned, got {self.seed}")
        return self

    def grid(self) -> np.ndarray:
        n = int(math.floor((self.e_max - self.e_min) / self.e_step + 1e-9))
        return self.e_min + self.e_step * np.arange(n + 1)

    def spec_kwargs(self) -> dict:
        return {"n_terms": self.n_terms, "quad_points": self.quad_points, "substeps": self.substeps}


_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _coerce(key: str, raw: str):
    kind = _FIELD_TYPES[key]
    raw = raw.strip()
    if key == "shots":
        return None if raw.lower() in ("", "auto", "none") else int(raw)
    if kind in ("int", int):
        return int(raw)
    if kind in ("float", float):
        return float(raw)
    return raw


def parse_config(text: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected 'key = value', got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _FIELD_TYPES:
            raise UsageError(f"config line {lineno}: unknown key {key!r}")
        try:
            out[key] = _coerce(key, value)
        except ValueError as exc:
            raise UsageError(f"config line {lineno}: bad value for {key}: {exc}") from None
    return out


def load_config(path: str | None) -> dict:
    if not path:
        return {}
    if path.startswith("recipe:"):
        name = path.split(":", 1)[1]
        try:
            text = resources.files("zetafloquet").joinpath("configs", f"{name}.cfg").read_text()
        except FileNotFoundError:
            raise UsageError(f"no built-in recipe {name!r}; see `zetafloquet recipes`") from None
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
    return parse_config(text)


def build_config(args) -> RunConfig:
    values = load_config(getattr(args, "config", None))
    for key in _FIELD_TYPES:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    if getattr(args, "exact", False):
        values["shots"] = 0
    return RunConfig(**values).validate()


def _destination(args, cfg: RunConfig, default_name: str):
    if args.out:
        return args.out
    out_dir = cfg.output_dir or os.environ.get(OUTPUT_DIR_ENV) or "."
    return os.path.join(out_dir, default_name)


def _progress(done: int, total: int) -> None:
    if done == total or done % max(1, total // 20) == 0:
        print(f"\r{done}/{total}", end="\n" if done == total else "", file=sys.stderr, flush=True)


# subcommands --------------------------------------------------------------


def cmd_verify_zeta(args) -> int:
    cfg = build_config(args)
    grid = cfg.grid()
    direct = np.real(g_value(grid))
    rows, worst = [], 0.0
    for E, rd in zip(grid, direct):
        rv = re_g_via_vdp(float(E), args.t_max)
        diff = abs(rd - rv)
        worst = max(worst, diff)
        rows.append([float(E), float(rd), rv, diff])
    write_csv(_destination(args, cfg, "verify_zeta.csv"), ["E", "re_g_direct", "re_g_vdp", "abs_diff"], rows)
    print(f"max |difference| = {worst:.3g} over {len(rows)} points", file=sys.stderr)
    return EXIT_OK if worst <= args.tol else EXIT_FAILURE


def cmd_waveform(args) -> int:
    cfg = build_config(args)
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    w = sine_coefficients(DrivingSpec(E=args.E, omega=cfg.omega, **cfg.spec_kwargs()))
    write_waveform_csv(_destination(args, cfg, "waveform.csv"), w, args.samples)
    print(f"{len(w.b)} coefficients, {args.samples} samples over [0, {w.period:.6g})", file=sys.stderr)
    return EXIT_OK


def _quasienergy_row(task):
    E, omega, kw = task
    w = sine_coefficients(DrivingSpec(E=E, omega=omega, **kw))
    spec = quasienergies(propagate_period(w))
    j = effective_tunneling(w).value
    return [E, omega, spec.epsilon, j.real, j.imag]


def cmd_quasienergy(args) -> int:
    cfg = build_config(args)
    tasks = [(float(E), cfg.omega, cfg.spec_kwargs()) for E in cfg.grid()]
    if cfg.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(cfg.jobs) as pool:
            rows = list(pool.map(_quasienergy_row, tasks))
    else:
        rows = [_quasienergy_row(t) for t in tasks]
    write_csv(_destination(args, cfg, "quasienergy.csv"), ["E", "omega", "epsilon", "re_jeff", "im_jeff"], rows)
    return EXIT_OK


def cmd_scan(args) -> int:
    cfg = build_config(args)
    grid = cfg.grid()
    print(f"scan omega={cfg.omega:g} E in [{grid[0]:g}, {grid[-1]:g}] ({len(grid)} points), "
          f"shots={'auto' if cfg.shots is None else cfg.shots}, jobs={cfg.jobs}", file=sys.stderr)
    records = scan(cfg.omega, grid, shots=cfg.shots, seed=cfg.seed, jobs=cfg.jobs,
                   progress=None if args.quiet else _progress, **cfg.spec_kwargs())
    write_scan_csv(_destination(args, cfg, "scan.csv"), records)
    failed = [r for r in records if r.error]
    if failed:
        print(f"{len(failed)} grid points failed; first: E={failed[0].E}: {failed[0].error}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_extract(args) -> int:
    cfg = build_config(args)
    try:
        records = read_scan_csv(args.scan_csv)
    except OSError as exc:
        raise UsageError(f"cannot read scan table: {exc}") from None
    records = [r for r in records if math.isfinite(r.S)]
    estimates = extract_zeros(records, n_boot=cfg.n_boot, seed=cfg.seed, threshold=cfg.threshold)
    if not estimates:
        print("warning: no sign changes of S in the scan", file=sys.stderr)
    write_zero_csv(_destination(args, cfg, "zeros.csv"), estimates)
    n_r = sum(e.kind == RIEMANN for e in estimates)
    print(f"{len(estimates)} crossings, {n_r} classified riemann", file=sys.stderr)
    return EXIT_OK


def _zeros_from_source(source: str, max_height: float) -> list:
    if source == "exact":
        zs = list(known_zeros())
    elif source.startswith("omega"):
        try:
            table = MEASURED_ZEROS[int(source[5:])]
        except (KeyError, ValueError):
            raise UsageError(f"no measured zeros for {source!r}; choose from "
                             f"{', '.join('omega%d' % k for k in MEASURED_ZEROS)}") from None
        zs = [m for _, m, _ in table]
    else:
        raise UsageError(f"unknown zero source {source!r}")
    return [z for z in zs if abs(z) < max_height]


def _zeros_from_csv(path: str, max_height: float) -> list:
    try:
        header, rows = read_csv(path)
    except OSError as exc:
        raise UsageError(f"cannot read zeros table: {exc}") from None
    for col in ("E_mean", "E"):
        if col in header:
            i = header.index(col)
            break
    else:
        raise UsageError(f"zeros table needs an 'E_mean' or 'E' column, got {header}")
    k = header.index("kind") if "kind" in header else None
    zs = [float(r[i]) for r in rows if k is None or r[k] == RIEMANN]
    return [z for z in zs if abs(z) < max_height]


def cmd_primes(args) -> int:
    cfg = build_config(args)
    if args.zeros:
        zs = _zeros_from_csv(args.zeros, cfg.max_height)
    else:
        zs = _zeros_from_source(cfg.source, cfg.max_height)
    if not zs:
        raise UsageError("no zeros to sum over")
    x = default_grid(cfg.x_min, cfg.x_max, cfg.x_step)
    if x[0] <= 1.0:
        raise UsageError("x_min must exceed 1")
    h = h_function(x, zs)
    J = staircase(x).J
    write_samples_csv(_destination(args, cfg, "primes_samples.csv"), x, h, J)
    peaks = detect_peaks(x, h, cfg.prominence * float(np.max(np.abs(h))))
    peaks_dest = args.peaks_out or os.path.join(
        cfg.output_dir or os.environ.get(OUTPUT_DIR_ENV) or ".", "primes_peaks.csv")
    write_peaks_csv(peaks_dest, peaks)
    print(f"{len(zs)} zeros, {len(peaks)} peaks: "
          + " ".join(f"{p.x_peak:.3f}" for p in peaks), file=sys.stderr)
    return EXIT_OK


def cmd_recipes(args) -> int:
    for entry in sorted(resources.files("zetafloquet").joinpath("configs").iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".cfg"):
            first = entry.read_text().splitlines()[0].lstrip("# ").strip()
            print(f"recipe:{entry.name[:-4]:<10} {first}")
    return EXIT_OK


# parser -------------------------------------------------------------------


def _common(p):
    p.add_argument("--config", help="key = value file, or recipe:NAME for a built-in figure recipe")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, help="worker processes")
    p.add_argument("--out", help="output CSV path ('-' for standard output)")
    p.add_argument("--output-dir", dest="output_dir", help=f"default output directory (env {OUTPUT_DIR_ENV})")


def _grid_flags(p):
    p.add_argument("--omega", type=float)
    p.add_argument("--e-min", dest="e_min", type=float)
    p.add_argument("--e-max", dest="e_max", type=float)
    p.add_argument("--e-step", "--step", dest="e_step", type=float)


def _drive_flags(p):
    p.add_argument("--n-terms", dest="n_terms", type=int)
    p.add_argument("--quad-points", dest="quad_points", type=int)
    p.add_argument("--substeps", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetafloquet", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} (backend: {BACKEND})")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-zeta", help="compare Re g from zeta with the van der Pol integral")
    _common(p)
    _grid_flags(p)
    p.add_argument("--t-max", type=float, default=60.0)
    p.add_argument("--tol", type=float, default=1e-4)
    p.set_defaults(func=cmd_verify_zeta)

    p = sub.add_parser("waveform", help="export sampled driving function f(t) over one period")
    _common(p)
    p.add_argument("--E", type=float, required=True)
    p.add_argument("--omega", type=float)
    _drive_flags(p)
    p.add_argument("--samples", type=int, default=4096)
    p.set_defaults(func=cmd_waveform)

    p = sub.add_parser("quasienergy", help="quasienergy and J_eff over an E grid")
    _common(p)
    _grid_flags(p)
    _drive_flags(p)
    p.set_defaults(func=cmd_quasienergy)

    p = sub.add_parser("scan", help="simulate the S-parameter scan")
    _common(p)
    _grid_flags(p)
    _drive_flags(p)
    p.add_argument("--shots", type=int, help="shots per population (0 = exact; default 2000/5000 split)")
    p.add_argument("--exact", action="store_true", help="same as --shots 0")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("extract", help="bootstrap zero positions from a scan table")
    _common(p)
    p.add_argument("scan_csv")
    p.add_argument("--n-boot", dest="n_boot", type=int)
    p.add_argument("--threshold", type=float)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("primes", help="h(x) and J(x) from a set of zeros, with detected peaks")
    _common(p)
    p.add_argument("--zeros", help="CSV with an E_mean (extract output) or E column")
    p.add_argument("--source", help="built-in zeros: exact, omega5, omega8, omega12, omega16")
    p.add_argument("--max-height", dest="max_height", type=float)
    p.add_argument("--x-min", dest="x_min", type=float)
    p.add_argument("--x-max", dest="x_max", type=float)
    p.add_argument("--x-step", dest="x_step", type=float)
    p.add_argument("--prominence", type=float, help="peak prominence as a fraction of max|h|")
    p.add_argument("--peaks-out", dest="peaks_out")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("recipes", help="list built-in figure recipes")
    p.set_defaults(func=cmd_recipes)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"zetafloquet {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantViolation, EstimationFailed) as exc:
        print(f"zetafloquet {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
