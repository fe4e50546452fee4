"""Command-line interface: every analysis operation as a subcommand.

Subcommands are thin adapters over the library; no numeric logic lives here.
Data goes to --out (or stdout) as CSV or JSON with deterministic bytes;
human-oriented summaries (escape fractions, cycle reports, unimodality) go to
stderr. Floats are emitted with 17 significant digits so they round-trip.

A config file (--config, one `key = value` per line, # comments) supplies
defaults for any long flag of the subcommand; explicit flags win. Unknown
keys are rejected.

Exit status: 0 success, 1 validation or runtime failure, 2 usage error.
"""

import argparse
import json
import os
import sys
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import _grid, _plots, bifurcation, lyapunov, numbertheory, orbit, roots, stats
from .errors import ArgumentError, ConfigError, DomainViolation, MissingFundamentalUnit
from .maps import DEFAULT_ESCAPE_BOUND, GOLDEN_RATIO, MapFamily, MapSpec

__all__ = ["build_parser", "run", "main"]

SUBCOMMANDS = (
    "lfunction",
    "orbit",
    "lyapunov",
    "sweep",
    "roots",
    "bifurcate",
    "entropy",
    "histogram",
)

_TRUE_WORDS = {"1", "true", "yes", "on"}
_FALSE_WORDS = {"0", "false", "no", "off"}


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_span(text: str) -> Tuple[float, float, int]:
    """lo:hi:count, or a bare scalar meaning a single grid point."""
    parts = text.split(":")
    if len(parts) == 1:
        v = float(parts[0])
        return v, v, 1
    if len(parts) == 3:
        return float(parts[0]), float(parts[1]), int(parts[2])
    raise ArgumentError(f"expected lo:hi:count or a single number, got {text!r}")


def _parse_interval(text: str) -> Tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ArgumentError(f"expected lo:hi, got {text!r}")
    return float(parts[0]), float(parts[1])


def _read_reals(path: str) -> List[float]:
    """One real per line; blank lines and # comments ignored."""
    values = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise ArgumentError(f"{path}:{lineno}: not a real number: {line!r}")
    return values


# ---------------------------------------------------------------------------
# parser construction
# ---------------------------------------------------------------------------


def _add_output_options(sub: argparse.ArgumentParser, default_format: Optional[str] = "csv"):
    sub.add_argument("--out", help="write data here instead of stdout")
    sub.add_argument(
        "--format",
        choices=("csv", "json"),
        default=default_format,
        help="data format (default %(default)s)",
    )
    sub.add_argument("--config", help="key = value file with flag defaults")


def _add_map_options(sub: argparse.ArgumentParser, scalar_params: bool = True):
    grp = sub.add_argument_group("map options")
    grp.add_argument("--family", choices=("odd", "even", "logistic"), help="map family")
    grp.add_argument("--h", type=int, default=1, help="class number (default %(default)s)")
    grp.add_argument("--w", type=int, default=2, help="roots of unity (default %(default)s)")
    grp.add_argument(
        "--beta", type=float, default=None, help="override beta = 2*pi*h/w directly"
    )
    grp.add_argument(
        "--epsilon",
        type=float,
        default=GOLDEN_RATIO,
        help="fundamental unit, even family (default golden ratio)",
    )
    if scalar_params:
        grp.add_argument("--c", type=float, default=0.0, help="power-term coefficient")
        grp.add_argument("--alpha", type=float, default=0.0, help="power-term exponent")
    grp.add_argument("--r", type=float, default=None, help="logistic parameter")
    grp.add_argument(
        "--escape-bound",
        type=float,
        default=DEFAULT_ESCAPE_BOUND,
        help="overflow cutoff (default %(default)g)",
    )


def _add_orbit_options(sub: argparse.ArgumentParser):
    sub.add_argument("--x0", type=float, default=orbit.DEFAULT_X0, help="initial point")
    sub.add_argument(
        "--n", type=int, default=orbit.DEFAULT_N_ITER, help="iterations (default %(default)s)"
    )
    sub.add_argument(
        "--transient",
        type=int,
        default=orbit.DEFAULT_TRANSIENT,
        help="discarded leading iterations (default %(default)s)",
    )


def build_parser() -> Tuple[argparse.ArgumentParser, Dict[str, Dict[str, argparse.Action]]]:
    """The CLI parser plus, per subcommand, its long options (for config validation)."""
    parser = argparse.ArgumentParser(
        prog="lfdyn",
        description="Discrete dynamics from L-function closed forms: "
        "orbits, Lyapunov sweeps, bifurcations, fixed points, entropy.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("lfunction", help="closed-form L(1,chi) values and log-space bounds")
    p.add_argument("--parity", type=int, choices=(-1, 1), help="character sign chi(-1)")
    p.add_argument("--h", type=int, default=1, help="class number (default %(default)s)")
    p.add_argument("--w", type=int, default=1, help="roots of unity (default %(default)s)")
    p.add_argument("--m", type=int, help="modulus (>= 3)")
    p.add_argument("--epsilon", type=float, default=None, help="fundamental unit (parity +1)")
    p.add_argument(
        "--bound",
        choices=("lower", "zero-free"),
        help="compute a log-space bound instead of the closed form",
    )
    p.add_argument("--modulus", type=float, help="bound modulus D or q (> 1)")
    p.add_argument("--constant", type=float, default=1.0, help="bound constant (default 1)")
    p.add_argument("--exponent", type=float, default=2022.0, help="bound exponent (default 2022)")
    _add_output_options(p, default_format=None)

    p = subs.add_parser("orbit", help="iterate an orbit; CSV columns n,x")
    _add_map_options(p)
    _add_orbit_options(p)
    p.add_argument(
        "--max-period",
        type=int,
        default=None,
        help="also run cycle detection up to this period (summary on stderr)",
    )
    p.add_argument("--cycle-tol", type=float, default=1e-6, help="cycle tolerance")
    _add_output_options(p)

    p = subs.add_parser("lyapunov", help="largest Lyapunov exponent of one orbit")
    _add_map_options(p)
    _add_orbit_options(p)
    p.add_argument("--log-floor", type=float, default=lyapunov.LOG_FLOOR)
    _add_output_options(p)

    p = subs.add_parser("sweep", help="Lyapunov exponents over a (c, alpha) grid")
    _add_map_options(p, scalar_params=False)
    p.add_argument("--c", default="0.0", help="c range lo:hi:count (or one value)")
    p.add_argument("--alpha", default="0.0", help="alpha range lo:hi:count (or one value)")
    _add_orbit_options(p)
    p.add_argument("--log-floor", type=float, default=lyapunov.LOG_FLOOR)
    p.add_argument("--workers", type=int, default=None, help="thread count (default: cpus)")
    p.add_argument("--plot", help="write an SVG heatmap here")
    _add_output_options(p)

    p = subs.add_parser("roots", help="Newton fixed-point solving over initial guesses")
    _add_map_options(p)
    p.add_argument("--guess", type=float, default=None, help="single initial guess")
    p.add_argument("--guesses", default=None, help="guess range lo:hi:count")
    p.add_argument("--tol", type=float, default=roots.DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=roots.DEFAULT_MAX_ITER)
    p.add_argument("--marginal-band", type=float, default=roots.DEFAULT_MARGINAL_BAND)
    _add_output_options(p)

    p = subs.add_parser("bifurcate", help="attractor samples along one parameter")
    _add_map_options(p)
    p.add_argument("--param", choices=("c", "alpha", "r"), help="swept parameter")
    p.add_argument("--range", dest="param_range", help="parameter range lo:hi:count")
    _add_orbit_options(p)
    p.add_argument(
        "--samples",
        type=int,
        default=bifurcation.DEFAULT_SAMPLES_PER_PARAM,
        help="attractor samples kept per parameter value",
    )
    p.add_argument("--cluster-tol", type=float, default=bifurcation.DEFAULT_CLUSTER_TOL)
    p.add_argument("--workers", type=int, default=None, help="thread count (default: cpus)")
    p.add_argument("--branches-out", help="also write param,branches CSV here")
    p.add_argument("--plot", help="write an SVG scatter here")
    _add_output_options(p)

    p = subs.add_parser("entropy", help="Shannon entropy of values, exponent-sum of a list")
    p.add_argument("--values", help="file of reals to histogram, one per line")
    p.add_argument("--lyapunov-file", help="file of Lyapunov exponents, one per line")
    p.add_argument("--bins", type=int, default=10)
    p.add_argument("--range", dest="value_range", help="histogram range lo:hi")
    _add_output_options(p)

    p = subs.add_parser("histogram", help="equal-width histogram; CSV columns bin_lo,bin_hi,count")
    p.add_argument("--values", help="file of reals, one per line")
    p.add_argument("--bins", type=int, default=10)
    p.add_argument("--range", dest="value_range", help="histogram range lo:hi")
    p.add_argument("--check-unimodal", action="store_true", help="report unimodality on stderr")
    p.add_argument("--smoothing-window", type=int, default=1)
    p.add_argument("--plot", help="write an SVG bar chart here")
    _add_output_options(p)

    options: Dict[str, Dict[str, argparse.Action]] = {}
    for name, sub in subs.choices.items():
        table: Dict[str, argparse.Action] = {}
        for action in sub._actions:
            for opt in action.option_strings:
                if opt.startswith("--") and opt not in ("--help", "--config"):
                    table[opt[2:]] = action
        options[name] = table
    return parser, options


# ---------------------------------------------------------------------------
# config handling
# ---------------------------------------------------------------------------


def _load_config(path: str) -> List[Tuple[str, str]]:
    entries = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value, got {line!r}")
            key, _, value = line.partition("=")
            entries.append((key.strip().replace("_", "-"), value.strip()))
    return entries


def _config_argv(path: str, command: str, table: Dict[str, argparse.Action]) -> List[str]:
    argv: List[str] = []
    for key, value in _load_config(path):
        action = table.get(key)
        if action is None:
            raise ConfigError(f"{path}: unknown key {key!r} for subcommand {command!r}")
        if isinstance(action, argparse._StoreTrueAction):
            word = value.lower()
            if word in _TRUE_WORDS:
                argv.append(f"--{key}")
            elif word not in _FALSE_WORDS:
                raise ConfigError(f"{path}: {key!r} expects a boolean, got {value!r}")
        else:
            argv.extend([f"--{key}", value])
    return argv


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return _fmt(v)
    return str(v)


def _emit(header: Sequence[str], rows: Sequence[Sequence], fmt: str, out: Optional[str]):
    if fmt == "json":
        records = [dict(zip(header, row)) for row in rows]
        text = json.dumps(records, indent=2) + "\n"
    else:
        lines = [",".join(header)]
        lines.extend(",".join(_csv_cell(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(message: str) -> None:
    print(message, file=sys.stderr)


# ---------------------------------------------------------------------------
# handlers
# ---------------------------------------------------------------------------


def _spec_from_args(args, with_scalar_params: bool = True) -> MapSpec:
    if args.family is None:
        raise ArgumentError("missing --family (odd, even, or logistic)")
    kwargs = dict(
        family=MapFamily(args.family),
        h=args.h,
        w=args.w,
        epsilon=args.epsilon,
        escape_bound=args.escape_bound,
    )
    if with_scalar_params:
        kwargs["c"] = args.c
        kwargs["alpha"] = args.alpha
    if args.beta is not None:
        kwargs["beta_override"] = args.beta
    if args.r is not None:
        kwargs["r"] = args.r
    return MapSpec(**kwargs)


def _workers(args) -> int:
    if args.workers is None:
        return os.cpu_count() or 1
    if args.workers < 1:
        raise ArgumentError(f"--workers must be >= 1, got {args.workers}")
    return args.workers


def _lyap_status(est: lyapunov.LyapunovEstimate) -> str:
    if est.status is lyapunov.LyapunovStatus.ESCAPED:
        return f"escaped:{est.escape_step}"
    return est.status.value


def _cmd_lfunction(args) -> int:
    if args.bound is not None:
        if args.modulus is None:
            raise ArgumentError("--bound requires --modulus")
        inputs = numbertheory.BoundInputs(args.modulus, args.constant, args.exponent)
        if args.bound == "lower":
            value = numbertheory.log_lower_bound(inputs)
        else:
            value = numbertheory.log_zero_free_bound(inputs)
    else:
        if args.parity is None or args.m is None:
            raise ArgumentError("need --parity and --m (or --bound with --modulus)")
        inputs = numbertheory.LFunctionInputs(args.parity, args.h, args.w, args.m, args.epsilon)
        value = numbertheory.dirichlet_l_at_1(inputs)
    if args.format is None and args.out is None:
        sys.stdout.write(_fmt(value) + "\n")
    else:
        _emit(["value"], [[value]], args.format or "csv", args.out)
    return 0


def _cmd_orbit(args) -> int:
    spec = _spec_from_args(args)
    rec = orbit.iterate_orbit(spec, args.x0, args.n, args.transient)
    rows = [
        [rec.transient_len + 1 + i, float(x)] for i, x in enumerate(rec.samples)
    ]
    _emit(["n", "x"], rows, args.format, args.out)
    if rec.escape is not None:
        _note(f"orbit escaped at step {rec.escape.step} ({rec.escape.reason.value})")
    if args.max_period is not None:
        report = orbit.detect_cycle(rec, args.max_period, args.cycle_tol)
        if report.period is None:
            _note(f"no cycle of period <= {args.max_period} at tol {args.cycle_tol:g}")
        else:
            pts = ", ".join(_fmt(p) for p in report.points)
            _note(f"cycle: period {report.period}, points [{pts}]")
    return 0


def _cmd_lyapunov(args) -> int:
    spec = _spec_from_args(args)
    est = lyapunov.lyapunov_exponent(spec, args.x0, args.n, args.transient, args.log_floor)
    _emit(
        ["lambda", "n_used", "status"],
        [[est.exponent, est.n_used, _lyap_status(est)]],
        args.format,
        args.out,
    )
    return 0


def _cmd_sweep(args) -> int:
    spec = _spec_from_args(args, with_scalar_params=False)
    grid = lyapunov.sweep_grid(
        spec,
        _parse_span(args.c),
        _parse_span(args.alpha),
        x0=args.x0,
        n_iter=args.n,
        transient=args.transient,
        workers=_workers(args),
        log_floor=args.log_floor,
    )
    rows = []
    for i, cv in enumerate(grid.c_axis):
        for j, av in enumerate(grid.alpha_axis):
            cell = grid.cells[i][j]
            rows.append([float(cv), float(av), cell.exponent, _lyap_status(cell)])
    _emit(["c", "alpha", "lambda", "status"], rows, args.format, args.out)
    _note(f"escaped fraction: {grid.escaped_fraction():.6f}")
    if args.plot:
        _plots.save_heatmap(grid, args.plot)
    return 0


def _cmd_roots(args) -> int:
    spec = _spec_from_args(args)
    if (args.guess is None) == (args.guesses is None):
        raise ArgumentError("need exactly one of --guess or --guesses")
    if args.guess is not None:
        guesses = [args.guess]
    else:
        guesses = [float(g) for g in _grid.axis(_parse_span(args.guesses), "guesses")]
    reports = roots.guess_sweep(spec, guesses, args.tol, args.max_iter, args.marginal_band)
    rows = []
    for rep in reports:
        rows.append(
            [
                rep.guess,
                rep.root,
                rep.derivative_at_root,
                rep.stability.value if rep.stability else None,
                "ok" if rep.failure is None else rep.failure.value,
            ]
        )
    _emit(["guess", "root", "derivative", "stability", "status"], rows, args.format, args.out)
    return 0


def _cmd_bifurcate(args) -> int:
    spec = _spec_from_args(args)
    if args.param is None or args.param_range is None:
        raise ArgumentError("need --param and --range")
    data = bifurcation.bifurcation_diagram(
        spec,
        args.param,
        _parse_span(args.param_range),
        x0=args.x0,
        n_iter=args.n,
        transient=args.transient,
        samples_per_param=args.samples,
        cluster_tol=args.cluster_tol,
        workers=_workers(args),
    )
    rows = []
    for value, samples in zip(data.param_values, data.attractor_samples):
        for x in samples:
            rows.append([float(value), float(x)])
    _emit([data.param_name, "x"], rows, args.format, args.out)
    escaped = int(np.count_nonzero(data.branch_counts == 0))
    if escaped:
        _note(f"escaped parameter values: {escaped}/{len(data.param_values)}")
    if args.branches_out:
        branch_rows = [
            [float(v), int(b)] for v, b in zip(data.param_values, data.branch_counts)
        ]
        _emit([data.param_name, "branches"], branch_rows, "csv", args.branches_out)
    if args.plot:
        _plots.save_bifurcation_scatter(data, args.plot)
    return 0


def _cmd_entropy(args) -> int:
    if args.values is None and args.lyapunov_file is None:
        raise ArgumentError("need --values and/or --lyapunov-file")
    shannon_raw = shannon_norm = pesin = None
    if args.values is not None:
        rng = _parse_interval(args.value_range) if args.value_range else None
        hist = stats.histogram(_read_reals(args.values), args.bins, rng)
        shannon_raw, shannon_norm = stats.shannon_entropy(hist)
    if args.lyapunov_file is not None:
        pesin = stats.pesin_entropy(_read_reals(args.lyapunov_file))
    _emit(
        ["shannon_raw", "shannon_normalized", "pesin"],
        [[shannon_raw, shannon_norm, pesin]],
        args.format,
        args.out,
    )
    return 0


def _cmd_histogram(args) -> int:
    if args.values is None:
        raise ArgumentError("need --values")
    rng = _parse_interval(args.value_range) if args.value_range else None
    hist = stats.histogram(_read_reals(args.values), args.bins, rng)
    rows = [
        [float(hist.edges[i]), float(hist.edges[i + 1]), int(hist.counts[i])]
        for i in range(hist.bins)
    ]
    _emit(["bin_lo", "bin_hi", "count"], rows, args.format, args.out)
    if args.check_unimodal:
        ok, center = stats.unimodality_check(hist, args.smoothing_window)
        if ok:
            _note(f"unimodal: yes, mode center {_fmt(center)}")
        else:
            _note("unimodal: no")
    if args.plot:
        _plots.save_histogram(hist, args.plot)
    return 0


_HANDLERS = {
    "lfunction": _cmd_lfunction,
    "orbit": _cmd_orbit,
    "lyapunov": _cmd_lyapunov,
    "sweep": _cmd_sweep,
    "roots": _cmd_roots,
    "bifurcate": _cmd_bifurcate,
    "entropy": _cmd_entropy,
    "histogram": _cmd_histogram,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, execute one subcommand, and return the exit status."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, option_tables = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        if getattr(args, "config", None):
            injected = _config_argv(args.config, args.command, option_tables[args.command])
            merged = [argv[0]] + injected + argv[1:]
            try:
                args = parser.parse_args(merged)
            except SystemExit:
                print("error: invalid value in config file", file=sys.stderr)
                return 1
        return _HANDLERS[args.command](args)
    except (
        ArgumentError,
        ConfigError,
        DomainViolation,
        MissingFundamentalUnit,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
