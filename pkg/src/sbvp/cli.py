"""Command line interface.

Subcommands:

* ``solve``: solve a problem, chosen by preset name or spelled out with
  ``--alpha/--family/--param/--bc``, and print the result as key: value
  lines followed by one or more tables.
* ``adomian-bench``: cross-check the convolution route for Adomian
  polynomials against the definitional route on random component sets and
  report timings.
* ``backend``: print which kernel backend (compiled or python) is active.

Exit codes: 0 on a converged solve, 2 when the solve finished but the root
chain did not converge (tables are still printed, a warning goes to
stderr), 1 for usage, config, or domain errors.
"""

import argparse
import math
import sys
import time

import numpy as np

from ._backend import backend_name
from .adomian import adomian_duan, adomian_oracle
from .diagnostics import (
    EXACT_KINDS,
    abs_error,
    closed_grid,
    error_bound,
    exact_solution,
    half_open_grid,
    residual,
)
from .errors import (
    BlowupError,
    BoundUnavailableError,
    ConfigError,
    DomainError,
    RangeError,
    SingularityError,
    UsageError,
)
from .nonlinearity import FAMILIES, Nonlinearity
from .solver import CONVERGENCE_TOL, DEFAULT_SCAN, SbvpProblem, solve

EMITS = ("coeffs", "solution", "error", "residual", "bound")

PRESETS = {
    "isothermal-gas-sphere": {
        "alpha": 2.0,
        "family": "power_law",
        "params": {"gamma": 5.0},
        "bc": (1.0, 0.0, math.sqrt(3.0) / 2.0),
        "exact": "isothermal-gas-sphere",
    },
    "thermal-explosion": {
        "alpha": 1.0,
        "family": "thermal_explosion",
        "params": {"nu": -1.0},
        "bc": (1.0, 0.0, 0.0),
        "exact": "thermal-explosion",
    },
    "oxygen-diffusion": {
        "alpha": 2.0,
        "family": "michaelis_menten",
        "params": {"delta": 0.76129, "mu": 0.03119},
        "bc": (5.0, 1.0, 5.0),
        "exact": None,
    },
    "human-head": {
        "alpha": 2.0,
        "family": "heat_source",
        "params": {"l": 1.0, "kappa": 1.0},
        "bc": (1.0, 1.0, 0.0),
        "exact": None,
    },
    "human-head-case-two": {
        "alpha": 2.0,
        "family": "heat_source",
        "params": {"l": 1.0, "kappa": 1.0},
        "bc": (0.1, 1.0, 0.0),
        "exact": None,
    },
    "membrane-cap": {
        "alpha": 3.0,
        "family": "membrane_cap",
        "params": {},
        "bc": (1.0, 0.0, 1.0),
        "exact": None,
    },
}


# -- small string parsers (shared by flags and config values) -----------------


def _parse_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise UsageError(f"expected a number, got {text!r}") from None
    if not math.isfinite(v):
        raise UsageError(f"expected a finite number, got {text!r}")
    return v


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None


def _parse_bc(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise UsageError(f"bc needs three comma-separated numbers, got {text!r}")
    return tuple(_parse_float(p) for p in parts)


def _parse_scan(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise UsageError(f"scan needs lo,hi,steps, got {text!r}")
    return (_parse_float(parts[0]), _parse_float(parts[1]), _parse_int(parts[2]))


def _parse_ladder(text: str):
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError("ladder needs comma-separated orders")
    return tuple(_parse_int(p) for p in parts)


def _parse_emit(text: str):
    names = [p.strip() for p in text.split(",") if p.strip()]
    if names == ["all"]:
        return EMITS
    out = []
    for name in names:
        if name not in EMITS:
            raise UsageError(
                f"unknown emit {name!r}; choose from {', '.join(EMITS)} or all"
            )
        if name not in out:
            out.append(name)
    if not out:
        raise UsageError("emit list is empty")
    return tuple(out)


def _parse_params(pairs):
    params = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        name = name.strip()
        if not sep or not name:
            raise UsageError(f"parameter must look like name=value, got {pair!r}")
        params[name] = _parse_float(value.strip())
    return params


def _parse_choice(choices, what):
    def parse(text: str):
        if text not in choices:
            raise UsageError(
                f"unknown {what} {text!r}; choose from {', '.join(sorted(choices))}"
            )
        return text

    return parse


# -- config files --------------------------------------------------------------

_CONFIG_KEYS = (
    "preset",
    "family",
    "alpha",
    "bc",
    "order",
    "ladder",
    "scan",
    "grid",
    "exact",
    "emit",
    "format",
)


def parse_config(path: str):
    """Read a flat key=value config file; values stay raw strings.

    Blank lines and # comments are ignored.  Keys are the long solve options
    plus param.<name> for nonlinearity parameters.  Returns a mapping of
    key -> (line number, raw value); unknown or duplicate keys are errors.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw_lines = fh.readlines()
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from None
    entries = {}
    for lineno, raw in enumerate(raw_lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not sep or not key:
            raise ConfigError(f"{path} line {lineno}: expected key=value, got {line!r}")
        known = key in _CONFIG_KEYS or (
            key.startswith("param.") and len(key) > len("param.")
        )
        if not known:
            raise ConfigError(f"{path} line {lineno}: unknown key {key!r}")
        if key in entries:
            raise ConfigError(f"{path} line {lineno}: duplicate key {key!r}")
        entries[key] = (lineno, value)
    return entries


def _cfg_get(cfg, path, key, parse):
    if key not in cfg:
        return None
    lineno, raw = cfg[key]
    try:
        return parse(raw)
    except UsageError as e:
        raise ConfigError(f"{path} line {lineno}: {e}") from None


# -- argument parsing ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # Route argparse's own complaints through the package error type so the
    # exit-code policy lives in one place.
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="sbvp",
        description="Series solver for singular boundary value problems "
        "u'' + (alpha/x) u' = f(u) on (0, 1].",
    )
    sub = p.add_subparsers(dest="cmd", required=True, metavar="command")

    ps = sub.add_parser(
        "solve",
        help="solve a problem and print tables",
        description="Solve a preset or explicitly specified problem.",
    )
    ps.add_argument("--preset", choices=sorted(PRESETS), help="named problem")
    ps.add_argument("--family", choices=FAMILIES, help="nonlinearity family")
    ps.add_argument(
        "--param",
        action="append",
        default=None,
        metavar="NAME=VALUE",
        help="nonlinearity parameter (repeatable)",
    )
    ps.add_argument("--alpha", type=_parse_float, help="shape parameter, >= 1")
    ps.add_argument(
        "--bc", type=_parse_bc, metavar="A,B,C", help="boundary condition a,b,c"
    )
    ps.add_argument("--order", type=_parse_int, help="truncation order (default 10)")
    ps.add_argument(
        "--ladder",
        type=_parse_ladder,
        metavar="N1,N2,...",
        help="order ladder for root chaining (default: derived from --order)",
    )
    ps.add_argument(
        "--scan",
        type=_parse_scan,
        metavar="LO,HI,STEPS",
        help=f"beta scan range (default {DEFAULT_SCAN[0]},{DEFAULT_SCAN[1]},{DEFAULT_SCAN[2]})",
    )
    ps.add_argument(
        "--grid", type=_parse_int, help="points in dense output grids (default 1001)"
    )
    ps.add_argument(
        "--exact",
        choices=EXACT_KINDS + ("none",),
        help="closed-form solution for --emit error/bound",
    )
    ps.add_argument(
        "--emit",
        type=_parse_emit,
        metavar="LIST",
        help="comma list of coeffs,solution,error,residual,bound or all "
        "(default coeffs,solution)",
    )
    ps.add_argument("--format", dest="fmt", choices=("text", "csv"))
    ps.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    ps.add_argument("--config", metavar="FILE", help="key=value config file")

    pb = sub.add_parser(
        "adomian-bench",
        help="cross-check and time the Adomian polynomial routes",
        description="Compare the convolution recurrence against the "
        "definitional series lift on random component sets.",
    )
    pb.add_argument("--family", choices=FAMILIES, default="membrane_cap")
    pb.add_argument("--param", action="append", default=None, metavar="NAME=VALUE")
    pb.add_argument("--order", type=_parse_int, default=12)
    pb.add_argument("--trials", type=_parse_int, default=200)
    pb.add_argument("--seed", type=_parse_int, default=0)

    sub.add_parser("backend", help="print the active kernel backend")
    return p


# -- output rendering ----------------------------------------------------------


def _t(v) -> str:
    """Text format: 10 significant digits."""
    return format(float(v), ".10g")


def _r(v) -> str:
    """CSV format: shortest round-trip representation."""
    return repr(float(v))


def _render(fmt, meta, tables) -> str:
    """Serialize (key, value) meta rows and named tables to one stream."""
    out = []
    if fmt == "csv":
        out.append("# table: meta")
        out.append("key,value")
        for key, value in meta:
            out.append(f"{key},{value}")
        for name, header, rows in tables:
            out.append("")
            out.append(f"# table: {name}")
            out.append(",".join(header))
            for row in rows:
                out.append(",".join(row))
    else:
        for key, value in meta:
            out.append(f"{key}: {value}")
        for name, header, rows in tables:
            out.append("")
            out.append(f"# table: {name}")
            out.append(" ".join(header))
            for row in rows:
                out.append(" ".join(row))
    return "\n".join(out) + "\n"


# -- solve ---------------------------------------------------------------------


def _cmd_solve(args) -> int:
    cfg_path = args.config
    cfg = parse_config(cfg_path) if cfg_path else {}

    def from_cfg(key, parse):
        return _cfg_get(cfg, cfg_path, key, parse)

    preset_name = args.preset
    if preset_name is None:
        preset_name = from_cfg("preset", _parse_choice(PRESETS, "preset"))
    preset = PRESETS[preset_name] if preset_name else None

    family = args.family
    if family is None:
        family = from_cfg("family", _parse_choice(FAMILIES, "family"))
    alpha = args.alpha if args.alpha is not None else from_cfg("alpha", _parse_float)
    bc = args.bc if args.bc is not None else from_cfg("bc", _parse_bc)
    exact_kind = args.exact
    if exact_kind is None:
        exact_kind = from_cfg(
            "exact", _parse_choice(EXACT_KINDS + ("none",), "exact solution")
        )

    # An explicit family replaces the preset problem wholesale, so preset
    # parameters are dropped rather than mixed into a different f.
    if family is None and preset is not None:
        family = preset["family"]
        params = dict(preset["params"])
    else:
        params = {}
    for key in cfg:
        if key.startswith("param."):
            lineno, raw = cfg[key]
            try:
                params[key[len("param.") :]] = _parse_float(raw)
            except UsageError as e:
                raise ConfigError(f"{cfg_path} line {lineno}: {e}") from None
    if args.param:
        params.update(_parse_params(args.param))

    if preset is not None:
        if alpha is None:
            alpha = preset["alpha"]
        if bc is None:
            bc = preset["bc"]
        if exact_kind is None:
            exact_kind = preset["exact"]
    if exact_kind == "none":
        exact_kind = None

    if family is None:
        raise UsageError("no problem given: use --preset or --family")
    if alpha is None:
        raise UsageError("missing --alpha (or use a preset)")
    if bc is None:
        raise UsageError("missing --bc A,B,C (or use a preset)")

    order = args.order if args.order is not None else from_cfg("order", _parse_int)
    if order is None:
        order = 10
    ladder = args.ladder if args.ladder is not None else from_cfg("ladder", _parse_ladder)
    scan = args.scan if args.scan is not None else from_cfg("scan", _parse_scan)
    if scan is None:
        scan = DEFAULT_SCAN
    grid = args.grid if args.grid is not None else from_cfg("grid", _parse_int)
    if grid is None:
        grid = 1001
    if grid < 2:
        raise UsageError(f"grid needs at least 2 points, got {grid}")
    emit = args.emit if args.emit is not None else from_cfg("emit", _parse_emit)
    if emit is None:
        emit = ("coeffs", "solution")
    fmt = args.fmt
    if fmt is None:
        fmt = from_cfg("format", _parse_choice(("text", "csv"), "format"))
    if fmt is None:
        fmt = "text"

    if ("error" in emit or "bound" in emit) and exact_kind is None:
        raise UsageError(
            "emits 'error' and 'bound' need an exact solution; pass --exact"
        )

    problem = SbvpProblem(alpha=alpha, f=Nonlinearity(family, params), bc=bc)
    report = solve(problem, order=order, scan=scan, ladder=ladder)
    sol = report.solution
    exact = exact_solution(exact_kind) if exact_kind else None

    err_table = abs_error(sol, exact, points=grid) if "error" in emit else None
    res_table = residual(problem, sol, points=grid) if "residual" in emit else None
    bound = error_bound(sol, exact) if "bound" in emit else None

    a, b, c = problem.bc
    num = _r if fmt == "csv" else _t
    meta = [("family", family)]
    for name in sorted(problem.f.params):
        meta.append((f"param.{name}", num(problem.f.params[name])))
    meta.append(("alpha", num(problem.alpha)))
    if fmt == "csv":
        meta += [("bc_a", num(a)), ("bc_b", num(b)), ("bc_c", num(c))]
    else:
        meta.append(("bc", f"{_t(a)}*u(1) + {_t(b)}*u'(1) = {_t(c)}"))
    meta.append(("order", str(report.order)))
    meta.append(("ladder", " ".join(str(n) for n in report.ladder)))
    lo, hi, steps = report.scan
    if fmt == "csv":
        meta += [
            ("scan_lo", num(lo)),
            ("scan_hi", num(hi)),
            ("scan_steps", str(steps)),
        ]
    else:
        meta.append(("scan", f"{_t(lo)} {_t(hi)} {steps}"))
    meta.append(("grid", str(grid)))
    meta.append(("beta", num(report.beta)))
    meta.append(("residual", num(report.roots.residual)))
    meta.append(("spread", num(report.roots.spread)))
    if fmt == "csv":
        meta.append(("converged", "true" if report.converged else "false"))
    else:
        meta.append(("converged", "yes" if report.converged else "no"))
    if err_table is not None:
        meta.append(("me", num(err_table.me)))
    if res_table is not None:
        meta.append(("mer", num(res_table.mer)))
        meta.append(("excluded_points", str(int(res_table.excluded.sum()))))
    if bound is not None:
        meta.append(("te", num(bound.te)))
        meta.append(("tail_term", num(bound.tail_term)))
        meta.append(("coeff_defect", num(bound.coeff_defect)))

    tables = []
    coeffs = sol.coeffs
    for name in emit:
        if name == "coeffs":
            rows = [(str(k), num(coeffs[k])) for k in range(len(coeffs))]
            tables.append(("coeffs", ("k", "u_k"), rows))
        elif name == "solution":
            xs = closed_grid(grid) if fmt == "csv" else np.linspace(0.0, 1.0, 11)
            rows = [(num(x), num(sol(x))) for x in xs]
            tables.append(("solution", ("x", "u"), rows))
        elif name == "error":
            if fmt == "csv":
                rows = [
                    (num(x), num(e))
                    for x, e in zip(err_table.grid, err_table.errors)
                ]
            else:
                small = abs_error(sol, exact, grid=np.linspace(0.0, 1.0, 11))
                rows = [
                    (num(x), num(e)) for x, e in zip(small.grid, small.errors)
                ]
            tables.append(("error", ("x", "abs_error"), rows))
        elif name == "residual":
            if fmt == "csv":
                rows = [
                    (num(x), num(e))
                    for x, e in zip(res_table.grid, res_table.residuals)
                ]
            else:
                small = residual(problem, sol, grid=half_open_grid(10))
                rows = [
                    (num(x), num(e)) for x, e in zip(small.grid, small.residuals)
                ]
            tables.append(("residual", ("x", "residual"), rows))
        # "bound" emits only the meta rows above.

    text = _render(fmt, meta, tables)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if not report.converged:
        print(
            f"warning: root chain did not converge "
            f"(spread {report.roots.spread:.3e} > {CONVERGENCE_TOL:g}); "
            f"treat results as unverified",
            file=sys.stderr,
        )
        return 2
    return 0


# -- adomian-bench ---------------------------------------------------------------


def _cmd_bench(args) -> int:
    if args.trials < 1:
        raise UsageError(f"trials must be >= 1, got {args.trials}")
    if args.order < 1:
        raise UsageError(f"order must be >= 1, got {args.order}")
    params = _parse_params(args.param) if args.param else {}
    f = Nonlinearity(args.family, params)

    rng = np.random.default_rng(args.seed)
    worst = 0.0
    t_duan = 0.0
    t_oracle = 0.0
    for _ in range(args.trials):
        u = rng.uniform(-0.5, 0.5, args.order + 1)
        # Keep u_0 away from the singular points of every family.
        u[0] = rng.uniform(0.75, 1.25)
        t0 = time.perf_counter()
        fast = adomian_duan(u, f)
        t1 = time.perf_counter()
        ref = adomian_oracle(u, f)
        t2 = time.perf_counter()
        t_duan += t1 - t0
        t_oracle += t2 - t1
        scale = max(1.0, float(np.abs(ref.polynomials).max()))
        dev = float(np.abs(fast.polynomials - ref.polynomials).max()) / scale
        worst = max(worst, dev)

    print(
        f"adomian-bench: family={args.family} order={args.order} "
        f"trials={args.trials} seed={args.seed}"
    )
    print(f"max scaled deviation: {worst:.3e}")
    print(
        f"duan route:   {t_duan * 1e3:.2f} ms total "
        f"({t_duan / args.trials * 1e6:.1f} us/trial)"
    )
    print(
        f"oracle route: {t_oracle * 1e3:.2f} ms total "
        f"({t_oracle / args.trials * 1e6:.1f} us/trial)"
    )
    print(f"backend: {backend_name}")
    if worst > 1e-8:
        print("error: the two routes disagree beyond rounding", file=sys.stderr)
        return 1
    return 0


# -- entry point -----------------------------------------------------------------


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.cmd == "solve":
            return _cmd_solve(args)
        if args.cmd == "adomian-bench":
            return _cmd_bench(args)
        print(backend_name)
        return 0
    except (
        UsageError,
        ConfigError,
        DomainError,
        SingularityError,
        RangeError,
        BlowupError,
        BoundUnavailableError,
        NotImplementedError,
        OSError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
