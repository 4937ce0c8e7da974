"""Command-line front end.

Subcommands: spectrum, levels-sweep, negativity, heat-capacity, sweep,
crossings, map-params.  Flag values can also come from a flat key=value
config file (--config); explicit flags win over the file.

Exit codes: 0 success, 2 invalid arguments, 3 domain error (singularity,
nonpositive temperature), 4 no crossing found in range.
"""

from __future__ import annotations

import argparse
import sys

from .entanglement import classify_negativity, negativity
from .errors import DomainError, NoCrossingInRangeError
from .params import MicroscopicParams, ModelParams, map_couplings
from .spectrum import find_crossings, full_spectrum
from .sweep import (
    OUTPUT_NAMES,
    PARAM_NAMES,
    SweepSpec,
    _format_value,
    format_crossing_report,
    levels_csv_text,
    run_sweep,
    write_text,
)
from .thermo import heat_capacity

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_NO_CROSSING = 4

# Argument specs per subcommand: (dest, type, help).
_ARG_TYPES = {
    "tau": float,
    "gamma": float,
    "omega": float,
    "temp": float,
    "var": str,
    "start": float,
    "stop": float,
    "steps": int,
    "outputs": str,
    "out": str,
    "workers": int,
    "t": float,
    "u0": float,
    "u2": float,
    "config": str,
}


def _add_flags(sub: argparse.ArgumentParser, names: list[str]) -> None:
    helps = {
        "tau": "linear exchange coupling",
        "gamma": "quadratic exchange coupling",
        "omega": "magnetic field",
        "temp": "temperature (k_B = 1)",
        "var": f"swept parameter, one of {PARAM_NAMES}",
        "start": "grid start",
        "stop": "grid stop",
        "steps": "number of grid points (>= 2)",
        "outputs": "comma-separated subset of " + ",".join(OUTPUT_NAMES),
        "out": "output path, '-' for stdout (default)",
        "workers": "parallel worker threads (output order is unaffected)",
        "t": "tunneling amplitude (> 0)",
        "u0": "contact scattering amplitude",
        "u2": "spin-dependent scattering amplitude",
        "config": "flat key=value config file; flags override it",
    }
    for name in names:
        sub.add_argument(f"--{name}", type=_ARG_TYPES[name], default=None, help=helps[name])


def _load_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, _, value = line.partition("=")
            values[key.strip()] = value.strip()
    return values


def _merge_config(args: argparse.Namespace, known: list[str]) -> None:
    if getattr(args, "config", None) is None:
        return
    for key, raw in _load_config(args.config).items():
        if key not in known:
            raise ValueError(f"unknown config key {key!r} for this subcommand")
        if getattr(args, key) is None:
            setattr(args, key, _ARG_TYPES[key](raw))


def _require(args: argparse.Namespace, names: list[str]) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError("missing required arguments: " + ", ".join(missing))


def _csv(columns: list[str], rows: list[tuple], out: str) -> None:
    lines = [",".join(columns)]
    lines.extend(",".join(_format_value(v) for v in row) for row in rows)
    write_text(out or "-", "\n".join(lines) + "\n")


def _cmd_spectrum(args: argparse.Namespace) -> int:
    _require(args, ["tau", "gamma", "omega"])
    p = ModelParams(tau=args.tau, gamma=args.gamma, omega=args.omega)
    rows = [(lab.j, lab.m, e) for lab, e in full_spectrum(p).levels]
    _csv(["j", "m", "energy"], rows, args.out)
    return EXIT_OK


def _cmd_levels_sweep(args: argparse.Namespace) -> int:
    _require(args, ["gamma", "omega", "start", "stop", "steps"])
    text = levels_csv_text(args.gamma, args.omega, args.start, args.stop, args.steps)
    write_text(args.out or "-", text)
    return EXIT_OK


def _cmd_negativity(args: argparse.Namespace) -> int:
    _require(args, ["tau", "gamma", "omega", "temp"])
    p = ModelParams(tau=args.tau, gamma=args.gamma, omega=args.omega, temperature=args.temp)
    n = negativity(p).negativity
    _csv(
        ["tau", "gamma", "omega", "temperature", "negativity", "phase"],
        [(p.tau, p.gamma, p.omega, p.temperature, n, classify_negativity(n))],
        args.out,
    )
    return EXIT_OK


def _cmd_heat_capacity(args: argparse.Namespace) -> int:
    _require(args, ["tau", "gamma", "omega", "temp"])
    p = ModelParams(tau=args.tau, gamma=args.gamma, omega=args.omega, temperature=args.temp)
    _csv(
        ["tau", "gamma", "omega", "temperature", "heat_capacity"],
        [(p.tau, p.gamma, p.omega, p.temperature, heat_capacity(p))],
        args.out,
    )
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    _require(args, ["var", "start", "stop", "steps"])
    if args.var not in PARAM_NAMES:
        raise ValueError(f"--var must be one of {PARAM_NAMES}, got {args.var!r}")
    flag_of = {"tau": "tau", "gamma": "gamma", "omega": "omega", "temperature": "temp"}
    if getattr(args, flag_of[args.var]) is not None:
        raise ValueError(f"--{flag_of[args.var]} conflicts with --var {args.var}")
    fixed_names = [n for n in PARAM_NAMES if n != args.var]
    _require(args, [flag_of[n] for n in fixed_names])
    fixed = {n: getattr(args, flag_of[n]) for n in fixed_names}
    outputs = tuple(s for s in (args.outputs or "negativity").split(",") if s)
    spec = SweepSpec(
        variable=args.var,
        start=args.start,
        stop=args.stop,
        steps=args.steps,
        fixed=fixed,
        outputs=outputs,
    )
    result = run_sweep(spec, workers=args.workers or 1)
    write_text(args.out or "-", result.to_csv_text())
    return EXIT_OK


def _cmd_crossings(args: argparse.Namespace) -> int:
    _require(args, ["gamma", "omega", "start", "stop"])
    report = find_crossings(args.gamma, args.omega, (args.start, args.stop))
    write_text(args.out or "-", format_crossing_report(report))
    return EXIT_OK


def _cmd_map_params(args: argparse.Namespace) -> int:
    _require(args, ["t", "u0", "u2"])
    m = MicroscopicParams(t=args.t, u0=args.u0, u2=args.u2)
    c = map_couplings(m)
    _csv(
        ["t", "u0", "u2", "k0", "k1", "k2", "tau", "gamma"],
        [(m.t, m.u0, m.u2, c.k0, c.k1, c.k2, c.k1 / m.t, c.k2 / m.t)],
        args.out,
    )
    return EXIT_OK


_SUBCOMMANDS = {
    "spectrum": (_cmd_spectrum, ["tau", "gamma", "omega", "out", "config"]),
    "levels-sweep": (_cmd_levels_sweep, ["gamma", "omega", "start", "stop", "steps", "out", "config"]),
    "negativity": (_cmd_negativity, ["tau", "gamma", "omega", "temp", "out", "config"]),
    "heat-capacity": (_cmd_heat_capacity, ["tau", "gamma", "omega", "temp", "out", "config"]),
    "sweep": (
        _cmd_sweep,
        ["var", "start", "stop", "steps", "outputs", "tau", "gamma", "omega", "temp",
         "workers", "out", "config"],
    ),
    "crossings": (_cmd_crossings, ["gamma", "omega", "start", "stop", "out", "config"]),
    "map-params": (_cmd_map_params, ["t", "u0", "u2", "out", "config"]),
}

_DESCRIPTIONS = {
    "spectrum": "print the nine levels at one model point",
    "levels-sweep": "CSV of all nine level energies over a tau grid",
    "negativity": "thermal-state negativity at one model point",
    "heat-capacity": "heat capacity at one model point",
    "sweep": "CSV sweep of one parameter with selected outputs",
    "crossings": "locate ground-state level crossings in tau",
    "map-params": "map lattice amplitudes (t, u0, u2) to effective couplings",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhdimer",
        description="Exact-diagonalization toolkit for a two-atom spin-1 Bose-Hubbard pair.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (handler, flags) in _SUBCOMMANDS.items():
        sub = subparsers.add_parser(name, help=_DESCRIPTIONS[name])
        _add_flags(sub, flags)
        sub.set_defaults(handler=handler, known_flags=flags)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config(args, args.known_flags)
        return args.handler(args)
    except NoCrossingInRangeError as exc:
        print(f"bhdimer: {exc}", file=sys.stderr)
        return EXIT_NO_CROSSING
    except DomainError as exc:
        print(f"bhdimer: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, OSError) as exc:
        print(f"bhdimer: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
