"""Command-line front end.

Subcommands:

* ``gram``          print one Gram matrix with structure diagnostics
* ``discriminate``  sweep discrimination quantities over a signal-energy grid
* ``rates``         sweep rate quantities over a per-mode photon grid
* ``optimize``      grid-search the keying angles for one figure of merit
* ``figures``       write the bundled comparison datasets as CSV files

Exit codes: 0 success, 2 configuration error, 3 numerical failure,
4 expansion regime violation (negative Fourier coefficient).

All output is deterministic; CSV files carry a header row, comma
separators, ``\\n`` line endings, and 17-significant-digit numbers.
"""

import argparse
import json
import sys

import numpy as np

from .alphabet import (
    CfskParams,
    DcfskParams,
    PhaseOffsetMode,
    PskParams,
    fourier_coefficients,
    gram_cfsk,
    gram_dcfsk,
    gram_psk,
)
from .discrimination import discrimination_report, srm_success
from .errors import NegativeCoefficientError, SpectralError
from .rates import rate_cfsk, rate_dcfsk, rate_psk
from .spectral import structure_check
from .tuning import Objective, grid_optimize

DEFAULT_ENERGY_MIN = 0.01
DEFAULT_ENERGY_MAX = 10.0
DEFAULT_ENERGY_POINTS = 40
DEFAULT_OPTIMIZE_ENERGY = 1.0  # total photons per signal used when tuning

# fixed angle pairs for the bundled discrete-alphabet datasets; chosen inside
# the expansion validity regime, where the discrete emulation tracks the
# exact alphabet (see README)
FIGURE3_ANGLES = (np.pi / 4, np.pi)
FIGURE4_ANGLES = (3.9, 1.5)

_DISCRIMINATE_GROUPS = {
    "SRM": ("p_srm",),
    "BOUNDS": ("p_lower", "p_upper"),
    "OPTIMALITY_GAP": ("optimality_gap", "srm_is_optimal"),
}
_RATES_GROUPS = {
    "HOLEVO": ("holevo_bits",),
    "RATE": ("modes", "rate_per_mode"),
    "CAPACITY_RATIO": ("capacity", "ratio"),
}


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _rows_json(header, rows) -> str:
    def convert(v):
        if v is None or isinstance(v, (bool, str)):
            return v
        if isinstance(v, (int, np.integer)):
            return int(v)
        return float(v)

    payload = [dict(zip(header, map(convert, row))) for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _round15(x: float) -> float:
    return float(format(x, ".15g"))


def _angle_or_optimize(text):
    if text == "optimize":
        return text
    try:
        return float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a number or 'optimize'; got {text!r}") from exc


def _positive_int(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer; got {text}")
    return value


def _load_config(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    return data


def _merge_config(args):
    """Fill argument fields that were not given on the command line."""
    if not getattr(args, "config", None):
        return
    cfg = _load_config(args.config)
    mapping = {
        "alphabet": "alphabet",
        "m": "m",
        "l": "l",
        "delta_theta": "dtheta",
        "delta_omega_t": "domega_t",
        "outputs": "outputs",
        "format": "format",
    }
    for key, attr in mapping.items():
        if key in cfg and getattr(args, attr, None) is None:
            value = cfg[key]
            if isinstance(value, str) and attr in ("alphabet", "format"):
                value = value.lower()
            if attr in ("dtheta", "domega_t") and not isinstance(value, str):
                value = float(value)
            if attr == "outputs" and isinstance(value, list):
                value = ",".join(value)
            setattr(args, attr, value)
    if "energy_grid" in cfg and args.energies is None and args.energy_min is None \
            and args.energy_max is None and args.energy_points is None:
        grid = cfg["energy_grid"]
        if isinstance(grid, dict):
            args.energy_min = float(grid["min"])
            args.energy_max = float(grid["max"])
            args.energy_points = int(grid["points"])
        else:
            args.energies = ",".join(str(float(v)) for v in grid)


def _energy_grid(args) -> np.ndarray:
    if args.energies is not None:
        if isinstance(args.energies, str):
            values = np.array([float(tok) for tok in args.energies.split(",") if tok.strip()])
        else:
            values = np.asarray(args.energies, dtype=float)
    else:
        lo = args.energy_min if args.energy_min is not None else DEFAULT_ENERGY_MIN
        hi = args.energy_max if args.energy_max is not None else DEFAULT_ENERGY_MAX
        pts = args.energy_points if args.energy_points is not None else DEFAULT_ENERGY_POINTS
        if lo <= 0:
            raise ValueError(f"log-spaced energy grid needs min > 0; got {lo}")
        values = np.geomspace(lo, hi, pts)
    if values.size == 0:
        raise ValueError("energy grid is empty")
    if np.any(values < 0):
        raise ValueError("energy grid values must be nonnegative")
    if np.any(np.diff(values) <= 0):
        raise ValueError("energy grid must be strictly increasing")
    return values


def _select_columns(outputs, groups):
    if outputs is None:
        tokens = list(groups)
    else:
        tokens = [tok.strip().upper() for tok in outputs.split(",") if tok.strip()]
    columns = []
    for token in tokens:
        if token not in groups:
            raise ValueError(f"unknown output selector {token!r}; expected one of {sorted(groups)}")
        columns.extend(groups[token])
    return columns


def _phase_mode(args):
    if getattr(args, "phase_step", None) is not None:
        return PhaseOffsetMode.EXPLICIT, float(args.phase_step)
    mode = getattr(args, "phase_offset", None) or PhaseOffsetMode.CFSK_MATCHED.value
    return PhaseOffsetMode(mode), None


def _resolve_angles(args, total_photons):
    """Return concrete (delta_theta, delta_omega_t), tuning when asked to."""
    dtheta = args.dtheta if args.dtheta is not None else "optimize"
    domega = args.domega_t if args.domega_t is not None else "optimize"
    if dtheta == "optimize" or domega == "optimize":
        result = grid_optimize(
            args.m,
            total_photons,
            resolution=args.resolution if args.resolution is not None else 64,
        )
        if dtheta == "optimize":
            dtheta = result.best_delta_theta
        if domega == "optimize":
            domega = result.best_delta_omega_t
    return float(dtheta), float(domega)


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ValueError(f"--{name.replace('_', '-')} is required for this invocation")


# ---------------------------------------------------------------------------
# subcommands

def _cmd_gram(args) -> int:
    _require(args, "alphabet", "m", "photons")
    if args.alphabet == "psk":
        gram = gram_psk(PskParams(args.m, args.photons))
    elif args.alphabet == "cfsk":
        _require(args, "dtheta", "domega_t")
        gram = gram_cfsk(CfskParams(args.m, float(args.dtheta), float(args.domega_t), args.photons))
    else:
        _require(args, "l", "dtheta", "domega_t")
        mode, step = _phase_mode(args)
        expansion = fourier_coefficients(args.m, args.l, float(args.domega_t))
        params = DcfskParams(
            args.m, args.l, float(args.dtheta), float(args.domega_t), args.photons,
            phase_offset_mode=mode, explicit_phase_step=step,
        )
        gram = gram_dcfsk(params, expansion)
    check = structure_check(gram)
    doc = {
        "alphabet": args.alphabet,
        "m": gram.dim,
        "entries_re": [[_round15(v) for v in row] for row in gram.entries.real.tolist()],
        "entries_im": [[_round15(v) for v in row] for row in gram.entries.imag.tolist()],
        "is_toeplitz": check.is_toeplitz,
        "is_circulant": check.is_circulant,
        "max_toeplitz_dev": check.max_toeplitz_dev,
        "max_circulant_dev": check.max_circulant_dev,
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return 0


def _gram_at_energy(args, total_photons, expansion, angles):
    dtheta, domega = angles
    if args.alphabet == "psk":
        return gram_psk(PskParams(args.m, total_photons))
    if args.alphabet == "cfsk":
        return gram_cfsk(CfskParams(args.m, dtheta, domega, total_photons))
    mode, step = _phase_mode(args)
    params = DcfskParams(
        args.m, args.l, dtheta, domega, total_photons,
        phase_offset_mode=mode, explicit_phase_step=step,
    )
    return gram_dcfsk(params, expansion)


def _cmd_discriminate(args) -> int:
    _merge_config(args)
    if args.alphabet is None:
        args.alphabet = "cfsk"
    _require(args, "m")
    energies = _energy_grid(args)  # per-signal total photons
    columns = _select_columns(args.outputs, _DISCRIMINATE_GROUPS)
    optimize_energy = args.optimize_energy if args.optimize_energy is not None else DEFAULT_OPTIMIZE_ENERGY

    angles = (0.0, 0.0)
    expansion = None
    if args.alphabet in ("cfsk", "dcfsk"):
        angles = _resolve_angles(args, optimize_energy)
    if args.alphabet == "dcfsk":
        _require(args, "l")
        expansion = fourier_coefficients(args.m, args.l, angles[1])

    header = ["energy"] + columns + (["psk_optimal"] if args.psk_companion else [])
    rows = []
    for energy in energies:
        report = discrimination_report(_gram_at_energy(args, energy, expansion, angles))
        row = [energy] + [getattr(report, name) for name in columns]
        if args.psk_companion:
            # the SRM is optimal for the symmetric phase-keyed alphabet, so
            # its success probability is the optimal one
            row.append(srm_success(gram_psk(PskParams(args.m, energy)))[0])
        rows.append(row)
    text = _csv(header, rows) if (args.format or "csv") == "csv" else _rows_json(header, rows)
    _emit(text, args.output)
    return 0


def _cmd_rates(args) -> int:
    _merge_config(args)
    if args.alphabet is None:
        args.alphabet = "cfsk"
    _require(args, "m")
    grid = _energy_grid(args)  # photons per mode
    columns = _select_columns(args.outputs, _RATES_GROUPS)
    optimize_energy = args.optimize_energy if args.optimize_energy is not None else DEFAULT_OPTIMIZE_ENERGY

    angles = (0.0, 0.0)
    expansion = None
    if args.alphabet in ("cfsk", "dcfsk"):
        angles = _resolve_angles(args, optimize_energy)
    if args.alphabet == "dcfsk":
        _require(args, "l")
        expansion = fourier_coefficients(args.m, args.l, angles[1])

    mode, step = _phase_mode(args)
    rows = []
    for n in grid:
        if args.alphabet == "psk":
            report = rate_psk(args.m, n)
        elif args.alphabet == "cfsk":
            report = rate_cfsk(args.m, angles[0], angles[1], n)
        else:
            report = rate_dcfsk(
                args.m, args.l, angles[0], angles[1], n,
                phase_offset_mode=mode, explicit_phase_step=step, expansion=expansion,
            )
        rows.append([n] + [getattr(report, name) for name in columns])
    header = ["n"] + columns
    text = _csv(header, rows) if (args.format or "csv") == "csv" else _rows_json(header, rows)
    _emit(text, args.output)
    return 0


def _cmd_optimize(args) -> int:
    result = grid_optimize(
        args.m,
        args.photons,
        objective=Objective(args.objective),
        resolution=args.resolution if args.resolution is not None else 64,
    )
    doc = {
        "best_delta_theta": result.best_delta_theta,
        "best_delta_omega_t": result.best_delta_omega_t,
        "objective_value": result.objective_value,
        "objective_kind": result.objective_kind.value,
        "grid_resolution": result.grid_resolution,
        "refinement_iterations": result.refinement_iterations,
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return 0


def _figure_1a(args):
    m = args.m or 16
    photons = args.photons if args.photons is not None else 1.0
    grid = args.grid or 32
    header = ["delta_theta", "delta_omega_t", "sqrt_gram_diag_1", "sqrt_gram_diag_2"]
    rows = []
    for i in range(grid):
        for j in range(grid):
            theta = 2.0 * np.pi * i / grid
            omega = 2.0 * np.pi * j / grid
            _, diag = srm_success(gram_cfsk(CfskParams(m, theta, omega, photons)))
            rows.append([theta, omega, diag[0], diag[1]])
    return header, rows


def _figure_1b(args):
    m = args.m or 16
    optimize_energy = args.optimize_energy if args.optimize_energy is not None else DEFAULT_OPTIMIZE_ENERGY
    result = grid_optimize(m, optimize_energy,
                           resolution=args.resolution if args.resolution is not None else 64)
    lo = args.energy_min if args.energy_min is not None else DEFAULT_ENERGY_MIN
    hi = args.energy_max if args.energy_max is not None else DEFAULT_ENERGY_MAX
    pts = args.energy_points if args.energy_points is not None else DEFAULT_ENERGY_POINTS
    header = ["energy", "p_srm", "p_lower", "p_upper", "optimality_gap", "psk_optimal"]
    rows = []
    for energy in np.geomspace(lo, hi, pts):
        gram = gram_cfsk(CfskParams(m, result.best_delta_theta, result.best_delta_omega_t, energy))
        report = discrimination_report(gram)
        psk_opt = srm_success(gram_psk(PskParams(m, energy)))[0]
        rows.append([energy, report.p_srm, report.p_lower, report.p_upper,
                     report.optimality_gap, psk_opt])
    return header, rows


def _rate_row(alphabet, m, report):
    return [alphabet, m, report.photons_per_mode, report.holevo_bits, report.modes,
            report.rate_per_mode, report.capacity, report.ratio]


def _figure_2(args):
    sizes = (2, 4, 8, 16)
    optimize_energy = args.optimize_energy if args.optimize_energy is not None else DEFAULT_OPTIMIZE_ENERGY
    resolution = args.resolution if args.resolution is not None else 64
    lo = args.energy_min if args.energy_min is not None else DEFAULT_ENERGY_MIN
    hi = args.energy_max if args.energy_max is not None else DEFAULT_ENERGY_MAX
    pts = args.energy_points if args.energy_points is not None else DEFAULT_ENERGY_POINTS
    grid = np.geomspace(lo, hi, pts)
    header = ["alphabet", "m", "n", "holevo_bits", "modes", "rate_per_mode", "capacity", "ratio"]
    rows = []
    for m in sizes:
        tuned = grid_optimize(m, optimize_energy, resolution=resolution)
        for n in grid:
            rows.append(_rate_row(
                "cfsk", m, rate_cfsk(m, tuned.best_delta_theta, tuned.best_delta_omega_t, n)))
    for m in sizes:
        for n in grid:
            rows.append(_rate_row("psk", m, rate_psk(m, n)))
    return header, rows


def _figure_3(args):
    m = args.m or 4
    dtheta = float(args.dtheta) if args.dtheta not in (None, "optimize") else FIGURE3_ANGLES[0]
    domega = float(args.domega_t) if args.domega_t not in (None, "optimize") else FIGURE3_ANGLES[1]
    lo = args.energy_min if args.energy_min is not None else DEFAULT_ENERGY_MIN
    hi = args.energy_max if args.energy_max is not None else DEFAULT_ENERGY_MAX
    pts = args.energy_points if args.energy_points is not None else 20
    header = ["level", "total_photons", "p_srm_dcfsk", "p_srm_cfsk", "ratio"]
    rows = []
    for level in (1, 2):
        expansion = fourier_coefficients(m, level, domega)
        for energy in np.geomspace(lo, hi, pts):
            p_cfsk = srm_success(gram_cfsk(CfskParams(m, dtheta, domega, energy)))[0]
            p_dcfsk = srm_success(gram_dcfsk(
                DcfskParams(m, level, dtheta, domega, energy), expansion))[0]
            rows.append([level, energy, p_dcfsk, p_cfsk, p_dcfsk / p_cfsk])
    return header, rows


def _figure_4(args):
    dtheta = float(args.dtheta) if args.dtheta not in (None, "optimize") else FIGURE4_ANGLES[0]
    domega = float(args.domega_t) if args.domega_t not in (None, "optimize") else FIGURE4_ANGLES[1]
    lo = args.energy_min if args.energy_min is not None else DEFAULT_ENERGY_MIN
    hi = args.energy_max if args.energy_max is not None else DEFAULT_ENERGY_MAX
    pts = args.energy_points if args.energy_points is not None else DEFAULT_ENERGY_POINTS
    grid = np.geomspace(lo, hi, pts)
    header = ["alphabet", "m", "n", "holevo_bits", "modes", "rate_per_mode", "capacity", "ratio"]
    rows = []
    for m in (4, 8):
        expansion = fourier_coefficients(m, 1, domega)
        for n in grid:
            rows.append(_rate_row(
                "dcfsk", m, rate_dcfsk(m, 1, dtheta, domega, n, expansion=expansion)))
    for m in (2, 4, 8, 16):
        for n in grid:
            rows.append(_rate_row("psk", m, rate_psk(m, n)))
    return header, rows


_FIGURES = {"1a": _figure_1a, "1b": _figure_1b, "2": _figure_2, "3": _figure_3, "4": _figure_4}


def _cmd_figures(args) -> int:
    header, rows = _FIGURES[args.figure_id](args)
    path = args.output if args.output is not None else f"figure_{args.figure_id}.csv"
    _emit(_csv(header, rows), path)
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_energy_flags(parser):
    parser.add_argument("--energies", help="comma-separated explicit energy grid")
    parser.add_argument("--energy-min", type=float, dest="energy_min")
    parser.add_argument("--energy-max", type=float, dest="energy_max")
    parser.add_argument("--energy-points", type=_positive_int, dest="energy_points")


def _add_alphabet_flags(parser):
    parser.add_argument("--alphabet", choices=("cfsk", "psk", "dcfsk"))
    parser.add_argument("--m", type=_positive_int, help="alphabet size")
    parser.add_argument("--l", type=int, help="expansion half-order (dcfsk)")
    parser.add_argument("--dtheta", type=_angle_or_optimize,
                        help="phase step in radians, or 'optimize'")
    parser.add_argument("--domega-t", type=_angle_or_optimize, dest="domega_t",
                        help="frequency step times duration in radians, or 'optimize'")
    parser.add_argument("--phase-offset", choices=("cfsk-matched", "paper-half-pi"),
                        dest="phase_offset", help="discrete-alphabet phase step rule")
    parser.add_argument("--phase-step", type=float, dest="phase_step",
                        help="explicit discrete-alphabet phase step in radians")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfsk",
        description="Discrimination and rate performance of coherent-state keying alphabets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gram", help="print one Gram matrix with structure flags")
    _add_alphabet_flags(p)
    p.add_argument("--photons", type=float, help="total photons per signal")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("discriminate",
                       help="sweep SRM probability, bounds, and optimality gap "
                            "over per-signal energies")
    _add_alphabet_flags(p)
    _add_energy_flags(p)
    p.add_argument("--config", help="JSON config file; flags override it")
    p.add_argument("--outputs", help="comma list from SRM,BOUNDS,OPTIMALITY_GAP")
    p.add_argument("--psk-companion", action="store_true", dest="psk_companion",
                   help="add the optimal phase-keying column at equal total photons")
    p.add_argument("--optimize-energy", type=float, dest="optimize_energy",
                   help="total photons at which 'optimize' angles are tuned")
    p.add_argument("--resolution", type=_positive_int, help="tuning grid resolution")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--output")
    p.set_defaults(func=_cmd_discriminate)

    p = sub.add_parser("rates", help="sweep rate quantities over per-mode photon numbers")
    _add_alphabet_flags(p)
    _add_energy_flags(p)
    p.add_argument("--config", help="JSON config file; flags override it")
    p.add_argument("--outputs", help="comma list from HOLEVO,RATE,CAPACITY_RATIO")
    p.add_argument("--optimize-energy", type=float, dest="optimize_energy",
                   help="total photons at which 'optimize' angles are tuned")
    p.add_argument("--resolution", type=_positive_int, help="tuning grid resolution")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--output")
    p.set_defaults(func=_cmd_rates)

    p = sub.add_parser("optimize", help="grid-search the keying angles")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--photons", type=float, required=True, help="total photons per signal")
    p.add_argument("--objective", choices=[o.value for o in Objective],
                   default=Objective.SRM_SUCCESS.value)
    p.add_argument("--resolution", type=_positive_int)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("figures", help="write one bundled comparison dataset")
    p.add_argument("figure_id", choices=sorted(_FIGURES))
    p.add_argument("--m", type=_positive_int)
    p.add_argument("--photons", type=float)
    p.add_argument("--grid", type=_positive_int, help="angle grid resolution (dataset 1a)")
    p.add_argument("--dtheta", type=_angle_or_optimize)
    p.add_argument("--domega-t", type=_angle_or_optimize, dest="domega_t")
    _add_energy_flags(p)
    p.add_argument("--optimize-energy", type=float, dest="optimize_energy")
    p.add_argument("--resolution", type=_positive_int)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_figures)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NegativeCoefficientError as exc:
        detail = ""
        if exc.m is not None:
            detail = f" (M={exc.m}, L={exc.level}, shape_param={exc.shape_param})"
        print(f"error: expansion regime violation{detail}: {exc}", file=sys.stderr)
        return 4
    except SpectralError as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
