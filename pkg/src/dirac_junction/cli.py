"""Command-line front end.

Subcommands: ``scatter`` (amplitude sweep over energy), ``bound``
(bound-state energies), ``sweep`` (bound states along a strength grid),
``resonances`` (reflection zeros plus band-edge transmission zeros), and
``validate`` (numerical verification suite).

Flags override an optional plain ``key=value`` config file (one pair per
line, ``#`` comments).  Output is CSV or JSON with identical field names;
numbers are written with 17 significant digits, so reruns with the same
flags are byte-identical.

Exit codes: 0 success, 1 validation-suite failure, 2 bad configuration,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .core import (
    ExtensionFamily,
    ExtensionParams,
    Junction,
    Medium,
    NamedExtension,
    matching_closed_form,
    named_matrix,
)
from .errors import (
    BelowThreshold,
    DegenerateExtension,
    DiracJunctionError,
    OutsideWindow,
    SingularBoundaryMatrix,
    SingularSystem,
    StrengthSignError,
    VelocityMismatch,
)
from .scattering import (
    EnergyWindow,
    amplitudes_solve,
    find_reflection_zeros,
    flux_transmission,
    zero_momentum_resonances,
)
from .spectral import find_bound_states, sweep_strength
from .validation import deficiency_indices, determinant_audit, eigen_residual

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

_NUMERICAL_ERRORS = (SingularSystem, SingularBoundaryMatrix, DegenerateExtension)


class ConfigError(Exception):
    """Bad flag/config combination; reported on stderr with exit code 2."""


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def load_config(path: str) -> dict[str, str]:
    """Read a plain key=value file; '#' starts a comment, blanks ignored."""
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def _merge(args: argparse.Namespace, config: dict[str, str], name: str, cast, default=None):
    """Flag value if given, else config value, else default."""
    value = getattr(args, name, None)
    if value is not None:
        return value
    if name in config:
        raw = config[name]
        try:
            return cast(raw)
        except ValueError as exc:
            raise ConfigError(f"config key {name}={raw!r}: {exc}") from exc
    return default


def _build_junction(args, config, default_masses: tuple[float, float] | None = None) -> Junction:
    ml = _merge(args, config, "ml", float, default_masses[0] if default_masses else None)
    mr = _merge(args, config, "mr", float, default_masses[1] if default_masses else None)
    if ml is None or mr is None:
        raise ConfigError("both --ml and --mr are required")
    vf = _merge(args, config, "vf", float)
    vl = _merge(args, config, "vl", float)
    vr = _merge(args, config, "vr", float)
    if vf is not None and (vl is not None or vr is not None):
        raise ConfigError("give either --vf or --vl/--vr, not both")
    if vf is not None:
        vl = vr = vf
    if vl is None and vr is None:
        vl = vr = 1.0
    if vl is None or vr is None:
        raise ConfigError("--vl and --vr must be given together")
    try:
        return Junction(Medium(ml, vl), Medium(mr, vr))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _build_selector(args, config):
    """Named extension or raw parameters from the flag set; exactly one."""
    family = _merge(args, config, "family", str)
    strength = _merge(args, config, "strength", float)
    raw = [
        _merge(args, config, "alpha", float),
        _merge(args, config, "a0", float),
        _merge(args, config, "a1", float),
        _merge(args, config, "a3", float),
    ]
    have_named = family is not None or strength is not None
    have_raw = any(v is not None for v in raw)
    if have_named and have_raw:
        raise ConfigError("give either --family/--strength or --alpha/--a0/--a1/--a3")
    if have_named:
        if family is None or strength is None:
            raise ConfigError("--family and --strength must be given together")
        try:
            fam = ExtensionFamily(family)
        except ValueError as exc:
            names = ", ".join(f.value for f in ExtensionFamily)
            raise ConfigError(f"unknown family {family!r}; choose from {names}") from exc
        try:
            return NamedExtension(fam, strength)
        except StrengthSignError as exc:
            raise ConfigError(str(exc)) from exc
    if have_raw:
        if any(v is None for v in raw):
            raise ConfigError("--alpha, --a0, --a1, --a3 must all be given")
        try:
            return ExtensionParams(*raw)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    raise ConfigError("an extension must be selected (--family/--strength or raw parameters)")


def _write_rows(args, config, header: list[str], rows: list[list[float | None]]) -> None:
    fmt = _merge(args, config, "format", str, "csv")
    out = _merge(args, config, "out", str)
    if fmt not in ("csv", "json"):
        raise ConfigError(f"format must be csv or json, got {fmt!r}")
    if fmt == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join("nan" if v is None else _fmt(v) for v in row))
        text = "\n".join(lines) + "\n"
    else:
        payload = [dict(zip(header, row)) for row in rows]
        text = json.dumps(payload, indent=2, allow_nan=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_scatter(args, config) -> int:
    junction = _build_junction(args, config)
    selector = _build_selector(args, config)
    emin = _merge(args, config, "emin", float)
    emax = _merge(args, config, "emax", float)
    n = _merge(args, config, "n", int, 200)
    if emin is None or emax is None:
        raise ConfigError("--emin and --emax are required")
    try:
        window = EnergyWindow(emin, emax, "scattering")
        window.validate(junction)
        if isinstance(selector, NamedExtension):
            matrix = named_matrix(selector, junction)
        else:
            matrix = matching_closed_form(selector, junction)
    except (ValueError, VelocityMismatch, DegenerateExtension) as exc:
        raise ConfigError(str(exc)) from exc

    header = ["E", "Re r", "Im r", "|r|^2", "Re t", "Im t", "T_flux", "unitarity_defect"]
    rows = []
    for energy in np.linspace(emin, emax, n):
        amps = amplitudes_solve(matrix, junction, float(energy))
        tflux = flux_transmission(junction, float(energy), amps)
        defect = abs(amps.r) ** 2 + tflux - 1.0
        rows.append(
            [float(energy), amps.r.real, amps.r.imag, abs(amps.r) ** 2,
             amps.t.real, amps.t.imag, tflux, defect]
        )
    _write_rows(args, config, header, rows)
    return EXIT_OK


def cmd_bound(args, config) -> int:
    junction = _build_junction(args, config)
    selector = _build_selector(args, config)
    if not isinstance(selector, NamedExtension):
        raise ConfigError("bound states are computed for named families; use --family/--strength")
    grid_n = _merge(args, config, "n", int, 512)
    try:
        states = find_bound_states(selector, junction, grid_n=grid_n)
    except (VelocityMismatch, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    header = ["energy", "residual"]
    rows = [[s.energy, s.residual] for s in states]
    _write_rows(args, config, header, rows)
    return EXIT_OK


def cmd_sweep(args, config) -> int:
    junction = _build_junction(args, config)
    family = _merge(args, config, "family", str)
    if family is None:
        raise ConfigError("--family is required for a sweep")
    try:
        fam = ExtensionFamily(family)
    except ValueError as exc:
        raise ConfigError(f"unknown family {family!r}") from exc
    smin = _merge(args, config, "smin", float)
    smax = _merge(args, config, "smax", float)
    n = _merge(args, config, "n", int, 200)
    cmp_mass = _merge(args, config, "comparison_mass", float)
    if smin is None or smax is None:
        raise ConfigError("--smin and --smax are required for a sweep")
    try:
        table = sweep_strength(fam, junction, (smin, smax), n, comparison_mass=cmp_mass)
    except (VelocityMismatch, StrengthSignError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc

    k = max((len(row) for row in table.energies), default=0)
    j = max((len(row) for row in table.equal_mass_energies), default=0)
    header = (
        ["strength"]
        + [f"root_{i + 1}" for i in range(k)]
        + [f"equal_mass_{i + 1}" for i in range(j)]
    )
    rows = []
    for s, roots, ref in zip(table.strengths, table.energies, table.equal_mass_energies):
        pad_roots = list(roots) + [None] * (k - len(roots))
        pad_ref = list(ref) + [None] * (j - len(ref))
        rows.append([s] + pad_roots + pad_ref)
    _write_rows(args, config, header, rows)
    return EXIT_OK


def cmd_resonances(args, config) -> int:
    junction = _build_junction(args, config)
    selector = _build_selector(args, config)
    emin = _merge(args, config, "emin", float)
    emax = _merge(args, config, "emax", float)
    n = _merge(args, config, "n", int, 2000)
    if emin is None or emax is None:
        raise ConfigError("--emin and --emax are required")
    try:
        window = EnergyWindow(emin, emax, "scattering")
        result = find_reflection_zeros(selector, junction, window, n)
    except (ValueError, VelocityMismatch, DegenerateExtension) as exc:
        raise ConfigError(str(exc)) from exc
    edges = zero_momentum_resonances(junction)

    fmt = _merge(args, config, "format", str, "csv")
    if fmt == "json":
        payload = {
            "reflection_zeros": list(result.energies),
            "identically_transparent": result.identically_transparent,
            "zero_momentum": edges,
        }
        text = json.dumps(payload, indent=2) + "\n"
        out = _merge(args, config, "out", str)
        if out:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    header = ["kind", "value"]
    rows: list[list] = [["reflection_zero", e] for e in result.energies]
    rows += [["identically_transparent", 1.0 if result.identically_transparent else 0.0]]
    rows += [["zero_momentum_edge", e] for e in edges]
    lines = [",".join(header)]
    for kind, value in rows:
        lines.append(f"{kind},{_fmt(value)}")
    text = "\n".join(lines) + "\n"
    out = _merge(args, config, "out", str)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_validate(args, config) -> int:
    junction = _build_junction(args, config, default_masses=(1.0, 2.0))
    samples = _merge(args, config, "samples", int, 1000)
    seed = _merge(args, config, "seed", int, 0)
    tol_eigen = _merge(args, config, "tol_eigen", float, 1e-4)
    tol_norm = _merge(args, config, "tol_norm", float, 1e-8)
    tol_det = _merge(args, config, "tol_det", float, 1e-10)

    lines = []
    failures = []

    for side, medium in (("right", junction.right), ("left", junction.left)):
        for eigsign, label in ((+1, "+i"), (-1, "-i")):
            coarse = eigen_residual(side, eigsign, medium, 1024)
            fine = eigen_residual(side, eigsign, medium, 2048)
            norm = eigen_residual(side, eigsign, medium, 4096)
            ratio = coarse.max_pointwise_residual / fine.max_pointwise_residual
            lines.append(
                f"eigen {side} {label}: residual(1024)={_fmt(coarse.max_pointwise_residual)} "
                f"ratio={_fmt(ratio)} norm_error(4096)={_fmt(norm.norm_error)}"
            )
            if coarse.max_pointwise_residual > tol_eigen:
                failures.append(f"eigen residual {side} {label} exceeds {_fmt(tol_eigen)}")
            if not 3.5 <= ratio <= 4.5:
                failures.append(f"eigen convergence ratio {side} {label} outside [3.5, 4.5]")
            if norm.norm_error > tol_norm:
                failures.append(f"norm error {side} {label} exceeds {_fmt(tol_norm)}")

    indices = deficiency_indices(junction)
    lines.append(f"deficiency indices: ({indices[0]}, {indices[1]})")
    if indices != (2, 2):
        failures.append("deficiency indices are not (2, 2)")

    report = determinant_audit(samples, seed)
    lines.append(
        f"determinant audit: samples={report.samples} seed={report.seed} "
        f"degenerate_skipped={report.degenerate_skipped} "
        f"modulus={_fmt(report.max_modulus_deviation)} "
        f"ratio={_fmt(report.max_ratio_deviation)} "
        f"offdiag={_fmt(report.max_offdiag_asymmetry)} "
        f"closed_form={_fmt(report.max_closed_form_deviation)}"
    )
    if report.worst() > tol_det:
        failures.append(f"determinant audit worst deviation exceeds {_fmt(tol_det)}")

    status = "PASS" if not failures else "FAIL"
    lines.append(f"validation: {status}")
    for failure in failures:
        lines.append(f"failed: {failure}")
    text = "\n".join(lines) + "\n"
    out = _merge(args, config, "out", str)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if not failures else EXIT_VALIDATION


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="key=value config file; flags override it")
    parser.add_argument("--ml", type=float, help="rest mass on the left")
    parser.add_argument("--mr", type=float, help="rest mass on the right")
    parser.add_argument("--vl", type=float, help="Fermi velocity on the left")
    parser.add_argument("--vr", type=float, help="Fermi velocity on the right")
    parser.add_argument("--vf", type=float, help="shorthand setting both velocities")
    parser.add_argument(
        "--family",
        choices=[f.value for f in ExtensionFamily],
        help="named point-interaction family",
    )
    parser.add_argument(
        "--strength",
        type=float,
        help="interaction strength (negative for equally-mixed/pure-scalar, "
        "positive for inverted-mixed/pure-vector)",
    )
    parser.add_argument("--alpha", type=float, help="extension angle in [0, pi)")
    parser.add_argument("--a0", type=float, help="extension parameter a0")
    parser.add_argument("--a1", type=float, help="extension parameter a1 (nonzero)")
    parser.add_argument("--a3", type=float, help="extension parameter a3")
    parser.add_argument("--emin", type=float, help="window lower edge")
    parser.add_argument("--emax", type=float, help="window upper edge")
    parser.add_argument("--n", type=int, help="grid size")
    parser.add_argument("--out", help="output path (default: stdout)")
    parser.add_argument("--format", choices=["csv", "json"], help="output format (default csv)")
    parser.add_argument("--seed", type=int, help="random seed where applicable")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac-junction",
        description="Scattering and bound states of a 1D Dirac particle at a "
        "mass/velocity jump with a point interaction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scatter", help="amplitudes and flux coefficients over an energy grid")
    _add_common(p)
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("bound", help="bound-state energies of a named family")
    _add_common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="bound states along a strength grid")
    _add_common(p)
    p.add_argument("--smin", type=float, help="strength grid start")
    p.add_argument("--smax", type=float, help="strength grid end")
    p.add_argument(
        "--comparison-mass",
        dest="comparison_mass",
        type=float,
        help="mass of the equal-mass reference curve (default: left mass)",
    )
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("resonances", help="reflection zeros and band-edge transmission zeros")
    _add_common(p)
    p.set_defaults(func=cmd_resonances)

    p = sub.add_parser("validate", help="numerical verification suite")
    _add_common(p)
    p.add_argument("--samples", type=int, help="determinant-audit sample count (default 1000)")
    p.add_argument("--tol-eigen", dest="tol_eigen", type=float, help="eigen-residual tolerance")
    p.add_argument("--tol-norm", dest="tol_norm", type=float, help="norm-error tolerance")
    p.add_argument("--tol-det", dest="tol_det", type=float, help="determinant-audit tolerance")
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config) if args.config else {}
        return args.func(args, config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except _NUMERICAL_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (BelowThreshold, OutsideWindow, DiracJunctionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
