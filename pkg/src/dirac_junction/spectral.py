"""Bound states of the four named families and of arbitrary extensions.

Each named family has a real spectral equation on the open window
(-min gap, +min gap) whose roots are the bound-state energies.  Roots are
located by uniform-grid sign bracketing refined with plain bisection
(unconditionally convergent; the residuals have square-root kinks at the
window edges, so derivative methods are avoided).  Near-tangent roots are
caught by a grid-minimum fallback.

For arbitrary a2 = 0 extension parameters the pole denominator of the
scattering amplitudes is continued into the gap with
sqrt(E - gap) -> i sqrt(gap - E); its zeros reproduce the named spectral
equations, which pins the continuation branch (the opposite branch fails
that reduction).

Pure functions; strength sweeps are order-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ._rootfind import bisect_sign_change, golden_min
from .core import ExtensionFamily, ExtensionParams, Junction, NamedExtension
from .errors import OutsideWindow, VelocityMismatch

#: bisection width, relative to the window span
BISECT_REL = 1e-12
#: window-edge clamp, relative to the window span
EDGE_EPS_REL = 1e-12
#: acceptance level for a tangent root: |residual| relative to the term
#: scale after refinement
TANGENT_DIP = 1e-9
#: grid dips below this (relative) are worth refining as tangent-root
#: candidates; a tangency narrower than the grid still dips this far
TANGENT_CANDIDATE = 1e-4


@dataclass(frozen=True)
class BoundState:
    """One bound-state energy with the residual left at the refined root."""

    energy: float
    family: Union[NamedExtension, ExtensionParams]
    residual: float


@dataclass(frozen=True)
class SweepTable:
    """Bound-state energies along a strength sweep, plus equal-mass curves.

    ``energies[i]`` holds every root found at ``strengths[i]``;
    ``equal_mass_energies[i]`` holds the closed-form equal-mass energies at
    the comparison mass (the dashed-curve analog).
    """

    family: ExtensionFamily
    strengths: tuple[float, ...]
    energies: tuple[tuple[float, ...], ...]
    equal_mass_energies: tuple[tuple[float, ...], ...]
    comparison_mass: float

    def __post_init__(self):
        if not len(self.strengths) == len(self.energies) == len(self.equal_mass_energies):
            raise ValueError("sweep columns must have matching lengths")


def _require_equal_velocities(junction: Junction) -> float:
    if not junction.equal_velocities:
        raise VelocityMismatch("spectral equations assume v_l = v_r")
    return junction.left.velocity


def _residual_terms(named: NamedExtension, junction: Junction, energies):
    """Additive terms of the family's spectral equation, vectorized over E.

    Returns (terms, scale): the residual is terms.sum(axis=0) and scale is
    the sum of term magnitudes, used for relative-smallness tests.
    """
    vf = _require_equal_velocities(junction)
    es = np.asarray(energies, dtype=float)
    mul, mur = junction.left.gap, junction.right.gap
    sl, sr = math.hypot(1.0, mul), math.hypot(1.0, mur)
    g = named.strength
    fam = named.family
    if fam is ExtensionFamily.EQUALLY_MIXED:
        terms = [
            (g / vf) * np.sqrt((es + mul) * (es + mur)),
            sl * np.sqrt((mul - es) * (es + mur)),
            sr * np.sqrt((es + mul) * (mur - es)),
        ]
    elif fam is ExtensionFamily.INVERTED_MIXED:
        terms = [
            sl * np.sqrt((mul - es) * (es + mur)),
            sr * np.sqrt((es + mul) * (mur - es)),
            -vf * g * sl * sr * np.sqrt(mur - es) * np.sqrt(mul - es),
        ]
    elif fam is ExtensionFamily.PURE_SCALAR:
        q = math.sqrt(sl) * math.sqrt(sr)
        terms = [
            q * (np.sqrt((mul - es) * (mur - es)) + np.sqrt((es + mul) * (es + mur)))
            * math.sinh(g / vf),
            (sl * np.sqrt((mul - es) * (es + mur)) + sr * np.sqrt((es + mul) * (mur - es)))
            * math.cosh(g / vf),
        ]
    else:  # PURE_VECTOR
        ml, mr = junction.left.mass, junction.right.mass
        terms = [
            (ml**2 * np.sqrt(mur + es) * np.sqrt(mul - es)
             + mr**2 * np.sqrt(mul + es) * np.sqrt(mur - es)) * math.cos(g / vf),
            ml * mr * (np.sqrt((mur + es) * (mul + es)) - np.sqrt((mul - es) * (mur - es)))
            * math.sin(g / vf),
        ]
    terms = np.stack([np.broadcast_to(t, es.shape) for t in terms])
    return terms, np.abs(terms).sum(axis=0)


def spectral_residual(named: NamedExtension, junction: Junction, energy: float) -> float:
    """Left-hand side of the family's spectral equation at one energy.

    The energy must lie strictly inside the open bound window; every
    radicand is then non-negative and the residual is real and smooth.
    """
    g = junction.min_gap
    if not -g < energy < g:
        raise OutsideWindow(f"E = {energy} is not inside (-{g}, {g})")
    terms, _ = _residual_terms(named, junction, energy)
    return float(terms.sum(axis=0))


def residual_scale(named: NamedExtension, junction: Junction, energy: float) -> float:
    """Largest-term scale of the spectral equation at one energy."""
    g = junction.min_gap
    if not -g < energy < g:
        raise OutsideWindow(f"E = {energy} is not inside (-{g}, {g})")
    terms, _ = _residual_terms(named, junction, energy)
    return float(np.abs(terms).max(axis=0))


def find_bound_states(
    named: NamedExtension, junction: Junction, grid_n: int = 512
) -> list[BoundState]:
    """All bound-state energies of a named extension, sorted ascending.

    Brackets every sign change of the spectral residual on a uniform grid
    over the open window, refines each bracket by bisection to
    1e-12 * window, and deduplicates.  A residual dipping below
    1e-9 * scale without a sign change is treated as a tangent root and
    refined by bounded minimization.  An empty window (a massless side)
    yields an empty list.
    """
    if grid_n < 16:
        raise ValueError("grid_n must be at least 16")
    gap = junction.min_gap
    if gap <= 0:
        return []
    span = 2 * gap
    eps = EDGE_EPS_REL * span
    es = np.linspace(-gap + eps, gap - eps, grid_n)
    terms, scales = _residual_terms(named, junction, es)
    vals = terms.sum(axis=0)

    def f(e: float) -> float:
        t, _ = _residual_terms(named, junction, e)
        return float(t.sum(axis=0))

    roots = []
    signs = np.sign(vals)
    for i in range(grid_n - 1):
        if vals[i] == 0.0:
            roots.append(float(es[i]))
        elif signs[i] * signs[i + 1] < 0:
            roots.append(
                bisect_sign_change(f, float(es[i]), float(es[i + 1]), BISECT_REL * span)
            )
    if vals[-1] == 0.0:
        roots.append(float(es[-1]))

    # tangent roots: refine dips with no sign change on the squared
    # residual (smooth at a tangency, unlike the absolute value); the
    # acceptance keeps only minima that actually reach the residual floor
    rel = np.abs(vals) / np.where(scales > 0, scales, 1.0)
    for i in range(1, grid_n - 1):
        if (
            rel[i] < TANGENT_CANDIDATE
            and rel[i] <= rel[i - 1]
            and rel[i] <= rel[i + 1]
            and signs[i - 1] == signs[i + 1]
        ):
            x = golden_min(
                lambda e: f(e) ** 2,
                float(es[i - 1]),
                float(es[i + 1]),
                BISECT_REL * span,
            )
            _, sc = _residual_terms(named, junction, x)
            if abs(f(x)) < TANGENT_DIP * float(sc):
                roots.append(x)

    roots.sort()
    out: list[BoundState] = []
    for e in roots:
        if out and abs(e - out[-1].energy) < 1e-10 * span:
            continue
        out.append(BoundState(e, named, abs(f(e))))
    return out


def equal_mass_energy(named: NamedExtension, mass: float, velocity: float) -> list[float]:
    """Closed-form bound-state energies in the equal-mass limit.

    One value for the equally mixed and inverted mixed families, a
    symmetric pair for pure scalar and pure vector (for the latter the
    full equation keeps only the member selected by the sign of
    sin(strength / v); both printed values are returned).
    """
    if not (mass > 0 and velocity > 0):
        raise ValueError("equal-mass closed forms need mass > 0 and velocity > 0")
    gap = mass * velocity**2
    s = math.hypot(1.0, gap)
    g = named.strength
    fam = named.family
    if fam is ExtensionFamily.EQUALLY_MIXED:
        gt = g / (velocity * s)
        return [gap * (4 - gt**2) / (4 + gt**2)]
    if fam is ExtensionFamily.INVERTED_MIXED:
        gt = velocity * s * g
        return [-gap * (4 - gt**2) / (4 + gt**2)]
    if fam is ExtensionFamily.PURE_SCALAR:
        e = gap / math.cosh(g / velocity)
        return [-e, e]
    e = gap * math.cos(g / velocity)
    return sorted([-e, e])


def general_bound_residual(
    ext: ExtensionParams, junction: Junction, energy: float
) -> complex:
    """Pole denominator continued into the gap for arbitrary a2 = 0 parameters.

    Every sqrt(E - gap) is replaced by i sqrt(gap - E) (positive real inner
    root); the result is purely imaginary on the window, and its zeros
    coincide with the named-family bound states when the parameters match a
    named member.  That reduction fixes the branch; the opposite one fails
    it.
    """
    g = junction.min_gap
    if not -g < energy < g:
        raise OutsideWindow(f"E = {energy} is not inside (-{g}, {g})")
    mul, mur = junction.left.gap, junction.right.gap
    sl, sr = math.hypot(1.0, mul), math.hypot(1.0, mur)
    c, s = math.cos(ext.alpha), math.sin(ext.alpha)
    x = ext.a0 + c
    r_eml = 1j * math.sqrt(mul - energy)
    r_epl = math.sqrt(energy + mul)
    r_emr = 1j * math.sqrt(mur - energy)
    r_epr = math.sqrt(energy + mur)
    cross = mul * mur * x + ext.a0 - c + mul * (ext.a3 - s) - mur * (ext.a3 + s)
    return complex(
        sr * r_emr * (r_epl * (ext.a3 + s - mul * x) - 1j * x * sl * r_eml)
        - sl * r_eml * r_epr * (ext.a3 - s + mur * x)
        + 1j * r_epl * r_epr * cross
    )


def sweep_strength(
    family: ExtensionFamily,
    junction: Junction,
    strength_range: tuple[float, float],
    n: int,
    comparison_mass: float | None = None,
) -> SweepTable:
    """Bound states on a uniform strength grid, plus equal-mass curves.

    ``comparison_mass`` selects the mass of the equal-mass reference curve
    and defaults to the left mass; this default reproduces the reported
    crossing of the two curves for the inverted mixed family.
    """
    vf = _require_equal_velocities(junction)
    if n < 2:
        raise ValueError("sweep needs at least two strengths")
    strengths = tuple(float(s) for s in np.linspace(strength_range[0], strength_range[1], n))
    mass = junction.left.mass if comparison_mass is None else comparison_mass
    energies = []
    reference = []
    for s in strengths:
        named = NamedExtension(family, s)  # validates the family's sign
        energies.append(tuple(b.energy for b in find_bound_states(named, junction)))
        if mass > 0:
            window = mass * vf**2
            reference.append(
                tuple(e for e in equal_mass_energy(named, mass, vf) if abs(e) < window)
            )
        else:
            reference.append(())
    return SweepTable(family, strengths, tuple(energies), tuple(reference), mass)
