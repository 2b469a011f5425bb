"""Scattering amplitudes and coefficients across the junction.

A plane wave with energy |E| above both gaps scatters on the point
interaction.  Reflection and transmission amplitudes are computed two ways:

* ``amplitudes_solve``  -- solve the 2x2 matching system for any matrix T,
* ``amplitudes_closed`` -- the closed-form amplitudes on the a2 = 0 slice.

The two routes agree to roundoff and both satisfy flux unitarity
|r|^2 + T_flux = 1, where T_flux weights |t|^2 with the ratio of the
outgoing to incoming probability currents.

Energies in the upper continuum E > max gap and lower continuum
E < -max gap are both propagating and both supported; everything in the
gap region raises BelowThreshold (evanescent regime, out of scope).

Pure functions throughout; energy sweeps can run concurrently on disjoint
grids and give results identical to sequential evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from ._rootfind import bisect_sign_change, golden_min
from .core import (
    ExtensionFamily,
    ExtensionParams,
    Junction,
    MatchingMatrix,
    NamedExtension,
    matching_closed_form,
    named_matrix,
)
from .errors import BelowThreshold, SingularSystem, VelocityMismatch

FROM_LEFT = "from_left"
FROM_RIGHT = "from_right"

#: relative margin excluding the band edge from the propagating regime
EDGE_MARGIN = 1e-9
#: an amplitude numerator below this (relative) counts as a genuine zero
ZERO_ACCEPT = 1e-8
#: numerator identically zero (relative) on the whole grid
IDENTICALLY_ZERO = 1e-12
#: grid dips below this (relative) are refined as touching-zero candidates;
#: a zero narrower than the grid spacing still leaves a dip of this size
DIP_CANDIDATE = 1e-3


@dataclass(frozen=True)
class ScatteringAmplitudes:
    """Reflection and transmission amplitudes at one energy."""

    r: complex
    t: complex
    direction: str
    energy: float

    def __post_init__(self):
        if self.direction not in (FROM_LEFT, FROM_RIGHT):
            raise ValueError(f"direction must be {FROM_LEFT!r} or {FROM_RIGHT!r}")
        if abs(self.r) > 1.0 + 1e-10:
            raise ValueError(f"|r| = {abs(self.r)} exceeds 1")


@dataclass(frozen=True)
class EnergyWindow:
    """An energy interval for sweeps, of scattering or bound kind."""

    emin: float
    emax: float
    kind: str

    def __post_init__(self):
        if self.kind not in ("scattering", "bound"):
            raise ValueError("kind must be 'scattering' or 'bound'")
        if not self.emax > self.emin:
            raise ValueError("emax must exceed emin")

    def validate(self, junction: Junction) -> None:
        if self.kind == "scattering":
            if not self.emin > junction.max_gap:
                raise ValueError(
                    f"scattering window must start above the larger gap "
                    f"{junction.max_gap}, got emin = {self.emin}"
                )
        else:
            g = junction.min_gap
            if not (-g < self.emin and self.emax < g):
                raise ValueError(
                    f"bound window must lie inside (-{g}, {g}), got "
                    f"({self.emin}, {self.emax})"
                )


def scattering_window(junction: Junction, emin: float, emax: float) -> EnergyWindow:
    w = EnergyWindow(emin, emax, "scattering")
    w.validate(junction)
    return w


def _require_propagating(junction: Junction, energy: float, edge_margin: float) -> None:
    gap = junction.max_gap
    if abs(energy) <= gap * (1.0 + edge_margin) or energy == 0.0:
        raise BelowThreshold(
            f"|E| = {abs(energy)} is not above the larger gap {gap}; "
            "no propagating waves on both sides"
        )


def _gamma(gap: float, energy: float) -> float:
    """Spinor weight sqrt((E - gap)/(E + gap)); positive in both continua."""
    return math.sqrt((energy - gap) / (energy + gap))


# ---------------------------------------------------------------------------
# amplitudes
# ---------------------------------------------------------------------------

def amplitudes_solve(
    t: MatchingMatrix,
    junction: Junction,
    energy: float,
    direction: str = FROM_LEFT,
    edge_margin: float = EDGE_MARGIN,
) -> ScatteringAmplitudes:
    """Solve the 2x2 matching system for the amplitudes at one energy.

    For incidence from the left the ansatz is an incoming right-mover plus
    a reflected left-mover for x < 0 and a transmitted right-mover for
    x > 0; from the right it is the mirror image with an incoming
    left-mover.  Both directions share the same pole structure.
    ``edge_margin`` is the relative band-edge exclusion; at the edge the
    plane-wave ansatz degenerates.
    """
    if direction not in (FROM_LEFT, FROM_RIGHT):
        raise ValueError(f"direction must be {FROM_LEFT!r} or {FROM_RIGHT!r}")
    _require_propagating(junction, energy, edge_margin)
    gl = _gamma(junction.left.gap, energy)
    gr = _gamma(junction.right.gap, energy)
    m = t.matrix
    if direction == FROM_LEFT:
        # t (1, gr)^T = T [(1, gl)^T + r (1, -gl)^T]
        a = np.column_stack([m @ np.array([1.0, -gl]), [-1.0, -gr]])
        b = -(m @ np.array([1.0, gl]))
    else:
        # (1 + r, -gr (1 - r))^T = t T (1, -gl)^T
        a = np.column_stack([np.array([1.0, gr]), -(m @ np.array([1.0, -gl]))])
        b = np.array([-1.0, gr])
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    if abs(det) <= 1e-12 * max(1.0, float(np.abs(a).max()) ** 2):
        raise SingularSystem(f"scattering system is rank deficient at E = {energy}")
    r, tt = np.linalg.solve(a, b)
    return ScatteringAmplitudes(complex(r), complex(tt), direction, float(energy))


def amplitudes_closed(
    ext: ExtensionParams,
    junction: Junction,
    energy: float,
    edge_margin: float = EDGE_MARGIN,
) -> ScatteringAmplitudes:
    """Closed-form left-incidence amplitudes on the a2 = 0 slice.

    r = N/D with N, D sums of products of two band radicals sqrt(E -+ gap)
    apiece; t carries the transmission kernel
    (s_l s_r)^(1/2) sqrt(E - gap_l) sqrt(E + gap_r) and a factor a1.  Each
    radical is taken with the principal complex branch so the expressions
    remain valid in the lower continuum, where they keep matching the
    linear-solve route.
    """
    _require_propagating(junction, energy, edge_margin)
    mul, mur = junction.left.gap, junction.right.gap
    sl, sr = math.hypot(1.0, mul), math.hypot(1.0, mur)
    c, s = math.cos(ext.alpha), math.sin(ext.alpha)
    x = ext.a0 + c
    csqrt = np.lib.scimath.sqrt
    r_eml = csqrt(energy - mul)
    r_epl = csqrt(energy + mul)
    r_emr = csqrt(energy - mur)
    r_epr = csqrt(energy + mur)
    cross = mul * mur * x + ext.a0 - c + mul * (ext.a3 - s) - mur * (ext.a3 + s)

    num = (
        -sr * r_emr * (r_epl * (ext.a3 + s - mul * x) + 1j * x * sl * r_eml)
        - sl * r_eml * r_epr * (ext.a3 - s + mur * x)
        - 1j * r_epl * r_epr * cross
    )
    den = (
        sr * r_emr * (r_epl * (ext.a3 + s - mul * x) - 1j * x * sl * r_eml)
        - sl * r_eml * r_epr * (ext.a3 - s + mur * x)
        + 1j * r_epl * r_epr * cross
    )
    kernel = math.sqrt(sl * sr) * r_eml * r_epr
    vfac = math.sqrt(junction.left.velocity / junction.right.velocity)
    r = num / den
    t = 2.0 * vfac * ext.a1 * kernel / den
    return ScatteringAmplitudes(complex(r), complex(t), FROM_LEFT, float(energy))


def flux_transmission(
    junction: Junction,
    energy: float,
    amps: ScatteringAmplitudes,
    edge_margin: float = EDGE_MARGIN,
) -> float:
    """Flux-weighted transmission coefficient, so that |r|^2 + T_flux = 1.

    Weights |t|^2 with the current ratio of the outgoing to the incoming
    wave; the factor is mirrored for right incidence.
    """
    _require_propagating(junction, energy, edge_margin)
    mul, mur = junction.left.gap, junction.right.gap
    if amps.direction == FROM_LEFT:
        ratio = ((energy + mul) * (energy - mur)) / ((energy - mul) * (energy + mur))
        vfac = junction.right.velocity / junction.left.velocity
    else:
        ratio = ((energy + mur) * (energy - mul)) / ((energy - mur) * (energy + mul))
        vfac = junction.left.velocity / junction.right.velocity
    return abs(amps.t) ** 2 * math.sqrt(ratio) * vfac


# ---------------------------------------------------------------------------
# resonances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReflectionZeros:
    """Result of a transmission-resonance search.

    ``identically_transparent`` marks the degenerate free case where the
    reflection numerator vanishes at every energy; the zero list is then
    empty rather than infinite.
    """

    energies: tuple[float, ...]
    identically_transparent: bool = False


def _matrix_from(source, junction: Junction) -> MatchingMatrix:
    if isinstance(source, MatchingMatrix):
        return source
    if isinstance(source, NamedExtension):
        return named_matrix(source, junction)
    if isinstance(source, ExtensionParams):
        return matching_closed_form(source, junction)
    raise TypeError(f"cannot build a matching matrix from {type(source).__name__}")


def _reflection_numerator(t: MatchingMatrix, junction: Junction, energies):
    """Numerator of r for left incidence, vectorized over energies.

    Zeros of this function are the transmission resonances; the
    accompanying scale is the sum of the term magnitudes, used for
    relative smallness tests.
    """
    es = np.asarray(energies, dtype=float)
    gl = np.sqrt((es - junction.left.gap) / (es + junction.left.gap))
    gr = np.sqrt((es - junction.right.gap) / (es + junction.right.gap))
    terms = np.stack(
        [
            np.broadcast_to(t.t21, es.shape),
            gl * t.t22,
            -gr * t.t11,
            -gl * gr * t.t12,
        ]
    )
    return terms.sum(axis=0), np.abs(terms).sum(axis=0)


def find_reflection_zeros(
    source: Union[NamedExtension, ExtensionParams, MatchingMatrix],
    junction: Junction,
    window: EnergyWindow,
    grid_n: int,
) -> ReflectionZeros:
    """Locate the energies where the reflection amplitude vanishes.

    Scans a uniform grid over the window for sign changes of the real and
    imaginary parts of the reflection numerator, refines each bracket by
    bisection to 1e-10, and keeps roots where |r| <= 1e-8 (a zero needs
    both parts to vanish together; the acceptance check enforces the part
    that was not bisected).  Dips of |numerator| without a sign change
    (touching zeros, or zeros narrower than the grid) are refined by
    golden-section.  Returns the identically-transparent marker when the
    numerator vanishes on the whole grid.
    """
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    if window.kind != "scattering":
        raise ValueError("resonance search needs a scattering window")
    window.validate(junction)
    t = _matrix_from(source, junction)
    es = np.linspace(window.emin, window.emax, grid_n)
    num, scale = _reflection_numerator(t, junction, es)
    rel = np.abs(num) / scale
    if rel.max() <= IDENTICALLY_ZERO:
        return ReflectionZeros((), identically_transparent=True)

    re_dead = np.abs(num.real).max() <= IDENTICALLY_ZERO * scale.max()
    im_dead = np.abs(num.imag).max() <= IDENTICALLY_ZERO * scale.max()

    def num_at(e: float) -> complex:
        val, _ = _reflection_numerator(t, junction, e)
        return complex(val)

    candidates = []
    re_sign = np.sign(num.real)
    im_sign = np.sign(num.imag)
    for i in range(grid_n - 1):
        lo, hi = float(es[i]), float(es[i + 1])
        if re_sign[i] * re_sign[i + 1] < 0 and not re_dead:
            candidates.append(bisect_sign_change(lambda e: num_at(e).real, lo, hi, 1e-10))
        elif im_sign[i] * im_sign[i + 1] < 0 and not im_dead:
            candidates.append(bisect_sign_change(lambda e: num_at(e).imag, lo, hi, 1e-10))

    # touching zeros and zeros narrower than the grid: refine interior dips
    # of the squared modulus (smooth at the bottom where the modulus has a
    # kink); the |r| acceptance below keeps only the genuine ones
    for i in range(1, grid_n - 1):
        if rel[i] <= DIP_CANDIDATE and rel[i] <= rel[i - 1] and rel[i] <= rel[i + 1]:
            candidates.append(
                golden_min(
                    lambda e: abs(num_at(e)) ** 2,
                    float(es[i - 1]),
                    float(es[i + 1]),
                    1e-13,
                )
            )

    accepted = []
    for e in sorted(candidates):
        amp = amplitudes_solve(t, junction, e)
        if abs(amp.r) > ZERO_ACCEPT:
            continue
        if accepted and abs(e - accepted[-1]) < 1e-9 * (window.emax - window.emin):
            continue
        accepted.append(e)
    return ReflectionZeros(tuple(accepted))


def zero_momentum_resonances(junction: Junction) -> list[float]:
    """Band-edge energies where a transmission amplitude vanishes.

    The transmission kernel for left incidence vanishes at E = gap_l and
    E = -gap_r, the right-incidence one at the sign mirror; the union is
    {+-gap_l, +-gap_r}, deduplicated and sorted.
    """
    values = {
        junction.left.gap,
        -junction.left.gap,
        junction.right.gap,
        -junction.right.gap,
    }
    return sorted(v + 0.0 for v in values)


# ---------------------------------------------------------------------------
# high-energy behavior
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TransmissionBound:
    """Energy-dependent lower bound on |t|^2 for a non-confining family.

    ``always_transmits`` records that the transmission never vanishes at
    any propagating energy.
    """

    lower_bound: Callable[[float], float]
    always_transmits: bool = True


def high_energy_transmission(
    named: NamedExtension, junction: Junction
) -> Union[float, TransmissionBound]:
    """High-energy transmission asymptote, or the pure-vector lower bound.

    The three confining families have |t|^2 approaching a constant below
    one as E grows; the pure-vector family instead transmits at every
    energy, with an explicit lower bound returned as a callable of E.
    """
    if not junction.equal_velocities:
        raise VelocityMismatch("high-energy forms assume v_l = v_r")
    vf = junction.left.velocity
    sl = math.hypot(1.0, junction.left.gap)
    sr = math.hypot(1.0, junction.right.gap)
    g = named.strength
    fam = named.family
    if fam is ExtensionFamily.EQUALLY_MIXED:
        return 4 * vf**2 * sl * sr / (vf**2 * (sl + sr) ** 2 + g**2)
    if fam is ExtensionFamily.INVERTED_MIXED:
        return 4 * sl * sr / ((sl + sr) ** 2 + vf**2 * sl**2 * sr**2 * g**2)
    if fam is ExtensionFamily.PURE_SCALAR:
        return 4 * sl * sr / ((sl + sr) ** 2 * math.cosh(g / vf) ** 2)

    ml, mr = junction.left.mass, junction.right.mass
    mul, mur = junction.left.gap, junction.right.gap

    def bound(energy: float) -> float:
        kin = ml**2 * mr**2 * math.sqrt(energy**2 - mul**2) * math.sqrt(energy**2 - mur**2)
        return 8 * kin / (4 * kin + energy**2 * (ml**2 + mr**2) ** 2)

    return TransmissionBound(lower_bound=bound)
