"""Domain types and matching matrices for a 1D Dirac junction.

A junction joins two homogeneous media on the half-lines x < 0 and x > 0.
In each medium the particle obeys the Dirac Hamiltonian

    H = -i v sigma_x d/dx + m v^2 sigma_z        (hbar = 1)

with its own rest mass m and Fermi velocity v.  The Hamiltonian restricted
to functions vanishing at the origin is symmetric with deficiency indices
(2, 2), so its self-adjoint realizations form a U(2) family.  Each member
is encoded by a 2x2 complex matching matrix T relating the spinor limits
across the junction:

    phi(0+) = T phi(0-),      |det T| = v_l / v_r.

This module provides the domain types, the square-integrable solutions of
H^dag psi = +-i psi that span the deficiency subspaces, and three
constructions of T:

* ``matching_from_unitary``  -- linear algebra on the deficiency basis,
* ``matching_closed_form``   -- the closed form on the a2 = 0 slice of U(2),
* ``named_matrix``           -- the four named point-interaction families.

The two generic routes agree entrywise and reproduce the named matrices;
the closed form's off-diagonal sign convention is pinned by that agreement
(see tests/test_core.py).

All functions are pure and all values are immutable after construction.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegenerateExtension,
    SingularBoundaryMatrix,
    StrengthSignError,
    VelocityMismatch,
)

#: tolerance for unit-norm / unitarity invariants of parameter types
UNIT_TOL = 1e-12
#: tolerance for the |det T| = v_l/v_r invariant
DET_TOL = 1e-10
#: |a1| below this decouples the half-lines (no transmission matrix)
DEGENERATE_A1_TOL = 1e-12
#: condition-number limit for the 0+ boundary matrix
BOUNDARY_COND_LIMIT = 1e12


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Medium:
    """One side of the junction: rest mass and Fermi velocity (natural units)."""

    mass: float
    velocity: float

    def __post_init__(self):
        if not self.velocity > 0:
            raise ValueError(f"velocity must be strictly positive, got {self.velocity}")
        if self.mass < 0:
            raise ValueError(f"mass must be non-negative, got {self.mass}")

    @property
    def gap(self) -> float:
        """Band edge m v^2; the bulk spectrum of the medium is |E| >= gap."""
        return self.mass * self.velocity**2

    @property
    def decay_rate(self) -> float:
        """Decay exponent sqrt(1 + (m v^2)^2) / v of the deficiency solutions."""
        return math.hypot(1.0, self.gap) / self.velocity


@dataclass(frozen=True)
class Junction:
    """Ordered pair of media; ``left`` fills x < 0, ``right`` fills x > 0."""

    left: Medium
    right: Medium

    @property
    def max_gap(self) -> float:
        return max(self.left.gap, self.right.gap)

    @property
    def min_gap(self) -> float:
        return min(self.left.gap, self.right.gap)

    @property
    def velocity_ratio(self) -> float:
        """v_l / v_r, the modulus of every matching-matrix determinant."""
        return self.left.velocity / self.right.velocity

    @property
    def equal_velocities(self) -> bool:
        return self.left.velocity == self.right.velocity


@dataclass(frozen=True)
class ExtensionParams:
    """Point on the a2 = 0 slice of U(2) selecting a self-adjoint extension.

    The extension is U = e^{i alpha} A with A built from (a0, a1, a2=0, a3)
    on the unit 3-sphere; alpha runs over [0, pi) with the endpoints
    identified (alpha = pi, a) ~ (alpha = 0, -a).  a1 = 0 decouples the two
    half-lines; such parameters are rejected by the closed-form matrix.
    """

    alpha: float
    a0: float
    a1: float
    a3: float

    def __post_init__(self):
        if not 0.0 <= self.alpha < math.pi:
            raise ValueError(f"alpha must lie in [0, pi), got {self.alpha}")
        norm = self.a0**2 + self.a1**2 + self.a3**2
        if abs(norm - 1.0) > UNIT_TOL:
            raise ValueError(f"(a0, a1, a3) must be unit length, |a|^2 = {norm}")


@dataclass(frozen=True)
class UnitaryMatrix:
    """Validated 2x2 unitary matrix parametrizing a self-adjoint extension."""

    u11: complex
    u12: complex
    u21: complex
    u22: complex

    def __post_init__(self):
        m = self.matrix
        dev = np.abs(m.conj().T @ m - np.eye(2)).max()
        if dev > UNIT_TOL:
            raise ValueError(f"matrix is not unitary within {UNIT_TOL}: deviation {dev}")

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.u11, self.u12], [self.u21, self.u22]])

    @classmethod
    def from_sphere(cls, alpha: float, a0: float, a1: float, a2: float, a3: float) -> "UnitaryMatrix":
        """U = e^{i alpha} [[a0 - i a3, -a2 - i a1], [a2 - i a1, a0 + i a3]]."""
        phase = cmath.exp(1j * alpha)
        return cls(
            phase * (a0 - 1j * a3),
            phase * (-a2 - 1j * a1),
            phase * (a2 - 1j * a1),
            phase * (a0 + 1j * a3),
        )

    @classmethod
    def from_params(cls, ext: ExtensionParams) -> "UnitaryMatrix":
        return cls.from_sphere(ext.alpha, ext.a0, ext.a1, 0.0, ext.a3)


@dataclass(frozen=True)
class MatchingMatrix:
    """2x2 complex matrix relating spinor limits: phi(0+) = T phi(0-)."""

    t11: complex
    t12: complex
    t21: complex
    t22: complex
    junction: Junction

    def __post_init__(self):
        dev = abs(abs(self.det) / self.junction.velocity_ratio - 1.0)
        if dev > DET_TOL:
            raise ValueError(
                f"|det T| must equal v_l/v_r = {self.junction.velocity_ratio}; "
                f"relative deviation {dev}"
            )

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.t11, self.t12], [self.t21, self.t22]])

    @property
    def det(self) -> complex:
        return self.t11 * self.t22 - self.t12 * self.t21


class ExtensionFamily(Enum):
    """The four named point-interaction families (velocities equal)."""

    EQUALLY_MIXED = "equally-mixed"
    INVERTED_MIXED = "inverted-mixed"
    PURE_SCALAR = "pure-scalar"
    PURE_VECTOR = "pure-vector"


#: sign each family's strength must have
_STRENGTH_SIGN = {
    ExtensionFamily.EQUALLY_MIXED: -1,
    ExtensionFamily.INVERTED_MIXED: +1,
    ExtensionFamily.PURE_SCALAR: -1,
    ExtensionFamily.PURE_VECTOR: +1,
}


@dataclass(frozen=True)
class NamedExtension:
    """A named family member: which family plus its single real strength."""

    family: ExtensionFamily
    strength: float

    def __post_init__(self):
        sign = _STRENGTH_SIGN[self.family]
        if sign > 0 and not self.strength > 0:
            raise StrengthSignError(
                f"{self.family.value} requires strength > 0, got {self.strength}"
            )
        if sign < 0 and not self.strength < 0:
            raise StrengthSignError(
                f"{self.family.value} requires strength < 0, got {self.strength}"
            )


@dataclass(frozen=True)
class SpinorSample:
    """Value of a two-component spinor at a point."""

    upper: complex
    lower: complex

    def __post_init__(self):
        if not (cmath.isfinite(self.upper) and cmath.isfinite(self.lower)):
            raise ValueError("spinor components must be finite")

    @property
    def density(self) -> float:
        return abs(self.upper) ** 2 + abs(self.lower) ** 2


# ---------------------------------------------------------------------------
# deficiency spinors
# ---------------------------------------------------------------------------

def _spinor_lower(side: str, eigsign: int, medium: Medium) -> complex:
    """Lower component (relative to a unit upper component) at the origin."""
    mu = medium.gap
    s = math.hypot(1.0, mu)
    if side == "right":
        return 1j * s / (1j + mu) if eigsign > 0 else 1j * s / (mu - 1j)
    return -1j * s / (1j + mu) if eigsign > 0 else -1j * s / (mu - 1j)


def _check_side_sign(side: str, eigsign: int) -> None:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if eigsign not in (+1, -1):
        raise ValueError(f"eigsign must be +1 or -1, got {eigsign!r}")


def deficiency_spinor(side: str, eigsign: int, medium: Medium, x: float) -> SpinorSample:
    """Normalized square-integrable solution of H^dag psi = (eigsign) i psi.

    The solution supported on x > 0 is requested with ``side='right'``, the
    one on x < 0 with ``side='left'``; off its support the zero spinor is
    returned.  At x = 0 the one-sided boundary value is returned.  Each
    solution decays at rate sqrt(1 + (m v^2)^2)/v and is normalized so the
    squared modulus integrates to one over its half-line.
    """
    _check_side_sign(side, eigsign)
    if (side == "right" and x < 0) or (side == "left" and x > 0):
        return SpinorSample(0j, 0j)
    prefactor = math.sqrt(math.hypot(1.0, medium.gap) / medium.velocity)
    envelope = math.exp(-medium.decay_rate * abs(x))
    lower = _spinor_lower(side, eigsign, medium)
    return SpinorSample(prefactor * envelope, prefactor * envelope * lower)


def _boundary_values(junction: Junction):
    """Boundary values at the origin of the four deficiency solutions.

    Returns (pp, pm, mp, mm) as complex 2-vectors: the +i solutions on the
    right/left, then the -i solutions on the right/left.
    """
    def vec(side, eigsign, medium):
        sample = deficiency_spinor(side, eigsign, medium, 0.0)
        return np.array([sample.upper, sample.lower])

    return (
        vec("right", +1, junction.right),
        vec("left", +1, junction.left),
        vec("right", -1, junction.right),
        vec("left", -1, junction.left),
    )


# ---------------------------------------------------------------------------
# matching-matrix constructions
# ---------------------------------------------------------------------------

def matching_from_unitary(u: UnitaryMatrix, junction: Junction) -> MatchingMatrix:
    """Matching matrix of the extension labeled by ``u``, via the deficiency basis.

    The domain of the extension is spanned (up to functions vanishing at the
    origin) by psi_1 = psi_+^(+) + U11 psi_-^(+) + U21 psi_-^(-) and
    psi_2 = psi_+^(-) + U12 psi_-^(+) + U22 psi_-^(-).  A function phi
    belongs to the domain iff the current pairing v * conj(psi_k)^T sigma_x
    phi takes the same value on both sides of the junction for k = 1, 2.
    Writing those two conditions as boundary matrices M(0+-) acting on
    phi(0+-) gives T = (v_l/v_r) M(0+)^{-1} M(0-).

    Raises SingularBoundaryMatrix when M(0+) has condition number above
    1e12, which signals an extension that decouples the half-lines
    (|U12| ~ 0).
    """
    pp, pm, mp, mm = _boundary_values(junction)
    m = u.matrix
    psi1_plus = pp + m[0, 0] * mp
    psi1_minus = m[1, 0] * mm
    psi2_plus = m[0, 1] * mp
    psi2_minus = pm + m[1, 1] * mm

    def pairing(f1, f2):
        # sigma_x swaps components inside the current form, hence the
        # reversed column order; conjugation comes from the inner product.
        return np.array(
            [
                [np.conj(f1[1]), np.conj(f1[0])],
                [np.conj(f2[1]), np.conj(f2[0])],
            ]
        )

    m_plus = pairing(psi1_plus, psi2_plus)
    m_minus = pairing(psi1_minus, psi2_minus)
    if np.linalg.cond(m_plus) > BOUNDARY_COND_LIMIT:
        raise SingularBoundaryMatrix(
            "boundary matrix at 0+ is numerically singular; the extension "
            "decouples the half-lines"
        )
    t = junction.velocity_ratio * np.linalg.solve(m_plus, m_minus)
    try:
        return MatchingMatrix(t[0, 0], t[0, 1], t[1, 0], t[1, 1], junction)
    except ValueError as exc:
        # conditioning too poor to certify the determinant invariant: the
        # extension is numerically indistinguishable from a decoupled one
        raise SingularBoundaryMatrix(str(exc)) from exc


def matching_closed_form(ext: ExtensionParams, junction: Junction) -> MatchingMatrix:
    """Matching matrix in closed form on the a2 = 0 slice.

    T is sqrt(v_l) / (2 conj(U12) sqrt(v_r)) times a component matrix whose
    entries are polynomial in (cos alpha, sin alpha, a0, a1, a3) and the two
    gaps.  The sign of the upper-right component is fixed so that this
    route agrees entrywise with ``matching_from_unitary`` and reproduces
    the four named matrices; det T = v_l/v_r exactly (real) on this slice.

    Raises DegenerateExtension when |a1| < 1e-12 (decoupled half-lines).
    """
    if abs(ext.a1) < DEGENERATE_A1_TOL:
        raise DegenerateExtension(
            "a1 = 0 decouples the half-lines; no transmission matrix exists"
        )
    mul, mur = junction.left.gap, junction.right.gap
    ql = math.hypot(1.0, mul) ** 0.5  # (1 + gap^2)^(1/4)
    qr = math.hypot(1.0, mur) ** 0.5
    c, s = math.cos(ext.alpha), math.sin(ext.alpha)
    x = ext.a0 + c
    phase = cmath.exp(-1j * ext.alpha)

    c11 = 2j * phase * (qr / ql) * (ext.a3 + s - mul * x)
    c12 = -2 * phase * x * (ql * qr)
    c21 = 2 * phase * (ext.a0 - c + mul * mur * x + mul * (ext.a3 - s) - mur * (ext.a3 + s)) / (ql * qr)
    c22 = -2j * phase * (ql / qr) * (ext.a3 - s + mur * x)

    conj_u12 = 1j * ext.a1 * phase
    pref = math.sqrt(junction.left.velocity / junction.right.velocity) / (2 * conj_u12)
    try:
        return MatchingMatrix(pref * c11, pref * c12, pref * c21, pref * c22, junction)
    except ValueError as exc:
        # entries grow like 1/a1 and their determinant loses the invariant
        # to cancellation: numerically indistinguishable from decoupling
        raise DegenerateExtension(str(exc)) from exc


def named_matrix(named: NamedExtension, junction: Junction) -> MatchingMatrix:
    """Matching matrix of one of the four named families, exactly as printed.

    Requires equal Fermi velocities on the two sides.  The pure-vector
    family uses bare mass ratios m_r/m_l on the diagonal (unlike the
    quartic-root ratios of the other three), so it additionally requires
    both masses to be strictly positive.
    """
    if not junction.equal_velocities:
        raise VelocityMismatch(
            "named families are defined for equal Fermi velocities; got "
            f"v_l = {junction.left.velocity}, v_r = {junction.right.velocity}"
        )
    vf = junction.left.velocity
    ml, mr = junction.left.mass, junction.right.mass
    ql = math.hypot(1.0, junction.left.gap) ** 0.5
    qr = math.hypot(1.0, junction.right.gap) ** 0.5
    g = named.strength
    fam = named.family

    if fam is ExtensionFamily.EQUALLY_MIXED:
        t = [[qr / ql, 0.0], [-1j * g / (vf * ql * qr), ql / qr]]
    elif fam is ExtensionFamily.INVERTED_MIXED:
        t = [[qr / ql, -1j * g * vf * ql * qr], [0.0, ql / qr]]
    elif fam is ExtensionFamily.PURE_SCALAR:
        ch, sh = math.cosh(g / vf), math.sinh(g / vf)
        t = [[(qr / ql) * ch, 1j * sh], [-1j * sh, (ql / qr) * ch]]
    else:  # PURE_VECTOR
        if ml <= 0 or mr <= 0:
            raise ValueError("pure-vector matrix needs strictly positive masses")
        c, s = math.cos(g / vf), math.sin(g / vf)
        t = [[(mr / ml) * c, -1j * s], [-1j * s, (ml / mr) * c]]
    return MatchingMatrix(t[0][0], t[0][1], t[1][0], t[1][1], junction)


# ---------------------------------------------------------------------------
# parameter maps between the representations
# ---------------------------------------------------------------------------

def equally_mixed_params(strength: float, junction: Junction) -> ExtensionParams:
    """Extension parameters of the equally mixed family.

    The identification is a0 = -cos(alpha), a1 = sin(alpha), a3 = 0 with
    cot(alpha) = -(delta + (m_l + m_r) v^3) / (2 v); it requires equal
    velocities and delta < 0.
    """
    if not strength < 0:
        raise StrengthSignError(f"equally-mixed requires strength < 0, got {strength}")
    if not junction.equal_velocities:
        raise VelocityMismatch("equally-mixed parameters assume v_l = v_r")
    v = junction.left.velocity
    cot = -(strength + (junction.left.mass + junction.right.mass) * v**3) / (2 * v)
    alpha = math.atan2(1.0, cot)  # in (0, pi), sin(alpha) > 0
    return ExtensionParams(alpha, -math.cos(alpha), math.sin(alpha), 0.0)


def params_from_matching(t: MatchingMatrix) -> ExtensionParams:
    """Recover the a2 = 0 extension parameters that produce ``t``.

    Valid for matrices in the a2 = 0 family: after removal of the
    sqrt(v_l/v_r) scale the diagonal is real and the off-diagonal purely
    imaginary.  The inverse map is linear in (a0, a3, cos, sin)/a1, and the
    normalization of (cos, sin) fixes a1; the sphere constraint on
    (a0, a1, a3) then holds automatically.  Raises ValueError for matrices
    outside the family.
    """
    j = t.junction
    scale = math.sqrt(j.left.velocity / j.right.velocity)
    m = t.matrix / scale
    mag = np.abs(m).max()
    if max(abs(m[0, 0].imag), abs(m[1, 1].imag), abs(m[0, 1].real), abs(m[1, 0].real)) > 1e-9 * max(mag, 1.0):
        raise ValueError("matrix is not in the a2 = 0 family (diagonal must be "
                         "real, off-diagonal imaginary, up to the velocity scale)")
    mul, mur = j.left.gap, j.right.gap
    sl, sr = math.hypot(1.0, mul), math.hypot(1.0, mur)
    rho = math.sqrt(sr / sl)
    kap = math.sqrt(sl * sr)
    # Unknowns y = (a0, a3, cos, sin) / a1; each scaled matrix entry is a
    # linear combination of them.
    coeffs = np.array(
        [
            [-mul, 1.0, -mul, 1.0],
            [-mur, -1.0, -mur, 1.0],
            [1.0, 0.0, 1.0, 0.0],
            [1.0 + mul * mur, mul - mur, mul * mur - 1.0, -(mul + mur)],
        ]
    )
    rhs = np.array(
        [m[0, 0].real / rho, m[1, 1].real * rho, m[0, 1].imag / kap, -m[1, 0].imag * kap]
    )
    y = np.linalg.solve(coeffs, rhs)
    a1 = 1.0 / math.hypot(y[2], y[3])
    if a1 * y[3] < 0:  # pick the representative with sin(alpha) >= 0
        a1 = -a1
    a0, a3, c, s = a1 * y[0], a1 * y[1], a1 * y[2], a1 * y[3]
    alpha = math.atan2(s, c)
    if alpha >= math.pi:  # atan2 returned exactly pi: use (0, -a) instead
        alpha = 0.0
        a0, a1, a3 = -a0, -a1, -a3
    return ExtensionParams(alpha, a0, a1, a3)


def named_params(named: NamedExtension, junction: Junction) -> ExtensionParams:
    """Extension parameters reproducing a named family member."""
    if named.family is ExtensionFamily.EQUALLY_MIXED:
        return equally_mixed_params(named.strength, junction)
    return params_from_matching(named_matrix(named, junction))
