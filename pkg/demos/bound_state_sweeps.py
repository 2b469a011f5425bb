"""Bound-state energies along strength sweeps for the four families.

Reproduces the solution-curve data: the jump-junction roots (solid-curve
analog) against the closed-form equal-mass energies (dashed-curve analog),
including the strength where the inverted-mixed curves cross and the
particle/antiparticle pair of the pure-scalar family.

Run:  python demos/bound_state_sweeps.py
"""

import math
import pathlib

import numpy as np

from dirac_junction import (
    ExtensionFamily,
    Junction,
    Medium,
    NamedExtension,
    equal_mass_energy,
    find_bound_states,
    sweep_strength,
)

junction = Junction(Medium(1.0, 1.0), Medium(2.0, 1.0))

SWEEPS = {
    ExtensionFamily.EQUALLY_MIXED: (-8.0, -1.4),
    ExtensionFamily.INVERTED_MIXED: (0.05, 3.0),
    ExtensionFamily.PURE_SCALAR: (-6.0, -0.55),
    ExtensionFamily.PURE_VECTOR: (0.05, 2.0 * math.pi),
}

tables = {}
for family, (lo, hi) in SWEEPS.items():
    tables[family] = sweep_strength(family, junction, (lo, hi), 400)
    count = sum(1 for roots in tables[family].energies if roots)
    print(f"{family.value:15s}: {count}/400 strengths carry at least one bound state")

# --- the reported crossing of the inverted-mixed curves --------------------
table = tables[ExtensionFamily.INVERTED_MIXED]
crossing = None
prev = None
for s, roots, ref in zip(table.strengths, table.energies, table.equal_mass_energies):
    if not roots or not ref:
        prev = None
        continue
    gap = roots[0] - ref[0]
    if prev is not None and math.copysign(1, gap) != math.copysign(1, prev[1]):
        crossing = 0.5 * (prev[0] + s)
    prev = (s, gap)
print(f"\ninverted-mixed jump and equal-mass curves cross near strength {crossing:.4f}")
states = find_bound_states(NamedExtension(ExtensionFamily.INVERTED_MIXED, 0.6324), junction)
print(f"at strength 0.6324 the jump root is {states[0].energy:+.6f} and the "
      f"equal-mass value is {equal_mass_energy(NamedExtension(ExtensionFamily.INVERTED_MIXED, 0.6324), 1.0, 1.0)[0]:+.6f}")

# --- pure scalar binds a particle/antiparticle pair -------------------------
print("\npure-scalar pairs (one root each side of zero):")
for a in (-1.0, -2.0, -4.0):
    states = find_bound_states(NamedExtension(ExtensionFamily.PURE_SCALAR, a), junction)
    print(f"  a = {a:+.1f}: roots {[f'{s.energy:+.6f}' for s in states]}")

# --- equally mixed crosses zero but never reaches the lower edge ------------
table = tables[ExtensionFamily.EQUALLY_MIXED]
roots = [r[0] for r in table.energies if r]
print(f"\nequally-mixed root range over the sweep: [{min(roots):+.4f}, {max(roots):+.4f}] "
      f"(lower band edge at {-junction.min_gap})")

# --- figure ----------------------------------------------------------------
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("\nmatplotlib not installed; skipping the figure")
else:
    out = pathlib.Path(__file__).parent / "output"
    out.mkdir(exist_ok=True)
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharey=True)
    for ax, (family, table) in zip(axes.ravel(), tables.items()):
        xs, solid, dashed = [], [], []
        for s, roots, ref in zip(table.strengths, table.energies, table.equal_mass_energies):
            for r in roots:
                xs.append(s)
                solid.append(r)
        ax.plot(xs, solid, ".", ms=2, label="mass jump (1, 2)")
        xs_ref, ys_ref = [], []
        for s, ref in zip(table.strengths, table.equal_mass_energies):
            for r in ref:
                xs_ref.append(s)
                ys_ref.append(r)
        ax.plot(xs_ref, ys_ref, ".", ms=1, alpha=0.6, label="equal masses")
        ax.set_title(family.value)
        ax.set_xlabel("strength")
        ax.set_ylim(-1.05, 1.05)
    axes[0, 0].set_ylabel("bound-state energy")
    axes[0, 0].legend(loc="lower left", fontsize=8)
    fig.tight_layout()
    path = out / "bound_state_sweeps.png"
    fig.savefig(path, dpi=150)
    print(f"\nfigure written to {path}")
