"""Transmission across the junction: coefficients, resonances, band edges.

Sweeps the flux transmission of the pure-vector interaction at strength pi
over the upper continuum (the setting with a genuine reflection zero),
locates that zero, and follows |t| into a band edge where the transmission
dies.  Saves a figure to demos/output/ when matplotlib is available and
prints the numbers either way.

Run:  python demos/scattering_and_resonances.py
"""

import math
import pathlib

import numpy as np

from dirac_junction import (
    ExtensionFamily,
    Junction,
    Medium,
    NamedExtension,
    amplitudes_solve,
    find_reflection_zeros,
    flux_transmission,
    high_energy_transmission,
    named_matrix,
    scattering_window,
    zero_momentum_resonances,
)

junction = Junction(Medium(1.0, 1.0), Medium(2.0, 1.0))
named = NamedExtension(ExtensionFamily.PURE_VECTOR, math.pi)
matrix = named_matrix(named, junction)

energies = np.linspace(2.01, 10.0, 800)
reflect = []
transmit = []
for energy in energies:
    amps = amplitudes_solve(matrix, junction, float(energy))
    reflect.append(abs(amps.r) ** 2)
    transmit.append(flux_transmission(junction, float(energy), amps))
reflect = np.array(reflect)
transmit = np.array(transmit)
print(f"unitarity check: max | |r|^2 + T - 1 | = {np.abs(reflect + transmit - 1).max():.2e}")

# --- the transmission resonance -------------------------------------------
window = scattering_window(junction, 2.01, 10.0)
zeros = find_reflection_zeros(named, junction, window, 2000)
print(f"reflection zeros in (2.01, 10): {[f'{e:.9f}' for e in zeros.energies]}")
for e in zeros.energies:
    amps = amplitudes_solve(matrix, junction, e)
    print(f"  at E = {e:.9f}: |r| = {abs(amps.r):.2e} (perfect transmission)")

# --- zero-momentum resonances: |t| dies at the listed band edges ----------
edges = zero_momentum_resonances(junction)
print(f"\nband-edge transmission zeros listed at: {edges}")
print("approach E -> -2 from below (left incidence):")
for d in (1e-1, 1e-3, 1e-5):
    amps = amplitudes_solve(matrix, junction, -2.0 - d)
    print(f"  E = {-2.0 - d:+.5f}: |t| = {abs(amps.t):.3e}")

# --- high-energy limits ----------------------------------------------------
print("\nhigh-energy transmission of the confining families:")
for family, strength in [
    (ExtensionFamily.EQUALLY_MIXED, -2.0),
    (ExtensionFamily.INVERTED_MIXED, 0.7),
    (ExtensionFamily.PURE_SCALAR, -1.0),
]:
    fam = NamedExtension(family, strength)
    asym = high_energy_transmission(fam, junction)
    t = named_matrix(fam, junction)
    energy = 2.0e4
    tflux = flux_transmission(junction, energy, amplitudes_solve(t, junction, energy))
    print(f"  {family.value:15s}: T({energy:.0e}) = {tflux:.6f}, asymptote {asym:.6f}")

bound = high_energy_transmission(NamedExtension(ExtensionFamily.PURE_VECTOR, 2.0), junction)
t2 = named_matrix(NamedExtension(ExtensionFamily.PURE_VECTOR, 2.0), junction)
margins = []
for energy in np.geomspace(2.05, 2e4, 50):
    tflux = flux_transmission(junction, float(energy), amplitudes_solve(t2, junction, float(energy)))
    margins.append(tflux - bound.lower_bound(float(energy)))
print(f"  pure-vector    : transmission never vanishes; worst margin above "
      f"its lower bound = {min(margins):.4f}")

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
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(energies, transmit, label="flux transmission")
    ax.plot(energies, reflect, label="$|r|^2$")
    for e in zeros.energies:
        ax.axvline(e, color="gray", lw=0.8, ls="--")
    ax.set_xlabel("E")
    ax.set_ylabel("coefficient")
    ax.set_title("pure-vector interaction, strength $\\pi$, masses (1, 2)")
    ax.legend()
    fig.tight_layout()
    path = out / "transmission_resonance.png"
    fig.savefig(path, dpi=150)
    print(f"\nfigure written to {path}")
