#!/usr/bin/env python3
"""Morse curve against its harmonic approximation for H2.

The two potentials share curvature at the minimum.  The Hook parabola keeps
rising while the Morse curve saturates at the dissociation energy De, which
is why high levels see a softer restoring force and eventually unbind.  Also
samples the Morse potential along a level-5 trajectory.
"""
import numpy as np

from diavib import (SECOND, derive_params, energy_value, hook,
                    initial_conditions, molecule_by_name, morse,
                    potential_on_trajectory)

m = molecule_by_name("H2")
d = derive_params(m)

x = np.linspace(max(m.xe - 1.2 / d.a, 0.0), m.xe + 8.0 / d.a, 400)
vm = morse(x, m)
vh = hook(x, m)

print(f"De = {m.De:.3e} erg, Morse range parameter a = {d.a:.4e} 1/cm")
print(f"curvature at the minimum (both curves): {d.k:.4e} erg/cm^2")
right = x[x > m.xe]
crossover = right[np.argmax(hook(right, m) > m.De)]
print(f"Hook curve exceeds De beyond x = {crossover * 1e8:.3f} A "
      f"(xe = {m.xe * 1e8:.2f} A)")

# where the first few second-order levels sit inside the well
for n in (0, 5, 10, 15):
    print(f"  E(n={n:>2}) = {energy_value(n, SECOND, m):.4e} erg "
          f"({energy_value(n, SECOND, m) / m.De:.1%} of De)")

ic = initial_conditions(0.16e-8, m)
t = np.linspace(0.0, 4e-13, 600)
curve = potential_on_trajectory(5, SECOND, ic, m, t)
print(f"Morse potential along the n=5 trajectory: "
      f"min {curve.v_values.min():.3e}, max {curve.v_values.max():.3e} erg")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the figure")
else:
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot(x * 1e8, vm / m.De, label="Morse")
    ax.plot(x * 1e8, vh / m.De, label="Hook")
    ax.axhline(1.0, color="gray", ls=":", lw=0.8)
    for n in (0, 5, 10, 15):
        ax.axhline(energy_value(n, SECOND, m) / m.De, color="tan", lw=0.5)
    ax.set_ylim(0, 2.0)
    ax.set_xlabel("internuclear separation (A)")
    ax.set_ylabel("V / De")
    ax.set_title("H2: Morse vs Hook, with second-order levels")
    ax.legend()
    fig.tight_layout()
    fig.savefig("potential_curves.png", dpi=120)
    print("wrote potential_curves.png")
