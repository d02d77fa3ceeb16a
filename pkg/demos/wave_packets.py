#!/usr/bin/env python3
"""Two-frequency beat trajectories on the way to dissociation.

Each anharmonic level oscillates at two close frequencies w1 and w2.  Their
difference is the splitting beta, so the position expectation value is an
amplitude-modulated wave packet.  As n approaches the dissociation level the
lower component w2 slows to zero and the envelope swells; past it the motion
is unbounded.
"""
import numpy as np

from diavib import (SECOND, amplitude_envelope, dissociation_level2,
                    frequencies, initial_conditions, molecule_by_name,
                    trajectory)

m = molecule_by_name("H2")
ic = initial_conditions(0.16e-8, m)
nd = dissociation_level2(m)
print(f"H2 second-order dissociation level: {nd:.3f}")
print(f"{'n':>3} {'w1 (Hz)':>12} {'w2 (Hz)':>13} {'beat period (s)':>16} "
      f"{'envelope (cm)':>14}")

levels = [0, 5, 10, 15, 17]
for n in levels:
    fp = frequencies(n, SECOND, m)
    beat = 2.0 * np.pi / fp.beta_eff
    env = amplitude_envelope(n, SECOND, ic, m)
    print(f"{n:>3} {fp.w1:>12.4e} {fp.w2:>13.4e} {beat:>16.4e} {env:>14.4e}")

# one unstable level for contrast: w2 < 0, the packet no longer returns
fp18 = frequencies(18, SECOND, m)
print(f" 18 {fp18.w1:>12.4e} {fp18.w2:>13.4e}   (unstable: w2 < 0)")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the figure")
else:
    fig, axes = plt.subplots(3, 1, figsize=(9, 7), sharex=False)
    for ax, n in zip(axes, (0, 10, 17)):
        fp = frequencies(n, SECOND, m)
        t = np.linspace(0.0, 2.2 * 2.0 * np.pi / fp.beta_eff, 4000)
        traj = trajectory(n, SECOND, ic, m, t)
        env = amplitude_envelope(n, SECOND, ic, m)
        ax.plot(t * 1e12, traj.x * 1e8, lw=0.6)
        ax.axhline(env * 1e8, color="gray", ls=":", lw=0.8)
        ax.axhline(-env * 1e8, color="gray", ls=":", lw=0.8)
        ax.set_ylabel(f"n = {n}\nx (A)")
    axes[-1].set_xlabel("t (ps)")
    axes[0].set_title("H2 wave packets: the beat slows and swells toward dissociation")
    fig.tight_layout()
    fig.savefig("wave_packets.png", dpi=120)
    print("wrote wave_packets.png")
