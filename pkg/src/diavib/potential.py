"""Morse and harmonic (Hook) potential curves.

The Morse curve ``De*(1 - exp(-a*(x - xe)))**2`` shares curvature
``mu*omega0**2`` with the Hook curve at the equilibrium separation and
saturates at De on the dissociation side.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hamiltonian
from .dynamics import InitialConditions, trajectory
from .params import MoleculeParams, ValidationError, derive_params


@dataclass(frozen=True, eq=False)
class PotentialCurve:
    x_values: np.ndarray  # absolute separation (cm)
    v_values: np.ndarray  # erg
    kind: str


def morse(x, m: MoleculeParams):
    """Morse potential (erg) at absolute separation ``x`` (cm; scalar or array)."""
    if not math.isfinite(m.De):
        raise ValidationError("De must be finite to evaluate the Morse curve")
    d = derive_params(m)
    # expm1 keeps the near-minimum region fully accurate: 1 - e^-z = -expm1(-z)
    return m.De * np.expm1(-d.a * (np.asarray(x, dtype=float) - m.xe)) ** 2


def hook(x, m: MoleculeParams):
    """Harmonic potential ``mu*omega0**2*(x - xe)**2 / 2`` (erg)."""
    z = np.asarray(x, dtype=float) - m.xe
    return 0.5 * m.mu * m.omega0 ** 2 * z ** 2


def potential_on_trajectory(
    n: float,
    order: str,
    ic: InitialConditions,
    m: MoleculeParams,
    t_grid,
) -> PotentialCurve:
    """Morse potential sampled along the level-``n`` closed-form trajectory.

    The trajectory displacement rides on top of the equilibrium separation,
    so the potential is evaluated at ``xe + x(t)``.  Values are bounded by
    De once the swing stays on the dissociation side of the minimum.
    """
    hamiltonian.check_order(order, (hamiltonian.SECOND, hamiltonian.THIRD))
    traj = trajectory(n, order, ic, m, t_grid)
    x_abs = m.xe + traj.x
    return PotentialCurve(
        x_values=x_abs,
        v_values=morse(x_abs, m),
        kind=f"morse_on_{order}_order_trajectory",
    )
