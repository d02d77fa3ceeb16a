"""Closed-form vibrational dynamics of the expectation values <x>, <p>.

At second and third order the position expectation value is a two-frequency
superposition: a carrier at the level frequency w_n, split by the damping-like
frequency beta into an upper component w1 = w_n + beta/2 and a lower component
w2 = w_n - beta/2.  The lower component is the one whose sign decides
stability.  Initial momentum defaults to the minimum-uncertainty value
``mu*omega0*x0`` unless given explicitly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hamiltonian
from .params import HBAR, MoleculeParams, ValidationError, derive_params


@dataclass(frozen=True)
class InitialConditions:
    x0: float  # cm
    p0: float  # g cm / s
    p0_rule: str  # "explicit" | "uncertainty_default"


def initial_conditions(x0: float, m: MoleculeParams, p0: float | None = None) -> InitialConditions:
    """Build initial conditions; ``p0=None`` selects the uncertainty default."""
    if p0 is None:
        return InitialConditions(x0=x0, p0=m.mu * m.omega0 * x0, p0_rule="uncertainty_default")
    return InitialConditions(x0=x0, p0=p0, p0_rule="explicit")


@dataclass(frozen=True)
class FrequencyPair:
    """Oscillation frequencies of one level at one order (all Hz).

    ``w1``/``w2`` are the upper/lower components, ``wn`` the carrier and
    ``beta_eff`` the splitting; ``w1 = wn + beta_eff/2`` and
    ``w2 = wn - beta_eff/2`` hold by construction.
    """

    w1: float
    w2: float
    wn: float
    beta_eff: float
    order: str


def frequencies(n: float, order: str, m: MoleculeParams) -> FrequencyPair:
    """Frequency pair for level ``n`` (may be non-integer) at the given order."""
    hamiltonian.check_order(order, (hamiltonian.SECOND, hamiltonian.THIRD))
    if n < 0:
        raise ValidationError(f"level index n must be >= 0, got {n!r}")
    d = derive_params(m)
    nph = n + 0.5
    wn = m.omega0 * (1.0 - d.alpha * nph)
    beta_eff = d.beta
    if order == hamiltonian.THIRD:
        q = 0.5 * HBAR * m.omega0  # equals alpha*De, finite also at De=inf
        g3 = d.gamma3
        beta_eff = beta_eff - 24.0 * m.omega0 * q * q * nph * g3
        wn = wn + 4.0 * m.omega0 * q * q * (3.0 * nph * nph + 1.0) * g3
    return FrequencyPair(
        w1=wn + 0.5 * beta_eff,
        w2=wn - 0.5 * beta_eff,
        wn=wn,
        beta_eff=beta_eff,
        order=order,
    )


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sampled expectation-value trajectory with its energy split.

    ``V`` and ``K`` use the harmonic forms ``k*x**2/2`` and ``p**2/(2*mu)``
    evaluated on the (an)harmonic trajectory; ``E = V + K``.
    """

    times: np.ndarray
    x: np.ndarray
    p: np.ndarray
    V: np.ndarray
    K: np.ndarray
    E: np.ndarray
    n: float
    order: str


def _check_grid(t_grid) -> np.ndarray:
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 2:
        raise ValidationError("t_grid must be a 1-D array with at least two samples")
    if not np.all(np.diff(t) > 0):
        raise ValidationError("t_grid must be strictly increasing")
    return t


def _package(t, x, p, m, n, order) -> Trajectory:
    k = m.mu * m.omega0 ** 2
    V = 0.5 * k * x ** 2
    K = p ** 2 / (2.0 * m.mu)
    return Trajectory(times=t, x=x, p=p, V=V, K=K, E=V + K, n=n, order=order)


def trajectory_sho(ic: InitialConditions, m: MoleculeParams, t_grid) -> Trajectory:
    """Harmonic reference trajectory.

    ``x(t) = x0*cos(w0 t) + (p0/(mu*w0))*sin(w0 t)``; with the uncertainty
    default p0 this reduces to ``x0*(cos + sin)``, and the total energy
    ``mu*omega0**2*x0**2`` is conserved exactly.
    """
    t = _check_grid(t_grid)
    w0 = m.omega0
    c, s = np.cos(w0 * t), np.sin(w0 * t)
    x = ic.x0 * c + (ic.p0 / (m.mu * w0)) * s
    p = ic.p0 * c - m.mu * w0 * ic.x0 * s
    return _package(t, x, p, m, 0, hamiltonian.HARMONIC)


def trajectory(n: float, order: str, ic: InitialConditions, m: MoleculeParams, t_grid) -> Trajectory:
    """Two-frequency trajectory of level ``n`` at second or third order.

    ``x(t) = (x0/2)*(cos w1 t + cos w2 t) + (p0/(2 mu wn))*(sin w1 t + sin w2 t)``
    and ``p(t) = mu * dx/dt`` differentiated analytically, so ``p(0) = p0``.
    """
    t = _check_grid(t_grid)
    fp = frequencies(n, order, m)
    if fp.wn == 0.0 and ic.p0 != 0.0:
        raise ZeroDivisionError(
            f"carrier frequency vanishes at n = {n}; momentum amplitude undefined")
    a = 0.5 * ic.x0
    b = 0.0 if ic.p0 == 0.0 else ic.p0 / (2.0 * m.mu * fp.wn)
    c1, s1 = np.cos(fp.w1 * t), np.sin(fp.w1 * t)
    c2, s2 = np.cos(fp.w2 * t), np.sin(fp.w2 * t)
    x = a * (c1 + c2) + b * (s1 + s2)
    p = m.mu * (-a * (fp.w1 * s1 + fp.w2 * s2) + b * (fp.w1 * c1 + fp.w2 * c2))
    return _package(t, x, p, m, n, order)


def complex_position(n: float, order: str, ic: InitialConditions, m: MoleculeParams, t_grid) -> np.ndarray:
    """Single-carrier complex form whose real part is :func:`trajectory`.

    ``x(t) = exp(-i beta_eff t / 2) * (x0 cos(wn t) + p0/(mu wn) sin(wn t))``.
    Useful for residual checks against the governing complex equation of
    motion and for comparison with direct integration.
    """
    t = _check_grid(t_grid)
    fp = frequencies(n, order, m)
    if fp.wn == 0.0 and ic.p0 != 0.0:
        raise ZeroDivisionError(
            f"carrier frequency vanishes at n = {n}; momentum amplitude undefined")
    b = 0.0 if ic.p0 == 0.0 else ic.p0 / (m.mu * fp.wn)
    return np.exp(-0.5j * fp.beta_eff * t) * (ic.x0 * np.cos(fp.wn * t) + b * np.sin(fp.wn * t))


def amplitude_envelope(n: float, order: str, ic: InitialConditions, m: MoleculeParams) -> float:
    """Peak displacement ``sqrt(x0**2 + (p0/(mu*wn))**2)`` of the beat pattern."""
    fp = frequencies(n, order, m)
    if fp.wn == 0.0:
        if ic.p0 != 0.0:
            raise ZeroDivisionError(
                f"carrier frequency vanishes at n = {n}; envelope undefined")
        return abs(ic.x0)
    return math.hypot(ic.x0, ic.p0 / (m.mu * fp.wn))


def default_time_grid(
    m: MoleculeParams,
    n: float = 0,
    order: str = hamiltonian.HARMONIC,
    periods: float = 10.0,
    samples: int = 2048,
) -> np.ndarray:
    """Uniform grid spanning ``periods`` cycles of the slowest frequency.

    For anharmonic orders the slow frequency is w2 while it is positive;
    past the dissociation level it falls back to w1, then to omega0.
    """
    if samples < 2:
        raise ValidationError("samples must be >= 2")
    if periods <= 0:
        raise ValidationError("periods must be > 0")
    if order == hamiltonian.HARMONIC:
        w = m.omega0
    else:
        fp = frequencies(n, order, m)
        tiny = 1e-12 * m.omega0
        w = fp.w2 if fp.w2 > tiny else (fp.w1 if fp.w1 > tiny else m.omega0)
    return np.linspace(0.0, periods * 2.0 * math.pi / w, samples)
