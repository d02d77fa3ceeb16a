"""Anharmonic Hamiltonian: expansion coefficients and vibrational levels.

The model Hamiltonian is an expansion in powers of the harmonic Hamiltonian,

    H = H0 + gamma2*H0**2 + gamma3*H0**3,

so its spectrum follows directly from the harmonic ladder
``E0_n = hbar*omega0*(n + 1/2)``.  Truncating after the quadratic term gives
the "second order" model; keeping the cubic term gives "third order".
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .params import HBAR, MoleculeParams, ValidationError

HARMONIC = "harmonic"
SECOND = "second"
THIRD = "third"
ORDERS = (HARMONIC, SECOND, THIRD)


class UnphysicalRegimeError(ValueError):
    """Parameters left the regime in which the model formulas are defined."""


def _alpha(m: MoleculeParams) -> float:
    return HBAR * m.omega0 / (2.0 * m.De)


def _half_quantum(m: MoleculeParams) -> float:
    # hbar*omega0/2; equals alpha*De for finite De but stays finite at De=inf
    return 0.5 * HBAR * m.omega0


def check_order(order: str, allowed: tuple[str, ...] = ORDERS) -> str:
    if order not in allowed:
        raise ValidationError(f"order must be one of {allowed}, got {order!r}")
    return order


def gamma2(m: MoleculeParams) -> float:
    """Quadratic expansion coefficient ``-1/(4*De)`` (1/erg)."""
    return -1.0 / (4.0 * m.De)


def gamma3(m: MoleculeParams) -> float:
    """Cubic expansion coefficient (1/erg^2).

    ``-1 / (4*De**2 * (3/alpha + 13*alpha/4 - 6))``.  The bracket stays
    positive for every alpha > 0 (its minimum is ~0.245 near alpha = 0.96),
    so gamma3 < 0 wherever it is defined; the vanishing-bracket guard is
    defensive.
    """
    alpha = _alpha(m)
    if alpha == 0.0:
        return -0.0  # harmonic limit
    bracket = 3.0 / alpha + 13.0 * alpha / 4.0 - 6.0
    if abs(bracket) < 1e-12:
        raise UnphysicalRegimeError(
            f"cubic-coefficient denominator vanished (alpha = {alpha:.4g})")
    return -1.0 / (4.0 * m.De ** 2 * bracket)


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    order: str
    value: float  # erg


def energy_value(n: float, order: str, m: MoleculeParams) -> float:
    """Model energy (erg) at ladder index ``n``, which may be non-integer.

    Non-integer indices are used when locating where the spacing closes.
    """
    check_order(order)
    e0 = HBAR * m.omega0 * (n + 0.5)
    if order == HARMONIC:
        return e0
    value = e0 + gamma2(m) * e0 ** 2
    if order == THIRD:
        value += gamma3(m) * e0 ** 3
    return value


def energy_level(n: int, order: str, m: MoleculeParams) -> EnergyLevel:
    if n < 0 or int(n) != n:
        raise ValidationError(f"level index n must be a non-negative integer, got {n!r}")
    return EnergyLevel(n=int(n), order=order, value=energy_value(n, order, m))


def level_spacing(n: int, order: str, m: MoleculeParams) -> float:
    """``E(n+1) - E(n)`` at the given order (erg)."""
    return energy_value(n + 1, order, m) - energy_value(n, order, m)


def spacing_root(order: str, m: MoleculeParams) -> float:
    """Real-valued level index where the spacing ``E(n+1) - E(n)`` vanishes.

    Solved analytically from the spacing polynomial in n: the second-order
    spacing is affine in n with root ``1/alpha - 1``; the third-order spacing
    is quadratic and the positive root is returned.  Returns ``inf`` in the
    harmonic limit, where the spacing never closes.
    """
    check_order(order, (SECOND, THIRD))
    alpha = _alpha(m)
    if alpha == 0.0:
        return math.inf
    if order == SECOND:
        return 1.0 / alpha - 1.0
    g2, g3 = gamma2(m), gamma3(m)
    if g3 == 0.0:
        return 1.0 / alpha - 1.0
    q = _half_quantum(m)
    # spacing(n)/(hbar*omega0) = 1 + 4*g2*q*(n+1) + g3*q^2*(12n^2 + 24n + 13)
    a2 = 12.0 * g3 * q * q
    a1 = 24.0 * g3 * q * q + 4.0 * g2 * q
    a0 = 1.0 + 4.0 * g2 * q + 13.0 * g3 * q * q
    disc = a1 * a1 - 4.0 * a2 * a0
    if disc < 0.0:
        raise UnphysicalRegimeError("third-order spacing has no real root")
    roots = ((-a1 + math.sqrt(disc)) / (2.0 * a2), (-a1 - math.sqrt(disc)) / (2.0 * a2))
    positive = [r for r in roots if r >= 0.0]
    if not positive:
        raise UnphysicalRegimeError("third-order spacing has no non-negative root")
    return min(positive)
