"""Linear stability: characteristic roots, dissociation levels, cut-offs.

The governing complex equation of motion for <x> has exponential trial
solutions with purely imaginary characteristic roots

    lambda1 = i*(wn - beta/2) = i*w2,      lambda2 = -i*(wn + beta/2) = -i*w1,

so a level is stable exactly while its lower frequency component w2 stays
positive.  The real-valued level index where w2 crosses zero is the
dissociation level; the oscillation frequency remaining there is the cut-off
frequency of the vibrational spectrum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import hamiltonian
from .dynamics import frequencies
from .hamiltonian import UnphysicalRegimeError
from .params import HBAR, MoleculeParams, ValidationError, derive_params

STABLE = "stable"
MARGINAL = "marginal"
UNSTABLE = "unstable"

MARGINAL_TOLERANCE = 1e-9  # |w2| below this fraction of omega0 counts as marginal


@dataclass(frozen=True)
class CharacteristicRoots:
    lambda1: complex  # i*w2; crosses zero at dissociation
    lambda2: complex  # -i*w1
    n: float
    order: str


@dataclass(frozen=True)
class LevelClassification:
    n: int
    order: str
    classification: str


@dataclass(frozen=True)
class Cutoff3:
    """Two readings of the third-order cut-off frequency (Hz).

    ``literal`` evaluates the closed-form bracket
    ``omega0*(1 - alpha*n + (hbar*omega0/2)**2*(12n^2 - 4)*gamma3)`` at the
    third-order dissociation level; ``from_omega1`` evaluates the upper
    frequency component w1 there.  The two differ by a small gamma3 term and
    neither collapses to twice the second-order cut-off; both are reported
    and the discrepancy is documented rather than hidden (see README).
    """

    literal: float
    from_omega1: float


@dataclass(frozen=True)
class StabilityReport:
    nD2: float
    nD3: float
    last_bound_n2: int | None
    last_bound_n3: int | None
    cutoff2: float
    cutoff3_literal: float
    cutoff3_from_omega1: float
    per_level: tuple[LevelClassification, ...]


def char_roots(n: float, order: str, m: MoleculeParams) -> CharacteristicRoots:
    """Characteristic roots of the trial-solution polynomial for level ``n``."""
    fp = frequencies(n, order, m)
    return CharacteristicRoots(
        lambda1=complex(0.0, fp.w2),
        lambda2=complex(0.0, -fp.w1),
        n=n,
        order=order,
    )


def dissociation_level2(m: MoleculeParams) -> float:
    """Second-order dissociation level ``1/alpha - 1`` (real-valued).

    Returns ``inf`` in the harmonic limit: every level stays bound.
    """
    d = derive_params(m)
    if d.alpha == 0.0:
        return math.inf
    return 1.0 / d.alpha - 1.0


def dissociation_level3(m: MoleculeParams) -> float:
    """Third-order dissociation level: positive root of w2' = 0.

    Closed form in terms of the expansion-coefficient ratio r = gamma2/gamma3
    and the half-quantum q = hbar*omega0/2:

        n_D = (-r - 6q + sqrt(r^2 - 3q^2 - 3/gamma3)) / (6q)

    The discriminant is provably positive for 0 < alpha < 1; the guard is
    defensive.
    """
    d = derive_params(m)
    if d.gamma3 == 0.0:
        return math.inf
    q = 0.5 * HBAR * m.omega0
    r = d.gamma2 / d.gamma3
    disc = r * r - 3.0 * q * q - 3.0 / d.gamma3
    if disc < 0.0:
        raise UnphysicalRegimeError(
            f"negative discriminant for the third-order dissociation level "
            f"(alpha = {d.alpha:.4g})")
    return (-r - 6.0 * q + math.sqrt(disc)) / (6.0 * q)


def cutoff_frequency2(m: MoleculeParams) -> float:
    """Second-order cut-off ``alpha*omega0`` (Hz); equals w1 at n = 1/alpha - 1."""
    return derive_params(m).beta


def cutoff_frequency3(m: MoleculeParams) -> Cutoff3:
    """Both readings of the third-order cut-off; zeros in the harmonic limit."""
    nd3 = dissociation_level3(m)
    if math.isinf(nd3):
        return Cutoff3(literal=0.0, from_omega1=0.0)
    d = derive_params(m)
    q = 0.5 * HBAR * m.omega0
    literal = m.omega0 * (
        1.0 - d.alpha * nd3 + q * q * (12.0 * nd3 * nd3 - 4.0) * d.gamma3)
    return Cutoff3(literal=literal, from_omega1=frequencies(nd3, hamiltonian.THIRD, m).w1)


def classify_levels(m: MoleculeParams, order: str, n_max: int) -> tuple[LevelClassification, ...]:
    """Classify integer levels 0..n_max by the sign of their w2 component."""
    if n_max < 0 or int(n_max) != n_max:
        raise ValidationError(f"n_max must be a non-negative integer, got {n_max!r}")
    tol = MARGINAL_TOLERANCE * m.omega0
    out = []
    for n in range(int(n_max) + 1):
        w2 = frequencies(n, order, m).w2
        if w2 > tol:
            label = STABLE
        elif w2 < -tol:
            label = UNSTABLE
        else:
            label = MARGINAL
        out.append(LevelClassification(n=n, order=order, classification=label))
    return tuple(out)


def _last_bound(nd: float) -> int | None:
    return None if math.isinf(nd) else int(math.floor(nd))


def stability_report(m: MoleculeParams, n_max: int | None = None) -> StabilityReport:
    """Full stability summary: dissociation levels, cut-offs, classifications.

    ``per_level`` covers both anharmonic orders up to ``n_max`` (default:
    two levels past the largest finite dissociation level).
    """
    nd2 = dissociation_level2(m)
    nd3 = dissociation_level3(m)
    c3 = cutoff_frequency3(m)
    if n_max is None:
        finite = [nd for nd in (nd2, nd3) if math.isfinite(nd)]
        n_max = int(math.ceil(max(finite))) + 2 if finite else 12
    per_level = classify_levels(m, hamiltonian.SECOND, n_max) + classify_levels(
        m, hamiltonian.THIRD, n_max)
    return StabilityReport(
        nD2=nd2,
        nD3=nd3,
        last_bound_n2=_last_bound(nd2),
        last_bound_n3=_last_bound(nd3),
        cutoff2=cutoff_frequency2(m),
        cutoff3_literal=c3.literal,
        cutoff3_from_omega1=c3.from_omega1,
        per_level=per_level,
    )
