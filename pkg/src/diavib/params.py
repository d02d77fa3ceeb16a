"""Physical constants, molecule definitions, and derived model parameters.

All quantities are CGS (erg, g, cm, s).  Frequencies are angular throughout
and labelled Hz; no 2*pi conversion is applied anywhere in the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Final

HBAR: Final[float] = 1.0546e-27
"""Reduced Planck constant (erg s).  Fixed, not configurable, so that
reference regressions and golden CLI outputs stay bit-stable."""

ANGSTROM_CM: Final[float] = 1e-8


class ValidationError(ValueError):
    """Invalid molecule parameters or configuration input."""


@dataclass(frozen=True)
class MoleculeParams:
    """Raw physical constants of one diatomic species (CGS units).

    Attributes
    ----------
    name : str
        Species label, e.g. ``"H2"``.
    omega0 : float
        Natural angular vibration frequency (Hz).
    De : float
        Dissociation energy measured from the potential minimum (erg).
        ``math.inf`` selects the pure harmonic limit.
    mu : float
        Reduced mass of the two nuclei (g).
    xe : float
        Equilibrium internuclear separation (cm).
    """

    name: str
    omega0: float
    De: float
    mu: float
    xe: float


@dataclass(frozen=True)
class DerivedParams:
    """Scalar parameters derived from one :class:`MoleculeParams`.

    Attributes
    ----------
    alpha : float
        Anharmonicity ratio ``hbar*omega0 / (2*De)`` (dimensionless).
        Zero only in the harmonic limit ``De = inf``.
    beta : float
        Damping-like frequency ``alpha*omega0`` (Hz); the splitting of the
        two-frequency oscillation at second order.
    k : float
        Harmonic spring constant ``mu*omega0**2`` (erg/cm^2).
    a : float
        Range parameter of the Morse curve ``sqrt(mu*omega0**2/(2*De))``
        (1/cm).
    gamma2 : float
        Quadratic expansion coefficient of the Hamiltonian (1/erg); < 0.
    gamma3 : float
        Cubic expansion coefficient (1/erg^2); < 0.
    """

    alpha: float
    beta: float
    k: float
    a: float
    gamma2: float
    gamma3: float


def validate(m: MoleculeParams) -> None:
    """Raise :class:`ValidationError` naming the offending field."""
    if not m.name:
        raise ValidationError("name must be a non-empty string")
    if not (math.isfinite(m.omega0) and m.omega0 > 0):
        raise ValidationError(f"omega0 must be a positive finite frequency, got {m.omega0!r}")
    if math.isnan(m.De) or not m.De > 0:
        raise ValidationError(f"De must be positive (inf allowed for the harmonic limit), got {m.De!r}")
    if not (math.isfinite(m.mu) and m.mu > 0):
        raise ValidationError(f"mu must be a positive finite mass, got {m.mu!r}")
    if math.isnan(m.xe) or m.xe < 0:
        raise ValidationError(f"xe must be >= 0, got {m.xe!r}")


def derive_params(m: MoleculeParams) -> DerivedParams:
    """Compute the derived scalar parameters for a molecule.

    Rejects molecules with ``alpha >= 1``: the level ladder would terminate
    below the ground state and none of the model formulas apply.
    """
    validate(m)
    alpha = HBAR * m.omega0 / (2.0 * m.De)
    if alpha >= 1.0:
        raise ValidationError(
            f"alpha = {alpha:.4g} >= 1 (De too small relative to hbar*omega0/2)")
    # deferred import: the expansion coefficients live with the Hamiltonian
    from . import hamiltonian

    return DerivedParams(
        alpha=alpha,
        beta=alpha * m.omega0,
        k=m.mu * m.omega0 ** 2,
        a=math.sqrt(0.5 * m.mu * m.omega0 ** 2 / m.De),
        gamma2=hamiltonian.gamma2(m),
        gamma3=hamiltonian.gamma3(m),
    )


# Built-in species.  H2 constants follow the common spectroscopic dataset for
# this model; the HCl equilibrium separation is the standard bond length and
# comes from general reference data rather than the same dataset.
_BUILTINS = (
    MoleculeParams(name="H2", omega0=8.29e14, De=8.09e-12, mu=8.35e-25, xe=0.74e-8),
    MoleculeParams(name="HCl", omega0=5.44e14, De=7.05e-12, mu=1.61e-24, xe=1.27e-8),
)


def builtin_molecules() -> tuple[MoleculeParams, ...]:
    """Return the built-in molecule definitions."""
    return _BUILTINS


def molecule_by_name(name: str) -> MoleculeParams:
    for m in _BUILTINS:
        if m.name.lower() == name.lower():
            return m
    known = ", ".join(m.name for m in _BUILTINS)
    raise ValidationError(f"unknown molecule {name!r}; built-ins: {known}")


_FILE_KEYS = ("name", "omega0_hz", "De_erg", "mu_g", "xe_angstrom")
_REQUIRED_KEYS = ("name", "omega0_hz", "De_erg", "mu_g")


def load_molecule_file(path: str | Path) -> MoleculeParams:
    """Read a molecule definition from a line-oriented ``key = value`` file.

    Recognised keys: ``name``, ``omega0_hz``, ``De_erg``, ``mu_g`` and the
    optional ``xe_angstrom`` (default 0).  Blank lines and ``#`` comments are
    ignored.  Unknown or duplicate keys are rejected.
    """
    text = Path(path).read_text(encoding="utf-8")
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValidationError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _FILE_KEYS:
            raise ValidationError(f"{path}:{lineno}: unknown key {key!r}")
        if key in fields:
            raise ValidationError(f"{path}:{lineno}: duplicate key {key!r}")
        fields[key] = value.strip()
    for key in _REQUIRED_KEYS:
        if key not in fields:
            raise ValidationError(f"{path}: missing required key {key!r}")

    def as_float(key: str, default: float | None = None) -> float:
        if key not in fields:
            return float(default)  # type: ignore[arg-type]
        try:
            return float(fields[key])
        except ValueError as exc:
            raise ValidationError(f"{path}: key {key!r} is not a number: {fields[key]!r}") from exc

    m = MoleculeParams(
        name=fields["name"],
        omega0=as_float("omega0_hz"),
        De=as_float("De_erg"),
        mu=as_float("mu_g"),
        xe=as_float("xe_angstrom", 0.0) * ANGSTROM_CM,
    )
    validate(m)
    return m
