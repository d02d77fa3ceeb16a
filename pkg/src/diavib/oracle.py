"""Independent checks of the closed-form model.

Two routes that do not share code with the closed forms they test:

* direct Runge-Kutta integration of the coupled complex equations of motion
  for <x> and <p>, and
* truncated ladder-operator matrices, on which the operator identities behind
  those equations can be verified entry by entry.

Keeping these separate from :mod:`diavib.dynamics` is deliberate: agreement
between the two routes is the evidence that the closed forms are implemented
correctly, so the routes must never be collapsed into one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hamiltonian
from .dynamics import InitialConditions, frequencies
from .params import HBAR, MoleculeParams, ValidationError


class StepUnderflowError(RuntimeError):
    """Step halving hit the subdivision limit without meeting the tolerance."""


@dataclass(frozen=True, eq=False)
class ComplexTrajectory:
    """Complex expectation values from direct integration.

    ``p`` is the canonical momentum of the level-n linear system, whose
    velocity relation carries the factor wn/omega0; it is initialised so the
    trajectory starts with the same velocity ``p0/mu`` as the closed form.
    At t = 0 both components are real.
    """

    times: np.ndarray
    x: np.ndarray
    p: np.ndarray
    n: float
    order: str


def _effective(n: float, order: str, m: MoleculeParams) -> tuple[float, float]:
    if order == hamiltonian.HARMONIC:
        return 0.0, m.omega0
    fp = frequencies(n, order, m)
    return fp.beta_eff, fp.wn


def _march(x: complex, p: complex, h: float, nsteps: int,
           cp: float, cx: float, damp: complex) -> tuple[complex, complex]:
    # classical fixed-step RK4 on dx/dt = cp*p + damp*x, dp/dt = -cx*x + damp*p
    hs = h / nsteps
    for _ in range(nsteps):
        k1x = cp * p + damp * x
        k1p = -cx * x + damp * p
        x2 = x + 0.5 * hs * k1x
        p2 = p + 0.5 * hs * k1p
        k2x = cp * p2 + damp * x2
        k2p = -cx * x2 + damp * p2
        x3 = x + 0.5 * hs * k2x
        p3 = p + 0.5 * hs * k2p
        k3x = cp * p3 + damp * x3
        k3p = -cx * x3 + damp * p3
        x4 = x + hs * k3x
        p4 = p + hs * k3p
        k4x = cp * p4 + damp * x4
        k4p = -cx * x4 + damp * p4
        x = x + hs * (k1x + 2.0 * (k2x + k3x) + k4x) / 6.0
        p = p + hs * (k1p + 2.0 * (k2p + k3p) + k4p) / 6.0
    return x, p


def integrate_coupled(
    n: float,
    order: str,
    ic: InitialConditions,
    m: MoleculeParams,
    t_grid,
    tol: float = 1e-9,
    max_subdivision: int = 1 << 18,
) -> ComplexTrajectory:
    """Integrate the coupled complex equations of motion over ``t_grid``.

    Fixed-step RK4 with step-halving error control: each grid interval is
    marched with ``nsub`` and ``2*nsub`` internal steps and the subdivision
    doubles until the two agree within ``tol`` (relative, per interval).

    The integration starts from ``x(0) = x0`` and canonical momentum
    ``p(0) = p0*omega0/wn``, which gives the same initial velocity
    ``dx/dt(0) = p0/mu - i*(beta/2)*x0`` as the closed-form solution; with
    that choice the real part of ``x(t)`` reproduces the two-frequency
    trajectory and the harmonic limit reduces to the plain oscillator.
    """
    hamiltonian.check_order(order)
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 2 or not np.all(np.diff(t) > 0):
        raise ValidationError("t_grid must be 1-D, strictly increasing, length >= 2")
    if tol <= 0:
        raise ValidationError("tol must be > 0")
    beta_eff, wn = _effective(n, order, m)
    if wn == 0.0 and ic.p0 != 0.0:
        raise ZeroDivisionError(
            f"carrier frequency vanishes at n = {n}; initial momentum undefined")
    mu_w0 = m.mu * m.omega0
    cp = wn / mu_w0
    cx = mu_w0 * wn
    damp = complex(0.0, -0.5 * beta_eff)
    x = complex(ic.x0)
    p = complex(0.0) if ic.p0 == 0.0 else complex(ic.p0 * m.omega0 / wn)

    # fixed amplitude scales keep the error measure finite at the nodes
    sx = max(abs(x), abs(p) / mu_w0) or 1.0
    sp = mu_w0 * sx

    xs = np.empty(t.size, dtype=complex)
    ps = np.empty(t.size, dtype=complex)
    xs[0], ps[0] = x, p
    nsub = 1
    for i in range(t.size - 1):
        h = float(t[i + 1] - t[i])
        while True:
            xa, pa = _march(x, p, h, nsub, cp, cx, damp)
            xb, pb = _march(x, p, h, 2 * nsub, cp, cx, damp)
            err = max(abs(xb - xa) / sx, abs(pb - pa) / sp)
            if err < tol:
                break
            nsub *= 2
            if nsub > max_subdivision:
                raise StepUnderflowError(
                    f"tolerance {tol:g} unreachable within {max_subdivision} "
                    f"subdivisions per interval")
        x, p = xb, pb
        xs[i + 1], ps[i + 1] = x, p
    return ComplexTrajectory(times=t, x=xs, p=ps, n=n, order=order)


@dataclass(frozen=True, eq=False)
class FockMatrices:
    """Truncated number-basis matrices for one molecule.

    ``a_lower`` carries sqrt(k) on its first superdiagonal; ``x_op`` and
    ``p_op`` are the standard hermitian combinations and ``h0``/``h2``/``h3``
    the harmonic Hamiltonian and its quadratic/cubic expansions.  Products of
    truncated matrices are only trustworthy away from the last rows/columns,
    so checks evaluate the interior block (the last two rows and columns are
    dropped).
    """

    dim: int
    molecule: MoleculeParams
    a_lower: np.ndarray
    a_raise: np.ndarray
    x_op: np.ndarray
    p_op: np.ndarray
    h0: np.ndarray
    h2: np.ndarray
    h3: np.ndarray


def build_fock(dim: int, m: MoleculeParams) -> FockMatrices:
    """Build the truncated matrices at dimension ``dim`` (>= 4)."""
    if dim < 4:
        raise ValidationError(f"dim must be >= 4, got {dim!r}")
    from .hamiltonian import gamma2, gamma3

    a_lower = np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1).astype(complex)
    a_raise = a_lower.conj().T
    x_op = math.sqrt(HBAR / (2.0 * m.mu * m.omega0)) * (a_raise + a_lower)
    p_op = 1j * math.sqrt(HBAR * m.mu * m.omega0 / 2.0) * (a_raise - a_lower)
    h0 = HBAR * m.omega0 * (a_raise @ a_lower + 0.5 * np.eye(dim))
    h2 = h0 + gamma2(m) * h0 @ h0
    h3 = h2 + gamma3(m) * h0 @ h0 @ h0
    return FockMatrices(dim=dim, molecule=m, a_lower=a_lower, a_raise=a_raise,
                        x_op=x_op, p_op=p_op, h0=h0, h2=h2, h3=h3)


def _interior(a: np.ndarray) -> np.ndarray:
    return a[:-2, :-2]


def check_commutators(fm: FockMatrices) -> dict[str, float]:
    """Residuals of the operator identities on the interior block.

    Each residual is ``max|LHS - RHS| / max|RHS|`` for the identities below;
    ``h2_h0`` is the absolute ``max|[h2, h0]|``, which vanishes identically
    because both matrices are diagonal in the same basis.
    """
    m = fm.molecule
    mu, w0 = m.mu, m.omega0
    k = mu * w0 * w0
    x, p, h0 = fm.x_op, fm.p_op, fm.h0
    eye = np.eye(fm.dim, dtype=complex)

    def comm(a, b):
        return a @ b - b @ a

    h0_sq = h0 @ h0
    h0_cb = h0_sq @ h0
    identities = {
        # [h0, x] = -i hbar p / mu
        "h0_x": (comm(h0, x), (-1j * HBAR / mu) * p),
        # [h0, p] = i hbar k x
        "h0_p": (comm(h0, p), 1j * HBAR * k * x),
        # [h0^2, x] = -i hbar (2 p h0 + i hbar k x) / mu
        "h0sq_x": (comm(h0_sq, x), (-1j * HBAR / mu) * (2.0 * p @ h0 + 1j * HBAR * k * x)),
        # [h0^2, p] = i hbar k (2 x h0 - i hbar p / mu)
        "h0sq_p": (comm(h0_sq, p), 1j * HBAR * k * (2.0 * x @ h0 - 1j * HBAR * p / mu)),
        # [h0^3, x] = -(i hbar / mu) (3 p h0^2 + 3 i hbar k x h0 + hbar^2 w0^2 p)
        "h0cube_x": (comm(h0_cb, x),
                     (-1j * HBAR / mu) * (3.0 * p @ h0_sq + 3j * HBAR * k * x @ h0
                                          + HBAR ** 2 * w0 ** 2 * p)),
        # [h0^3, p] = 3 i hbar k x h0^2 + 3 hbar^2 w0^2 p h0 + i mu hbar^3 w0^4 x
        "h0cube_p": (comm(h0_cb, p),
                     3j * HBAR * k * x @ h0_sq + 3.0 * HBAR ** 2 * w0 ** 2 * p @ h0
                     + 1j * mu * HBAR ** 3 * w0 ** 4 * x),
        # canonical pair
        "x_p": (comm(x, p), 1j * HBAR * eye),
    }
    out: dict[str, float] = {}
    for name, (lhs, rhs) in identities.items():
        scale = float(np.max(np.abs(_interior(rhs))))
        out[name] = float(np.max(np.abs(_interior(lhs - rhs)))) / scale
    out["h2_h0"] = float(np.max(np.abs(comm(fm.h2, fm.h0))))
    return out


@dataclass(frozen=True)
class HeisenbergCheck:
    """Coefficients of the position equation of motion recovered from matrices.

    The commutator column acting on state ``|n>`` lives in the span of the
    two adjacent states, giving a 2x2 system for the momentum and position
    coefficients.  Deviations are relative to the natural scales 1/mu and
    omega0 respectively.
    """

    n: int
    order: str
    p_coefficient: complex
    x_coefficient: complex
    p_expected: complex
    x_expected: complex
    p_deviation: float
    x_deviation: float
    max_deviation: float


def heisenberg_rhs_check(fm: FockMatrices, n: int, order: str) -> HeisenbergCheck:
    """Recover the equation-of-motion coefficients for level ``n`` from matrices.

    Solves for (c_p, c_x) in ``(i/hbar)[H, x]|n> = c_p p|n> + c_x x|n>`` using
    the two adjacent-state matrix elements, then compares with the closed-form
    coefficients: ``c_p = wn/(mu*omega0)`` and ``c_x = -i*beta_eff/2`` at the
    anharmonic orders, ``(1/mu, 0)`` at harmonic order.
    """
    hamiltonian.check_order(order)
    if not 1 <= n <= fm.dim - 3:
        raise ValidationError(
            f"n must lie in [1, dim-3] to avoid the truncation edge, got {n}")
    m = fm.molecule
    h = {hamiltonian.HARMONIC: fm.h0, hamiltonian.SECOND: fm.h2,
         hamiltonian.THIRD: fm.h3}[order]
    rhs_matrix = (1j / HBAR) * (h @ fm.x_op - fm.x_op @ h)
    a = np.array([
        [fm.p_op[n + 1, n], fm.x_op[n + 1, n]],
        [fm.p_op[n - 1, n], fm.x_op[n - 1, n]],
    ])
    b = np.array([rhs_matrix[n + 1, n], rhs_matrix[n - 1, n]])
    c_p, c_x = np.linalg.solve(a, b)

    if order == hamiltonian.HARMONIC:
        exp_p, exp_x = complex(1.0 / m.mu), complex(0.0)
    else:
        fp = frequencies(n, order, m)
        exp_p = complex(fp.wn / (m.mu * m.omega0))
        exp_x = complex(0.0, -0.5 * fp.beta_eff)
    p_dev = abs(c_p - exp_p) * m.mu
    x_dev = abs(c_x - exp_x) / m.omega0
    return HeisenbergCheck(
        n=n, order=order,
        p_coefficient=complex(c_p), x_coefficient=complex(c_x),
        p_expected=exp_p, x_expected=exp_x,
        p_deviation=p_dev, x_deviation=x_dev,
        max_deviation=max(p_dev, x_dev),
    )
