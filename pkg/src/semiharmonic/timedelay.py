"""Phase shifts, dwell times τ = 2 dδ/dE and resonance peaks.

For the delta kinds the ratio W± = Im F/Re F has the closed form

    W± = -√E Γ(α) / (±Γ(α) + 2Γ(α+½)),   α = (1 - E)/4,

(+ barrier, - well) and τ± = -2 W±'/(1 + W±²).  With N = -√E cos πα and
D = ±cos πα + 2 sin πα · Γ(1-α)/Γ(½-α), obtained by reflection and a common
rescaling, τ± = -2 (N'D - ND')/(N² + D²), which never overflows and has no
singularity where D vanishes.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import find_peaks
from scipy.special import digamma

from .errors import UnwrapAmbiguityWarning
from .jost import PotentialSpec, jost_entire_array

__all__ = [
    "TimeDelayCurve",
    "default_energy_grid",
    "adaptive_energy_grid",
    "principal_phase",
    "phase_curve",
    "dwell_time_curve",
    "w_ratio",
    "wigner_delta_limit",
    "detect_peaks",
    "PEAK_PROMINENCE",
    "UNWRAP_WARN_STEP",
]

PEAK_PROMINENCE = 0.1
UNWRAP_WARN_STEP = math.pi / 4
E_MIN, E_MAX, E_STEP = 0.05, 30.0, 0.005


@dataclass(frozen=True, eq=False)
class TimeDelayCurve:
    E: np.ndarray
    delta_unwrapped: np.ndarray
    tau: np.ndarray
    peaks: list[tuple[float, float]]
    kind_tag: str
    tau_analytic: np.ndarray | None = field(default=None)


def default_energy_grid(emin: float = E_MIN, emax: float = E_MAX, estep: float = E_STEP) -> np.ndarray:
    n = int(round((emax - emin) / estep))
    return emin + estep * np.arange(n + 1)


def principal_phase(spec: PotentialSpec, E) -> np.ndarray:
    """δ = -arctan(Im F / Re F) in (-π/2, π/2] on an energy array."""
    E = np.asarray(E, dtype=float)
    f = jost_entire_array(spec, np.sqrt(E) + 0j)
    d = -np.arctan2(f.imag, f.real)
    d = np.where(d > np.pi / 2, d - np.pi, d)
    return np.where(d <= -np.pi / 2, d + np.pi, d)


def adaptive_energy_grid(
    spec: PotentialSpec,
    emin: float = E_MIN,
    emax: float = E_MAX,
    estep: float = E_STEP,
    max_halvings: int = 12,
) -> np.ndarray:
    """Uniform grid, with intervals halved until each phase step is below π/4."""
    E = default_energy_grid(emin, emax, estep)
    for _ in range(max_halvings):
        d = np.unwrap(principal_phase(spec, E), period=np.pi)
        bad = np.flatnonzero(np.abs(np.diff(d)) >= UNWRAP_WARN_STEP)
        if bad.size == 0:
            break
        mids = 0.5 * (E[bad] + E[bad + 1])
        E = np.sort(np.concatenate([E, mids]))
    return E


def _check_grid(E: np.ndarray) -> np.ndarray:
    E = np.asarray(E, dtype=float)
    if E.ndim != 1 or E.size < 3:
        raise ValueError("energy grid needs at least three points")
    if np.any(E <= 0) or np.any(np.diff(E) <= 0):
        raise ValueError("energy grid must be positive and strictly increasing")
    return E


def phase_curve(spec: PotentialSpec, E_grid) -> np.ndarray:
    """Unwrapped phase shift, anchored at the principal value of the first point."""
    E = _check_grid(E_grid)
    delta = np.unwrap(principal_phase(spec, E), period=np.pi)
    steps = np.abs(np.diff(delta))
    if np.any(steps > UNWRAP_WARN_STEP):
        worst = E[int(np.argmax(steps))]
        warnings.warn(
            f"phase step {steps.max():.3f} rad near E = {worst:.4g}; grid may be too coarse",
            UnwrapAmbiguityWarning,
            stacklevel=2,
        )
    return delta


def detect_peaks(curve: TimeDelayCurve | np.ndarray, tau=None) -> list[tuple[float, float]]:
    """Interior local maxima of τ with prominence above PEAK_PROMINENCE, sorted by E."""
    if isinstance(curve, TimeDelayCurve):
        E, tau = curve.E, curve.tau
    else:
        E = np.asarray(curve, dtype=float)
    idx, _ = find_peaks(np.asarray(tau, dtype=float), prominence=PEAK_PROMINENCE)
    return [(float(E[i]), float(tau[i])) for i in idx]


def dwell_time_curve(spec: PotentialSpec, E_grid=None) -> TimeDelayCurve:
    """δ(E), τ(E) = 2 dδ/dE by central differences, and the τ peaks.

    Without a grid the delta kinds use the default uniform grid and the
    finite kinds an adaptively refined one.
    """
    if E_grid is None:
        E_grid = default_energy_grid() if spec.is_delta else adaptive_energy_grid(spec)
    E = _check_grid(E_grid)
    delta = phase_curve(spec, E)
    tau = 2.0 * np.gradient(delta, E)
    analytic = None
    if spec.is_delta:
        analytic = wigner_delta_limit("+" if spec.is_barrier else "-", E)
    peaks = detect_peaks(E, tau)
    return TimeDelayCurve(E, delta, tau, peaks, spec.kind, analytic)


def _sign_value(sign: str) -> float:
    if sign in ("+", "barrier", "delta_barrier"):
        return 1.0
    if sign in ("-", "well", "delta_well"):
        return -1.0
    raise ValueError("sign must be '+' (barrier) or '-' (well)")


def _numer_denom(sign: str, E):
    """N, D and their E-derivatives with W = N/D (common scale removed)."""
    s = _sign_value(sign)
    E = np.asarray(E, dtype=float)
    if np.any(E <= 0):
        raise ValueError("E must be positive")
    alpha = (1.0 - E) / 4.0
    lg = np.vectorize(math.lgamma)
    ratio = np.exp(lg(1.0 - alpha) - lg(0.5 - alpha))
    dratio = ratio * (digamma(1.0 - alpha) - digamma(0.5 - alpha)) / 4.0
    c, sn = np.cos(np.pi * alpha), np.sin(np.pi * alpha)
    dc, dsn = np.pi * sn / 4.0, -np.pi * c / 4.0
    root = np.sqrt(E)
    N = -root * c
    dN = -c / (2.0 * root) - root * dc
    D = s * c + 2.0 * sn * ratio
    dD = s * dc + 2.0 * (dsn * ratio + sn * dratio)
    return N, D, dN, dD


def w_ratio(sign: str, E):
    """W±(E) = Im F±/Re F± of the delta kinds (inf where Re F± = 0)."""
    N, D, _, _ = _numer_denom(sign, E)
    with np.errstate(divide="ignore"):
        return N / D


def wigner_delta_limit(sign: str, E):
    """Closed-form τ± = -2 W±'/(1 + W±²) with the derivative taken analytically."""
    N, D, dN, dD = _numer_denom(sign, E)
    out = -2.0 * (dN * D - N * dD) / (N * N + D * D)
    return float(out) if np.ndim(out) == 0 else out
