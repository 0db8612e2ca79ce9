"""Matching across the three regions and the Jost function.

The potential is x² for x <= -a, ∓V0 inside |x| < a (well / barrier) and 0
for x >= a.  Delta kinds replace the middle region by ∓δ(x) at the origin.

Two normalisations of the Jost function are used:

* ``F`` with ψ(-a) = 1 (or ψ(0) = 1 for the delta kinds' gamma form), the
  quantity reported to users;
* an entire companion ``F̂`` built from the scaled regular solution, with no
  poles or node singularities.  It differs from F by a factor that is real on
  the real k-axis and never vanishes where F is finite, so it has the same
  zeros and the same phase ratio Im/Re for real k.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .background import phi_scaled
from .errors import JostPoleError, NodeError, TanPoleError
from .specfun import gamma_complex, kummer_series_array, rgamma_array, rgamma_complex

__all__ = [
    "KINDS",
    "PotentialSpec",
    "JostValue",
    "potential",
    "wavenumber_q",
    "jost_eval",
    "jost_delta_eval",
    "jost_entire",
    "jost_entire_array",
    "jost_normalized",
    "transcendental_residual",
    "reflection_amplitude",
    "phase_shift",
    "free_particle_bound_residual",
    "free_particle_bound_states",
]

KINDS = ("well", "barrier", "delta_well", "delta_barrier")
POLE_FLOOR = 1e-13
_SMALL_Q = 1e-6


@dataclass(frozen=True)
class PotentialSpec:
    """Half-width ``a``, depth/height ``V0`` and the kind tag."""

    a: float
    V0: float = 1.0
    kind: str = "well"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.is_delta:
            if self.a != 0:
                raise ValueError("delta kinds require a = 0")
        else:
            if not self.a > 0:
                raise ValueError("finite kinds require a > 0")
            if not self.V0 > 0:
                raise ValueError("V0 must be positive")

    @property
    def is_delta(self) -> bool:
        return self.kind.startswith("delta")

    @property
    def is_barrier(self) -> bool:
        return self.kind.endswith("barrier")

    @property
    def area(self) -> float:
        return 1.0 if self.is_delta else 2.0 * self.a * self.V0

    @classmethod
    def unit_area(cls, a: float, barrier: bool = False) -> "PotentialSpec":
        """Unit-area box (2aV0 = 1), or the unit-strength delta when a = 0."""
        if a == 0:
            return cls(0.0, 1.0, "delta_barrier" if barrier else "delta_well")
        return cls(float(a), 1.0 / (2.0 * a), "barrier" if barrier else "well")


@dataclass(frozen=True)
class JostValue:
    F: complex
    C2: complex
    D2: complex
    beta_phi_at_minus_a: complex
    q: complex


def potential(spec: PotentialSpec, x) -> np.ndarray:
    """V(x) on an array (the delta term itself is not representable and is omitted)."""
    x = np.asarray(x, dtype=float)
    a = spec.a
    mid = spec.V0 if spec.is_barrier else -spec.V0
    if spec.is_delta:
        return np.where(x < 0, x * x, 0.0)
    return np.where(x <= -a, x * x, np.where(x < a, mid, 0.0))


def wavenumber_q(spec: PotentialSpec, k: complex) -> complex:
    """Wavenumber inside |x| < a (principal square root)."""
    k = complex(k)
    if spec.is_barrier:
        return cmath.sqrt(k * k - spec.V0)
    return cmath.sqrt(spec.V0 + k * k)


def _cos_sinc(q: complex, L: float) -> tuple[complex, complex, complex]:
    """cos(qL), sin(qL)/q and q sin(qL); regular as q → 0."""
    w = q * L
    if abs(w) < _SMALL_Q:
        w2 = w * w
        c = 1.0 - w2 / 2.0 + w2 * w2 / 24.0
        s_over = L * (1.0 - w2 / 6.0 + w2 * w2 / 120.0)
    else:
        c = cmath.cos(w)
        s_over = cmath.sin(w) / q
    return c, s_over, q * q * s_over


def _propagate(spec: PotentialSpec, k: complex, p0: complex, d0: complex):
    """Carry (ψ, ψ') from x = -a to x = a through the flat middle region."""
    q = wavenumber_q(spec, k)
    c, s_over, qs = _cos_sinc(q, 2.0 * spec.a)
    return p0 * c + d0 * s_over, -p0 * qs + d0 * c, q


def _delta_values(spec: PotentialSpec, k: complex) -> tuple[complex, complex]:
    """Scaled ψ(0) and ψ'(0⁺) for the delta kinds."""
    alpha = (1.0 - k * k) / 4.0
    rb = rgamma_complex(alpha + 0.5)
    ra = rgamma_complex(alpha)
    sign = 1.0 if spec.is_barrier else -1.0
    # φ̃'(0⁻) = 2/Γ(α); the delta adds ±ψ(0) to the slope
    return rb, 2.0 * ra + sign * rb


def jost_entire(spec: PotentialSpec, k: complex) -> complex:
    """Pole- and node-free companion F̂ of the Jost function."""
    k = complex(k)
    if k == 0:
        raise ValueError("k = 0 is not allowed")
    if spec.is_delta:
        p1, d1 = _delta_values(spec, k)
        a = 0.0
    else:
        p0, d0 = phi_scaled(k, -spec.a)
        p1, d1, _ = _propagate(spec, k, p0, d0)
        a = spec.a
    return cmath.exp(1j * k * a) * (d1 - 1j * k * p1) / k


def jost_entire_array(spec: PotentialSpec, k) -> np.ndarray:
    """Vectorised :func:`jost_entire` for arrays of wavenumbers."""
    k = np.asarray(k, dtype=complex)
    alpha = (1.0 - k * k) / 4.0
    rb = rgamma_array(alpha + 0.5)
    ra = rgamma_array(alpha)
    if spec.is_delta:
        sign = 1.0 if spec.is_barrier else -1.0
        p1 = rb
        d1 = 2.0 * ra + sign * rb
        return (d1 - 1j * k * p1) / k
    a = spec.a
    z = a * a
    x = -a
    m1 = kummer_series_array(alpha, 0.5, z)
    m2 = kummer_series_array(alpha + 0.5, 1.5, z)
    m1d = kummer_series_array(alpha + 1.0, 1.5, z)
    m2d = kummer_series_array(alpha + 1.5, 2.5, z)
    env = math.exp(-0.5 * z)
    core = rb * m1 + 2.0 * x * ra * m2
    dcore = 4.0 * alpha * x * rb * m1d + 2.0 * ra * m2 + (8.0 / 3.0) * (alpha + 0.5) * z * ra * m2d
    p0 = env * core
    d0 = env * (dcore - x * core)
    q = np.sqrt(k * k - spec.V0) if spec.is_barrier else np.sqrt(spec.V0 + k * k)
    L = 2.0 * a
    w = q * L
    small = np.abs(w) < _SMALL_Q
    w_safe = np.where(small, 1.0, w)
    q_safe = np.where(small, 1.0, q)
    w2 = w * w
    c = np.where(small, 1.0 - w2 / 2.0 + w2 * w2 / 24.0, np.cos(w_safe))
    s_over = np.where(small, L * (1.0 - w2 / 6.0 + w2 * w2 / 120.0), np.sin(w_safe) / q_safe)
    p1 = p0 * c + d0 * s_over
    d1 = -p0 * q * q * s_over + d0 * c
    return np.exp(1j * k * a) * (d1 - 1j * k * p1) / k


def jost_normalized(spec: PotentialSpec, k: complex) -> complex:
    """F in the reported normalisation (jost_eval for finite kinds, gamma form for delta kinds)."""
    if spec.is_delta:
        return jost_delta_eval(spec.kind, k).F
    return jost_eval(spec, k).F


def jost_eval(spec: PotentialSpec, k: complex) -> JostValue:
    """Jost function of a finite box with the regular solution scaled to ψ(-a) = 1.

    The middle-region solution is C2 sin(qx) + D2 cos(qx); region III is
    (i/2)[F e^{-ikx} - F* e^{ikx}].
    """
    if spec.is_delta:
        raise ValueError("use jost_delta_eval for delta kinds")
    k = complex(k)
    if k == 0:
        raise ValueError("k = 0 is not allowed")
    a = spec.a
    p0, d0 = phi_scaled(k, -a)
    if p0 == 0 or abs(p0) <= 1e-13 * abs(d0):
        raise NodeError(f"φ vanishes at x = -a for k = {k}")
    beta = -d0 / p0
    p1, d1, q = _propagate(spec, k, 1.0, -beta)
    F = cmath.exp(1j * k * a) * (d1 - 1j * k * p1) / k
    q_eff = q if abs(q) > 1e-8 else 1e-8
    sa, ca = cmath.sin(q_eff * a), cmath.cos(q_eff * a)
    C2 = (-q_eff * sa - beta * ca) / q_eff
    D2 = (-beta * sa + q_eff * ca) / q_eff
    return JostValue(F, C2, D2, beta, q)


def jost_delta_eval(kind: str, k: complex) -> JostValue:
    """Delta-limit Jost function F± = 2Γ(α+½) ± Γ(α) - ikΓ(α).

    The upper sign belongs to the barrier, the lower one to the well;
    α = (1 - k²)/4.  The zero set is that of the slope-jump condition at x = 0.
    """
    if kind not in ("delta_well", "delta_barrier"):
        raise ValueError(f"kind must be a delta kind, got {kind!r}")
    k = complex(k)
    alpha = (1.0 - k * k) / 4.0
    ga = gamma_complex(alpha)
    gb = gamma_complex(alpha + 0.5)
    sign = 1.0 if kind == "delta_barrier" else -1.0
    F = 2.0 * gb + sign * ga - 1j * k * ga
    beta0 = -2.0 * gb / ga
    nan = complex(math.nan, math.nan)
    return JostValue(F, nan, nan, beta0, nan)


def transcendental_residual(spec: PotentialSpec, k: complex, cleared: bool = False) -> complex:
    """Residual of the root condition; zero exactly at the Jost zeros.

    Finite kinds: β - [-ik + (ikβ - q²) tan(2qa)/q] with β = β_φ(-a).  With
    ``cleared=True`` the expression is multiplied by cos(2qa), which is finite
    everywhere.  Delta kinds: 2Γ(α+½) ± Γ(α) - ikΓ(α).
    """
    k = complex(k)
    if spec.is_delta:
        return jost_delta_eval(spec.kind, k).F
    a = spec.a
    p0, d0 = phi_scaled(k, -a)
    if p0 == 0 or abs(p0) <= 1e-13 * abs(d0):
        raise NodeError(f"φ vanishes at x = -a for k = {k}")
    beta = -d0 / p0
    q = wavenumber_q(spec, k)
    c, s_over, _ = _cos_sinc(q, 2.0 * a)
    if cleared:
        return (beta + 1j * k) * c - (1j * k * beta - q * q) * s_over
    if abs(c) < 1e-13:
        raise TanPoleError(f"cos(2qa) vanishes at k = {k}")
    return beta + 1j * k - (1j * k * beta - q * q) * s_over / c


def reflection_amplitude(spec: PotentialSpec, k: complex) -> complex:
    """s = F*/F with F*(k) = conj(F(conj k))."""
    k = complex(k)
    f = jost_entire(spec, k)
    f_star = jost_entire(spec, k.conjugate()).conjugate()
    if abs(f) < POLE_FLOOR * max(1.0, abs(f_star)):
        raise JostPoleError(f"F vanishes at k = {k}")
    return f_star / f


def _principal_phase(f: complex) -> float:
    """-arctan(Im f / Re f) folded into (-π/2, π/2]."""
    d = -math.atan2(f.imag, f.real)
    if d > math.pi / 2:
        d -= math.pi
    elif d <= -math.pi / 2:
        d += math.pi
    return d


def phase_shift(spec: PotentialSpec, E: float) -> float:
    """Principal-branch phase shift δ(E) = -arctan(Im F / Re F)."""
    if not E > 0:
        raise ValueError("E must be positive")
    f = jost_entire(spec, math.sqrt(E))
    if abs(f) < POLE_FLOOR:
        raise JostPoleError(f"phase undefined: F vanishes at E = {E}")
    return _principal_phase(f)


def free_particle_bound_residual(a: float, V0: float, k: complex, parity: str = "even") -> complex:
    """Box well V0 on |x| < a with free motion on both sides.

    Zeros in Im k > 0 are the bound states.  For a = 0 the well is the delta
    -V0 δ(x) and the residual is V0/2 - κ.
    """
    kappa = -1j * complex(k)
    if a == 0:
        return V0 / 2.0 - kappa
    q = cmath.sqrt(V0 - kappa * kappa)
    if parity == "even":
        return q * cmath.sin(q * a) - kappa * cmath.cos(q * a)
    if parity == "odd":
        return q * cmath.cos(q * a) + kappa * cmath.sin(q * a)
    raise ValueError("parity must be 'even' or 'odd'")


def free_particle_bound_states(a: float, V0: float, parity: str | None = None) -> list[float]:
    """Bound energies E = -κ² of the free-particle box well, sorted ascending."""
    from scipy.optimize import brentq

    if a == 0:
        return [-(V0 / 2.0) ** 2]
    parities = ("even", "odd") if parity is None else (parity,)
    kmax = math.sqrt(V0)
    grid = np.linspace(kmax * 1e-9, kmax * (1 - 1e-12), 4001)
    energies = []
    for par in parities:
        g = lambda kap: free_particle_bound_residual(a, V0, 1j * kap, par).real
        vals = [g(x) for x in grid]
        for x0, x1, v0, v1 in zip(grid[:-1], grid[1:], vals[:-1], vals[1:]):
            if v0 == 0 or v0 * v1 < 0:
                kap = brentq(g, x0, x1, xtol=1e-15) if v0 != 0 else x0
                energies.append(-kap * kap)
    return sorted(energies)
