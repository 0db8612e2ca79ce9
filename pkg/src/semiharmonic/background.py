"""Regular solution of -ψ'' + x²ψ = k²ψ on the left half-line.

The solution that decays as x → -∞ is

    φ(x) = e^{-x²/2} [M(α, ½, x²) + 2xG M(α+½, 3/2, x²)],   α = (1 - k²)/4,

with G = Γ(α+½)/Γ(α), normalised so that φ(0) = 1.  Internally the package
works with the scaled combination φ̃ = φ/Γ(α+½), i.e.

    φ̃(x) = e^{-x²/2} [M(α, ½, x²)/Γ(α+½) + 2x M(α+½, 3/2, x²)/Γ(α)],

which is entire in k and never has gamma poles.  Logarithmic derivatives are
the same for both.

For x² above ``PHI_SWITCH`` only the recessive terms of the two large-z
expansions are kept: the choice of G makes the growing terms cancel exactly.
The sheet of e^{±iπa} is picked by the sign of Im α so that the bracket does
not suffer from cancellation.  Between the series zone near the origin and
the far zone the solution is marched with exact Taylor steps of the
differential equation, started from the asymptotic tail (see
``phi_scaled_array``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import GammaPoleError, NodeError
from .specfun import (
    N_ASYMPTOTIC_TERMS,
    POLE_TOL,
    gamma_complex,
    kummer_asymptotic_parts,
    kummer_series,
    kummer_series_array,
    rgamma_complex,
    KummerParams,
)

__all__ = [
    "PHI_SWITCH",
    "PhiContext",
    "PhiDecayReport",
    "phi_eval",
    "phi_log_derivative",
    "phi_decay_check",
    "phi_scaled",
    "phi_scaled_array",
    "second_solution",
]

PHI_SWITCH = 20.0  # x² above which the recessive asymptotic form is used
NODE_RATIO = 1e-13
SERIES_MAX = 1.0  # x² up to which point evaluation sums the series
MARCH_START = 40.0  # smallest x² where marching starts
MARCH_STEP = 0.25
MARCH_TERMS = 40


@dataclass(frozen=True)
class PhiContext:
    """Wavenumber k and the derived parameter α = (1 - k²)/4."""

    k: complex

    @property
    def alpha(self) -> complex:
        k = complex(self.k)
        return (1.0 - k * k) / 4.0

    @property
    def g_ratio(self) -> complex:
        """G = Γ(α+½)/Γ(α); raises at poles of Γ(α+½)."""
        a = self.alpha
        return gamma_complex(a + 0.5) * rgamma_complex(a)


def _coeffs(alpha: complex) -> tuple[complex, complex]:
    return rgamma_complex(alpha + 0.5), rgamma_complex(alpha)


def _near_series(alpha, ra, rb, x):
    """Scaled φ̃ and φ̃' from the convergent series, vectorised over x."""
    x = np.asarray(x, dtype=float)
    z = x * x
    m1 = kummer_series_array(alpha, 0.5, z)
    m2 = kummer_series_array(alpha + 0.5, 1.5, z)
    m1d = kummer_series_array(alpha + 1.0, 1.5, z)
    m2d = kummer_series_array(alpha + 1.5, 2.5, z)
    env = np.exp(-0.5 * z)
    core = rb * m1 + 2.0 * x * ra * m2
    dcore = 4.0 * alpha * x * rb * m1d + 2.0 * ra * m2 + (8.0 / 3.0) * (alpha + 0.5) * z * ra * m2d
    return env * core, env * (dcore - x * core)


def _far_asymptotic(alpha, ra, rb, x: float):
    """Scaled φ̃ and φ̃' from the recessive terms only (x < 0, x² large)."""
    z = complex(x * x)
    sheet = "upper" if alpha.imag >= 0 else "lower"
    p1 = kummer_asymptotic_parts(alpha, 0.5, z, sheet, N_ASYMPTOTIC_TERMS)
    p2 = kummer_asymptotic_parts(alpha + 0.5, 1.5, z, sheet, N_ASYMPTOTIC_TERMS)
    env = math.exp(-0.5 * x * x)
    core = rb * p1.recessive + 2.0 * x * ra * p2.recessive
    dcore = 2.0 * x * rb * p1.d_recessive + 2.0 * ra * p2.recessive + 4.0 * x * x * ra * p2.d_recessive
    return env * core, env * (dcore - x * core)


def _direct_array(k: complex, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Series for x² <= PHI_SWITCH, recessive asymptotics beyond."""
    alpha = PhiContext(k).alpha
    rb, ra = _coeffs(alpha)
    val = np.empty(x.shape, dtype=complex)
    der = np.empty(x.shape, dtype=complex)
    far = x * x > PHI_SWITCH
    near = ~far
    if np.any(near):
        val[near], der[near] = _near_series(alpha, ra, rb, x[near])
    for i in np.flatnonzero(far):
        if x[i] > 0:
            raise ValueError("far-field form is only valid for x < 0")
        val[i], der[i] = _far_asymptotic(alpha, ra, rb, float(x[i]))
    return val, der


def _taylor_coeffs(x0: float, energy: complex, c0: complex, c1: complex, n: int) -> np.ndarray:
    """Taylor coefficients about x0 of the solution of ψ'' = (x² - E)ψ."""
    c = np.zeros(n, dtype=complex)
    c[0], c[1] = c0, c1
    shift = x0 * x0 - energy
    for m in range(n - 2):
        acc = shift * c[m]
        if m >= 1:
            acc += 2.0 * x0 * c[m - 1]
        if m >= 2:
            acc += c[m - 2]
        c[m + 2] = acc / ((m + 2) * (m + 1))
    return c


def march_start(k: complex) -> float:
    """x² where marching begins: past the turning point, and far enough out
    that the asymptotic start is accurate when α is large and positive."""
    k = complex(k)
    alpha = (1.0 - k * k) / 4.0
    z0 = max(MARCH_START, abs(k * k) + 30.0)
    if alpha.real > 0:
        z0 = max(z0, 2.0 * abs(alpha + 0.5) ** 2)
    return z0


def phi_scaled_array(k: complex, x) -> tuple[np.ndarray, np.ndarray]:
    """φ̃ = φ/Γ(α+½) and its x-derivative on an array of points x <= 0.

    Points with x² > march_start(k) use the recessive asymptotic form
    directly.  The rest are reached by exact Taylor steps of the differential
    equation, marching rightward from x = -√march_start(k); marching in that direction is
    stable for the decaying solution and avoids the e^{x²} cancellation that
    the series suffers for larger |x|.  The march is continued to x = 0 and
    the whole result rescaled onto the exact values φ̃(0) = 1/Γ(α+½),
    φ̃'(0) = 2/Γ(α), which removes the error of the asymptotic starting value
    when α is large and positive.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x > 0):
        raise ValueError("φ is only used on x <= 0")
    val = np.empty(x.shape, dtype=complex)
    der = np.empty(x.shape, dtype=complex)
    k = complex(k)
    energy = k * k
    x_start = -math.sqrt(march_start(k))
    far = x < x_start
    if np.any(far):
        val[far], der[far] = _direct_array(k, x[far])
    v0, d0 = _direct_array(k, np.array([x_start]))
    v, d = complex(v0[0]), complex(d0[0])
    n_steps = int(math.ceil(-x_start / MARCH_STEP))
    step = -x_start / n_steps
    nodes = x_start + step * np.arange(n_steps + 1)
    near = ~far
    idx_near = np.flatnonzero(near)
    seg = np.clip(((x[near] - x_start) // step).astype(int), 0, n_steps - 1)
    powers = step ** np.arange(MARCH_TERMS)
    for j in range(n_steps):
        c = _taylor_coeffs(nodes[j], energy, v, d, MARCH_TERMS)
        sel = seg == j
        if np.any(sel):
            t = x[idx_near[sel]] - nodes[j]
            pv = np.zeros(t.shape, dtype=complex)
            pd = np.zeros(t.shape, dtype=complex)
            for m in range(MARCH_TERMS - 1, -1, -1):
                pv = pv * t + c[m]
                if m >= 1:
                    pd = pd * t + m * c[m]
            val[idx_near[sel]] = pv
            der[idx_near[sel]] = pd
        v = complex(np.sum(c * powers))
        d = complex(np.sum(np.arange(1, MARCH_TERMS) * c[1:] * powers[:-1]))
    rb, ra = _coeffs(PhiContext(k).alpha)
    exact = np.array([rb, 2.0 * ra])
    marched = np.array([v, d])
    scale = np.vdot(marched, exact) / np.vdot(marched, marched)
    return val * scale, der * scale


def phi_scaled(k: complex, x: float) -> tuple[complex, complex]:
    """Scaled φ̃ and φ̃' at one point.

    The series is used for x² <= SERIES_MAX only; its cancellation grows like
    e^{x²}, so farther out the value is marched (see ``phi_scaled_array``).
    """
    x = float(x)
    if x * x <= SERIES_MAX:
        v, d = _direct_array(k, np.array([x]))
    else:
        v, d = phi_scaled_array(k, np.array([x]))
    return complex(v[0]), complex(d[0])


def _check_pole(alpha: complex) -> None:
    w = alpha + 0.5
    n = round(w.real)
    if n <= 0 and abs(w - n) < POLE_TOL:
        raise GammaPoleError(f"G = Γ(α+½)/Γ(α) is infinite at α = {alpha}")


def phi_eval(ctx: PhiContext, x: float) -> complex:
    """φ(x) with φ(0) = 1, for x <= 0."""
    if x > 0:
        raise ValueError("φ is only used on x <= 0")
    alpha = ctx.alpha
    _check_pole(alpha)
    v, _ = phi_scaled(ctx.k, x)
    return v * gamma_complex(alpha + 0.5)


def phi_log_derivative(ctx: PhiContext, x: float) -> complex:
    """β_φ(x) = -φ'(x)/φ(x)."""
    if x > 0:
        raise ValueError("φ is only used on x <= 0")
    v, d = phi_scaled(ctx.k, x)
    if abs(v) <= NODE_RATIO * abs(d) or v == 0:
        raise NodeError(f"φ has a node at x = {x} for k = {ctx.k}")
    return -d / v


@dataclass(frozen=True)
class PhiDecayReport:
    x_far: float
    phi_abs: float
    envelope: float
    dominant_residual: float
    naive_residual: float
    passed: bool


def phi_decay_check(ctx: PhiContext, x_far: float = -6.0) -> PhiDecayReport:
    """Check that the growing terms cancel for x → -∞ and that φ decays.

    The dominant terms are built with the power x^{2(a-c)} taken on the
    negative axis together with its sheet factor e^{-2πi(a-c)}; the residual
    of their combination must vanish.  ``naive_residual`` omits that factor,
    for which the two dominant terms add instead of cancel.
    """
    if x_far >= 0:
        raise ValueError("x_far must be negative")
    alpha = ctx.alpha
    rb, ra = _coeffs(alpha)
    z = complex(x_far * x_far)
    xc = complex(x_far, 0.0)

    def dominant(a, c, coef, with_sheet):
        parts = kummer_asymptotic_parts(a, c, z, "upper", N_ASYMPTOTIC_TERMS)
        pref = gamma_complex(c) * rgamma_complex(a) * cmath.exp(z)
        phase = cmath.exp(-2j * math.pi * (a - c)) if with_sheet else 1.0
        power = cmath.exp(2.0 * (a - c) * (math.log(-x_far) + 1j * math.pi))
        return coef * pref * power * phase * parts.dominant_series

    d1 = dominant(alpha, 0.5, rb, True)
    d2 = dominant(alpha + 0.5, 1.5, 2.0 * xc * ra, True)
    n1 = dominant(alpha, 0.5, rb, False)
    n2 = dominant(alpha + 0.5, 1.5, 2.0 * xc * ra, False)
    scale = max(abs(d1), abs(d2), 1e-300)
    resid = abs(d1 + d2) / scale
    naive = abs(n1 + n2) / max(abs(n1), abs(n2), 1e-300)

    v, _ = phi_scaled(ctx.k, x_far)
    env = math.exp(-0.5 * x_far * x_far) * abs(x_far) ** (-2.0 * alpha.real) / math.sqrt(math.pi)
    passed = resid < 1e-8 and abs(v) <= 1e3 * env
    return PhiDecayReport(x_far, abs(v), env, resid, naive, passed)


def second_solution(k: complex, x: float) -> tuple[complex, complex]:
    """The excluded solution e^{-x²/2}[M(α,½,x²) - 2xG M(α+½,3/2,x²)] (scaled by 1/Γ(α+½)).

    It grows like e^{x²/2} on the left; only used to check that φ is the
    decaying member of the pair.
    """
    alpha = PhiContext(k).alpha
    rb, ra = _coeffs(alpha)
    z = x * x
    m1 = kummer_series(KummerParams(alpha, 0.5, z)).value
    m2 = kummer_series(KummerParams(alpha + 0.5, 1.5, z)).value
    m1d = kummer_series(KummerParams(alpha + 1.0, 1.5, z)).value
    m2d = kummer_series(KummerParams(alpha + 1.5, 2.5, z)).value
    env = math.exp(-0.5 * z)
    core = rb * m1 - 2.0 * x * ra * m2
    dcore = 4.0 * alpha * x * rb * m1d - 2.0 * ra * m2 - (8.0 / 3.0) * (alpha + 0.5) * z * ra * m2d
    return env * core, env * (dcore - x * core)
