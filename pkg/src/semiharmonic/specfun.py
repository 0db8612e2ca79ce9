"""
Complex special functions
=========================

Gamma, reciprocal gamma and digamma of complex argument, and the Kummer
confluent hypergeometric function ``1F1(a, c; z)`` with a power-series path
for moderate ``|z|`` and the two-term large-``|z|`` expansion

    1F1(a,c;z) ~ Γ(c)/Γ(c-a) e^{±iπa} z^{-a} [1 + P₋(a)]
               + Γ(c)/Γ(a)   e^{z}     z^{a-c} [1 + P₊(c-a)]

where ``P±(γ) = Σ_{n≥1} (±1)^n (γ)_n (1-c+γ)_n / (n! z^n)``.  The sign in
``e^{±iπa}`` is the Riemann-sheet choice: ``"upper"`` (+) is valid for
``-π/2 < arg z < 3π/2`` and ``"lower"`` (-) for ``-3π/2 < arg z < π/2``.

All functions are pure and operate on Python complex scalars, except
:func:`kummer_series_array`, which vectorises the series over ``z``.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import AsymptoticDivergenceWarning, GammaPoleError, SeriesConvergenceError

__all__ = [
    "KummerParams",
    "EvalResult",
    "AsymptoticParts",
    "gamma_complex",
    "loggamma_complex",
    "rgamma_complex",
    "rgamma_with_derivative",
    "digamma_complex",
    "kummer_series",
    "kummer_series_array",
    "rgamma_array",
    "kummer_asymptotic_parts",
    "kummer_asymptotic",
    "kummer_eval",
    "sheet_for",
    "R_SWITCH",
    "N_ASYMPTOTIC_TERMS",
]

R_SWITCH = 30.0
N_ASYMPTOTIC_TERMS = 30
MAX_SERIES_TERMS = 10_000
POLE_TOL = 1e-12

# Lanczos approximation, g = 7, nine coefficients.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# B_{2n} / (2n) for the digamma asymptotic series, n = 1..8
_DIGAMMA_COEF = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)


def _nonpositive_integer(z: complex) -> int | None:
    """Return n if z is within POLE_TOL of the non-positive integer n."""
    n = round(z.real)
    if n <= 0 and abs(z - n) < POLE_TOL:
        return int(n)
    return None


def _lanczos_log(z: complex) -> complex:
    # valid for Re z >= 0.5
    z = z - 1.0
    x = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        x += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma_complex(z: complex) -> complex:
    """Euler gamma function Γ(z) for complex z.

    Lanczos approximation on Re z >= 1/2, reflection formula elsewhere.

    Raises
    ------
    GammaPoleError
        If z lies within 1e-12 of a non-positive integer.
    """
    z = complex(z)
    if _nonpositive_integer(z) is not None:
        raise GammaPoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma_complex(1.0 - z))
    return cmath.exp(_lanczos_log(z))


def loggamma_complex(z: complex) -> complex:
    """A logarithm of Γ(z); exp(loggamma_complex(z)) == Γ(z).

    The imaginary part is not guaranteed to follow the principal branch of
    log Γ, only to be a valid logarithm.  Use it for ratios/products of gamma
    values whose moduli would overflow.
    """
    z = complex(z)
    if _nonpositive_integer(z) is not None:
        raise GammaPoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - loggamma_complex(1.0 - z)
    return _lanczos_log(z)


def rgamma_complex(z: complex) -> complex:
    """Reciprocal gamma 1/Γ(z), an entire function (zero at the poles of Γ)."""
    z = complex(z)
    if z.real < 0.5:
        n = _nonpositive_integer(z)
        if n is not None and z == n:
            return 0j
        return cmath.sin(math.pi * z) * cmath.exp(_lanczos_log(1.0 - z)) / math.pi
    return cmath.exp(-_lanczos_log(z))


def rgamma_with_derivative(z: complex) -> tuple[complex, complex]:
    """Return (1/Γ(z), d/dz 1/Γ(z)) = (r, -ψ(z) r), finite everywhere.

    At an exact pole z = -n the derivative takes its limiting value (-1)^n n!.
    """
    z = complex(z)
    r = rgamma_complex(z)
    n = _nonpositive_integer(z)
    if n is not None:
        m = -n
        dr_pole = (-1.0) ** m * math.factorial(m)
        if z == n:
            return 0j, complex(dr_pole)
        # first-order expansion about the pole
        return dr_pole * (z - n), complex(dr_pole)
    return r, -digamma_complex(z) * r


def digamma_complex(z: complex) -> complex:
    """Digamma ψ(z) = Γ'(z)/Γ(z).

    Reflection ψ(z) = ψ(1-z) - π cot(πz) for Re z < 1/2, upward recurrence to
    Re z >= 10, then the Bernoulli asymptotic series.
    """
    z = complex(z)
    if _nonpositive_integer(z) is not None:
        raise GammaPoleError(f"digamma pole at z = {z}")
    if z.real < 0.5:
        return digamma_complex(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    shift = 0j
    while z.real < 10.0:
        shift -= 1.0 / z
        z += 1.0
    w = 1.0 / (z * z)
    tail = 0j
    for coef in reversed(_DIGAMMA_COEF):
        tail = (tail + coef) * w
    return shift + cmath.log(z) - 0.5 / z - tail


@dataclass(frozen=True)
class KummerParams:
    """Arguments of 1F1(a, c; z)."""

    alpha_param: complex
    c_param: float
    z: complex

    def __post_init__(self):
        c = self.c_param
        if c <= 0 and float(c).is_integer():
            raise ValueError(f"c must not be zero or a negative integer, got {c}")


@dataclass(frozen=True)
class EvalResult:
    value: complex
    method_used: str  # "series" | "asymptotic"
    est_error: float
    diverged: bool = False


@dataclass(frozen=True)
class AsymptoticParts:
    """Separated terms of the large-|z| expansion, with their z-derivatives.

    ``recessive`` carries Γ(c)/Γ(c-a) e^{±iπa} z^{-a}[1+P₋(a)] and
    ``dominant`` carries Γ(c)/Γ(a) e^z z^{a-c}[1+P₊(c-a)].
    ``dominant_series`` is the bare bracket [1+P₊(c-a)], which callers need
    when they supply their own power factor for z (see ``background``).
    """

    recessive: complex
    dominant: complex
    d_recessive: complex
    d_dominant: complex
    dominant_series: complex
    est_error: float
    diverged: bool


def _pochhammer_pair_terms(g1: complex, g2: complex, z: complex, sign: float, n_terms: int):
    """Terms t_n = sign^n (g1)_n (g2)_n / (n! z^n), n = 0..n_terms, cut at the smallest term.

    Returns (terms, first_omitted_magnitude, diverged).
    """
    terms = [1.0 + 0j]
    for n in range(n_terms + 1):
        terms.append(terms[-1] * sign * (g1 + n) * (g2 + n) / ((n + 1) * z))
        if terms[-1] == 0:
            return terms, 0.0, False
    mags = [abs(t) for t in terms]
    if mags[-1] > mags[-2]:
        # still growing at the requested order: optimal truncation
        m = int(np.argmin(mags))
        return terms[:m], mags[m], True
    return terms[:-1], mags[-1], False


def kummer_series(p: KummerParams, tol: float = 1e-16) -> EvalResult:
    """Power series Σ (a)_n z^n / ((c)_n n!).

    Summation stops once the ratio test guarantees monotone decay of the
    remaining terms and the last term is below ``tol`` relative to the sum.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a, c, z = complex(p.alpha_param), float(p.c_param), complex(p.z)
    if z == 0:
        return EvalResult(1.0 + 0j, "series", 0.0)
    n_safe = abs(a) + abs(z) + 2.0
    # extended precision absorbs the e^{|z|} cancellation off the real axis
    aw, cw, zw = np.clongdouble(a), np.longdouble(c), np.clongdouble(z)
    total = np.clongdouble(1.0)
    term = np.clongdouble(1.0)
    for n in range(MAX_SERIES_TERMS):
        term = term * (aw + n) * zw / ((cw + n) * (n + 1))
        total += term
        rel = float(abs(term) / abs(total)) if total != 0 else float(abs(term))
        if n + 1 > n_safe and rel < tol:
            return EvalResult(complex(total), "series", rel)
        if term == 0 and n + 1 > -a.real:
            return EvalResult(complex(total), "series", 0.0)
    raise SeriesConvergenceError(
        f"1F1 series did not converge in {MAX_SERIES_TERMS} terms (a={a}, c={c}, z={z})"
    )


def kummer_series_array(a, c: float, z, tol: float = 1e-16) -> np.ndarray:
    """Vectorised :func:`kummer_series`; ``a`` and ``z`` broadcast elementwise."""
    a = np.asarray(a, dtype=complex)
    z = np.asarray(z, dtype=complex)
    a, z = np.broadcast_arrays(a, z)
    total = np.ones(z.shape, dtype=complex)
    term = np.ones(z.shape, dtype=complex)
    if z.size == 0:
        return total
    n_safe = float(np.max(np.abs(a)) + np.max(np.abs(z))) + 2.0
    for n in range(MAX_SERIES_TERMS):
        term = term * (a + n) * z / ((c + n) * (n + 1))
        total = total + term
        if n + 1 > n_safe:
            mag = np.abs(total)
            rel = np.abs(term) / np.where(mag > 0, mag, 1.0)
            if np.all(rel < tol):
                return total
    raise SeriesConvergenceError("1F1 array series did not converge")


def rgamma_array(z) -> np.ndarray:
    """Elementwise 1/Γ(z) for complex arrays (Lanczos plus reflection)."""
    z = np.asarray(z, dtype=complex)
    left = z.real < 0.5
    w = np.where(left, 1.0 - z, z) - 1.0
    x = np.full(z.shape, _LANCZOS_COEF[0], dtype=complex)
    for i in range(1, len(_LANCZOS_COEF)):
        x = x + _LANCZOS_COEF[i] / (w + i)
    t = w + _LANCZOS_G + 0.5
    lg = _HALF_LOG_2PI + (w + 0.5) * np.log(t) - t + np.log(x)
    return np.where(left, np.sin(np.pi * z) * np.exp(lg) / np.pi, np.exp(-lg))


def kummer_asymptotic_parts(
    a: complex, c: float, z: complex, sheet: str = "upper", n_terms: int = N_ASYMPTOTIC_TERMS
) -> AsymptoticParts:
    """Both terms of the large-|z| expansion and their z-derivatives.

    Each bracket is truncated after ``n_terms`` correction terms, or earlier at
    the smallest term if the series starts to grow (``diverged`` is then set).
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    if sheet not in ("upper", "lower"):
        raise ValueError(f"sheet must be 'upper' or 'lower', got {sheet!r}")
    a, z = complex(a), complex(z)
    if z == 0:
        raise ValueError("asymptotic expansion needs z != 0")
    s = 1.0 if sheet == "upper" else -1.0
    gc = gamma_complex(c)

    rec_terms, rec_omit, div_r = _pochhammer_pair_terms(a, 1.0 - c + a, z, -1.0, n_terms)
    dom_terms, dom_omit, div_d = _pochhammer_pair_terms(c - a, 1.0 - a, z, 1.0, n_terms)

    rec_pref = gc * rgamma_complex(c - a) * cmath.exp(s * 1j * math.pi * a) * z ** (-a)
    rec_sum = sum(rec_terms)
    d_rec_sum = sum(-(a + n) * t for n, t in enumerate(rec_terms)) / z
    recessive = rec_pref * rec_sum
    d_recessive = rec_pref * d_rec_sum

    dom_pref = gc * rgamma_complex(a) * cmath.exp(z) * z ** (a - c)
    dom_sum = sum(dom_terms)
    d_dom_sum = sum(t * (1.0 + (a - c - n) / z) for n, t in enumerate(dom_terms))
    dominant = dom_pref * dom_sum
    d_dominant = dom_pref * d_dom_sum

    est = abs(rec_pref) * rec_omit + abs(dom_pref) * dom_omit
    diverged = div_r or div_d
    return AsymptoticParts(
        recessive, dominant, d_recessive, d_dominant, dom_sum, float(est), diverged
    )


def kummer_asymptotic(
    p: KummerParams, sheet: str = "upper", n_terms: int = N_ASYMPTOTIC_TERMS
) -> EvalResult:
    """Large-|z| value of 1F1 on the declared sheet (no extra sheet factors)."""
    parts = kummer_asymptotic_parts(p.alpha_param, p.c_param, p.z, sheet, n_terms)
    if parts.diverged:
        warnings.warn(
            f"asymptotic 1F1 terms grew before order {n_terms} at z={p.z}",
            AsymptoticDivergenceWarning,
            stacklevel=2,
        )
    return EvalResult(parts.recessive + parts.dominant, "asymptotic", parts.est_error, parts.diverged)


def sheet_for(z: complex) -> str:
    """Sheet valid for arg z in [0, π] (upper) or (-π, 0) (lower)."""
    return "upper" if complex(z).imag >= 0 else "lower"


def kummer_eval(p: KummerParams) -> EvalResult:
    """Dispatch: series for |z| <= R_SWITCH, asymptotic expansion beyond.

    In the left half-plane the series is summed for 1F1(c-a, c; -z) and
    multiplied by e^z (Kummer's transformation), which avoids the
    cancellation of the alternating direct sum.
    """
    z = complex(p.z)
    if abs(z) <= R_SWITCH:
        if z.real < 0:
            twin = kummer_series(KummerParams(p.c_param - p.alpha_param, p.c_param, -z))
            return EvalResult(cmath.exp(z) * twin.value, "series", twin.est_error)
        return kummer_series(p)
    return kummer_asymptotic(p, sheet_for(z))
