"""Zeros of the Jost function: bound states on the positive imaginary k-axis
and resonances in the fourth quadrant.

Candidates come from local minima of |F̂| on a rectangular grid (or a line),
then Newton's method polishes them.  F̂ is the entire companion from
:mod:`semiharmonic.jost`, so neither gamma poles nor nodes of φ(-a) can
produce spurious minima.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import ClassificationError, InsufficientRootsWarning, NoConvergenceError
from .jost import PotentialSpec, jost_entire, jost_entire_array, jost_normalized

__all__ = [
    "SpectralRoot",
    "SearchBox",
    "grid_scan",
    "newton_refine",
    "find_bound_states",
    "find_resonances",
    "default_box",
    "DEFAULT_TOL",
    "ACCEPT_TOL",
]

DEFAULT_TOL = 1e-10
ACCEPT_TOL = 1e-8
SNAP_RE = 1e-7
REAL_AXIS_OFFSET = 1e-4
MERGE_TOL = 1e-6


@dataclass(frozen=True)
class SpectralRoot:
    k: complex
    epsilon: complex
    kind: str  # "bound" | "resonance"
    residual: float
    iterations: int

    @property
    def energy(self) -> float:
        return self.epsilon.real

    @property
    def width(self) -> float:
        """Γ = -2 Im ε."""
        return -2.0 * self.epsilon.imag


@dataclass(frozen=True)
class SearchBox:
    """Rectangle re_range × im_range in the k-plane; a degenerate range gives a line scan."""

    re_range: tuple[float, float]
    im_range: tuple[float, float]
    grid_n: int = 200

    def __post_init__(self):
        for lo, hi in (self.re_range, self.im_range):
            if not hi >= lo:
                raise ValueError("ranges must satisfy lo <= hi")
        if self.re_range[0] == self.re_range[1] and self.im_range[0] == self.im_range[1]:
            raise ValueError("box is a single point")
        if self.grid_n < 8:
            raise ValueError("grid_n must be >= 8")


def default_box(n: int, grid_n: int = 200) -> SearchBox:
    """Box holding the first n resonances: Re k in (0, √(4n+8)], Im k in [-2, 0)."""
    return SearchBox((0.0, math.sqrt(4 * n + 8)), (-2.0, 0.0), grid_n)


def _axis(lo: float, hi: float, n: int, avoid_zero: bool) -> np.ndarray:
    pts = np.linspace(lo, hi, n)
    if avoid_zero:
        pts = np.where(np.abs(pts) < REAL_AXIS_OFFSET, -REAL_AXIS_OFFSET, pts)
    return pts


def grid_scan(spec: PotentialSpec, box: SearchBox) -> list[complex]:
    """Strict local minima of |F̂| at interior grid nodes (8-neighbourhood)."""
    n = box.grid_n
    line_re = box.re_range[0] == box.re_range[1]
    line_im = box.im_range[0] == box.im_range[1]
    if line_re or line_im:
        if line_re:
            t = _axis(*box.im_range, n, avoid_zero=True)
            k = box.re_range[0] + 1j * t
            if box.re_range[0] == 0:
                k = 1j * np.where(t == 0, REAL_AXIS_OFFSET, t)
        else:
            im = box.im_range[0] if box.im_range[0] != 0 else -REAL_AXIS_OFFSET
            t = np.linspace(*box.re_range, n)
            t = np.where(t == 0, REAL_AXIS_OFFSET, t)
            k = t + 1j * im
        mag = np.abs(jost_entire_array(spec, k))
        idx = [i for i in range(1, n - 1) if mag[i] < mag[i - 1] and mag[i] < mag[i + 1]]
        return [complex(k[i]) for i in idx]

    re = np.linspace(*box.re_range, n)
    re = np.where(re == 0, REAL_AXIS_OFFSET, re)
    im = _axis(*box.im_range, n, avoid_zero=True)
    K = re[None, :] + 1j * im[:, None]
    mag = np.abs(jost_entire_array(spec, K))
    inner = mag[1:-1, 1:-1]
    is_min = np.ones(inner.shape, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            nb = mag[1 + di : n - 1 + di, 1 + dj : n - 1 + dj]
            is_min &= inner < nb
    rows, cols = np.nonzero(is_min)
    order = np.lexsort((cols, rows))
    return [complex(K[1 + rows[i], 1 + cols[i]]) for i in order]


def _classify(k: complex) -> str:
    if abs(k.real) < SNAP_RE and k.imag > 0:
        return "bound"
    if k.real > 0 and k.imag < 0:
        return "resonance"
    raise ClassificationError(f"root k = {k} is neither bound nor a fourth-quadrant resonance")


def _axis_function(spec: PotentialSpec):
    """Real function of κ whose zeros are the Jost zeros at k = iκ."""

    def g(kappa: float) -> float:
        # F̂(iκ) is purely imaginary on the axis
        return (jost_entire(spec, 1j * kappa) * 1j * kappa * math.exp(kappa * spec.a)).real

    return g


def _refine_on_axis(spec: PotentialSpec, kappa: float, tol: float) -> float:
    g = _axis_function(spec)
    h = 1e-6 * max(1.0, abs(kappa))
    for _ in range(20):
        d = (g(kappa + h) - g(kappa - h)) / (2 * h)
        if d == 0:
            break
        step = g(kappa) / d
        kappa -= step
        if abs(step) < tol:
            break
    return kappa


def newton_refine(
    spec: PotentialSpec, k0: complex, tol: float = DEFAULT_TOL, max_iter: int = 50
) -> SpectralRoot:
    """Newton on F̂ with a central-difference derivative, then classify."""
    k = complex(k0)
    h = 1e-6 * max(1.0, abs(k))
    it = 0
    converged = False
    while it < max_iter:
        it += 1
        f = jost_entire(spec, k)
        d = (jost_entire(spec, k + h) - jost_entire(spec, k - h)) / (2 * h)
        if d == 0:
            break
        step = f / d
        k -= step
        if abs(step) < tol:
            converged = True
            break
    if not converged:
        raise NoConvergenceError(f"Newton did not converge from k0 = {k0} in {max_iter} steps")
    if abs(k.real) < SNAP_RE and k.imag > 0:
        k = 1j * _refine_on_axis(spec, k.imag, tol)
    kind = _classify(k)
    residual = abs(jost_normalized(spec, k))
    if residual >= ACCEPT_TOL:
        raise NoConvergenceError(f"|F| = {residual:.3e} at k = {k} exceeds {ACCEPT_TOL}")
    return SpectralRoot(k, k * k, kind, residual, it)


def find_bound_states(spec: PotentialSpec, n_scan: int = 2000, tol: float = DEFAULT_TOL) -> list[SpectralRoot]:
    """Bound states from sign changes of F̂ along k = iκ, κ in (0, √V0 + 2]."""
    if spec.is_barrier:
        return []
    g = _axis_function(spec)
    kmax = math.sqrt(spec.V0) + 2.0
    grid = np.linspace(kmax / n_scan, kmax, n_scan)
    vals = (jost_entire_array(spec, 1j * grid) * 1j * grid * np.exp(grid * spec.a)).real
    roots = []
    for i in range(n_scan - 1):
        if vals[i] == 0 or vals[i] * vals[i + 1] < 0:
            kap = grid[i] if vals[i] == 0 else brentq(g, grid[i], grid[i + 1], xtol=1e-14)
            root = newton_refine(spec, 1j * kap, tol)
            roots.append(root)
    roots.sort(key=lambda r: r.energy)
    return roots


def find_resonances(
    spec: PotentialSpec, n_wanted: int = 5, box: SearchBox | None = None, tol: float = DEFAULT_TOL
) -> list[SpectralRoot]:
    """The n_wanted fourth-quadrant zeros with the smallest Re ε."""
    if n_wanted < 1:
        raise ValueError("n_wanted must be >= 1")
    box = box or default_box(n_wanted)
    found: list[SpectralRoot] = []
    for k0 in grid_scan(spec, box):
        try:
            root = newton_refine(spec, k0, tol)
        except NoConvergenceError:
            continue
        except ClassificationError as exc:
            warnings.warn(str(exc), RuntimeWarning, stacklevel=2)
            continue
        if root.kind != "resonance":
            continue
        if any(abs(root.k - r.k) < MERGE_TOL for r in found):
            continue
        found.append(root)
    found.sort(key=lambda r: (r.epsilon.real, r.epsilon.imag))
    if len(found) < n_wanted:
        warnings.warn(
            f"found {len(found)} resonances, wanted {n_wanted}",
            InsufficientRootsWarning,
            stacklevel=2,
        )
    return found[:n_wanted]
