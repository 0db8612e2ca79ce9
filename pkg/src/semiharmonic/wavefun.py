"""Piecewise wave functions on a sample grid.

Region I (x <= -a) carries the regular solution φ, region II the flat-bottom
solution, region III the free waves (i/2)[F e^{-ikx} - F* e^{ikx}].  For bound
and Siegert states F = 0 and only -(i/2)F* e^{ikx} survives.  Delta kinds have
no region II; the slope jumps by ±ψ(0) at the origin.

Each table keeps the analytic region pieces, so matching is checked with exact
one-sided values instead of finite differences across the kink.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .background import phi_scaled, phi_scaled_array
from .errors import GridTooCoarseError
from .jost import PotentialSpec, potential, wavenumber_q
from .rootfinder import SpectralRoot

__all__ = [
    "WaveFunctionTable",
    "default_grid",
    "assemble_bound",
    "assemble_siegert",
    "assemble_scattering",
    "continuity_check",
    "schrodinger_residual",
    "matching_points",
]

Piece = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True, eq=False)
class WaveFunctionTable:
    x: np.ndarray
    psi: np.ndarray
    region: np.ndarray
    k: complex
    kind: str  # "bound" | "siegert" | "scattering"
    continuity_defect: float
    dpsi: np.ndarray
    spec: PotentialSpec
    pieces: dict[str, Piece] = field(repr=False)

    @property
    def energy(self) -> complex:
        return self.k * self.k


def default_grid(spec: PotentialSpec, points: int = 2001) -> np.ndarray:
    half = max(6.0, spec.a + 4.0)
    return np.linspace(-half, half, points)


def _regions(spec: PotentialSpec, x: np.ndarray) -> np.ndarray:
    a = spec.a
    if spec.is_delta:
        return np.where(x < 0, "I", "III")
    return np.where(x <= -a, "I", np.where(x < a, "II", "III"))


def _build_pieces(spec: PotentialSpec, k: complex, siegert_only: bool) -> dict[str, Piece]:
    """Region pieces for ψ normalised to ψ(-a) = 1 (ψ(0) = 1 for delta kinds).

    Where φ vanishes at that point (e.g. delta kinds at k² = 3) ψ' = 1 there instead.
    """
    k = complex(k)
    a = spec.a
    x0 = 0.0 if spec.is_delta else -a
    p0, d0 = phi_scaled(k, x0)
    norm = d0 if abs(p0) <= 1e-13 * abs(d0) else p0
    p_start, d_start = p0 / norm, d0 / norm

    def region_one(x):
        v, d = phi_scaled_array(k, x)
        return v / norm, d / norm

    pieces: dict[str, Piece] = {"I": region_one}
    if spec.is_delta:
        sign = 1.0 if spec.is_barrier else -1.0
        p1, d1 = p_start, d_start + sign * p_start
    else:
        q = wavenumber_q(spec, k)

        def region_two(x):
            t = np.asarray(x, dtype=float) + a
            if abs(q) < 1e-12:
                return p_start + d_start * t + 0j, d_start + 0.0 * t + 0j
            c, s = np.cos(q * t), np.sin(q * t)
            return p_start * c + d_start * s / q, -q * s * p_start + d_start * c

        pieces["II"] = region_two
        p1, d1 = (v[0] for v in region_two(np.array([a])))
    F = cmath.exp(1j * k * a) * (d1 - 1j * k * p1) / k
    F_star = cmath.exp(-1j * k * a) * (d1 + 1j * k * p1) / k

    def region_three(x):
        x = np.asarray(x, dtype=float)
        out = -0.5j * F_star * np.exp(1j * k * x)
        dout = 1j * k * out
        if not siegert_only:
            inc = 0.5j * F * np.exp(-1j * k * x)
            out = out + inc
            dout = dout - 1j * k * inc
        return out, dout

    pieces["III"] = region_three
    return pieces


def _sample(pieces, regions, x, scale):
    psi = np.empty(x.shape, dtype=complex)
    dpsi = np.empty(x.shape, dtype=complex)
    for tag, fn in pieces.items():
        m = regions == tag
        if np.any(m):
            psi[m], dpsi[m] = fn(x[m])
    return psi * scale, dpsi * scale


def _scaled_pieces(pieces, scale):
    def wrap(fn):
        return lambda x: tuple(v * scale for v in fn(x))

    return {tag: wrap(fn) for tag, fn in pieces.items()}


def matching_points(spec: PotentialSpec) -> list[float]:
    return [0.0] if spec.is_delta else [-spec.a, spec.a]


def _assemble(spec, k, x_grid, kind, siegert_only, normalise):
    x = np.asarray(default_grid(spec) if x_grid is None else x_grid, dtype=float)
    if x.ndim != 1 or np.any(np.diff(x) <= 0):
        raise ValueError("x_grid must be strictly increasing")
    pieces = _build_pieces(spec, k, siegert_only)
    regions = _regions(spec, x)
    psi, dpsi = _sample(pieces, regions, x, 1.0)
    scale = normalise(pieces, psi)
    pieces = _scaled_pieces(pieces, scale)
    psi, dpsi = psi * scale, dpsi * scale
    table = WaveFunctionTable(x, psi, regions, complex(k), kind, 0.0, dpsi, spec, pieces)
    try:
        defect = continuity_check(table, spec)
    except GridTooCoarseError:
        defect = math.nan
    return WaveFunctionTable(x, psi, regions, complex(k), kind, defect, dpsi, spec, pieces)


def assemble_bound(spec: PotentialSpec, root: SpectralRoot, x_grid=None) -> WaveFunctionTable:
    """Bound state, real-valued and scaled to unit maximum amplitude."""
    if root.kind != "bound":
        raise ValueError("assemble_bound needs a bound root")
    k = 1j * abs(root.k.imag)

    def normalise(pieces, psi):
        peak = psi[np.argmax(np.abs(psi))]
        return 1.0 / peak

    t = _assemble(spec, k, x_grid, "bound", True, normalise)
    # remove the rounding-level imaginary part
    pieces = {tag: (lambda fn: lambda x: tuple(np.real(v) + 0j for v in fn(x)))(fn) for tag, fn in t.pieces.items()}
    return WaveFunctionTable(
        t.x, t.psi.real + 0j, t.region, t.k, t.kind, t.continuity_defect, t.dpsi.real + 0j, spec, pieces
    )


def assemble_siegert(spec: PotentialSpec, root: SpectralRoot, x_grid=None) -> WaveFunctionTable:
    """Purely outgoing resonance state scaled so that ψ(a) = 1."""
    if root.kind != "resonance":
        raise ValueError("assemble_siegert needs a resonance root")

    def normalise(pieces, psi):
        x_a = np.array([spec.a])
        tag = "III"
        return 1.0 / pieces[tag](x_a)[0][0]

    return _assemble(spec, root.k, x_grid, "siegert", True, normalise)


def assemble_scattering(spec: PotentialSpec, E: float, x_grid=None) -> WaveFunctionTable:
    """Real scattering state with ψ(-a) = 1 (ψ'(-a) = 1 at a node); region III ∝ sin(kx + δ)."""
    if not E > 0:
        raise ValueError("E must be positive")
    k = math.sqrt(E)
    t = _assemble(spec, k, x_grid, "scattering", False, lambda pieces, psi: 1.0)
    pieces = {tag: (lambda fn: lambda x: tuple(np.real(v) + 0j for v in fn(x)))(fn) for tag, fn in t.pieces.items()}
    return WaveFunctionTable(
        t.x, t.psi.real + 0j, t.region, t.k, t.kind, t.continuity_defect, t.dpsi.real + 0j, spec, pieces
    )


def continuity_check(table: WaveFunctionTable, spec: PotentialSpec) -> float:
    """Largest relative matching defect at the region boundaries.

    One-sided values come from the analytic pieces; the stored samples next to
    each boundary must also agree with the piece they belong to, so a corrupted
    table is caught.  For delta kinds the slope jump at 0 must equal ∓ψ(0)
    (well: -ψ(0), barrier: +ψ(0)).
    """
    x = table.x
    worst = 0.0
    pieces = table.pieces
    points = matching_points(spec)
    tags = [("I", "III")] if spec.is_delta else [("I", "II"), ("II", "III")]
    for xm, (left, right) in zip(points, tags):
        closed_left = left == "I" and not spec.is_delta
        below = np.flatnonzero(x <= xm) if closed_left else np.flatnonzero(x < xm)
        above = np.flatnonzero(x > xm) if closed_left else np.flatnonzero(x >= xm)
        if below.size == 0 or above.size == 0:
            raise GridTooCoarseError(f"grid does not straddle the matching point {xm}")
        xa = np.array([xm])
        pl, dl = (v[0] for v in pieces[left](xa))
        pr, dr = (v[0] for v in pieces[right](xa))
        jump = 0.0
        if spec.is_delta:
            sign = 1.0 if spec.is_barrier else -1.0
            jump = sign * pl
        scale = max(abs(pl) + abs(dl), 1e-300)
        worst = max(worst, (abs(pl - pr) + abs(dr - dl - jump)) / scale)
        for idx, tag in ((below[-1], left), (above[0], right)):
            ref = pieces[tag](x[idx : idx + 1])[0][0]
            local = max(abs(ref), abs(table.psi[idx]), 1e-300)
            worst = max(worst, abs(table.psi[idx] - ref) / local)
    return float(worst)


def schrodinger_residual(table: WaveFunctionTable, spec: PotentialSpec) -> float:
    """max |-ψ'' + (V - k²)ψ| / max |ψ| with central differences.

    Points whose stencil touches a matching point are skipped.
    """
    x, psi = table.x, table.psi
    h_left = x[1:-1] - x[:-2]
    h_right = x[2:] - x[1:-1]
    d2 = 2.0 * (
        psi[2:] / (h_right * (h_left + h_right))
        - psi[1:-1] / (h_left * h_right)
        + psi[:-2] / (h_left * (h_left + h_right))
    )
    xi = x[1:-1]
    res = -d2 + (potential(spec, xi) - table.energy) * psi[1:-1]
    keep = np.ones(xi.shape, dtype=bool)
    for xm in matching_points(spec):
        keep &= ~((x[:-2] <= xm) & (x[2:] >= xm))
    return float(np.max(np.abs(res[keep])) / np.max(np.abs(psi)))
