"""Complex Darboux partners Ṽ = V + 2β' of the semi-harmonic box.

The superpotential β = -ψ'/ψ is built from a Siegert state ψ at a resonance
ε, using the analytic region pieces.  Its derivative follows from the Riccati
equation β' = β² - (V - ε), so no numerical differentiation is involved.

On the right β = -ik exactly and Ṽ = V there.  On the left the Gaussian tail
gives β ≈ x + 2α/x, so β' → 1 and Ṽ - V → 2 rather than 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NodeError
from .jost import PotentialSpec, potential
from .rootfinder import SpectralRoot
from .wavefun import matching_points, assemble_siegert

__all__ = [
    "DarbouxTable",
    "ArgandPoint",
    "superpotential",
    "darboux_partner",
    "argand_samples",
    "riccati_defect",
    "boundary_jumps",
]

NODE_FLOOR = 1e-300


@dataclass(frozen=True, eq=False)
class DarbouxTable:
    x: np.ndarray
    V_original: np.ndarray
    V_tilde: np.ndarray
    beta: np.ndarray
    epsilon: complex
    spec: PotentialSpec


@dataclass(frozen=True)
class ArgandPoint:
    re: float
    im: float
    endpoint: str  # "" | "start" | "end"


def _check(spec: PotentialSpec, root: SpectralRoot) -> None:
    if spec.is_delta:
        raise ValueError("Darboux partners are only built for finite a")
    if root.kind != "resonance":
        raise ValueError("the superpotential is built from a resonance root")


def superpotential(spec: PotentialSpec, root: SpectralRoot, x_grid=None) -> np.ndarray:
    """β = -ψ'/ψ on the grid from the analytic Siegert-state pieces."""
    _check(spec, root)
    table = assemble_siegert(spec, root, x_grid)
    psi, dpsi = table.psi, table.dpsi
    bad = np.abs(psi) <= NODE_FLOOR
    if np.any(bad):
        raise NodeError(f"ψ vanishes on the grid at x = {table.x[bad].tolist()}")
    return -dpsi / psi


def darboux_partner(spec: PotentialSpec, root: SpectralRoot, x_grid=None) -> DarbouxTable:
    """Ṽ = V + 2β' with β' = β² - (V - ε)."""
    _check(spec, root)
    table = assemble_siegert(spec, root, x_grid)
    beta = superpotential(spec, root, table.x)
    V = potential(spec, table.x)
    dbeta = beta * beta - (V - root.epsilon)
    return DarbouxTable(table.x, V, V + 2.0 * dbeta, beta, root.epsilon, spec)


def riccati_defect(table: DarbouxTable) -> float:
    """Largest |β²-(V-ε) - (central-difference β')| over interior points.

    Stencils touching a matching point are skipped.
    """
    x, beta = table.x, table.beta
    fd = (beta[2:] - beta[:-2]) / (x[2:] - x[:-2])
    analytic = beta[1:-1] ** 2 - (table.V_original[1:-1] - table.epsilon)
    keep = np.ones(fd.shape, dtype=bool)
    for xm in matching_points(table.spec):
        keep &= ~((x[:-2] <= xm) & (x[2:] >= xm))
    return float(np.max(np.abs(fd[keep] - analytic[keep])))


def boundary_jumps(spec: PotentialSpec, root: SpectralRoot) -> list[dict[str, complex]]:
    """One-sided β, V and Ṽ - V at x = ±a from the analytic pieces."""
    _check(spec, root)
    a = spec.a
    table = assemble_siegert(spec, root, np.array([-a - 1.0, a + 1.0]))
    out = []
    mid = spec.V0 if spec.is_barrier else -spec.V0
    for xm, (left, right), (v_left, v_right) in (
        (-a, ("I", "II"), (a * a, mid)),
        (a, ("II", "III"), (mid, 0.0)),
    ):
        xa = np.array([xm])
        pl, dl = (v[0] for v in table.pieces[left](xa))
        pr, dr = (v[0] for v in table.pieces[right](xa))
        bl, br = -dl / pl, -dr / pr
        gl = 2.0 * (bl * bl - (v_left - root.epsilon))
        gr = 2.0 * (br * br - (v_right - root.epsilon))
        out.append(
            {"x": xm, "beta_jump": br - bl, "V_jump": v_right - v_left, "offset_jump": gr - gl}
        )
    return out


def argand_samples(table: DarbouxTable) -> list[ArgandPoint]:
    """(Re Ṽ, Im Ṽ) along increasing x, first and last points flagged."""
    n = len(table.x)
    pts = []
    for i, v in enumerate(np.asarray(table.V_tilde, dtype=complex)):
        tag = "start" if i == 0 else ("end" if i == n - 1 else "")
        pts.append(ArgandPoint(float(v.real), float(v.imag), tag))
    return pts
