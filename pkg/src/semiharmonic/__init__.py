"""Spectra, resonances and time delays of a box potential on a semi-harmonic background."""

from .jost import PotentialSpec, jost_delta_eval, jost_eval, phase_shift, reflection_amplitude
from .rootfinder import SearchBox, SpectralRoot, find_bound_states, find_resonances
from .timedelay import dwell_time_curve, wigner_delta_limit

__all__ = [
    "PotentialSpec",
    "SearchBox",
    "SpectralRoot",
    "dwell_time_curve",
    "find_bound_states",
    "find_resonances",
    "jost_delta_eval",
    "jost_eval",
    "phase_shift",
    "reflection_amplitude",
    "wigner_delta_limit",
]
