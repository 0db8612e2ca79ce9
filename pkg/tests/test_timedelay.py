import math
import warnings

import numpy as np
import pytest

from semiharmonic.errors import UnwrapAmbiguityWarning
from semiharmonic.jost import PotentialSpec
from semiharmonic.rootfinder import find_resonances
from semiharmonic.timedelay import (
    TimeDelayCurve,
    adaptive_energy_grid,
    default_energy_grid,
    detect_peaks,
    dwell_time_curve,
    phase_curve,
    principal_phase,
    w_ratio,
    wigner_delta_limit,
)
from tables import TABLE2, TABLE3

DELTA_WELL = PotentialSpec.unit_area(0.0)
DELTA_BARRIER = PotentialSpec.unit_area(0.0, barrier=True)


@pytest.fixture(scope="module")
def delta_curves():
    return {"-": dwell_time_curve(DELTA_WELL), "+": dwell_time_curve(DELTA_BARRIER)}


class TestPhase:
    def test_branch_relation(self):
        E = np.arange(0.01, 30.0, 0.01)
        d = phase_curve(DELTA_WELL, E)
        n = (d + np.arctan(w_ratio("-", E))) / math.pi
        assert np.max(np.abs(n - np.round(n))) < 1e-9

    def test_continuous(self):
        d = phase_curve(DELTA_BARRIER, default_energy_grid())
        assert np.max(np.abs(np.diff(d))) < math.pi / 2

    def test_anchor_is_principal(self):
        E = np.linspace(5.0, 9.0, 400)
        assert phase_curve(DELTA_WELL, E)[0] == pytest.approx(principal_phase(DELTA_WELL, E[:1])[0])

    def test_rapid_rise_near_resonances(self):
        E = np.arange(0.01, 30.0, 0.01)
        slope = np.gradient(phase_curve(DELTA_WELL, E), E)
        for eps in TABLE2[0.0]:
            window = slope[np.abs(E - eps.real) < 0.3]
            assert 0 < np.argmax(window) < window.size - 1

    def test_finite_well_first_resonance(self):
        spec = PotentialSpec.unit_area(2.0)
        eps = TABLE2[2.0][0]
        curve = dwell_time_curve(spec, np.linspace(0.1, 1.4, 800))
        assert len(curve.peaks) >= 1
        assert abs(curve.peaks[0][0] - eps.real) < -eps.imag

    def test_coarse_grid_warns(self):
        spec = PotentialSpec(1.0, 60.0, "barrier")
        with pytest.warns(UnwrapAmbiguityWarning):
            phase_curve(spec, np.linspace(0.5, 200, 60))

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            phase_curve(DELTA_WELL, [1.0, 2.0])
        with pytest.raises(ValueError):
            phase_curve(DELTA_WELL, [1.0, 0.5, 2.0])
        with pytest.raises(ValueError):
            phase_curve(DELTA_WELL, [-1.0, 0.5, 2.0])

    def test_adaptive_grid_resolves_steps(self):
        spec = PotentialSpec(1.0, 60.0, "barrier")
        E = adaptive_energy_grid(spec, 0.5, 40.0, 0.5)
        with warnings.catch_warnings():
            warnings.simplefilter("error", UnwrapAmbiguityWarning)
            d = phase_curve(spec, E)
        assert np.max(np.abs(np.diff(d))) < math.pi / 4


class TestClosedForm:
    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_analytic_derivative_against_differences(self, sign):
        h = 1e-5
        E = np.linspace(0.3, 28.0, 300)
        W = w_ratio(sign, E)
        keep = np.abs(W) < 20
        dW = (w_ratio(sign, E + h) - w_ratio(sign, E - h)) / (2 * h)
        fd = -2 * dW / (1 + W * W)
        an = wigner_delta_limit(sign, E)
        assert np.max(np.abs(fd - an)[keep] / np.abs(an[keep])) < 1e-6

    def test_scalar_return(self):
        assert isinstance(wigner_delta_limit("-", 2.0), float)

    def test_sign_validation(self):
        with pytest.raises(ValueError):
            wigner_delta_limit("x", 1.0)
        with pytest.raises(ValueError):
            w_ratio("-", 0.0)

    def test_well_ratio_sign_below_one(self):
        # Γ(α) dominates the denominator as α → 0⁺, so W₋ stays positive
        E = np.linspace(0.01, 0.99, 99)
        assert np.all(w_ratio("-", E) > 0)

    def test_first_well_peak_is_local_max(self):
        E = 3.792839
        assert wigner_delta_limit("-", E) > wigner_delta_limit("-", E - 0.3)
        assert wigner_delta_limit("-", E) > wigner_delta_limit("-", E + 0.3)

    def test_small_energy_value_is_finite(self):
        assert math.isfinite(wigner_delta_limit("-", 0.3))

    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_asymptote_example(self, sign):
        assert abs(wigner_delta_limit(sign, 200.0) - math.pi / 2) < 0.05

    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_asymptote_envelope_shrinks(self, sign):
        E = np.linspace(100, 1000, 4001)
        dev = np.abs(wigner_delta_limit(sign, E) - math.pi / 2)
        blocks = dev[:4000].reshape(10, 400).max(axis=1)
        assert np.all(np.diff(blocks) < 0)
        assert abs(wigner_delta_limit(sign, 1e5) - math.pi / 2) < 0.01

    def test_large_energy_no_overflow(self):
        assert np.all(np.isfinite(wigner_delta_limit("+", np.array([500.0, 5e3, 5e4]))))


class TestDwellCurve:
    def test_well_matches_closed_form(self, delta_curves):
        c = delta_curves["-"]
        m = c.E >= 0.5
        assert np.max(np.abs(c.tau - c.tau_analytic)[m]) < 1e-4

    @pytest.mark.parametrize("sign", ["+", "-"])
    def test_identity_loose(self, delta_curves, sign):
        c = delta_curves[sign]
        m = c.E >= 0.5
        assert np.max(np.abs(c.tau - c.tau_analytic)[m]) < 1e-3

    def test_shapes(self, delta_curves):
        c = delta_curves["+"]
        assert isinstance(c, TimeDelayCurve)
        assert c.tau.shape == c.E.shape == c.delta_unwrapped.shape
        assert c.kind_tag == "delta_barrier"

    def test_first_peaks(self, delta_curves):
        assert abs(delta_curves["-"].peaks[0][0] - 3.792839) < 0.5
        assert abs(delta_curves["+"].peaks[0][0] - 2.076211) < 0.5

    @pytest.mark.parametrize("sign, spec, table, top", [("-", DELTA_WELL, TABLE2, 22), ("+", DELTA_BARRIER, TABLE3, 20)])
    def test_five_peaks_in_window(self, sign, spec, table, top):
        E = np.arange(0.5, top, 0.005)
        peaks = dwell_time_curve(spec, E).peaks
        assert len(peaks) == 5
        for (ep, _), eps in zip(peaks, table[0.0]):
            assert abs(ep - eps.real) < 0.5

    @pytest.mark.parametrize("spec", [DELTA_WELL, DELTA_BARRIER], ids=str)
    def test_peaks_within_half_width(self, delta_curves, spec):
        c = delta_curves["+" if spec.is_barrier else "-"]
        for (ep, _), r in zip(c.peaks, find_resonances(spec, 5)):
            assert abs(ep - r.energy) < r.width / 2

    def test_tau_anchor_independent(self):
        E = default_energy_grid()
        full = dwell_time_curve(DELTA_WELL, E)
        tail = dwell_time_curve(DELTA_WELL, E[200:])
        assert np.max(np.abs(full.tau[201:-1] - tail.tau[1:-1])) < 1e-9

    def test_finite_kind_default_grid(self):
        c = dwell_time_curve(PotentialSpec.unit_area(1.0))
        assert c.tau_analytic is None
        assert np.max(np.abs(np.diff(c.delta_unwrapped))) < math.pi / 4


class TestPeaks:
    def test_constant_curve(self):
        E = np.linspace(1, 10, 100)
        assert detect_peaks(E, np.full(100, 1.3)) == []

    def test_small_ripple_ignored(self):
        E = np.linspace(1, 10, 500)
        assert detect_peaks(E, 1.5 + 0.01 * np.sin(20 * E)) == []

    def test_sorted_peaks(self):
        E = np.linspace(0, 10, 1001)
        tau = np.exp(-((E - 7) ** 2)) + np.exp(-((E - 3) ** 2) * 4)
        got = detect_peaks(E, tau)
        assert [round(p[0], 2) for p in got] == [3.0, 7.0]

    def test_edge_maximum_excluded(self):
        E = np.linspace(0, 1, 50)
        assert detect_peaks(E, 5 - E) == []
