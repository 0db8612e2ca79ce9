import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import mp_jost, shoot_phase
from semiharmonic.errors import JostPoleError, TanPoleError
from semiharmonic.jost import (
    KINDS,
    PotentialSpec,
    free_particle_bound_residual,
    free_particle_bound_states,
    jost_delta_eval,
    jost_entire,
    jost_entire_array,
    jost_eval,
    jost_normalized,
    phase_shift,
    potential,
    reflection_amplitude,
    transcendental_residual,
    wavenumber_q,
)
from semiharmonic.rootfinder import find_bound_states, find_resonances
from semiharmonic.specfun import gamma_complex
from semiharmonic.timedelay import w_ratio
from tables import TABLE1_A, TABLE1_FP

K_DELTA = 0.2823302j

SPECS = [
    PotentialSpec.unit_area(2.0),
    PotentialSpec.unit_area(0.5, barrier=True),
    PotentialSpec(1.2, 3.0, "well"),
    PotentialSpec(0.7, 2.0, "barrier"),
    PotentialSpec.unit_area(0.0),
    PotentialSpec.unit_area(0.0, barrier=True),
]


def fourth_quadrant_k(eps):
    k = cmath.sqrt(eps)
    return k if k.real > 0 else -k


def delta_normalised(kind, k):
    """Delta-limit F rescaled to the ψ(0) = 1 convention of jost_eval."""
    alpha = (1 - k * k) / 4
    return jost_delta_eval(kind, k).F / (k * gamma_complex(alpha))


class TestPotentialSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            PotentialSpec(1.0, 1.0, "step")
        with pytest.raises(ValueError):
            PotentialSpec(0.5, 1.0, "delta_well")
        with pytest.raises(ValueError):
            PotentialSpec(0.0, 1.0, "well")
        with pytest.raises(ValueError):
            PotentialSpec(1.0, -1.0, "barrier")

    @pytest.mark.parametrize("a", [5e-4, 0.5, 2.0])
    def test_unit_area(self, a):
        for barrier in (False, True):
            spec = PotentialSpec.unit_area(a, barrier)
            assert spec.area == pytest.approx(1.0)
            assert spec.is_barrier == barrier

    def test_unit_area_delta(self):
        assert PotentialSpec.unit_area(0.0).kind == "delta_well"
        assert PotentialSpec.unit_area(0.0, barrier=True).kind == "delta_barrier"

    def test_potential_profile(self):
        spec = PotentialSpec(1.0, 2.0, "barrier")
        x = np.array([-3.0, -1.0, 0.0, 0.99, 1.0, 4.0])
        assert np.allclose(potential(spec, x), [9.0, 1.0, 2.0, 2.0, 0.0, 0.0])


class TestWavenumber:
    def test_examples(self):
        assert wavenumber_q(PotentialSpec(1.0, 1.0, "well"), 0) == 1
        q = wavenumber_q(PotentialSpec(1.0, 1.0, "barrier"), math.sqrt(0.5))
        assert abs(q - 1j * math.sqrt(0.5)) < 1e-15
        q = wavenumber_q(PotentialSpec(1.0, 1.0, "barrier"), math.sqrt(2.0))
        assert abs(q - 1) < 1e-15

    def test_barrier_branch_point_is_continuous(self):
        spec = PotentialSpec(1.0, 1.0, "barrier")
        vals = [jost_entire(spec, 1.0 + d) for d in (-1e-9, 0.0, 1e-9)]
        assert max(abs(v - vals[1]) for v in vals) < 1e-7 * abs(vals[1])


class TestJostAgainstOracle:
    @pytest.mark.parametrize("spec", SPECS[:4], ids=lambda s: f"{s.kind}-{s.a}")
    @pytest.mark.parametrize("k", [0.8, 2.3 - 0.7j, 4.1 - 1.9j, 0.4j, 1.1 + 0.3j])
    def test_finite_kinds(self, spec, k):
        ref = mp_jost(spec, k)
        assert abs(jost_eval(spec, k).F - ref) <= 1e-11 * abs(ref)

    @pytest.mark.parametrize("kind", ["delta_well", "delta_barrier"])
    @pytest.mark.parametrize("k", [0.8, 2.3 - 0.7j, 0.4j, 4.0 - 1.0j])
    def test_delta_kinds(self, kind, k):
        ref = mp_jost(PotentialSpec(0.0, 1.0, kind), k)
        assert abs(delta_normalised(kind, k) - ref) <= 1e-11 * abs(ref)

    def test_vectorised_matches_scalar(self):
        k = np.linspace(0.2, 5, 40) - 1j * np.linspace(0, 2, 40)
        for spec in SPECS:
            ref = np.array([jost_entire(spec, v) for v in k])
            assert np.max(np.abs(jost_entire_array(spec, k) - ref) / np.abs(ref)) < 1e-8

    def test_coefficients_reproduce_region_two(self):
        spec = PotentialSpec(1.0, 2.0, "well")
        k = 1.3 - 0.2j
        jv = jost_eval(spec, k)
        # ψ(-a) = 1 and ψ'(-a) = -β
        val = jv.C2 * cmath.sin(-jv.q) + jv.D2 * cmath.cos(-jv.q)
        der = jv.q * (jv.C2 * cmath.cos(-jv.q) - jv.D2 * cmath.sin(-jv.q))
        assert abs(val - 1) < 1e-13
        assert abs(der + jv.beta_phi_at_minus_a) < 1e-13

    def test_k_zero_rejected(self):
        with pytest.raises(ValueError):
            jost_eval(SPECS[0], 0)
        with pytest.raises(ValueError):
            jost_eval(SPECS[4], 1.0)


class TestZeros:
    def test_table1_bound_state(self):
        spec = PotentialSpec.unit_area(2.0)
        root = find_bound_states(spec)[0]
        assert abs(root.k.imag - 0.212773) < 1e-6
        assert abs(jost_normalized(spec, root.k)) < 1e-8

    def test_table2_resonance_is_near_zero(self):
        k = fourth_quadrant_k(1.838241 - 1.632446j)
        assert abs(jost_eval(PotentialSpec.unit_area(1.0), k).F) < 1e-5

    def test_delta_examples(self):
        assert abs(jost_delta_eval("delta_well", K_DELTA).F) < 1e-6
        assert abs(jost_delta_eval("delta_well", fourth_quadrant_k(3.792839 - 0.909196j)).F) < 1e-5
        assert abs(jost_delta_eval("delta_barrier", fourth_quadrant_k(2.076211 - 0.718123j)).F) < 1e-5

    def test_barrier_sign(self):
        # the opposite sign in front of Γ(α) is not a root at the published zero
        k = fourth_quadrant_k(2.076211 - 0.718123j)
        alpha = (1 - k * k) / 4
        other = 2 * gamma_complex(alpha + 0.5) - (1 + 1j * k) * gamma_complex(alpha)
        assert abs(other) > 0.5

    def test_delta_kind_required(self):
        with pytest.raises(ValueError):
            jost_delta_eval("well", 1.0)

    @pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.kind}-{s.a}")
    def test_zero_consistency(self, spec):
        roots = find_bound_states(spec) + find_resonances(spec, 5)
        assert roots
        for r in roots:
            assert abs(jost_normalized(spec, r.k)) < 1e-8
            assert abs(transcendental_residual(spec, r.k, cleared=True)) < 1e-8


class TestResidual:
    def test_table1_example(self):
        k = 1j * math.sqrt(0.037435)
        assert abs(transcendental_residual(PotentialSpec.unit_area(0.5), k)) < 1e-4

    def test_no_real_zeros(self):
        assert abs(transcendental_residual(PotentialSpec.unit_area(2.0), 1.0)) > 0

    def test_delta(self):
        assert abs(transcendental_residual(PotentialSpec.unit_area(0.0), K_DELTA)) < 1e-5

    def test_tan_pole(self):
        spec = PotentialSpec(1.0, 2.0, "well")
        # cos(2qa) = 0 at q = π/4 with q² = V0 + k²
        k = cmath.sqrt((math.pi / 4) ** 2 - 2.0)
        with pytest.raises(TanPoleError):
            transcendental_residual(spec, k)
        assert np.isfinite(abs(transcendental_residual(spec, k, cleared=True)))

    def test_cleared_form_is_proportional(self):
        spec = PotentialSpec(1.0, 2.0, "barrier")
        k = 2.2 - 0.4j
        q = wavenumber_q(spec, k)
        plain = transcendental_residual(spec, k)
        cleared = transcendental_residual(spec, k, cleared=True)
        assert abs(cleared - plain * cmath.cos(2 * q * spec.a)) < 1e-12 * abs(cleared)


class TestScattering:
    @pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.kind}-{s.a}")
    def test_unitarity(self, spec):
        rng = np.random.default_rng(11)
        for k in rng.uniform(1e-3, 6.0, 200):
            assert abs(abs(reflection_amplitude(spec, k)) - 1) < 1e-10

    def test_pole_of_s(self):
        spec = PotentialSpec.unit_area(2.0)
        k0 = find_resonances(spec, 1)[0].k
        assert abs(reflection_amplitude(spec, k0 + 1e-7)) > 1e6
        with pytest.raises(JostPoleError):
            reflection_amplitude(spec, k0)

    def test_s_matches_phase(self):
        spec = PotentialSpec.unit_area(0.0)
        s = reflection_amplitude(spec, 2.0)
        assert abs(s - cmath.exp(2j * phase_shift(spec, 4.0))) < 1e-10

    @settings(max_examples=50, deadline=None)
    @given(st.floats(0.01, 6), st.sampled_from(KINDS))
    def test_conjugation_symmetry(self, k, kind):
        spec = PotentialSpec(0.0 if kind.startswith("delta") else 1.3, 1.0, kind)
        if spec.is_delta:
            # Γ(α) has poles where k² = 1 + 4n
            assume(abs((k * k - 1) / 4 - round((k * k - 1) / 4)) > 1e-6)
            f_plus, f_minus = delta_normalised(kind, k), delta_normalised(kind, -k)
        else:
            f_plus, f_minus = jost_eval(spec, k).F, jost_eval(spec, -k).F
        # the 1/k factor of F flips the sign: F(-k) = -F(k)*
        assert abs(f_minus + f_plus.conjugate()) <= 1e-12 * abs(f_plus)

    def test_delta_phase_matches_w_ratio(self):
        for E in (0.3, 2.0, 5.5, 17.0):
            d = phase_shift(PotentialSpec.unit_area(0.0), E)
            assert abs(d + math.atan(w_ratio("-", E))) < 1e-10

    def test_phase_against_shooting_example(self):
        spec = PotentialSpec.unit_area(2.0)
        got = phase_shift(spec, 1.0) % math.pi
        ref = shoot_phase(spec, 1.0, h=5e-4) % math.pi
        assert min(abs(got - ref), math.pi - abs(got - ref)) < 1e-5

    def test_phase_near_resonance_varies_fast(self):
        spec = PotentialSpec.unit_area(0.0)
        lo, hi = phase_shift(spec, 3.3), phase_shift(spec, 4.3)
        far_lo, far_hi = phase_shift(spec, 1.3), phase_shift(spec, 2.3)
        step = lambda a, b: abs(((b - a + math.pi / 2) % math.pi) - math.pi / 2)
        assert step(lo, hi) > 3 * step(far_lo, far_hi)

    def test_phase_requires_positive_energy(self):
        with pytest.raises(ValueError):
            phase_shift(SPECS[0], -1.0)


class TestFreeParticle:
    @pytest.mark.parametrize("a, fp", list(zip(TABLE1_A, TABLE1_FP)))
    def test_table1_column(self, a, fp):
        V0 = 1.0 if a == 0 else 1 / (2 * a)
        energies = free_particle_bound_states(a, V0)
        assert len(energies) == 1
        assert abs(energies[0] - fp) < 1e-5

    def test_residual_examples(self):
        assert abs(free_particle_bound_residual(2.0, 0.25, 1j * math.sqrt(0.113438))) < 1e-4
        assert free_particle_bound_residual(0.0, 1.0, 0.5j) == 0
        assert abs(free_particle_bound_residual(1.0, 0.5, 1j * math.sqrt(0.153960))) < 1e-4

    def test_deep_well_has_both_parities(self):
        energies = free_particle_bound_states(2.0, 5.0)
        even = free_particle_bound_states(2.0, 5.0, "even")
        odd = free_particle_bound_states(2.0, 5.0, "odd")
        assert len(energies) == len(even) + len(odd) == 3
        with pytest.raises(ValueError):
            free_particle_bound_residual(1.0, 1.0, 0.5j, "both")
