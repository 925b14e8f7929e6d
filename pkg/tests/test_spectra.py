import cmath
import math

import pytest

from ptcoxeter.special import UnsupportedEvaluationError, hyp1f1_coefficients
from ptcoxeter.spectra import (
    PROFILES,
    BranchCutError,
    WaveFunctionSpec,
    angular_wavefunction,
    coupling_from_kappa,
    degeneracy_pairs,
    degeneracy_pairs_bruteforce,
    degeneracy_rhs,
    energy_levels,
    kappa,
    kappa_pair,
    ode_residual,
    p4_lambda,
    radial_energies,
    radial_wavefunction,
)


def test_kappa_values():
    assert kappa(2.0, "+") == 1.0 and kappa(2.0, "-") == -0.5
    assert kappa(0.0, "+") == 0.5 and kappa(0.0, "-") == 0.0
    assert kappa(0.75, "+") == 0.75 and kappa(0.75, "-") == -0.25
    for g in (0.0, 0.3, 2.0, 7.5):
        for b in "+-":
            assert coupling_from_kappa(kappa(g, b)) == pytest.approx(g, abs=1e-12)
    with pytest.raises(ValueError):
        kappa(-1.0)
    with pytest.raises(ValueError):
        kappa(1.0, "x")
    assert kappa_pair(2.0, 0.0, "+-").kl == 0.0


def test_ground_energies():
    levels = energy_levels("phi-shift", 1.0, 2.0, 2.0, 0, 0)
    got = {lv.branch: lv.value for lv in levels}
    assert got["++"] == 26.0
    assert got["--"] == -10.0
    assert set(got) == {"++", "+-", "-+", "--"}


def test_undeformed_levels_subset_of_phi_shift():
    und = energy_levels("undeformed", 1.0, 2.0, 0.75, 4, 4)
    phi = energy_levels("phi-shift", 1.0, 2.0, 0.75, 4, 4)
    plus = [(lv.ell, lv.n, lv.value) for lv in phi if lv.branch == "++"]
    assert [(lv.ell, lv.n, lv.value) for lv in und] == plus


def test_r_shift_has_both_radial_signs():
    levels = energy_levels("r-shift", 1.0, 2.0, 2.0, 1, 0)
    by = {(lv.branch, lv.n): lv.value for lv in levels}
    assert by[("r+", 0)] == 26.0
    assert by[("r-", 0)] == 2.0 * (1 - 12)
    assert radial_energies(1.0, 12.0, 1) == [(0, 26.0, -22.0), (1, 30.0, -18.0)]


@pytest.mark.parametrize("profile", sorted(PROFILES))
def test_energies_are_real_floats(profile):
    for lv in energy_levels(profile, 1.5, 0.4, 1.1, 3, 3):
        assert type(lv.value) is float


def test_levels_sorted_and_omega_sign():
    levels = energy_levels("phi-shift", -1.0, 2.0, 2.0, 2, 2)
    keys = [(lv.branch, lv.ell, lv.n) for lv in levels]
    assert keys == sorted(keys)
    with pytest.raises(ValueError):
        energy_levels("undeformed", 0.0, 1.0, 1.0, 1, 1)
    with pytest.raises(ValueError):
        energy_levels("nonsense", 1.0, 1.0, 1.0, 1, 1)


def test_p1_and_p4_termination():
    spec = WaveFunctionSpec.from_quantum_numbers(1.0, 4, 3, 2.0, 0.75)
    assert len(hyp1f1_coefficients(-spec.n, 1 + spec.lam)) == spec.n + 1
    ksl = spec.kappa_s + spec.kappa_l
    assert ksl - spec.lam / 6 == -spec.ell
    assert p4_lambda(1.0, 0.75, 3) == 6 * (1.75 + 3)


def test_radial_ground_state_exact():
    spec = WaveFunctionSpec.from_quantum_numbers(1.3, 0, 1, 2.0, 2.0)
    for r in (0.5, 1.0, 2.2):
        assert radial_wavefunction(spec, r) == pytest.approx(
            r ** spec.lam * math.exp(-1.3 * r * r / 2), rel=1e-13)


def test_radial_forms_agree():
    for n in range(5):
        spec = WaveFunctionSpec(1.0, n, 0, 0.5, 0.5, 6.0)
        c = math.factorial(n) * math.comb(n + 6, n)
        for r in (0.4, 1.1, 1.9 + 0.2j):
            k = radial_wavefunction(spec, r)
            assert radial_wavefunction(spec, r, "kummer-series") == pytest.approx(k, rel=1e-12)
            assert radial_wavefunction(spec, r, "laguerre") == pytest.approx(c * k, rel=1e-12)
    with pytest.raises(ValueError):
        radial_wavefunction(spec, 1.0, "bogus")


def test_radial_parity_integer_lambda():
    spec = WaveFunctionSpec(1.0, 2, 0, 0.0, 0.0, 3.0)
    for r in (0.7, 1.4 + 0.3j):
        assert radial_wavefunction(spec, r) == pytest.approx(
            (-1) ** 3 * radial_wavefunction(spec, -r), rel=1e-13)


def test_anyonic_relation():
    for n, n2, lam in ((0, 2, 2), (1, 3, 2)):
        plus = WaveFunctionSpec(1.0, n, 0, 0.0, 0.0, lam)
        minus = WaveFunctionSpec(1.0, n2, 0, 0.0, 0.0, -lam)
        for z in (0.8 + 0.2j, 1.7 - 0.1j, 2.5 + 0.4j):
            assert radial_wavefunction(plus, z, "laguerre") == pytest.approx(
                (-1) ** (n2 - n) * radial_wavefunction(minus, z, "laguerre"), rel=1e-10)


def test_branch_cut():
    spec = WaveFunctionSpec(1.0, 0, 0, 0.5, 0.5, 2.5)
    with pytest.raises(BranchCutError):
        radial_wavefunction(spec, -1.0)
    with pytest.raises(BranchCutError):
        radial_wavefunction(WaveFunctionSpec(1.0, 0, 0, 0.5, 0.5, -2.0), 0.0)


def test_angular_ground_state():
    spec = WaveFunctionSpec.from_quantum_numbers(1.0, 0, 0, 2.0, 0.75)
    phi = 0.2
    s, c = math.sin(3 * phi), math.cos(3 * phi)
    assert angular_wavefunction(spec, phi) == pytest.approx(s ** 2 * c ** 1.5, rel=1e-13)


def test_angular_forms_agree():
    for ell in range(6):
        spec = WaveFunctionSpec.from_quantum_numbers(1.0, 0, ell, 2.0, 0.75)
        scale = 1.0
        for k in range(ell):
            scale *= 2 * spec.kappa_s + 0.5 + k
        for phi in (0.1, 0.3 + 0.1j, 0.45 - 0.2j):
            a = angular_wavefunction(spec, phi, "hypergeometric")
            b = angular_wavefunction(spec, phi, "jacobi")
            assert a * scale == pytest.approx(b, rel=1e-10)


def test_jacobi_endpoint_sign():
    # P_l^(a,b)(-1) = (-1)^l (b+1)_l / l!, checked through the cos -> 0 limit
    from ptcoxeter.special import jacobi, pochhammer
    for ell in range(5):
        assert jacobi(ell, 0.3, 1.2, -1.0) == pytest.approx(
            (-1) ** ell * pochhammer(2.2, ell) / math.factorial(ell))


def test_minus_branch_needs_jacobi_form_and_is_regular_off_axis():
    spec = WaveFunctionSpec.from_quantum_numbers(1.0, 0, 1, 0.75, 0.75, branches="--")
    with pytest.raises(UnsupportedEvaluationError):
        angular_wavefunction(spec, 0.2, "hypergeometric")
    shifted = spec.with_shift(0.3j)
    for k in range(1, 40):
        v = angular_wavefunction(shifted, k * math.pi / 20, "jacobi")
        assert cmath.isfinite(v)


def test_angular_non_terminating_rejected():
    spec = WaveFunctionSpec(1.0, 0, 0, 1.0, 1.0, 13.0)
    with pytest.raises(UnsupportedEvaluationError):
        angular_wavefunction(spec, 0.2)
    with pytest.raises(UnsupportedEvaluationError):
        angular_wavefunction(spec, 0.2, "jacobi")


@pytest.mark.parametrize("eps", [0.0, 0.2])
def test_radial_ode_residual(eps):
    for n in range(4):
        spec = WaveFunctionSpec.from_quantum_numbers(1.0, n, 1, 2.0, 2.0, shift=1j * eps)
        for r in (2.5, 3.5, 4.5):
            assert ode_residual("radial", spec, r) < 1e-6


def test_angular_ode_residual_low_ell():
    for ell in range(3):
        spec = WaveFunctionSpec.from_quantum_numbers(1.0, 0, ell, 0.75, 0.75)
        for phi in (0.13, 0.29, 0.41):
            assert ode_residual("angular", spec, phi) < 1e-6


def test_wrong_energy_detected():
    spec = WaveFunctionSpec.from_quantum_numbers(1.0, 1, 0, 2.0, 2.0)
    assert ode_residual("radial", spec, 3.5, eigenvalue=spec.energy + 1) > 1e-2


def test_ode_residual_converges_at_least_quadratically():
    spec = WaveFunctionSpec.from_quantum_numbers(1.0, 0, 3, 2.0, 2.0, shift=0.2j)
    coarse = ode_residual("angular", spec, 0.29, h=0.02)
    fine = ode_residual("angular", spec, 0.29, h=0.01)
    assert coarse / fine > 4 * 0.9


def test_ode_residual_errors():
    spec = WaveFunctionSpec.from_quantum_numbers(1.0, 0, 0, 2.0, 2.0)
    with pytest.raises(ValueError):
        ode_residual("radial", spec, 1.0, h=0.0)
    with pytest.raises(ValueError):
        ode_residual("both", spec, 1.0)
    with pytest.raises(BranchCutError):
        ode_residual("angular", spec, math.pi / 6)


def test_degeneracy_examples():
    val, d = degeneracy_rhs(2.0, 2.0)
    assert d == 9 and val == 9.0
    pairs = degeneracy_pairs(2.0, 2.0, 1.0, 12, 12)
    assert ((0, 0), (9, 0)) in pairs and ((0, 0), (0, 3)) in pairs
    assert degeneracy_rhs(0.0, 0.0)[1] == 3
    assert all(n2 - n + 3 * (l2 - l) == 3 for (n, l), (n2, l2) in degeneracy_pairs(0, 0, 1, 5, 5))
    assert degeneracy_pairs(1.0, 0.0, 1.0, 10, 10) == []


@pytest.mark.parametrize("g", [(2.0, 2.0), (0.0, 0.0), (0.75, 2.0), (1.0, 0.0), (6.0, 0.0)])
def test_degeneracy_closed_form_matches_bruteforce(g):
    gs, gl = g
    assert sorted(degeneracy_pairs(gs, gl, 1.0, 12, 12)) == sorted(
        degeneracy_pairs_bruteforce(gs, gl, 1.0, 12, 12))
