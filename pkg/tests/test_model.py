import math

import numpy as np
import pytest

from conftest import random_params
from xyzmin.errors import StateInvalid
from xyzmin.model import (
    DensityMatrix,
    ModelParams,
    build_hamiltonian,
    closed_form_spectrum,
    thermal_elements,
    thermal_state,
)
from xyzmin.oracle import thermal_state_exp

COSH1 = math.cosh(1.0)
SINH1 = math.sinh(1.0)


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(beta=0.0)
    with pytest.raises(ValueError):
        ModelParams(J=float("nan"))
    assert ModelParams().beta == 1.0


def test_hamiltonian_all_zero():
    assert np.allclose(build_hamiltonian(ModelParams()), np.zeros((4, 4)))


def test_hamiltonian_direct_read():
    h = build_hamiltonian(ModelParams(J=1.0))
    assert h[1, 2] == 1.0 and h[2, 1] == 1.0
    assert h[0, 3] == 0.0 and h[3, 0] == 0.0
    h = build_hamiltonian(ModelParams(J=2.0, gamma=1.0))
    assert h[0, 3] == 2.0 and h[3, 0] == 2.0


def test_hamiltonian_diagonal():
    p = ModelParams(J=0.3, Jz=1.2, gamma=0.4, B=0.7, lam=0.2)
    h = build_hamiltonian(p)
    assert np.allclose(
        np.diag(h).real,
        [p.Jz / 2 + p.B, -p.Jz / 2 + p.lam, -p.Jz / 2 - p.lam, p.Jz / 2 - p.B],
    )


def test_spectrum_xx_example():
    sd = closed_form_spectrum(ModelParams(J=1.0))
    assert sd.eta == 0.0 and sd.delta == 1.0
    assert sd.energies == (0.0, 0.0, 1.0, -1.0)


def test_xxx_eigenvectors_are_bell_like():
    sd = closed_form_spectrum(ModelParams(J=1.0, Jz=1.0))
    psi3 = sd.eigenvectors[:, 2]
    psi4 = sd.eigenvectors[:, 3]
    bell_plus = np.array([0, 1, 1, 0]) / np.sqrt(2)
    bell_minus = np.array([0, 1, -1, 0]) / np.sqrt(2)
    assert min(np.linalg.norm(psi3 - bell_plus), np.linalg.norm(psi3 + bell_plus)) < 1e-12
    assert min(np.linalg.norm(psi4 - bell_minus), np.linalg.norm(psi4 + bell_minus)) < 1e-12


def test_spectrum_matches_numeric(rng):
    for _ in range(200):
        p = random_params(rng)
        sd = closed_form_spectrum(p)
        h = build_hamiltonian(p)
        assert np.allclose(np.sort(sd.energies), np.linalg.eigvalsh(h), atol=1e-10)
        for k in range(4):
            v = sd.eigenvectors[:, k]
            assert np.linalg.norm(h @ v - sd.energies[k] * v) < 1e-9
        gram = sd.eigenvectors.conj().T @ sd.eigenvectors
        assert np.max(np.abs(gram - np.eye(4))) < 1e-12


def test_thermal_elements_xx_example():
    t = thermal_elements(ModelParams(J=1.0))
    assert t.mu_plus == pytest.approx(1.0, abs=1e-14)
    assert t.mu_minus == pytest.approx(1.0, abs=1e-14)
    assert t.kappa == 0.0
    assert t.nu_plus == pytest.approx(COSH1, abs=1e-14)
    assert t.nu_minus == pytest.approx(COSH1, abs=1e-14)
    assert t.epsilon == pytest.approx(-SINH1, abs=1e-14)
    assert t.Z == pytest.approx(2 * (1 + COSH1), abs=1e-13)


def test_thermal_elements_xxx_example():
    t = thermal_elements(ModelParams(J=1.0, Jz=1.0))
    e = math.exp(0.5)
    assert t.mu_plus == pytest.approx(1 / e, abs=1e-14)
    assert t.nu_plus == pytest.approx(e * COSH1, abs=1e-13)
    assert t.epsilon == pytest.approx(-e * SINH1, abs=1e-13)
    assert t.Z == pytest.approx(2 * (1 / e + e * COSH1), abs=1e-13)


def test_thermal_elements_diagonal_only():
    for jz in (2.0, -2.0):
        t = thermal_elements(ModelParams(Jz=jz))
        assert t.kappa == 0.0 and t.epsilon == 0.0
        total = t.mu_plus + t.mu_minus + t.nu_plus + t.nu_minus
        assert total / t.Z == pytest.approx(1.0, rel=1e-14)


def test_thermal_state_xx_center_block():
    p = ModelParams(J=1.0)
    m = thermal_state(p).matrix
    z = 2 * (1 + COSH1)
    assert m[1, 1].real == pytest.approx(COSH1 / z, abs=1e-14)
    assert m[1, 2].real == pytest.approx(-SINH1 / z, abs=1e-14)


def test_thermal_state_ground_state_limit():
    # deep in the Jz > 0 phase the singlet/triplet pair -Jz/2 +- delta wins
    p = ModelParams(Jz=5.0, beta=50.0)
    m = thermal_state(p).matrix
    assert m[1, 1].real == pytest.approx(0.5, abs=1e-6)
    assert m[2, 2].real == pytest.approx(0.5, abs=1e-6)


def test_thermal_state_matches_exp_oracle(rng):
    for _ in range(300):
        p = random_params(rng)
        dev = np.max(np.abs(thermal_state(p).matrix - thermal_state_exp(p).matrix))
        assert dev < 1e-10


def test_partition_function_matches_trace(rng):
    for _ in range(100):
        p = random_params(rng)
        z_trace = float(np.sum(np.exp(-p.beta * np.linalg.eigvalsh(build_hamiltonian(p)))))
        assert thermal_elements(p).Z == pytest.approx(z_trace, rel=1e-12)


def test_trace_and_positivity(rng):
    for _ in range(50):
        m = thermal_state(random_params(rng)).matrix
        assert abs(np.trace(m).real - 1.0) < 1e-12
        assert np.min(np.linalg.eigvalsh(m)) > -1e-10


def test_density_matrix_validation():
    with pytest.raises(StateInvalid):
        DensityMatrix(np.diag([1.5, -0.5, 0.0, 0.0]).astype(complex))
    with pytest.raises(StateInvalid):
        DensityMatrix(np.diag([0.5, 0.25, 0.2, 0.2]).astype(complex))
    bad = np.eye(4, dtype=complex) / 4
    bad[0, 1] = 0.1
    with pytest.raises(StateInvalid):
        DensityMatrix(bad)
