"""Definition-faithful computation of the measurement-induced quantities.

Nothing in this module uses the closed formulas of the measures module: every
value is obtained by explicitly applying von Neumann measurements (projector
algebra) and evaluating norms / fidelity from their definitions.  These
routines arbitrate every closed formula in the package.

The maximization runs over measurements that leave the reduced state of the
measured qubit unchanged (the defining constraint of these measures).  When
the local Bloch vector is nonzero this pins the measurement axis to it; when
it vanishes every axis is admissible and a grid search with derivative-free
refinement is used.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .decomp import X_ZERO_TOL, FanoForm
from .linalg import IDENTITY_2, PAULIS, kron
from .model import DensityMatrix, ModelParams, build_hamiltonian

DEFAULT_GRID = (181, 361)


@dataclass(frozen=True)
class MeasurementAxis:
    """Unit Bloch vector (spherical angles) defining a qubit measurement."""

    theta: float
    phi: float

    @property
    def n(self):
        st = math.sin(self.theta)
        return np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=float)
        norm = float(np.linalg.norm(v))
        if norm == 0.0:
            raise ValueError("cannot build a measurement axis from the zero vector")
        v = v / norm
        return cls(theta=math.acos(max(-1.0, min(1.0, v[2]))),
                   phi=math.atan2(v[1], v[0]) % (2 * math.pi))


@dataclass(frozen=True, eq=False)
class OracleResult:
    value: float
    argmax_axis: MeasurementAxis
    grid_resolution: tuple
    refined: bool


def _projectors(n):
    ns = n[0] * PAULIS[0] + n[1] * PAULIS[1] + n[2] * PAULIS[2]
    p_plus = (IDENTITY_2 + ns) / 2.0
    p_minus = (IDENTITY_2 - ns) / 2.0
    return p_plus, p_minus


def _apply_measurement(m, n):
    p_plus, p_minus = _projectors(n)
    kp = kron(p_plus, IDENTITY_2)
    km = kron(p_minus, IDENTITY_2)
    return kp @ m @ kp + km @ m @ km


def post_measurement_state(rho: DensityMatrix, axis: MeasurementAxis) -> DensityMatrix:
    """Measure qubit a along the axis and discard the outcome."""
    return DensityMatrix(_apply_measurement(rho.matrix, axis.n))


def fidelity_wang(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """(Tr rho sigma)^2 / (Tr rho^2 Tr sigma^2); symmetric, 1 iff rho = sigma."""
    r, s = rho.matrix, sigma.matrix
    num = np.trace(r @ s).real ** 2
    den = np.trace(r @ r).real * np.trace(s @ s).real
    return float(num / den)


def _objective(m, n, kind):
    sigma = _apply_measurement(m, n)
    if kind == "hs_sq":
        return float(np.sum(np.abs(m - sigma) ** 2))
    if kind == "trace":
        return float(np.sum(np.abs(np.linalg.eigvalsh(m - sigma))))
    if kind == "one_minus_fidelity":
        num = np.trace(m @ sigma).real ** 2
        den = np.trace(m @ m).real * np.trace(sigma @ sigma).real
        return 1.0 - float(num / den)
    raise ValueError(f"unknown objective kind {kind!r}")


def _objective_batch(m, axes, kind):
    """Vectorized _objective over an (K, 3) array of unit axes."""
    stack = np.stack([kron(s, IDENTITY_2) for s in PAULIS])
    ns = np.einsum("ki,iab->kab", axes, stack)
    kp = (np.eye(4) + ns) / 2.0
    km = (np.eye(4) - ns) / 2.0
    sigma = kp @ m @ kp + km @ m @ km
    if kind == "hs_sq":
        return np.sum(np.abs(m - sigma) ** 2, axis=(1, 2))
    if kind == "trace":
        return np.sum(np.abs(np.linalg.eigvalsh(m - sigma)), axis=1)
    if kind == "one_minus_fidelity":
        num = np.einsum("ab,kba->k", m, sigma).real ** 2
        den = np.trace(m @ m).real * np.einsum("kab,kba->k", sigma, sigma).real
        return 1.0 - num / den
    raise ValueError(f"unknown objective kind {kind!r}")


def _bloch_a(m):
    return np.array([np.trace(m @ kron(s, IDENTITY_2)).real for s in PAULIS])


def max_over_measurements(rho: DensityMatrix, kind: str,
                          grid=DEFAULT_GRID) -> OracleResult:
    """Maximal disturbance of rho over admissible measurements on qubit a.

    kind selects the objective: squared Hilbert-Schmidt norm ("hs_sq"), trace
    norm ("trace"), or one minus the Wang fidelity ("one_minus_fidelity").
    """
    m = rho.matrix
    a = _bloch_a(m)
    if np.linalg.norm(a) > X_ZERO_TOL:
        # only the axis parallel to the local Bloch vector leaves the reduced
        # state invariant: no optimization freedom
        axis = MeasurementAxis.from_vector(a)
        return OracleResult(value=_objective(m, axis.n, kind),
                            argmax_axis=axis, grid_resolution=(1, 1), refined=False)

    # antipodal axes define the same measurement: a hemisphere suffices, with
    # both the pole (z-axis) and the equator sampled exactly
    n_theta = grid[0] // 2 + 1
    n_phi = grid[1]
    thetas = np.linspace(0.0, math.pi / 2, n_theta)
    phis = np.linspace(0.0, 2 * math.pi, n_phi, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    tt, pp = tt.ravel(), pp.ravel()
    axes = np.stack([np.sin(tt) * np.cos(pp), np.sin(tt) * np.sin(pp),
                     np.cos(tt)], axis=1)
    vals = _objective_batch(m, axes, kind)
    k = int(np.argmax(vals))
    best_val, best_tp = float(vals[k]), (float(tt[k]), float(pp[k]))

    def neg(tp):
        th, ph = tp
        n = np.array([math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph),
                      math.cos(th)])
        return -_objective(m, n, kind)

    res = minimize(neg, np.array(best_tp), method="Nelder-Mead",
                   options={"xatol": 1e-9, "fatol": 1e-14, "maxiter": 600})
    if -res.fun > best_val:
        best_val, best_tp = -res.fun, tuple(res.x)
    axis = MeasurementAxis(theta=float(best_tp[0]), phi=float(best_tp[1]) % (2 * math.pi))
    return OracleResult(value=float(best_val), argmax_axis=axis,
                        grid_resolution=(n_theta, n_phi), refined=True)


def fidelity_min_spectral(f: FanoForm) -> float:
    """1 - min_measurement F(rho, measured rho), reduced to spectral data.

    With W = a a^t + C C^t (Pauli convention) the minimum fidelity is
    (1 + |b|^2 + q) / (1 + |a|^2 + |b|^2 + |C|^2) where q = a^t W a / |a|^2
    for a != 0 (pinned axis) and the smallest eigenvalue of C C^t otherwise.
    """
    a, b, c = f.bloch_a, f.bloch_b, f.pauli_corr
    na2 = float(a @ a)
    den = 1.0 + na2 + float(b @ b) + float(np.sum(c * c))
    cct = c @ c.T
    if math.sqrt(na2) > X_ZERO_TOL:
        ahat = a / math.sqrt(na2)
        q = na2 + float(ahat @ cct @ ahat)
    else:
        q = float(np.min(np.linalg.eigvalsh(cct)))
    return 1.0 - (1.0 + float(b @ b) + q) / den


def thermal_state_exp(p: ModelParams) -> DensityMatrix:
    """Gibbs state by numeric eigendecomposition of the Hamiltonian."""
    h = build_hamiltonian(p)
    w, v = np.linalg.eigh(h)
    weights = np.exp(-p.beta * (w - np.min(w)))  # shift avoids overflow
    m = (v * weights) @ v.conj().T
    return DensityMatrix(m / np.trace(m).real)
