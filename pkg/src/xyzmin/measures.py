"""Closed-form correlation measures for two-qubit states.

Concurrence (general and thermal), the critical coupling window where the
thermal concurrence vanishes, and the three measurement-induced nonlocality
variants: Hilbert-Schmidt (min_hs), trace distance (min_trace) and fidelity
(min_fidelity), plus their thermal-state specializations.

Where the printed thermal trace-distance formula and the general closed form
disagree (they differ by a constant factor), both are exposed:
min_trace_thermal returns the printed value, min_trace the general form that
the trace-norm oracle confirms.
"""

import math
from dataclasses import dataclass

import numpy as np

from .decomp import X_ZERO_TOL, FanoForm
from .errors import ConventionMismatch, DomainError, NotDiagonalCorrelation
from .linalg import SIGMA_Y, kron
from .model import DensityMatrix, ModelParams, ThermalElements
from .oracle import fidelity_min_spectral

_SPIN_FLIP = kron(SIGMA_Y, SIGMA_Y)
DIAG_CORR_TOL = 1e-10
CONVENTION_TOL = 1e-6


@dataclass(frozen=True)
class CriticalWindow:
    """Interval of Jz inside which the thermal concurrence vanishes.

    jc1 is -inf when the lower bound does not exist (no anisotropy channel).
    """

    jc1: float
    jc2: float

    @property
    def jc1_unbounded(self):
        return math.isinf(self.jc1)

    def contains(self, jz):
        return self.jc1 <= jz <= self.jc2


@dataclass(frozen=True)
class MeasureReport:
    concurrence: float
    min_hs: float
    min_trace: float
    min_trace_paper: float
    min_fidelity: float


def concurrence(rho: DensityMatrix) -> float:
    """Wootters concurrence from the spin-flipped spectrum.

    The square roots of the eigenvalues of rho rho_tilde equal the singular
    values of (sqrt rho)* S (sqrt rho) with S the double spin flip; computing
    them as singular values keeps the small ones accurate to machine epsilon
    in absolute terms, which a direct nonsymmetric eigensolve does not.
    """
    m = rho.matrix
    w, v = np.linalg.eigh(m)
    w[w < 0] = 0.0
    root = (v * np.sqrt(w)) @ v.conj().T
    sv = np.linalg.svd(np.conj(root) @ _SPIN_FLIP @ root, compute_uv=False)
    return float(max(0.0, sv[0] - sv[1] - sv[2] - sv[3]))


def concurrence_thermal(t: ThermalElements) -> float:
    """Concurrence of the Gibbs X-state from its closed-form elements."""
    a = (abs(t.kappa) - math.sqrt(t.nu_plus * t.nu_minus)) / t.Z
    b = (abs(t.epsilon) - math.sqrt(t.mu_plus * t.mu_minus)) / t.Z
    return 2.0 * max(0.0, a, b)


def critical_window(p: ModelParams) -> CriticalWindow:
    """Bounds [jc1, jc2] of the zero-concurrence window in Jz.

    Derived from the vanishing conditions of the two thermal concurrence
    branches; reduces to the standard printed expressions at lam = 0,
    beta = 1.  Raises DomainError at J = 0 where jc2 is undefined.
    """
    if p.J == 0.0:
        raise DomainError("jc2 is undefined at J = 0 (degenerate model)")
    b = p.beta
    g = abs(p.gamma * p.J)
    eta = math.hypot(p.B, p.gamma * p.J)
    delta = math.hypot(p.lam, p.J)
    # sqrt(mu+ mu-) and sqrt(nu+ nu-) without the exp(-+ beta Jz/2) factors
    if eta > 0:
        mu_geo = math.sqrt(max(
            0.0, math.cosh(b * eta) ** 2 - (p.B / eta) ** 2 * math.sinh(b * eta) ** 2
        ))
    else:
        mu_geo = 1.0
    nu_geo = math.sqrt(max(
        0.0,
        math.cosh(b * delta) ** 2 - (p.lam / delta) ** 2 * math.sinh(b * delta) ** 2,
    ))
    kappa_mag = (g / eta) * math.sinh(b * eta) if eta > 0 else 0.0
    eps_mag = (abs(p.J) / delta) * math.sinh(b * delta)
    jc1 = math.log(kappa_mag / nu_geo) / b if kappa_mag > 0 else -math.inf
    jc2 = math.log(mu_geo / eps_mag) / b
    return CriticalWindow(jc1=jc1, jc2=jc2)


def min_hs(f: FanoForm) -> float:
    """Hilbert-Schmidt MIN, orthonormal-convention closed form."""
    tt = f.t @ f.t.T
    if float(np.linalg.norm(f.bloch_a)) > X_ZERO_TOL:
        xhat = f.bloch_a / np.linalg.norm(f.bloch_a)
        return float(np.trace(tt) - xhat @ tt @ xhat)
    return float(np.trace(tt) - np.min(np.linalg.eigvalsh(tt)))


def min_trace(f: FanoForm) -> float:
    """Trace MIN closed form for states with diagonal Pauli correlations.

    The norms are Euclidean; with that reading the x != 0 branch reduces to
    the known X-state value, which the trace-norm oracle confirms.
    """
    off = f.pauli_corr - np.diag(np.diag(f.pauli_corr))
    if float(np.max(np.abs(off))) > DIAG_CORR_TOL:
        raise NotDiagonalCorrelation(
            "pauli correlation matrix is not diagonal; use the measurement oracle"
        )
    c = np.diag(f.pauli_corr)
    xv = f.bloch_a
    nx = float(np.linalg.norm(xv))
    if nx <= X_ZERO_TOL:
        return float(np.max(np.abs(c)))
    # with x along a correlation eigenaxis the quartic collapses exactly to
    # the largest transverse |c|; evaluating it that way avoids the
    # cancellation in chi_- when the two transverse components nearly tie
    aligned = np.abs(xv) > (1.0 - 1e-12) * nx
    if np.any(aligned):
        k = int(np.argmax(np.abs(xv)))
        return float(np.max(np.abs(np.delete(c, k))))
    c2, x2 = c * c, xv * xv
    alpha = float(c2.sum() * x2.sum() - (c2 * x2).sum())
    beta_t = float(x2[0] * c2[1] * c2[2] + x2[1] * c2[2] * c2[0] + x2[2] * c2[0] * c2[1])
    root = 2.0 * math.sqrt(beta_t) * nx
    chi_p = max(0.0, alpha + root)
    chi_m = max(0.0, alpha - root)
    return (math.sqrt(chi_p) + math.sqrt(chi_m)) / (2.0 * nx)


def _min_fidelity_printed(f: FanoForm) -> float:
    """Printed fidelity-MIN formula, full-Gamma convention, x != 0 branch."""
    nx = float(np.linalg.norm(f.bloch_a))
    xhat = f.bloch_a / nx
    a_op = np.empty((2, 4))
    a_op[0, 0] = a_op[1, 0] = 1.0
    a_op[0, 1:] = xhat
    a_op[1, 1:] = -xhat
    a_op /= math.sqrt(2.0)
    gg = f.gamma_full @ f.gamma_full.T
    norm2 = float(np.sum(f.gamma_full ** 2))
    eps = float(np.trace(a_op @ gg @ a_op.T))
    return (norm2 - eps) / norm2


def min_fidelity(f: FanoForm) -> float:
    """Fidelity MIN.  The definition-based spectral form is normative; on the
    x != 0 branch the printed formula is evaluated as a cross-check."""
    value = fidelity_min_spectral(f)
    if float(np.linalg.norm(f.bloch_a)) > X_ZERO_TOL:
        printed = _min_fidelity_printed(f)
        if abs(printed - value) > CONVENTION_TOL:
            raise ConventionMismatch(
                f"printed fidelity formula gives {printed}, spectral form {value}"
            )
    return value


def min_hs_thermal(t: ThermalElements) -> float:
    return 2.0 * (t.kappa ** 2 + t.epsilon ** 2) / t.Z ** 2


def min_trace_thermal(t: ThermalElements) -> float:
    """Printed thermal trace-MIN value (half the oracle-confirmed one)."""
    return (abs(t.kappa) + abs(t.epsilon)) / t.Z


def min_fidelity_thermal(t: ThermalElements) -> float:
    num = 2.0 * (t.kappa ** 2 + t.epsilon ** 2)
    den = num + t.mu_minus ** 2 + t.nu_plus ** 2 + t.nu_minus ** 2 + t.mu_plus ** 2
    return num / den


def measure_report(p: ModelParams) -> MeasureReport:
    """All measures of the thermal state at the given parameters."""
    from .decomp import fano_decompose
    from .model import thermal_elements, thermal_state

    t = thermal_elements(p)
    f = fano_decompose(thermal_state(p))
    return MeasureReport(
        concurrence=concurrence_thermal(t),
        min_hs=min_hs(f),
        min_trace=min_trace(f),
        min_trace_paper=min_trace_thermal(t),
        min_fidelity=min_fidelity(f),
    )
