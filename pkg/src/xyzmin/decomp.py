"""Bloch/Fano decomposition of a two-qubit state.

Both operator conventions are kept side by side:

* Pauli convention:   rho = (1/4)(I + a.sigma x I + I x b.sigma + sum c_ij s_i x s_j)
  with a = bloch_a, b = bloch_b, C = pauli_corr.
* Orthonormal convention (X_i = sigma_i / sqrt(2)): x = a/2, y = b/2, T = C/2,
  collected with the identity sector into the 4x4 coefficient matrix
  gamma_full = [[1/2, y^t], [x, T]] which satisfies ||gamma_full||^2 = Tr rho^2.

Carrying both eliminates silent factor-of-2 mistakes between the closed
formulas stated in either convention.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import IDENTITY_2, PAULIS, kron
from .model import DensityMatrix

# Below this norm of bloch_a the local state is treated as maximally mixed and
# the measurement axis is unconstrained.  Branch discontinuities at this point
# are genuine features of the closed formulas, not something to smooth over.
X_ZERO_TOL = 1e-9

_PAULI_A = [kron(s, IDENTITY_2) for s in PAULIS]
_PAULI_B = [kron(IDENTITY_2, s) for s in PAULIS]
_PAULI_AB = [[kron(si, sj) for sj in PAULIS] for si in PAULIS]


@dataclass(frozen=True, eq=False)
class FanoForm:
    bloch_a: np.ndarray   # (3,)  Tr(rho sigma_i x I)
    bloch_b: np.ndarray   # (3,)  Tr(rho I x sigma_j)
    pauli_corr: np.ndarray  # (3, 3)  Tr(rho sigma_i x sigma_j)
    x: np.ndarray         # (3,)  orthonormal-convention local vector = bloch_a/2
    y: np.ndarray         # (3,)
    t: np.ndarray         # (3, 3) orthonormal-convention correlation = pauli_corr/2
    gamma_full: np.ndarray  # (4, 4)


def fano_decompose(rho: DensityMatrix) -> FanoForm:
    m = rho.matrix
    bloch_a = np.array([np.trace(m @ op).real for op in _PAULI_A])
    bloch_b = np.array([np.trace(m @ op).real for op in _PAULI_B])
    corr = np.array(
        [[np.trace(m @ _PAULI_AB[i][j]).real for j in range(3)] for i in range(3)]
    )
    x = bloch_a / 2.0
    y = bloch_b / 2.0
    t = corr / 2.0
    gamma = np.empty((4, 4))
    gamma[0, 0] = 0.5
    gamma[0, 1:] = y
    gamma[1:, 0] = x
    gamma[1:, 1:] = t
    return FanoForm(bloch_a=bloch_a, bloch_b=bloch_b, pauli_corr=corr,
                    x=x, y=y, t=t, gamma_full=gamma)


def reconstruct(f: FanoForm) -> DensityMatrix:
    """Inverse of fano_decompose; raises StateInvalid if the coefficients do
    not describe a positive state."""
    m = np.eye(4, dtype=complex)
    for i in range(3):
        m += f.bloch_a[i] * _PAULI_A[i]
        m += f.bloch_b[i] * _PAULI_B[i]
        for j in range(3):
            m += f.pauli_corr[i, j] * _PAULI_AB[i][j]
    return DensityMatrix(m / 4.0)
