"""Dense complex linear algebra for the small fixed sizes used here.

Everything is eigendecomposition-based rather than Pade-based: the
matrices are 4x4 or 6x6 and the branch structure of the logarithm has to
be controlled exactly (principal eigenphases in (-pi, pi]).
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

# Default tolerances: construction identities, verification of inputs,
# and end-to-end round trips, respectively.
CONSTRUCTION_TOL = 1e-12
VERIFY_TOL = 1e-10
ROUNDTRIP_TOL = 1e-9

# Eigenphases closer than this to +-pi are treated as sitting on the
# logarithm's branch cut.
BRANCH_TOL = 1e-8


class NonSkewHermitianError(ValueError):
    """The matrix handed to expm is not skew-Hermitian within tolerance."""


class NotUnitaryError(ValueError):
    """The matrix is not unitary within tolerance."""


class BranchPointError(ValueError):
    """A unitary has an eigenphase at +-pi; its principal log is undefined."""


@dataclass(frozen=True)
class UnitaryCheckReport:
    """Result of a special-unitarity check at a given tolerance."""

    unitarity_defect: float
    det_defect: float
    tol: float
    passed: bool


def as_complex_matrix(a, dim=None):
    """Validate and return a square complex matrix with finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if dim is not None and m.shape[0] != dim:
        raise ValueError(f"expected a {dim}x{dim} matrix, got {m.shape[0]}x{m.shape[0]}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix entries must be finite")
    return m


def frob(a):
    """Frobenius norm."""
    return float(np.linalg.norm(a))


def expm(x, tol=CONSTRUCTION_TOL):
    """Exponential of a skew-Hermitian matrix, returning a unitary.

    Diagonalizes the Hermitian matrix i*x, exponentiates the eigenphases
    and conjugates back, so the result is unitary to machine precision.

    Raises NonSkewHermitianError if ||x + x^dagger||_F > tol.
    """
    x = as_complex_matrix(x)
    defect = frob(x + x.conj().T)
    if defect > tol:
        raise NonSkewHermitianError(
            f"matrix is not skew-Hermitian: ||X + X^dagger||_F = {defect:.3e} > {tol:.1e}"
        )
    h = 1j * x
    h = (h + h.conj().T) / 2.0
    w, v = np.linalg.eigh(h)
    return (v * np.exp(-1j * w)) @ v.conj().T


def _require_unitary(u, tol, who):
    defect = frob(u.conj().T @ u - np.eye(u.shape[0]))
    if defect > tol:
        raise NotUnitaryError(
            f"{who}: matrix is not unitary: ||U^dagger U - I||_F = {defect:.3e} > {tol:.1e}"
        )


def eig_unitary(u, tol=VERIFY_TOL):
    """Eigendecomposition U = V diag(exp(i*phases)) V^dagger of a unitary.

    Uses the complex Schur form, which for a normal matrix is diagonal and
    delivers a genuinely unitary V even with degenerate eigenvalues (plain
    nonsymmetric eig does not guarantee orthonormal eigenvectors there).

    Returns (phases, v) with phases sorted ascending in (-pi, pi].
    """
    u = as_complex_matrix(u)
    _require_unitary(u, tol, "eig_unitary")
    t, z = scipy.linalg.schur(u, output="complex")
    phases = np.angle(np.diag(t))
    order = np.argsort(phases, kind="stable")
    return phases[order], z[:, order]


def logm_principal(u, tol=VERIFY_TOL, branch_tol=BRANCH_TOL):
    """Principal logarithm of a unitary matrix.

    Returns the skew-Hermitian X with expm(X) = U whose eigenvalues all
    have imaginary part in (-pi, pi).

    Raises BranchPointError if any eigenphase lies within branch_tol of
    +-pi: there the principal branch is not analytic and the matrix sits
    outside the normal neighbourhood of the exponential map.
    """
    phases, v = eig_unitary(u, tol=tol)
    if np.any(np.pi - np.abs(phases) < branch_tol):
        worst = phases[np.argmax(np.abs(phases))]
        raise BranchPointError(
            f"eigenphase {worst:+.12f} is within {branch_tol:.1e} of +-pi; "
            "no principal logarithm"
        )
    x = (v * (1j * phases)) @ v.conj().T
    return (x - x.conj().T) / 2.0


def check_special_unitary(u, tol=VERIFY_TOL):
    """Measure how far a matrix is from being special unitary."""
    u = as_complex_matrix(u)
    n = u.shape[0]
    unitarity_defect = frob(u.conj().T @ u - np.eye(n))
    det_defect = float(abs(np.linalg.det(u) - 1.0))
    passed = unitarity_defect <= tol and det_defect <= tol
    return UnitaryCheckReport(
        unitarity_defect=unitarity_defect,
        det_defect=det_defect,
        tol=tol,
        passed=passed,
    )
