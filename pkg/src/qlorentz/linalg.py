"""Dense complex matrix kernel for multi-qubit operators.

Conventions used throughout the package:

* matrices are square ``complex128`` numpy arrays in row-major order;
* for an n-qubit operator, qubit 1 is the most significant index factor
  (the leftmost slot of the Kronecker product);
* eigenvalues are reported in descending order.
"""

from __future__ import annotations

import string

import numpy as np

from .errors import ContractError, PositivityError, SizeError

#: Hard cap on matrix dimension (2**12); subset sums are exponential in the
#: qubit count anyway, so nothing useful lives beyond this.
MAX_DIM = 4096

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

#: Pauli basis in the index order matched to (t, x, y, z) coordinates.
PAULIS = (PAULI_I, PAULI_X, PAULI_Y, PAULI_Z)


def as_matrix(m) -> np.ndarray:
    """Coerce input to a square complex matrix with finite entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix entries must be finite")
    return a


def max_abs(m: np.ndarray) -> float:
    """Largest entry magnitude (the max norm)."""
    return float(np.abs(m).max()) if m.size else 0.0


def hermiticity_defect(m: np.ndarray) -> float:
    """Max-norm distance between a matrix and its conjugate transpose."""
    return max_abs(m - m.conj().T)


def require_hermitian(m, atol: float = 1e-10, what: str = "matrix") -> np.ndarray:
    """Check Hermiticity within ``atol`` and return the symmetrized matrix.

    Raises ContractError naming the max asymmetry when the check fails.
    """
    a = as_matrix(m)
    defect = hermiticity_defect(a)
    if defect > atol:
        raise ContractError(
            f"{what} is not Hermitian: max asymmetry {defect:.3e} exceeds atol {atol:.1e}"
        )
    return 0.5 * (a + a.conj().T)


def kron(a, b) -> np.ndarray:
    """Kronecker product with the MAX_DIM size guard."""
    a = as_matrix(a)
    b = as_matrix(b)
    out_dim = a.shape[0] * b.shape[0]
    if out_dim > MAX_DIM:
        raise SizeError(f"Kronecker product dimension {out_dim} exceeds maximum {MAX_DIM}")
    return np.kron(a, b)


def kron_all(mats) -> np.ndarray:
    """Kronecker product of a sequence of matrices, left slot most significant."""
    mats = list(mats)
    if not mats:
        raise ValueError("need at least one factor")
    out = as_matrix(mats[0])
    for m in mats[1:]:
        out = kron(out, m)
    return out


def partial_trace(rho, n: int, keep) -> np.ndarray:
    """Trace out all qubits of a 2**n density matrix except those in ``keep``.

    ``keep`` is a nonempty subset of {1..n} (qubit 1 is the most significant
    index factor). Kept qubits retain their relative order in the output,
    which has dimension 2**len(keep). The total trace is preserved.
    """
    rho = as_matrix(rho)
    if rho.shape[0] != 2**n:
        raise ValueError(f"matrix dimension {rho.shape[0]} does not match n={n} qubits")
    kept = sorted(set(int(q) for q in keep))
    if not kept:
        raise ValueError("keep must be a nonempty subset of qubit indices")
    if kept[0] < 1 or kept[-1] > n:
        raise ValueError(f"keep indices {kept} outside 1..{n}")
    if len(kept) == n:
        return rho.copy()

    letters = iter(string.ascii_letters)
    row, col, out_row, out_col = [], [], [], []
    kept_set = set(kept)
    for q in range(1, n + 1):
        if q in kept_set:
            r, c = next(letters), next(letters)
            out_row.append(r)
            out_col.append(c)
        else:
            r = c = next(letters)
        row.append(r)
        col.append(c)
    subscript = "".join(row + col) + "->" + "".join(out_row + out_col)
    reduced = np.einsum(subscript, rho.reshape((2,) * (2 * n)))
    d = 2 ** len(kept)
    return reduced.reshape(d, d)


def herm_eig(m, atol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, V)`` with real eigenvalues sorted descending and
    matching eigenvector columns, so that ``m ~ V @ diag(eigenvalues) @ V†``.
    Non-Hermitian input beyond ``atol`` raises ContractError.
    """
    h = require_hermitian(m, atol=atol)
    evals, vecs = np.linalg.eigh(h)
    return evals[::-1].copy(), vecs[:, ::-1].copy()


def mat_sqrt_psd(m, atol: float = 1e-10) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues down to -1e-10 * max_abs(m) are treated as floating-point
    drift and clamped to zero; anything lower raises PositivityError.
    """
    h = require_hermitian(m, atol=atol)
    evals, vecs = herm_eig(h, atol=atol)
    clamp = -1e-10 * max_abs(h)
    low = float(evals.min()) if evals.size else 0.0
    if low < clamp:
        raise PositivityError(
            f"matrix is not positive semidefinite: eigenvalue {low:.3e} below clamp {clamp:.3e}"
        )
    evals = np.clip(evals, 0.0, None)
    # zero out eigensolver noise at 1e-16 scale: sqrt would amplify it to 1e-8
    if evals.size and evals[0] > 0.0:
        evals[evals < 1e-14 * evals[0]] = 0.0
    roots = np.sqrt(evals)
    s = (vecs * roots) @ vecs.conj().T
    return 0.5 * (s + s.conj().T)


def det(m) -> complex:
    """Determinant; closed form ad - bc for dim 2, pivoted LU otherwise."""
    a = as_matrix(m)
    if a.shape[0] == 2:
        return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    return complex(np.linalg.det(a))


def char_poly_coeffs(m) -> np.ndarray:
    """Coefficients c_0..c_{d-1} of det(lambda*I - m), leading coefficient 1.

    Computed by the Faddeev-LeVerrier recurrence, which extracts each
    coefficient from traces of matrix powers; no eigensolver involved.
    """
    a = as_matrix(m)
    d = a.shape[0]
    coeffs = np.empty(d, dtype=complex)
    mk = a.copy()
    eye = np.eye(d, dtype=complex)
    for k in range(1, d + 1):
        c = -np.trace(mk) / k
        coeffs[d - k] = c
        if k < d:
            mk = a @ (mk + c * eye)
    return coeffs
