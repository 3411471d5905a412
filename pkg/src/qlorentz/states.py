"""n-qubit states, the spin-flip, and local SL(2,C) actions.

States are positive semidefinite Hermitian matrices with positive trace and
are deliberately allowed to be un-normalized: conjugation by a boost changes
the trace, and nothing here ever renormalizes behind your back.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce as _fold
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import ContractError
from .linalg import (
    PAULI_Y,
    as_matrix,
    hermiticity_defect,
    kron,
    kron_all,
    mat_sqrt_psd,
    max_abs,
    partial_trace,
)
from .lorentz import SL2C
from .seeding import rng_from_seed

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-9
TRACE_IMAG_TOL = 1e-12
MAX_QUBITS = 8


class QubitState:
    """A possibly un-normalized n-qubit density matrix.

    Construction validates Hermiticity, positive semidefiniteness, and a
    positive trace; internal compositions whose output is guaranteed valid
    pass ``validate=False`` to skip the O(dim**3) check.
    """

    __slots__ = ("n", "rho")

    def __init__(self, n: int, rho, *, validate: bool = True):
        n = int(n)
        if n < 1:
            raise ValueError("qubit count must be positive")
        a = as_matrix(rho)
        if a.shape[0] != 2**n:
            raise ValueError(f"matrix dimension {a.shape[0]} does not match n={n} qubits")
        if validate:
            defect = hermiticity_defect(a)
            if defect > HERMITIAN_TOL:
                raise ContractError(f"state is not Hermitian: max asymmetry {defect:.3e}")
            evals = np.linalg.eigvalsh(0.5 * (a + a.conj().T))
            floor = -PSD_TOL * max_abs(a)
            if evals.min() < floor:
                raise ContractError(
                    f"state is not PSD: eigenvalue {evals.min():.3e} below {floor:.3e}"
                )
            tr = np.trace(a)
            if abs(tr.imag) > TRACE_IMAG_TOL or tr.real <= 0.0:
                raise ContractError(f"state trace {tr} is not a positive real number")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rho", a)

    def __setattr__(self, name, value):
        raise AttributeError("QubitState is immutable")

    @property
    def dim(self) -> int:
        return 2**self.n

    def trace(self) -> float:
        return float(np.trace(self.rho).real)

    def scaled(self, c: float) -> "QubitState":
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return QubitState(self.n, c * self.rho, validate=False)

    def __repr__(self):
        return f"QubitState(n={self.n}, trace={self.trace():.6g})"


@dataclass(frozen=True)
class LocalAction:
    """One SL(2,C) factor per qubit; acts on states by conjugation with their product."""

    factors: tuple[SL2C, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("need at least one factor")

    def __len__(self):
        return len(self.factors)

    def matrix(self) -> np.ndarray:
        return kron_all([f.m for f in self.factors])


ActionLike = Union[LocalAction, Sequence[SL2C]]


def _as_action(a: ActionLike) -> LocalAction:
    if isinstance(a, LocalAction):
        return a
    return LocalAction(tuple(a))


@lru_cache(maxsize=None)
def _y_n(n: int) -> np.ndarray:
    out = _fold(np.kron, [PAULI_Y] * n)
    out.setflags(write=False)
    return out


def spin_flip(s: QubitState) -> QubitState:
    """The spin-flipped state Y^(x)n conj(rho) Y^(x)n.

    An involution; for one qubit it equals Tr(rho)*I - rho.
    """
    y = _y_n(s.n)
    return QubitState(s.n, y @ np.conj(s.rho) @ y, validate=False)


def w_matrix(s: QubitState) -> np.ndarray:
    """The product rho * spin_flip(rho); not Hermitian in general."""
    return s.rho @ spin_flip(s).rho


def w_spectrum(s: QubitState) -> np.ndarray:
    """Eigenvalues of the W-matrix, descending, clamped at zero.

    Obtained from the positive semidefinite surrogate
    sqrt(rho) * spin_flip(rho) * sqrt(rho), which shares the spectrum of
    rho * spin_flip(rho) but admits a Hermitian eigensolver.
    """
    root = mat_sqrt_psd(s.rho)
    star = spin_flip(s).rho
    surrogate = root @ star @ root
    surrogate = 0.5 * (surrogate + surrogate.conj().T)
    evals = np.clip(np.linalg.eigvalsh(surrogate)[::-1], 0.0, None)
    # eigensolver noise sits at 1e-16 relative; downstream square roots would
    # amplify it to 1e-8, so values below noise scale are reported as zero
    if evals.size and evals[0] > 0.0:
        evals[evals < 1e-14 * evals[0]] = 0.0
    return evals


def apply_local(s: QubitState, a: ActionLike) -> QubitState:
    """Conjugate the state by the Kronecker product of the per-qubit factors.

    Positive but not trace-preserving; the output is intentionally left
    un-normalized.
    """
    action = _as_action(a)
    if len(action) != s.n:
        raise ValueError(f"action has {len(action)} factors but state has {s.n} qubits")
    m = action.matrix()
    out = m @ s.rho @ m.conj().T
    out = 0.5 * (out + out.conj().T)
    return QubitState(s.n, out, validate=False)


def reduce(s: QubitState, subset: Iterable[int]) -> QubitState:
    """Reduced state on the given qubits (1-based, relative order preserved)."""
    kept = sorted(set(int(q) for q in subset))
    return QubitState(len(kept), partial_trace(s.rho, s.n, kept), validate=False)


def depolarize(s: QubitState, p: float) -> QubitState:
    """Mix the state with white noise: (1-p)*rho + p*Tr(rho)*I/dim.

    Trace-preserving and completely positive, but not entropy-preserving,
    which is exactly why it serves as the negative control for the
    conjugation-map characterization.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight {p} outside [0, 1]")
    d = s.dim
    noise = np.trace(s.rho).real * np.eye(d, dtype=complex) / d
    return QubitState(s.n, (1.0 - p) * s.rho + p * noise, validate=False)


def _projector(psi: np.ndarray) -> np.ndarray:
    return np.outer(psi, psi.conj())


def _singlet_ket() -> np.ndarray:
    return np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / np.sqrt(2.0)


def _check_n(n: int) -> int:
    n = int(n)
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count {n} outside 1..{MAX_QUBITS}")
    return n


def singlet() -> QubitState:
    return QubitState(2, _projector(_singlet_ket()), validate=False)


def ghz(n: int = 3) -> QubitState:
    n = _check_n(n)
    psi = np.zeros(2**n, dtype=complex)
    psi[0] = psi[-1] = 1.0 / np.sqrt(2.0)
    return QubitState(n, _projector(psi), validate=False)


def wstate(n: int = 3) -> QubitState:
    n = _check_n(n)
    psi = np.zeros(2**n, dtype=complex)
    for q in range(n):
        psi[1 << q] = 1.0 / np.sqrt(n)
    return QubitState(n, _projector(psi), validate=False)


def product_of_singlets(k: int = 2) -> QubitState:
    k = int(k)
    if not 1 <= k <= MAX_QUBITS // 2:
        raise ValueError(f"singlet pair count {k} outside 1..{MAX_QUBITS // 2}")
    block = _projector(_singlet_ket())
    rho = block
    for _ in range(k - 1):
        rho = kron(rho, block)
    return QubitState(2 * k, rho, validate=False)


def maximally_mixed(n: int = 1) -> QubitState:
    n = _check_n(n)
    d = 2**n
    return QubitState(n, np.eye(d, dtype=complex) / d, validate=False)


def basis0(n: int = 1) -> QubitState:
    n = _check_n(n)
    rho = np.zeros((2**n, 2**n), dtype=complex)
    rho[0, 0] = 1.0
    return QubitState(n, rho, validate=False)


_PRESET_BUILDERS = {
    "singlet": (singlet, None),
    "ghz": (ghz, 3),
    "wstate": (wstate, 3),
    "product_of_singlets": (product_of_singlets, 2),
    "singlets": (product_of_singlets, 2),
    "maximally_mixed": (maximally_mixed, 1),
    "basis0": (basis0, 1),
}

def preset(name: str) -> QubitState:
    """Named state, with an optional size suffix: 'singlet', 'ghz4', 'wstate4', ...

    Recognized families: singlet, ghz(n), wstate(n), product_of_singlets(k)
    (alias 'singlets'), maximally_mixed(n), basis0(n).
    """
    text = name.strip().lower()
    # longest family name first so 'basis0' is not read as 'basis' + size 0
    for key in sorted(_PRESET_BUILDERS, key=len, reverse=True):
        builder, default = _PRESET_BUILDERS[key]
        if text == key:
            return builder() if default is None else builder(default)
        if text.startswith(key):
            rest = text[len(key):].lstrip("_")
            if rest.isdigit():
                if default is None:
                    raise ValueError(f"preset {key!r} does not take a size suffix")
                return builder(int(rest))
    known = ", ".join(sorted(_PRESET_BUILDERS))
    raise ValueError(f"unknown preset {name!r}; known families: {known}")


def random_state(n: int, kind: str, rng_seed: int) -> QubitState:
    """Seeded random state: 'pure' draws a Gaussian ket, 'mixed' a Wishart matrix.

    Both are normalized to unit trace; rescale afterwards if an un-normalized
    state is wanted.
    """
    n = _check_n(n)
    rng = rng_from_seed(rng_seed)
    d = 2**n
    if kind == "pure":
        psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        psi /= np.linalg.norm(psi)
        return QubitState(n, _projector(psi), validate=False)
    if kind == "mixed":
        g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        rho = g @ g.conj().T
        return QubitState(n, rho / np.trace(rho).real, validate=False)
    raise ValueError(f"kind must be 'pure' or 'mixed', got {kind!r}")


def state_to_json_dict(s: QubitState) -> dict:
    """Serialize as {"n": int, "matrix": [[[re, im], ...], ...]} (row-major)."""
    matrix = [[[float(v.real), float(v.imag)] for v in row] for row in s.rho]
    return {"n": s.n, "matrix": matrix}


def state_from_json_dict(payload: dict) -> QubitState:
    """Load and fully validate a state from its JSON form."""
    if not isinstance(payload, dict) or "n" not in payload or "matrix" not in payload:
        raise ValueError("state JSON must be an object with 'n' and 'matrix' keys")
    n = int(payload["n"])
    raw = payload["matrix"]
    try:
        arr = np.asarray(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed state matrix: {exc}") from None
    if arr.ndim != 3 or arr.shape[2] != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"state matrix must be square with [re, im] entries, got shape {arr.shape}")
    rho = arr[:, :, 0] + 1j * arr[:, :, 1]
    return QubitState(n, rho, validate=True)
