"""The singlet correlation function as a bilinear form of Minkowski signature.

For 2x2 Hermitian observables O1, O2 the singlet expectation
<psi-| O1 (x) O2 |psi-> equals the polarized determinant
(det(O1+O2) - det(O1) - det(O2))/2, which in Pauli coordinates is the
Minkowski metric. This module computes the correlator both ways, averages
conjugated observable pairs over Haar-random U(2) to recover the
chi*I - zeta*F closed form, and checks invariance under
determinant-preserving maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .linalg import PAULIS, as_matrix, det, kron, require_hermitian
from .lorentz import (
    LorentzMatrix4,
    MinkowskiVector,
    SL2C,
    herm_from_vector,
    vector_from_herm,
)
from .seeding import rng_from_seed

HERMITIAN_TOL = 1e-10
MIN_TWIRL_SAMPLES = 1000
TWIRL_ABS_FLOOR = 1e-12
TWIRL_CHUNK = 4096

SINGLET_KET = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / np.sqrt(2.0)
SINGLET_KET.setflags(write=False)

# permutation exchanging the two tensor factors; <psi-|F|psi-> = -1
SWAP = np.array(
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ],
    dtype=complex,
)
SWAP.setflags(write=False)


def _check_observable(o, name: str) -> np.ndarray:
    a = as_matrix(o)
    if a.shape != (2, 2):
        raise ValueError(f"{name} must be 2x2, got shape {a.shape}")
    return require_hermitian(a, atol=HERMITIAN_TOL, what=name)


@dataclass(frozen=True)
class CorrelationResult:
    """One correlator evaluation together with its inputs in Pauli coordinates."""

    value: float
    o1: MinkowskiVector
    o2: MinkowskiVector


def singlet_correlation(o1, o2) -> float:
    """<psi-| o1 (x) o2 |psi-> on the normalized singlet, for Hermitian 2x2 inputs."""
    a = _check_observable(o1, "o1")
    b = _check_observable(o2, "o2")
    value = SINGLET_KET.conj() @ kron(a, b) @ SINGLET_KET
    return float(value.real)


def correlate(o1, o2) -> CorrelationResult:
    """singlet_correlation plus the Pauli coordinates of both observables."""
    a = _check_observable(o1, "o1")
    b = _check_observable(o2, "o2")
    return CorrelationResult(
        value=singlet_correlation(a, b),
        o1=vector_from_herm(a),
        o2=vector_from_herm(b),
    )


def polarized_determinant(o1, o2) -> float:
    """(det(o1 + o2) - det(o1) - det(o2)) / 2: the bilinear form whose diagonal is det."""
    a = as_matrix(o1)
    b = as_matrix(o2)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError("polarized determinant is defined for 2x2 matrices")
    value = 0.5 * (det(a + b) - det(a) - det(b))
    return float(value.real)


def pauli_correlation_table() -> np.ndarray:
    """The 4x4 matrix of correlators between Pauli observables; diag(1,-1,-1,-1)."""
    table = np.empty((4, 4))
    for i, p in enumerate(PAULIS):
        for j, q in enumerate(PAULIS):
            table[i, j] = singlet_correlation(p, q)
    return table


def haar_unitaries(rng: np.random.Generator, count: int) -> np.ndarray:
    """Stack of `count` Haar-distributed U(2) matrices (Ginibre QR with phase fix)."""
    if count < 1:
        raise ValueError("count must be positive")
    g = (
        rng.standard_normal((count, 2, 2)) + 1j * rng.standard_normal((count, 2, 2))
    ) / np.sqrt(2.0)
    q, r = np.linalg.qr(g)
    diag = np.diagonal(r, axis1=1, axis2=2)
    phases = diag / np.abs(diag)
    return q * phases[:, None, :]


@dataclass(frozen=True)
class TwirlEstimate:
    """Monte Carlo group average of a conjugated observable pair over U(2)."""

    sample_count: int
    mean: np.ndarray
    std_error: float
    chi: float
    zeta: float
    max_abs_deviation: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "samples": self.sample_count,
            "chi": self.chi,
            "zeta": self.zeta,
            "max_abs_deviation": self.max_abs_deviation,
            "std_error": self.std_error,
            "pass": self.passed,
        }


def twirl_coefficients(o1, o2) -> tuple[float, float]:
    """Closed-form (chi, zeta) of the twirl: chi*I - zeta*F is the exact average."""
    a = _check_observable(o1, "o1")
    b = _check_observable(o2, "o2")
    t1 = np.trace(a).real
    t2 = np.trace(b).real
    t12 = np.trace(a @ b).real
    chi = t1 * t2 / 3.0 - t12 / 6.0
    zeta = t1 * t2 / 6.0 - t12 / 3.0
    return float(chi), float(zeta)


def haar_twirl_mc(o1, o2, samples: int, rng_seed: int) -> TwirlEstimate:
    """Average (U(x)U)(o1(x)o2)(U(x)U)^dag over Haar samples and compare to chi*I - zeta*F.

    The estimate passes when the largest entrywise deviation from the closed
    form stays below five entrywise standard errors of the mean (plus a tiny
    absolute floor so exactly invariant pairs are not failed on rounding noise).
    """
    samples = int(samples)
    if samples < MIN_TWIRL_SAMPLES:
        raise ValueError(f"need at least {MIN_TWIRL_SAMPLES} samples, got {samples}")
    a = _check_observable(o1, "o1")
    b = _check_observable(o2, "o2")
    chi, zeta = twirl_coefficients(a, b)
    target = chi * np.eye(4, dtype=complex) - zeta * SWAP

    pair = kron(a, b)
    rng = rng_from_seed(rng_seed)
    total = np.zeros((4, 4), dtype=complex)
    total_sq = np.zeros((4, 4))
    done = 0
    while done < samples:
        count = min(TWIRL_CHUNK, samples - done)
        u = haar_unitaries(rng, count)
        uu = np.einsum("nab,ncd->nacbd", u, u).reshape(count, 4, 4)
        conjugated = uu @ pair @ np.conj(np.swapaxes(uu, 1, 2))
        total += conjugated.sum(axis=0)
        total_sq += (np.abs(conjugated) ** 2).sum(axis=0)
        done += count

    mean = total / samples
    # entrywise variance of complex samples: E|z|^2 - |E z|^2
    variance = np.maximum(total_sq / samples - np.abs(mean) ** 2, 0.0)
    sem = np.sqrt(variance / samples)
    std_error = float(sem.max())
    max_dev = float(np.abs(mean - target).max())
    mean.setflags(write=False)
    return TwirlEstimate(
        sample_count=samples,
        mean=mean,
        std_error=std_error,
        chi=chi,
        zeta=zeta,
        max_abs_deviation=max_dev,
        passed=max_dev <= 5.0 * std_error + TWIRL_ABS_FLOOR,
    )


MapLike = Union[SL2C, LorentzMatrix4, np.ndarray, str]


def _as_coordinate_map(mapping: MapLike):
    """Normalize the supported map forms to a callable on Hermitian 2x2 matrices."""
    if isinstance(mapping, SL2C):
        lam = mapping.m

        def conjugation(o: np.ndarray) -> np.ndarray:
            return lam @ o @ lam.conj().T

        return conjugation
    if isinstance(mapping, str):
        if mapping != "parity":
            raise ValueError(f"unknown named map {mapping!r}; only 'parity' is recognized")

        def parity(o: np.ndarray) -> np.ndarray:
            v = vector_from_herm(o)
            return herm_from_vector(MinkowskiVector(v.t, -v.x, -v.y, -v.z))

        return parity
    if isinstance(mapping, np.ndarray):
        mapping = LorentzMatrix4(mapping)
    if isinstance(mapping, LorentzMatrix4):
        lor = mapping

        def coordinate(o: np.ndarray) -> np.ndarray:
            return herm_from_vector(lor.apply(vector_from_herm(o)))

        return coordinate
    raise TypeError(f"unsupported map type {type(mapping).__name__}")


def correlator_symmetry_check(mapping: MapLike, trials: int, rng_seed: int) -> float:
    """Largest correlator change under the map, over random Hermitian pairs.

    The map may be an SL(2,C) conjugation, a Minkowski-form-preserving 4x4
    matrix acting on Pauli coordinates, or the string 'parity'. Returns the
    max over trials of |C(o1,o2) - C(L o1, L o2)| / max(1, |C(o1,o2)|), which
    should sit at rounding scale for any determinant-preserving map.
    """
    trials = int(trials)
    if trials < 1:
        raise ValueError("trials must be positive")
    apply_map = _as_coordinate_map(mapping)
    rng = rng_from_seed(rng_seed)
    worst = 0.0
    for _ in range(trials):
        o1 = herm_from_vector(MinkowskiVector(*rng.standard_normal(4)))
        o2 = herm_from_vector(MinkowskiVector(*rng.standard_normal(4)))
        before = singlet_correlation(o1, o2)
        m1 = require_hermitian(apply_map(o1), atol=1e-8, what="mapped o1")
        m2 = require_hermitian(apply_map(o2), atol=1e-8, what="mapped o2")
        after = singlet_correlation(m1, m2)
        worst = max(worst, abs(before - after) / max(1.0, abs(before)))
    return worst


def singlet_swap_expectation() -> float:
    """<psi-|F|psi->; equals -1 and is asserted as a unit check."""
    return float((SINGLET_KET.conj() @ SWAP @ SINGLET_KET).real)
