"""State construction, the spin flip, W-matrices, local actions, serialization."""

import numpy as np
import pytest

from qlorentz import (
    ContractError,
    QubitState,
    apply_local,
    basis0,
    boost_z,
    depolarize,
    ghz,
    kron,
    maximally_mixed,
    preset,
    product_of_singlets,
    random_sl2c,
    random_state,
    reduce,
    singlet,
    spin_flip,
    state_from_json_dict,
    state_to_json_dict,
    w_matrix,
    w_spectrum,
    wstate,
)
from qlorentz.seeding import split_seed


def test_constructor_validates_hermiticity():
    with pytest.raises(ContractError):
        QubitState(1, np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_constructor_validates_positivity():
    with pytest.raises(ContractError):
        QubitState(1, np.diag([1.0, -0.5]).astype(complex))


def test_constructor_validates_trace():
    with pytest.raises(ContractError):
        QubitState(1, np.zeros((2, 2), dtype=complex))


def test_constructor_validates_dimension():
    with pytest.raises(ValueError):
        QubitState(2, np.eye(2, dtype=complex))


def test_states_are_immutable():
    s = maximally_mixed(1)
    with pytest.raises(AttributeError):
        s.n = 3
    with pytest.raises(ValueError):
        s.rho[0, 0] = 5.0


def test_spin_flip_single_qubit_closed_form():
    rng = np.random.default_rng(31)
    for trial in range(20):
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        s = QubitState(1, g @ g.conj().T)
        expected = np.trace(s.rho) * np.eye(2) - s.rho
        np.testing.assert_allclose(spin_flip(s).rho, expected, atol=1e-12)


def test_spin_flip_fixed_points_and_involution():
    np.testing.assert_allclose(spin_flip(maximally_mixed(1)).rho, 0.5 * np.eye(2), atol=0)
    np.testing.assert_allclose(spin_flip(singlet()).rho, singlet().rho, atol=1e-15)
    s = random_state(3, "mixed", 313)
    np.testing.assert_allclose(spin_flip(spin_flip(s)).rho, s.rho, atol=1e-12)


def test_spin_flip_preserves_trace():
    s = random_state(2, "mixed", 32).scaled(2.5)
    assert abs(spin_flip(s).trace() - s.trace()) < 1e-12


def test_w_matrix_frozen_cases():
    np.testing.assert_allclose(w_matrix(maximally_mixed(1)), 0.25 * np.eye(2), atol=0)
    np.testing.assert_allclose(w_matrix(singlet()), singlet().rho, atol=1e-14)


def test_w_matrix_pure_product_has_zero_trace():
    a = random_state(1, "pure", 33)
    b = random_state(1, "pure", 34)
    s = QubitState(2, kron(a.rho, b.rho))
    assert abs(np.trace(w_matrix(s))) < 1e-12


def test_w_matrix_factorizes_over_products():
    a = random_state(1, "mixed", 35)
    b = random_state(2, "mixed", 36)
    s = QubitState(3, kron(a.rho, b.rho))
    np.testing.assert_allclose(
        w_matrix(s), kron(w_matrix(a), w_matrix(b)), atol=1e-10
    )


def test_w_spectrum_frozen_cases():
    np.testing.assert_allclose(w_spectrum(singlet()), [1.0, 0.0, 0.0, 0.0], atol=1e-10)
    np.testing.assert_allclose(w_spectrum(maximally_mixed(2)), [1.0 / 16] * 4, atol=1e-12)


def test_w_spectrum_matches_direct_eigenvalues():
    # the PSD surrogate must be isospectral to the non-Hermitian product
    for trial in range(10):
        s = random_state(2, "mixed", split_seed(37, trial))
        direct = np.sort_complex(np.linalg.eigvals(w_matrix(s)))[::-1]
        assert np.abs(direct.imag).max() < 1e-9
        np.testing.assert_allclose(w_spectrum(s), direct.real, atol=1e-9)


def test_w_spectrum_of_pure_odd_is_zero():
    s = random_state(3, "pure", 38)
    assert w_spectrum(s).max() <= 1e-9


def test_w_spectrum_descending_and_clamped():
    s = random_state(3, "mixed", 39)
    lam = w_spectrum(s)
    assert np.all(np.diff(lam) <= 1e-12)
    assert lam.min() >= 0.0


def test_apply_local_identity_and_boost():
    s = basis0(1)
    moved = apply_local(s, [boost_z(1.0)])
    np.testing.assert_allclose(moved.rho, np.diag([np.e, 0.0]), atol=1e-12)
    same = apply_local(s, [boost_z(0.0)])
    np.testing.assert_allclose(same.rho, s.rho, atol=0)


def test_apply_local_singlet_symmetry():
    lam = random_sl2c(40, 1.5)
    moved = apply_local(singlet(), [lam, lam])
    np.testing.assert_allclose(moved.rho, singlet().rho, atol=1e-9)


def test_apply_local_length_mismatch():
    with pytest.raises(ValueError):
        apply_local(singlet(), [boost_z(1.0)])


def test_apply_local_does_not_renormalize():
    s = maximally_mixed(1)
    moved = apply_local(s, [boost_z(1.0)])
    assert abs(moved.trace() - np.cosh(1.0)) < 1e-12


def test_spin_flip_twisted_commutation():
    # spin_flip(M rho M^dag) = (M^dag)^{-1} spin_flip(rho) M^{-1}
    for trial in range(10):
        n = 1 + trial % 3
        s = random_state(n, "mixed", split_seed(41, trial))
        factors = [random_sl2c(split_seed(42, 10 * trial + j), 2.0) for j in range(n)]
        moved = apply_local(s, factors)
        m = factors[0].m
        for f in factors[1:]:
            m = kron(m, f.m)
        m_inv = np.linalg.inv(m)
        expected = m_inv.conj().T @ spin_flip(s).rho @ m_inv
        scale = max(1.0, np.abs(expected).max())
        assert np.abs(spin_flip(moved).rho - expected).max() < 1e-8 * scale


def test_w_matrix_conjugates_under_local_actions():
    for trial in range(10):
        n = 1 + trial % 3
        s = random_state(n, "mixed", split_seed(43, trial))
        factors = [random_sl2c(split_seed(44, 10 * trial + j), 2.0) for j in range(n)]
        m = factors[0].m
        for f in factors[1:]:
            m = kron(m, f.m)
        expected = m @ w_matrix(s) @ np.linalg.inv(m)
        got = w_matrix(apply_local(s, factors))
        scale = max(1.0, np.abs(expected).max())
        assert np.abs(got - expected).max() < 1e-8 * scale


def test_w_spectrum_invariant_under_local_actions():
    for trial in range(10):
        n = 1 + trial % 3
        s = random_state(n, "mixed", split_seed(45, trial))
        factors = [random_sl2c(split_seed(46, 10 * trial + j), 2.0) for j in range(n)]
        before = w_spectrum(s)
        after = w_spectrum(apply_local(s, factors))
        rel = np.abs(before - after) / np.maximum(1.0, np.abs(before))
        assert rel.max() < 1e-7


def test_reduce_marginals():
    for q in ([1], [2]):
        np.testing.assert_allclose(reduce(singlet(), q).rho, 0.5 * np.eye(2), atol=1e-12)
    np.testing.assert_allclose(reduce(ghz(3), [2]).rho, 0.5 * np.eye(2), atol=1e-12)
    np.testing.assert_allclose(
        reduce(product_of_singlets(2), [1, 2]).rho, singlet().rho, atol=1e-12
    )


def test_reduce_chain_composition():
    s = random_state(4, "mixed", 47)
    once = reduce(s, [1, 3])
    twice = reduce(reduce(s, [1, 2, 3]), [1, 3])
    np.testing.assert_allclose(once.rho, twice.rho, atol=1e-12)


def test_preset_parsing():
    assert preset("singlet").n == 2
    assert preset("ghz4").dim == 16
    assert preset("wstate").n == 3
    assert preset("GHZ_4").n == 4
    assert preset("product_of_singlets2").n == 4
    assert preset("singlets3").n == 6
    assert preset("basis0").n == 1
    assert preset("basis02").n == 2
    assert preset("maximally_mixed3").n == 3
    with pytest.raises(ValueError):
        preset("bell")
    with pytest.raises(ValueError):
        preset("ghz99")


def test_singlet_entries_frozen():
    expected = np.zeros((4, 4), dtype=complex)
    expected[1, 1] = expected[2, 2] = 0.5
    expected[1, 2] = expected[2, 1] = -0.5
    np.testing.assert_allclose(singlet().rho, expected, atol=1e-15)


def test_ghz_and_wstate_structure():
    g = ghz(4)
    assert abs(g.trace() - 1.0) < 1e-12
    assert abs(g.rho[0, 0] - 0.5) < 1e-12 and abs(g.rho[15, 15] - 0.5) < 1e-12
    w = wstate(4)
    support = [1 << k for k in range(4)]
    for idx in support:
        assert abs(w.rho[idx, idx] - 0.25) < 1e-12
    assert abs(w.trace() - 1.0) < 1e-12


def test_random_state_contracts():
    pure = random_state(1, "pure", 48)
    assert abs(pure.trace() - 1.0) < 1e-12
    assert abs(np.trace(pure.rho @ pure.rho).real - 1.0) < 1e-10
    a = random_state(2, "mixed", 49)
    b = random_state(2, "mixed", 49)
    np.testing.assert_allclose(a.rho, b.rho, atol=0)
    with pytest.raises(ValueError):
        random_state(0, "pure", 1)
    with pytest.raises(ValueError):
        random_state(9, "pure", 1)
    with pytest.raises(ValueError):
        random_state(2, "thermal", 1)


def test_depolarize_limits():
    s = random_state(1, "pure", 50)
    np.testing.assert_allclose(depolarize(s, 0.0).rho, s.rho, atol=0)
    np.testing.assert_allclose(depolarize(s, 1.0).rho, 0.5 * np.eye(2), atol=1e-12)
    assert abs(depolarize(s, 0.3).trace() - s.trace()) < 1e-12
    with pytest.raises(ValueError):
        depolarize(s, 1.5)


def test_json_round_trip():
    s = random_state(2, "mixed", 51).scaled(1.7)
    payload = state_to_json_dict(s)
    assert payload["n"] == 2
    back = state_from_json_dict(payload)
    np.testing.assert_allclose(back.rho, s.rho, atol=1e-15)


def test_json_rejects_malformed_payloads():
    with pytest.raises(ValueError):
        state_from_json_dict({"matrix": [[[1.0, 0.0]]]})
    with pytest.raises(ValueError):
        state_from_json_dict({"n": 1, "matrix": [[1.0, 0.0], [0.0, 0.0]]})
    with pytest.raises(ValueError):
        state_from_json_dict({"n": 1, "matrix": [[[1.0, 0.0]], [[0.0, 0.0]]]})
    # valid shape but not a state
    with pytest.raises(ContractError):
        state_from_json_dict(
            {"n": 1, "matrix": [[[1.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]}
        )
