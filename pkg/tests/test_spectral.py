"""Spectral machinery: eigendecomposition contract, matrix root, entropy,
structure detection."""

import numpy as np
import pytest

import cfsk

# pinned from the 50-digit oracle: diag and one off-diagonal of the square
# root of gram_cfsk(4, pi/2, pi, 1)
CFSK4_SQRT_DIAG = np.array(
    [0.9552006498005496, 0.9774451616948154, 0.9774451616948154, 0.9552006498005496]
)
CFSK4_SQRT_01 = 0.07193907392909795

# pinned: circulant eigenvalues of gram_psk(4, 1), descending
PSK41_EIGS = np.array(
    [1.532867503929439, 1.483784468069612, 0.7378030625437868, 0.2455449654571629]
)
PSK41_ENTROPY = 1.757958364461181


def random_unitary(rng, m):
    z = rng.normal(size=(m, m)) + 1j * rng.normal(size=(m, m))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_psd(rng, m, scale=1.0):
    u = random_unitary(rng, m)
    lams = rng.uniform(0, scale, size=m)
    return (u * lams) @ u.conj().T


def dft_eigenvalues(gram):
    """Independent circulant route: eigenvalues as DFT of the first row."""
    row = gram.entries[0]
    m = row.size
    k = np.arange(m)
    vals = np.array([np.sum(row * np.exp(-2j * np.pi * np.arange(m) * kk / m)) for kk in k])
    return np.sort(vals.real)[::-1]


class TestHermitianEig:
    def test_identity(self):
        spec = cfsk.hermitian_eig(np.eye(3))
        np.testing.assert_allclose(spec.eigenvalues, [1, 1, 1], atol=1e-14)

    def test_all_ones_is_rank_one(self):
        spec = cfsk.hermitian_eig(np.ones((4, 4)))
        np.testing.assert_allclose(spec.eigenvalues, [4, 0, 0, 0], atol=1e-13)

    def test_rejects_non_hermitian(self):
        with pytest.raises(cfsk.NotHermitianError):
            cfsk.hermitian_eig(np.array([[1.0, 1.0], [0.0, 1.0]]))

    def test_reconstruction_and_unitarity(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            m = int(rng.integers(2, 33))
            a = random_psd(rng, m, scale=3.0) - random_psd(rng, m, scale=1.0)
            spec = cfsk.hermitian_eig(a)
            assert np.all(np.diff(spec.eigenvalues) <= 1e-12)
            rebuilt = (spec.eigenvectors * spec.eigenvalues) @ spec.eigenvectors.conj().T
            assert np.max(np.abs(rebuilt - a)) < 1e-10
            gram = spec.eigenvectors.conj().T @ spec.eigenvectors
            assert np.max(np.abs(gram - np.eye(m))) < 1e-10

    def test_psk_eigenvalues_match_dft_route(self):
        gram = cfsk.gram_psk(cfsk.PskParams(4, 1.0))
        spec = cfsk.hermitian_eig(gram.entries)
        np.testing.assert_allclose(spec.eigenvalues, PSK41_EIGS, atol=1e-10)
        np.testing.assert_allclose(spec.eigenvalues, dft_eigenvalues(gram), atol=1e-10)

    @pytest.mark.parametrize("n", [0.1, 1.0, 10.0])
    def test_dft_route_all_sizes(self, n):
        for m in range(2, 33):
            gram = cfsk.gram_psk(cfsk.PskParams(m, n))
            spec = cfsk.hermitian_eig(gram.entries)
            assert np.max(np.abs(spec.eigenvalues - dft_eigenvalues(gram))) < 1e-10


class TestMatrixSqrt:
    def test_all_ones(self):
        for m in (2, 3, 5):
            root = cfsk.matrix_sqrt(np.ones((m, m)))
            np.testing.assert_allclose(root, np.ones((m, m)) / np.sqrt(m), atol=1e-13)

    def test_two_by_two_closed_form(self):
        c = np.exp(-1.0)
        root = cfsk.matrix_sqrt(np.array([[1.0, c], [c, 1.0]]))
        on = (np.sqrt(1 + c) + np.sqrt(1 - c)) / 2
        off = (np.sqrt(1 + c) - np.sqrt(1 - c)) / 2
        np.testing.assert_allclose(root, [[on, off], [off, on]], atol=1e-14)

    def test_pinned_gram_root(self):
        gram = cfsk.gram_cfsk(cfsk.CfskParams(4, np.pi / 2, np.pi, 1.0))
        root = cfsk.matrix_sqrt(gram.entries)
        np.testing.assert_allclose(np.diag(root).real, CFSK4_SQRT_DIAG, atol=1e-12)
        assert root[0, 1] == pytest.approx(CFSK4_SQRT_01, abs=1e-12)

    def test_rejects_indefinite(self):
        with pytest.raises(cfsk.NotPSDError):
            cfsk.matrix_sqrt(np.diag([1.0, -1.0]))

    def test_square_reproduces_input(self):
        """Root of 1000 random PSD matrices squares back within 1e-9."""
        rng = np.random.default_rng(123)
        for _ in range(1000):
            m = int(rng.integers(2, 33))
            a = random_psd(rng, m, scale=2.0)
            root = cfsk.matrix_sqrt(a)
            assert np.max(np.abs(root @ root - a)) < 1e-9
            assert np.max(np.abs(root - root.conj().T)) == 0.0

    def test_clamps_noise_eigenvalues(self):
        a = np.diag([1.0, -5e-11])
        root = cfsk.matrix_sqrt(a)
        np.testing.assert_allclose(root, np.diag([1.0, 0.0]), atol=1e-12)


class TestVonNeumannEntropy:
    def test_pure_state(self):
        assert cfsk.von_neumann_entropy(np.ones((4, 4)) / 4) == pytest.approx(0.0, abs=1e-12)

    def test_maximally_mixed(self):
        assert cfsk.von_neumann_entropy(np.eye(8) / 8) == pytest.approx(3.0, abs=1e-12)

    def test_pinned_gram_entropy(self):
        gram = cfsk.gram_psk(cfsk.PskParams(4, 1.0))
        assert cfsk.von_neumann_entropy(gram.entries / 4) == pytest.approx(
            PSK41_ENTROPY, abs=1e-10)

    def test_rejects_unnormalized(self):
        with pytest.raises(cfsk.NotNormalizedError):
            cfsk.von_neumann_entropy(np.eye(3))

    def test_rejects_indefinite(self):
        with pytest.raises(cfsk.NotPSDError):
            cfsk.von_neumann_entropy(np.diag([1.5, -0.5]))

    def test_unitary_invariance(self):
        rng = np.random.default_rng(99)
        for _ in range(10):
            m = int(rng.integers(2, 17))
            lams = rng.uniform(0, 1, size=m)
            lams /= lams.sum()
            a = np.diag(lams).astype(complex)
            u = random_unitary(rng, m)
            h0 = cfsk.von_neumann_entropy(a)
            h1 = cfsk.von_neumann_entropy(u @ a @ u.conj().T)
            assert h1 == pytest.approx(h0, abs=1e-10)
            assert 0.0 <= h1 <= np.log2(m) + 1e-12


class TestStructureCheck:
    def test_cfsk_is_toeplitz(self):
        check = cfsk.structure_check(cfsk.gram_cfsk(cfsk.CfskParams(6, 1.0, 2.0, 1.5)))
        assert check.is_toeplitz

    def test_psk_is_circulant(self):
        check = cfsk.structure_check(cfsk.gram_psk(cfsk.PskParams(6, 1.5)))
        assert check.is_circulant

    def test_toeplitz_but_not_circulant(self):
        check = cfsk.structure_check(np.array([[1.0, 0.0], [1.0, 1.0]]))
        assert check.is_toeplitz
        assert not check.is_circulant
        assert check.max_circulant_dev == pytest.approx(1.0)

    def test_generic_matrix_fails_both(self):
        check = cfsk.structure_check(np.arange(9.0).reshape(3, 3))
        assert not check.is_toeplitz and not check.is_circulant
