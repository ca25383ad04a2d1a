"""Holevo rates, mode efficiency, and the capacity baseline."""

import numpy as np
import pytest

import cfsk

# pinned from the oracle
PSK41_CHI = 1.757958364461181
PSK81_CHI = 1.882313995047149
BINARY_CHI = 0.9867474300396563  # M=2 antipodal at one photon total
CFSK4_CHI = 1.803135525887756    # gram_cfsk(4, pi/2, pi, 1)
DCFSK4_CHI = 1.785403281438500   # matched discrete version, same budget
CAPACITY_01 = 0.4834466856136646


class TestHolevoRate:
    def test_identical_states_carry_nothing(self):
        assert cfsk.holevo_rate(np.ones((4, 4))) == pytest.approx(0.0, abs=1e-12)

    def test_orthogonal_states(self):
        assert cfsk.holevo_rate(np.eye(4)) == pytest.approx(2.0, abs=1e-12)

    def test_pinned_psk(self):
        gram = cfsk.gram_psk(cfsk.PskParams(4, 1.0))
        assert cfsk.holevo_rate(gram) == pytest.approx(PSK41_CHI, abs=1e-10)

    def test_pinned_cfsk_and_dcfsk(self):
        gram = cfsk.gram_cfsk(cfsk.CfskParams(4, np.pi / 2, np.pi, 1.0))
        assert cfsk.holevo_rate(gram) == pytest.approx(CFSK4_CHI, abs=1e-10)
        expansion = cfsk.fourier_coefficients(4, 1, np.pi)
        dgram = cfsk.gram_dcfsk(cfsk.DcfskParams(4, 1, np.pi / 2, np.pi, 1.0), expansion)
        assert cfsk.holevo_rate(dgram) == pytest.approx(DCFSK4_CHI, abs=1e-10)

    def test_monotone_in_energy(self):
        chis = [
            cfsk.holevo_rate(cfsk.gram_cfsk(cfsk.CfskParams(4, 0.9, 2.5, a2)))
            for a2 in np.linspace(0.0, 10.0, 20)
        ]
        assert chis[0] == pytest.approx(0.0, abs=1e-12)
        assert all(b >= a - 1e-12 for a, b in zip(chis, chis[1:]))

    def test_saturates_at_log2_m(self):
        assert cfsk.holevo_rate(cfsk.gram_psk(cfsk.PskParams(4, 50.0))) == pytest.approx(
            2.0, abs=1e-8)


class TestCapacity:
    def test_zero_limit(self):
        assert cfsk.capacity(0.0) == 0.0

    def test_one_photon(self):
        assert cfsk.capacity(1.0) == 2.0

    def test_pinned_fraction(self):
        assert cfsk.capacity(0.1) == pytest.approx(CAPACITY_01, abs=1e-10)

    def test_negative_rejected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            cfsk.capacity(-0.5)

    def test_strictly_increasing(self):
        grid = np.geomspace(1e-4, 100.0, 60)
        values = [cfsk.capacity(n) for n in grid]
        assert all(b > a for a, b in zip(values, values[1:]))


class TestRatePsk:
    def test_zero_energy(self):
        report = cfsk.rate_psk(4, 0.0)
        assert report.holevo_bits == 0.0
        assert report.rate_per_mode == 0.0
        assert report.ratio is None

    def test_binary_orthogonal_limit(self):
        report = cfsk.rate_psk(2, 20.0)
        assert report.holevo_bits == pytest.approx(1.0, abs=1e-10)

    def test_pinned_m8(self):
        report = cfsk.rate_psk(8, 1.0)
        assert report.holevo_bits == pytest.approx(PSK81_CHI, abs=1e-10)
        assert report.modes == 1
        assert report.rate_per_mode == report.holevo_bits
        assert report.capacity == 2.0
        assert report.ratio == pytest.approx(PSK81_CHI / 2.0, abs=1e-10)


class TestRateCfsk:
    def test_zero_energy(self):
        assert cfsk.rate_cfsk(4, 1.0, 2.0, 0.0).rate_per_mode == 0.0

    def test_binary_antipodal(self):
        report = cfsk.rate_cfsk(2, np.pi, 0.0, 0.5)
        assert report.total_photons == 1.0
        assert report.modes == 2
        assert report.holevo_bits == pytest.approx(BINARY_CHI, abs=1e-10)
        assert report.rate_per_mode == pytest.approx(BINARY_CHI / 2, abs=1e-10)

    def test_bookkeeping_consistency(self):
        report = cfsk.rate_cfsk(4, 0.97, 4.35, 0.8)
        assert report.rate_per_mode == report.holevo_bits / report.modes
        assert report.total_photons == report.modes * report.photons_per_mode
        gram = cfsk.gram_cfsk(cfsk.CfskParams(4, 0.97, 4.35, 3.2))
        assert report.holevo_bits == pytest.approx(cfsk.holevo_rate(gram), abs=1e-14)


class TestRateDcfsk:
    def test_zero_energy(self):
        assert cfsk.rate_dcfsk(4, 1, 0.3, np.pi, 0.0).rate_per_mode == 0.0

    def test_single_mode_reduction_equals_psk(self):
        for m, n in [(2, 0.3), (4, 1.1), (8, 0.6)]:
            dis = cfsk.rate_dcfsk(
                m, 0, 0.0, 0.0, n,
                phase_offset_mode=cfsk.PhaseOffsetMode.EXPLICIT,
                explicit_phase_step=2 * np.pi / m,
            )
            psk = cfsk.rate_psk(m, n)
            assert dis.modes == 1
            assert dis.holevo_bits == pytest.approx(psk.holevo_bits, abs=1e-12)

    def test_mode_accounting(self):
        expansion = cfsk.fourier_coefficients(4, 1, np.pi)
        report = cfsk.rate_dcfsk(4, 1, np.pi / 2, np.pi, 1 / 3, expansion=expansion)
        assert report.modes == 3
        assert report.total_photons == pytest.approx(1.0)
        assert report.holevo_bits == pytest.approx(DCFSK4_CHI, abs=1e-10)

    def test_negative_coefficient_propagates(self):
        with pytest.raises(cfsk.NegativeCoefficientError):
            cfsk.rate_dcfsk(4, 2, 0.0, 3 * np.pi / 5, 0.5)


class TestRateCeiling:
    def test_rate_never_beats_capacity(self):
        reports = []
        for n in np.geomspace(0.02, 8.0, 12):
            reports.append(cfsk.rate_psk(2, n))
            reports.append(cfsk.rate_psk(16, n))
            reports.append(cfsk.rate_cfsk(4, 0.97, 4.35, n))
            reports.append(cfsk.rate_dcfsk(4, 1, np.pi / 4, np.pi, n))
        for report in reports:
            assert report.rate_per_mode <= report.capacity + 1e-9
