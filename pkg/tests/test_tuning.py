"""Grid search over the keying angles."""

import numpy as np
import pytest

import cfsk
from cfsk.tuning import Objective


class TestGridOptimize:
    def test_rejects_tiny_resolution(self):
        with pytest.raises(ValueError, match="resolution"):
            cfsk.grid_optimize(4, 1.0, resolution=4)

    def test_deterministic(self):
        a = cfsk.grid_optimize(4, 1.5, resolution=16)
        b = cfsk.grid_optimize(4, 1.5, resolution=16)
        assert a == b

    def test_binary_alphabet_reaches_helstrom_value(self):
        """Antipodal phases at zero frequency step are a global optimum."""
        result = cfsk.grid_optimize(2, 1.0, resolution=16)
        target = cfsk.helstrom_binary(np.exp(-2.0))
        assert result.objective_value == pytest.approx(target, abs=1e-9)

    def test_objective_reproduces_at_optimum(self):
        result = cfsk.grid_optimize(4, 2.0, resolution=16)
        gram = cfsk.gram_cfsk(cfsk.CfskParams(
            4, result.best_delta_theta, result.best_delta_omega_t, 2.0))
        value, _ = cfsk.srm_success(gram)
        assert abs(value - result.objective_value) <= 1e-12

    def test_angles_stay_in_range(self):
        result = cfsk.grid_optimize(4, 1.0, resolution=16)
        assert 0.0 <= result.best_delta_theta < 2 * np.pi
        assert 0.0 <= result.best_delta_omega_t < 2 * np.pi
        assert result.grid_resolution == 16
        assert 1 <= result.refinement_iterations <= 100

    def test_finer_grid_does_not_lose(self):
        coarse = cfsk.grid_optimize(4, 2.0, resolution=8)
        fine = cfsk.grid_optimize(4, 2.0, resolution=32)
        assert fine.objective_value >= coarse.objective_value - 1e-12

    def test_beats_psk_at_equal_budget(self):
        """Frequency freedom can only improve on the phase-only alphabet."""
        result = cfsk.grid_optimize(4, 2.0, resolution=32)
        psk_value, _ = cfsk.srm_success(cfsk.gram_psk(cfsk.PskParams(4, 2.0)))
        assert result.objective_value >= psk_value

    def test_other_objectives_run(self):
        chi = cfsk.grid_optimize(4, 1.0, objective=Objective.HOLEVO_RATE, resolution=8)
        assert 0.0 < chi.objective_value <= 2.0 + 1e-12
        assert chi.objective_kind is Objective.HOLEVO_RATE
        bound = cfsk.grid_optimize(4, 1.0, objective=Objective.UPPER_BOUND, resolution=8)
        assert 0.0 < bound.objective_value <= 1.0
        assert bound.objective_kind is Objective.UPPER_BOUND


def test_tuned_params_wrapper():
    params = cfsk.tuned_cfsk_params(4, 1.5, resolution=16)
    result = cfsk.grid_optimize(4, 1.5, resolution=16)
    assert params.M == 4
    assert params.total_photons == 1.5
    assert params.delta_theta == result.best_delta_theta
    assert params.delta_omega_t == result.best_delta_omega_t
