import time

import pytest

from relboost import BoostModel, SweepRequest, build_matrix, run_sweep

MODELS = (BoostModel.ZERO_RM, BoostModel.NON_ZERO_RM1, BoostModel.NON_ZERO_RM2)
GAMMAS = (1.0, 5.0, 20.0, 100.0, 200.0, 2000.0, 10000.0)


@pytest.fixture(scope="session")
def table_sweep():
    """All 21 (model, gamma) metric points at lmax=20, plus the wall time."""
    request = SweepRequest(models=MODELS, gamma_grid=GAMMAS, lmax=20)
    start = time.perf_counter()
    result = run_sweep(request)
    elapsed = time.perf_counter() - start
    assert not result.failures, result.failures
    return result, elapsed


@pytest.fixture(scope="session")
def matrices20():
    """Amplitude matrices for every (model, gamma) pair at lmax=20."""
    return {
        (model, g): build_matrix(model, g, 20)
        for model in MODELS
        for g in GAMMAS
    }
