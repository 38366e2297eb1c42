import numpy as np
import pytest

import uncertainty_lab as ul


@pytest.fixture(scope="session")
def l3() -> ul.Observable:
    return ul.su3_lambda(3)


@pytest.fixture(scope="session")
def l4() -> ul.Observable:
    return ul.su3_lambda(4)


@pytest.fixture(scope="session")
def l5() -> ul.Observable:
    return ul.su3_lambda(5)


@pytest.fixture(scope="session")
def phi2() -> ul.StateVector:
    return ul.uniform_superposition(3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
