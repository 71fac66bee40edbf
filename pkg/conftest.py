"""
Shared fixtures: the bundled example divisors and seeded generators.
"""

import numpy as np
import pytest

from config.settings import settings
from src.algebra.weights import WeightVector
from src.cli.polynomial_parser import parse_polynomial
from src.logarithmic.adapted_basis import adapted_basis


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: end-to-end runs over the larger examples")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def cusp():
    f = parse_polynomial("x^3 - y^2", ["x", "y"])
    return f, WeightVector.of("1/3", "1/2")


@pytest.fixture(scope="session")
def cusp_basis(cusp):
    f, w = cusp
    return adapted_basis(f, w)


@pytest.fixture(scope="session")
def xy_basis():
    f = parse_polynomial("x*y", ["x", "y"])
    return adapted_basis(f, WeightVector.of("1/2", "1/2"))


@pytest.fixture(scope="session")
def xyz_basis():
    f = parse_polynomial("x*y*z", ["x", "y", "z"])
    return adapted_basis(f, WeightVector.of("1/3", "1/3", "1/3"))


@pytest.fixture
def isolated_dirs(tmp_path, monkeypatch):
    """Point logs and reports at a temporary directory."""
    monkeypatch.setattr(settings, "LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setattr(settings, "OUTPUT_DIR", str(tmp_path / "output"))
    return tmp_path


@pytest.fixture(scope="session")
def lwqh_basis():
    f = parse_polynomial("x*y*(x+y)*(x*z+y)", ["x", "y", "z"])
    return adapted_basis(f, WeightVector.of("1/4", "1/4", 0))
