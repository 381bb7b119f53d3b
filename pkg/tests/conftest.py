import os

import pytest
from hypothesis import HealthCheck, settings

from ttone import catalog as cat

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], print_blob=True
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def petersen():
    return cat.petersen()


@pytest.fixture
def petersen_coloring_path():
    return os.path.join(DATA, "petersen_6coloring.json")
