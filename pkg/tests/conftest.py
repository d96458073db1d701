import pytest
from hypothesis import HealthCheck, settings

from stringalg.presentations import bundled, gelfand_ponomarev, kronecker

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def gp3():
    return gelfand_ponomarev(3)


@pytest.fixture(scope="session")
def kron():
    return kronecker()


@pytest.fixture(scope="session")
def gentle4():
    return bundled("gentle4")
