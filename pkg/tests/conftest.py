import pytest

from slitkit.counterexample import CounterexampleConfig, certify_degenerate


@pytest.fixture(scope="session")
def std_config():
    return CounterexampleConfig(r=0.25, x0=0.8)


@pytest.fixture(scope="session")
def std_certificate(std_config):
    return certify_degenerate(std_config)
