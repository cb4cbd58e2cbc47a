import mpmath
import pytest
from hypothesis import HealthCheck, settings

from misc.config import config

settings.register_profile('clausen', max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile('clausen')


@pytest.fixture(autouse=True)
def isolated_artifacts(tmp_path, monkeypatch):
    """Keep reports and certificate caches inside tmp_path and undo CLI overrides of the config."""
    monkeypatch.setattr(config, 'output_dir', tmp_path / 'artifacts')
    monkeypatch.setattr(config, 'cache_dir', tmp_path / 'artifacts' / 'certificates')
    for name in ('tolerance', 'parallelism', 'seed'):
        monkeypatch.setattr(config, name, getattr(config, name))
    yield tmp_path


@pytest.fixture(autouse=True)
def mp_precision():
    mpmath.mp.dps = 30
    yield
    mpmath.mp.dps = 15
