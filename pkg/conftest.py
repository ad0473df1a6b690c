"""
Shared pytest setup: the --long switch for slow checks and the hypothesis profile.
"""
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile("quick", max_examples=20, deadline=None)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False,
                     help="Also run slow checks (full corpus sweeps, large automorphism groups)")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running check, enabled with --long")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip_slow = pytest.mark.skip(reason="slow check; run with --long")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
