import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

# Ensure the repository root is on sys.path so `import backend` and `import shared` work
ROOT = Path(__file__).resolve().parents[1]
root_str = str(ROOT)
if root_str not in sys.path:
    sys.path.insert(0, root_str)

from backend.core.catalog import h4, mq2, sweedler  # noqa: E402
from backend.core.exactfield import RootOfUnityLevel  # noqa: E402


# ---------------------------------------------------------------------------
# Hypothesis profiles
# ---------------------------------------------------------------------------

hypothesis_settings.register_profile("default", max_examples=200, deadline=None)
hypothesis_settings.register_profile(
    "acceptance", max_examples=10_000, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
hypothesis_settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--acceptance", action="store_true", default=False,
                     help="Run property suites with the acceptance profile")


def pytest_configure(config):
    if config.getoption("--acceptance"):
        hypothesis_settings.load_profile("acceptance")


# ---------------------------------------------------------------------------
# Catalog fixtures
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def level3() -> RootOfUnityLevel:
    return RootOfUnityLevel(3)


@pytest.fixture(scope="session")
def sweedler_pair():
    """Sweedler's algebra W with α = 1 and its r-form."""
    return sweedler(1)


@pytest.fixture(scope="session")
def sweedler_algebra(sweedler_pair):
    return sweedler_pair[0]


@pytest.fixture(scope="session")
def h4_algebra():
    return h4()


@pytest.fixture(scope="session")
def mq2_parts():
    """(M_q(2), its r-form, det_q) at level 3, cutoff 3."""
    return mq2(3, 3)
