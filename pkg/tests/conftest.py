"""
Shared fixtures for the chainforge test suite
"""
import pytest

from config import get_settings
from services.closed_forms import F_eval, U_eval


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test sees default settings, whatever the environment or a previous --budget says"""
    monkeypatch.delenv("CHAINFORGE_BUDGET", raising=False)
    get_settings.cache_clear()
    yield get_settings()
    get_settings.cache_clear()


@pytest.fixture
def clear_closed_form_caches():
    U_eval.cache_clear()
    F_eval.cache_clear()
    yield
    U_eval.cache_clear()
    F_eval.cache_clear()
