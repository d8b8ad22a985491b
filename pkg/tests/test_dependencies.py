import argparse

import pytest

from cli.dependencies import UsageError, apply_budget, parse_range, parse_type, render_csv
from config import get_settings
from tasks.pool import fan_out


def test_parse_range():
    assert parse_range("5") == [5]
    assert parse_range("1-4") == [1, 2, 3, 4]
    assert parse_range("2,4,6-8") == [2, 4, 6, 7, 8]
    for bad in ("", "4-2", "a", "1-b"):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_range(bad)


def test_parse_type():
    assert parse_type("5,3,1") == (5, 3, 1)
    with pytest.raises(argparse.ArgumentTypeError):
        parse_type("5,3")
    with pytest.raises(argparse.ArgumentTypeError):
        parse_type("5,-1,1")


def test_apply_budget():
    assert apply_budget(argparse.Namespace(budget=None)) is None
    with pytest.raises(UsageError):
        apply_budget(argparse.Namespace(budget=200, allow_large_budget=False))
    assert apply_budget(argparse.Namespace(budget=200, allow_large_budget=True)) == 200
    settings = get_settings()
    assert settings.vertex_budget == 200
    assert settings.point_budget == 200


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("CHAINFORGE_BUDGET", "300")
    get_settings.cache_clear()
    assert get_settings().vertex_budget == 300


def test_render_csv_uses_crlf():
    text = render_csv({"rows": [{"n": 1, "owner": [1, 0, 0]}]})
    assert text == 'n,owner\r\n1,"[1, 0, 0]"\r\n'


def test_fan_out_keeps_order():
    assert fan_out(abs, [-3, 1, -2], jobs=1) == [3, 1, 2]
    assert fan_out(abs, [-3, 1, -2], jobs=2) == [3, 1, 2]
