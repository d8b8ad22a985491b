from decimal import Decimal, localcontext

import pytest

from services.asymptotics import asymptotics
from services.errors import OutOfRangeError


def test_k1_is_exact():
    report = asymptotics(1, [3])
    row = report.rows[0]
    assert report.limit == "1/3"
    assert (row.candidate, row.ratio) == (9, "1/3")
    assert Decimal(row.deviation) == 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_n100_is_close(k):
    report = asymptotics(k, [100])
    assert Decimal(report.rows[0].deviation) < Decimal("1e-10")


def test_deviation_decreases():
    report = asymptotics(2, [10, 100])
    assert report.decreasing
    assert report.limit == "1/5"


def test_n10_k2_value():
    row = asymptotics(2, [10]).rows[0]
    assert row.candidate == 11859
    assert row.ratio == "3953/19683"


def test_deviation_carries_thirty_digits():
    row = asymptotics(2, [10]).rows[0]
    mantissa = row.deviation.split("E")[0]
    assert len(mantissa.split(".")[1]) == 30
    with localcontext() as ctx:
        ctx.prec = 50
        exact = Decimal(82) / Decimal(98415)
        assert abs(Decimal(row.deviation) - exact) <= Decimal("1e-34")


def test_range_limits():
    with pytest.raises(OutOfRangeError):
        asymptotics(2, [2001])
    with pytest.raises(OutOfRangeError):
        asymptotics(0, [5])
