import pytest
from pydantic import ValidationError

from schemas.reports import DiagramCell, DiagramSpec
from services.diagrams import (
    footprint_diagram,
    key_recursion_diagram,
    render_staircase,
    segment_diagram,
    step1_diagram,
    types_diagram,
)
from services.errors import OutOfRangeError


def test_svg_is_deterministic():
    spec = footprint_diagram(9, 2, (5, 3, 1))
    first = render_staircase(spec, "svg")
    assert first == render_staircase(spec, "svg")
    assert first.startswith(b"<svg")


def test_footprint_cells():
    spec = footprint_diagram(9, 2, (5, 3, 1))
    assert [(cell.a, cell.c) for cell in spec.cells] == [(5, 1), (4, 1), (4, 2), (3, 2), (3, 3)]
    assert all(cell.style == "highlight-weight" for cell in spec.cells)


def test_footprint_needs_an_owner():
    with pytest.raises(OutOfRangeError):
        footprint_diagram(3, 2, (0, 1, 2))
    with pytest.raises(OutOfRangeError):
        footprint_diagram(3, 2, (1, 1, 0))


def test_ascii_types():
    text = render_staircase(types_diagram(9), "ascii").decode("utf-8")
    lines = text.splitlines()
    assert lines[0] == "types of {0,1,2}^9"
    rows = lines[1:11]
    assert [len(row) for row in rows] == list(range(1, 11))
    assert sum(len(row) for row in rows) == 55
    # Middle layer a = c is drawn with "="
    assert rows[0] == "."
    assert rows[5][4] == "="
    assert rows[-1][0] == "="


def test_key_recursion_outer_type():
    spec = key_recursion_diagram(13, 2, 6, 3)
    annotated = {(cell.a, cell.c): cell.annotation for cell in spec.cells}
    assert annotated == {(6, 3): "+1", (7, 2): "-1", (7, 3): "-1", (9, 0): "+1", (9, 1): "+1"}


def test_key_recursion_inner_type_adds_cross_terms():
    spec = key_recursion_diagram(8, 3, 3, 2)
    keys = {(cell.a, cell.c) for cell in spec.cells}
    assert (0, 5) in keys and (1, 5) in keys


def test_step1_requires_outer_type():
    assert step1_diagram(8, 2, 4, 1).cells
    with pytest.raises(OutOfRangeError):
        step1_diagram(8, 2, 3, 2)


def test_segment_expansion_uses_higher_figurate_order():
    plain = segment_diagram(6, 2, 2, 1, d=0)
    assert [cell.annotation for cell in plain.cells] == ["+1", "-1", "+1", "-1"]
    expanded = segment_diagram(6, 2, 2, 1, d=0, expanded=True)
    first = next(cell for cell in expanded.cells if (cell.a, cell.c) == (2, 1))
    assert first.annotation == "+1"
    assert expanded.title.endswith("after one expansion, k=2")


def test_unknown_format():
    with pytest.raises(OutOfRangeError):
        render_staircase(types_diagram(3), "png")


def test_spec_rejects_cells_outside_the_simplex():
    with pytest.raises(ValidationError):
        DiagramSpec(n=3, cells=[DiagramCell(a=2, c=2)])
