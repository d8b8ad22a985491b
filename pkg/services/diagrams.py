"""
Staircase diagrams of the types of {0,1,2}^n

Type (a, b, c) is drawn at column c of row n - a, so the all-zeros type sits
in the top-left corner and the middle layer (a = c) runs down the diagonal.
"""
from typing import Dict, List, Literal, Optional, Tuple
import logging

import svgwrite

from schemas.reports import CellStyle, DiagramCell, DiagramSpec
from services.chains import enumerate_chain_groups, footprint_keys
from services.closed_forms import figurate
from services.errors import OutOfRangeError

logger = logging.getLogger(__name__)

DiagramFormat = Literal["svg", "ascii"]

GRID_PITCH = 26
GRID_SQUARE = 24
GRID_BORDERS = {"top": 30, "left": 10, "bottom": 10, "right": 10}

FILLS = {
    "plain": "#ffffff",
    "middle": "#dddddd",
    "highlight-size": "#9db7e0",
    "highlight-weight": "#f0c36d",
}
ASCII_MARKS = {"plain": ".", "middle": "=", "highlight-size": "#", "highlight-weight": "*"}


def grid_size(n: int) -> Tuple[int, int]:
    width = GRID_BORDERS["left"] + GRID_PITCH * n + GRID_SQUARE + GRID_BORDERS["right"]
    height = GRID_BORDERS["top"] + GRID_PITCH * n + GRID_SQUARE + GRID_BORDERS["bottom"]
    return width, height


def _cell_map(spec: DiagramSpec) -> Dict[Tuple[int, int], DiagramCell]:
    # Later cells win, annotations accumulate
    cells: Dict[Tuple[int, int], DiagramCell] = {}
    for cell in spec.cells:
        key = (cell.a, cell.c)
        if key in cells and cells[key].annotation and cell.annotation:
            merged = f"{cells[key].annotation}{cell.annotation}"
            cells[key] = cell.model_copy(update={"annotation": merged})
        else:
            cells[key] = cell
    return cells


def _fill(a: int, c: int, cell: Optional[DiagramCell]) -> str:
    if cell is not None and cell.style != "plain":
        return FILLS[cell.style]
    return FILLS["middle"] if a == c else FILLS["plain"]


def _render_svg(spec: DiagramSpec) -> bytes:
    n = spec.n
    cells = _cell_map(spec)
    width, height = grid_size(n)
    image = svgwrite.Drawing(size=(f"{width}px", f"{height}px"), profile="full", debug=False)
    image.add(image.rect((0, 0), (width, height), fill="white"))
    if spec.title:
        image.add(image.text(spec.title, insert=(GRID_BORDERS["left"], 18), font_size="12px", font_family="monospace"))

    for a in range(n, -1, -1):
        for c in range(0, n - a + 1):
            left = GRID_BORDERS["left"] + c * GRID_PITCH
            top = GRID_BORDERS["top"] + (n - a) * GRID_PITCH
            cell = cells.get((a, c))
            image.add(
                image.rect(
                    insert=(left, top),
                    size=(GRID_SQUARE, GRID_SQUARE),
                    fill=_fill(a, c, cell),
                    stroke="#444444",
                    stroke_width=1,
                )
            )
            if cell is not None and cell.annotation:
                image.add(
                    image.text(
                        cell.annotation,
                        insert=(left + GRID_SQUARE / 2, top + GRID_SQUARE * 0.65),
                        font_size="9px",
                        font_family="monospace",
                        text_anchor="middle",
                    )
                )
    return image.tostring().encode("utf-8")


def _render_ascii(spec: DiagramSpec) -> bytes:
    n = spec.n
    cells = _cell_map(spec)
    lines: List[str] = []
    if spec.title:
        lines.append(spec.title)
    annotated = []
    for a in range(n, -1, -1):
        row = []
        for c in range(0, n - a + 1):
            cell = cells.get((a, c))
            if cell is not None and cell.annotation and len(cell.annotation) == 1:
                row.append(cell.annotation)
            elif cell is not None and cell.style != "plain":
                row.append(ASCII_MARKS[cell.style])
            else:
                row.append(ASCII_MARKS["middle"] if a == c else ASCII_MARKS["plain"])
            if cell is not None and cell.annotation and len(cell.annotation) > 1:
                annotated.append(f"  ({a},{n - a - c},{c}): {cell.annotation}")
        lines.append("".join(row))
    lines.append("")
    lines.append("legend: . type  = middle layer  # size term  * weight term")
    lines.extend(annotated)
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_staircase(spec: DiagramSpec, fmt: DiagramFormat = "svg") -> bytes:
    """Render a staircase diagram; identical specs give identical bytes"""
    logger.debug(f"Rendering {fmt} staircase for n={spec.n} with {len(spec.cells)} marked cells")
    if fmt == "svg":
        return _render_svg(spec)
    if fmt == "ascii":
        return _render_ascii(spec)
    raise OutOfRangeError(f"unknown diagram format {fmt!r}")


def _signed(value: int) -> str:
    return f"+{value}" if value > 0 else str(value)


def _in_simplex(n: int, a: int, c: int) -> bool:
    return a >= 0 and c >= 0 and a + c <= n


def _term(cells: List[DiagramCell], n: int, a: int, c: int, style: CellStyle, coefficient: int) -> None:
    if coefficient and _in_simplex(n, a, c):
        cells.append(DiagramCell(a=a, c=c, style=style, annotation=_signed(coefficient)))


def _row_terms(cells, n, d, a, c, style, sign) -> None:
    # Figurate-weighted alternating row starting at (a, c)
    for i in range(max(a, 0), n - c + 1):
        _term(cells, n, i, c, style, sign * figurate(d, i - a + 1) * (-1) ** (i - a))


def types_diagram(n: int) -> DiagramSpec:
    """All types, middle layer shaded"""
    return DiagramSpec(n=n, title=f"types of {{0,1,2}}^{n}")


def footprint_diagram(n: int, k: int, owner: Tuple[int, int, int]) -> DiagramSpec:
    """
    Types visited by the chain group of owner

    Raises:
        OutOfRangeError: if owner does not own a group for this k
    """
    a, b, c = owner
    if a + b + c != n:
        raise OutOfRangeError(f"{list(owner)} is not a type of n={n}")
    for g in enumerate_chain_groups(n, 2, k):
        if g.key == (a, c):
            cells = [DiagramCell(a=x, c=z, style="highlight-weight") for x, z in footprint_keys(g)]
            return DiagramSpec(n=n, k=k, title=f"footprint of {list(owner)}, k={k}", cells=cells)
    raise OutOfRangeError(f"{list(owner)} owns no chain group for k={k}")


def key_recursion_diagram(n: int, k: int, a: int, c: int) -> DiagramSpec:
    """Contributions to W(a, c) in the key recursion of a lower type"""
    if not (_in_simplex(n, a, c) and a >= c):
        raise OutOfRangeError(f"({a}, {c}) is not a lower type of n={n}")
    cells: List[DiagramCell] = []
    _term(cells, n, a, c, "highlight-size", 1)
    _term(cells, n, a + 1, c - 1, "highlight-size", -1)
    _term(cells, n, a + 1, c, "highlight-weight", -1)
    _term(cells, n, a + 1 + k, c - 1 - k, "highlight-weight", 1)
    _term(cells, n, a + 1 + k, c - k, "highlight-weight", 1)
    if a - c < k:
        _term(cells, n, a - k, c + k, "highlight-weight", -1)
        if a - c < k - 1:
            _term(cells, n, a - k + 1, c + k, "highlight-weight", -1)
    return DiagramSpec(n=n, k=k, title=f"key recursion for W({a},{c}), k={k}", cells=cells)


def step1_diagram(n: int, k: int, a: int, c: int) -> DiagramSpec:
    """The key recursion unfolded along the row of an outer lower type"""
    if not (_in_simplex(n, a, c) and a - c >= k):
        raise OutOfRangeError(f"({a}, {c}) is not an outer lower type for k={k}")
    cells: List[DiagramCell] = []
    _row_terms(cells, n, 0, a, c, "highlight-size", 1)
    _row_terms(cells, n, 0, a + 1, c - 1, "highlight-size", -1)
    _row_terms(cells, n, 0, a + 1 + k, c - 1 - k, "highlight-weight", 1)
    _row_terms(cells, n, 0, a + 1 + k, c - k, "highlight-weight", 1)
    return DiagramSpec(n=n, k=k, title=f"unfolded recursion for W({a},{c}), k={k}", cells=cells)


def segment_diagram(n: int, k: int, a: int, c: int, d: int = 0, expanded: bool = False) -> DiagramSpec:
    """
    Multiplicities of the weight segment R(d, a, c)

    With expanded=True the segment is replaced by one application of the
    row recursion: size rows with figurate order d+1 and two shifted weight
    segments.
    """
    if not _in_simplex(n, a, c):
        raise OutOfRangeError(f"({a}, {c}) is not a type of n={n}")
    cells: List[DiagramCell] = []
    if not expanded:
        _row_terms(cells, n, d, a, c, "highlight-weight", 1)
        title = f"R({d},{a},{c}), k={k}"
    else:
        _row_terms(cells, n, d + 1, a, c, "highlight-size", 1)
        _row_terms(cells, n, d + 1, a + 1, c - 1, "highlight-size", -1)
        _row_terms(cells, n, d + 1, a + 1 + k, c - 1 - k, "highlight-weight", 1)
        _row_terms(cells, n, d + 1, a + 1 + k, c - k, "highlight-weight", 1)
        title = f"R({d},{a},{c}) after one expansion, k={k}"
    return DiagramSpec(n=n, k=k, title=title, cells=cells)
