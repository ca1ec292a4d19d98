"""Text, CSV, JSON and SVG views of triangles and pyramid layers."""
from __future__ import annotations

import csv
import io
import json
import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Sequence

from .graded import Mode
from .hyperpyramid import CoefficientTable, LayerSpec, any_layer


def fmt(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def triangle_row(n: int, mode: Mode, dominant=None, truncation=None) -> CoefficientTable:
    return any_layer(LayerSpec(2, n, mode, dominant, truncation))


def row_cells(table: CoefficientTable) -> list[Fraction]:
    """Row entries by increasing correction order (descending power of the leading generator)."""
    keys = table.support() if table.spec.n >= 0 else _negative_row_keys(table.spec)
    return [table[key] for key in keys]


def _negative_row_keys(spec: LayerSpec):
    for j in range(spec.truncation + 1):
        yield (spec.n - j, j) if spec.dominant == 1 else (j, spec.n - j)


def center_lines(rows: Sequence[Sequence[str]]) -> str:
    lines = [" ".join(cells) for cells in rows]
    width = max((len(line) for line in lines), default=0)
    return "".join(line.center(width).rstrip() + "\n" for line in lines)


def rows_to_text(rows: Sequence[Sequence[Fraction]]) -> str:
    return center_lines([[fmt(c) for c in row] for row in rows])


def rows_to_csv(rows: Sequence[Sequence[Fraction]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([fmt(c) for c in row])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[list[Fraction]]:
    return [[parse_fraction(c) for c in row] for row in csv.reader(io.StringIO(text))]


def tables_to_json(tables: Sequence[CoefficientTable]) -> str:
    return json.dumps({"layers": [t.to_dict() for t in tables]}, separators=(",", ":")) + "\n"


def tables_from_json(text: str) -> list[CoefficientTable]:
    return [CoefficientTable.from_dict(d) for d in json.loads(text)["layers"]]


def layer_grid(table: CoefficientTable) -> list[list[Fraction]]:
    """A 3-d layer as rows over the first free generator, cells over the second."""
    spec = table.spec
    if spec.dim != 3:
        raise ValueError("pyramid layers are three-dimensional")
    free = [p for p in (1, 2, 3) if p != (spec.dominant or 1)]
    lead = (spec.dominant or 1) - 1
    size = spec.n if spec.n >= 0 else spec.truncation
    grid = []
    for i in range(size + 1):
        row = []
        for j in range(size + 1 - i):
            key = [0, 0, 0]
            key[free[0] - 1] = i
            key[free[1] - 1] = j
            key[lead] = spec.n - i - j
            row.append(table[tuple(key)])
        grid.append(row)
    return grid


def svg_rows(rows: Sequence[Sequence[Fraction]], title: str = "", cell: int = 36) -> str:
    """Centred rows, one ``<text>`` node per coefficient; zeros drawn grey."""
    width = max((len(r) for r in rows), default=1) * cell + cell
    height = (len(rows) + 1) * cell
    root = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(width),
        "height": str(height),
        "viewBox": f"0 0 {width} {height}",
        "font-family": "monospace",
        "font-size": "14",
        "text-anchor": "middle",
    })
    if title:
        ET.SubElement(root, "title").text = title
    for r, row in enumerate(rows):
        x0 = (width - (len(row) - 1) * cell) / 2
        for c, value in enumerate(row):
            attrs = {"x": f"{x0 + c * cell:g}", "y": f"{(r + 1) * cell:g}"}
            if value == 0:
                attrs["fill"] = "#999999"
            ET.SubElement(root, "text", attrs).text = fmt(value)
    return ET.tostring(root, encoding="unicode") + "\n"
