"""
CSV and SVG writers

CSV: header row first, LF line endings, '.' decimal point, floats at 12
significant digits. SVG: Re zeta = 0 curves solid, Im zeta = 0 curves dotted,
a frame around the region and the line re(s) = 1/2 as a reference rule.
"""

import csv
import io
import re
from typing import Any, List, Sequence, Tuple

from bs4 import BeautifulSoup

from zetabench.errors import ArityError
from zetabench.records import GridField, Polyline, KIND_RE_ZERO, KIND_IM_ZERO
from zetabench.utils.format_util import format_number

SVG_WIDTH = 640
SVG_HEIGHT = 480
SVG_MARGIN = 40

INT_RE = re.compile(r'^-?\d+$')

CURVE_STYLE = {
    KIND_RE_ZERO: {"stroke": "#1f3b73", "stroke-width": "1.5"},
    KIND_IM_ZERO: {"stroke": "#a23b2a", "stroke-width": "1.5", "stroke-dasharray": "2,3"},
}


def emit_csv(rows: Sequence[Sequence[Any]], header: Sequence[str]) -> bytes:
    """
    Render rows under a header
    :param rows: each row as long as the header
    :param header: column names
    :return: UTF-8 bytes
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row_no, row in enumerate(rows, start=1):
        if len(row) != len(header):
            raise ArityError(f"row {row_no} has {len(row)} cells, header has {len(header)}")
        writer.writerow([format_number(cell) for cell in row])
    return buffer.getvalue().encode('utf-8')


def _parse_cell(cell: str) -> Any:
    if cell == '':
        return ''
    if INT_RE.match(cell):
        return int(cell)
    try:
        return float(cell)
    except ValueError:
        return cell


def parse_csv(data: bytes) -> Tuple[List[str], List[List[Any]]]:
    """
    Read back what emit_csv wrote
    :param data:
    :return: (header, rows) with numeric cells converted
    """
    lines = list(csv.reader(io.StringIO(data.decode('utf-8'))))
    if not lines:
        return [], []
    header = lines[0]
    rows = []
    for line_no, cells in enumerate(lines[1:], start=2):
        if len(cells) != len(header):
            raise ArityError(f"line {line_no} has {len(cells)} cells, header has {len(header)}")
        rows.append([_parse_cell(c) for c in cells])
    return header, rows


class _Frame:
    """Affine map from the field region to SVG pixels, y pointing up"""
    def __init__(self, field: GridField):
        self.x_min = field.x_min
        self.y_min = field.y_min
        self.x_span = (field.x_max - field.x_min) or 1.0
        self.y_span = (field.y_max - field.y_min) or 1.0
        self.inner_w = SVG_WIDTH - 2 * SVG_MARGIN
        self.inner_h = SVG_HEIGHT - 2 * SVG_MARGIN

    def px(self, x: float) -> str:
        return '%.3f' % (SVG_MARGIN + (x - self.x_min) / self.x_span * self.inner_w)

    def py(self, y: float) -> str:
        return '%.3f' % (SVG_HEIGHT - SVG_MARGIN - (y - self.y_min) / self.y_span * self.inner_h)


def emit_svg(field: GridField, curves: Sequence[Polyline]) -> bytes:
    """
    Draw zero curves over the field's region
    :param field:
    :param curves: output of extract_zero_curves
    :return: SVG 1.1 document as UTF-8 bytes
    """
    soup = BeautifulSoup('', 'xml')
    frame = _Frame(field)
    svg = soup.new_tag('svg', attrs={
        "xmlns": "http://www.w3.org/2000/svg",
        "version": "1.1",
        "width": str(SVG_WIDTH),
        "height": str(SVG_HEIGHT),
        "viewBox": f"0 0 {SVG_WIDTH} {SVG_HEIGHT}",
    })
    soup.append(svg)

    svg.append(soup.new_tag('rect', attrs={
        "class": "frame",
        "x": str(SVG_MARGIN),
        "y": str(SVG_MARGIN),
        "width": str(frame.inner_w),
        "height": str(frame.inner_h),
        "fill": "none",
        "stroke": "black",
    }))
    if field.x_min <= 0.5 <= field.x_max:
        svg.append(soup.new_tag('line', attrs={
            "class": "critical-line",
            "x1": frame.px(0.5),
            "y1": frame.py(field.y_min),
            "x2": frame.px(0.5),
            "y2": frame.py(field.y_max),
            "stroke": "gray",
            "stroke-width": "0.75",
        }))

    for x, anchor in ((field.x_min, "start"), (field.x_max, "end")):
        label = soup.new_tag('text', attrs={"x": frame.px(x), "y": str(SVG_HEIGHT - SVG_MARGIN // 3),
                                            "text-anchor": anchor, "font-size": "11"})
        label.string = format_number(x)
        svg.append(label)
    for y in (field.y_min, field.y_max):
        label = soup.new_tag('text', attrs={"x": str(SVG_MARGIN - 4), "y": frame.py(y),
                                            "text-anchor": "end", "font-size": "11"})
        label.string = format_number(y)
        svg.append(label)

    for curve in curves:
        if len(curve.points) < 2:
            continue
        d = ' '.join(
            ('M' if n == 0 else 'L') + f' {frame.px(x)} {frame.py(y)}'
            for n, (x, y) in enumerate(curve.points)
        )
        attrs = {"class": curve.kind, "d": d, "fill": "none"}
        attrs.update(CURVE_STYLE[curve.kind])
        svg.append(soup.new_tag('path', attrs=attrs))

    return str(soup).encode('utf-8')
