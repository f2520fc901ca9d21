"""Deterministic SVG plots of reparametrizations, paths and stop data.

The unit square is mapped onto the fixed ``0 0 512 512`` viewBox with the
y-axis flipped.  Stop intervals are drawn as shaded vertical bands under the
graph; each linear piece is one ``<line>`` element.  Output depends only on
the input value, so identical inputs give byte-identical SVG.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .document import Document
from .errors import Unrenderable
from .plmap import Reparam
from .stopmap import StopData, stop_data
from .trace import Path, path_stop_data

SIZE = 512
BAND_FILL = "#f3dcb6"
STROKE = "#1f3b73"
STOP_STROKE = "#c0392b"


def _num(x: Fraction) -> str:
    """Round to three decimals without going through floats."""
    scaled = round(Fraction(x) * 1000)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 1000)
    return f"{sign}{whole}.{frac:03d}".rstrip("0").rstrip(".")


def _sx(x: Fraction) -> str:
    return _num(x * SIZE)


def _sy(y: Fraction) -> str:
    return _num((1 - y) * SIZE)


def _line(x0, y0, x1, y1, cls: str, stroke: str, width: int = 2, extra: str = "") -> str:
    return (f'<line class="{cls}" x1="{_sx(x0)}" y1="{_sy(y0)}" x2="{_sx(x1)}" y2="{_sy(y1)}" '
            f'stroke="{stroke}" stroke-width="{width}"{extra}/>')


def _band(lo: Fraction, hi: Fraction) -> str:
    return (f'<rect class="stop-band" x="{_sx(lo)}" y="0" width="{_sx(hi - lo)}" '
            f'height="{SIZE}" fill="{BAND_FILL}"/>')


def _wrap(body: List[str], title: str) -> str:
    head = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" '
        f'width="{SIZE}" height="{SIZE}">',
        f"<title>{title}</title>",
        f'<rect class="frame" x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white" stroke="#999"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _graph(points: List[Tuple[Fraction, Fraction]], bands) -> List[str]:
    body = [_band(j.lo, j.hi) for j in bands]
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        flat = y0 == y1
        body.append(_line(x0, y0, x1, y1, "plateau" if flat else "segment",
                          STOP_STROKE if flat else STROKE, 4 if flat else 2))
    return body


def _fit(values: List[Fraction]) -> Tuple[Fraction, Fraction]:
    """Offset and scale putting ``values`` inside ``[1/16, 15/16]``."""
    lo, hi = min(values), max(values)
    span = hi - lo
    if span == 0:
        return lo - Fraction(1, 2), Fraction(1)
    return lo - span / 14, span * 8 / 7


def render_reparam(f: Reparam) -> str:
    return _wrap(_graph(list(f.points), stop_data(f).intervals), "reparametrization")


def render_stopdata(sd: StopData) -> str:
    body = [_band(j.lo, j.hi) for j in sd.intervals]
    for j, c in sd:
        body.append(_line(0, c, j.lo, c, "pairing", "#777", 1, ' stroke-dasharray="4 4"'))
        body.append(_line(j.lo, c, j.hi, c, "plateau", STOP_STROKE, 4))
        body.append(_line(j.lo, 0, j.hi, 0, "interval-mark", STOP_STROKE, 6))
        body.append(f'<circle class="value-mark" cx="0" cy="{_sy(c)}" r="5" fill="{STOP_STROKE}"/>')
    return _wrap(body, "stop map")


def render_path(p: Path) -> str:
    if p.dim > 2:
        raise Unrenderable(f"cannot plot a path in dimension {p.dim}")
    sd = path_stop_data(p)
    if p.dim == 1:
        off, scale = _fit([x[0] for x in p.points])
        pts = [(t, (x[0] - off) / scale) for t, x in p.breakpoints]
        bands = [] if sd.whole else sd.intervals
        return _wrap(_graph(pts, bands), "path")

    off_x, scale_x = _fit([x[0] for x in p.points])
    off_y, scale_y = _fit([x[1] for x in p.points])
    scale = max(scale_x, scale_y)

    def place(x):
        return (x[0] - off_x) / scale, (x[1] - off_y) / scale

    body = []
    for a, b in zip(p.points, p.points[1:]):
        if a != b:
            body.append(_line(*place(a), *place(b), "segment", STROKE))
    marks = [p.points[0]] if sd.whole else [x for _, x in sd.stops]
    for x in marks:
        px, py = place(x)
        body.append(f'<circle class="stop" cx="{_sx(px)}" cy="{_sy(py)}" r="6" fill="{STOP_STROKE}"/>')
    return _wrap(body, "path")


def render(doc: Document) -> str:
    if doc.kind == "reparam":
        return render_reparam(doc.payload)
    if doc.kind == "stopdata":
        return render_stopdata(doc.payload)
    if doc.kind == "path":
        return render_path(doc.payload)
    raise Unrenderable(f"documents of kind {doc.kind!r} cannot be rendered")
