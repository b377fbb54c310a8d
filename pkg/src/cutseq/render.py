"""Deterministic SVG figures of billiard, torus and unfolded trajectories.

Coordinates come straight from the exact geometry and are printed with a
fixed 12-digit decimal rounding, so identical specs give identical bytes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError
from .exact import exact_floor, format_number
from .geometry import (
    CrossingEvent,
    Point,
    as_number,
    billiard_path,
    line_crossings,
    realize_factor,
    slope_bounds,
    unfold,
)
from .words import FiniteWord

VIEWS = ("billiard", "torus", "unfolded")
DIGITS = 12

STROKE = "#1f4e9c"
TABLE = "#333333"
GRID = "#bbbbbb"


@dataclass(frozen=True)
class RenderSpec:
    view: str
    slope: object
    start: tuple = (Fraction(0), Fraction(1, 2))
    steps: int = 8
    size: int = 400
    labels: bool = True
    grid: bool = True

    def __post_init__(self):
        if self.view not in VIEWS:
            raise DomainError(f"unknown view {self.view!r}; choose from {', '.join(VIEWS)}")
        if self.steps < 1:
            raise DomainError("steps must be at least 1")
        if self.size <= 0:
            raise DomainError("canvas size must be positive")


def fmt(v, digits: int = DIGITS) -> str:
    """Round an exact number half-up to ``digits`` decimals, trailing zeros dropped."""
    scale = 10**digits
    n = exact_floor(v * scale + Fraction(1, 2))
    sign = "-" if n < 0 else ""
    whole, frac = divmod(abs(n), scale)
    frac_s = f"{frac:0{digits}d}".rstrip("0")
    return f"{sign}{whole}.{frac_s}" if frac_s else f"{sign}{whole}"


class _Canvas:
    def __init__(self, width, height):
        self.width, self.height = width, height
        self.items: list[str] = []

    def line(self, x1, y1, x2, y2, stroke, width="1"):
        self.items.append(
            f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="{width}"/>'
        )

    def polyline(self, pts, stroke, width="2"):
        coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)
        self.items.append(f'<polyline points="{coords}" fill="none" stroke="{stroke}" stroke-width="{width}"/>')

    def rect(self, x, y, w, h, stroke):
        self.items.append(
            f'<rect x="{fmt(x)}" y="{fmt(y)}" width="{fmt(w)}" height="{fmt(h)}" '
            f'fill="none" stroke="{stroke}" stroke-width="2"/>'
        )

    def dot(self, x, y, fill, r="3"):
        self.items.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="{r}" fill="{fill}"/>')

    def text(self, x, y, s, size="14", anchor="middle"):
        s = s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        self.items.append(
            f'<text x="{fmt(x)}" y="{fmt(y)}" font-family="monospace" font-size="{size}" '
            f'text-anchor="{anchor}">{s}</text>'
        )

    def svg(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{fmt(self.width)}" height="{fmt(self.height)}" '
            f'viewBox="0 0 {fmt(self.width)} {fmt(self.height)}">\n'
        )
        return head + "".join(f"  {item}\n" for item in self.items) + "</svg>\n"


def _square(canvas: _Canvas, ox, oy, size, labels: bool):
    canvas.rect(ox, oy, size, size, TABLE)
    if labels:
        mid = Fraction(size, 2)
        canvas.text(ox + mid, oy - 6, "A")
        canvas.text(ox + mid, oy + size + 18, "A")
        canvas.text(ox - 12, oy + mid + 5, "B")
        canvas.text(ox + size + 12, oy + mid + 5, "B")


def _billiard(spec: RenderSpec) -> str:
    size, margin = spec.size, Fraction(spec.size, 10)
    path = billiard_path(spec.slope, spec.start, spec.steps)
    c = _Canvas(size + 2 * margin, size + 3 * margin)
    _square(c, margin, margin, size, spec.labels)
    to_xy = lambda p: (margin + p[0] * size, margin + (1 - p[1]) * size)
    pts = [to_xy(path.start)] + [to_xy(b.point) for b in path.bounces]
    c.polyline(pts, STROKE)
    c.dot(*pts[0], STROKE)
    slope = "vertical" if spec.slope is None else format_number(spec.slope)
    caption = f"billiard slope {slope}, {spec.steps} bounces"
    if path.period is not None:
        caption += f", period {path.period}"
    c.text(margin + Fraction(size, 2), size + 2 * margin + 10, caption, size="12")
    if spec.labels:
        c.text(margin + Fraction(size, 2), size + 2 * margin + 28, "edges: " + str(path.edge_word()), size="12")
    return c.svg()


def _torus_segments(start: Point, events: Sequence[CrossingEvent]):
    """Split the line at each crossing and fold every piece into the unit square."""
    pts = [start] + [Point(e.x, e.y) for e in events]
    for p, q in zip(pts, pts[1:]):
        cx = exact_floor((p.x + q.x) / 2)
        cy = exact_floor((p.y + q.y) / 2)
        yield Point(p.x - cx, p.y - cy), Point(q.x - cx, q.y - cy)


def _draw_torus(events, start, size, labels, caption) -> str:
    margin = Fraction(size, 10)
    c = _Canvas(size + 2 * margin, size + 3 * margin)
    _square(c, margin, margin, size, labels)
    to_xy = lambda p: (margin + p.x * size, margin + (1 - p.y) * size)
    for p, q in _torus_segments(start, events):
        c.line(*to_xy(p), *to_xy(q), STROKE, "2")
    c.dot(*to_xy(start), STROKE)
    c.text(margin + Fraction(size, 2), size + 2 * margin + 10, caption, size="12")
    if labels:
        word = "".join(e.kind for e in events)
        c.text(margin + Fraction(size, 2), size + 2 * margin + 28, "cutting: " + word, size="12")
    return c.svg()


def _torus(spec: RenderSpec) -> str:
    start = Point(*(as_number(v) for v in spec.start))
    direction = (Fraction(0), Fraction(1)) if spec.slope is None else (Fraction(1), spec.slope)
    it = line_crossings(start, direction)
    events = [next(it) for _ in range(spec.steps)]
    slope = "vertical" if spec.slope is None else format_number(spec.slope)
    return _draw_torus(events, start, spec.size, spec.labels, f"torus slope {slope}, {spec.steps} crossings")


def render_event_log(events: Sequence[CrossingEvent], start, size: int = 400, labels: bool = True) -> str:
    """Torus view drawn from a crossing-event log instead of a slope."""
    if not events:
        raise DomainError("empty event log")
    return _draw_torus(list(events), Point(*start), size, labels, f"torus, {len(events)} logged crossings")


def _unfolded(spec: RenderSpec) -> str:
    path = billiard_path(spec.slope, spec.start, spec.steps)
    u = unfold(path)
    pts = [u.origin] + list(u.points)
    x_lo = min(exact_floor(p.x) for p in pts)
    y_lo = min(exact_floor(p.y) for p in pts)
    x_hi = max(-exact_floor(-p.x) for p in pts)
    y_hi = max(-exact_floor(-p.y) for p in pts)
    x_hi, y_hi = max(x_hi, x_lo + 1), max(y_hi, y_lo + 1)
    cells = max(x_hi - x_lo, y_hi - y_lo)
    unit = Fraction(spec.size, cells)
    margin = Fraction(spec.size, 10)
    c = _Canvas(spec.size + 2 * margin, spec.size + 3 * margin)
    to_xy = lambda p: (margin + (p[0] - x_lo) * unit, margin + (y_lo + cells - p[1]) * unit)
    if spec.grid:
        for i in range(x_lo, x_lo + cells + 1):
            c.line(*to_xy((i, y_lo)), *to_xy((i, y_lo + cells)), GRID)
        for j in range(y_lo, y_lo + cells + 1):
            c.line(*to_xy((x_lo, j)), *to_xy((x_lo + cells, j)), GRID)
    c.rect(*to_xy((0, 1)), unit, unit, TABLE)
    c.polyline([to_xy(p) for p in pts], STROKE)
    for e in u.crossings:
        c.dot(*to_xy((e.x, e.y)), STROKE)
        if spec.labels:
            x, y = to_xy((e.x, e.y))
            c.text(x + 8, y - 6, e.kind, size="11", anchor="start")
    slope = "vertical" if spec.slope is None else format_number(spec.slope)
    caption = f"unfolded slope {slope}, {spec.steps} crossings: {u.letters()}"
    c.text(margin + Fraction(spec.size, 2), spec.size + 2 * margin + 10, caption, size="12")
    return c.svg()


def render_svg(spec: RenderSpec) -> str:
    """Render one view; raises before producing output if the trajectory hits a vertex."""
    if spec.view == "billiard":
        return _billiard(spec)
    if spec.view == "torus":
        return _torus(spec)
    return _unfolded(spec)


def _interval_text(low, high: Optional[Fraction]) -> str:
    return f"slope in ({low}, {'inf' if high is None else high})"


def render_word_pair(words: Sequence[FiniteWord], size: int = 300, labels: bool = True) -> str:
    """Side-by-side table panels, each drawing a trajectory segment that reads one word.

    Each caption gives the open slope interval forced by the word, which is
    how a pair such as 10101 / 00100 is shown never to share a trajectory.
    """
    margin = Fraction(size, 10)
    panel = size + 2 * margin
    c = _Canvas(panel * len(words), size + 4 * margin)
    for i, word in enumerate(words):
        found = realize_factor(word)
        if found is None:
            raise DomainError(f"no short trajectory reads {word}")
        slope, intercept = found
        path = billiard_path(slope, (Fraction(0), intercept), len(word))
        ox = panel * i + margin
        _square(c, ox, margin, size, labels)
        to_xy = lambda p, ox=ox: (ox + p[0] * size, margin + (1 - p[1]) * size)
        pts = [to_xy(path.start)] + [to_xy(b.point) for b in path.bounces]
        c.polyline(pts, STROKE)
        c.dot(*pts[0], STROKE)
        low, high = slope_bounds(word)
        mid = ox + Fraction(size, 2)
        c.text(mid, size + 2 * margin + 10, f"{word.in_alphabet('01')}  drawn at slope {slope}", size="12")
        c.text(mid, size + 2 * margin + 28, _interval_text(low, high), size="12")
    return c.svg()
