"""Geometric ground truth: grid crossings, billiard reflection, unfolding.

Everything here is exact.  Slopes may be rationals or quadratic surds; all
positions are compared with exact arithmetic, so hitting a lattice point or
a table corner is detected rather than rounded away.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Sequence, Union

from .errors import DomainError, RejectedError, VertexHitError
from .exact import QuadraticSurd, exact_floor, format_number, parse_number
from .words import FiniteWord, PeriodicWord, WordStream, is_valid_cutting_sequence

Number = Union[int, Fraction, QuadraticSurd]

HORIZONTAL = "A"
VERTICAL = "B"
_LETTER_BITS = {HORIZONTAL: "0", VERTICAL: "1"}


class Point(NamedTuple):
    x: Number
    y: Number


@dataclass(frozen=True)
class CrossingEvent:
    """A crossing of grid line ``index``; ``kind`` is A (horizontal) or B (vertical)."""

    kind: str
    index: int
    x: Number
    y: Number
    param: Number

    @property
    def bit(self) -> str:
        return _LETTER_BITS[self.kind]


def as_number(v) -> Number:
    return v if isinstance(v, QuadraticSurd) else Fraction(v)


def _sign(v) -> int:
    if isinstance(v, QuadraticSurd):
        return v.sign()
    return (v > 0) - (v < 0)


def _ceil(v) -> int:
    return -exact_floor(-v)


# torus crossings ------------------------------------------------------------


def crossing_events(slope, intercept) -> Iterator[CrossingEvent]:
    """Grid crossings of ``y = slope*x + intercept`` for ``x > 0``, in order.

    Steps along the vertical lines ``x = k`` and compares the height there
    with the next horizontal line ``y = j`` to decide which comes first.
    """
    s, b = as_number(slope), Fraction(intercept)
    if _sign(s) < 0:
        raise DomainError("negative slopes are not supported")
    if _sign(s) == 0 and b.denominator == 1:
        raise VertexHitError(1, b)
    k = 1
    j = exact_floor(b) + 1
    while True:
        yk = s * k + b
        if yk < j:
            yield CrossingEvent(VERTICAL, k, Fraction(k), yk, Fraction(k))
            k += 1
        elif yk > j:
            x = (j - b) / s
            yield CrossingEvent(HORIZONTAL, j, x, Fraction(j), x)
            j += 1
        else:
            raise VertexHitError(k, j)


def sorted_crossings(slope, intercept, n: int) -> list[CrossingEvent]:
    """The first ``n`` crossings found by listing every line up to ``x = n`` and sorting.

    An independent route to the same events as :func:`crossing_events`.
    """
    s, b = as_number(slope), Fraction(intercept)
    if _sign(s) < 0:
        raise DomainError("negative slopes are not supported")
    # the n vertical lines up to x = n already give n events
    events = [CrossingEvent(VERTICAL, k, Fraction(k), s * k + b, Fraction(k)) for k in range(1, n + 1)]
    if _sign(s) > 0:
        for j in range(exact_floor(b) + 1, exact_floor(s * n + b) + 1):
            x = (j - b) / s
            events.append(CrossingEvent(HORIZONTAL, j, x, Fraction(j), x))
    events.sort(key=lambda e: e.param)
    for e, f in zip(events, events[1:]):
        if e.param == f.param:
            raise VertexHitError(e.x, e.y)
    if _sign(s) == 0 and b.denominator == 1:
        raise VertexHitError(1, b)
    return events[:n]


def torus_cutting_sequence(slope, intercept, n: int) -> FiniteWord:
    """First ``n`` letters of the cutting sequence of a rational-slope line."""
    slope = Fraction(slope)
    events = crossing_events(slope, intercept)
    return FiniteWord("".join(next(events).bit for _ in range(n)), "AB")


def sturmian_stream(slope: QuadraticSurd, intercept) -> WordStream:
    slope = QuadraticSurd.coerce(slope)
    if slope.is_rational() or slope.sign() <= 0:
        raise DomainError("a Sturmian coding needs a positive irrational slope")
    # an irrational slope with rational intercept never meets a lattice point
    return WordStream((e.bit for e in crossing_events(slope, intercept)), "01")


def sturmian_prefix(slope: QuadraticSurd, intercept, n: int) -> FiniteWord:
    """First ``n`` letters (0 = horizontal, 1 = vertical) of an irrational-slope line."""
    return sturmian_stream(slope, intercept).take(n)


def format_event_log(events: Sequence[CrossingEvent]) -> str:
    """One ``index kind x y`` line per event, numbers in exact text form."""
    return "".join(f"{e.index} {e.kind} {format_number(e.x)} {format_number(e.y)}\n" for e in events)


def parse_event_log(text: str) -> list[CrossingEvent]:
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        index, kind, x, y = line.split()
        if kind not in (HORIZONTAL, VERTICAL):
            raise DomainError(f"bad event kind {kind!r}")
        xv, yv = parse_number(x), parse_number(y)
        out.append(CrossingEvent(kind, int(index), xv, yv, xv))
    return out


def line_crossings(origin: Point, direction: tuple) -> Iterator[CrossingEvent]:
    """Grid crossings of ``origin + t*direction`` for ``t > 0``, any direction signs.

    ``param`` is ``t``.  Lines through the origin itself are not reported.
    """
    x0, y0 = origin
    dx, dy = direction
    sx, sy = _sign(dx), _sign(dy)
    if sx == sy == 0:
        raise DomainError("zero direction")
    kv = (exact_floor(x0) + 1 if sx > 0 else _ceil(x0) - 1) if sx else None
    kh = (exact_floor(y0) + 1 if sy > 0 else _ceil(y0) - 1) if sy else None
    while True:
        tv = (kv - x0) / dx if sx else None
        th = (kh - y0) / dy if sy else None
        if tv is not None and th is not None and tv == th:
            raise VertexHitError(kv, kh)
        if th is None or (tv is not None and tv < th):
            yield CrossingEvent(VERTICAL, kv, Fraction(kv), y0 + tv * dy, tv)
            kv += sx
        else:
            yield CrossingEvent(HORIZONTAL, kh, x0 + th * dx, Fraction(kh), th)
            kh += sy


# billiards ------------------------------------------------------------------

EDGE_LETTER = {"top": "A", "bottom": "A", "left": "B", "right": "B"}


@dataclass(frozen=True)
class Bounce:
    point: Point
    edge: str
    time: Number

    @property
    def letter(self) -> str:
        return EDGE_LETTER[self.edge]


@dataclass(frozen=True)
class BilliardPath:
    start: Point
    slope: Optional[Number]
    direction: tuple
    bounces: tuple[Bounce, ...]
    period: Optional[int]

    def edge_word(self, n: Optional[int] = None) -> FiniteWord:
        bounces = self.bounces if n is None else self.bounces[:n]
        return FiniteWord("".join(_LETTER_BITS[b.letter] for b in bounces), "AB")


def billiard_period(slope) -> int:
    """Bounces per period for slope ``p/q``: twice the torus period ``p + q``."""
    s = Fraction(slope)
    if s < 0:
        raise DomainError("negative slopes are not supported")
    return 2 * (s.numerator + s.denominator)


def billiard_path(slope, start, max_bounces: Optional[int] = None) -> BilliardPath:
    """Reflect a ball around the unit square, exactly.

    ``slope=None`` means a vertical strike.  The ball leaves ``start`` moving
    right and up, or back into the table if ``start`` lies on the right or top
    edge.  The period is the first return of (bounce point, direction).
    """
    if slope is None:
        dx, dy = Fraction(0), Fraction(1)
    else:
        slope = as_number(slope)
        if _sign(slope) < 0:
            raise DomainError("negative slopes are not supported")
        dx, dy = Fraction(1), slope
    x, y = (as_number(v) for v in start)
    if not (0 <= x <= 1 and 0 <= y <= 1):
        raise DomainError(f"start {start} lies outside the table")
    if x in (0, 1) and y in (0, 1):
        raise VertexHitError(x, y)
    rational = slope is None or not isinstance(slope, QuadraticSurd)
    if max_bounces is None:
        if not rational:
            raise DomainError("give max_bounces for an irrational slope")
        max_bounces = 8 if slope is None else 2 * billiard_period(slope) + 4
        budgeted = True
    else:
        budgeted = False
    if x == 1 and dx > 0:
        dx = -dx
    if y == 1 and dy > 0:
        dy = -dy
    direction = (dx, dy)
    bounces = []
    seen = {}
    period = None
    t_total = Fraction(0)
    for i in range(max_bounces):
        tx = (1 - x) / dx if _sign(dx) > 0 else (-x / dx if _sign(dx) < 0 else None)
        ty = (1 - y) / dy if _sign(dy) > 0 else (-y / dy if _sign(dy) < 0 else None)
        if tx is not None and ty is not None and tx == ty:
            raise VertexHitError(x + tx * dx, y + tx * dy)
        if ty is None or (tx is not None and tx < ty):
            t = tx
            x, y = Fraction(1 if _sign(dx) > 0 else 0), y + t * dy
            edge = "right" if _sign(dx) > 0 else "left"
            dx = -dx
        else:
            t = ty
            x, y = x + t * dx, Fraction(1 if _sign(dy) > 0 else 0)
            edge = "top" if _sign(dy) > 0 else "bottom"
            dy = -dy
        t_total = t_total + t
        bounces.append(Bounce(Point(x, y), edge, t_total))
        state = (x, y, dx, dy)
        if period is None:
            if state in seen:
                period = i - seen[state]
            else:
                seen[state] = i
    if budgeted and slope is not None:
        assert period is not None, "rational slope without a detected period"
    return BilliardPath(Point(*start), slope, direction, tuple(bounces), period)


@dataclass(frozen=True)
class UnfoldedPath:
    origin: Point
    direction: tuple
    points: tuple[Point, ...]
    crossings: tuple[CrossingEvent, ...]

    def letters(self) -> FiniteWord:
        return FiniteWord("".join(e.bit for e in self.crossings), "AB")


def unfold(path: BilliardPath) -> UnfoldedPath:
    """Straighten a billiard path by reflecting the table at every bounce.

    The bounce points land on the straight line ``origin + t*direction`` at
    the bounce times; the grid lines crossed there are listed independently.
    """
    if not path.bounces:
        raise DomainError("nothing to unfold")
    x0, y0 = as_number(path.start.x), as_number(path.start.y)
    dx, dy = path.direction
    points = tuple(Point(x0 + b.time * dx, y0 + b.time * dy) for b in path.bounces)
    events = line_crossings(Point(x0, y0), (dx, dy))
    crossings = tuple(next(events) for _ in path.bounces)
    return UnfoldedPath(Point(x0, y0), (dx, dy), points, crossings)


def torus_to_billiard(w: PeriodicWord) -> FiniteWord:
    """Edge letters of one billiard period for the torus cutting sequence ``w``.

    Folding the torus back onto the table doubles the period; as letters
    the table path reads ``w`` twice.
    """
    verdict = is_valid_cutting_sequence(w)
    if not verdict:
        raise RejectedError(verdict)
    return FiniteWord(w.period * 2, w.alphabet)


# factor realisation ---------------------------------------------------------


def slope_bounds(word: FiniteWord) -> tuple[Fraction, Optional[Fraction]]:
    """Open slope interval outside which ``word`` cannot occur in any coding.

    Any factor ``v`` of a line coding with density ``beta`` of vertical
    crossings has ``| |v|_1 - beta*|v| | < 1``; intersecting over all factors
    bounds ``beta`` and hence the slope ``(1 - beta)/beta``.  Returns
    ``(low, high)`` with ``high=None`` for unbounded.
    """
    s = word.bits
    lo, hi = Fraction(0), Fraction(1)
    for n in range(1, len(s) + 1):
        for i in range(len(s) - n + 1):
            ones = s[i : i + n].count("1")
            lo = max(lo, Fraction(ones - 1, n))
            hi = min(hi, Fraction(ones + 1, n))
    low = (1 - hi) / hi
    high = None if lo == 0 else (1 - lo) / lo
    return low, high


def realize_factor(word: FiniteWord, max_den: int = 12, intercept_den: int = 97):
    """Smallest-denominator slope, and an intercept, whose line starts with ``word``.

    Searches slopes ``p/q`` with ``q <= max_den`` inside :func:`slope_bounds`
    and intercepts ``i/intercept_den``.  Returns ``None`` when nothing matches.
    """
    low, high = slope_bounds(word)
    n = len(word)
    limit = high if high is not None else low + 8
    for q in range(1, max_den + 1):
        p = exact_floor(low * q)
        while Fraction(p, q) < limit:
            s = Fraction(p, q)
            p += 1
            if s <= low:
                continue
            for i in range(1, intercept_den):
                b = Fraction(i, intercept_den)
                try:
                    if torus_cutting_sequence(s, b, n).bits == word.bits:
                        return s, b
                except VertexHitError:
                    continue
    return None
