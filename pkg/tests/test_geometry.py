from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from cutseq.bridge import slope_to_sequence
from cutseq.errors import DomainError, RejectedError, VertexHitError
from cutseq.exact import QuadraticSurd
from cutseq.geometry import (
    billiard_path,
    billiard_period,
    crossing_events,
    format_event_log,
    parse_event_log,
    realize_factor,
    slope_bounds,
    sorted_crossings,
    sturmian_prefix,
    torus_cutting_sequence,
    torus_to_billiard,
    unfold,
)
from cutseq.words import FiniteWord, PeriodicWord, canonical_period, complexity, is_balanced

mpmath.mp.dps = 50
HALF = Fraction(1, 2)

rational_slopes = st.fractions(min_value=0, max_value=10, max_denominator=10)
irrational_slopes = st.builds(
    lambda a, b, d, c: QuadraticSurd(a, b, d, c),
    st.integers(0, 20), st.integers(1, 10), st.sampled_from([2, 3, 5, 7]), st.integers(1, 10),
).filter(lambda s: s.sign() > 0)
intercepts = st.integers(1, 100).map(lambda j: Fraction(j, 101))


def mp_coding(slope, b, n):
    """Letters of y = s*x + b from floating point at 50 digits: an independent oracle."""
    s = (mpmath.mpf(slope.a) + slope.b * mpmath.sqrt(slope.d)) / slope.c
    events = [(mpmath.mpf(k), "1") for k in range(1, n + 1)]
    b = mpmath.mpf(b.numerator) / b.denominator
    j = int(mpmath.floor(b)) + 1
    while (j - b) / s < n:
        events.append(((j - b) / s, "0"))
        j += 1
    events.sort()
    return "".join(letter for _, letter in events[:n])


def test_small_codings():
    assert torus_cutting_sequence(1, HALF, 4).bits == "0101"
    assert torus_cutting_sequence(Fraction(7, 4), Fraction(1, 3), 11) == FiniteWord.parse("AABABAABAAB")


def test_sqrt2_prefix():
    w = sturmian_prefix(QuadraticSurd.sqrt(2), HALF, 21)
    assert w.bits == "010010100101010010100"


def test_vertex_hits():
    with pytest.raises(VertexHitError):
        list(zip(range(10), crossing_events(Fraction(1), Fraction(0))))
    with pytest.raises(VertexHitError):
        billiard_path(Fraction(1), (Fraction(0), Fraction(0)))
    with pytest.raises(VertexHitError) as info:
        # slope 3 from (2/3, 0) runs straight into the corner (1, 1)
        billiard_path(Fraction(3), (Fraction(2, 3), Fraction(0)), 3)
    assert (info.value.x, info.value.y) == (1, 1)


def test_domain_errors():
    with pytest.raises(DomainError):
        sturmian_prefix(Fraction(2), HALF, 5)
    with pytest.raises(DomainError):
        billiard_path(Fraction(1), (Fraction(2), Fraction(0)))
    with pytest.raises(RejectedError):
        torus_to_billiard(PeriodicWord.parse("(AABB)*"))


def test_billiard_examples():
    assert billiard_path(None, (HALF, Fraction(0))).period == 2
    assert billiard_path(Fraction(1), (HALF, Fraction(0))).period == 4
    assert billiard_path(Fraction(7, 4), (Fraction(0), Fraction(1, 3))).period == 22
    assert billiard_path(Fraction(0), (Fraction(0), HALF)).period == 2


def test_torus_to_billiard_doubles():
    assert torus_to_billiard(PeriodicWord.parse("(AAB)*")).bits == "001001"


def test_factor_realisation():
    assert slope_bounds(FiniteWord.parse("10101")) == (HALF, Fraction(3, 2))
    assert slope_bounds(FiniteWord.parse("00100")) == (Fraction(3, 2), None)
    assert realize_factor(FiniteWord.parse("10101")) == (Fraction(2, 3), Fraction(1, 97))
    assert realize_factor(FiniteWord.parse("00100")) == (Fraction(2), Fraction(1, 97))


@given(irrational_slopes, intercepts)
@settings(max_examples=40, deadline=None)
def test_stepping_matches_sorting_and_floats(s, b):
    n = 60
    stepped = "".join(e.bit for _, e in zip(range(n), crossing_events(s, b)))
    assert stepped == "".join(e.bit for e in sorted_crossings(s, b, n))
    assert stepped == mp_coding(s, b, n)


@given(irrational_slopes, intercepts)
@settings(max_examples=25, deadline=None)
def test_sturmian_prefixes_are_sturmian(s, b):
    if s.is_rational():
        return
    w = sturmian_prefix(s, b, 400)
    # a large partial quotient delays new factors, so a finite prefix only
    # guarantees the upper bound; equality is checked on fixed slopes elsewhere
    assert all(complexity(w, n) <= n + 1 for n in range(1, 11))
    assert is_balanced(w, 20)


@given(rational_slopes, intercepts)
@settings(deadline=None)
def test_billiard_matches_torus_and_unfolding(s, b):
    path = billiard_path(s, (Fraction(0), b))
    assert path.period == billiard_period(s) == 2 * (s.numerator + s.denominator)
    period_letters = path.edge_word(path.period)
    torus = slope_to_sequence(s)
    # one billiard period reads the torus period twice, up to where it starts
    assert canonical_period(period_letters.bits) == torus.period
    assert len(period_letters) == len(torus_to_billiard(torus))
    # the unfolded straight line crosses the grid in exactly the bounce order
    assert unfold(path).letters().bits == path.edge_word().bits
    assert unfold(path).letters().bits == torus_cutting_sequence(s, b, len(path.bounces)).bits


def test_unfolded_points_are_on_the_line():
    path = billiard_path(Fraction(2, 3), (Fraction(0), Fraction(1, 5)), 12)
    u = unfold(path)
    for p in u.points:
        assert p.y - u.origin.y == Fraction(2, 3) * (p.x - u.origin.x)


def test_event_log_round_trip():
    events = sorted_crossings(QuadraticSurd.sqrt(3), Fraction(1, 3), 12)
    assert parse_event_log(format_event_log(events)) == events


@given(irrational_slopes, intercepts, st.integers(10, 600))
@settings(max_examples=40, deadline=None)
def test_frequency_bound(s, b, n):
    w = sturmian_prefix(s, b, n).bits
    n_a, n_b = w.count("0"), w.count("1")
    if n_b:
        # #A - s*#B lies in (-1, s + 1) for any intercept in [0, 1)
        assert -1 < n_a - s * n_b < s + 1
