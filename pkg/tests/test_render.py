import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cutseq.errors import DomainError, VertexHitError
from cutseq.exact import QuadraticSurd
from cutseq.render import RenderSpec, fmt, render_svg, render_word_pair
from cutseq.words import FiniteWord

NS = "{http://www.w3.org/2000/svg}"
HALF = Fraction(1, 2)


def parse(svg):
    return ET.fromstring(svg.split("\n", 1)[1])


def test_fmt():
    assert fmt(Fraction(1, 3)) == "0.333333333333"
    assert fmt(Fraction(2, 3)) == "0.666666666667"
    assert fmt(Fraction(5)) == "5"
    assert fmt(Fraction(-1, 8)) == "-0.125"
    assert fmt(QuadraticSurd.sqrt(2)) == "1.414213562373"


@given(st.fractions(min_value=-1000, max_value=1000))
def test_fmt_is_within_half_ulp(x):
    assert abs(Fraction(fmt(x)) - x) <= Fraction(1, 2 * 10**12)


def test_diamond_is_closed():
    svg = render_svg(RenderSpec("billiard", Fraction(1), (HALF, Fraction(0)), steps=4))
    poly = parse(svg).find(f"{NS}polyline").get("points")
    assert poly == "240,440 440,240 240,40 40,240 240,440"


def test_torus_slope_zero_is_one_line():
    svg = render_svg(RenderSpec("torus", Fraction(0), (Fraction(0), HALF), steps=3))
    lines = parse(svg).findall(f"{NS}line")
    assert {(l.get("y1"), l.get("y2")) for l in lines} == {("240", "240")}


@pytest.mark.parametrize("view", ["billiard", "torus", "unfolded"])
def test_views_are_deterministic_svg(view):
    spec = RenderSpec(view, QuadraticSurd.sqrt(2), (Fraction(0), Fraction(1, 3)), steps=10)
    a, b = render_svg(spec), render_svg(spec)
    assert a == b
    root = parse(a)
    assert root.tag == f"{NS}svg" and root.get("version") == "1.1"


def test_labels_toggle():
    spec = RenderSpec("billiard", Fraction(1, 2), (Fraction(0), Fraction(1, 3)), labels=False)
    assert ">A<" not in render_svg(spec)


def test_word_pair_captions():
    svg = render_word_pair([FiniteWord.parse("10101"), FiniteWord.parse("00100")])
    assert "slope in (1/2, 3/2)" in svg
    assert "slope in (3/2, inf)" in svg


def test_bad_specs():
    with pytest.raises(DomainError):
        RenderSpec("polar", Fraction(1))
    with pytest.raises(DomainError):
        RenderSpec("torus", Fraction(1), steps=0)
    with pytest.raises(DomainError):
        RenderSpec("torus", Fraction(1), size=0)
    with pytest.raises(VertexHitError):
        render_svg(RenderSpec("billiard", Fraction(1), (Fraction(0), Fraction(0))))
