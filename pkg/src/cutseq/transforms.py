"""Shears and flips acting on cutting sequences.

Vectors are columns ``(dx, dy)``: ``dx`` counts vertical-line crossings per
period (the B's) and ``dy`` horizontal-line crossings (the A's), so the slope
is ``dy/dx``.  The basic shears are ``R = [[1,1],[0,1]]`` (lengthens B-runs)
and ``L = [[1,0],[1,1]]`` (lengthens A-runs).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, PreconditionError
from .words import (
    FiniteWord,
    PeriodicWord,
    flip_bits,
    is_valid_cutting_sequence,
    lengthen_runs,
    shorten_runs,
)


@dataclass(frozen=True)
class ShearMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise DomainError(f"negative entry in {self}")
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"determinant of {self} is not 1")

    def __matmul__(self, other: ShearMatrix) -> ShearMatrix:
        return ShearMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    @classmethod
    def parse(cls, text: str) -> ShearMatrix:
        nums = re.fullmatch(r"\s*\[\s*\[(.*)\]\s*,\s*\[(.*)\]\s*\]\s*", text)
        if not nums:
            raise DomainError(f"expected [[a,b],[c,d]], got {text!r}")
        try:
            row1 = [int(v) for v in nums.group(1).split(",")]
            row2 = [int(v) for v in nums.group(2).split(",")]
        except ValueError as exc:
            raise DomainError(f"non-integer entry in {text!r}") from exc
        if len(row1) != 2 or len(row2) != 2:
            raise DomainError(f"expected a 2x2 matrix, got {text!r}")
        return cls(*row1, *row2)


IDENTITY = ShearMatrix(1, 0, 0, 1)
R = ShearMatrix(1, 1, 0, 1)
L = ShearMatrix(1, 0, 1, 1)
GENERATORS = {"R": R, "L": L}


@dataclass(frozen=True)
class Flip:
    """The letter swap ``[[0,1],[1,0]]``; determinant -1, so not a ShearMatrix."""

    def __str__(self):
        return "[[0,1],[1,0]]"


FLIP = Flip()


@dataclass(frozen=True)
class GeneratorWord:
    """A product of basic shears written leftmost factor first, e.g. ``"RLL"``."""

    factors: str

    def __post_init__(self):
        if self.factors.strip("RL"):
            raise DomainError(f"generator words use R and L only: {self.factors!r}")

    def product(self) -> ShearMatrix:
        m = IDENTITY
        for f in self.factors:
            m = m @ GENERATORS[f]
        return m

    def __str__(self):
        return self.factors

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class SlopeVector:
    dx: int
    dy: int

    @property
    def slope(self) -> Fraction:
        if self.dx == 0:
            raise DomainError("vertical direction has no finite slope")
        return Fraction(self.dy, self.dx)


def slopevector(w: PeriodicWord) -> SlopeVector:
    return SlopeVector(w.period.count("1"), w.period.count("0"))


def _require_valid(w: PeriodicWord) -> None:
    verdict = is_valid_cutting_sequence(w)
    if not verdict:
        raise PreconditionError(f"{w} is not a cutting sequence (step {verdict.step}: {verdict.reason})")


def shear_shorten(w: PeriodicWord) -> PeriodicWord:
    """Remove one A from every A-run; slope drops by 1."""
    if "11" in w.period + w.period[0]:
        raise PreconditionError("slope < 1; flip first")
    if "1" not in w.period:
        raise PreconditionError("(A)* has infinite slope")
    _require_valid(w)
    return PeriodicWord(shorten_runs(w.period, "0"), w.alphabet)


def flip(w: Union[PeriodicWord, FiniteWord]) -> Union[PeriodicWord, FiniteWord]:
    if isinstance(w, PeriodicWord):
        return PeriodicWord(flip_bits(w.period), w.alphabet)
    return FiniteWord(flip_bits(w.bits), w.alphabet)


def lengthen_A(w: PeriodicWord) -> PeriodicWord:
    """Insert an A after every B: the shear ``L``, slope ``s -> s + 1``."""
    _require_valid(w)
    return PeriodicWord(lengthen_runs(w.period, "0"), w.alphabet)


def lengthen_B(w: PeriodicWord) -> PeriodicWord:
    """Insert a B after every A: the shear ``R``, slope ``s -> s/(1+s)``."""
    _require_valid(w)
    return PeriodicWord(lengthen_runs(w.period, "1"), w.alphabet)


def decompose(m: ShearMatrix) -> GeneratorWord:
    """Factor ``m`` into R's and L's by peeling generators off the left.

    Exactly one of ``R^-1 m`` and ``L^-1 m`` stays nonnegative unless ``m`` is
    the identity; that one is taken.
    """
    if not isinstance(m, ShearMatrix):
        m = ShearMatrix(*m)
    a, b, c, d = m.a, m.b, m.c, m.d
    out = []
    while (a, b, c, d) != (1, 0, 0, 1):
        r_ok = a >= c and b >= d
        l_ok = c >= a and d >= b
        assert r_ok != l_ok, f"ambiguous peel at {(a, b, c, d)}"
        if r_ok:
            out.append("R")
            a, b = a - c, b - d
        else:
            out.append("L")
            c, d = c - a, d - b
    return GeneratorWord("".join(out))


def apply_matrix(m: ShearMatrix, w: PeriodicWord) -> PeriodicWord:
    """Shear a cutting sequence by ``m``, factors applied rightmost first."""
    _require_valid(w)
    bits = w.period
    for f in reversed(decompose(m).factors):
        bits = lengthen_runs(bits, "1" if f == "R" else "0")
    out = PeriodicWord(bits, w.alphabet)
    # determinant 1 preserves gcd(dx, dy) == 1, so the period stays primitive
    assert slopevector(out) == slope_action(m, slopevector(w))
    return out


def slope_action(m: Union[ShearMatrix, Flip], v: SlopeVector) -> SlopeVector:
    if isinstance(m, Flip):
        return SlopeVector(v.dy, v.dx)
    return SlopeVector(m.a * v.dx + m.b * v.dy, m.c * v.dx + m.d * v.dy)
