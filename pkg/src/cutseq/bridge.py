"""Rational slope <-> periodic cutting sequence, via shear/flip rewriting."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RejectedError
from .exact import ContinuedFraction, cf_expand
from .words import PeriodicWord, Step, flip_bits, is_valid_cutting_sequence, lengthen_runs, shorten_runs


@dataclass(frozen=True)
class RewriteTrace:
    steps: tuple[Step, ...]
    terminal: PeriodicWord

    def __post_init__(self):
        for x, y in zip(self.steps, self.steps[1:]):
            if x is y is Step.FLIP:
                raise DomainError("two flips in a row cancel out")

    def replay(self) -> Fraction:
        """Undo the steps starting from slope 0: a shear adds 1, a flip inverts."""
        s = Fraction(0)
        for step in reversed(self.steps):
            s = s + 1 if step is Step.SHEAR else 1 / s
        return s

    def __str__(self):
        return " ".join(step.value for step in self.steps)


def _rewrite(w: PeriodicWord) -> RewriteTrace:
    verdict = is_valid_cutting_sequence(w)
    if not verdict:
        raise RejectedError(verdict)
    if "1" not in w.period:
        raise DomainError("(A)* is a vertical trajectory; its slope is infinite")
    s = w.period
    steps = []
    while s.count("0"):
        # shear when A's are at least as frequent as B's, otherwise flip
        if s.count("0") >= s.count("1"):
            s = shorten_runs(s, "0")
            steps.append(Step.SHEAR)
        else:
            s = flip_bits(s)
            steps.append(Step.FLIP)
    return RewriteTrace(tuple(steps), PeriodicWord(s, w.alphabet))


def sequence_to_slope(w: PeriodicWord) -> tuple[Fraction, RewriteTrace]:
    """Slope of a cutting sequence, reduced to ``(B)*`` and replayed back up."""
    trace = _rewrite(w)
    slope = trace.replay()
    counted = Fraction(w.period.count("0"), w.period.count("1"))
    assert slope == counted, (slope, counted)
    return slope, trace


def slope_to_sequence(s) -> PeriodicWord:
    """Build the cutting sequence of slope ``s`` up from ``(B)*``.

    Walking the continued fraction from the innermost quotient: each unit
    added to the slope inserts an A after every B, each reciprocal swaps the
    letters.
    """
    s = Fraction(s)
    if s < 0:
        raise DomainError("negative slopes are not supported")
    quotients = cf_expand(s).head
    bits = "1"
    for i, q in enumerate(reversed(quotients)):
        if i:
            bits = flip_bits(bits)
        for _ in range(q):
            bits = lengthen_runs(bits, "0")
    out = PeriodicWord(bits)
    assert Fraction(bits.count("0"), bits.count("1")) == s
    return out


def cf_of_sequence(w: PeriodicWord) -> ContinuedFraction:
    """Partial quotients read off as the lengths of the shear blocks between flips."""
    trace = _rewrite(w)
    blocks = [0]
    for step in trace.steps:
        if step is Step.FLIP:
            blocks.append(0)
        else:
            blocks[-1] += 1
    cf = ContinuedFraction(tuple(blocks))
    assert cf.head == tuple(blocks)
    return cf

