"""Exact numbers: rationals, quadratic surds and continued fractions.

Rationals are plain :class:`fractions.Fraction` values.  Quadratic surds
``(a + b*sqrt(d))/c`` are implemented here with integer-only comparison and
floor; floating point is used only by ``float()`` for display.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational as _RationalABC
from typing import Iterator, Optional, Union

from .errors import DomainError, IrrationalValueError

Rational = Fraction
Number = Union[int, Fraction, "QuadraticSurd"]


_TRIAL_LIMIT = 10**6


def _squarefree_split(d: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``d == k*k*m`` and ``m`` square-free.

    Primes are stripped only up to the cube root; what is left then has at
    most two prime factors, so it is square-free unless it is a square.
    """
    k, m, rest = 1, 1, d
    p = 2
    while p * p * p <= rest:
        if p > _TRIAL_LIMIT:
            raise DomainError(f"radicand with {len(str(d))} digits is too large to reduce")
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        k *= p ** (e // 2)
        m *= p ** (e % 2)
        p += 1 if p == 2 else 2
    r = isqrt(rest)
    if r * r == rest:
        return k * r, m
    return k, m * rest


def _sign_of(a: int, b: int, d: int) -> int:
    """Sign of ``a + b*sqrt(d)`` for non-square ``d`` (or ``b == 0``)."""
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sa >= 0 and sb >= 0:
        return 1
    if sa <= 0 and sb <= 0:
        return -1
    # opposite signs: the larger square wins
    t = a * a - b * b * d
    return sa if t > 0 else sb


@dataclass(frozen=True, eq=False)
class QuadraticSurd:
    """The real number ``(a + b*sqrt(d))/c`` held in canonical form.

    Canonical form has ``d`` square-free, ``c > 0`` and ``gcd(a, b, c) == 1``.
    Rational values are stored with ``b == d == 0``.
    """

    a: int
    b: int = 0
    d: int = 0
    c: int = 1

    def __post_init__(self):
        a, b, d, c = int(self.a), int(self.b), int(self.d), int(self.c)
        if c == 0:
            raise ZeroDivisionError("surd denominator is zero")
        if d < 0:
            raise DomainError("negative radicand")
        if d > 1 and b:
            k, d = _squarefree_split(d)
            b *= k
        if d <= 1 or b == 0:
            a += b * d  # sqrt(1) == 1, sqrt(0) == 0
            b = d = 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(a, b), c)
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "b", b // g)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "c", c // g)

    @classmethod
    def sqrt(cls, d: int) -> QuadraticSurd:
        return cls(0, 1, d, 1)

    @classmethod
    def coerce(cls, value) -> QuadraticSurd:
        if isinstance(value, QuadraticSurd):
            return value
        if isinstance(value, (int, _RationalABC)):
            value = Fraction(value)
            return cls(value.numerator, 0, 0, value.denominator)
        raise TypeError(f"cannot convert {type(value).__name__} to QuadraticSurd")

    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b:
            raise IrrationalValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd(self.a, -self.b, self.d, self.c)

    def sign(self) -> int:
        return _sign_of(self.a, self.b, self.d)

    # arithmetic -------------------------------------------------------
    def _common(self, other) -> tuple[QuadraticSurd, int]:
        other = QuadraticSurd.coerce(other)
        if self.d and other.d and self.d != other.d:
            raise DomainError(f"cannot mix sqrt({self.d}) and sqrt({other.d})")
        return other, self.d or other.d

    def __add__(self, other):
        try:
            o, d = self._common(other)
        except TypeError:
            return NotImplemented
        return QuadraticSurd(self.a * o.c + o.a * self.c, self.b * o.c + o.b * self.c, d, self.c * o.c)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d, self.c)

    def __sub__(self, other):
        try:
            return self + (-QuadraticSurd.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o, d = self._common(other)
        except TypeError:
            return NotImplemented
        return QuadraticSurd(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
            self.c * o.c,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> QuadraticSurd:
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("reciprocal of zero")
        return QuadraticSurd(self.c * self.a, -self.c * self.b, self.d, norm)

    def __truediv__(self, other):
        try:
            o = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        return QuadraticSurd.coerce(other) * self.reciprocal()

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # comparison -------------------------------------------------------
    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        try:
            o = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.a, self.b, self.d, self.c) == (o.a, o.b, o.d, o.c)

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.c))
        return hash((self.a, self.b, self.d, self.c))

    def __lt__(self, other):
        try:
            return self._cmp(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._cmp(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._cmp(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._cmp(other) >= 0
        except TypeError:
            return NotImplemented

    def __float__(self):
        # for display only; comparisons and floors stay exact
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def __floor__(self):
        return surd_floor(self)

    def __str__(self):
        return format_surd(self)

    def __repr__(self):
        return f"QuadraticSurd({self.a}, {self.b}, {self.d}, {self.c})"


def surd_floor(x: QuadraticSurd) -> int:
    """Exact floor of a surd.

    ``b*sqrt(d)`` is pinned between consecutive integers with ``isqrt``; since
    the surd part is irrational it lies strictly inside, so the floor of the
    whole value is the floor of the integer lower bound divided by ``c``.
    """
    x = QuadraticSurd.coerce(x)
    if x.b == 0:
        return x.a // x.c
    r = isqrt(x.b * x.b * x.d)
    lower = r if x.b > 0 else -r - 1
    return (x.a + lower) // x.c


def surd_cmp(x, y) -> int:
    """Return -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``."""
    return (QuadraticSurd.coerce(x) - QuadraticSurd.coerce(y)).sign()


def exact_floor(x) -> int:
    if isinstance(x, QuadraticSurd):
        return surd_floor(x)
    return Fraction(x).__floor__()


# continued fractions --------------------------------------------------------


@dataclass(frozen=True)
class ContinuedFraction:
    """Partial quotients ``[h0; h1, ..., hk, (t1, ..., tm)*]``.

    ``tail`` is None for finite expansions.  Construction normalises to the
    canonical form: a finite expansion never ends in 1 (unless it is ``[1]``),
    and a periodic tail is primitive and rolled as far left as possible.
    """

    head: tuple[int, ...]
    tail: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        head = tuple(int(h) for h in self.head)
        tail = None if self.tail is None else tuple(int(t) for t in self.tail)
        if not head and tail:
            head, tail = tail[:1], tail[1:] + tail[:1]
        if not head:
            raise DomainError("continued fraction needs a leading term")
        if head[0] < 0 or any(h < 1 for h in head[1:]):
            raise DomainError(f"bad partial quotients {head}")
        if tail is not None:
            if not tail or any(t < 1 for t in tail):
                raise DomainError(f"bad periodic tail {tail}")
            tail = _primitive_root(tail)
            while len(head) > 1 and head[-1] == tail[-1]:
                tail = (head[-1],) + tail[:-1]
                head = head[:-1]
        elif len(head) > 1 and head[-1] == 1:
            head = head[:-2] + (head[-2] + 1,)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", tail)

    @property
    def is_periodic(self) -> bool:
        return self.tail is not None

    def terms(self) -> Iterator[int]:
        yield from self.head
        while self.tail:
            yield from self.tail

    def prefix(self, k: int) -> list[int]:
        out = []
        for t in self.terms():
            if len(out) == k:
                break
            out.append(t)
        return out

    def __str__(self):
        return format_cf(self)

    @classmethod
    def parse(cls, text: str) -> ContinuedFraction:
        return parse_cf(text)


def _primitive_root(seq: tuple[int, ...]) -> tuple[int, ...]:
    n = len(seq)
    for p in range(1, n + 1):
        if n % p == 0 and seq == seq[:p] * (n // p):
            return seq[:p]
    return seq


def cf_expand(x) -> ContinuedFraction:
    """Finite continued fraction of a nonnegative rational.

    Counting the "subtract 1" steps between reciprocals is exactly integer
    division, so each partial quotient comes from one ``divmod``.
    """
    x = Fraction(x)
    if x < 0:
        raise DomainError("negative slopes are not supported")
    num, den = x.numerator, x.denominator
    quotients = []
    while True:
        q, r = divmod(num, den)
        quotients.append(q)
        if r == 0:
            break
        num, den = den, r
    return ContinuedFraction(tuple(quotients))


def cf_value(cf: ContinuedFraction) -> Fraction:
    if cf.tail is not None:
        raise IrrationalValueError("a periodic continued fraction has no rational value")
    value = Fraction(cf.head[-1])
    for q in reversed(cf.head[:-1]):
        value = q + 1 / value
    return value


def cf_expand_surd(x, k: int) -> list[int]:
    """First ``k`` partial quotients of ``x`` by exact floor-and-reciprocate.

    A rational input stops early once its remainder hits zero, so the result
    can be shorter than ``k``.
    """
    x = QuadraticSurd.coerce(x)
    if x.sign() < 0:
        raise DomainError("negative values are not supported")
    if k < 1:
        raise DomainError("need at least one term")
    out = []
    while len(out) < k:
        q = surd_floor(x)
        out.append(q)
        rem = x - q
        if rem.sign() == 0:
            break
        x = rem.reciprocal()
    return out


def cf_expand_periodic(x, max_terms: int = 100_000) -> ContinuedFraction:
    """Full expansion of a nonnegative surd, with its periodic tail.

    Complete quotients of a quadratic irrational eventually repeat; the first
    repeat marks the start and length of the period.
    """
    x = QuadraticSurd.coerce(x)
    if x.is_rational():
        return cf_expand(x.to_fraction())
    if x.sign() < 0:
        raise DomainError("negative values are not supported")
    seen: dict[QuadraticSurd, int] = {}
    quotients = []
    while len(quotients) < max_terms:
        if x in seen:
            start = seen[x]
            return ContinuedFraction(tuple(quotients[:start]), tuple(quotients[start:]))
        seen[x] = len(quotients)
        q = surd_floor(x)
        quotients.append(q)
        x = (x - q).reciprocal()
    raise DomainError(f"no period found within {max_terms} terms")


def cf_surd_value(cf: ContinuedFraction, radicand: Optional[int] = None) -> Union[Fraction, QuadraticSurd]:
    """Exact value of a continued fraction; periodic ones give a surd.

    The discriminant of a long period can be far too big to factor, so a
    caller that knows the field should pass its square-free ``radicand``.
    """
    if cf.tail is None:
        return cf_value(cf)
    # y = [tail; y]  =>  y = (p*y + p1)/(q*y + q1), a quadratic in y
    p, p1, q, q1 = 1, 0, 0, 1
    for t in cf.tail:
        p, p1, q, q1 = p * t + p1, p, q * t + q1, q
    # q*y^2 + (q1 - p)*y - p1 = 0, positive root
    disc = (q1 - p) ** 2 + 4 * q * p1
    if radicand is None:
        y = QuadraticSurd(p - q1, 1, disc, 2 * q)
    else:
        k = isqrt(disc // radicand)
        if k * k * radicand != disc:
            raise DomainError(f"value does not lie in Q(sqrt({radicand}))")
        y = QuadraticSurd(p - q1, k, radicand, 2 * q)
    h, h1, k, k1 = 1, 0, 0, 1
    for t in cf.head:
        h, h1, k, k1 = h * t + h1, h, k * t + k1, k
    return (y * h + h1) / (y * k + k1)


# text forms -----------------------------------------------------------------

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*")
_SURD_BODY_RE = re.compile(
    r"(?:(?P<a>[+-]?\d+)\s*(?P<op>[+-]))?\s*(?P<bsign>[+-]?)\s*(?P<b>\d+)?\s*\*?\s*sqrt\(\s*(?P<d>\d+)\s*\)"
)


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.fullmatch(text)
    if not m:
        raise DomainError(f"not a rational: {text!r}")
    den = int(m.group(2) or 1)
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(int(m.group(1)), den)


def parse_surd(text: str) -> QuadraticSurd:
    s = text.strip().replace(" ", "")
    c = 1
    m = re.fullmatch(r"\((.*)\)/(\d+)", s) or re.fullmatch(r"(.*sqrt\(\d+\))/(\d+)", s)
    if m:
        s, c = m.group(1), int(m.group(2))
    elif s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    body = _SURD_BODY_RE.fullmatch(s)
    if not body or c == 0:
        raise DomainError(f"not a quadratic surd: {text!r}")
    a = int(body["a"] or 0)
    b = int(body["b"] or 1)
    if body["op"] == "-":
        b = -b
    if body["bsign"] == "-":
        b = -b
    return QuadraticSurd(a, b, int(body["d"]), c)


def parse_number(text: str) -> Union[Fraction, QuadraticSurd]:
    """Parse ``p/q`` or a surd such as ``(1+sqrt(5))/2``; rational surds collapse to Fraction."""
    if "sqrt" in text:
        x = parse_surd(text)
        return x.to_fraction() if x.is_rational() else x
    return parse_rational(text)


def format_surd(x: QuadraticSurd) -> str:
    if x.b == 0:
        return str(Fraction(x.a, x.c))
    coeff = "" if abs(x.b) == 1 else f"{abs(x.b)}*"
    root = f"{coeff}sqrt({x.d})"
    if x.a == 0:
        body = ("-" if x.b < 0 else "") + root
        bare = x.b > 0
    else:
        body = f"{x.a}{'-' if x.b < 0 else '+'}{root}"
        bare = False
    if x.c == 1:
        return body
    return f"{body}/{x.c}" if bare else f"({body})/{x.c}"


def format_number(x) -> str:
    if isinstance(x, QuadraticSurd):
        return format_surd(x)
    return str(Fraction(x))


def format_cf(cf: ContinuedFraction) -> str:
    first, rest = cf.head[0], [str(h) for h in cf.head[1:]]
    if cf.tail is not None:
        rest.append("([" + ", ".join(str(t) for t in cf.tail) + "])*")
    if not rest:
        return f"[{first}]"
    return f"[{first}; " + ", ".join(rest) + "]"


def parse_cf(text: str) -> ContinuedFraction:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise DomainError(f"not a continued fraction: {text!r}")
    s = s[1:-1]
    tail = None
    m = re.search(r",?\s*\(\[([^\]]*)\]\)\*\s*$", s)
    if m:
        tail = tuple(int(t) for t in m.group(1).split(","))
        s = s[: m.start()]
    first, _, rest = s.partition(";")
    try:
        head = [int(first)] + [int(t) for t in rest.split(",") if t.strip()]
    except ValueError as exc:
        raise DomainError(f"not a continued fraction: {text!r}") from exc
    return ContinuedFraction(tuple(head), tail)
