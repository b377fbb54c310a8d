"""Two-letter words and the combinatorics used to tell codings apart.

Letters are stored as the characters ``"0"`` and ``"1"``: A/0 marks a
crossing of a horizontal grid line, B/1 a crossing of a vertical one.  Words
remember which alphabet they were written in so they print back the same way,
but the alphabet takes no part in equality.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator, Optional, Union

from .errors import DomainError

ALPHABETS = ("AB", "01")
_TO_AB = str.maketrans("01", "AB")
_FROM_AB = str.maketrans("AB", "01")
_SWAP = str.maketrans("01", "10")


class Letter(enum.IntEnum):
    A = 0
    B = 1


def _render(bits: str, alphabet: str) -> str:
    return bits.translate(_TO_AB) if alphabet == "AB" else bits


def _to_bits(text: str) -> tuple[str, str]:
    """Normalise letters to ``0``/``1`` and report the alphabet used."""
    text = text.strip()
    if not text:
        return "", "AB"
    if re.fullmatch(r"[AB]+", text):
        return text.translate(_FROM_AB), "AB"
    if re.fullmatch(r"[01]+", text):
        return text, "01"
    raise DomainError(f"not a word over A/B or 0/1: {text!r}")


def least_rotation(s: str) -> int:
    """Start index of the lexicographically least rotation (Booth)."""
    n = len(s)
    if n == 0:
        return 0
    ss = s + s
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = fail[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if i == -1 and c != ss[k]:
            if c < ss[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def primitive_root(s: str) -> str:
    i = (s + s).find(s, 1)
    return s[:i]


def canonical_period(s: str) -> str:
    root = primitive_root(s)
    k = least_rotation(root)
    return root[k:] + root[:k]


@dataclass(frozen=True)
class FiniteWord:
    bits: str
    alphabet: str = field(default="AB", compare=False)

    def __post_init__(self):
        if self.bits.strip("01"):
            raise DomainError(f"letters must be 0/1, got {self.bits!r}")
        if self.alphabet not in ALPHABETS:
            raise DomainError(f"unknown alphabet {self.alphabet!r}")

    @classmethod
    def parse(cls, text: str) -> FiniteWord:
        bits, alphabet = _to_bits(text)
        return cls(bits, alphabet)

    def __str__(self):
        return _render(self.bits, self.alphabet)

    def __len__(self):
        return len(self.bits)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(int(ch)) for ch in self.bits)

    def __add__(self, other: FiniteWord) -> FiniteWord:
        return FiniteWord(self.bits + other.bits, self.alphabet)

    def count(self, letter: Letter) -> int:
        return self.bits.count(str(int(letter)))

    def in_alphabet(self, alphabet: str) -> FiniteWord:
        return FiniteWord(self.bits, alphabet)


@dataclass(frozen=True)
class PeriodicWord:
    """The bi-infinite repetition of ``period``.

    The period is reduced to its primitive root and rotated to the least
    rotation, so rotations of the same cyclic word compare equal.
    """

    period: str
    alphabet: str = field(default="AB", compare=False)

    def __post_init__(self):
        if not self.period:
            raise DomainError("a periodic word needs a nonempty period")
        if self.period.strip("01"):
            raise DomainError(f"letters must be 0/1, got {self.period!r}")
        if self.alphabet not in ALPHABETS:
            raise DomainError(f"unknown alphabet {self.alphabet!r}")
        object.__setattr__(self, "period", canonical_period(self.period))

    @classmethod
    def parse(cls, text: str) -> PeriodicWord:
        m = re.fullmatch(r"\s*\(\s*(\w+)\s*\)\*\s*", text)
        body = m.group(1) if m else text
        bits, alphabet = _to_bits(body)
        return cls(bits, alphabet)

    def __str__(self):
        return f"({_render(self.period, self.alphabet)})*"

    def __len__(self):
        return len(self.period)

    def count(self, letter: Letter) -> int:
        return self.period.count(str(int(letter)))

    def prefix(self, n: int) -> FiniteWord:
        reps = n // len(self.period) + 1
        return FiniteWord((self.period * reps)[:n], self.alphabet)

    def in_alphabet(self, alphabet: str) -> PeriodicWord:
        return PeriodicWord(self.period, alphabet)


@dataclass(frozen=True)
class BiInfiniteWord:
    """``...LLL core RRR...``: a finite core between two constant tails.

    Needed to express the inputs such as ``...AAABAAA...`` that the validity
    iteration rejects outright.
    """

    left: str
    core: str
    right: str
    alphabet: str = field(default="AB", compare=False)

    def __post_init__(self):
        if self.left not in "01" or self.right not in "01" or len(self.left + self.right) != 2:
            raise DomainError("tails must be single letters")
        core = self.core.lstrip(self.left).rstrip(self.right)
        object.__setattr__(self, "core", core)

    @classmethod
    def parse(cls, text: str) -> BiInfiniteWord:
        m = re.fullmatch(r"\s*\.\.\.(\w+)\.\.\.\s*", text)
        if not m:
            raise DomainError(f"expected ...word...: {text!r}")
        bits, alphabet = _to_bits(m.group(1))
        return cls(bits[0], bits, bits[-1], alphabet)

    def __str__(self):
        r = lambda s: _render(s, self.alphabet)
        return f"...{r(self.left * 3)}{r(self.core)}{r(self.right * 3)}..."

    def window(self, pad: int) -> str:
        return self.left * pad + self.core + self.right * pad


Word = Union[FiniteWord, PeriodicWord, BiInfiniteWord]


def parse_word(text: str) -> Word:
    """Read ``(ABB)*`` as periodic, ``...AAB...`` as bi-infinite, anything else as finite."""
    s = text.strip()
    if s.startswith("..."):
        return BiInfiniteWord.parse(s)
    if s.endswith(")*"):
        return PeriodicWord.parse(s)
    return FiniteWord.parse(s)


class WordStream:
    """Pull-based letter source; ``take`` consumes the next ``n`` letters."""

    def __init__(self, letters: Iterable[str], alphabet: str = "01"):
        self._it = iter(letters)
        self.alphabet = alphabet

    def __iter__(self):
        return self

    def __next__(self) -> str:
        return next(self._it)

    def take(self, n: int) -> FiniteWord:
        bits = "".join(islice(self._it, n))
        if len(bits) < n:
            raise DomainError(f"stream ended after {len(bits)} letters")
        return FiniteWord(bits, self.alphabet)


# factors and complexity -----------------------------------------------------


def factor_strings(w: Word, n: int) -> set[str]:
    if n < 1:
        raise DomainError("factor length must be at least 1")
    if isinstance(w, PeriodicWord):
        m = len(w.period)
        text = w.period * (n // m + 2)
        return {text[i : i + n] for i in range(m)}
    if isinstance(w, BiInfiniteWord):
        text = w.window(n)
        return {text[i : i + n] for i in range(len(text) - n + 1)}
    if n > len(w.bits):
        raise DomainError(f"factor length {n} exceeds word length {len(w.bits)}")
    s = w.bits
    return {s[i : i + n] for i in range(len(s) - n + 1)}


def factors(w: Word, n: int) -> set[FiniteWord]:
    """Distinct length-``n`` blocks; periodic words wrap around."""
    return {FiniteWord(f, w.alphabet) for f in factor_strings(w, n)}


def complexity(w: Word, n: int) -> int:
    return len(factor_strings(w, n))


def _doubles(w: Word) -> set[str]:
    if isinstance(w, FiniteWord) and len(w.bits) < 2:
        return set()
    return factor_strings(w, 2) & {"00", "11"}


def has_AA_and_BB(w: Word) -> bool:
    return len(_doubles(w)) == 2


def exactly_one_double_absent(w: Word) -> bool:
    return len(_doubles(w)) == 1


class WordType(enum.Enum):
    TYPE0 = "type0"
    TYPE1 = "type1"
    NEITHER = "neither"


def classify_type(w: Word) -> WordType:
    """Type 0 when 11 never occurs, type 1 when 00 never occurs.

    A word with neither double (pure alternation) is reported as type 0.
    """
    d = _doubles(w)
    if "11" not in d:
        return WordType.TYPE0
    if "00" not in d:
        return WordType.TYPE1
    return WordType.NEITHER


def complexity_plateau(w: PeriodicWord) -> tuple[int, int]:
    """First ``n >= 1`` where ``p(n) == p(n-1)`` (taking ``p(0) = 1``), with ``p(n)``.

    For a cutting sequence of primitive period ``m`` this is ``(m, m)``.
    """
    prev = 1
    n = 1
    while True:
        p = complexity(w, n)
        if p == prev:
            return n, p
        prev = p
        n += 1


def recurrence_check(prefix: FiniteWord, n: int) -> bool:
    """Finite stand-in for recurrence: both halves share the same length-n factors."""
    if n < 1 or len(prefix) < 4 * n:
        raise DomainError(f"need a prefix of length >= {4 * n}")
    half = len(prefix.bits) // 2
    first = factor_strings(FiniteWord(prefix.bits[:half]), n)
    second = factor_strings(FiniteWord(prefix.bits[half:]), n)
    return first == second


# balance --------------------------------------------------------------------


@dataclass(frozen=True)
class Balanced:
    def __bool__(self):
        return True


@dataclass(frozen=True)
class Unbalanced:
    heavy: FiniteWord
    light: FiniteWord

    def __bool__(self):
        return False


def _default_n_max(w: Word) -> int:
    if isinstance(w, PeriodicWord):
        return len(w.period)
    if isinstance(w, BiInfiniteWord):
        return len(w.core) + 2
    return max(1, len(w.bits) // 4)


def is_balanced(w: Word, n_max: Optional[int] = None) -> Union[Balanced, Unbalanced]:
    """Check ``||U|_1 - |V|_1| <= 1`` over all equal-length factor pairs up to ``n_max``."""
    if n_max is None:
        n_max = _default_n_max(w)
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    for n in range(1, n_max + 1):
        if isinstance(w, FiniteWord) and n > len(w.bits):
            break
        fs = factor_strings(w, n)
        heavy = max(fs, key=lambda f: (f.count("1"), f))
        light = min(fs, key=lambda f: (f.count("1"), f))
        if heavy.count("1") - light.count("1") >= 2:
            return Unbalanced(FiniteWord(heavy, w.alphabet), FiniteWord(light, w.alphabet))
    return Balanced()


def witnesses(w: Word, n_max: Optional[int] = None) -> Iterator[FiniteWord]:
    """Every ``W`` with both ``0W0`` and ``1W1`` occurring, shortest first."""
    if n_max is None:
        n_max = _default_n_max(w)
    for n in range(2, n_max + 1):
        if isinstance(w, FiniteWord) and n > len(w.bits):
            return
        fs = factor_strings(w, n)
        for f in sorted(fs):
            if f[0] == f[-1] == "0" and "1" + f[1:-1] + "1" in fs:
                yield FiniteWord(f[1:-1], w.alphabet)


def unbalance_witness(w: Word, n_max: Optional[int] = None) -> Optional[FiniteWord]:
    """Shortest ``W`` (possibly empty) such that ``0W0`` and ``1W1`` both occur."""
    return next(witnesses(w, n_max), None)


# validity -------------------------------------------------------------------


class Step(enum.Enum):
    SHEAR = "S"
    FLIP = "F"


@dataclass(frozen=True)
class Valid:
    trace: tuple[Step, ...]
    terminal: PeriodicWord

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Rejected:
    reason: str
    step: int
    trace: tuple[Step, ...] = ()

    def __bool__(self):
        return False


def shorten_runs(period: str, letter: str = "0") -> str:
    """Drop one ``letter`` from each maximal cyclic run of it."""
    other = "1" if letter == "0" else "0"
    i = period.index(other)
    s = period[i:] + period[:i]
    return "".join(other + run[1:] for run in s.split(other)[1:])


def lengthen_runs(period: str, letter: str = "0") -> str:
    """Put one ``letter`` right after each occurrence of the other letter."""
    other = "1" if letter == "0" else "0"
    return period.replace(other, other + letter)


def flip_bits(bits: str) -> str:
    return bits.translate(_SWAP)


def is_valid_cutting_sequence(w: Union[PeriodicWord, BiInfiniteWord]) -> Union[Valid, Rejected]:
    """Run the shear/flip reduction until it reaches a constant word or rejects.

    Each round: reject if both AA and BB occur (step 1); reject a lone letter
    in a constant background (step 2); otherwise shorten every A-run when
    A's are at least as frequent as B's, else swap letters.
    """
    if isinstance(w, BiInfiniteWord):
        return _validate_biinfinite(w)
    if not isinstance(w, PeriodicWord):
        raise DomainError("validity is defined for periodic or bi-infinite words")
    s = w.period
    trace: list[Step] = []
    # each flip is followed by a shear, and a shear removes #B >= 1 letters
    for _ in range(len(s) + 1):
        if s.count("0") == 0 or s.count("1") == 0:
            return Valid(tuple(trace), PeriodicWord(s[0], w.alphabet))
        if "00" in s + s[0] and "11" in s + s[0]:
            return Rejected("both AA and BB occur", 1, tuple(trace))
        if s.count("0") >= s.count("1"):
            s = shorten_runs(s, "0")
            trace.append(Step.SHEAR)
        else:
            s = flip_bits(s)
            trace.append(Step.FLIP)
    return Rejected("reduction did not terminate", 0, tuple(trace))


def _validate_biinfinite(w: BiInfiniteWord) -> Union[Valid, Rejected]:
    if not w.core and w.left == w.right:
        return is_valid_cutting_sequence(PeriodicWord(w.left, w.alphabet))
    if w.left != w.right:
        return Rejected("both AA and BB occur", 1)
    back, core = w.left, w.core
    trace: list[Step] = []
    while True:
        text = back * 2 + core + back * 2
        if "00" in text and "11" in text:
            return Rejected("both AA and BB occur", 1, tuple(trace))
        if len(core) == 1:
            return Rejected("a single letter inside a constant word", 2, tuple(trace))
        if back == "1":
            back, core = "0", flip_bits(core)
            trace.append(Step.FLIP)
            continue
        # core is 1 0^k1 1 0^k2 ... 1; the infinite A tails stay infinite
        runs = core.split("1")[1:-1]
        core = "1" + "1".join(r[1:] for r in runs) + "1"
        trace.append(Step.SHEAR)
