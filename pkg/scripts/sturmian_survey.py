"""Survey Sturmian prefixes of a few quadratic slopes.

    python3 scripts/sturmian_survey.py [--length 2000] [--nmax 20]

Prints, per slope and intercept, the continued fraction, the first n where
p(n) falls short of n+1 (if any), the balance verdict and the A/B frequency
error scaled by #B.
"""
import argparse
import time
from dataclasses import dataclass, field
from fractions import Fraction

from cutseq.exact import cf_expand_periodic, format_cf, format_number, parse_surd
from cutseq.geometry import sturmian_prefix
from cutseq.words import classify_type, complexity, is_balanced


@dataclass
class SurveyConfig:
    length: int = 2000
    nmax: int = 20
    slopes: list = field(default_factory=lambda: ["sqrt(2)", "sqrt(3)", "(1+sqrt(5))/2", "(7+3*sqrt(2))/9", "sqrt(7)"])
    intercepts: list = field(
        default_factory=lambda: [Fraction(1, 7), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(5, 6)]
    )


def survey(cfg: SurveyConfig) -> None:
    print(f"{'slope':>16} {'b':>4} {'cf':>22} {'short':>5} {'bal':>4} {'type':>7} {'(#A-s#B)':>10}")
    t0 = time.perf_counter()
    for text in cfg.slopes:
        s = parse_surd(text)
        cf = format_cf(cf_expand_periodic(s))
        if len(cf) > 22:
            cf = cf[:19] + "..."
        for b in cfg.intercepts:
            w = sturmian_prefix(s, b, cfg.length)
            short = next((n for n in range(1, cfg.nmax + 1) if complexity(w, n) != n + 1), "-")
            bal = "yes" if is_balanced(w, cfg.nmax) else "no"
            n_a, n_b = w.bits.count("0"), w.bits.count("1")
            approx = float(n_a - s * n_b)
            print(f"{format_number(s):>16} {str(b):>4} {cf:>22} {short!s:>5} {bal:>4} "
                  f"{classify_type(w).value:>7} {approx:10.4f}")
    print(f"done in {time.perf_counter() - t0:.2f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--length", type=int, default=2000)
    ap.add_argument("--nmax", type=int, default=20)
    args = ap.parse_args()
    survey(SurveyConfig(length=args.length, nmax=args.nmax))


if __name__ == "__main__":
    main()
