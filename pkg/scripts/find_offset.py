"""Locate a block inside the coding of y = s*x + b.

    python3 scripts/find_offset.py 101010010100 --slope "sqrt(2)" --intercept 1/2

Prints the 0-based offsets where the block occurs in the first --length letters.
"""
import argparse

from cutseq.exact import parse_number, parse_rational
from cutseq.geometry import sturmian_prefix


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("block")
    ap.add_argument("--slope", default="sqrt(2)")
    ap.add_argument("--intercept", default="1/2")
    ap.add_argument("--length", type=int, default=200)
    args = ap.parse_args()
    text = sturmian_prefix(parse_number(args.slope), parse_rational(args.intercept), args.length).bits
    hits = [i for i in range(len(text) - len(args.block) + 1) if text.startswith(args.block, i)]
    print(f"prefix: {text[:40]}...")
    print(f"offsets of {args.block}: {hits if hits else 'none'}")


if __name__ == "__main__":
    main()
