"""Write the reference figures as SVG files.

    python3 scripts/render_figures.py [outdir]

With no argument the files land in tests/golden, refreshing the golden set.
"""
import sys
from fractions import Fraction
from pathlib import Path

from cutseq.render import RenderSpec, render_svg, render_word_pair
from cutseq.words import FiniteWord

HALF = Fraction(1, 2)

FIGURES = {
    # slope-1 billiard from the bottom midpoint: the period-4 diamond
    "billiard_diamond.svg": lambda: render_svg(RenderSpec("billiard", Fraction(1), (HALF, Fraction(0)), steps=4)),
    "torus_slope1.svg": lambda: render_svg(RenderSpec("torus", Fraction(1), (Fraction(0), HALF), steps=8)),
    # two factors no single trajectory can contain
    "balance_pair.svg": lambda: render_word_pair([FiniteWord.parse("10101"), FiniteWord.parse("00100")]),
}


def main(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for name, make in FIGURES.items():
        (outdir / name).write_text(make())
        print(outdir / name)


if __name__ == "__main__":
    default = Path(__file__).resolve().parent.parent / "tests" / "golden"
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else default)
