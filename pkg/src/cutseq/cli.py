"""Command-line front end: ``cutseq <subcommand> ...``.

Each subcommand calls one library function and formats the result, as text
or (with ``--json``) as a JSON object whose keys are listed in the README.
Exit status: 0 success, 1 usage or domain error, 2 rejected verdict.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .bridge import cf_of_sequence, sequence_to_slope, slope_to_sequence
from .errors import CutseqError, RejectedError, VertexHitError
from .exact import (
    QuadraticSurd,
    cf_expand,
    cf_expand_periodic,
    cf_expand_surd,
    format_cf,
    format_number,
    parse_number,
    parse_rational,
)
from .geometry import billiard_path, crossing_events, format_event_log, parse_event_log, sturmian_prefix
from .render import RenderSpec, render_event_log, render_svg, render_word_pair
from .transforms import ShearMatrix, apply_matrix, decompose
from .words import (
    FiniteWord,
    PeriodicWord,
    classify_type,
    complexity,
    is_balanced,
    is_valid_cutting_sequence,
    parse_word,
    unbalance_witness,
)

EXIT_OK, EXIT_ERROR, EXIT_REJECTED = 0, 1, 2

CLASSIFY_NOTE = "a finite prefix can only be consistent with a Sturmian word, never certify one"


class UsageError(CutseqError):
    pass


def _point(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected x,y but got {text!r}")
    return tuple(parse_number(p) for p in parts)


def _slope_arg(text: str):
    if text in ("inf", "vertical"):
        return None
    return parse_number(text)


def _periodic(text: str) -> PeriodicWord:
    w = parse_word(text)
    if not isinstance(w, PeriodicWord):
        raise UsageError(f"expected a periodic word like (ABB)*, got {text!r}")
    return w


# subcommands: each returns (exit code, text, json payload) ------------------


def cmd_cf(args):
    x = parse_number(args.number)
    if isinstance(x, QuadraticSurd):
        if args.terms:
            terms = cf_expand_surd(x, args.terms)
            text = format_cf_list(terms)
            return EXIT_OK, text, {"input": args.number, "kind": "surd", "partial_quotients": terms,
                                   "periodic_tail": None, "text": text}
        cf = cf_expand_periodic(x)
        text = format_cf(cf)
        return EXIT_OK, text, {"input": args.number, "kind": "surd", "partial_quotients": list(cf.head),
                               "periodic_tail": list(cf.tail), "text": text}
    cf = cf_expand(x)
    terms = list(cf.head[: args.terms] if args.terms else cf.head)
    text = format_cf_list(terms)
    return EXIT_OK, text, {"input": args.number, "kind": "rational", "partial_quotients": terms,
                           "periodic_tail": None, "text": text}


def format_cf_list(terms) -> str:
    if len(terms) == 1:
        return f"[{terms[0]}]"
    return f"[{terms[0]}; " + ", ".join(str(t) for t in terms[1:]) + "]"


def cmd_slope2seq(args):
    s = parse_rational(args.slope)
    w = slope_to_sequence(s)
    return EXIT_OK, str(w), {"slope": str(s), "sequence": str(w), "period": len(w)}


def cmd_seq2slope(args):
    w = _periodic(args.word)
    slope, trace = sequence_to_slope(w)
    cf = cf_of_sequence(w)
    text = f"{slope}\ntrace: {trace}"
    return EXIT_OK, text, {"sequence": str(w), "slope": str(slope), "trace": [s.value for s in trace.steps],
                           "continued_fraction": format_cf(cf)}


def cmd_validate(args):
    w = parse_word(args.word)
    if isinstance(w, FiniteWord):
        raise UsageError("validate needs a periodic (X)* or bi-infinite ...X... word")
    v = is_valid_cutting_sequence(w)
    steps = [s.value for s in v.trace]
    if v:
        text = f"Valid\ntrace: {' '.join(steps)}"
        return EXIT_OK, text, {"sequence": str(w), "valid": True, "trace": steps, "step": None, "reason": None}
    text = f"Rejected at step {v.step}: {v.reason}\ntrace: {' '.join(steps)}"
    return EXIT_REJECTED, text, {"sequence": str(w), "valid": False, "trace": steps, "step": v.step,
                                 "reason": v.reason}


def _n_range(w, k):
    if isinstance(w, FiniteWord):
        k = min(k, len(w))
    return range(1, k + 1)


def cmd_complexity(args):
    w = parse_word(args.word)
    rows = [{"n": n, "p": complexity(w, n)} for n in _n_range(w, args.n)]
    text = "n p(n)\n" + "\n".join(f"{r['n']} {r['p']}" for r in rows)
    return EXIT_OK, text, {"word": str(w), "complexity": rows}


def cmd_balance(args):
    w = parse_word(args.word)
    result = is_balanced(w, args.max)
    if result:
        return EXIT_OK, "Balanced", {"word": str(w), "balanced": True, "witness": None, "w": None}
    core = unbalance_witness(w, args.max)
    text = f"Unbalanced: {result.heavy} vs {result.light}"
    if core is not None:
        text += f"\n0W0 and 1W1 occur with W = '{core.in_alphabet('01')}'"
    return EXIT_OK, text, {"word": str(w), "balanced": False, "witness": [str(result.heavy), str(result.light)],
                           "w": None if core is None else core.bits}


def classify_word(w, max_n=None) -> tuple[str, int]:
    """Sort a word into cutting-sequence / sturmian-consistent / rejected by its complexity."""
    if isinstance(w, PeriodicWord):
        verdict = is_valid_cutting_sequence(w)
        return ("cutting-sequence" if verdict else "rejected"), len(w) + 1
    if not isinstance(w, FiniteWord):
        return "rejected", 0
    # an unbalanced factor pair is a certain rejection, so balance is checked
    # further out than complexity, whose tail is distorted by the prefix end
    n_max = max_n or max(1, min(len(w) // 4, 50))
    n_bal = max_n or max(1, min(len(w) // 2, 100))
    ps = [complexity(w, n) for n in range(1, n_max + 2)]
    if any(p > n + 1 for n, p in enumerate(ps, start=1)) or not is_balanced(w, n_bal):
        return "rejected", n_max
    if ps[0] == 1 or any(a == b for a, b in zip(ps, ps[1:])):
        return "cutting-sequence", n_max
    return "sturmian-consistent", n_max


def cmd_classify(args):
    w = parse_word(args.word)
    label, tested = classify_word(w, args.max)
    code = EXIT_REJECTED if label == "rejected" else EXIT_OK
    text = label
    if label == "sturmian-consistent":
        text += f"\nnote: {CLASSIFY_NOTE}"
    payload = {"word": str(w), "class": label, "tested_n": tested, "note": CLASSIFY_NOTE}
    if isinstance(w, FiniteWord) and len(w) >= 2:
        payload["type"] = classify_type(w).value
    return code, text, payload


def cmd_sturmian(args):
    slope = parse_number(args.slope)
    intercept = parse_rational(args.intercept)
    prefix = sturmian_prefix(slope, intercept, args.n)
    return EXIT_OK, str(prefix), {"slope": format_number(slope), "intercept": str(intercept), "n": args.n,
                                  "prefix": str(prefix), "type": classify_type(prefix).value}


def cmd_crossings(args):
    slope = parse_number(args.slope)
    it = crossing_events(slope, parse_rational(args.intercept))
    events = [next(it) for _ in range(args.n)]
    log = format_event_log(events)
    rows = [{"index": e.index, "kind": e.kind, "x": format_number(e.x), "y": format_number(e.y)} for e in events]
    return EXIT_OK, log.rstrip("\n"), {"events": rows}


def cmd_simulate(args):
    slope = _slope_arg(args.slope)
    start = _point(args.start)
    path = billiard_path(slope, start, args.bounces)
    lines = ["i x y edge letter"]
    rows = []
    for i, b in enumerate(path.bounces, start=1):
        x, y = format_number(b.point.x), format_number(b.point.y)
        lines.append(f"{i} {x} {y} {b.edge} {b.letter}")
        rows.append({"x": x, "y": y, "edge": b.edge, "letter": b.letter})
    lines.append(f"period: {path.period if path.period is not None else 'not detected'}")
    return EXIT_OK, "\n".join(lines), {"slope": args.slope, "start": args.start, "bounces": rows,
                                       "period": path.period}


def cmd_decompose(args):
    m = ShearMatrix.parse(args.matrix)
    word = decompose(m)
    return EXIT_OK, str(word), {"matrix": str(m), "word": str(word)}


def cmd_apply(args):
    m = ShearMatrix.parse(args.matrix)
    w = _periodic(args.word)
    verdict = is_valid_cutting_sequence(w)
    if not verdict:
        raise RejectedError(verdict)
    out = apply_matrix(m, w)
    return EXIT_OK, str(out), {"matrix": str(m), "input": str(w), "output": str(out),
                               "factors": str(decompose(m))}


def cmd_render(args):
    if args.words:
        words = [FiniteWord.parse(t) for t in args.words.split(",")]
        svg = render_word_pair(words, size=args.size, labels=not args.no_labels)
    elif args.events:
        with open(args.events) as fh:
            events = parse_event_log(fh.read())
        svg = render_event_log(events, _point(args.start), size=args.size, labels=not args.no_labels)
    else:
        if args.slope is None:
            raise UsageError("render needs --slope, --words or --events")
        spec = RenderSpec(view=args.view, slope=_slope_arg(args.slope), start=_point(args.start),
                          steps=args.steps, size=args.size, labels=not args.no_labels, grid=not args.no_grid)
        svg = render_svg(spec)
    # write atomically so an error never leaves a partial file behind
    directory = os.path.dirname(os.path.abspath(args.output))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".svg.tmp")
    with os.fdopen(fd, "w", newline="\n") as fh:
        fh.write(svg)
    os.replace(tmp, args.output)
    return EXIT_OK, f"wrote {args.output} ({len(svg.encode())} bytes)", {"output": args.output,
                                                                         "bytes": len(svg.encode())}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutseq", description="Cutting sequences and Sturmian words.")
    parser.add_argument("--json", action="store_true", help="emit a JSON object instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("cf", cmd_cf, "continued fraction of a rational or quadratic surd")
    p.add_argument("number")
    p.add_argument("--terms", type=int)

    p = add("slope2seq", cmd_slope2seq, "cutting sequence of a rational slope")
    p.add_argument("slope")

    p = add("seq2slope", cmd_seq2slope, "slope and rewrite trace of a cutting sequence")
    p.add_argument("word")

    p = add("validate", cmd_validate, "run the cutting-sequence validity iteration")
    p.add_argument("word")

    p = add("complexity", cmd_complexity, "factor complexity table p(1..k)")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)

    p = add("balance", cmd_balance, "balance check with an unbalance witness")
    p.add_argument("word")
    p.add_argument("--max", type=int)

    p = add("classify", cmd_classify, "cutting sequence vs Sturmian-consistent vs rejected")
    p.add_argument("word")
    p.add_argument("--max", type=int)

    p = add("sturmian", cmd_sturmian, "prefix of the coding of an irrational-slope line")
    p.add_argument("slope")
    p.add_argument("--intercept", default="1/2")
    p.add_argument("--n", type=int, required=True)

    p = add("crossings", cmd_crossings, "crossing-event log of a line")
    p.add_argument("slope")
    p.add_argument("--intercept", default="1/2")
    p.add_argument("--n", type=int, required=True)

    p = add("simulate", cmd_simulate, "exact billiard simulation")
    p.add_argument("slope")
    p.add_argument("--start", default="1/2,0")
    p.add_argument("--bounces", type=int)

    p = add("decompose", cmd_decompose, "factor a matrix into basic shears R and L")
    p.add_argument("matrix")

    p = add("apply", cmd_apply, "shear a cutting sequence by a matrix")
    p.add_argument("matrix")
    p.add_argument("word")

    p = add("render", cmd_render, "draw an SVG figure")
    p.add_argument("--view", choices=["billiard", "torus", "unfolded"], default="billiard")
    p.add_argument("--slope")
    p.add_argument("--start", default="0,1/2")
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--size", type=int, default=400)
    p.add_argument("--words", help="comma-separated words drawn side by side")
    p.add_argument("--events", help="crossing-event log to draw as a torus view")
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--no-grid", action="store_true")
    p.add_argument("-o", "--output", required=True)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        code, text, payload = args.func(args)
    except RejectedError as exc:
        v = exc.verdict
        if args.json:
            print(json.dumps({"valid": False, "step": v.step, "reason": v.reason}, indent=2), file=stdout)
        else:
            print(f"Rejected at step {v.step}: {v.reason}", file=stdout)
        return EXIT_REJECTED
    except VertexHitError as exc:
        print(f"error: trajectory hits a vertex at ({format_number(exc.x)}, {format_number(exc.y)})", file=stderr)
        return EXIT_ERROR
    except (CutseqError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ERROR
    if args.json:
        print(json.dumps(payload, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
