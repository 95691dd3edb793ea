"""
Line-oriented command line interface.

Every subcommand reads words from its positional arguments or, when none are
given, from stdin (one per line; binary commands take ``u , v`` per line and
consume positional arguments in pairs). Output is one line per input, in the
word grammar (text mode) or as one JSON object per line (``--json``).

Exit status: 0 on success, 1 if any input line failed to parse (processing
continues), 2 on an internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable, Iterable

from . import oracle
from .classical import splitting
from .dual import DualDerivationError, dual_table
from .fractions import context_for, garside_fraction, garside_thurston, index_and_reduce
from .reversing import ContextError, ReversingError, left_gcd, left_reverse, reverse_by_rewriting, right_reverse, trace_to_json
from .sigmadef import InvariantError, classify_sigma, dehornoy_compare, sigma_definite_run
from .words import ARTIN, BAND, WordError, parse_word

EXIT_OK, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2
_NEGATIVE_TOKEN = re.compile(r"^-\d[\d:]*$")


class _Emitter:
    def __init__(self, args, out):
        self.json = args.json
        self.out = out

    def emit(self, text: str, obj):
        if self.json:
            self.out.write(json.dumps(obj, ensure_ascii=False) + "\n")
        else:
            self.out.write(text + "\n")


def _family(args) -> str:
    return BAND if args.dual else ARTIN


def _inputs(args, stdin, arity: int) -> Iterable[tuple[int, list[str]]]:
    if args.words:
        if len(args.words) % arity:
            raise WordError(f"expected a multiple of {arity} words, got {len(args.words)}")
        for i in range(0, len(args.words), arity):
            yield i // arity + 1, args.words[i:i + arity]
        return
    for lineno, line in enumerate(stdin, start=1):
        line = line.rstrip("\n")
        if arity == 1:
            yield lineno, [line]
        else:
            yield lineno, [part for part in line.split(",")]


def _cmd_reverse(args, words, em):
    (w,) = words
    ctx = context_for(w.family, w.strands)
    side = "left" if args.left else "right"
    if args.trace:
        trace: list = []
        pair = reverse_by_rewriting(w, ctx, side=side, trace=trace)
        em.emit(
            f"{pair.numerator} / {pair.denominator}",
            {"numerator": str(pair.numerator), "denominator": str(pair.denominator), "trace": trace_to_json(trace)},
        )
        return
    pair = left_reverse(w, ctx) if args.left else right_reverse(w, ctx)
    em.emit(f"{pair.numerator} / {pair.denominator}", {"numerator": str(pair.numerator), "denominator": str(pair.denominator)})


def _cmd_gcd(args, words, em):
    u, v = words
    g = left_gcd(u, v, context_for(u.family, u.strands))
    em.emit(str(g), {"gcd": str(g)})


def _cmd_split(args, words, em):
    (w,) = words
    if w.strands < 3:
        raise WordError("split needs at least 3 strands")
    s = splitting(w, context_for(w.family, w.strands))
    entries = [str(e) for e in s.entries]
    em.emit(f"{json.dumps(entries, ensure_ascii=False)} {s.breadth}", {"entries": entries, "breadth": s.breadth})


def _cmd_fraction(args, words, em):
    (w,) = words
    f = garside_fraction(w)
    em.emit(f"{f.t}\t{f.numerator}", {"t": f.t, "numerator": str(f.numerator)})


def _cmd_nf(args, words, em):
    (w,) = words
    g = garside_thurston(w)
    em.emit(f"{g.neg}\t{g.pos}", {"neg": str(g.neg), "pos": str(g.pos)})


def _cmd_index(args, words, em):
    (w,) = words
    k, reduced = index_and_reduce(w)
    em.emit(f"{k}\t{reduced}", {"index": k, "word": str(reduced)})


def _cmd_sigma(args, words, em):
    (w,) = words
    run = sigma_definite_run(w, reduce=args.reduce)
    cls = classify_sigma(run.word)
    if cls != run.sigma_class:
        raise InvariantError(f"class changed after output for {w}")
    level = cls.level
    text = f"{run.word}\t{cls.kind}" + (f" {level}" if level is not None else "")
    em.emit(text, {"word": str(run.word), "class": cls.kind, "level": level})


def _cmd_compare(args, words, em):
    u, v = words
    order = dehornoy_compare(u, v)
    em.emit(order.value, {"order": order.value})


def _cmd_oracle(args, words, em):
    (w,) = words
    if args.action == "bfs":
        d = oracle.geodesic_length(w, args.radius)
        em.emit("none" if d is None else str(d), {"distance": d})
    else:
        fp = oracle.fingerprint(w)
        em.emit(" ; ".join(" ".join(map(str, img)) for img in fp), {"fingerprint": [list(img) for img in fp]})


COMMANDS: dict[str, tuple[Callable, int]] = {
    "reverse": (_cmd_reverse, 1),
    "gcd": (_cmd_gcd, 2),
    "split": (_cmd_split, 1),
    "fraction": (_cmd_fraction, 1),
    "nf": (_cmd_nf, 1),
    "index": (_cmd_index, 1),
    "sigma": (_cmd_sigma, 1),
    "compare": (_cmd_compare, 2),
    "oracle": (_cmd_oracle, 1),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--strands", type=int, required=True, help="strand count (>= 2)")
    common.add_argument("--dual", action="store_true", help="band generators a_{p,q} instead of Artin generators")
    common.add_argument("--json", action="store_true", help="one JSON object per output line")

    parser = argparse.ArgumentParser(prog="sigmabraid", description="σ-definite braid words via Garside quotients.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("reverse", parents=[common], help="right (or left) reverse a word")
    p.add_argument("--left", action="store_true", help="left reversing instead of right reversing")
    p.add_argument("--trace", action="store_true", help="rewrite literally and report each step")
    sub.add_parser("gcd", parents=[common], help="left gcd of two positive words")
    sub.add_parser("split", parents=[common], help="splitting of a positive word")
    sub.add_parser("fraction", parents=[common], help="Garside fraction Δ^-t·v")
    sub.add_parser("nf", parents=[common], help="Garside–Thurston form neg^-1·pos")
    sub.add_parser("index", parents=[common], help="index and an equivalent word on that many strands")
    p = sub.add_parser("sigma", parents=[common], help="σ-definite representative")
    p.add_argument("--reduce", action="store_true", help="freely reduce the output and re-check its class")
    sub.add_parser("compare", parents=[common], help="Dehornoy order of two words: <, = or >")
    leaves = [p for name, p in sub.choices.items() if name in COMMANDS]
    p = sub.add_parser("oracle", help="ground-truth queries")
    actions = p.add_subparsers(dest="action", required=True)
    p = actions.add_parser("bfs", parents=[common], help="geodesic length by breadth-first search")
    p.add_argument("--radius", type=int, default=8, help="BFS radius (default 8)")
    leaves.append(p)
    leaves.append(actions.add_parser("fingerprint", parents=[common], help="free-group action images"))
    for p in leaves:
        p.add_argument("words", nargs="*", help="input words; read from stdin when omitted")
        # Let single tokens such as -1:2 through as words rather than options.
        p._negative_number_matcher = _NEGATIVE_TOKEN
    p = sub.add_parser("dual-table", help="dump the derived BKL_n selector tables as JSON")
    p.add_argument("n", type=int)
    return parser


def run(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "dual-table":
        try:
            stdout.write(json.dumps(dual_table(args.n), indent=2, ensure_ascii=False) + "\n")
        except WordError as exc:
            stderr.write(f"error: {exc}\n")
            return EXIT_PARSE
        except DualDerivationError as exc:
            stderr.write(f"internal error: {exc}\n")
            return EXIT_INTERNAL
        return EXIT_OK
    if args.strands < 2:
        stderr.write("error: --strands must be at least 2\n")
        return EXIT_PARSE
    handler, arity = COMMANDS[args.command]
    family = _family(args)
    em = _Emitter(args, stdout)
    status = EXIT_OK
    try:
        items = list(_inputs(args, stdin, arity))
    except WordError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    for lineno, texts in items:
        try:
            if len(texts) != arity:
                raise WordError(f"expected {arity} comma-separated words")
            words = [parse_word(t, args.strands, family) for t in texts]
            handler(args, words, em)
        except (WordError, ContextError) as exc:
            stderr.write(f"line {lineno}: {exc}\n")
            status = max(status, EXIT_PARSE)
        except (InvariantError, ReversingError, DualDerivationError, AssertionError) as exc:
            stderr.write(f"line {lineno}: internal error: {exc}\n")
            return EXIT_INTERNAL
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
