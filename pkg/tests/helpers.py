"""Random word generation and relation rewriting shared by the test modules."""

from __future__ import annotations

import random

from sigmabraid.words import ARTIN, Band, BraidWord, Letter, generators


def random_word(rng: random.Random, strands: int, length: int, family: str = ARTIN, positive: bool = False) -> BraidWord:
    gens = generators(strands, family)
    letters = []
    for _ in range(length):
        sign = 1 if positive else rng.choice((1, -1))
        letters.append(Letter(rng.choice(gens), sign))
    return BraidWord(strands, family, tuple(letters))


def _artin_moves(w: BraidWord) -> list[tuple[int, int, tuple[Letter, ...]]]:
    """(start, stop, replacement) for every relation applicable inside w."""
    moves = []
    xs = w.letters
    for i in range(len(xs) - 1):
        a, b = xs[i], xs[i + 1]
        if abs(a.gen.i - b.gen.i) >= 2:
            moves.append((i, i + 2, (b, a)))
        if a == b.inverse():
            moves.append((i, i + 2, ()))
    for i in range(len(xs) - 2):
        a, b, c = xs[i], xs[i + 1], xs[i + 2]
        if a == c and a.sign == b.sign and abs(a.gen.i - b.gen.i) == 1:
            moves.append((i, i + 3, (b, a, b)))
    return moves


def _band_moves(w: BraidWord) -> list[tuple[int, int, tuple[Letter, ...]]]:
    from sigmabraid.dual import band_presentation

    rules: dict[tuple[Band, Band], list[tuple[Band, Band]]] = {}
    for lhs, rhs in band_presentation(w.strands).relations:
        rules.setdefault(lhs, []).append(rhs)
        rules.setdefault(rhs, []).append(lhs)
    moves = []
    xs = w.letters
    for i in range(len(xs) - 1):
        a, b = xs[i], xs[i + 1]
        if a == b.inverse():
            moves.append((i, i + 2, ()))
        if a.sign == b.sign:
            pair = (a.gen, b.gen) if a.sign > 0 else (b.gen, a.gen)
            for rhs in rules.get(pair, ()):
                if a.sign > 0:
                    moves.append((i, i + 2, (Letter(rhs[0], 1), Letter(rhs[1], 1))))
                else:
                    moves.append((i, i + 2, (Letter(rhs[1], -1), Letter(rhs[0], -1))))
    return moves


def scramble(rng: random.Random, w: BraidWord, steps: int) -> BraidWord:
    """An equivalent word, after `steps` random relation applications or free insertions."""
    gens = generators(w.strands, w.family)
    for _ in range(steps):
        moves = _artin_moves(w) if w.family == ARTIN else _band_moves(w)
        if moves and rng.random() < 0.75:
            start, stop, repl = rng.choice(moves)
            w = w.with_letters(w.letters[:start] + repl + w.letters[stop:])
        else:
            pos = rng.randrange(len(w.letters) + 1)
            x = Letter(rng.choice(gens), rng.choice((1, -1)))
            w = w.with_letters(w.letters[:pos] + (x, x.inverse()) + w.letters[pos:])
    return w


# One "[PASS] criterion N: ..." line per acceptance criterion, printed at the end of the run.
ACCEPTANCE_LINES: list[str] = []


def report(number: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
