"""
σ-definite representatives and the Dehornoy ordering.

A word is σ_i-positive (negative) when its highest generator σ_i occurs, and
only with positive (negative) exponent. For band words the highest generators
are the a_{p,q} with maximal q, reported at level q-1 so that classes agree
with the Artin translation.
"""

from __future__ import annotations

import dataclasses
import enum

from .classical import split_codes
from .fractions import context_for, fraction_codes, index_and_reduce
from .reversing import Codes, GarsideContext, inverse_codes
from .words import BraidWord, WordError, free_reduce, invert_word, letter_level


class InvariantError(AssertionError):
    """An algorithm postcondition failed; always a bug, never bad input."""


TRIVIAL = "trivial"
POSITIVE = "positive"
NEGATIVE = "negative"


@dataclasses.dataclass(frozen=True)
class SigmaClass:
    kind: str
    level: int | None = None

    def __str__(self) -> str:
        return self.kind if self.level is None else f"{self.kind}({self.level})"

    def opposite(self) -> SigmaClass:
        flip = {TRIVIAL: TRIVIAL, POSITIVE: NEGATIVE, NEGATIVE: POSITIVE}
        return SigmaClass(flip[self.kind], self.level)


def classify_sigma(w: BraidWord) -> SigmaClass | None:
    """Syntactic σ-class of a word, or None when it is not σ-definite."""
    if not w.letters:
        return SigmaClass(TRIVIAL)
    top = max(letter_level(x.gen) for x in w.letters)
    signs = {x.sign for x in w.letters if letter_level(x.gen) == top}
    if len(signs) != 1:
        return None
    return SigmaClass(POSITIVE if signs == {1} else NEGATIVE, top)


class Order(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"


@dataclasses.dataclass(frozen=True)
class SigmaRun:
    """What one run of the σ-definite algorithm did."""

    word: BraidWord
    index: int
    passes: tuple[tuple[int, int, int | None], ...]  # (e, t, breadth) per pass; breadth None if unsplit
    sigma_class: SigmaClass


def _garside_power_inverse(ctx: GarsideContext, m: int) -> Codes:
    return inverse_codes(ctx.garside_word) * m


def _expand(ctx: GarsideContext, t: int, entries: list[Codes]) -> Codes:
    """Δ^{-t+s-1} u_s Δ^-1 u_{s-1} ··· u_2 Δ^-1 u_1 for entries (u_s, ..., u_1)."""
    s = len(entries)
    delta_inv = _garside_power_inverse(ctx, 1)
    out: list[int] = list(_garside_power_inverse(ctx, t - s + 1))
    for pos, entry in enumerate(entries):
        if pos:
            out.extend(delta_inv)
        out.extend(entry)
    return tuple(out)


def sigma_definite_run(w: BraidWord, reduce: bool = False) -> SigmaRun:
    k, v = index_and_reduce(w)
    ctx = context_for(w.family, k)
    v_codes = ctx.encode(v.with_strands(k))
    passes = []
    out: Codes | None = None
    e = 1
    for e in (1, -1):
        t, u = fraction_codes(ctx, v_codes if e == 1 else inverse_codes(v_codes))
        if t == 0 or k == 2:
            if k == 2 and t > 0 and u:
                raise InvariantError(f"nonempty numerator {ctx.decode(u)} with t = {t} in the 2-strand group")
            passes.append((e, t, None))
            out = _garside_power_inverse(ctx, t) + u
            break
        if not u:
            # Δ^-t alone is already σ_{k-1}-negative.
            passes.append((e, t, 0))
            out = _garside_power_inverse(ctx, t)
            break
        entries = split_codes(ctx, u)
        s = len(entries)
        passes.append((e, t, s))
        if t >= s - 1:
            out = _expand(ctx, t, entries)
            break
    if out is None:
        raise InvariantError(f"second pass did not reach t >= s-1 on {w}: passes {passes}")
    if e == -1:
        out = inverse_codes(out)
    result = ctx.decode(out, w.strands)
    if reduce:
        result = free_reduce(result)
    cls = classify_sigma(result)
    if cls is None:
        raise InvariantError(f"output {result} for {w} is not σ-definite")
    last_t = passes[-1][1]
    if last_t > 0 and k > 2:
        expected = SigmaClass(NEGATIVE if e == 1 else POSITIVE, k - 1)
        if cls != expected:
            raise InvariantError(f"output {result} for {w} has class {cls}, expected {expected}")
    return SigmaRun(result, k, tuple(passes), cls)


def sigma_definite(w: BraidWord, reduce: bool = False) -> BraidWord:
    """An equivalent σ-definite word of length at most (n²-n-1) times the geodesic length."""
    return sigma_definite_run(w, reduce).word


def dehornoy_compare(w1: BraidWord, w2: BraidWord) -> Order:
    if w1.family != w2.family:
        raise WordError("cannot compare words of different families")
    n = max(w1.strands, w2.strands)
    quotient = invert_word(w1.with_strands(n)) * w2.with_strands(n)
    cls = sigma_definite_run(quotient).sigma_class
    if cls.kind == TRIVIAL:
        return Order.EQUAL
    return Order.LESS if cls.kind == POSITIVE else Order.GREATER
