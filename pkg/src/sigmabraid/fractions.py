"""
Quotients of positive braids: the Δ-power fraction Δ^-t·v, the
Garside–Thurston form β'^-1·β'' and the index (minimal strand count).

Every function works in any GarsideContext, so the same code computes δ-power
fractions in the dual monoid.
"""

from __future__ import annotations

import dataclasses
import functools

from .classical import artin_context
from .reversing import (
    Codes,
    GarsideContext,
    inverse_codes,
    left_gcd_codes,
    left_quotient_codes,
    left_reverse_codes,
    right_quotient_codes,
    right_reverse_codes,
)
from .words import ARTIN, BraidWord, word_index


def context_for(family: str, n: int) -> GarsideContext:
    if family == ARTIN:
        return artin_context(n)
    from .dual import dual_context

    return dual_context(n)


def _resolve(w: BraidWord, ctx: GarsideContext | int | None) -> GarsideContext:
    if isinstance(ctx, GarsideContext):
        return ctx
    return context_for(w.family, w.strands if ctx is None else ctx)


@dataclasses.dataclass(frozen=True)
class Fraction:
    """Δ^-t · numerator, with Δ not left-dividing the numerator unless t = 0."""

    t: int
    numerator: BraidWord
    strands: int

    def word(self, ctx: GarsideContext) -> BraidWord:
        codes = inverse_codes(ctx.garside_word) * self.t + ctx.encode(self.numerator)
        return ctx.decode(codes, self.numerator.strands)


@dataclasses.dataclass(frozen=True)
class GTForm:
    """neg^-1 · pos with trivial left gcd."""

    neg: BraidWord
    pos: BraidWord
    strands: int

    def word(self) -> BraidWord:
        from .words import invert_word

        return invert_word(self.neg) * self.pos


@functools.lru_cache(maxsize=None)
def _complements(ctx: GarsideContext) -> dict[int, Codes]:
    """u_x with Δ = u_x·x, for every generator code x."""
    out = {}
    for x in range(1, ctx.size + 1):
        u = right_quotient_codes(ctx, ctx.garside_word, (x,))
        if u is None:
            raise AssertionError(f"{ctx.alphabet[x - 1]} does not right-divide the Garside element of {ctx!r}")
        out[x] = u
    return out


def fraction_codes(ctx: GarsideContext, codes: Codes) -> tuple[int, Codes]:
    comp = _complements(ctx)
    # Split into w_0 x_1^-1 w_1 ... x_t^-1 w_t.
    blocks: list[list[int]] = [[]]
    for c in codes:
        if c < 0:
            blocks.append(list(comp[-c]))
        else:
            blocks[-1].append(c)
    t = len(blocks) - 1
    v: list[int] = []
    for j, block in enumerate(blocks):
        v.extend(ctx.twist_codes(block, t - j))
    v_codes: Codes = tuple(v)
    garside = ctx.garside_word
    while t > 0:
        q = left_quotient_codes(ctx, garside, v_codes)
        if q is None:
            break
        v_codes = q
        t -= 1
    return t, v_codes


def garside_fraction(w: BraidWord, ctx: GarsideContext | int | None = None) -> Fraction:
    ctx = _resolve(w, ctx)
    t, v = fraction_codes(ctx, ctx.encode(w))
    return Fraction(t, ctx.decode(v, w.strands), ctx.strands)


def gt_codes(ctx: GarsideContext, codes: Codes) -> tuple[Codes, Codes]:
    num, den = right_reverse_codes(ctx, codes)
    pos, neg = left_reverse_codes(ctx, num + inverse_codes(den))
    return neg, pos


def garside_thurston(w: BraidWord, ctx: GarsideContext | int | None = None) -> GTForm:
    ctx = _resolve(w, ctx)
    neg, pos = gt_codes(ctx, ctx.encode(w))
    return GTForm(ctx.decode(neg, w.strands), ctx.decode(pos, w.strands), ctx.strands)


def index_and_reduce(w: BraidWord) -> tuple[int, BraidWord]:
    """Index of the braid of `w` and an equivalent word over that many strands.

    The word is neg^-1·pos from the Garside–Thurston form; both parts are
    positive words in the smallest parabolic submonoid containing the braid.
    """
    ctx = context_for(w.family, w.strands)
    neg, pos = gt_codes(ctx, ctx.encode(w))
    reduced = ctx.decode(inverse_codes(neg) + pos, w.strands)
    return word_index(reduced), reduced


def gt_gcd_is_trivial(form: GTForm, ctx: GarsideContext) -> bool:
    return not left_gcd_codes(ctx, ctx.encode(form.neg), ctx.encode(form.pos))
