"""
The positive braid monoid B+_n: lcm selectors, the half twist Δ_n, the flip
automorphism φ_n and the φ_n-splitting.

The tail and splitting routines only use the context interface (selectors,
automorphism, sub-alphabet), so they serve the dual monoid unchanged.
"""

from __future__ import annotations

import dataclasses
import functools

from . import reversing
from .reversing import Codes, GarsideContext, right_quotient_codes
from .words import ARTIN, Artin, BraidWord, WordError, is_positive


@functools.lru_cache(maxsize=None)
def artin_context(n: int) -> GarsideContext:
    if n < 2:
        raise WordError(f"B+_n needs n >= 2, got {n}")
    gens = tuple(Artin(i) for i in range(1, n))
    left, right = {}, {}
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                left[i, j] = right[i, j] = ()
            elif abs(i - j) >= 2:
                left[i, j] = (j,)
                # f_R(x, y) y = f_R(y, x) x forces f_R(σ_i, σ_j) = σ_i here.
                right[i, j] = (i,)
            else:
                left[i, j] = right[i, j] = (j, i)
    delta = tuple(c for top in range(n - 1, 0, -1) for c in range(1, top + 1))
    auto = (0,) + tuple(n - i for i in range(1, n))
    return GarsideContext(
        strands=n,
        family=ARTIN,
        alphabet=gens,
        left_selector=left,
        right_selector=right,
        garside_word=delta,
        automorphism=auto,
        sub_alphabet=tuple(range(1, n - 1)),
        name=f"B+{n}",
    )


def delta(n: int) -> BraidWord:
    return artin_context(n).garside()


def phi_apply(w: BraidWord, n: int, k: int = 1) -> BraidWord:
    """φ_n^k(w): σ_i ↦ σ_{n-i} letterwise, k times."""
    return artin_context(n).twist(w, k)


@dataclasses.dataclass(frozen=True)
class Splitting:
    """Entries (β_s, ..., β_1), leftmost first, untwisted, over the sub-alphabet."""

    strands: int
    entries: tuple[BraidWord, ...]

    @property
    def breadth(self) -> int:
        return len(self.entries)

    def product(self, ctx: GarsideContext) -> BraidWord:
        """φ^{s-1}(β_s) ··· φ(β_2) β_1 as one word."""
        s = self.breadth
        codes: list[int] = []
        for pos, entry in enumerate(self.entries):
            codes.extend(ctx.twist_codes(ctx.encode(entry), s - 1 - pos))
        return ctx.decode(codes, self.strands)


def tail_codes(ctx: GarsideContext, codes: Codes, k: int, probe_order=None) -> tuple[Codes, Codes]:
    """Greedy maximal right divisor of `codes` inside φ^k(sub-monoid).

    Returns (u, rest) with u untwisted and rest·φ^k(u) equivalent to codes.
    """
    probes = tuple(probe_order) if probe_order is not None else ctx.sub_alphabet
    twisted = {x: ctx.twist_codes((x,), k) for x in probes}
    rest = tuple(codes)
    u: list[int] = []
    progress = True
    while progress and rest:
        progress = False
        for x in probes:
            q = right_quotient_codes(ctx, rest, twisted[x])
            if q is not None:
                rest = q
                u.append(x)
                progress = True
                break
    u.reverse()
    return tuple(u), rest


def split_codes(ctx: GarsideContext, codes: Codes) -> list[Codes]:
    """The splitting of a positive code word, entries leftmost first."""
    entries: list[Codes] = []
    rest = tuple(codes)
    k = 0
    empty_run = 0
    while rest:
        u, rest = tail_codes(ctx, rest, k)
        entries.append(u)
        empty_run = empty_run + 1 if not u else 0
        if empty_run > ctx.automorphism_order:
            raise reversing.ReversingError(f"splitting made no progress on {ctx.decode(codes)}")
        k += 1
    entries.reverse()
    return entries


def _check_splittable(w: BraidWord, n: int):
    if n < 3:
        raise WordError(f"splitting needs n >= 3, got {n}")
    if not is_positive(w):
        raise WordError(f"splitting needs a positive word, got {w}")


def tail(w: BraidWord, n: int, k: int = 0) -> tuple[BraidWord, BraidWord]:
    _check_splittable(w, n)
    ctx = artin_context(n)
    u, rest = tail_codes(ctx, ctx.encode(w), k)
    return ctx.decode(u, w.strands), ctx.decode(rest, w.strands)


def splitting(w: BraidWord, ctx: GarsideContext) -> Splitting:
    if not w.letters:
        raise WordError("the splitting is only defined for nontrivial braids")
    if not is_positive(w):
        raise WordError(f"splitting needs a positive word, got {w}")
    entries = split_codes(ctx, ctx.encode(w))
    return Splitting(w.strands, tuple(ctx.decode(e, w.strands) for e in entries))


def phi_splitting(w: BraidWord, n: int) -> Splitting:
    _check_splittable(w, n)
    return splitting(w, artin_context(n))


def phi_breadth(w: BraidWord, n: int) -> int:
    if not w.letters:
        return 0
    return phi_splitting(w, n).breadth


def alternating_nf(w: BraidWord, n: int) -> tuple[BraidWord, ...]:
    """Recursive splitting down to B+_2.

    Returns pieces whose concatenation is equivalent to `w`; each piece is a
    power of one generator, already twisted into place (empty pieces mark empty
    splitting entries).
    """
    if not is_positive(w):
        raise WordError(f"alternating normal form needs a positive word, got {w}")
    if n == 2:
        return (w,)
    if not w.letters:
        return ()
    ctx = artin_context(n)
    split = phi_splitting(w, n)
    s = split.breadth
    pieces: list[BraidWord] = []
    for pos, entry in enumerate(split.entries):
        inner = alternating_nf(entry.with_strands(max(entry.strands, n - 1)), n - 1) if entry.letters else (entry,)
        pieces.extend(ctx.twist(p.with_strands(w.strands), s - 1 - pos) for p in inner)
    return tuple(pieces)
