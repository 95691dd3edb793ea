"""
Right and left word reversing over a Garside monoid given by lcm selectors.

Internally letters are signed integer codes: a generator is a positive code
1..m (its position in ``ctx.alphabet`` plus one) and its inverse is the
negated code. Public functions take and return BraidWords.

Right reversing rewrites x^-1 y into f_L(x, y) f_L(y, x)^-1 until the word has
the shape u v^-1; left reversing rewrites x y^-1 into f_R(y, x)^-1 f_R(x, y)
until it has the shape v^-1 u. The results do not depend on the rewrite order,
which lets the default engine work cell by cell on a reversing grid with a
memo of already completed cells, while ``reverse_by_rewriting`` applies the
rules literally to a list (used for traces and cross-checks).
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, NamedTuple, Sequence

from .words import BraidWord, Generator, Letter

Codes = tuple[int, ...]

# Multiplier of the step budget; see _budget.
STEP_BUDGET_FACTOR = 64


class ReversingError(RuntimeError):
    """Reversing exceeded its step budget: the selector table is inconsistent."""


class ContextError(ValueError):
    """A word does not fit the alphabet of a context."""


@dataclasses.dataclass(frozen=True, eq=False)
class GarsideContext:
    """A Garside monoid presented by an alphabet and lcm selectors.

    Selector tables map pairs of generator codes to code tuples, with
    x f_L(x, y) = y f_L(y, x) the left lcm (common right multiple) and
    f_R(x, y) y = f_R(y, x) x the right lcm. ``automorphism[c]`` is the code of
    the image of generator c under conjugation by the Garside element
    (entry 0 unused); ``sub_alphabet`` holds the codes of the generators of the
    parabolic submonoid on one strand fewer.
    """

    strands: int
    family: str
    alphabet: tuple[Generator, ...]
    left_selector: dict[tuple[int, int], Codes]
    right_selector: dict[tuple[int, int], Codes]
    garside_word: Codes
    automorphism: tuple[int, ...]
    sub_alphabet: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        code = {g: c for c, g in enumerate(self.alphabet, start=1)}
        object.__setattr__(self, "_code", code)
        # Left reversing runs as right reversing on mirrored words.
        mirrored = {(a, b): tuple(reversed(self.right_selector[(b, a)])) for (a, b) in self.right_selector}
        object.__setattr__(self, "_mirror_selector", mirrored)
        object.__setattr__(self, "_left_cells", {})
        object.__setattr__(self, "_mirror_cells", {})
        longest = max((len(v) for v in self.left_selector.values()), default=1)
        longest = max([longest] + [len(v) for v in self.right_selector.values()])
        object.__setattr__(self, "max_selector_length", max(longest, 1))
        order = 1
        ident = tuple(range(len(self.automorphism)))
        perm = tuple(self.automorphism)
        while perm != ident:
            perm = tuple(self.automorphism[c] for c in perm)
            order += 1
        object.__setattr__(self, "automorphism_order", order)

    def __repr__(self) -> str:
        return f"GarsideContext({self.name or self.family}, strands={self.strands})"

    @property
    def size(self) -> int:
        return len(self.alphabet)

    def code(self, gen: Generator) -> int:
        try:
            return self._code[gen]
        except KeyError:
            raise ContextError(f"generator {gen} is not in the alphabet of {self!r}") from None

    def encode(self, w: BraidWord) -> Codes:
        if w.family != self.family:
            raise ContextError(f"{w.family} word used with a {self.family} context")
        return tuple(self.code(x.gen) * x.sign for x in w.letters)

    def decode(self, codes: Iterable[int], strands: int | None = None) -> BraidWord:
        letters = tuple(Letter(self.alphabet[abs(c) - 1], 1 if c > 0 else -1) for c in codes)
        return BraidWord(strands or self.strands, self.family, letters)

    def garside(self) -> BraidWord:
        return self.decode(self.garside_word)

    def f_left(self, x: Generator, y: Generator) -> BraidWord:
        return self.decode(self.left_selector[(self.code(x), self.code(y))])

    def f_right(self, x: Generator, y: Generator) -> BraidWord:
        return self.decode(self.right_selector[(self.code(x), self.code(y))])

    def twist_codes(self, codes: Sequence[int], k: int = 1) -> Codes:
        """Apply the Garside automorphism k times letterwise (k may be negative)."""
        k %= self.automorphism_order
        if k == 0:
            return tuple(codes)
        table = list(range(len(self.automorphism)))
        for _ in range(k):
            table = [self.automorphism[c] for c in table]
        return tuple(table[c] if c > 0 else -table[-c] for c in codes)

    def twist(self, w: BraidWord, k: int = 1) -> BraidWord:
        return self.decode(self.twist_codes(self.encode(w), k), w.strands)


class ReversedPair(NamedTuple):
    numerator: BraidWord
    denominator: BraidWord


class TraceStep(NamedTuple):
    position: int
    x: str
    y: str
    replacement: str


# ---------------------------------------------------------------------------
# Grid engine on codes.


class _Counter:
    __slots__ = ("steps", "budget")

    def __init__(self, budget: int):
        self.steps = 0
        self.budget = budget

    def tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise ReversingError(f"reversing exceeded its step budget of {self.budget} cells")


def _budget(ctx: GarsideContext, pos: int, neg: int) -> int:
    m = ctx.max_selector_length
    return STEP_BUDGET_FACTOR * (pos + 1) * (neg + 1) * m * m * max(len(ctx.garside_word), 1)


def _cell(selector, memo, cur: Codes, b: int, counter: _Counter) -> tuple[Codes, Codes]:
    """Reverse cur^-1 b into b' cur'^-1, returning (b', cur')."""
    key = (cur, b)
    hit = memo.get(key)
    if hit is not None:
        return hit
    counter.tick()
    if len(cur) == 1:
        a = cur[0]
        res = (selector[(a, b)], selector[(b, a)])
    else:
        res = _rev(selector, memo, cur, (b,), counter)
    memo[key] = res
    return res


def _rev1(selector, memo, a: int, bs: Sequence[int], counter: _Counter) -> tuple[list[int], Codes]:
    """Reverse a^-1 bs into bs' cur^-1."""
    out: list[int] = []
    cur: Codes = (a,)
    for idx, b in enumerate(bs):
        if not cur:
            out.extend(bs[idx:])
            break
        piece, cur = _cell(selector, memo, cur, b, counter)
        out.extend(piece)
    return out, cur


def _rev(selector, memo, neg: Sequence[int], pos: Sequence[int], counter: _Counter) -> tuple[Codes, Codes]:
    """Reverse neg^-1 pos (both positive code sequences) into pos' neg'^-1.

    ``neg`` is spelled left to right, so neg^-1 ends with neg[0]^-1, the letter
    adjacent to ``pos``.
    """
    neg_out: list[int] = []
    cur_pos: Sequence[int] = pos
    for a in neg:
        cur_pos, piece = _rev1(selector, memo, a, cur_pos, counter)
        neg_out.extend(piece)
    return tuple(cur_pos), tuple(neg_out)


def _right_reverse_codes(selector, memo, codes: Sequence[int], counter: _Counter) -> tuple[Codes, Codes]:
    num: list[int] = []
    den: Codes = ()
    i, n = 0, len(codes)
    while i < n:
        j = i
        if codes[i] < 0:
            while j < n and codes[j] < 0:
                j += 1
            run = tuple(-c for c in reversed(codes[i:j]))
            den = run + den
        else:
            while j < n and codes[j] > 0:
                j += 1
            run = codes[i:j]
            if den:
                piece, den = _rev(selector, memo, den, run, counter)
                num.extend(piece)
            else:
                num.extend(run)
        i = j
    return tuple(num), den


def right_reverse_codes(ctx: GarsideContext, codes: Sequence[int]) -> tuple[Codes, Codes]:
    pos = sum(1 for c in codes if c > 0)
    counter = _Counter(_budget(ctx, pos, len(codes) - pos))
    return _right_reverse_codes(ctx.left_selector, ctx._left_cells, codes, counter)


def left_reverse_codes(ctx: GarsideContext, codes: Sequence[int]) -> tuple[Codes, Codes]:
    """Left reversing: returns (N_L, D_L) with D_L^-1 N_L equivalent to codes."""
    pos = sum(1 for c in codes if c > 0)
    counter = _Counter(_budget(ctx, pos, len(codes) - pos))
    num, den = _right_reverse_codes(ctx._mirror_selector, ctx._mirror_cells, codes[::-1], counter)
    return num[::-1], den[::-1]


def inverse_codes(codes: Sequence[int]) -> Codes:
    return tuple(-c for c in reversed(codes))


def right_reverse(w: BraidWord, ctx: GarsideContext) -> ReversedPair:
    num, den = right_reverse_codes(ctx, ctx.encode(w))
    return ReversedPair(ctx.decode(num, w.strands), ctx.decode(den, w.strands))


def left_reverse(w: BraidWord, ctx: GarsideContext) -> ReversedPair:
    num, den = left_reverse_codes(ctx, ctx.encode(w))
    return ReversedPair(ctx.decode(num, w.strands), ctx.decode(den, w.strands))


# ---------------------------------------------------------------------------
# Literal rewriting, for traces and strategy cross-checks.


def reverse_by_rewriting(
    w: BraidWord, ctx: GarsideContext, side: str = "right", strategy: str = "leftmost", trace: list | None = None
) -> ReversedPair:
    """Apply the reversing rule to one subword at a time.

    `side` is "right" (rewrite x^-1 y) or "left" (rewrite x y^-1); `strategy`
    picks the leftmost or rightmost reducible subword. When `trace` is a list,
    one TraceStep per rewrite is appended to it.
    """
    if side not in ("right", "left") or strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"bad side/strategy: {side!r}, {strategy!r}")
    codes = list(ctx.encode(w))
    pos = sum(1 for c in codes if c > 0)
    counter = _Counter(_budget(ctx, pos, len(codes) - pos))
    if side == "right":
        def reducible(i):
            return codes[i] < 0 < codes[i + 1]
    else:
        def reducible(i):
            return codes[i] > 0 > codes[i + 1]
    while True:
        candidates = range(len(codes) - 1) if strategy == "leftmost" else range(len(codes) - 2, -1, -1)
        i = next((i for i in candidates if reducible(i)), None)
        if i is None:
            break
        counter.tick()
        if side == "right":
            x, y = -codes[i], codes[i + 1]
            repl = list(ctx.left_selector[(x, y)]) + list(inverse_codes(ctx.left_selector[(y, x)]))
        else:
            x, y = codes[i], -codes[i + 1]
            repl = list(inverse_codes(ctx.right_selector[(y, x)])) + list(ctx.right_selector[(x, y)])
        if trace is not None:
            trace.append(TraceStep(i, str(ctx.alphabet[x - 1]), str(ctx.alphabet[y - 1]), str(ctx.decode(repl, w.strands))))
        codes[i:i + 2] = repl
    if side == "right":
        split = next((i for i, c in enumerate(codes) if c < 0), len(codes))
        num, den = codes[:split], inverse_codes(codes[split:])
    else:
        split = next((i for i, c in enumerate(codes) if c > 0), len(codes))
        num, den = codes[split:], inverse_codes(codes[:split])
    return ReversedPair(ctx.decode(num, w.strands), ctx.decode(den, w.strands))


def trace_to_json(trace: Sequence[TraceStep]) -> list[dict]:
    return [step._asdict() for step in trace]


# ---------------------------------------------------------------------------
# Divisibility and gcd.


def _positive_codes(w: BraidWord, ctx: GarsideContext) -> Codes:
    codes = ctx.encode(w)
    if any(c < 0 for c in codes):
        raise ContextError(f"expected a positive word, got {w}")
    return codes


def left_quotient_codes(ctx: GarsideContext, u: Sequence[int], v: Sequence[int]) -> Codes | None:
    """u\\v when u left-divides v, else None."""
    num, den = right_reverse_codes(ctx, inverse_codes(u) + tuple(v))
    return None if den else num


def right_quotient_codes(ctx: GarsideContext, u: Sequence[int], v: Sequence[int]) -> Codes | None:
    """u/v when v right-divides u, else None."""
    num, den = left_reverse_codes(ctx, tuple(u) + inverse_codes(v))
    return None if den else num


def left_gcd_codes(ctx: GarsideContext, u: Sequence[int], v: Sequence[int]) -> Codes:
    u = tuple(u)
    num1, den1 = right_reverse_codes(ctx, inverse_codes(u) + tuple(v))
    _, u2 = left_reverse_codes(ctx, num1 + inverse_codes(den1))
    num, _ = left_reverse_codes(ctx, u + inverse_codes(u2))
    return num


def divides_left(u: BraidWord, v: BraidWord, ctx: GarsideContext) -> BraidWord | None:
    """Return u\\v if u left-divides v (v = u·(u\\v)), else None."""
    q = left_quotient_codes(ctx, _positive_codes(u, ctx), _positive_codes(v, ctx))
    return None if q is None else ctx.decode(q, max(u.strands, v.strands))


def divides_right(u: BraidWord, v: BraidWord, ctx: GarsideContext) -> BraidWord | None:
    """Return v/u if u right-divides v (v = (v/u)·u), else None."""
    q = right_quotient_codes(ctx, _positive_codes(v, ctx), _positive_codes(u, ctx))
    return None if q is None else ctx.decode(q, max(u.strands, v.strands))


def left_gcd(u: BraidWord, v: BraidWord, ctx: GarsideContext) -> BraidWord:
    g = left_gcd_codes(ctx, _positive_codes(u, ctx), _positive_codes(v, ctx))
    return ctx.decode(g, max(u.strands, v.strands))
