"""
Independent ground truth for braid computations.

Equality of braids is decided by the faithful Artin action of B_n on the free
group F_n = <x_1, ..., x_n>: σ_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to
x_i, fixing the other generators. The fingerprint of a word is the tuple of
images of x_1, ..., x_n, as freely reduced words. Nothing here uses word
reversing, so the oracle can check the reversing engine without circularity.

On top of fingerprints: BFS balls in the Cayley graph (geodesic lengths) and
exhaustive enumeration of positive elements, their divisors, tails, gcds and
splittings. These are exponential and guarded by the limits in ``LIMITS``.
"""

from __future__ import annotations

import dataclasses
import functools
from collections import deque
from typing import Iterable, Sequence

from .words import ARTIN, BAND, Artin, Band, BraidWord, Letter, generators

FreeWord = tuple[int, ...]
Fingerprint = tuple[FreeWord, ...]


@dataclasses.dataclass
class OracleLimits:
    max_divisor_length: int = 8
    max_divisor_strands: int = 5
    max_ball_size: int = 10**7


LIMITS = OracleLimits()


class OracleLimitError(RuntimeError):
    pass


def _inv(w: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(w))


def free_concat(*parts: FreeWord) -> FreeWord:
    """Concatenate freely reduced words, cancelling only at the junctions."""
    out: list[int] = []
    for w in parts:
        k = 0
        m = min(len(out), len(w))
        while k < m and out[-1 - k] == -w[k]:
            k += 1
        if k:
            del out[len(out) - k:]
        out.extend(w[k:])
    return tuple(out)


def free_reduce_word(w: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def identity_fingerprint(n: int) -> Fingerprint:
    return tuple((i,) for i in range(1, n + 1))


def _act(images: list[FreeWord], t: int):
    """Right-multiply the braid whose images are `images` by σ_|t|^sign(t), in place."""
    i = abs(t) - 1
    a, b = images[i], images[i + 1]
    if t > 0:
        images[i] = free_concat(a, b, _inv(a))
        images[i + 1] = a
    else:
        images[i] = b
        images[i + 1] = free_concat(_inv(b), a, b)


def band_letter_artin(p: int, q: int) -> tuple[int, ...]:
    """a_{p,q} as signed Artin integers: σ_p ··· σ_{q-2} σ_{q-1} σ_{q-2}^-1 ··· σ_p^-1."""
    return tuple(range(p, q)) + tuple(-i for i in range(q - 2, p - 1, -1))


def artin_ints(w: BraidWord) -> tuple[int, ...]:
    """Signed Artin integers of a word; band letters are expanded."""
    if w.family == ARTIN:
        return tuple(x.gen.i * x.sign for x in w.letters)
    out: list[int] = []
    for x in w.letters:
        piece = band_letter_artin(x.gen.p, x.gen.q)
        out.extend(piece if x.sign > 0 else _inv(piece))
    return tuple(out)


def fingerprint_ints(n: int, ints: Iterable[int], start: Fingerprint | None = None) -> Fingerprint:
    images = list(start if start is not None else identity_fingerprint(n))
    for t in ints:
        _act(images, t)
    return tuple(images)


def fingerprint(w: BraidWord) -> Fingerprint:
    return fingerprint_ints(w.strands, artin_ints(w))


def equivalent(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise ValueError(f"strand mismatch: {w1.strands} vs {w2.strands}")
    return fingerprint(w1) == fingerprint(w2)


def is_trivial(w: BraidWord) -> bool:
    return fingerprint(w) == identity_fingerprint(w.strands)


# ---------------------------------------------------------------------------
# Cayley balls.


def _letters(strands: int, family: str, positive_only: bool = False) -> tuple[Letter, ...]:
    gens = generators(strands, family)
    signs = (1,) if positive_only else (1, -1)
    return tuple(Letter(g, s) for g in gens for s in signs)


def _letter_ints(letter: Letter) -> tuple[int, ...]:
    if isinstance(letter.gen, Artin):
        return (letter.gen.i * letter.sign,)
    piece = band_letter_artin(letter.gen.p, letter.gen.q)
    return piece if letter.sign > 0 else _inv(piece)


@functools.lru_cache(maxsize=32)
def cayley_ball(strands: int, family: str, radius: int) -> dict[Fingerprint, tuple[int, BraidWord]]:
    """All braids within `radius` of the identity, with a geodesic witness each.

    Keys are fingerprints; values are (distance, geodesic word). Witnesses are
    the first found in BFS order with letters tried in canonical order.
    """
    letters = _letters(strands, family)
    moves = [(letter, _letter_ints(letter)) for letter in letters]
    start = identity_fingerprint(strands)
    seen: dict[Fingerprint, tuple[int, tuple[Letter, ...]]] = {start: (0, ())}
    frontier = [(start, ())]
    for dist in range(1, radius + 1):
        nxt = []
        for fp, word in frontier:
            for letter, ints in moves:
                if word and word[-1] == letter.inverse():
                    continue
                new = fingerprint_ints(strands, ints, fp)
                if new not in seen:
                    w2 = word + (letter,)
                    seen[new] = (dist, w2)
                    nxt.append((new, w2))
                    if len(seen) > LIMITS.max_ball_size:
                        raise OracleLimitError(f"ball of radius {radius} exceeds {LIMITS.max_ball_size} elements")
        frontier = nxt
    return {fp: (d, BraidWord(strands, family, w)) for fp, (d, w) in seen.items()}


def geodesic_length(w: BraidWord, radius: int, family: str | None = None) -> int | None:
    """Distance of the braid of `w` from the identity, or None if beyond `radius`.

    `family` selects the generating set (defaults to the word's own family).
    """
    ball = cayley_ball(w.strands, family or w.family, radius)
    hit = ball.get(fingerprint(w))
    return None if hit is None else hit[0]


# ---------------------------------------------------------------------------
# Positive elements and divisors.


@functools.lru_cache(maxsize=64)
def positive_elements(strands: int, family: str, max_length: int) -> tuple[dict[Fingerprint, BraidWord], ...]:
    """Positive elements by length: entry l maps fingerprints to a witness word.

    Both presentations are homogeneous, so every positive word of length l lands
    in entry l.
    """
    if max_length > LIMITS.max_divisor_length + 1 or strands > LIMITS.max_divisor_strands:
        raise OracleLimitError(f"positive enumeration too large: length {max_length}, {strands} strands")
    moves = [(letter, _letter_ints(letter)) for letter in _letters(strands, family, positive_only=True)]
    layers: list[dict[Fingerprint, BraidWord]] = [{identity_fingerprint(strands): BraidWord(strands, family, ())}]
    for _ in range(max_length):
        nxt: dict[Fingerprint, BraidWord] = {}
        for fp, w in layers[-1].items():
            for letter, ints in moves:
                new = fingerprint_ints(strands, ints, fp)
                if new not in nxt:
                    nxt[new] = w.with_letters(w.letters + (letter,))
        layers.append(nxt)
    return tuple(layers)


def _check_positive(w: BraidWord):
    if any(x.sign < 0 for x in w.letters):
        raise ValueError(f"expected a positive word, got {w}")


# Divisor sets depend only on the braid, so equivalent words share an entry.
_DIVISOR_CACHE: dict[tuple, dict[Fingerprint, BraidWord]] = {}


def brute_divisors(w: BraidWord, side: str = "left") -> dict[Fingerprint, BraidWord]:
    """All positive left (or right) divisors of the braid of `w`, by enumeration.

    Keys are fingerprints of the divisors, values witness words.
    """
    _check_positive(w)
    if len(w) > LIMITS.max_divisor_length:
        raise OracleLimitError(f"word too long for divisor enumeration: {len(w)}")
    layers = positive_elements(w.strands, w.family, len(w))
    total = fingerprint(w)
    key = (w.strands, w.family, side, total)
    if key in _DIVISOR_CACHE:
        return dict(_DIVISOR_CACHE[key])
    target = artin_ints(w)
    out: dict[Fingerprint, BraidWord] = {}
    for length, layer in enumerate(layers):
        complement = layers[len(w) - length]
        for fp, d in layer.items():
            d_inv = _inv(artin_ints(d))
            ints = d_inv + target if side == "left" else target + d_inv
            if fingerprint_ints(w.strands, ints) in complement:
                out[fp] = d
    assert total in out
    if len(_DIVISOR_CACHE) < 50_000:
        _DIVISOR_CACHE[key] = out
    return dict(out)


def divides(d: BraidWord, w: BraidWord, side: str = "left") -> bool:
    """Whether positive `d` left (right) divides positive `w`, by enumeration."""
    if len(d) > len(w):
        return False
    layers = positive_elements(w.strands, w.family, len(w))
    d_inv = _inv(artin_ints(d))
    ints = d_inv + artin_ints(w) if side == "left" else artin_ints(w) + d_inv
    return fingerprint_ints(w.strands, ints) in layers[len(w) - len(d)]


def _maximal(candidates: dict[Fingerprint, BraidWord]) -> BraidWord:
    best = max(len(w) for w in candidates.values())
    tops = [w for w in candidates.values() if len(w) == best]
    if len(tops) != 1:
        raise AssertionError(f"no unique maximal element among {tops}")
    return tops[0]


def _twist_word(w: BraidWord, k: int) -> BraidWord:
    """Apply the Garside automorphism of the word's family k times."""
    n = w.strands
    letters = []
    for x in w.letters:
        g = x.gen
        for _ in range(k % (2 if w.family == ARTIN else n)):
            if isinstance(g, Artin):
                g = Artin(n - g.i)
            elif g.q < n:
                g = Band(g.p + 1, g.q + 1)
            else:
                g = Band(1, g.p + 1)
        letters.append(Letter(g, x.sign))
    return w.with_letters(letters)


def _in_sub_monoid(w: BraidWord, n: int) -> bool:
    """Whether a positive word lies in the (n-1)-strand submonoid.

    Both presentations preserve the set of highest letters, so checking any
    single representative suffices.
    """
    if w.family == ARTIN:
        return all(x.gen.i <= n - 2 for x in w.letters)
    return all(x.gen.q <= n - 1 for x in w.letters)


def brute_tail(w: BraidWord, k: int = 0) -> tuple[BraidWord, BraidWord]:
    """Maximal right divisor of `w` lying in the k-fold twisted (n-1)-strand submonoid.

    Returns (u, rest) with u untwisted and rest·twist^k(u) equivalent to w.
    Automorphisms: σ_i ↦ σ_{n-i} for Artin words; a_{p,q} ↦ a_{p+1,q+1}
    (wrapping a_{p,n} ↦ a_{1,p+1}) for band words.
    """
    n = w.strands
    order = 2 if w.family == ARTIN else n
    inside = {}
    for fp, d in brute_divisors(w, side="right").items():
        untwisted = _twist_word(d, (-k) % order)
        if _in_sub_monoid(untwisted, n):
            inside[fp] = untwisted
    u = _maximal(inside)
    twisted = _twist_word(u, k)
    for other in inside.values():
        if not divides(_twist_word(other, k), twisted, side="right"):
            raise AssertionError(f"tail candidate {other} does not right-divide {u}")
    rest_ints = artin_ints(w) + _inv(artin_ints(twisted))
    rest = _positive_witness(n, w.family, rest_ints, len(w) - len(u))
    return u, rest


def _positive_witness(n: int, family: str, ints: Sequence[int], length: int) -> BraidWord:
    layer = positive_elements(n, family, max(length, 0))[length]
    return layer[fingerprint_ints(n, ints)]


def brute_gcd(u: BraidWord, v: BraidWord) -> BraidWord:
    """Maximal common left divisor of two positive words, by enumeration."""
    n = max(u.strands, v.strands)
    u, v = u.with_strands(n), v.with_strands(n)
    du, dv = brute_divisors(u), brute_divisors(v)
    common = {fp: w for fp, w in du.items() if fp in dv}
    g = _maximal(common)
    for d in common.values():
        if not divides(d, g):
            raise AssertionError(f"common divisor {d} does not divide {g}")
    return g


def brute_splitting(w: BraidWord) -> tuple[BraidWord, ...]:
    """Iterated brute-force tails for k = 0, 1, 2, ...; entries leftmost first."""
    entries = []
    rest = w
    k = 0
    while rest.letters:
        u, rest = brute_tail(rest, k)
        entries.append(u)
        k += 1
        if k > 4 * (len(w) + 2):
            raise AssertionError(f"brute splitting of {w} does not terminate")
    return tuple(reversed(entries))


def positive_words(strands: int, family: str, length: int) -> Iterable[BraidWord]:
    """Every positive word of exactly `length` letters (not up to equivalence)."""
    letters = _letters(strands, family, positive_only=True)

    def rec(prefix: tuple[Letter, ...]):
        if len(prefix) == length:
            yield BraidWord(strands, family, prefix)
            return
        for x in letters:
            yield from rec(prefix + (x,))

    return rec(())


def all_words(strands: int, family: str, length: int) -> Iterable[BraidWord]:
    """Every signed word of exactly `length` letters."""
    letters = _letters(strands, family)

    def rec(prefix: tuple[Letter, ...]):
        if len(prefix) == length:
            yield BraidWord(strands, family, prefix)
            return
        for x in letters:
            yield from rec(prefix + (x,))

    return rec(())


def bfs_queue_distance(w: BraidWord, radius: int) -> int | None:
    """Geodesic distance by a plain queue BFS; slower twin of geodesic_length."""
    target = fingerprint(w)
    start = identity_fingerprint(w.strands)
    moves = [_letter_ints(x) for x in _letters(w.strands, w.family)]
    seen = {start: 0}
    queue = deque([start])
    while queue:
        fp = queue.popleft()
        d = seen[fp]
        if fp == target:
            return d
        if d == radius:
            continue
        for ints in moves:
            new = fingerprint_ints(w.strands, ints, fp)
            if new not in seen:
                seen[new] = d + 1
                queue.append(new)
    return None
