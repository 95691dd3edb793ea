"""
The dual (Birman–Ko–Lee) braid monoid BKL_n on band generators a_{p,q}.

No lcm selectors are written by hand here. ``dual_context`` enumerates the
left divisors of δ_n = a_{1,2} a_{2,3} ··· a_{n-1,n} with the free-group
oracle, reads every atom-pair lcm off that lattice, and validates each table
entry against the defining relations and the conjugation law before use.
"""

from __future__ import annotations

import dataclasses
import functools
from collections import deque

from . import oracle
from .classical import Splitting, splitting
from .reversing import GarsideContext
from .words import ARTIN, BAND, Band, BraidWord, Letter, WordError, generators

# Positive-element enumeration for the lattice is exponential in n.
MAX_DUAL_STRANDS = 6


class DualDerivationError(RuntimeError):
    """The derived tables failed validation: a bug, not a user error."""


def band_to_artin(w: BraidWord) -> BraidWord:
    if w.family == ARTIN:
        return w
    ints = oracle.artin_ints(w)
    from .words import artin_word

    return artin_word(w.strands, ints)


@dataclasses.dataclass(frozen=True)
class BandPresentation:
    n: int
    relations: tuple[tuple[tuple[Band, ...], tuple[Band, ...]], ...]

    def equivalence_class(self, word: tuple[Band, ...], limit: int = 200_000) -> set[tuple[Band, ...]]:
        """All positive words reachable from `word` by relation rewrites."""
        rules: dict[tuple[Band, ...], list[tuple[Band, ...]]] = {}
        for lhs, rhs in self.relations:
            rules.setdefault(lhs, []).append(rhs)
            rules.setdefault(rhs, []).append(lhs)
        seen = {tuple(word)}
        queue = deque(seen)
        while queue:
            cur = queue.popleft()
            for i in range(len(cur) - 1):
                for repl in rules.get(cur[i:i + 2], ()):
                    new = cur[:i] + repl + cur[i + 2:]
                    if new not in seen:
                        seen.add(new)
                        queue.append(new)
                        if len(seen) > limit:
                            raise DualDerivationError("relation class too large")
        return seen


def _disjoint_or_nested(a: Band, b: Band) -> bool:
    (p, q), (r, s) = a, b
    disjoint = q < r or s < p
    nested = r < p < q < s or p < r < s < q
    return disjoint or nested


@functools.lru_cache(maxsize=None)
def band_presentation(n: int) -> BandPresentation:
    gens = generators(n, BAND)
    rels = []
    for a in gens:
        for b in gens:
            if a < b and _disjoint_or_nested(a, b):
                rels.append(((a, b), (b, a)))
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            for r in range(q + 1, n + 1):
                apq, aqr, apr = Band(p, q), Band(q, r), Band(p, r)
                rels.append(((apq, aqr), (aqr, apr)))
                rels.append(((aqr, apr), (apr, apq)))
    return BandPresentation(n, tuple(rels))


def delta_word(n: int) -> BraidWord:
    return BraidWord(n, BAND, tuple(Letter(Band(p, p + 1), 1) for p in range(1, n)))


def ff_generator(gen: Band, n: int) -> Band:
    """Conjugation by δ_n on a generator (hypothesis checked by dual_context)."""
    if gen.q < n:
        return Band(gen.p + 1, gen.q + 1)
    return Band(1, gen.p + 1)


def _layers(n: int):
    saved = (oracle.LIMITS.max_divisor_strands, oracle.LIMITS.max_divisor_length)
    oracle.LIMITS.max_divisor_strands = max(saved[0], n)
    oracle.LIMITS.max_divisor_length = max(saved[1], n)
    try:
        return oracle.positive_elements(n, BAND, n - 1)
    finally:
        oracle.LIMITS.max_divisor_strands, oracle.LIMITS.max_divisor_length = saved


def _simple_elements(n: int, layers) -> list[BraidWord]:
    d_ints = oracle.artin_ints(delta_word(n))
    simples = []
    for length, layer in enumerate(layers):
        complement = layers[n - 1 - length]
        for w in layer.values():
            if oracle.fingerprint_ints(n, oracle._inv(oracle.artin_ints(w)) + d_ints) in complement:
                simples.append(w)
    return simples


def _lcm_tables(n: int, gens, layers, simples):
    ints = {g: oracle.artin_ints(BraidWord(n, BAND, (Letter(g, 1),))) for g in gens}

    def quotient(s: BraidWord, g: Band, side: str) -> BraidWord | None:
        s_ints = oracle.artin_ints(s)
        g_inv = oracle._inv(ints[g])
        word = g_inv + s_ints if side == "left" else s_ints + g_inv
        if len(s) == 0:
            return None
        return layers[len(s) - 1].get(oracle.fingerprint_ints(n, word))

    left, right = {}, {}
    for x in gens:
        for y in gens:
            if x == y:
                left[x, y] = right[x, y] = ()
                continue
            for side, table in (("left", left), ("right", right)):
                best = None
                for s in simples:
                    if best is not None and len(s) > len(best[0]):
                        break
                    qx, qy = quotient(s, x, side), quotient(s, y, side)
                    if qx is not None and qy is not None:
                        if best is not None and oracle.fingerprint(s) != oracle.fingerprint(best[0]):
                            raise DualDerivationError(f"two minimal common multiples of {x}, {y}")
                        best = (s, qx, qy)
                if best is None:
                    raise DualDerivationError(f"no common multiple of {x}, {y} below δ_{n}")
                # x f_L(x, y) = s on the left side; f_R(x, y) y = s on the right side.
                qx, qy = (best[1], best[2]) if side == "left" else (best[2], best[1])
                table[x, y] = tuple(letter.gen for letter in qx.letters)
                table[y, x] = tuple(letter.gen for letter in qy.letters)
    return left, right


def _validate(n: int, gens, left, right, auto):
    pres = band_presentation(n)
    for x in gens:
        for y in gens:
            if x >= y:
                continue
            cls = pres.equivalence_class((x,) + left[x, y])
            if (y,) + left[y, x] not in cls:
                raise DualDerivationError(f"left selector for {x}, {y} violates the band relations")
            cls = pres.equivalence_class(right[x, y] + (y,))
            if right[y, x] + (x,) not in cls:
                raise DualDerivationError(f"right selector for {x}, {y} violates the band relations")
    d = delta_word(n)
    d_inv = oracle._inv(oracle.artin_ints(d))
    for g in gens:
        conj = oracle.artin_ints(d) + oracle.artin_ints(BraidWord(n, BAND, (Letter(g, 1),))) + d_inv
        image = oracle.artin_ints(BraidWord(n, BAND, (Letter(auto[g], 1),)))
        if oracle.fingerprint_ints(n, conj) != oracle.fingerprint_ints(n, image):
            raise DualDerivationError(f"δ_{n} {g} δ_{n}^-1 is not {auto[g]}")


@functools.lru_cache(maxsize=None)
def dual_context(n: int) -> GarsideContext:
    if n < 2:
        raise WordError(f"BKL_n needs n >= 2, got {n}")
    if n > MAX_DUAL_STRANDS:
        raise DualDerivationError(f"lattice derivation is limited to n <= {MAX_DUAL_STRANDS}")
    gens = generators(n, BAND)
    code = {g: c for c, g in enumerate(gens, start=1)}
    layers = _layers(n)
    simples = _simple_elements(n, layers)
    left, right = _lcm_tables(n, gens, layers, simples)
    auto = {g: ff_generator(g, n) for g in gens}
    _validate(n, gens, left, right, auto)
    return GarsideContext(
        strands=n,
        family=BAND,
        alphabet=gens,
        left_selector={(code[x], code[y]): tuple(code[g] for g in v) for (x, y), v in left.items()},
        right_selector={(code[x], code[y]): tuple(code[g] for g in v) for (x, y), v in right.items()},
        garside_word=tuple(code[Band(p, p + 1)] for p in range(1, n)),
        automorphism=(0,) + tuple(code[auto[g]] for g in gens),
        sub_alphabet=tuple(code[g] for g in gens if g.q <= n - 1),
        name=f"BKL{n}",
    )


def simple_elements(n: int) -> list[BraidWord]:
    """Witness words for the left divisors of δ_n, by length."""
    return _simple_elements(n, _layers(n))


def ff_apply(w: BraidWord, n: int, k: int = 1) -> BraidWord:
    return dual_context(n).twist(w, k)


def dual_splitting(w: BraidWord, n: int) -> Splitting:
    if n < 3:
        raise WordError(f"splitting needs n >= 3, got {n}")
    return splitting(w, dual_context(n))


def dual_sigma_definite(w: BraidWord, reduce: bool = False) -> BraidWord:
    """Dual-σ-definite band word equivalent to `w`, of length at most (2n-3)·‖w‖_a."""
    if w.family != BAND:
        raise WordError("dual_sigma_definite expects a band word")
    from .sigmadef import sigma_definite

    return sigma_definite(w, reduce)


def dual_table(n: int) -> dict:
    ctx = dual_context(n)

    def render(table):
        return {
            f"{ctx.alphabet[x - 1]},{ctx.alphabet[y - 1]}": str(ctx.decode(v))
            for (x, y), v in sorted(table.items())
        }

    return {
        "strands": n,
        "generators": [str(g) for g in ctx.alphabet],
        "delta": str(ctx.garside()),
        "automorphism": {str(g): str(ctx.alphabet[ctx.automorphism[c] - 1]) for c, g in enumerate(ctx.alphabet, 1)},
        "left_selector": render(ctx.left_selector),
        "right_selector": render(ctx.right_selector),
    }
