"""
Generator alphabets and signed braid words.

Two generator families are supported:

- Artin generators σ_i (1 ≤ i), valid on n strands when i ≤ n-1;
- band generators a_{p,q} (1 ≤ p < q), valid on n strands when q ≤ n.

A BraidWord is an immutable value: a strand count, a family tag and a tuple of
signed letters. Text form is whitespace separated tokens, "2" / "-2" for σ_2^±1
and "1:3" / "-1:3" for a_{1,3}^±1.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Iterable, NamedTuple, Union

ARTIN = "artin"
BAND = "band"
FAMILIES = (ARTIN, BAND)


class WordError(ValueError):
    """Raised for malformed tokens, out-of-range generators or mixed families."""


class Artin(NamedTuple):
    i: int

    def __str__(self) -> str:
        return str(self.i)


class Band(NamedTuple):
    p: int
    q: int

    def __str__(self) -> str:
        return f"{self.p}:{self.q}"


Generator = Union[Artin, Band]


def family_of(gen: Generator) -> str:
    return ARTIN if isinstance(gen, Artin) else BAND


def generator_valid(gen: Generator, strands: int) -> bool:
    if isinstance(gen, Artin):
        return 1 <= gen.i <= strands - 1
    return 1 <= gen.p < gen.q <= strands


def generators(strands: int, family: str) -> tuple[Generator, ...]:
    """All generators of the given family on `strands` strands, in canonical order.

    Band generators are ordered by (q, p), so that the generators of the
    (n-1)-strand alphabet form a prefix of the n-strand alphabet.
    """
    if family == ARTIN:
        return tuple(Artin(i) for i in range(1, strands))
    return tuple(Band(p, q) for q in range(2, strands + 1) for p in range(1, q))


class Letter(NamedTuple):
    gen: Generator
    sign: int

    def inverse(self) -> Letter:
        return Letter(self.gen, -self.sign)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "") + str(self.gen)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    family: str
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise WordError(f"strand count must be at least 2, got {self.strands}")
        if self.family not in FAMILIES:
            raise WordError(f"unknown family {self.family!r}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for letter in letters:
            if letter.sign not in (1, -1):
                raise WordError(f"bad sign in {letter!r}")
            if family_of(letter.gen) != self.family:
                raise WordError(f"letter {letter} does not belong to the {self.family} family")
            if not generator_valid(letter.gen, self.strands):
                raise WordError(f"generator {letter.gen} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return print_word(self)

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {self.family}, {print_word(self)!r})"

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.family != self.family:
            raise WordError("cannot multiply words of different families")
        return BraidWord(max(self.strands, other.strands), self.family, self.letters + other.letters)

    def with_strands(self, strands: int) -> BraidWord:
        return BraidWord(strands, self.family, self.letters)

    def with_letters(self, letters: Iterable[Letter]) -> BraidWord:
        return BraidWord(self.strands, self.family, tuple(letters))


def artin_word(strands: int, tokens: Iterable[int]) -> BraidWord:
    """Build an Artin word from signed integers, e.g. artin_word(3, [1, -2])."""
    return BraidWord(strands, ARTIN, tuple(Letter(Artin(abs(t)), 1 if t > 0 else -1) for t in tokens))


def band_word(strands: int, tokens: Iterable[tuple[int, int, int]] | Iterable[tuple[int, int]]) -> BraidWord:
    """Build a band word from (p, q) or (p, q, sign) tuples."""
    letters = []
    for tok in tokens:
        p, q, *rest = tok
        letters.append(Letter(Band(p, q), rest[0] if rest else 1))
    return BraidWord(strands, BAND, tuple(letters))


def empty_word(strands: int, family: str = ARTIN) -> BraidWord:
    return BraidWord(strands, family, ())


def _parse_token(tok: str, family: str) -> Letter:
    sign = 1
    body = tok
    if body.startswith("-"):
        sign, body = -1, body[1:]
    elif body.startswith("+"):
        body = body[1:]
    if family == ARTIN:
        if ":" in body:
            raise WordError(f"band token {tok!r} in an artin word")
        if not body.isdigit():
            raise WordError(f"malformed token {tok!r}")
        i = int(body)
        if i < 1:
            raise WordError(f"malformed token {tok!r}")
        return Letter(Artin(i), sign)
    parts = body.split(":")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        if body.isdigit():
            raise WordError(f"artin token {tok!r} in a band word")
        raise WordError(f"malformed token {tok!r}")
    p, q = int(parts[0]), int(parts[1])
    if not 1 <= p < q:
        raise WordError(f"malformed band token {tok!r}: need 1 <= p < q")
    return Letter(Band(p, q), sign)


def parse_word(text: str, strands: int, family: str = ARTIN) -> BraidWord:
    if family not in FAMILIES:
        raise WordError(f"unknown family {family!r}")
    return BraidWord(strands, family, tuple(_parse_token(tok, family) for tok in text.split()))


def print_word(w: BraidWord) -> str:
    return " ".join(str(letter) for letter in w.letters)


def word_to_json(w: BraidWord) -> dict:
    return {"strands": w.strands, "family": w.family, "letters": [str(x) for x in w.letters]}


def word_from_json(obj: dict | str) -> BraidWord:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        strands, family, letters = obj["strands"], obj["family"], obj["letters"]
    except (KeyError, TypeError) as exc:
        raise WordError(f"malformed word object: {obj!r}") from exc
    if family not in FAMILIES:
        raise WordError(f"unknown family {family!r}")
    return BraidWord(strands, family, tuple(_parse_token(tok, family) for tok in letters))


def invert_word(w: BraidWord) -> BraidWord:
    return w.with_letters(x.inverse() for x in reversed(w.letters))


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[Letter] = []
    for x in w.letters:
        if out and out[-1].gen == x.gen and out[-1].sign == -x.sign:
            out.pop()
        else:
            out.append(x)
    return w.with_letters(out)


def word_index(w: BraidWord) -> int:
    """Strand count of the smallest braid group syntactically containing `w`.

    A word whose highest Artin letter is σ_{i-1} has index i; a band word has the
    largest q occurring. The empty word has index 2.
    """
    if not w.letters:
        return 2
    if w.family == ARTIN:
        return 1 + max(x.gen.i for x in w.letters)
    return max(x.gen.q for x in w.letters)


def is_positive(w: BraidWord) -> bool:
    return all(x.sign > 0 for x in w.letters)


def letter_level(gen: Generator) -> int:
    """Artin-equivalent level: σ_i has level i, a_{p,q} has level q-1."""
    return gen.i if isinstance(gen, Artin) else gen.q - 1
