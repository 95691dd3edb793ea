import random

import pytest
from helpers import random_word, scramble

from sigmabraid import oracle
from sigmabraid.classical import artin_context, delta
from sigmabraid.fractions import garside_fraction, garside_thurston, gt_gcd_is_trivial, index_and_reduce
from sigmabraid.reversing import divides_left
from sigmabraid.words import ARTIN, artin_word, invert_word, parse_word, word_index


def W(text, n=3):
    return parse_word(text, n)


@pytest.mark.parametrize(
    "word, t, numerator",
    [
        ("1 2", 0, "1 2"),
        ("-1", 1, "1 2"),
        ("-1 -2 -1 1 2 1", 0, ""),
    ],
)
def test_fraction_examples(word, t, numerator):
    f = garside_fraction(W(word))
    assert f.t == t
    assert oracle.equivalent(f.numerator, W(numerator))


def test_fraction_is_equivalent_and_reduced():
    rng = random.Random(71)
    for _ in range(200):
        n = rng.randint(3, 5)
        ctx = artin_context(n)
        w = random_word(rng, n, rng.randint(0, 20))
        f = garside_fraction(w, ctx)
        assert oracle.equivalent(f.word(ctx), w)
        assert all(x.sign > 0 for x in f.numerator.letters)
        if f.t > 0:
            assert divides_left(delta(n), f.numerator, ctx) is None


def test_fraction_length_bound():
    """t is at most the number of negative letters, |v| at most |w| + t·(|Δ| - 1)."""
    rng = random.Random(72)
    for _ in range(200):
        n = rng.randint(3, 5)
        w = random_word(rng, n, rng.randint(0, 20))
        f = garside_fraction(w)
        negatives = sum(1 for x in w.letters if x.sign < 0)
        assert f.t <= negatives
        assert len(f.numerator) <= len(w) - negatives + negatives * (len(delta(n)) - 1)


def test_fraction_unique_under_relations():
    rng = random.Random(73)
    for _ in range(60):
        n = rng.randint(3, 5)
        w = random_word(rng, n, rng.randint(0, 12))
        f1, f2 = garside_fraction(w), garside_fraction(scramble(rng, w, 25))
        assert f1.t == f2.t
        assert oracle.equivalent(f1.numerator, f2.numerator)


@pytest.mark.parametrize(
    "word, neg, pos",
    [
        ("2", "", "2"),
        ("-2", "2", ""),
        ("2 1 -1", "", "2"),
    ],
)
def test_garside_thurston_examples(word, neg, pos):
    g = garside_thurston(W(word))
    assert oracle.equivalent(g.neg, W(neg))
    assert oracle.equivalent(g.pos, W(pos))


def test_garside_thurston_properties():
    rng = random.Random(74)
    for _ in range(200):
        n = rng.randint(3, 5)
        ctx = artin_context(n)
        w = random_word(rng, n, rng.randint(0, 20))
        g = garside_thurston(w, ctx)
        assert oracle.equivalent(g.word(), w)
        assert gt_gcd_is_trivial(g, ctx)
        other = garside_thurston(scramble(rng, w, 15), ctx)
        assert oracle.equivalent(g.neg, other.neg) and oracle.equivalent(g.pos, other.pos)


@pytest.mark.parametrize(
    "word, n, k",
    [
        ("3 1 -3", 4, 2),
        ("2", 3, 3),
        ("", 3, 2),
        ("1 2 -2", 5, 2),
        ("4 -4 1 -1", 5, 2),
    ],
)
def test_index_examples(word, n, k):
    index, reduced = index_and_reduce(W(word, n))
    assert index == k
    assert word_index(reduced) <= k
    assert oracle.equivalent(reduced, W(word, n))


def test_index_matches_minimal_index_in_bfs_ball():
    """k is the least i such that the braid lies in the radius-4 ball of B_i embedded in B_4."""
    embedded = {
        i: {oracle.fingerprint(geo.with_strands(4)) for _, geo in oracle.cayley_ball(i, ARTIN, 4).values()}
        for i in (2, 3, 4)
    }
    for fp, (_, geo) in oracle.cayley_ball(4, ARTIN, 4).items():
        minimal = min(i for i in (2, 3, 4) if fp in embedded[i])
        k, reduced = index_and_reduce(geo)
        assert k == minimal, geo
        assert oracle.equivalent(reduced, geo)


def test_delta_fraction():
    f = garside_fraction(invert_word(delta(4)))
    assert f.t == 1 and f.numerator.letters == ()
    assert garside_fraction(artin_word(4, [])).t == 0
