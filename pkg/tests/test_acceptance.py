"""
Acceptance criteria 1-10. Each test prints one "[PASS]/[FAIL] criterion N" line
(also collected into the terminal summary) and then asserts.
"""

from __future__ import annotations

import itertools
import random
import statistics
import time

from helpers import random_word, report, scramble

from sigmabraid import oracle
from sigmabraid.classical import artin_context, delta, phi_breadth, splitting
from sigmabraid.dual import dual_sigma_definite
from sigmabraid.fractions import garside_fraction, garside_thurston, gt_gcd_is_trivial, index_and_reduce
from sigmabraid.reversing import divides_left, left_gcd, reverse_by_rewriting, right_reverse
from sigmabraid.sigmadef import Order, classify_sigma, dehornoy_compare, sigma_definite
from sigmabraid.words import ARTIN, BAND, BraidWord, artin_word, invert_word


def test_criterion_1_sigma_definite_soundness():
    rng = random.Random(20240601)
    start = time.perf_counter()
    failures = []
    total = 0
    for n in (3, 4, 5, 6):
        for _ in range(1000):
            w = random_word(rng, n, rng.randint(0, 40))
            out = sigma_definite(w)
            total += 1
            if classify_sigma(out) is None or not oracle.equivalent(w, out):
                failures.append(w)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    report(1, ok, f"{total - len(failures)}/{total} sound σ-definite outputs in {elapsed:.1f}s (limit 120s)")
    assert not failures, failures[:5]
    assert elapsed < 120


def test_criterion_2_quasi_geodesic_bound_b3():
    violations = []
    worst = 0.0
    ball = oracle.cayley_ball(3, ARTIN, 6)
    for dist, geo in ball.values():
        out = sigma_definite(geo)
        if dist:
            worst = max(worst, len(out) / dist)
        if len(out) > 5 * dist:
            violations.append((geo, out))
    report(2, not violations, f"{len(ball)} braids of B3 within radius 6, {len(violations)} violations, worst ratio {worst:.2f} (bound 5)")
    assert not violations, violations[:5]


def test_criterion_3_dual_bound_bkl3():
    violations = []
    worst = 0.0
    ball = oracle.cayley_ball(3, BAND, 5)
    for dist, geo in ball.values():
        out = dual_sigma_definite(geo)
        if dist:
            worst = max(worst, len(out) / dist)
        if len(out) > 3 * dist:
            violations.append((geo, out))
    report(3, not violations, f"{len(ball)} braids of BKL3 within radius 5, {len(violations)} violations, worst ratio {worst:.2f} (bound 3)")
    assert not violations, violations[:5]


# Exhaustive up to these lengths, random samples up to length 12 beyond them.
EXHAUSTIVE_REVERSING_LENGTH = {3: 7, 4: 5}


def _reversing_words(rng, n):
    for length in range(EXHAUSTIVE_REVERSING_LENGTH[n] + 1):
        yield from oracle.all_words(n, ARTIN, length)
    for length in range(EXHAUSTIVE_REVERSING_LENGTH[n] + 1, 13):
        for _ in range(300):
            yield random_word(rng, n, length)


def test_criterion_4_reversing_uniqueness_and_soundness():
    rng = random.Random(4)
    mismatches = []
    checked = 0
    for n in (3, 4):
        ctx = artin_context(n)
        for w in _reversing_words(rng, n):
            checked += 1
            grid = right_reverse(w, ctx)
            for side in ("right", "left"):
                first = reverse_by_rewriting(w, ctx, side, "leftmost")
                second = reverse_by_rewriting(w, ctx, side, "rightmost")
                if first != second or (side == "right" and first != grid):
                    mismatches.append((w, side))
    unsound = []
    for i in range(1000):
        n = 3 + i % 4
        w = random_word(rng, n, rng.randint(0, 30))
        num, den = right_reverse(w, artin_context(n))
        if not oracle.equivalent(num * invert_word(den), w):
            unsound.append(w)
    ok = not mismatches and not unsound
    report(4, ok, f"strategies agree on {checked - len(mismatches)}/{checked} words; {1000 - len(unsound)}/1000 sound N·D^-1")
    assert not mismatches, mismatches[:5]
    assert not unsound, unsound[:5]


def test_criterion_5_gcd_matches_brute_force():
    disagreements = []
    pairs = 0
    for n, max_len in ((3, 5), (4, 4)):
        ctx = artin_context(n)
        words = [w for length in range(max_len + 1) for w in oracle.positive_words(n, ARTIN, length)]
        for u in words:
            for v in words:
                pairs += 1
                if not oracle.equivalent(left_gcd(u, v, ctx), oracle.brute_gcd(u, v)):
                    disagreements.append((u, v))
    report(5, not disagreements, f"{pairs - len(disagreements)}/{pairs} gcd pairs agree with brute force")
    assert not disagreements, disagreements[:5]


def test_criterion_6_splitting():
    ctx = artin_context(3)
    bad = []
    count = 0
    for length in range(7):
        for w in oracle.positive_words(3, ARTIN, length):
            if not w.letters:
                continue
            count += 1
            s = splitting(w, ctx)
            brute = oracle.brute_splitting(w)
            same = len(brute) == s.breadth and all(oracle.equivalent(a, b) for a, b in zip(s.entries, brute))
            if not oracle.equivalent(s.product(ctx), w) or not same:
                bad.append(w)
    breadths = {(n, d): phi_breadth(_delta_power(n, d), n) for n in (3, 4) for d in (1, 2, 3)}
    wrong_breadth = {k: v for k, v in breadths.items() if v != k[1] + 2}
    ok = not bad and not wrong_breadth
    report(6, ok, f"{count - len(bad)}/{count} positive B3 words split correctly; Δ^d breadths {sorted(breadths.values())}")
    assert not bad, bad[:5]
    assert not wrong_breadth, wrong_breadth


def _delta_power(n: int, d: int) -> BraidWord:
    base = delta(n)
    return base.with_letters(base.letters * d)


def test_criterion_7_fraction_uniqueness():
    rng = random.Random(7)
    bad = []
    for i in range(200):
        n = 3 + i % 2
        ctx = artin_context(n)
        w = random_word(rng, n, rng.randint(4, 16))
        w2 = scramble(rng, w, 30)
        f1, f2 = garside_fraction(w, ctx), garside_fraction(w2, ctx)
        same = f1.t == f2.t and oracle.equivalent(f1.numerator, f2.numerator)
        reduced = all(f.t == 0 or divides_left(delta(n), f.numerator, ctx) is None for f in (f1, f2))
        if not (same and reduced):
            bad.append((w, w2))
    report(7, not bad, f"{200 - len(bad)}/200 equivalent pairs give the same fraction with Δ not dividing the numerator")
    assert not bad, bad[:5]


def _commuting_conjugate(rng) -> BraidWord:
    m = rng.choice([k for k in range(-5, 6) if k])
    g = [1 if m > 0 else -1] * abs(m)
    u = [rng.choice((1, -1, 3, -3)) for _ in range(rng.randint(1, 10))]
    return artin_word(4, u + g + [-x for x in reversed(u)])


def test_criterion_8_garside_thurston_and_index():
    rng = random.Random(8)
    gcd_bad = []
    index_bad = []
    for i in range(200):
        n = 3 + i % 3
        ctx = artin_context(n)
        w = random_word(rng, n, rng.randint(0, 25))
        if not gt_gcd_is_trivial(garside_thurston(w, ctx), ctx):
            gcd_bad.append(w)
        c = _commuting_conjugate(rng)
        if not gt_gcd_is_trivial(garside_thurston(c), artin_context(4)):
            gcd_bad.append(c)
        k, reduced = index_and_reduce(c)
        if k != 2 or not oracle.equivalent(reduced, c):
            index_bad.append((c, k))
    ok = not gcd_bad and not index_bad
    report(8, ok, f"{400 - len(gcd_bad)}/400 trivial gcds; {200 - len(index_bad)}/200 conjugates have index 2")
    assert not gcd_bad, gcd_bad[:5]
    assert not index_bad, index_bad[:5]


FLIP = {Order.LESS: Order.GREATER, Order.GREATER: Order.LESS, Order.EQUAL: Order.EQUAL}


def test_criterion_9_order_properties():
    rng = random.Random(9)
    problems = []
    for _ in range(500):
        n = rng.choice((3, 4))
        a = random_word(rng, n, rng.randint(0, 8))
        b = scramble(rng, a, 6) if rng.random() < 0.2 else random_word(rng, n, rng.randint(0, 8))
        c = random_word(rng, n, rng.randint(0, 8))
        triple = (a, b, c)
        cmp = {(i, j): dehornoy_compare(triple[i], triple[j]) for i in range(3) for j in range(3)}
        for (i, j), o in cmp.items():
            if FLIP[o] != cmp[j, i]:
                problems.append(("antisymmetry", triple))
            if (o == Order.EQUAL) != oracle.equivalent(triple[i], triple[j]):
                problems.append(("equality", triple))
        for i, j, k in itertools.permutations(range(3)):
            if cmp[i, j] == cmp[j, k] == Order.LESS and cmp[i, k] != Order.LESS:
                problems.append(("transitivity", triple))
        p = random_word(rng, n, rng.randint(1, 4), positive=True)
        if dehornoy_compare(p * a, p * b) != cmp[0, 1]:
            problems.append(("left invariance", triple))
    report(9, not problems, f"{500 - len({id(t) for _, t in problems})}/500 triples satisfy the order axioms")
    assert not problems, problems[:5]


def _median_time(rng, n, length, samples=5):
    times = []
    for _ in range(samples):
        w = random_word(rng, n, length)
        start = time.perf_counter()
        sigma_definite(w)
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def test_criterion_10_complexity_smoke():
    rng = random.Random(10)
    _median_time(rng, 4, 50, samples=2)  # warm caches
    times = [_median_time(rng, 4, length) for length in (200, 400, 800)]
    ratios = [times[i + 1] / max(times[i], 1e-9) for i in range(2)]
    worst = max(ratios)
    detail = f"times {', '.join(f'{t:.3f}s' for t in times)}; doubling ratios {', '.join(f'{r:.2f}' for r in ratios)} (target 6, hard limit 10)"
    if 6 < worst <= 10:
        detail += " [above soft target]"
    report(10, worst <= 10, detail)
    assert worst <= 10
